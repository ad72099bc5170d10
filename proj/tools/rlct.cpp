// Command line front end: construct Cartan-type algebras, run verification
// suites, emit machine-readable reports.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "rlct/embeddings.hpp"
#include "rlct/invariants.hpp"
#include "rlct/json_io.hpp"
#include "rlct/suites.hpp"

using namespace rlct;
using nlohmann::json;

namespace {

void emit(const json& j, const std::string& out) {
    if (out.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream f(out);
        f << j.dump(2) << "\n";
    }
}

int cmd_construct(const std::string& family, int n, fp_t p, bool force,
                  const std::string& center, const std::string& out) {
    auto fam = family_from_name(family);
    if (!fam) throw UsageError("unknown family: " + family);
    if (*fam == Family::P) {
        if (n % 2 != 0) throw ParityError("the Poisson algebra needs n = 2r");
        if (!family_in_envelope(Family::P, n, p) && !force)
            throw EnvelopeError("P(" + std::to_string(n) + ") outside the envelope");
        PoissonAlgebra P(n / 2, p,
                         center == "unipotent" ? PoissonAlgebra::Center::Unipotent
                                               : PoissonAlgebra::Center::Toral);
        json basis = json::array();
        for (std::size_t rk = 0; rk < P.dim(); ++rk) {
            TruncPoly m(P.ring());
            m.set_coeff(rk, 1);
            json e = to_json(m);
            e["structure"] = "poisson";
            e["r"] = n / 2;
            e["center"] = center;
            basis.push_back(std::move(e));
        }
        emit(json{{"family", "P"}, {"p", p}, {"n", n}, {"dim", P.dim()},
                  {"basis", std::move(basis)}},
             out);
        return 0;
    }
    FamilyBuild fb = build_family(*fam, n, p, force);
    const Ring& R = ring(n, p);
    std::vector<Derivation> basis;
    for (std::size_t i = 0; i < fb.basis.dim(); ++i)
        basis.push_back(Derivation::from_vec(R, fb.basis.basis_vector(i)));
    json j = family_json(family_name(*fam), n, p, basis);
    j["mu"] = fb.mu;
    j["standard_graded"] = fb.standard_graded;
    if (fb.small_p_caveat) j["small_p_caveat"] = true;
    emit(j, out);
    return 0;
}

int cmd_verify(SuiteConfig cfg, const std::string& out, bool list) {
    if (list) {
        json t = json::array();
        for (const auto& [id, ref] : check_reference_table())
            t.push_back(json{{"id", id}, {"paper_ref", ref}});
        emit(t, out);
        return 0;
    }
    SuiteResult res = run_suite(cfg);
    emit(report_json(cfg, res), out);
    return res.failed > 0 ? 1 : 0;
}

int cmd_weights(const std::string& family, int n, fp_t p, const std::string& module,
                bool force, const std::string& out) {
    auto fam = family_from_name(family);
    if (!fam) throw UsageError("unknown family: " + family);
    json torus = json::array();
    std::vector<FpMat> acts;

    if (*fam == Family::K) {
        ContactAlgebra C((n - 1) / 2, p);
        LieOps ops = C.ops();
        for (const auto& t : C.standard_torus()) {
            torus.push_back(to_json(t));
            acts.push_back(ad_action_matrix(C.k_carrier(), ops, t.coeffs()));
        }
    } else {
        const Ring& R = ring(n, p);
        LieOps ops = witt_ops(R);
        std::vector<Derivation> gens;
        SubalgebraBasis algebra;
        switch (*fam) {
        case Family::W:
            gens = standard_torus_w(R);
            algebra = SubalgebraBasis::full("W", witt_dim(R), p);
            break;
        case Family::S:
            gens = standard_torus_s(R);
            algebra = build_family(Family::S, n, p, force).basis;
            break;
        case Family::H:
            gens = standard_torus_h(R);
            algebra = build_family(Family::H, n, p, force).basis;
            break;
        default:
            throw UsageError("weights supports W, S, H, K");
        }
        for (const auto& t : gens) {
            torus.push_back(to_json(t));
            if (module == "A_n")
                acts.push_back(module_action_matrix(t));
            else
                acts.push_back(ad_action_matrix(algebra, ops, t.to_vec()));
        }
    }
    WeightDecomposition wd = weight_decomposition(acts, p);
    json ws = json::array();
    for (const auto& s : wd.spaces)
        ws.push_back(json{{"lambda", s.lambda}, {"dim", s.basis.rows()}});
    emit(json{{"family", family}, {"p", p}, {"n", n}, {"module", module},
              {"torus", std::move(torus)}, {"weights", std::move(ws)}},
         out);
    return 0;
}

int cmd_dickson(int m, fp_t p, const std::string& out) {
    auto coeffs = dickson_coefficients(m, p);
    json arr = json::array();
    std::size_t q = 1;
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
        bool keep = d == q || d + 1 == coeffs.size();
        if (d == q) q *= p;
        if (!keep) continue;
        json terms = json::array();
        for (const auto& [e, c] : coeffs[d].terms())
            terms.push_back(json{{"exp", e}, {"coeff", c}});
        arr.push_back(json{{"T_degree", d}, {"terms", std::move(terms)}});
    }
    emit(json{{"m", m}, {"p", p}, {"coefficients", std::move(arr)}}, out);
    return 0;
}

int cmd_weyl(int n, fp_t p, bool exhaustive, std::uint64_t seed, const std::string& out) {
    const Ring& R = ring(n, p);
    std::vector<FpMat> gl = enumerate_gl(n, p);
    std::vector<FpMat> chosen;
    if (exhaustive) {
        chosen = gl;
    } else {
        SplitRng rng(seed);
        for (int s = 0; s < 8; ++s) chosen.push_back(gl[rng.below(gl.size())]);
    }
    json elems = json::array();
    for (const auto& A : chosen) {
        WeylElement w = weyl_substitution(R, A);
        json ja = json::array(), ji = json::array();
        for (std::size_t i = 0; i < A.rows(); ++i) {
            json ra = json::array(), ri = json::array();
            for (std::size_t j = 0; j < A.cols(); ++j) {
                ra.push_back(A.at(i, j));
                ri.push_back(w.induced.at(i, j));
            }
            ja.push_back(std::move(ra));
            ji.push_back(std::move(ri));
        }
        elems.push_back(json{{"A", std::move(ja)}, {"induced", std::move(ji)}});
    }
    emit(json{{"n", n}, {"p", p}, {"group_order", gl.size()},
              {"exhaustive", exhaustive}, {"elements", std::move(elems)}},
         out);
    return 0;
}

int cmd_invariants(const std::string& family, int n, fp_t p, std::uint64_t seed,
                   int samples, const std::string& out) {
    auto fam = family_from_name(family);
    if (!fam) throw UsageError("unknown family: " + family);
    RestrictionReport rep = restriction_identity_check(*fam, n, p, seed, samples);
    json checks = json::array();
    auto push = [&](const std::string& id, bool ok, const std::string& detail) {
        checks.push_back(json{{"id", id}, {"paper_ref", check_reference(id)},
                              {"status", ok ? "pass" : "fail"}, {"detail", detail}});
    };
    push("inv.toral_points", rep.toral_points_ok,
         "Frobenius exponent " + std::to_string(rep.exponent));
    push("inv.p_polynomiality", rep.p_polynomiality_ok, rep.detail);
    if (*fam != Family::H)
        push("inv.q_match", rep.q_match_ok,
             "exponent " + std::to_string(rep.q_exponent));
    int failed = 0;
    for (const auto& c : checks)
        if (c.at("status") == "fail") ++failed;
    emit(json{{"tool", "rlct"},
              {"params", json{{"family", family}, {"n", n}, {"p", p}, {"seed", seed},
                              {"samples", samples}}},
              {"checks", std::move(checks)},
              {"summary", json{{"pass", static_cast<int>(3 - failed)}, {"fail", failed},
                               {"skip", 0}}}},
         out);
    return failed ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification toolkit for restricted Lie algebras of Cartan type"};
    app.require_subcommand(1);

    std::string family = "W", out, suite = "all", module = "adjoint", center = "toral";
    int n = 2, r = -1, m = 1, samples = 100;
    fp_t p = 3;
    std::uint64_t seed = 20240101;
    bool force = false, exhaustive = false, list = false;

    auto* c_construct = app.add_subcommand("construct", "build a family and emit its basis");
    c_construct->add_option("--family", family)->required();
    c_construct->add_option("--n", n)->required();
    c_construct->add_option("--p", p)->required();
    c_construct->add_option("--out", out);
    c_construct->add_option("--center", center)->check(CLI::IsMember({"toral", "unipotent"}));
    c_construct->add_flag("--force", force);

    auto* c_verify = app.add_subcommand("verify", "run a named verification suite");
    c_verify->add_option("--suite", suite);
    c_verify->add_option("--p", p);
    c_verify->add_option("--n", n);
    c_verify->add_option("--r", r);
    c_verify->add_option("--seed", seed);
    c_verify->add_option("--samples", samples);
    c_verify->add_option("--out", out);
    c_verify->add_option("--center", center)->check(CLI::IsMember({"toral", "unipotent"}));
    c_verify->add_flag("--force", force);
    c_verify->add_flag("--exhaustive", exhaustive);
    c_verify->add_flag("--list", list);

    auto* c_weights = app.add_subcommand("weights", "weight space decomposition report");
    c_weights->add_option("--family", family)->required();
    c_weights->add_option("--n", n)->required();
    c_weights->add_option("--p", p)->required();
    c_weights->add_option("--module", module)->check(CLI::IsMember({"adjoint", "A_n"}));
    c_weights->add_option("--out", out);
    c_weights->add_flag("--force", force);

    auto* c_dickson = app.add_subcommand("dickson", "symbolic invariant coefficients");
    c_dickson->add_option("--m", m)->required();
    c_dickson->add_option("--p", p)->required();
    c_dickson->add_option("--out", out);

    auto* c_weyl = app.add_subcommand("weyl", "substitution realization of the torus normalizer");
    c_weyl->add_option("--n", n)->required();
    c_weyl->add_option("--p", p)->required();
    c_weyl->add_option("--seed", seed);
    c_weyl->add_flag("--exhaustive", exhaustive);
    c_weyl->add_option("--out", out);

    auto* c_inv = app.add_subcommand("invariants", "pointwise restriction identity report");
    c_inv->add_option("--family", family)->required();
    c_inv->add_option("--n", n)->required();
    c_inv->add_option("--p", p)->required();
    c_inv->add_option("--seed", seed);
    c_inv->add_option("--samples", samples);
    c_inv->add_option("--out", out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (c_construct->parsed()) return cmd_construct(family, n, p, force, center, out);
        if (c_verify->parsed()) {
            SuiteConfig cfg;
            cfg.suite = suite;
            cfg.p = p;
            cfg.n = c_verify->count("--n") ? n : -1;
            cfg.r = r;
            cfg.seed = seed;
            cfg.samples = samples;
            cfg.force = force;
            cfg.exhaustive = exhaustive;
            cfg.center = center;
            return cmd_verify(cfg, out, list);
        }
        if (c_weights->parsed()) return cmd_weights(family, n, p, module, force, out);
        if (c_dickson->parsed()) return cmd_dickson(m, p, out);
        if (c_weyl->parsed()) return cmd_weyl(n, p, exhaustive, seed, out);
        if (c_inv->parsed()) return cmd_invariants(family, n, p, seed, samples, out);
    } catch (const UsageError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const EnvelopeError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const ParityError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 2;
}
