#include "rlct/json_io.hpp"

namespace rlct {

json to_json(const TruncPoly& f) {
    const Ring& R = f.ring();
    json terms = json::array();
    for (auto [rank, c] : f.terms()) {
        json t;
        t["exp"] = R.exponents(rank);
        t["coeff"] = c;
        terms.push_back(std::move(t));
    }
    return json{{"p", R.p()}, {"n", R.n()}, {"terms", std::move(terms)}};
}

TruncPoly truncpoly_from_json(const json& j) {
    const Ring& R = ring(j.at("n").get<int>(), j.at("p").get<fp_t>());
    TruncPoly f(R);
    for (const auto& t : j.at("terms")) {
        std::vector<int> e = t.at("exp").get<std::vector<int>>();
        f.set_coeff(R.rank_of(e), t.at("coeff").get<fp_t>());
    }
    return f;
}

json to_json(const Derivation& D) {
    const Ring& R = D.ring();
    json coeffs = json::array();
    for (int j = 1; j <= R.n(); ++j) coeffs.push_back(to_json(D.coeff(j)));
    return json{{"p", R.p()}, {"n", R.n()}, {"coeffs", std::move(coeffs)}};
}

Derivation derivation_from_json(const json& j) {
    const Ring& R = ring(j.at("n").get<int>(), j.at("p").get<fp_t>());
    std::vector<TruncPoly> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(truncpoly_from_json(c));
    return Derivation(R, std::move(coeffs));
}

json to_json(const DiffForm& w) {
    json comps = json::array();
    for (const auto& [s, u] : w.components()) {
        if (u.is_zero()) continue;
        comps.push_back(json{{"subset", s}, {"poly", to_json(u)}});
    }
    return json{{"degree", w.degree()}, {"components", std::move(comps)}};
}

DiffForm diff_form_from_json(const json& j) {
    int degree = j.at("degree").get<int>();
    const json& comps = j.at("components");
    if (comps.empty()) throw UsageError("cannot infer the ring of an empty form");
    TruncPoly first = truncpoly_from_json(comps.front().at("poly"));
    DiffForm w(first.ring(), degree);
    for (const auto& c : comps)
        w.add_component(c.at("subset").get<std::vector<int>>(),
                        truncpoly_from_json(c.at("poly")));
    return w;
}

json to_json(const RestrictedAlgebra& A) {
    json sc = json::array();
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = i + 1; j < A.dim(); ++j) {
            const FpVec& v = A.basis_bracket(i, j);
            for (std::size_t k = 0; k < A.dim(); ++k)
                if (v[k]) sc.push_back(json::array({i, j, k, v[k]}));
        }
    json pmap = json::array();
    for (std::size_t i = 0; i < A.dim(); ++i)
        pmap.push_back(json::array({i, A.basis_p_power(i)}));
    return json{{"dim", A.dim()},
                {"labels", A.labels()},
                {"sc", std::move(sc)},
                {"pmap", std::move(pmap)}};
}

json family_json(const std::string& family, int n, fp_t p,
                 const std::vector<Derivation>& basis) {
    json b = json::array();
    for (const auto& D : basis) b.push_back(to_json(D));
    return json{{"family", family}, {"p", p}, {"n", n}, {"dim", basis.size()},
                {"basis", std::move(b)}};
}

} // namespace rlct
