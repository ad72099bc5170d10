#include "rlct/invariants.hpp"

namespace rlct {

FpMat ModuleAction::matrix_of(const FpVec& x) const {
    if (x.size() != rho.size()) throw ArityMismatch("coordinate length vs action basis");
    const PrimeField F(p);
    FpMat M(carrier_dim, carrier_dim, p);
    for (std::size_t b = 0; b < rho.size(); ++b) {
        if (!x[b]) continue;
        for (std::size_t i = 0; i < carrier_dim; ++i)
            for (std::size_t j = 0; j < carrier_dim; ++j)
                M.at(i, j) = F.add(M.at(i, j), F.mul(x[b], rho[b].at(i, j)));
    }
    return M;
}

ModuleAction natural_action(const Ring& R) {
    ModuleAction M;
    M.p = R.p();
    M.carrier_dim = R.dim();
    M.rho.resize(witt_dim(R));
    for (int j = 0; j < R.n(); ++j)
        for (std::size_t rk = 0; rk < R.dim(); ++rk)
            M.rho[witt_index(R, j, rk)] = module_action_matrix(Derivation::basis(R, rk, j + 1));
    return M;
}

bool action_is_restricted(const ModuleAction& M, const LieOps& ops, std::string* why) {
    const std::size_t d = M.rho.size();
    auto unit = [&](std::size_t i) {
        FpVec u(d, 0);
        u[i] = 1;
        return u;
    };
    const PrimeField F(M.p);
    (void)F;
    for (std::size_t i = 0; i < d; ++i) {
        FpMat pw = FpMat::identity(M.carrier_dim, M.p);
        for (fp_t k = 0; k < M.p; ++k) pw = mat_mul(pw, M.rho[i]);
        if (!(pw == M.matrix_of(ops.p_power(unit(i))))) {
            if (why) *why = "rho(x^[p]) != rho(x)^p on basis " + std::to_string(i);
            return false;
        }
        for (std::size_t j = i + 1; j < d; ++j) {
            FpMat lhs = M.matrix_of(ops.bracket(unit(i), unit(j)));
            const PrimeField Fp(M.p);
            FpMat comm = mat_mul(M.rho[i], M.rho[j]);
            FpMat ji = mat_mul(M.rho[j], M.rho[i]);
            for (std::size_t a = 0; a < M.carrier_dim; ++a)
                for (std::size_t b = 0; b < M.carrier_dim; ++b)
                    comm.at(a, b) = Fp.sub(comm.at(a, b), ji.at(a, b));
            if (!(lhs == comm)) {
                if (why)
                    *why = "rho([x,y]) mismatch on basis pair (" + std::to_string(i) + "," +
                           std::to_string(j) + ")";
                return false;
            }
        }
    }
    return true;
}

FpVec action_char_poly(const ModuleAction& M, const FpVec& x) {
    return charpoly(M.matrix_of(x));
}

fp_t psi_coefficient(const ModuleAction& M, const FpVec& x, std::size_t i) {
    FpVec cp = action_char_poly(M, x);
    return i < cp.size() ? cp[i] : 0;
}

std::vector<SymPoly> dickson_coefficients(int m, fp_t p) {
    if (!((p == 3 && m <= 3) || (p == 5 && m <= 2)))
        throw EnvelopeError("Dickson expansion limited to m <= 3 at p=3, m <= 2 at p=5");
    const PrimeField F(p);
    std::size_t count = 1;
    for (int i = 0; i < m; ++i) count *= p;

    std::vector<SymPoly> coeffs{SymPoly::constant(m, p, 1)}; // polynomial "1" in T
    for (std::size_t code = 0; code < count; ++code) {
        std::vector<fp_t> a(m);
        std::size_t t = code;
        for (int i = m - 1; i >= 0; --i) {
            a[i] = static_cast<fp_t>(t % p);
            t /= p;
        }
        SymPoly lin(m, p);
        for (int i = 0; i < m; ++i) {
            std::vector<int> e(m, 0);
            e[i] = 1;
            lin.add_term(e, a[i]);
        }
        // multiply by (T - lin)
        std::vector<SymPoly> next(coeffs.size() + 1, SymPoly(m, p));
        for (std::size_t d = 0; d < coeffs.size(); ++d) {
            next[d + 1] += coeffs[d];
            next[d] -= lin * coeffs[d];
        }
        coeffs = std::move(next);
    }

    // the product is a p-polynomial in T: everything off p-power degrees dies
    std::size_t q = 1;
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
        if (d == q || d == 0) {
            if (d == q) q *= p;
            continue;
        }
        if (!coeffs[d].is_zero())
            throw VerificationFailure("Dickson product has a non-p-power coefficient");
    }
    (void)F;
    return coeffs;
}

FpVec dickson_product_at_point(const FpVec& point, fp_t p) {
    const PrimeField F(p);
    const int m = static_cast<int>(point.size());
    std::size_t count = 1;
    for (int i = 0; i < m; ++i) count *= p;
    FpVec coeffs{1};
    for (std::size_t code = 0; code < count; ++code) {
        std::size_t t = code;
        fp_t v = 0;
        for (int i = m - 1; i >= 0; --i) {
            v = F.add(v, F.mul(static_cast<fp_t>(t % p), point[i]));
            t /= p;
        }
        FpVec next(coeffs.size() + 1, 0);
        for (std::size_t d = 0; d < coeffs.size(); ++d) {
            next[d + 1] = F.add(next[d + 1], coeffs[d]);
            next[d] = F.sub(next[d], F.mul(v, coeffs[d]));
        }
        coeffs = std::move(next);
    }
    return coeffs;
}

QPolyResult q_polynomial(const FpVec& x, const LieOps& ops, std::size_t ell, std::size_t mu) {
    QPolyResult out;
    out.q = minimal_p_polynomial(x, ops);
    out.degenerate = !(out.q.pdegree() == ell + mu && out.q.coeff(ell) != 0);
    if (!out.degenerate)
        for (std::size_t j = 0; j < ell; ++j)
            if (out.q.coeff(j) != 0) out.degenerate = true;
    return out;
}

fp_t BetaForm::eval(const std::vector<FpVec>& vecs) const {
    if (vecs.size() != slots.size()) throw ArityMismatch("beta arity mismatch");
    FpMat M(slots.size(), slots.size(), p);
    for (std::size_t k = 0; k < slots.size(); ++k)
        for (std::size_t l = 0; l < vecs.size(); ++l) M.at(k, l) = vecs[l][slots[k]];
    return det(std::move(M));
}

fp_t phi_via_beta(const FpVec& x, const BetaForm& beta, const LieOps& ops,
                  std::size_t ell, std::size_t mu, std::size_t i) {
    if (i >= mu) throw IndexError("phi index out of range");
    const std::size_t d = ell + mu;
    std::vector<FpVec> powers; // x^[p]^ell .. x^[p]^d
    FpVec v = x;
    for (std::size_t k = 0; k < ell; ++k) v = ops.p_power(v);
    for (std::size_t k = ell; k <= d; ++k) {
        powers.push_back(v);
        v = ops.p_power(v);
    }
    std::vector<FpVec> tuple(powers.begin(), powers.begin() + mu);
    fp_t den = beta.eval(tuple);
    if (den == 0) throw OutsideOmegaBeta("beta denominator vanishes at this element");
    tuple[i] = powers[mu]; // x^[p]^d in slot i
    fp_t num = beta.eval(tuple);
    const PrimeField F(beta.p);
    return F.neg(F.div(num, den));
}

namespace {

// dense polynomial p-th power over F_p: indices multiply by p
FpVec poly_frobenius(const FpVec& poly, fp_t p) {
    FpVec out((poly.size() - 1) * p + 1, 0);
    for (std::size_t d = 0; d < poly.size(); ++d) out[d * p] = poly[d];
    return out;
}

bool nonzero_only_at_p_powers(const FpVec& poly, fp_t p, std::size_t min_power) {
    std::size_t q = 1;
    for (std::size_t i = 0; i < min_power; ++i) q *= p;
    for (std::size_t d = 0; d < poly.size(); ++d) {
        bool is_pp = false;
        std::size_t t = q;
        while (t <= d) {
            if (t == d) { is_pp = true; break; }
            t *= p;
        }
        if (!is_pp && poly[d] != 0) return false;
    }
    return true;
}

} // namespace

RestrictionReport restriction_identity_check(Family fam, int n, fp_t p,
                                             std::uint64_t seed, int samples) {
    RestrictionReport rep;
    rep.family = family_name(fam);
    rep.n = n;
    rep.p = p;
    const Ring& R = ring(n, p);
    LieOps wops = witt_ops(R);
    ModuleAction act = natural_action(R);
    const PrimeField F(p);

    std::vector<Derivation> torus;
    SubalgebraBasis algebra;
    std::size_t mu = 0;
    switch (fam) {
    case Family::W:
        torus = standard_torus_w(R);
        algebra = SubalgebraBasis::full("W", witt_dim(R), p);
        mu = n;
        break;
    case Family::S: {
        torus = standard_torus_s(R);
        algebra = build_family(Family::S, n, p).basis;
        mu = n - 1;
        break;
    }
    case Family::H: {
        torus = standard_torus_h(R);
        algebra = build_family(Family::H, n, p).basis;
        mu = n / 2;
        break;
    }
    default:
        throw UsageError("restriction identities are checked for W, S, H");
    }

    // (a) toral points: char poly of the natural action vs the Dickson
    // product, with an empirically determined Frobenius exponent.
    rep.toral_points_ok = true;
    std::size_t points = 1;
    for (std::size_t i = 0; i < mu; ++i) points *= p;
    for (std::size_t code = 0; code < points && rep.toral_points_ok; ++code) {
        FpVec coords(mu, 0);
        std::size_t t = code;
        for (std::size_t i = mu; i-- > 0;) {
            coords[i] = static_cast<fp_t>(t % p);
            t /= p;
        }
        FpVec tv(witt_dim(R), 0);
        for (std::size_t i = 0; i < mu; ++i) {
            if (!coords[i]) continue;
            FpVec g = torus[i].to_vec();
            for (std::size_t k = 0; k < tv.size(); ++k)
                tv[k] = F.add(tv[k], F.mul(coords[i], g[k]));
        }
        FpVec P = action_char_poly(act, tv);
        FpVec D = dickson_product_at_point(coords, p);
        int e = 0;
        while (D.size() < P.size()) {
            D = poly_frobenius(D, p);
            ++e;
        }
        if (D != P) {
            rep.toral_points_ok = false;
            rep.detail = "toral point mismatch at code " + std::to_string(code);
        } else if (rep.exponent == -1) {
            rep.exponent = e;
        } else if (rep.exponent != e) {
            rep.toral_points_ok = false;
            rep.detail = "inconsistent Frobenius exponent across toral points";
        }
    }

    // (b)+(c) sampled elements
    SplitRng rng(seed ^ 0x9d1c37a5f0e2b4c8ULL);
    rep.p_polynomiality_ok = true;
    rep.q_match_ok = true;
    int regular_samples = 0;
    for (int s = 0; s < samples; ++s) {
        if (fam == Family::H) {
            // gencharpol shape: coefficients of P(T; D_H(f)) live at
            // T^{p^{r+i}} only, for arbitrary f
            TruncPoly f(R, rng.vec(R.dim(), p));
            FpVec P = action_char_poly(act, hamiltonian_vector_field(f).to_vec());
            if (!nonzero_only_at_p_powers(P, p, n / 2)) {
                rep.p_polynomiality_ok = false;
                rep.detail = "Hamiltonian sample with off-shape coefficient";
            }
            ++rep.samples_used;
            continue;
        }
        FpVec coords = rng.vec(algebra.dim(), p);
        FpVec x = algebra.from_coords(coords);
        auto [xs, xn] = jordan_chevalley(x, wops);
        (void)xn;
        FpVec P = action_char_poly(act, xs);
        if (!nonzero_only_at_p_powers(P, p, 0)) {
            rep.p_polynomiality_ok = false;
            rep.detail = "semisimple sample with non-p-power coefficient";
        }
        ++rep.samples_used;
        PClosure pc = p_closure(xs, wops);
        if (pc.d != mu) continue; // only regular semisimple parts feed (b)
        ++regular_samples;
        PPolynomial q = minimal_p_polynomial(xs, wops);
        FpVec Q = q.to_plain();
        int e = 0;
        while (Q.size() < P.size()) {
            Q = poly_frobenius(Q, p);
            ++e;
        }
        if (Q != P) {
            rep.q_match_ok = false;
            rep.detail = "char poly is not a Frobenius power of the minimal p-polynomial";
        } else if (rep.q_exponent == -1) {
            rep.q_exponent = e;
        } else if (rep.q_exponent != e) {
            rep.q_match_ok = false;
            rep.detail = "inconsistent exponent across semisimple samples";
        }
    }
    if (fam != Family::H && regular_samples < 5) {
        rep.q_match_ok = false;
        rep.detail = "too few regular semisimple samples";
    }
    return rep;
}

} // namespace rlct
