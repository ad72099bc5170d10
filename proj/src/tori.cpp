#include "rlct/tori.hpp"

namespace rlct {

std::vector<Derivation> standard_torus_w(const Ring& R) {
    std::vector<Derivation> t;
    for (int i = 1; i <= R.n(); ++i) {
        std::vector<TruncPoly> c(R.n(), TruncPoly(R));
        c[i - 1] = TruncPoly::constant(R, 1) + TruncPoly::variable(R, i);
        t.emplace_back(R, std::move(c));
    }
    return t;
}

std::vector<Derivation> standard_torus_s(const Ring& R) {
    const int n = R.n();
    std::vector<Derivation> t;
    for (int i = 1; i < n; ++i) {
        std::vector<TruncPoly> c(n, TruncPoly(R));
        c[i - 1] = TruncPoly::constant(R, 1) + TruncPoly::variable(R, i);
        c[n - 1] = -TruncPoly::variable(R, n);
        t.emplace_back(R, std::move(c));
    }
    return t;
}

std::vector<Derivation> standard_torus_h(const Ring& R) {
    if (R.n() % 2 != 0) throw ParityError("Hamiltonian torus needs n = 2r");
    const int r = R.n() / 2;
    std::vector<Derivation> t;
    for (int i = 1; i <= r; ++i) {
        std::vector<TruncPoly> c(R.n(), TruncPoly(R));
        c[i - 1] = TruncPoly::constant(R, 1) + TruncPoly::variable(R, i);
        c[i + r - 1] = -TruncPoly::variable(R, i + r);
        t.emplace_back(R, std::move(c));
    }
    return t;
}

int f0(const std::vector<FpVec>& torus_gens, const LieOps& ops) {
    if (!ops.coord_degree) throw UsageError("f0 needs a graded ambient");
    if (torus_gens.empty()) return 0;
    std::vector<std::size_t> neg;
    for (std::size_t i = 0; i < ops.dim; ++i)
        if (ops.coord_degree(i) < 0) neg.push_back(i);
    FpMat G = FpMat::from_rows(torus_gens, ops.p);
    std::size_t full = rank(G);
    FpMat N(torus_gens.size(), neg.size(), ops.p);
    for (std::size_t i = 0; i < torus_gens.size(); ++i)
        for (std::size_t j = 0; j < neg.size(); ++j) N.at(i, j) = torus_gens[i][neg[j]];
    return static_cast<int>(full - rank(N));
}

const WeightSpace* WeightDecomposition::find(const std::vector<fp_t>& lambda) const {
    for (const auto& ws : spaces)
        if (ws.lambda == lambda) return &ws;
    return nullptr;
}

WeightDecomposition weight_decomposition(const std::vector<FpMat>& actions, fp_t p) {
    if (actions.empty()) throw UsageError("need at least one torus generator");
    const std::size_t N = actions[0].rows();
    const PrimeField F(p);
    WeightDecomposition out;
    out.carrier_dim = N;
    out.mu = actions.size();

    std::size_t count = 1;
    for (std::size_t a = 0; a < actions.size(); ++a) count *= p;
    std::size_t total = 0;
    for (std::size_t code = 0; code < count; ++code) {
        std::vector<fp_t> lambda(actions.size(), 0);
        std::size_t t = code;
        for (std::size_t a = actions.size(); a-- > 0;) {
            lambda[a] = static_cast<fp_t>(t % p);
            t /= p;
        }
        FpMat stacked(actions.size() * N, N, p);
        for (std::size_t a = 0; a < actions.size(); ++a)
            for (std::size_t i = 0; i < N; ++i)
                for (std::size_t j = 0; j < N; ++j) {
                    fp_t v = actions[a].at(i, j);
                    if (i == j) v = F.sub(v, lambda[a]);
                    stacked.at(a * N + i, j) = v;
                }
        FpMat K = kernel(stacked);
        if (K.rows() > 0) {
            out.spaces.push_back({lambda, K});
            total += K.rows();
        }
    }
    if (total != N)
        throw NotSemisimple("weight spaces do not exhaust the carrier (" +
                            std::to_string(total) + " of " + std::to_string(N) + ")");
    return out;
}

FpMat ad_action_matrix(const SubalgebraBasis& algebra, const LieOps& ops, const FpVec& t) {
    const std::size_t d = algebra.dim();
    FpMat M(d, d, ops.p);
    for (std::size_t j = 0; j < d; ++j) {
        FpVec col = algebra.coords_of(ops.bracket(t, algebra.basis_vector(j)));
        for (std::size_t i = 0; i < d; ++i) M.at(i, j) = col[i];
    }
    return M;
}

FpMat module_action_matrix(const Derivation& D) {
    const Ring& R = D.ring();
    FpMat M(R.dim(), R.dim(), R.p());
    for (std::size_t j = 0; j < R.dim(); ++j) {
        TruncPoly m(R);
        m.set_coeff(j, 1);
        TruncPoly img = D.apply(m);
        for (std::size_t i = 0; i < R.dim(); ++i) M.at(i, j) = img.coeff(i);
    }
    return M;
}

TruncPoly ThetaFrame::xi_monomial(const std::vector<int>& a) const {
    TruncPoly acc = TruncPoly::constant(*R, 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (int k = 0; k < a[i]; ++k) acc = acc * xi[i];
    return acc;
}

ThetaFrame theta_frame(const Ring& R) {
    ThetaFrame fr;
    fr.R = &R;
    const int n = R.n();
    for (int i = 1; i <= n; ++i)
        fr.xi.push_back(TruncPoly::constant(R, 1) + TruncPoly::variable(R, i));
    for (int i = 1; i < n; ++i) {
        std::vector<TruncPoly> c(n, TruncPoly(R));
        c[i - 1] = fr.xi[i - 1];
        c[n - 1] = -fr.xi[n - 1];
        fr.theta.emplace_back(R, std::move(c));
    }
    {
        std::vector<TruncPoly> c(n, TruncPoly(R));
        c[n - 1] = fr.xi[n - 1];
        fr.theta.emplace_back(R, std::move(c));
    }
    // zeta = (xi_1 ... xi_n)^{-1}: the theta_i-constants are exactly k[zeta]
    // and theta_n(zeta) = -zeta.
    TruncPoly prod = TruncPoly::constant(R, 1);
    for (int i = 1; i <= n; ++i) prod = prod * fr.xi[i - 1];
    TruncPoly z = TruncPoly::constant(R, 1);
    for (fp_t k = 0; k + 1 < R.p(); ++k) z = z * prod;
    fr.zeta = z;
    return fr;
}

WeylElement weyl_substitution(const Ring& R, const FpMat& A) {
    const int n = R.n();
    if (A.rows() != static_cast<std::size_t>(n) || A.cols() != static_cast<std::size_t>(n))
        throw ArityMismatch("matrix size does not match the variable count");
    if (det(A) == 0) throw NotInvertible("substitution matrix is singular");

    ThetaFrame fr = theta_frame(R);
    std::vector<TruncPoly> images;
    for (int i = 0; i < n; ++i) {
        // xi_i -> prod_j xi_j^{A_ji}; image of x_i is that product minus 1
        TruncPoly acc = TruncPoly::constant(R, 1);
        for (int j = 0; j < n; ++j)
            for (fp_t k = 0; k < A.at(j, i); ++k) acc = acc * fr.xi[j];
        acc.set_coeff(0, R.field().sub(acc.coeff(0), 1));
        images.push_back(acc);
    }
    WeylElement w{A, Substitution(R, std::move(images)), FpMat(n, n, R.p())};
    if (!w.mu.is_automorphism())
        throw NotInvertible("substitution failed to be an automorphism");

    std::vector<Derivation> torus = standard_torus_w(R);
    std::vector<FpVec> torus_vecs;
    for (const auto& t : torus) torus_vecs.push_back(t.to_vec());
    for (int i = 0; i < n; ++i) {
        Derivation img = conjugate(w.mu, torus[i]);
        auto coords = solve_coords(torus_vecs, img.to_vec(), R.p());
        if (!coords)
            throw VerificationFailure("substitution does not normalize the torus");
        for (int j = 0; j < n; ++j) w.induced.at(j, i) = (*coords)[j];
    }
    return w;
}

std::vector<FpMat> enumerate_gl(int n, fp_t p) {
    std::vector<FpMat> out;
    std::size_t total = 1;
    for (int i = 0; i < n * n; ++i) total *= p;
    for (std::size_t code = 0; code < total; ++code) {
        FpMat A(n, n, p);
        std::size_t t = code;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                A.at(i, j) = static_cast<fp_t>(t % p);
                t /= p;
            }
        if (det(A) != 0) out.push_back(std::move(A));
    }
    return out;
}

NilpotencyReport cartan_nilpotency_check(const SubalgebraBasis& h,
                                         const std::vector<FpVec>& torus,
                                         const LieOps& ops, SplitRng rng, int samples) {
    NilpotencyReport rep;
    SpanBuilder tspan(ops.dim, ops.p);
    std::size_t tdim = 0;
    for (const auto& t : torus)
        if (tspan.add(t)) ++tdim;
    rep.ell = h.dim() - tdim;

    // lower central series
    SubalgebraBasis cur = h;
    std::size_t steps = 0;
    while (cur.dim() > 0 && steps <= h.dim()) {
        std::vector<FpVec> gens;
        for (std::size_t i = 0; i < h.dim(); ++i)
            for (std::size_t j = 0; j < cur.dim(); ++j)
                gens.push_back(ops.bracket(h.basis_vector(i), cur.basis_vector(j)));
        SubalgebraBasis next = SubalgebraBasis::span("c", ops.dim, ops.p, gens);
        ++steps;
        if (next.dim() == cur.dim()) break; // stabilized above zero
        cur = next;
    }
    rep.nilpotent = cur.dim() == 0;
    rep.series_length = steps;

    rep.powers_land_in_torus = true;
    for (int s = 0; s < samples; ++s) {
        FpVec coords = rng.vec(h.dim(), ops.p);
        FpVec x = h.from_coords(coords);
        for (std::size_t k = 0; k < rep.ell; ++k) x = ops.p_power(x);
        if (!tspan.contains(x)) {
            rep.powers_land_in_torus = false;
            break;
        }
    }
    return rep;
}

} // namespace rlct
