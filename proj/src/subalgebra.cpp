#include "rlct/subalgebra.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rlct {

LieOps witt_ops(const Ring& R) {
    LieOps ops;
    ops.dim = witt_dim(R);
    ops.p = R.p();
    ops.bracket = [&R](const FpVec& a, const FpVec& b) {
        return bracket(Derivation::from_vec(R, a), Derivation::from_vec(R, b)).to_vec();
    };
    ops.p_power = [&R](const FpVec& a) {
        return p_power(Derivation::from_vec(R, a)).to_vec();
    };
    ops.coord_degree = [&R](std::size_t i) { return witt_basis_degree(R, i); };
    return ops;
}

SubalgebraBasis::SubalgebraBasis(std::string label, std::size_t ambient_dim, fp_t p)
    : label_(std::move(label)), ambient_dim_(ambient_dim), p_(p),
      basis_(0, ambient_dim, p) {}

void SubalgebraBasis::refresh_pivots() {
    pivots_.clear();
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        std::size_t j = 0;
        while (j < basis_.cols() && basis_.at(i, j) == 0) ++j;
        pivots_.push_back(j);
    }
}

SubalgebraBasis SubalgebraBasis::span(std::string label, std::size_t ambient_dim, fp_t p,
                                      const std::vector<FpVec>& gens) {
    SubalgebraBasis B(std::move(label), ambient_dim, p);
    SpanBuilder sb(ambient_dim, p);
    for (const auto& g : gens) sb.add(g);
    B.basis_ = sb.rref_basis();
    B.refresh_pivots();
    return B;
}

SubalgebraBasis SubalgebraBasis::full(std::string label, std::size_t ambient_dim, fp_t p) {
    SubalgebraBasis B(std::move(label), ambient_dim, p);
    B.basis_ = FpMat::identity(ambient_dim, p);
    B.refresh_pivots();
    return B;
}

bool SubalgebraBasis::contains(const FpVec& v) const {
    SpanBuilder sb(ambient_dim_, p_);
    for (std::size_t i = 0; i < basis_.rows(); ++i) sb.add(basis_.row_vec(i));
    return sb.contains(v);
}

FpVec SubalgebraBasis::coords_of(const FpVec& v) const {
    if (v.size() != ambient_dim_) throw ArityMismatch("vector/ambient size mismatch");
    const PrimeField F(p_);
    // rows are in RREF, so the coefficient along row i is v[pivot_i]
    FpVec c(basis_.rows(), 0);
    FpVec r = v;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        fp_t f = r[pivots_[i]];
        c[i] = f;
        if (!f) continue;
        for (std::size_t j = 0; j < ambient_dim_; ++j)
            r[j] = F.sub(r[j], F.mul(f, basis_.at(i, j)));
    }
    for (fp_t x : r)
        if (x) throw VerificationFailure("vector not contained in subalgebra " + label_);
    return c;
}

FpVec SubalgebraBasis::from_coords(const FpVec& c) const {
    if (c.size() != basis_.rows()) throw ArityMismatch("coordinate length mismatch");
    const PrimeField F(p_);
    FpVec v(ambient_dim_, 0);
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        if (!c[i]) continue;
        for (std::size_t j = 0; j < ambient_dim_; ++j)
            v[j] = F.add(v[j], F.mul(c[i], basis_.at(i, j)));
    }
    return v;
}

SubalgebraBasis derived_subalgebra(const SubalgebraBasis& B, const LieOps& ops) {
    const std::size_t m = B.dim();
    std::vector<FpVec> rows(m);
    for (std::size_t i = 0; i < m; ++i) rows[i] = B.basis_vector(i);

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(m * (m - 1) / 2);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) pairs.emplace_back(i, j);

    std::vector<FpVec> brackets(pairs.size());
#ifdef _OPENMP
    // worth spawning threads only when the bracket work dominates the
    // scheduling and allocation overhead
    const bool big = pairs.size() * ops.dim >= (1u << 24);
#pragma omp parallel for schedule(static) if (big)
#endif
    for (long long k = 0; k < static_cast<long long>(pairs.size()); ++k)
        brackets[k] = ops.bracket(rows[pairs[k].first], rows[pairs[k].second]);

    SubalgebraBasis out = SubalgebraBasis::span(B.label() + "'", B.ambient_dim(), B.p(), brackets);
    return out;
}

SubalgebraBasis derived_series(const SubalgebraBasis& B, const LieOps& ops, int k) {
    SubalgebraBasis cur = B;
    for (int i = 0; i < k; ++i) cur = derived_subalgebra(cur, ops);
    return cur;
}

bool is_bracket_closed(const SubalgebraBasis& B, const LieOps& ops) {
    SpanBuilder sb(B.ambient_dim(), B.p());
    for (std::size_t i = 0; i < B.dim(); ++i) sb.add(B.basis_vector(i));
    for (std::size_t i = 0; i < B.dim(); ++i)
        for (std::size_t j = i + 1; j < B.dim(); ++j)
            if (!sb.contains(ops.bracket(B.basis_vector(i), B.basis_vector(j))))
                return false;
    return true;
}

bool is_p_closed(const SubalgebraBasis& B, const LieOps& ops) {
    SpanBuilder sb(B.ambient_dim(), B.p());
    for (std::size_t i = 0; i < B.dim(); ++i) sb.add(B.basis_vector(i));
    for (std::size_t i = 0; i < B.dim(); ++i)
        if (!sb.contains(ops.p_power(B.basis_vector(i))))
            return false;
    return true;
}

SubalgebraBasis intersect(const SubalgebraBasis& A, const SubalgebraBasis& B) {
    if (A.ambient_dim() != B.ambient_dim()) throw ArityMismatch("ambient mismatch");
    const std::size_t ra = A.dim(), rb = B.dim(), n = A.ambient_dim();
    // columns: coefficients on A-basis then B-basis; rows: ambient coords
    FpMat M(n, ra + rb, A.p());
    for (std::size_t j = 0; j < ra; ++j)
        for (std::size_t i = 0; i < n; ++i) M.at(i, j) = A.basis().at(j, i);
    const PrimeField F(A.p());
    for (std::size_t j = 0; j < rb; ++j)
        for (std::size_t i = 0; i < n; ++i) M.at(i, ra + j) = F.neg(B.basis().at(j, i));
    FpMat K = kernel(M);
    std::vector<FpVec> gens;
    for (std::size_t k = 0; k < K.rows(); ++k) {
        FpVec alpha(K.row(k), K.row(k) + ra);
        gens.push_back(A.from_coords(alpha));
    }
    return SubalgebraBasis::span(A.label() + "&" + B.label(), n, A.p(), gens);
}

SubalgebraBasis join(const SubalgebraBasis& A, const SubalgebraBasis& B) {
    if (A.ambient_dim() != B.ambient_dim()) throw ArityMismatch("ambient mismatch");
    std::vector<FpVec> gens;
    for (std::size_t i = 0; i < A.dim(); ++i) gens.push_back(A.basis_vector(i));
    for (std::size_t i = 0; i < B.dim(); ++i) gens.push_back(B.basis_vector(i));
    return SubalgebraBasis::span(A.label() + "+" + B.label(), A.ambient_dim(), A.p(), gens);
}

SubalgebraBasis centralizer_of(const std::vector<FpVec>& T, const LieOps& ops,
                               const SubalgebraBasis& within) {
    // Solve [t, x] = 0 for all t in T, x restricted to `within`.
    const std::size_t m = within.dim();
    FpMat M(T.size() * ops.dim, m, ops.p);
    for (std::size_t j = 0; j < m; ++j) {
        FpVec bj = within.basis_vector(j);
        for (std::size_t t = 0; t < T.size(); ++t) {
            FpVec br = ops.bracket(T[t], bj);
            for (std::size_t i = 0; i < ops.dim; ++i) M.at(t * ops.dim + i, j) = br[i];
        }
    }
    FpMat K = kernel(M);
    std::vector<FpVec> gens;
    for (std::size_t k = 0; k < K.rows(); ++k)
        gens.push_back(within.from_coords(K.row_vec(k)));
    return SubalgebraBasis::span("C(" + within.label() + ")", ops.dim, ops.p, gens);
}

} // namespace rlct
