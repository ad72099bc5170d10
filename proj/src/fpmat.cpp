#include "rlct/fpmat.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rlct {

namespace {
// Below these sizes the parallel kernels fall back to the serial loops.
constexpr std::size_t kParallelMulOps = 1u << 20;
constexpr std::size_t kParallelRowOps = 1u << 17;
} // namespace

FpMat FpMat::identity(std::size_t n, fp_t p) {
    FpMat m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

FpMat FpMat::from_rows(const std::vector<FpVec>& rows, fp_t p) {
    if (rows.empty()) return FpMat(0, 0, p);
    FpMat m(rows.size(), rows[0].size(), p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw ArityMismatch("ragged rows");
        std::copy(rows[i].begin(), rows[i].end(), m.row(i));
    }
    return m;
}

void FpMat::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void FpMat::append_row(const FpVec& v) {
    if (rows_ == 0 && cols_ == 0) cols_ = v.size();
    if (v.size() != cols_) throw ArityMismatch("row width mismatch");
    a_.insert(a_.end(), v.begin(), v.end());
    ++rows_;
}

namespace serial {

FpMat mat_mul(const FpMat& A, const FpMat& B) {
    if (A.p() != B.p()) throw ModulusMismatch("matrix moduli differ");
    if (A.cols() != B.rows()) throw ArityMismatch("matrix shapes incompatible");
    const fp_t p = A.p();
    FpMat C(A.rows(), B.cols(), p);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t k = 0; k < A.cols(); ++k) {
            fp_t aik = A.at(i, k);
            if (!aik) continue;
            const fp_t* brow = B.row(k);
            fp_t* crow = C.row(i);
            for (std::size_t j = 0; j < B.cols(); ++j)
                crow[j] = static_cast<fp_t>(
                    (crow[j] + static_cast<std::uint64_t>(aik) * brow[j]) % p);
        }
    }
    return C;
}

std::size_t rank(FpMat A) {
    const fp_t p = A.p();
    const PrimeField F(p);
    std::size_t r = 0;
    for (std::size_t col = 0; col < A.cols() && r < A.rows(); ++col) {
        std::size_t piv = r;
        while (piv < A.rows() && A.at(piv, col) == 0) ++piv;
        if (piv == A.rows()) continue;
        A.swap_rows(piv, r);
        fp_t inv = F.inv(A.at(r, col));
        for (std::size_t j = col; j < A.cols(); ++j) A.at(r, j) = F.mul(A.at(r, j), inv);
        for (std::size_t i = r + 1; i < A.rows(); ++i) {
            fp_t f = A.at(i, col);
            if (!f) continue;
            for (std::size_t j = col; j < A.cols(); ++j)
                A.at(i, j) = F.sub(A.at(i, j), F.mul(f, A.at(r, j)));
        }
        ++r;
    }
    return r;
}

std::size_t rref_rank(FpMat A) {
    const PrimeField F(A.p());
    std::size_t r = 0;
    for (std::size_t col = 0; col < A.cols() && r < A.rows(); ++col) {
        std::size_t piv = r;
        while (piv < A.rows() && A.at(piv, col) == 0) ++piv;
        if (piv == A.rows()) continue;
        A.swap_rows(piv, r);
        fp_t inv = F.inv(A.at(r, col));
        for (std::size_t j = col; j < A.cols(); ++j) A.at(r, j) = F.mul(A.at(r, j), inv);
        for (std::size_t i = 0; i < A.rows(); ++i) {
            if (i == r) continue;
            fp_t f = A.at(i, col);
            if (!f) continue;
            const fp_t* prow = A.row(r);
            fp_t* irow = A.row(i);
            for (std::size_t j = col; j < A.cols(); ++j)
                irow[j] = F.sub(irow[j], F.mul(f, prow[j]));
        }
        ++r;
    }
    return r;
}

fp_t charpoly_eval(FpMat A, fp_t t) {
    // det(tI - A) by elimination.
    const PrimeField F(A.p());
    const std::size_t n = A.rows();
    FpMat M(n, n, A.p());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            M.at(i, j) = F.sub(i == j ? t : 0, A.at(i, j));
    fp_t d = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && M.at(piv, col) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            M.swap_rows(piv, col);
            d = F.neg(d);
        }
        d = F.mul(d, M.at(col, col));
        fp_t inv = F.inv(M.at(col, col));
        for (std::size_t i = col + 1; i < n; ++i) {
            fp_t f = F.mul(M.at(i, col), inv);
            if (!f) continue;
            for (std::size_t j = col; j < n; ++j)
                M.at(i, j) = F.sub(M.at(i, j), F.mul(f, M.at(col, j)));
        }
    }
    return d;
}

} // namespace serial

FpMat mat_mul(const FpMat& A, const FpMat& B) {
#ifdef _OPENMP
    if (A.rows() * A.cols() * B.cols() >= kParallelMulOps) {
        if (A.p() != B.p()) throw ModulusMismatch("matrix moduli differ");
        if (A.cols() != B.rows()) throw ArityMismatch("matrix shapes incompatible");
        const fp_t p = A.p();
        FpMat C(A.rows(), B.cols(), p);
#pragma omp parallel for schedule(static)
        for (long long ii = 0; ii < static_cast<long long>(A.rows()); ++ii) {
            auto i = static_cast<std::size_t>(ii);
            for (std::size_t k = 0; k < A.cols(); ++k) {
                fp_t aik = A.at(i, k);
                if (!aik) continue;
                const fp_t* brow = B.row(k);
                fp_t* crow = C.row(i);
                for (std::size_t j = 0; j < B.cols(); ++j)
                    crow[j] = static_cast<fp_t>(
                        (crow[j] + static_cast<std::uint64_t>(aik) * brow[j]) % p);
            }
        }
        return C;
    }
#endif
    return serial::mat_mul(A, B);
}

FpVec mat_vec(const FpMat& A, const FpVec& x) {
    if (x.size() != A.cols()) throw ArityMismatch("vector length mismatch");
    const fp_t p = A.p();
    FpVec y(A.rows(), 0);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        std::uint64_t acc = 0;
        const fp_t* arow = A.row(i);
        for (std::size_t j = 0; j < A.cols(); ++j)
            acc += static_cast<std::uint64_t>(arow[j]) * x[j];
        y[i] = static_cast<fp_t>(acc % p);
    }
    return y;
}

FpMat transpose(const FpMat& A) {
    FpMat T(A.cols(), A.rows(), A.p());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j)
            T.at(j, i) = A.at(i, j);
    return T;
}

namespace {

void rref_serial(FpMat& A, std::vector<std::size_t>& pivots, std::size_t& r) {
    const PrimeField F(A.p());
    for (std::size_t col = 0; col < A.cols() && r < A.rows(); ++col) {
        std::size_t piv = r;
        while (piv < A.rows() && A.at(piv, col) == 0) ++piv;
        if (piv == A.rows()) continue;
        A.swap_rows(piv, r);
        fp_t inv = F.inv(A.at(r, col));
        for (std::size_t j = col; j < A.cols(); ++j) A.at(r, j) = F.mul(A.at(r, j), inv);
        for (std::size_t i = 0; i < A.rows(); ++i) {
            if (i == r) continue;
            fp_t f = A.at(i, col);
            if (!f) continue;
            const fp_t* prow = A.row(r);
            fp_t* irow = A.row(i);
            for (std::size_t j = col; j < A.cols(); ++j)
                irow[j] = F.sub(irow[j], F.mul(f, prow[j]));
        }
        pivots.push_back(col);
        ++r;
    }
}

#ifdef _OPENMP
// One persistent parallel region.  Every thread repeats the cheap pivot
// search on the (stable) matrix so the control flow is identical across the
// team; the mutation happens in a single section and the elimination is
// split statically.
void rref_parallel(FpMat& A, std::vector<std::size_t>& pivots, std::size_t& r) {
    const PrimeField F(A.p());
#pragma omp parallel shared(A, pivots, r)
    {
        std::size_t rr = 0;
        for (std::size_t col = 0; col < A.cols() && rr < A.rows(); ++col) {
            // A was last written before a barrier, so the search result is
            // the same in every thread
            std::size_t piv = rr;
            while (piv < A.rows() && A.at(piv, col) == 0) ++piv;
            if (piv == A.rows()) continue;
#pragma omp barrier
#pragma omp single
            {
                A.swap_rows(piv, rr);
                fp_t inv = F.inv(A.at(rr, col));
                for (std::size_t j = col; j < A.cols(); ++j)
                    A.at(rr, j) = F.mul(A.at(rr, j), inv);
                pivots.push_back(col);
            } // implicit barrier: the pivot row is normalized
#pragma omp for schedule(static)
            for (long long ii = 0; ii < static_cast<long long>(A.rows()); ++ii) {
                auto i = static_cast<std::size_t>(ii);
                if (i == rr) continue;
                fp_t f = A.at(i, col);
                if (!f) continue;
                const fp_t* prow = A.row(rr);
                fp_t* irow = A.row(i);
                for (std::size_t j = col; j < A.cols(); ++j)
                    irow[j] = F.sub(irow[j], F.mul(f, prow[j]));
            } // implicit barrier: A is stable again
            ++rr;
        }
#pragma omp single
        {
            r = rr;
        }
    }
}
#endif

} // namespace

Echelon rref(FpMat A) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
#ifdef _OPENMP
    if (A.rows() * A.cols() >= kParallelRowOps && A.rows() >= 64)
        rref_parallel(A, pivots, r);
    else
        rref_serial(A, pivots, r);
#else
    rref_serial(A, pivots, r);
#endif
    Echelon e;
    e.rank = r;
    e.pivots = std::move(pivots);
    e.m = FpMat(r, A.cols(), A.p());
    for (std::size_t i = 0; i < r; ++i)
        std::copy(A.row(i), A.row(i) + A.cols(), e.m.row(i));
    return e;
}

std::size_t rank(const FpMat& A) { return rref(A).rank; }

FpMat kernel(const FpMat& A) {
    Echelon e = rref(A);
    const PrimeField F(A.p());
    std::vector<bool> is_pivot(A.cols(), false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < A.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    FpMat K(free_cols.size(), A.cols(), A.p());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t fc = free_cols[k];
        K.at(k, fc) = 1;
        for (std::size_t i = 0; i < e.rank; ++i)
            K.at(k, e.pivots[i]) = F.neg(e.m.at(i, fc));
    }
    return K;
}

std::optional<FpMat> inverse(const FpMat& A) {
    if (A.rows() != A.cols()) throw ArityMismatch("inverse of non-square matrix");
    const std::size_t n = A.rows();
    FpMat aug(n, 2 * n, A.p());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, n + i) = 1;
    }
    Echelon e = rref(std::move(aug));
    // invertible iff the pivots stay in the left block
    if (e.rank != n || e.pivots[n - 1] >= n) return std::nullopt;
    FpMat inv(n, n, A.p());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = e.m.at(i, n + j);
    return inv;
}

fp_t det(FpMat A) {
    if (A.rows() != A.cols()) throw ArityMismatch("determinant of non-square matrix");
    const PrimeField F(A.p());
    const std::size_t n = A.rows();
    fp_t d = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && A.at(piv, col) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            A.swap_rows(piv, col);
            d = F.neg(d);
        }
        d = F.mul(d, A.at(col, col));
        fp_t inv = F.inv(A.at(col, col));
        for (std::size_t i = col + 1; i < n; ++i) {
            fp_t f = F.mul(A.at(i, col), inv);
            if (!f) continue;
            for (std::size_t j = col; j < n; ++j)
                A.at(i, j) = F.sub(A.at(i, j), F.mul(f, A.at(col, j)));
        }
    }
    return d;
}

FpVec charpoly(const FpMat& A) {
    if (A.rows() != A.cols()) throw ArityMismatch("charpoly of non-square matrix");
    const PrimeField F(A.p());
    const std::size_t n = A.rows();
    FpMat H = A;

    // Similarity reduction to upper Hessenberg form.
    for (std::size_t k = 0; k + 2 < n; ++k) {
        std::size_t piv = k + 1;
        while (piv < n && H.at(piv, k) == 0) ++piv;
        if (piv == n) continue;
        if (piv != k + 1) {
            H.swap_rows(piv, k + 1);
            for (std::size_t i = 0; i < n; ++i) std::swap(H.at(i, piv), H.at(i, k + 1));
        }
        fp_t inv = F.inv(H.at(k + 1, k));
        for (std::size_t i = k + 2; i < n; ++i) {
            fp_t t = F.mul(H.at(i, k), inv);
            if (!t) continue;
            // row_i -= t * row_{k+1}; col_{k+1} += t * col_i  (similarity)
            for (std::size_t j = 0; j < n; ++j)
                H.at(i, j) = F.sub(H.at(i, j), F.mul(t, H.at(k + 1, j)));
            for (std::size_t j = 0; j < n; ++j)
                H.at(j, k + 1) = F.add(H.at(j, k + 1), F.mul(t, H.at(j, i)));
        }
    }

    // p_m(T) for the leading principal m x m blocks of H.
    std::vector<FpVec> P(n + 1);
    P[0] = {1};
    for (std::size_t m = 1; m <= n; ++m) {
        FpVec pm(m + 1, 0);
        // (T - h_{mm}) * P[m-1]
        const fp_t hmm = H.at(m - 1, m - 1);
        for (std::size_t d = 0; d < P[m - 1].size(); ++d) {
            pm[d + 1] = F.add(pm[d + 1], P[m - 1][d]);
            pm[d] = F.sub(pm[d], F.mul(hmm, P[m - 1][d]));
        }
        fp_t subprod = 1; // product of subdiagonal entries walking up
        for (std::size_t i = 1; i < m; ++i) {
            subprod = F.mul(subprod, H.at(m - i, m - i - 1));
            if (!subprod) break;
            fp_t c = F.mul(subprod, H.at(m - i - 1, m - 1));
            if (!c) continue;
            for (std::size_t d = 0; d < P[m - i - 1].size(); ++d)
                pm[d] = F.sub(pm[d], F.mul(c, P[m - i - 1][d]));
        }
        P[m] = std::move(pm);
    }
    return P[n];
}

bool SpanBuilder::add(FpVec v) {
    if (v.size() != width_) throw ArityMismatch("span width mismatch");
    const PrimeField F(p_);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        fp_t f = v[pivots_[r]];
        if (!f) continue;
        const FpVec& row = rows_[r];
        for (std::size_t j = pivots_[r]; j < width_; ++j)
            v[j] = F.sub(v[j], F.mul(f, row[j]));
    }
    std::size_t piv = 0;
    while (piv < width_ && v[piv] == 0) ++piv;
    if (piv == width_) return false;
    fp_t inv = F.inv(v[piv]);
    for (std::size_t j = piv; j < width_; ++j) v[j] = F.mul(v[j], inv);
    // keep rows ordered by pivot
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, piv);
    return true;
}

FpVec SpanBuilder::reduce(FpVec v) const {
    if (v.size() != width_) throw ArityMismatch("span width mismatch");
    const PrimeField F(p_);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        fp_t f = v[pivots_[r]];
        if (!f) continue;
        const FpVec& row = rows_[r];
        for (std::size_t j = pivots_[r]; j < width_; ++j)
            v[j] = F.sub(v[j], F.mul(f, row[j]));
    }
    bool zero = true;
    for (fp_t x : v)
        if (x) { zero = false; break; }
    if (zero) return {};
    return v;
}

FpMat SpanBuilder::rref_basis() const {
    FpMat m = FpMat::from_rows(rows_, p_);
    if (m.rows() == 0) return FpMat(0, width_, p_);
    return rref(std::move(m)).m;
}

} // namespace rlct
