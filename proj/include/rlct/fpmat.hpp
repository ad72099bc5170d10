#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rlct/fp.hpp"

namespace rlct {

// Dense row-major matrix over F_p.
class FpMat {
public:
    FpMat() : p_(3), rows_(0), cols_(0) {}
    FpMat(std::size_t rows, std::size_t cols, fp_t p)
        : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static FpMat identity(std::size_t n, fp_t p);
    static FpMat from_rows(const std::vector<FpVec>& rows, fp_t p);

    fp_t p() const { return p_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    fp_t& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    fp_t at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    fp_t* row(std::size_t i) { return a_.data() + i * cols_; }
    const fp_t* row(std::size_t i) const { return a_.data() + i * cols_; }
    FpVec row_vec(std::size_t i) const {
        return FpVec(row(i), row(i) + cols_);
    }

    void swap_rows(std::size_t i, std::size_t j);
    void append_row(const FpVec& v);

    bool operator==(const FpMat& o) const {
        return p_ == o.p_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    fp_t p_;
    std::size_t rows_, cols_;
    FpVec a_;
};

// Default entry points; they dispatch to the OpenMP kernels on inputs large
// enough to be worth it and to the serial code otherwise.
FpMat mat_mul(const FpMat& A, const FpMat& B);
FpVec mat_vec(const FpMat& A, const FpVec& x);
FpMat transpose(const FpMat& A);

struct Echelon {
    FpMat m;                      // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

Echelon rref(FpMat A);
std::size_t rank(const FpMat& A);
// Basis of {x : A x = 0}, one row per basis vector, in canonical RREF.
FpMat kernel(const FpMat& A);
std::optional<FpMat> inverse(const FpMat& A);
fp_t det(FpMat A);

// Characteristic polynomial det(T*I - A), coefficients low degree first,
// monic of degree rows(A).  Exact Hessenberg reduction over F_p.
FpVec charpoly(const FpMat& A);

// Reference implementations: straightforward loops, no OpenMP, kept as the
// oracle the parallel kernels are tested and benchmarked against.
namespace serial {
FpMat mat_mul(const FpMat& A, const FpMat& B);
std::size_t rank(FpMat A);             // forward elimination only
std::size_t rref_rank(FpMat A);        // full reduced elimination, one thread
// det(tI - A) for a scalar t, by plain elimination; used to spot-check
// charpoly pointwise through an independent route.
fp_t charpoly_eval(FpMat A, fp_t t);
} // namespace serial

// Incremental row-space builder: keeps an echelonized generating set and
// reduces candidates against it.  add() returns true when the rank grew.
class SpanBuilder {
public:
    SpanBuilder(std::size_t width, fp_t p) : p_(p), width_(width) {}

    bool add(FpVec v);
    bool contains(const FpVec& v) const { return reduce(v).empty(); }
    // Residual after reduction; empty vector means contained.
    FpVec reduce(FpVec v) const;
    std::size_t rank() const { return rows_.size(); }
    std::size_t width() const { return width_; }
    fp_t p() const { return p_; }

    // Canonical reduced echelon basis of the span.
    FpMat rref_basis() const;

private:
    fp_t p_;
    std::size_t width_;
    std::vector<FpVec> rows_;             // pivot-normalized, increasing pivots
    std::vector<std::size_t> pivots_;
};

} // namespace rlct
