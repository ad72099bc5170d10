#pragma once

#include <utility>
#include <vector>

#include "rlct/ring.hpp"

namespace rlct {

// Element of the truncated polynomial ring.  Coefficients are held densely,
// indexed by monomial rank (desk-scale rings are tiny, and the dense layout
// is what the kernels iterate over).  The canonical sparse term list in lex
// order is produced on demand; equality is plain coefficient comparison.
class TruncPoly {
public:
    TruncPoly() : ring_(nullptr) {}
    explicit TruncPoly(const Ring& R) : ring_(&R), c_(R.dim(), 0) {}
    TruncPoly(const Ring& R, FpVec coeffs) : ring_(&R), c_(std::move(coeffs)) {
        if (c_.size() != R.dim()) throw ArityMismatch("coefficient vector length");
    }

    static TruncPoly zero(const Ring& R) { return TruncPoly(R); }
    static TruncPoly constant(const Ring& R, fp_t v);
    static TruncPoly variable(const Ring& R, int i); // x_i, 1-based
    static TruncPoly monomial(const Ring& R, const std::vector<int>& exps, fp_t coeff = 1);

    const Ring& ring() const { return *ring_; }
    bool attached() const { return ring_ != nullptr; }
    const FpVec& coeffs() const { return c_; }
    fp_t coeff(std::size_t rank) const { return c_[rank]; }
    void set_coeff(std::size_t rank, fp_t v) { c_[rank] = v % ring_->p(); }

    bool is_zero() const;
    fp_t constant_term() const { return c_[0]; }
    std::size_t term_count() const;
    int degree() const; // max total degree of a nonzero term, -1 for 0

    // Sparse view: (rank, coeff) of nonzero terms in lex (= rank) order.
    std::vector<std::pair<std::size_t, fp_t>> terms() const;

    TruncPoly operator-() const;
    TruncPoly& operator+=(const TruncPoly& o);
    TruncPoly& operator-=(const TruncPoly& o);
    friend TruncPoly operator+(TruncPoly a, const TruncPoly& b) { return a += b; }
    friend TruncPoly operator-(TruncPoly a, const TruncPoly& b) { return a -= b; }
    friend TruncPoly operator*(const TruncPoly& a, const TruncPoly& b);
    TruncPoly scaled(fp_t s) const;
    TruncPoly pow(unsigned e) const;

    // Formal partial derivative with respect to x_i (1-based).
    TruncPoly partial(int i) const;

    bool operator==(const TruncPoly& o) const;
    bool operator!=(const TruncPoly& o) const { return !(*this == o); }

private:
    const Ring* ring_;
    FpVec c_;
};

} // namespace rlct
