#pragma once

#include <cstdint>
#include <vector>

#include "rlct/fp.hpp"

namespace rlct {

// Shared context for the truncated polynomial ring in n variables over F_p
// (all relations x_i^p = 0).  Monomials are indexed by their rank in the
// lexicographic order of exponent vectors, with the first exponent most
// significant, so rank order == lex order.  The context precomputes the
// monomial multiplication and differentiation tables used by the dense
// kernels.
class Ring {
public:
    static constexpr std::uint32_t kAnnihilated = 0xffffffffu;

    Ring(int n, fp_t p);

    int n() const { return n_; }
    fp_t p() const { return p_; }
    std::size_t dim() const { return dim_; } // p^n
    const PrimeField& field() const { return field_; }

    const std::vector<int>& exponents(std::size_t rank) const { return exps_[rank]; }
    std::size_t rank_of(const std::vector<int>& e) const;
    int total_degree(std::size_t rank) const { return degree_[rank]; }

    // rank of x^a * x^b, or kAnnihilated if some exponent reaches p.
    std::uint32_t mul_rank(std::size_t a, std::size_t b) const {
        return mul_[a * dim_ + b];
    }

    // d/dx_i of the monomial with the given rank: (coefficient, rank of
    // the derivative); coefficient 0 when the exponent of x_i is 0.
    struct DerivEntry {
        fp_t coeff;
        std::uint32_t rank;
    };
    DerivEntry deriv(int i, std::size_t rank) const { return deriv_[i][rank]; }

    bool operator==(const Ring& o) const { return n_ == o.n_ && p_ == o.p_; }

private:
    int n_;
    fp_t p_;
    std::size_t dim_;
    PrimeField field_;
    std::vector<std::vector<int>> exps_;
    std::vector<int> degree_;
    std::vector<std::uint32_t> mul_;
    std::vector<std::vector<DerivEntry>> deriv_;
};

// Cached, process-wide ring contexts (thread-safe construction).
const Ring& ring(int n, fp_t p);

inline void check_same_ring(const Ring& a, const Ring& b) {
    if (a.p() != b.p()) throw ModulusMismatch("rings have different moduli");
    if (a.n() != b.n()) throw ArityMismatch("rings have different variable counts");
}

} // namespace rlct
