#pragma once

#include <map>
#include <vector>

#include "rlct/substitution.hpp"
#include "rlct/truncpoly.hpp"

namespace rlct {

// Element of the derivation algebra of the truncated polynomial ring,
// stored as the coefficient polynomials of d/dx_1 .. d/dx_n.
class Derivation {
public:
    Derivation() = default;
    explicit Derivation(const Ring& R);
    Derivation(const Ring& R, std::vector<TruncPoly> coeffs);

    static Derivation partial(const Ring& R, int j);             // d/dx_j
    static Derivation basis(const Ring& R, std::size_t rank, int j); // x^a d/dx_j
    static Derivation from_vec(const Ring& R, const FpVec& v);

    const Ring& ring() const { return *ring_; }
    const TruncPoly& coeff(int j) const; // 1-based
    bool is_zero() const;

    TruncPoly apply(const TruncPoly& u) const;

    Derivation& operator+=(const Derivation& o);
    Derivation& operator-=(const Derivation& o);
    friend Derivation operator+(Derivation a, const Derivation& b) { return a += b; }
    friend Derivation operator-(Derivation a, const Derivation& b) { return a -= b; }
    Derivation scaled(fp_t s) const;
    Derivation operator-() const { return scaled(ring_->p() - 1); }

    bool operator==(const Derivation& o) const;
    bool operator!=(const Derivation& o) const { return !(*this == o); }

    // Flat coordinates: index j * p^n + rank for the basis element x^a d/dx_j.
    FpVec to_vec() const;

    // Decomposition along the standard grading (degree of x^a d/dx_j is
    // |a| - 1) and the induced filtration level (minimal degree of a nonzero
    // homogeneous part; INT_MAX for the zero derivation).
    std::map<int, Derivation> graded_parts() const;
    int filtration_level() const;

private:
    const Ring* ring_ = nullptr;
    std::vector<TruncPoly> f_;
};

std::size_t witt_dim(const Ring& R);                       // n * p^n
std::size_t witt_index(const Ring& R, int j, std::size_t rank); // j 0-based
int witt_basis_degree(const Ring& R, std::size_t flat_index);

Derivation bracket(const Derivation& D, const Derivation& E);
Derivation p_power(const Derivation& D);       // p-fold operator power
TruncPoly divergence(const Derivation& D);

// mu . D . mu^{-1} for an automorphism mu of the ring.
Derivation conjugate(const Substitution& mu, const Derivation& D);

} // namespace rlct
