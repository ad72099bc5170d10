#pragma once

#include "rlct/cartan_family.hpp"
#include "rlct/restricted_algebra.hpp"

namespace rlct {

// The truncated polynomial ring on 2r+1 variables as a restricted Lie
// algebra: the carrier is identified with the solution space of the contact
// membership condition through evaluation of the contact form, and bracket
// and p-map are pulled back from the derivation side.  The identification is
// normalized by a single scalar fixed from the bracket value
// <1+x_n, x_r x_{2r} (1+x_n)> = 2 x_r x_{2r} (1+x_n).
class ContactAlgebra {
public:
    ContactAlgebra(int r, fp_t p);

    int r() const { return r_; }
    int n() const { return 2 * r_ + 1; }
    fp_t p() const { return ring_->p(); }
    const Ring& ring() const { return *ring_; }
    std::size_t dim() const { return ring_->dim(); }
    fp_t normalization() const { return c_; }

    const SubalgebraBasis& kpp() const { return kpp_; } // inside W(n)
    const SubalgebraBasis& k() const { return k_; }     // derived algebra, inside W(n)
    // K(n) transported to carrier coordinates.
    const SubalgebraBasis& k_carrier() const { return k_carrier_; }

    Derivation theta(const TruncPoly& f) const;
    TruncPoly theta_inv(const Derivation& D) const;

    TruncPoly bracket(const TruncPoly& f, const TruncPoly& g) const;
    TruncPoly p_map(const TruncPoly& f) const;

    // Degree of the carrier monomial in the contact grading (variables
    // x_1..x_2r of weight 1, x_n of weight 2, shifted by -2).
    int carrier_degree(std::size_t rank) const;

    // Generators of the distinguished torus in carrier coordinates:
    // x_i (1+x_{i+r}) for i <= r and sum_i x_i x_{r+i} - x_n.
    std::vector<TruncPoly> standard_torus() const;
    // The torus x_i x_{i+r}, 1 + x_n used alongside it.
    std::vector<TruncPoly> centralizer_torus() const;

    LieOps ops() const;

private:
    int r_;
    const Ring* ring_;
    SubalgebraBasis kpp_, k_, k_carrier_;
    FpMat theta_mat_;     // carrier coords -> K'' coords (columns act on carrier)
    FpMat theta_inv_mat_; // K'' coords -> carrier coords
    fp_t c_ = 1;
    // Form evaluation pins the identification only up to the symplectic swap
    // x_i <-> x_{i+r}; the swap is fixed so that the standard torus below is
    // abelian.  swap_ is the rank permutation of that substitution.
    bool use_swap_ = false;
    std::vector<std::uint32_t> swap_;
    TruncPoly swapped(const TruncPoly& f) const;
};

} // namespace rlct
