#pragma once

#include "rlct/cartan_family.hpp"
#include "rlct/restricted_algebra.hpp"

namespace rlct {

// The Poisson algebra on 2r truncated variables: {x_i, x_{i+r}} = 1 extended
// as an associative bi-derivation, with the monomial p-map making the center
// toral (or, behind the flag, p-unipotent).
class PoissonAlgebra {
public:
    enum class Center { Toral, Unipotent };

    PoissonAlgebra(int r, fp_t p, Center center = Center::Toral);

    int r() const { return r_; }
    fp_t p() const { return ring_->p(); }
    Center center() const { return center_; }
    const Ring& ring() const { return *ring_; }
    std::size_t dim() const { return ring_->dim(); }

    TruncPoly bracket(const TruncPoly& f, const TruncPoly& g) const;
    // p-map: monomial rule extended to sums by Jacobson's formula.
    TruncPoly p_map(const TruncPoly& f) const;
    TruncPoly monomial_p_rule(std::size_t rank) const;

    Derivation hamiltonian(const TruncPoly& f) const; // D_H

    // Derived subalgebra P^(1) (cached on first use).
    const SubalgebraBasis& derived() const;

    // f -> f + lambda(f) for a functional vanishing on P^(1); lambda is given
    // densely on the carrier.  Throws InvalidForm otherwise.
    TruncPoly phi_lambda(const FpVec& lambda, const TruncPoly& f) const;
    // The functional with value s on x^tau and 0 on P^(1).
    FpVec lambda_from_scalar(fp_t s) const;

    LieOps ops() const;

private:
    int r_;
    Center center_;
    const Ring* ring_;
    mutable SubalgebraBasis derived_;
    mutable bool derived_ready_ = false;
};

// The (r+2)-dimensional algebra with basis z, x, t_1..t_r, relations
// [t_i, x] = delta_{i1} x, t_i^[p] = t_i, x^[p] = z = z^[p].
RestrictedAlgebra build_lr(int r, fp_t p);

struct LrRealization {
    std::vector<TruncPoly> images; // images of z, x, t_1..t_r
    SubalgebraBasis span;
};
LrRealization realize_l_in_poisson(const PoissonAlgebra& P);

// Exact check that z -> images[0], ... preserves brackets and p-maps.
bool lr_realization_is_isomorphism(const PoissonAlgebra& P, const RestrictedAlgebra& lr,
                                   const LrRealization& real, std::string* why = nullptr);

} // namespace rlct
