#pragma once

#include "rlct/restricted_algebra.hpp"
#include "rlct/sympoly.hpp"
#include "rlct/tori.hpp"

namespace rlct {

// --- restricted module actions ----------------------------------------------

// Matrices of an algebra acting on a carrier, indexed by the flat basis of
// the acting algebra.
struct ModuleAction {
    fp_t p = 3;
    std::size_t carrier_dim = 0;
    std::vector<FpMat> rho; // one matrix per basis element

    FpMat matrix_of(const FpVec& x) const;
};

// The derivation algebra acting on its polynomial carrier.
ModuleAction natural_action(const Ring& R);

// rho([x,y]) = [rho x, rho y] and rho(x^[p]) = rho(x)^p on the basis.
bool action_is_restricted(const ModuleAction& M, const LieOps& ops, std::string* why = nullptr);

FpVec action_char_poly(const ModuleAction& M, const FpVec& x);
fp_t psi_coefficient(const ModuleAction& M, const FpVec& x, std::size_t i);

// --- Dickson generators -------------------------------------------------------

// All p^m + 1 coefficients (in T) of prod_{a in F_p^m} (T - sum a_i x_i);
// verifies that coefficients off the p-power degrees vanish.  The psi
// invariants are the entries at T^{p^0}..T^{p^m}.
std::vector<SymPoly> dickson_coefficients(int m, fp_t p);

// Dense T-coefficients of the same product evaluated at a point; independent
// of the symbolic expansion.
FpVec dickson_product_at_point(const FpVec& point, fp_t p);

// --- the invariant p-polynomial -----------------------------------------------

struct QPolyResult {
    PPolynomial q;
    bool degenerate = false; // p-power rank profile below (ell, mu)
};
// Minimal p-polynomial with the (ell, mu) shape check.
QPolyResult q_polynomial(const FpVec& x, const LieOps& ops, std::size_t ell, std::size_t mu);

// Alternating mu-linear coordinate minor; slots are flat coordinate indices.
struct BetaForm {
    fp_t p = 3;
    std::vector<std::size_t> slots;
    fp_t eval(const std::vector<FpVec>& vecs) const;
};

// Coefficient phi_i of the invariant p-polynomial through the minor ratio;
// throws OutsideOmegaBeta when the denominator vanishes.
fp_t phi_via_beta(const FpVec& x, const BetaForm& beta, const LieOps& ops,
                  std::size_t ell, std::size_t mu, std::size_t i);

// --- pointwise restriction identities ------------------------------------------

struct RestrictionReport {
    std::string family;
    int n = 0;
    fp_t p = 3;
    bool toral_points_ok = false;  // char poly = Dickson product ^ p^e at all toral points
    int exponent = -1;             // the empirically determined e
    bool p_polynomiality_ok = false; // semisimple samples: coefficients only at p-powers
    bool q_match_ok = false;       // char poly = per-element Q ^ p^(r-ell) on samples
    int q_exponent = -1;
    int samples_used = 0;
    std::string detail;
};

RestrictionReport restriction_identity_check(Family fam, int n, fp_t p,
                                             std::uint64_t seed, int samples);

} // namespace rlct
