#pragma once

#include "rlct/contact.hpp"
#include "rlct/rng.hpp"

namespace rlct {

// Distinguished split tori, one list per family; W/S/H live in derivation
// coordinates, the contact torus lives on the contact carrier (see
// ContactAlgebra::standard_torus).
std::vector<Derivation> standard_torus_w(const Ring& R);
std::vector<Derivation> standard_torus_s(const Ring& R);
std::vector<Derivation> standard_torus_h(const Ring& R);

// dim of the intersection of the torus span with the non-negative part of
// the filtration (ops.coord_degree must be set).
int f0(const std::vector<FpVec>& torus_gens, const LieOps& ops);

// Upper bound witness for the minimal Cartan subalgebra dimension: the
// dimension of the centralizer of the given torus.
inline std::size_t rank_estimate(const std::vector<FpVec>& torus, const LieOps& ops,
                                 const SubalgebraBasis& within) {
    return centralizer_of(torus, ops, within).dim();
}

// --- weight space machinery -------------------------------------------------

struct WeightSpace {
    std::vector<fp_t> lambda; // eigenvalue of each torus generator
    FpMat basis;              // rows span the weight space
};

struct WeightDecomposition {
    std::size_t carrier_dim = 0;
    std::size_t mu = 0;
    std::vector<WeightSpace> spaces; // lex order on lambda, zero spaces dropped
    const WeightSpace* find(const std::vector<fp_t>& lambda) const;
};

// Simultaneous eigenspace decomposition of commuting semisimple matrices;
// throws NotSemisimple when the eigenspaces do not fill the carrier.
WeightDecomposition weight_decomposition(const std::vector<FpMat>& actions, fp_t p);

// ad t on the coordinates of a subalgebra.
FpMat ad_action_matrix(const SubalgebraBasis& algebra, const LieOps& ops, const FpVec& t);
// Action of a derivation on the polynomial carrier.
FpMat module_action_matrix(const Derivation& D);

// --- the xi/theta/zeta frame ------------------------------------------------

struct ThetaFrame {
    const Ring* R = nullptr;
    std::vector<TruncPoly> xi;      // xi_i = 1 + x_i
    std::vector<Derivation> theta;  // theta_i = xi_i d_i - xi_n d_n, theta_n = xi_n d_n
    TruncPoly zeta;                 // xi_1 ... xi_{n-1} xi_n^{p-1}
    TruncPoly xi_monomial(const std::vector<int>& a) const;
};
ThetaFrame theta_frame(const Ring& R);

// --- substitution realization of the torus normalizer -----------------------

struct WeylElement {
    FpMat A;          // element of GL_n(F_p)
    Substitution mu;  // xi_i -> prod_j xi_j^{A_ji}
    FpMat induced;    // matrix on the torus basis (1+x_i) d_i
};

// Builds the substitution automorphism attached to A, conjugates the torus
// and verifies normalization; throws NotInvertible for singular A.
WeylElement weyl_substitution(const Ring& R, const FpMat& A);

std::vector<FpMat> enumerate_gl(int n, fp_t p);

// --- Cartan subalgebra checks -----------------------------------------------

struct NilpotencyReport {
    bool nilpotent = false;
    std::size_t series_length = 0;
    std::size_t ell = 0;          // dim h - dim torus
    bool powers_land_in_torus = false;
};

NilpotencyReport cartan_nilpotency_check(const SubalgebraBasis& h,
                                         const std::vector<FpVec>& torus,
                                         const LieOps& ops, SplitRng rng, int samples);

} // namespace rlct
