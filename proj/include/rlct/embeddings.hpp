#pragma once

#include "rlct/poisson.hpp"

namespace rlct {

// A linear map between restricted Lie algebras in fixed flat bases, together
// with the exhaustive homomorphism verification the construction runs.
struct EmbeddingMap {
    std::string label;
    fp_t p = 3;
    std::size_t src_dim = 0, dst_dim = 0;
    FpMat matrix; // dst_dim x src_dim, columns are images of source basis

    FpVec apply(const FpVec& x) const { return mat_vec(matrix, x); }
};

struct EmbeddingVerification {
    bool injective = false;
    bool brackets_preserved = false;
    bool pmaps_preserved = false;
    bool image_contained = true; // true when no target given
    std::string first_failure;
    bool ok() const {
        return injective && brackets_preserved && pmaps_preserved && image_contained;
    }
};

// Exhaustive check on all source basis pairs / elements; target, when given,
// receives the image-membership test.
EmbeddingVerification verify_embedding(const EmbeddingMap& e, const LieOps& src,
                                       const LieOps& dst,
                                       const SubalgebraBasis* target = nullptr);

// D |-> D - Div(D) x_n d_n, from the derivation algebra on n-1 variables
// into the special algebra on n.
EmbeddingMap sigma(int n, fp_t p);
// sum f_j d_j |-> sum x_j f_j(x_{r+1},..,x_{2r}) into the Poisson carrier.
EmbeddingMap phi(int r, fp_t p);
// Composite with the Hamiltonian map, landing in H(2r).
EmbeddingMap phi_H(int r, fp_t p);

// Extension helpers between rings with the same p.
TruncPoly extend_poly(const Ring& Rn, const TruncPoly& f);
Derivation extend_derivation(const Ring& Rn, const Derivation& D);

} // namespace rlct
