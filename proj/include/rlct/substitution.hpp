#pragma once

#include <vector>

#include "rlct/fpmat.hpp"
#include "rlct/truncpoly.hpp"

namespace rlct {

// Algebra endomorphism of the truncated polynomial ring determined by
// x_i -> images[i].  Images must have zero constant term so that the
// relations x_i^p = 0 are preserved; the unital multiplicative extension is
// materialized as a p^n x p^n matrix over F_p.
class Substitution {
public:
    Substitution(const Ring& R, std::vector<TruncPoly> images);

    const Ring& ring() const { return *ring_; }
    const TruncPoly& image(int i) const; // 1-based
    TruncPoly apply(const TruncPoly& f) const;

    const FpMat& matrix() const { return mat_; }
    bool is_automorphism() const;
    // Inverse of the induced linear map (an algebra automorphism when it
    // exists); throws NotInvertible on singular maps.
    const FpMat& inverse_matrix() const;
    TruncPoly apply_inverse(const TruncPoly& f) const;

    static Substitution identity(const Ring& R);

private:
    const Ring* ring_;
    std::vector<TruncPoly> images_;
    FpMat mat_;
    mutable FpMat inv_;
    mutable bool inv_ready_ = false;
};

} // namespace rlct
