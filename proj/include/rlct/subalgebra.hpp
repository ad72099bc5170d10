#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rlct/derivation.hpp"
#include "rlct/fpmat.hpp"

namespace rlct {

// Minimal view of an ambient restricted Lie algebra in flat coordinates.
// Subalgebra and torus machinery only ever needs these three hooks plus,
// optionally, the degree of each coordinate for filtration questions.
struct LieOps {
    std::size_t dim = 0;
    fp_t p = 3;
    std::function<FpVec(const FpVec&, const FpVec&)> bracket;
    std::function<FpVec(const FpVec&)> p_power;
    std::function<int(std::size_t)> coord_degree; // may be empty
};

LieOps witt_ops(const Ring& R);

// Subspace of an ambient algebra held as a canonical reduced echelon basis.
class SubalgebraBasis {
public:
    SubalgebraBasis() = default;
    SubalgebraBasis(std::string label, std::size_t ambient_dim, fp_t p);

    static SubalgebraBasis span(std::string label, std::size_t ambient_dim, fp_t p,
                                const std::vector<FpVec>& gens);
    static SubalgebraBasis full(std::string label, std::size_t ambient_dim, fp_t p);

    const std::string& label() const { return label_; }
    void set_label(std::string l) { label_ = std::move(l); }
    std::size_t ambient_dim() const { return ambient_dim_; }
    fp_t p() const { return p_; }
    std::size_t dim() const { return basis_.rows(); }
    const FpMat& basis() const { return basis_; }
    FpVec basis_vector(std::size_t i) const { return basis_.row_vec(i); }

    bool contains(const FpVec& v) const;
    // Coordinates of v in the echelon basis; throws VerificationFailure if
    // v is not contained.
    FpVec coords_of(const FpVec& v) const;
    // Member described by coordinates in the echelon basis.
    FpVec from_coords(const FpVec& c) const;

    bool operator==(const SubalgebraBasis& o) const {
        return ambient_dim_ == o.ambient_dim_ && basis_ == o.basis_;
    }

private:
    std::string label_;
    std::size_t ambient_dim_ = 0;
    fp_t p_ = 3;
    FpMat basis_;
    std::vector<std::size_t> pivots_;
    void refresh_pivots();
};

SubalgebraBasis derived_subalgebra(const SubalgebraBasis& B, const LieOps& ops);
SubalgebraBasis derived_series(const SubalgebraBasis& B, const LieOps& ops, int k);

bool is_bracket_closed(const SubalgebraBasis& B, const LieOps& ops);
bool is_p_closed(const SubalgebraBasis& B, const LieOps& ops);

SubalgebraBasis intersect(const SubalgebraBasis& A, const SubalgebraBasis& B);
SubalgebraBasis join(const SubalgebraBasis& A, const SubalgebraBasis& B);

// Subspace of vectors commuting with every generator of T.
SubalgebraBasis centralizer_of(const std::vector<FpVec>& T, const LieOps& ops,
                               const SubalgebraBasis& within);

} // namespace rlct
