#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rlct/subalgebra.hpp"

namespace rlct {

// p-polynomial sum_i c[i] T^{p^i} with exact F_p coefficients.
struct PPolynomial {
    fp_t p = 3;
    FpVec c; // index i multiplies T^{p^i}

    std::size_t pdegree() const { return c.empty() ? 0 : c.size() - 1; }
    bool is_monic() const { return !c.empty() && c.back() == 1; }
    fp_t coeff(std::size_t i) const { return i < c.size() ? c[i] : 0; }

    // (sum c_i T^{p^i})^{p^e}; over F_p this just shifts the indices.
    PPolynomial power_pe(unsigned e) const;
    // Dense coefficient vector, degree p^pdegree.
    FpVec to_plain() const;
    static std::optional<PPolynomial> from_plain(const FpVec& poly, fp_t p);

    bool operator==(const PPolynomial& o) const { return p == o.p && c == o.c; }
};

// --- Jacobson machinery over an arbitrary bracket ------------------------

// s_1..s_{p-1} defined by ad(lambda x + y)^{p-1}(x) = sum_i i s_i lambda^{i-1},
// computed with a formal lambda carrier truncated at degree p-1.
std::vector<FpVec> jacobson_s_terms(const LieOps& ops, const FpVec& x, const FpVec& y);

// p-map of an arbitrary element from the p-map on "terms": folds over the
// nonzero coordinates in index order, extending by Jacobson's formula.
// term_p_power(i, c) must return the p-map of c * e_i.
FpVec p_power_by_terms(const LieOps& ops, const FpVec& x,
                       const std::function<FpVec(std::size_t, fp_t)>& term_p_power);

// --- abstract algebras from structure constants ---------------------------

class RestrictedAlgebra {
public:
    enum class Validate { Auto, Full, Sampled, Skip };

    RestrictedAlgebra(std::vector<std::string> labels,
                      std::vector<std::vector<FpVec>> brackets, // full dim x dim table
                      std::vector<FpVec> pmap, fp_t p,
                      Validate mode = Validate::Auto);

    fp_t p() const { return p_; }
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const FpVec& basis_bracket(std::size_t i, std::size_t j) const { return sc_[i][j]; }
    const FpVec& basis_p_power(std::size_t i) const { return pmap_[i]; }

    FpVec bracket(const FpVec& x, const FpVec& y) const;
    FpVec p_power(const FpVec& x) const; // Jacobson extension of the basis p-map
    FpMat ad_matrix(const FpVec& x) const;

    LieOps ops() const;

private:
    fp_t p_;
    std::size_t dim_;
    std::vector<std::string> labels_;
    std::vector<std::vector<FpVec>> sc_;
    std::vector<FpVec> pmap_;
    void validate(Validate mode) const;
};

// Structure constants of a bracket- and p-closed subalgebra relative to its
// echelon basis; throws ClosureError when the input is not closed.
RestrictedAlgebra from_subalgebra(const SubalgebraBasis& B, const LieOps& ambient,
                                  const std::string& label = "");

// --- one-generated p-subalgebras ------------------------------------------

struct PClosure {
    std::vector<FpVec> powers;      // x, x^[p], ..., x^[p]^{d-1}
    std::size_t d = 0;              // dim (kx)_p
    FpMat pmat;                     // matrix of [p] on the powers basis
    std::vector<FpVec> torus_part;  // basis of t_x
    std::vector<FpVec> nil_part;    // basis of n_x
    FpVec x_s, x_n;                 // Jordan-Chevalley components of x
};

PClosure p_closure(const FpVec& x, const LieOps& ops);
std::pair<FpVec, FpVec> jordan_chevalley(const FpVec& x, const LieOps& ops);
PPolynomial minimal_p_polynomial(const FpVec& x, const LieOps& ops);
FpVec evaluate_p_polynomial(const PPolynomial& q, const FpVec& x, const LieOps& ops);

// --- torus predicates ------------------------------------------------------

struct TorusCheck {
    bool abelian = false;
    bool p_closed = false;
    bool p_bijective = false;
    bool ok() const { return abelian && p_closed && p_bijective; }
};
TorusCheck torus_check(const std::vector<FpVec>& basis, const LieOps& ops);

// F_p-basis of {t in V : t^[p] = t} when it spans V (split torus), else
// nullopt.
std::optional<std::vector<FpVec>> toral_basis(const std::vector<FpVec>& basis,
                                              const LieOps& ops);

bool is_p_unipotent(const std::vector<FpVec>& basis, const LieOps& ops);

// Coordinates of target in the given spanning set, if contained.
std::optional<FpVec> solve_coords(const std::vector<FpVec>& basis, const FpVec& target,
                                  fp_t p);

} // namespace rlct
