#pragma once

#include <map>
#include <vector>

#include "rlct/derivation.hpp"

namespace rlct {

// Exterior differential form with truncated polynomial coefficients.
// Components are stored on strictly increasing index subsets only; all sign
// bookkeeping goes through merge_sign below.
class DiffForm {
public:
    DiffForm() = default;
    DiffForm(const Ring& R, int degree);

    static DiffForm dx(const Ring& R, int i);                  // 1-based
    static DiffForm from_poly(const TruncPoly& u);             // degree 0

    const Ring& ring() const { return *ring_; }
    int degree() const { return degree_; }
    bool is_zero() const;

    const std::map<std::vector<int>, TruncPoly>& components() const { return comps_; }
    TruncPoly component(const std::vector<int>& subset) const;
    void add_component(const std::vector<int>& subset, const TruncPoly& u);

    DiffForm& operator+=(const DiffForm& o);
    DiffForm& operator-=(const DiffForm& o);
    friend DiffForm operator+(DiffForm a, const DiffForm& b) { return a += b; }
    friend DiffForm operator-(DiffForm a, const DiffForm& b) { return a -= b; }
    DiffForm scaled(fp_t s) const;
    friend DiffForm operator*(const TruncPoly& u, const DiffForm& w); // module action

    bool operator==(const DiffForm& o) const;

    // Flat coordinates: subsets enumerated lexicographically, p^n monomial
    // coordinates per subset.
    FpVec to_vec() const;

private:
    const Ring* ring_ = nullptr;
    int degree_ = 0;
    std::map<std::vector<int>, TruncPoly> comps_;
    void prune(const std::vector<int>& key);
};

// Sign of the shuffle interleaving two disjoint strictly increasing subsets;
// returns 0 when they intersect, and writes the merged subset.
int merge_sign(const std::vector<int>& a, const std::vector<int>& b, std::vector<int>& merged);

// All r-element subsets of {1..n} in lexicographic order (cached).
const std::vector<std::vector<int>>& form_subsets(int n, int r);
std::size_t form_dim(const Ring& R, int r); // C(n,r) * p^n

DiffForm wedge(const DiffForm& a, const DiffForm& b);
DiffForm exterior_d(const TruncPoly& u);
TruncPoly eval_one_form(const DiffForm& w, const Derivation& D);
DiffForm lie_derivative(const Derivation& D, const DiffForm& w);

enum class CartanKind { S, H, K };
DiffForm cartan_form(CartanKind kind, const Ring& R);

} // namespace rlct
