#include "rlct/derivation.hpp"

#include <climits>

namespace rlct {

Derivation::Derivation(const Ring& R) : ring_(&R), f_(R.n(), TruncPoly(R)) {}

Derivation::Derivation(const Ring& R, std::vector<TruncPoly> coeffs)
    : ring_(&R), f_(std::move(coeffs)) {
    if (static_cast<int>(f_.size()) != R.n())
        throw ArityMismatch("need one coefficient polynomial per variable");
    for (const auto& g : f_) check_same_ring(R, g.ring());
}

Derivation Derivation::partial(const Ring& R, int j) {
    Derivation D(R);
    if (j < 1 || j > R.n()) throw IndexError("derivation index out of range");
    D.f_[j - 1] = TruncPoly::constant(R, 1);
    return D;
}

Derivation Derivation::basis(const Ring& R, std::size_t rank, int j) {
    Derivation D(R);
    if (j < 1 || j > R.n()) throw IndexError("derivation index out of range");
    TruncPoly m(R);
    m.set_coeff(rank, 1);
    D.f_[j - 1] = m;
    return D;
}

Derivation Derivation::from_vec(const Ring& R, const FpVec& v) {
    if (v.size() != witt_dim(R)) throw ArityMismatch("flat vector length mismatch");
    std::vector<TruncPoly> coeffs;
    coeffs.reserve(R.n());
    for (int j = 0; j < R.n(); ++j)
        coeffs.emplace_back(R, FpVec(v.begin() + j * R.dim(), v.begin() + (j + 1) * R.dim()));
    return Derivation(R, std::move(coeffs));
}

const TruncPoly& Derivation::coeff(int j) const {
    if (j < 1 || j > ring_->n()) throw IndexError("derivation index out of range");
    return f_[j - 1];
}

bool Derivation::is_zero() const {
    for (const auto& g : f_)
        if (!g.is_zero()) return false;
    return true;
}

TruncPoly Derivation::apply(const TruncPoly& u) const {
    check_same_ring(*ring_, u.ring());
    TruncPoly out(*ring_);
    for (int j = 1; j <= ring_->n(); ++j) {
        if (f_[j - 1].is_zero()) continue;
        out += f_[j - 1] * u.partial(j);
    }
    return out;
}

Derivation& Derivation::operator+=(const Derivation& o) {
    check_same_ring(*ring_, *o.ring_);
    for (int j = 0; j < ring_->n(); ++j) f_[j] += o.f_[j];
    return *this;
}

Derivation& Derivation::operator-=(const Derivation& o) {
    check_same_ring(*ring_, *o.ring_);
    for (int j = 0; j < ring_->n(); ++j) f_[j] -= o.f_[j];
    return *this;
}

Derivation Derivation::scaled(fp_t s) const {
    Derivation D(*ring_);
    for (int j = 0; j < ring_->n(); ++j) D.f_[j] = f_[j].scaled(s);
    return D;
}

bool Derivation::operator==(const Derivation& o) const {
    if (ring_ == nullptr || o.ring_ == nullptr) return ring_ == o.ring_;
    return f_ == o.f_;
}

FpVec Derivation::to_vec() const {
    FpVec v;
    v.reserve(witt_dim(*ring_));
    for (int j = 0; j < ring_->n(); ++j)
        v.insert(v.end(), f_[j].coeffs().begin(), f_[j].coeffs().end());
    return v;
}

std::map<int, Derivation> Derivation::graded_parts() const {
    std::map<int, Derivation> parts;
    for (int j = 1; j <= ring_->n(); ++j) {
        for (auto [rank, c] : f_[j - 1].terms()) {
            int deg = ring_->total_degree(rank) - 1;
            auto it = parts.find(deg);
            if (it == parts.end()) it = parts.emplace(deg, Derivation(*ring_)).first;
            Derivation add = Derivation::basis(*ring_, rank, j).scaled(c);
            it->second += add;
        }
    }
    return parts;
}

int Derivation::filtration_level() const {
    int lvl = INT_MAX;
    for (int j = 1; j <= ring_->n(); ++j)
        for (auto [rank, c] : f_[j - 1].terms()) {
            (void)c;
            int deg = ring_->total_degree(rank) - 1;
            if (deg < lvl) lvl = deg;
        }
    return lvl;
}

std::size_t witt_dim(const Ring& R) { return static_cast<std::size_t>(R.n()) * R.dim(); }

std::size_t witt_index(const Ring& R, int j, std::size_t rank) {
    return static_cast<std::size_t>(j) * R.dim() + rank;
}

int witt_basis_degree(const Ring& R, std::size_t flat_index) {
    return R.total_degree(flat_index % R.dim()) - 1;
}

Derivation bracket(const Derivation& D, const Derivation& E) {
    check_same_ring(D.ring(), E.ring());
    const Ring& R = D.ring();
    std::vector<TruncPoly> coeffs;
    coeffs.reserve(R.n());
    for (int j = 1; j <= R.n(); ++j)
        coeffs.push_back(D.apply(E.coeff(j)) - E.apply(D.coeff(j)));
    return Derivation(R, std::move(coeffs));
}

Derivation p_power(const Derivation& D) {
    const Ring& R = D.ring();
    std::vector<TruncPoly> coeffs;
    coeffs.reserve(R.n());
    for (int i = 1; i <= R.n(); ++i) {
        TruncPoly u = TruncPoly::variable(R, i);
        for (fp_t k = 0; k < R.p(); ++k) u = D.apply(u);
        coeffs.push_back(std::move(u));
    }
    return Derivation(R, std::move(coeffs));
}

TruncPoly divergence(const Derivation& D) {
    const Ring& R = D.ring();
    TruncPoly out(R);
    for (int j = 1; j <= R.n(); ++j) out += D.coeff(j).partial(j);
    return out;
}

Derivation conjugate(const Substitution& mu, const Derivation& D) {
    const Ring& R = D.ring();
    check_same_ring(R, mu.ring());
    std::vector<TruncPoly> coeffs;
    coeffs.reserve(R.n());
    for (int i = 1; i <= R.n(); ++i) {
        TruncPoly u = mu.apply_inverse(TruncPoly::variable(R, i));
        coeffs.push_back(mu.apply(D.apply(u)));
    }
    return Derivation(R, std::move(coeffs));
}

} // namespace rlct
