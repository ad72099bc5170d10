#include "rlct/truncpoly.hpp"

namespace rlct {

TruncPoly TruncPoly::constant(const Ring& R, fp_t v) {
    TruncPoly f(R);
    f.c_[0] = v % R.p();
    return f;
}

TruncPoly TruncPoly::variable(const Ring& R, int i) {
    if (i < 1 || i > R.n()) throw IndexError("variable index out of range");
    std::vector<int> e(R.n(), 0);
    e[i - 1] = 1;
    return monomial(R, e);
}

TruncPoly TruncPoly::monomial(const Ring& R, const std::vector<int>& exps, fp_t coeff) {
    TruncPoly f(R);
    f.c_[R.rank_of(exps)] = coeff % R.p();
    return f;
}

bool TruncPoly::is_zero() const {
    for (fp_t v : c_)
        if (v) return false;
    return true;
}

std::size_t TruncPoly::term_count() const {
    std::size_t k = 0;
    for (fp_t v : c_)
        if (v) ++k;
    return k;
}

int TruncPoly::degree() const {
    int d = -1;
    for (std::size_t r = 0; r < c_.size(); ++r)
        if (c_[r] && ring_->total_degree(r) > d) d = ring_->total_degree(r);
    return d;
}

std::vector<std::pair<std::size_t, fp_t>> TruncPoly::terms() const {
    std::vector<std::pair<std::size_t, fp_t>> t;
    for (std::size_t r = 0; r < c_.size(); ++r)
        if (c_[r]) t.emplace_back(r, c_[r]);
    return t;
}

TruncPoly TruncPoly::operator-() const {
    TruncPoly f(*ring_);
    const auto& F = ring_->field();
    for (std::size_t r = 0; r < c_.size(); ++r) f.c_[r] = F.neg(c_[r]);
    return f;
}

TruncPoly& TruncPoly::operator+=(const TruncPoly& o) {
    check_same_ring(*ring_, *o.ring_);
    const auto& F = ring_->field();
    for (std::size_t r = 0; r < c_.size(); ++r) c_[r] = F.add(c_[r], o.c_[r]);
    return *this;
}

TruncPoly& TruncPoly::operator-=(const TruncPoly& o) {
    check_same_ring(*ring_, *o.ring_);
    const auto& F = ring_->field();
    for (std::size_t r = 0; r < c_.size(); ++r) c_[r] = F.sub(c_[r], o.c_[r]);
    return *this;
}

TruncPoly operator*(const TruncPoly& a, const TruncPoly& b) {
    check_same_ring(*a.ring_, *b.ring_);
    const Ring& R = *a.ring_;
    const fp_t p = R.p();
    TruncPoly out(R);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        fp_t ai = a.c_[i];
        if (!ai) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            fp_t bj = b.c_[j];
            if (!bj) continue;
            std::uint32_t t = R.mul_rank(i, j);
            if (t == Ring::kAnnihilated) continue;
            out.c_[t] = static_cast<fp_t>((out.c_[t] + static_cast<std::uint64_t>(ai) * bj) % p);
        }
    }
    return out;
}

TruncPoly TruncPoly::scaled(fp_t s) const {
    TruncPoly f(*ring_);
    const auto& F = ring_->field();
    s %= ring_->p();
    for (std::size_t r = 0; r < c_.size(); ++r) f.c_[r] = F.mul(c_[r], s);
    return f;
}

TruncPoly TruncPoly::pow(unsigned e) const {
    TruncPoly acc = TruncPoly::constant(*ring_, 1);
    for (unsigned k = 0; k < e; ++k) acc = acc * *this;
    return acc;
}

TruncPoly TruncPoly::partial(int i) const {
    if (i < 1 || i > ring_->n()) throw IndexError("variable index out of range");
    const auto& F = ring_->field();
    TruncPoly out(*ring_);
    for (std::size_t r = 0; r < c_.size(); ++r) {
        if (!c_[r]) continue;
        auto d = ring_->deriv(i - 1, r);
        if (d.coeff) out.c_[d.rank] = F.add(out.c_[d.rank], F.mul(d.coeff, c_[r]));
    }
    return out;
}

bool TruncPoly::operator==(const TruncPoly& o) const {
    if (ring_ == nullptr || o.ring_ == nullptr) return ring_ == o.ring_;
    return ring_->n() == o.ring_->n() && ring_->p() == o.ring_->p() && c_ == o.c_;
}

} // namespace rlct
