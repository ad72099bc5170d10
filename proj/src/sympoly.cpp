#include "rlct/sympoly.hpp"

#include "rlct/errors.hpp"

namespace rlct {

SymPoly SymPoly::constant(int m, fp_t p, fp_t v) {
    SymPoly f(m, p);
    f.add_term(std::vector<int>(m, 0), v);
    return f;
}

SymPoly SymPoly::variable(int m, fp_t p, int i) {
    if (i < 1 || i > m) throw IndexError("variable index out of range");
    SymPoly f(m, p);
    std::vector<int> e(m, 0);
    e[i - 1] = 1;
    f.add_term(e, 1);
    return f;
}

int SymPoly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (int v : e) t += v;
        if (t > d) d = t;
    }
    return d;
}

void SymPoly::add_term(const std::vector<int>& exps, fp_t c) {
    if (static_cast<int>(exps.size()) != m_) throw ArityMismatch("exponent vector length");
    c %= p_;
    if (!c) {
        return;
    }
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_[exps] = c;
    } else {
        it->second = (it->second + c) % p_;
        if (!it->second) terms_.erase(it);
    }
}

SymPoly SymPoly::operator-() const {
    SymPoly f(m_, p_);
    for (const auto& [e, c] : terms_) f.terms_[e] = p_ - c;
    return f;
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
    if (p_ != o.p_) throw ModulusMismatch("symbolic moduli differ");
    if (m_ != o.m_) throw ArityMismatch("symbolic variable counts differ");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
    if (p_ != o.p_) throw ModulusMismatch("symbolic moduli differ");
    if (m_ != o.m_) throw ArityMismatch("symbolic variable counts differ");
    for (const auto& [e, c] : o.terms_) add_term(e, p_ - c);
    return *this;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
    if (a.p_ != b.p_) throw ModulusMismatch("symbolic moduli differ");
    if (a.m_ != b.m_) throw ArityMismatch("symbolic variable counts differ");
    SymPoly out(a.m_, a.p_);
    std::vector<int> e(a.m_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.m_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, static_cast<fp_t>((static_cast<std::uint64_t>(ca) * cb) % a.p_));
        }
    }
    return out;
}

SymPoly SymPoly::scaled(fp_t s) const {
    SymPoly out(m_, p_);
    s %= p_;
    for (const auto& [e, c] : terms_)
        out.add_term(e, static_cast<fp_t>((static_cast<std::uint64_t>(c) * s) % p_));
    return out;
}

SymPoly SymPoly::subst_linear(const FpMat& A) const {
    if (A.rows() != static_cast<std::size_t>(m_) || A.cols() != static_cast<std::size_t>(m_))
        throw ArityMismatch("substitution matrix shape");
    // linear forms and their powers, computed on demand
    std::vector<SymPoly> forms(m_);
    for (int i = 0; i < m_; ++i) {
        SymPoly f(m_, p_);
        for (int j = 0; j < m_; ++j) {
            std::vector<int> e(m_, 0);
            e[j] = 1;
            f.add_term(e, A.at(i, j));
        }
        forms[i] = std::move(f);
    }
    SymPoly out(m_, p_);
    for (const auto& [e, c] : terms_) {
        SymPoly term = SymPoly::constant(m_, p_, c);
        for (int i = 0; i < m_; ++i)
            for (int k = 0; k < e[i]; ++k) term = term * forms[i];
        out += term;
    }
    return out;
}

fp_t SymPoly::eval(const FpVec& point) const {
    if (point.size() != static_cast<std::size_t>(m_))
        throw ArityMismatch("evaluation point length");
    const PrimeField F(p_);
    fp_t acc = 0;
    for (const auto& [e, c] : terms_) {
        fp_t t = c;
        for (int i = 0; i < m_; ++i)
            if (e[i]) t = F.mul(t, F.pow(point[i], static_cast<std::uint64_t>(e[i])));
        acc = F.add(acc, t);
    }
    return acc;
}

} // namespace rlct
