#pragma once

#include <map>
#include <vector>

#include "rlct/fpmat.hpp"

namespace rlct {

// Sparse polynomial over F_p in m variables with unbounded exponents (unlike
// the truncated ring).  Canonical form: sorted exponent map, no zeros.
class SymPoly {
public:
    SymPoly() : p_(3), m_(0) {}
    SymPoly(int m, fp_t p) : p_(p), m_(m) {}

    static SymPoly constant(int m, fp_t p, fp_t v);
    static SymPoly variable(int m, fp_t p, int i); // 1-based

    int vars() const { return m_; }
    fp_t p() const { return p_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;
    std::size_t term_count() const { return terms_.size(); }
    const std::map<std::vector<int>, fp_t>& terms() const { return terms_; }

    void add_term(const std::vector<int>& exps, fp_t c);

    SymPoly operator-() const;
    SymPoly& operator+=(const SymPoly& o);
    SymPoly& operator-=(const SymPoly& o);
    friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
    friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
    friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
    SymPoly scaled(fp_t s) const;

    // x_i -> sum_j A(i,j) x_j.
    SymPoly subst_linear(const FpMat& A) const;
    fp_t eval(const FpVec& point) const;

    bool operator==(const SymPoly& o) const {
        return p_ == o.p_ && m_ == o.m_ && terms_ == o.terms_;
    }

private:
    fp_t p_;
    int m_;
    std::map<std::vector<int>, fp_t> terms_;
};

} // namespace rlct
