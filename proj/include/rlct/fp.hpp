#pragma once

#include <cstdint>
#include <vector>

#include "rlct/errors.hpp"

namespace rlct {

using fp_t = std::uint32_t;

// Arithmetic context for the prime field F_p.  Residues are plain fp_t
// values in [0, p); the context supplies the operations so that bulk
// kernels can work on raw arrays.
class PrimeField {
public:
    explicit PrimeField(fp_t p) : p_(p) {
        if (p < 3 || !is_prime(p)) throw UsageError("modulus must be a prime >= 3");
    }

    fp_t p() const { return p_; }

    fp_t reduce(long long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return static_cast<fp_t>(r);
    }
    fp_t add(fp_t a, fp_t b) const { fp_t s = a + b; return s >= p_ ? s - p_ : s; }
    fp_t sub(fp_t a, fp_t b) const { return a >= b ? a - b : a + p_ - b; }
    fp_t neg(fp_t a) const { return a == 0 ? 0 : p_ - a; }
    fp_t mul(fp_t a, fp_t b) const {
        return static_cast<fp_t>((static_cast<std::uint64_t>(a) * b) % p_);
    }
    fp_t pow(fp_t a, std::uint64_t e) const {
        fp_t r = 1, b = a % p_;
        while (e) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }
    fp_t inv(fp_t a) const {
        if (a % p_ == 0) throw DivisionByZero("inverse of zero in F_p");
        return pow(a, p_ - 2);
    }
    fp_t div(fp_t a, fp_t b) const { return mul(a, inv(b)); }

    static bool is_prime(fp_t n) {
        if (n < 2) return false;
        for (fp_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    fp_t p_;
};

// A single residue carrying its modulus.  Used at the API surface; bulk
// computations use PrimeField on raw values instead.
struct FpScalar {
    fp_t value = 0;
    fp_t p = 3;

    FpScalar() = default;
    FpScalar(long long v, fp_t p_) : p(p_) { value = PrimeField(p_).reduce(v); }

    static void check(const FpScalar& a, const FpScalar& b) {
        if (a.p != b.p) throw ModulusMismatch("FpScalar moduli differ");
    }

    friend FpScalar operator+(const FpScalar& a, const FpScalar& b) {
        check(a, b);
        return FpScalar(PrimeField(a.p).add(a.value, b.value), a.p);
    }
    friend FpScalar operator-(const FpScalar& a, const FpScalar& b) {
        check(a, b);
        return FpScalar(PrimeField(a.p).sub(a.value, b.value), a.p);
    }
    friend FpScalar operator*(const FpScalar& a, const FpScalar& b) {
        check(a, b);
        return FpScalar(PrimeField(a.p).mul(a.value, b.value), a.p);
    }
    FpScalar inv() const { return FpScalar(PrimeField(p).inv(value), p); }
    FpScalar operator-() const { return FpScalar(PrimeField(p).neg(value), p); }
    bool operator==(const FpScalar& o) const { return value == o.value && p == o.p; }
};

using FpVec = std::vector<fp_t>;

} // namespace rlct
