#include "rlct/ring.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace rlct {

Ring::Ring(int n, fp_t p) : n_(n), p_(p), field_(p) {
    if (n < 1) throw ArityMismatch("need at least one variable");
    std::size_t d = 1;
    for (int i = 0; i < n; ++i) {
        d *= p;
        if (d > (1u << 20)) throw EnvelopeError("p^n too large for dense tables");
    }
    dim_ = d;

    exps_.resize(dim_);
    degree_.resize(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        std::vector<int> e(n);
        std::size_t t = r;
        int deg = 0;
        for (int i = n - 1; i >= 0; --i) {
            e[i] = static_cast<int>(t % p);
            deg += e[i];
            t /= p;
        }
        exps_[r] = std::move(e);
        degree_[r] = deg;
    }

    mul_.assign(dim_ * dim_, kAnnihilated);
    for (std::size_t a = 0; a < dim_; ++a) {
        for (std::size_t b = 0; b < dim_; ++b) {
            std::uint32_t out = 0;
            bool dead = false;
            for (int i = 0; i < n; ++i) {
                int s = exps_[a][i] + exps_[b][i];
                if (s >= static_cast<int>(p)) { dead = true; break; }
                out = out * p + static_cast<std::uint32_t>(s);
            }
            if (!dead) mul_[a * dim_ + b] = out;
        }
    }

    deriv_.resize(n);
    for (int i = 0; i < n; ++i) {
        deriv_[i].resize(dim_);
        std::size_t stride = 1;
        for (int j = n - 1; j > i; --j) stride *= p;
        for (std::size_t r = 0; r < dim_; ++r) {
            int a = exps_[r][i];
            if (a == 0)
                deriv_[i][r] = {0, 0};
            else
                deriv_[i][r] = {static_cast<fp_t>(a), static_cast<std::uint32_t>(r - stride)};
        }
    }
}

std::size_t Ring::rank_of(const std::vector<int>& e) const {
    if (static_cast<int>(e.size()) != n_) throw ArityMismatch("exponent vector length");
    std::size_t r = 0;
    for (int i = 0; i < n_; ++i) {
        if (e[i] < 0 || e[i] >= static_cast<int>(p_))
            throw IndexError("exponent out of [0, p)");
        r = r * p_ + static_cast<std::size_t>(e[i]);
    }
    return r;
}

const Ring& ring(int n, fp_t p) {
    static std::mutex mtx;
    static std::map<std::pair<int, fp_t>, std::unique_ptr<Ring>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(n, p);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<Ring>(n, p)).first;
    return *it->second;
}

} // namespace rlct
