#include "rlct/diff_form.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace rlct {

DiffForm::DiffForm(const Ring& R, int degree) : ring_(&R), degree_(degree) {
    if (degree < 0 || degree > R.n()) throw DegreeError("form degree out of [0, n]");
}

DiffForm DiffForm::dx(const Ring& R, int i) {
    if (i < 1 || i > R.n()) throw IndexError("dx index out of range");
    DiffForm w(R, 1);
    w.comps_[{i}] = TruncPoly::constant(R, 1);
    return w;
}

DiffForm DiffForm::from_poly(const TruncPoly& u) {
    DiffForm w(u.ring(), 0);
    if (!u.is_zero()) w.comps_[{}] = u;
    return w;
}

bool DiffForm::is_zero() const {
    for (const auto& [s, u] : comps_)
        if (!u.is_zero()) return false;
    return true;
}

TruncPoly DiffForm::component(const std::vector<int>& subset) const {
    auto it = comps_.find(subset);
    if (it == comps_.end()) return TruncPoly::zero(*ring_);
    return it->second;
}

void DiffForm::prune(const std::vector<int>& key) {
    auto it = comps_.find(key);
    if (it != comps_.end() && it->second.is_zero()) comps_.erase(it);
}

void DiffForm::add_component(const std::vector<int>& subset, const TruncPoly& u) {
    if (static_cast<int>(subset.size()) != degree_)
        throw DegreeError("component subset size != form degree");
    if (!std::is_sorted(subset.begin(), subset.end()) ||
        std::adjacent_find(subset.begin(), subset.end()) != subset.end())
        throw IndexError("component subset must be strictly increasing");
    auto it = comps_.find(subset);
    if (it == comps_.end())
        comps_[subset] = u;
    else
        it->second += u;
    prune(subset);
}

DiffForm& DiffForm::operator+=(const DiffForm& o) {
    check_same_ring(*ring_, *o.ring_);
    if (degree_ != o.degree_) throw DegreeError("adding forms of different degrees");
    for (const auto& [s, u] : o.comps_) add_component(s, u);
    return *this;
}

DiffForm& DiffForm::operator-=(const DiffForm& o) {
    check_same_ring(*ring_, *o.ring_);
    if (degree_ != o.degree_) throw DegreeError("subtracting forms of different degrees");
    for (const auto& [s, u] : o.comps_) add_component(s, -u);
    return *this;
}

DiffForm DiffForm::scaled(fp_t s) const {
    DiffForm w(*ring_, degree_);
    for (const auto& [k, u] : comps_) {
        TruncPoly v = u.scaled(s);
        if (!v.is_zero()) w.comps_[k] = std::move(v);
    }
    return w;
}

DiffForm operator*(const TruncPoly& u, const DiffForm& w) {
    DiffForm out(w.ring(), w.degree());
    for (const auto& [k, v] : w.comps_) {
        TruncPoly t = u * v;
        if (!t.is_zero()) out.comps_[k] = std::move(t);
    }
    return out;
}

bool DiffForm::operator==(const DiffForm& o) const {
    if (ring_ == nullptr || o.ring_ == nullptr) return ring_ == o.ring_;
    if (degree_ != o.degree_) return false;
    DiffForm d = *this;
    d -= o;
    return d.is_zero();
}

int merge_sign(const std::vector<int>& a, const std::vector<int>& b, std::vector<int>& merged) {
    merged.clear();
    merged.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    int inversions = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return 0;
        if (a[i] < b[j]) {
            merged.push_back(a[i++]);
        } else {
            // b[j] jumps over the remaining elements of a
            inversions += static_cast<int>(a.size() - i);
            merged.push_back(b[j++]);
        }
    }
    while (i < a.size()) merged.push_back(a[i++]);
    while (j < b.size()) merged.push_back(b[j++]);
    return (inversions % 2 == 0) ? 1 : -1;
}

const std::vector<std::vector<int>>& form_subsets(int n, int r) {
    static std::mutex mtx;
    static std::map<std::pair<int, int>, std::vector<std::vector<int>>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(n, r);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    // lexicographic enumeration of increasing r-subsets of {1..n}
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == r) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v <= n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return cache.emplace(key, std::move(out)).first->second;
}

std::size_t form_dim(const Ring& R, int r) {
    return form_subsets(R.n(), r).size() * R.dim();
}

FpVec DiffForm::to_vec() const {
    const auto& subs = form_subsets(ring_->n(), degree_);
    FpVec v(subs.size() * ring_->dim(), 0);
    for (std::size_t s = 0; s < subs.size(); ++s) {
        auto it = comps_.find(subs[s]);
        if (it == comps_.end()) continue;
        const FpVec& c = it->second.coeffs();
        std::copy(c.begin(), c.end(), v.begin() + s * ring_->dim());
    }
    return v;
}

DiffForm wedge(const DiffForm& a, const DiffForm& b) {
    check_same_ring(a.ring(), b.ring());
    const Ring& R = a.ring();
    if (a.degree() + b.degree() > R.n())
        throw DegreeError("wedge degree exceeds number of variables");
    DiffForm out(R, a.degree() + b.degree());
    std::vector<int> merged;
    for (const auto& [s, u] : a.components()) {
        for (const auto& [t, v] : b.components()) {
            int sg = merge_sign(s, t, merged);
            if (!sg) continue;
            TruncPoly w = u * v;
            if (sg < 0) w = -w;
            out.add_component(merged, w);
        }
    }
    return out;
}

DiffForm exterior_d(const TruncPoly& u) {
    const Ring& R = u.ring();
    DiffForm w(R, 1);
    for (int i = 1; i <= R.n(); ++i) {
        TruncPoly du = u.partial(i);
        if (!du.is_zero()) w.add_component({i}, du);
    }
    return w;
}

TruncPoly eval_one_form(const DiffForm& w, const Derivation& D) {
    if (w.degree() != 1) throw DegreeError("can only evaluate 1-forms on derivations");
    check_same_ring(w.ring(), D.ring());
    TruncPoly out(w.ring());
    for (const auto& [s, u] : w.components()) out += u * D.coeff(s[0]);
    return out;
}

namespace {

// Action on 1-forms through the defining dual formula:
// (D.w)(E) = D(w(E)) - w([D, E]), read off on the basis derivations.
DiffForm lie_derivative_one(const Derivation& D, const DiffForm& w) {
    const Ring& R = w.ring();
    DiffForm out(R, 1);
    for (int j = 1; j <= R.n(); ++j) {
        Derivation pj = Derivation::partial(R, j);
        TruncPoly comp = D.apply(eval_one_form(w, pj)) - eval_one_form(w, bracket(D, pj));
        if (!comp.is_zero()) out.add_component({j}, comp);
    }
    return out;
}

} // namespace

DiffForm lie_derivative(const Derivation& D, const DiffForm& w) {
    check_same_ring(D.ring(), w.ring());
    const Ring& R = w.ring();
    if (w.degree() == 0) return DiffForm::from_poly(D.apply(w.component({})));
    if (w.degree() == 1) return lie_derivative_one(D, w);

    // Leibniz expansion over wedge factors u dx_{i1} ^ dx_{i2} ^ ... ^ dx_{ir}.
    DiffForm out(R, w.degree());
    for (const auto& [s, u] : w.components()) {
        std::vector<DiffForm> factors;
        factors.reserve(s.size());
        factors.push_back(u * DiffForm::dx(R, s[0]));
        for (std::size_t t = 1; t < s.size(); ++t) factors.push_back(DiffForm::dx(R, s[t]));
        for (std::size_t t = 0; t < factors.size(); ++t) {
            DiffForm term = t == 0 ? lie_derivative_one(D, factors[0]) : factors[0];
            for (std::size_t q = 1; q < factors.size(); ++q)
                term = wedge(term, q == t ? lie_derivative_one(D, factors[q]) : factors[q]);
            out += term;
        }
    }
    return out;
}

DiffForm cartan_form(CartanKind kind, const Ring& R) {
    const int n = R.n();
    switch (kind) {
    case CartanKind::S: {
        DiffForm w(R, n);
        std::vector<int> all(n);
        for (int i = 0; i < n; ++i) all[i] = i + 1;
        w.add_component(all, TruncPoly::constant(R, 1));
        return w;
    }
    case CartanKind::H: {
        if (n % 2 != 0) throw ParityError("Hamiltonian form needs n = 2r");
        int r = n / 2;
        DiffForm w(R, 2);
        for (int i = 1; i <= r; ++i)
            w.add_component({i, i + r}, TruncPoly::constant(R, 1));
        return w;
    }
    case CartanKind::K: {
        if (n % 2 != 1) throw ParityError("contact form needs n = 2r+1");
        int r = (n - 1) / 2;
        DiffForm w(R, 1);
        w.add_component({n}, TruncPoly::constant(R, 1));
        for (int i = 1; i <= r; ++i) {
            w.add_component({i}, TruncPoly::variable(R, i + r));
            w.add_component({i + r}, -TruncPoly::variable(R, i));
        }
        return w;
    }
    }
    throw UsageError("unknown differential form kind");
}

} // namespace rlct
