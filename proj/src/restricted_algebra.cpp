#include "rlct/restricted_algebra.hpp"

#include "rlct/rng.hpp"

namespace rlct {

PPolynomial PPolynomial::power_pe(unsigned e) const {
    PPolynomial out;
    out.p = p;
    out.c.assign(e, 0);
    out.c.insert(out.c.end(), c.begin(), c.end());
    return out;
}

FpVec PPolynomial::to_plain() const {
    std::size_t deg = 1;
    for (std::size_t i = 0; i < pdegree(); ++i) deg *= p;
    FpVec v(deg + 1, 0);
    std::size_t q = 1;
    for (std::size_t i = 0; i < c.size(); ++i) {
        v[q] = c[i];
        q *= p;
    }
    return v;
}

std::optional<PPolynomial> PPolynomial::from_plain(const FpVec& poly, fp_t p) {
    PPolynomial out;
    out.p = p;
    std::size_t q = 1;
    for (std::size_t d = 0; d < poly.size(); ++d) {
        if (d == q) {
            out.c.push_back(poly[d]);
            q *= p;
        } else if (poly[d] != 0) {
            return std::nullopt; // nonzero coefficient off the p-power degrees
        }
    }
    while (!out.c.empty() && out.c.back() == 0) out.c.pop_back();
    return out;
}

std::vector<FpVec> jacobson_s_terms(const LieOps& ops, const FpVec& x, const FpVec& y) {
    const fp_t p = ops.p;
    const PrimeField F(p);
    // elements of g (x) k[lambda]/(lambda^p): one coordinate vector per degree
    std::vector<FpVec> w(p, FpVec(ops.dim, 0));
    w[0] = x;
    for (fp_t k = 0; k + 1 < p; ++k) {
        std::vector<FpVec> nw(p, FpVec(ops.dim, 0));
        for (fp_t d = 0; d < p; ++d) {
            // [lambda x + y, w_d] contributes at degrees d+1 and d
            FpVec yb = ops.bracket(y, w[d]);
            for (std::size_t i = 0; i < ops.dim; ++i) nw[d][i] = F.add(nw[d][i], yb[i]);
            if (d + 1 < p) {
                FpVec xb = ops.bracket(x, w[d]);
                for (std::size_t i = 0; i < ops.dim; ++i)
                    nw[d + 1][i] = F.add(nw[d + 1][i], xb[i]);
            }
        }
        w = std::move(nw);
    }
    std::vector<FpVec> s(p - 1);
    for (fp_t i = 1; i < p; ++i) {
        fp_t inv = F.inv(i);
        s[i - 1] = w[i - 1];
        for (auto& v : s[i - 1]) v = F.mul(v, inv);
    }
    return s;
}

FpVec p_power_by_terms(const LieOps& ops, const FpVec& x,
                       const std::function<FpVec(std::size_t, fp_t)>& term_p_power) {
    const PrimeField F(ops.p);
    FpVec partial(ops.dim, 0);
    FpVec value(ops.dim, 0);
    bool first = true;
    for (std::size_t i = 0; i < ops.dim; ++i) {
        if (!x[i]) continue;
        FpVec term(ops.dim, 0);
        term[i] = x[i];
        FpVec tp = term_p_power(i, x[i]);
        if (first) {
            value = tp;
            partial = term;
            first = false;
            continue;
        }
        auto s = jacobson_s_terms(ops, partial, term);
        for (std::size_t k = 0; k < ops.dim; ++k) {
            fp_t acc = F.add(value[k], tp[k]);
            for (const auto& si : s) acc = F.add(acc, si[k]);
            value[k] = acc;
        }
        for (std::size_t k = 0; k < ops.dim; ++k) partial[k] = F.add(partial[k], term[k]);
    }
    return value;
}

RestrictedAlgebra::RestrictedAlgebra(std::vector<std::string> labels,
                                     std::vector<std::vector<FpVec>> brackets,
                                     std::vector<FpVec> pmap, fp_t p, Validate mode)
    : p_(p), dim_(labels.size()), labels_(std::move(labels)), sc_(std::move(brackets)),
      pmap_(std::move(pmap)) {
    if (sc_.size() != dim_ || pmap_.size() != dim_)
        throw ArityMismatch("structure constant table shape mismatch");
    for (const auto& row : sc_) {
        if (row.size() != dim_) throw ArityMismatch("structure constant table shape mismatch");
        for (const auto& v : row)
            if (v.size() != dim_) throw ArityMismatch("structure constant vector length");
    }
    validate(mode);
}

void RestrictedAlgebra::validate(Validate mode) const {
    if (mode == Validate::Skip) return;
    const PrimeField F(p_);

    // antisymmetry, always exhaustive
    for (std::size_t i = 0; i < dim_; ++i) {
        for (fp_t v : sc_[i][i])
            if (v) throw VerificationFailure("[b_i, b_i] != 0 in structure constants");
        for (std::size_t j = i + 1; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k)
                if (sc_[i][j][k] != F.neg(sc_[j][i][k]))
                    throw VerificationFailure("structure constants not antisymmetric");
    }

    auto jacobi_triple = [&](std::size_t i, std::size_t j, std::size_t k) {
        FpVec acc(dim_, 0);
        auto add_term = [&](std::size_t a, const FpVec& w) {
            // [b_a, w]
            for (std::size_t m = 0; m < dim_; ++m) {
                if (!w[m]) continue;
                const FpVec& bm = sc_[a][m];
                for (std::size_t t = 0; t < dim_; ++t)
                    acc[t] = F.add(acc[t], F.mul(w[m], bm[t]));
            }
        };
        add_term(i, sc_[j][k]);
        add_term(j, sc_[k][i]);
        add_term(k, sc_[i][j]);
        for (fp_t v : acc)
            if (v) throw VerificationFailure("Jacobi identity fails on basis triple");
    };

    bool full = mode == Validate::Full || (mode == Validate::Auto && dim_ <= 32);
    if (full) {
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i + 1; j < dim_; ++j)
                for (std::size_t k = j + 1; k < dim_; ++k) jacobi_triple(i, j, k);
    } else {
        SplitRng rng(0x4a41434f42490000ULL ^ dim_);
        for (int t = 0; t < 4096; ++t)
            jacobi_triple(rng.below(dim_), rng.below(dim_), rng.below(dim_));
    }

    // ad(b^[p]) = (ad b)^p on every basis element
    for (std::size_t i = 0; i < dim_; ++i) {
        FpVec e(dim_, 0);
        e[i] = 1;
        FpMat adb = ad_matrix(e);
        FpMat pw = FpMat::identity(dim_, p_);
        for (fp_t k = 0; k < p_; ++k) pw = mat_mul(pw, adb);
        FpMat adp = ad_matrix(pmap_[i]);
        if (!(pw == adp))
            throw VerificationFailure("ad(b^[p]) != (ad b)^p for basis element " + labels_[i]);
    }
}

FpVec RestrictedAlgebra::bracket(const FpVec& x, const FpVec& y) const {
    const PrimeField F(p_);
    FpVec out(dim_, 0);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (!x[i]) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (!y[j]) continue;
            fp_t c = F.mul(x[i], y[j]);
            const FpVec& v = sc_[i][j];
            for (std::size_t k = 0; k < dim_; ++k)
                if (v[k]) out[k] = F.add(out[k], F.mul(c, v[k]));
        }
    }
    return out;
}

FpVec RestrictedAlgebra::p_power(const FpVec& x) const {
    const PrimeField F(p_);
    LieOps o = ops();
    return p_power_by_terms(o, x, [&](std::size_t i, fp_t c) {
        FpVec v = pmap_[i];
        for (auto& t : v) t = F.mul(t, c); // c^p = c over F_p
        return v;
    });
}

FpMat RestrictedAlgebra::ad_matrix(const FpVec& x) const {
    const PrimeField F(p_);
    FpMat m(dim_, dim_, p_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (!x[i]) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            const FpVec& v = sc_[i][j];
            for (std::size_t k = 0; k < dim_; ++k)
                if (v[k]) m.at(k, j) = F.add(m.at(k, j), F.mul(x[i], v[k]));
        }
    }
    return m;
}

LieOps RestrictedAlgebra::ops() const {
    LieOps o;
    o.dim = dim_;
    o.p = p_;
    o.bracket = [this](const FpVec& a, const FpVec& b) { return bracket(a, b); };
    o.p_power = [this](const FpVec& a) { return p_power(a); };
    return o;
}

RestrictedAlgebra from_subalgebra(const SubalgebraBasis& B, const LieOps& ambient,
                                  const std::string& label) {
    const std::size_t d = B.dim();
    std::vector<std::string> labels(d);
    for (std::size_t i = 0; i < d; ++i)
        labels[i] = (label.empty() ? B.label() : label) + "[" + std::to_string(i) + "]";

    std::vector<std::vector<FpVec>> sc(d, std::vector<FpVec>(d, FpVec(d, 0)));
    std::vector<FpVec> pmap(d);
    try {
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                if (i == j) continue;
                sc[i][j] = B.coords_of(ambient.bracket(B.basis_vector(i), B.basis_vector(j)));
            }
            pmap[i] = B.coords_of(ambient.p_power(B.basis_vector(i)));
        }
    } catch (const VerificationFailure&) {
        throw ClosureError("subalgebra is not bracket- and p-map-closed");
    }
    return RestrictedAlgebra(std::move(labels), std::move(sc), std::move(pmap), B.p());
}

std::optional<FpVec> solve_coords(const std::vector<FpVec>& basis, const FpVec& target,
                                  fp_t p) {
    if (basis.empty()) {
        for (fp_t v : target)
            if (v) return std::nullopt;
        return FpVec{};
    }
    const std::size_t n = basis[0].size(), k = basis.size();
    FpMat M(n, k + 1, p);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < n; ++i) M.at(i, j) = basis[j][i];
    for (std::size_t i = 0; i < n; ++i) M.at(i, k) = target[i];
    Echelon e = rref(std::move(M));
    FpVec x(k, 0);
    for (std::size_t r = 0; r < e.rank; ++r) {
        if (e.pivots[r] == k) return std::nullopt; // inconsistent
        x[e.pivots[r]] = e.m.at(r, k);
    }
    return x;
}

PClosure p_closure(const FpVec& x, const LieOps& ops) {
    PClosure out;
    const PrimeField F(ops.p);
    SpanBuilder sb(ops.dim, ops.p);
    FpVec v = x;
    while (sb.add(v)) {
        out.powers.push_back(v);
        v = ops.p_power(v);
    }
    out.d = out.powers.size();
    const std::size_t d = out.d;
    out.x_s.assign(ops.dim, 0);
    out.x_n.assign(ops.dim, 0);
    out.pmat = FpMat(d, d, ops.p);
    if (d == 0) return out;

    for (std::size_t i = 0; i + 1 < d; ++i) out.pmat.at(i + 1, i) = 1;
    auto last = solve_coords(out.powers, v, ops.p);
    if (!last) throw VerificationFailure("p-closure iteration left its own span");
    for (std::size_t i = 0; i < d; ++i) out.pmat.at(i, d - 1) = (*last)[i];

    // Fitting decomposition of the p-map on (kx)_p: torus = im(P^d),
    // nil = ker(P^d).  Over F_p the p-map is linear on an abelian p-algebra.
    FpMat Pm = FpMat::identity(d, ops.p);
    for (std::size_t i = 0; i < d; ++i) Pm = mat_mul(Pm, out.pmat);
    Echelon img = rref(transpose(Pm));
    FpMat ker_m = kernel(Pm);

    auto to_ambient = [&](const FpVec& c) {
        FpVec a(ops.dim, 0);
        for (std::size_t i = 0; i < d; ++i) {
            if (!c[i]) continue;
            for (std::size_t j = 0; j < ops.dim; ++j)
                a[j] = F.add(a[j], F.mul(c[i], out.powers[i][j]));
        }
        return a;
    };

    std::vector<FpVec> split_basis;
    for (std::size_t i = 0; i < img.rank; ++i) {
        out.torus_part.push_back(to_ambient(img.m.row_vec(i)));
        split_basis.push_back(img.m.row_vec(i));
    }
    for (std::size_t i = 0; i < ker_m.rows(); ++i) {
        out.nil_part.push_back(to_ambient(ker_m.row_vec(i)));
        split_basis.push_back(ker_m.row_vec(i));
    }
    if (split_basis.size() != d)
        throw VerificationFailure("Fitting decomposition is not a direct sum");

    FpVec e0(d, 0);
    e0[0] = 1; // x in closure coordinates
    auto coeffs = solve_coords(split_basis, e0, ops.p);
    if (!coeffs) throw VerificationFailure("Fitting decomposition does not span");
    FpVec xs_c(d, 0), xn_c(d, 0);
    for (std::size_t i = 0; i < split_basis.size(); ++i) {
        if (!(*coeffs)[i]) continue;
        auto& tgt = i < img.rank ? xs_c : xn_c;
        for (std::size_t j = 0; j < d; ++j)
            tgt[j] = F.add(tgt[j], F.mul((*coeffs)[i], split_basis[i][j]));
    }
    out.x_s = to_ambient(xs_c);
    out.x_n = to_ambient(xn_c);
    return out;
}

std::pair<FpVec, FpVec> jordan_chevalley(const FpVec& x, const LieOps& ops) {
    PClosure pc = p_closure(x, ops);
    return {pc.x_s, pc.x_n};
}

PPolynomial minimal_p_polynomial(const FpVec& x, const LieOps& ops) {
    PPolynomial q;
    q.p = ops.p;
    PClosure pc = p_closure(x, ops);
    if (pc.d == 0) {
        q.c = {1}; // minimal annihilator of 0 is T
        return q;
    }
    // coefficients of x^[p]^d in the powers basis give the dependence
    FpVec v = x;
    for (std::size_t i = 0; i < pc.d; ++i) v = ops.p_power(v);
    auto dep = solve_coords(pc.powers, v, ops.p);
    if (!dep) throw VerificationFailure("p-power dependence vanished");
    const PrimeField F(ops.p);
    q.c.assign(pc.d + 1, 0);
    for (std::size_t i = 0; i < pc.d; ++i) q.c[i] = F.neg((*dep)[i]);
    q.c[pc.d] = 1;
    return q;
}

FpVec evaluate_p_polynomial(const PPolynomial& q, const FpVec& x, const LieOps& ops) {
    const PrimeField F(ops.p);
    FpVec acc(ops.dim, 0);
    FpVec pw = x;
    for (std::size_t i = 0; i < q.c.size(); ++i) {
        if (q.c[i])
            for (std::size_t j = 0; j < ops.dim; ++j)
                acc[j] = F.add(acc[j], F.mul(q.c[i], pw[j]));
        if (i + 1 < q.c.size()) pw = ops.p_power(pw);
    }
    return acc;
}

TorusCheck torus_check(const std::vector<FpVec>& basis, const LieOps& ops) {
    TorusCheck tc;
    tc.abelian = true;
    for (std::size_t i = 0; i < basis.size() && tc.abelian; ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            FpVec b = ops.bracket(basis[i], basis[j]);
            for (fp_t v : b)
                if (v) { tc.abelian = false; break; }
            if (!tc.abelian) break;
        }

    SpanBuilder sb(ops.dim, ops.p);
    for (const auto& b : basis) sb.add(b);
    std::vector<FpVec> images;
    tc.p_closed = true;
    for (const auto& b : basis) {
        FpVec pb = ops.p_power(b);
        if (!sb.contains(pb)) tc.p_closed = false;
        images.push_back(std::move(pb));
    }
    if (tc.p_closed) {
        SpanBuilder im(ops.dim, ops.p);
        std::size_t r = 0;
        for (const auto& v : images)
            if (im.add(v)) ++r;
        tc.p_bijective = (r == sb.rank());
    }
    return tc;
}

std::optional<std::vector<FpVec>> toral_basis(const std::vector<FpVec>& basis,
                                              const LieOps& ops) {
    TorusCheck tc = torus_check(basis, ops);
    if (!tc.abelian || !tc.p_closed) return std::nullopt;
    // independent spanning set
    SpanBuilder sb(ops.dim, ops.p);
    std::vector<FpVec> ind;
    for (const auto& b : basis)
        if (sb.add(b)) ind.push_back(b);
    const std::size_t d = ind.size();
    // matrix of [p] on V minus identity; solution set of t^[p] = t
    FpMat M(d, d, ops.p);
    const PrimeField F(ops.p);
    for (std::size_t j = 0; j < d; ++j) {
        auto c = solve_coords(ind, ops.p_power(ind[j]), ops.p);
        if (!c) return std::nullopt;
        for (std::size_t i = 0; i < d; ++i) M.at(i, j) = (*c)[i];
        M.at(j, j) = F.sub(M.at(j, j), 1);
    }
    FpMat K = kernel(M);
    if (K.rows() != d) return std::nullopt; // torus exists but is not split over F_p
    std::vector<FpVec> out;
    for (std::size_t k = 0; k < d; ++k) {
        FpVec t(ops.dim, 0);
        for (std::size_t j = 0; j < d; ++j)
            if (K.at(k, j))
                for (std::size_t i = 0; i < ops.dim; ++i)
                    t[i] = F.add(t[i], F.mul(K.at(k, j), ind[j][i]));
        out.push_back(std::move(t));
    }
    return out;
}

bool is_p_unipotent(const std::vector<FpVec>& basis, const LieOps& ops) {
    for (const auto& b : basis) {
        FpVec v = b;
        bool zero = false;
        for (std::size_t it = 0; it <= ops.dim && !zero; ++it) {
            zero = true;
            for (fp_t t : v)
                if (t) { zero = false; break; }
            if (!zero) v = ops.p_power(v);
        }
        if (!zero) return false;
    }
    return true;
}

} // namespace rlct
