#include "rlct/contact.hpp"

namespace rlct {

TruncPoly ContactAlgebra::swapped(const TruncPoly& f) const {
    if (!use_swap_) return f;
    FpVec out(ring_->dim(), 0);
    for (std::size_t rk = 0; rk < ring_->dim(); ++rk) out[swap_[rk]] = f.coeff(rk);
    return TruncPoly(*ring_, std::move(out));
}

ContactAlgebra::ContactAlgebra(int r, fp_t p) : r_(r), ring_(&rlct::ring(2 * r + 1, p)) {
    if (r < 1) throw ArityMismatch("contact algebra needs r >= 1");
    const Ring& R = *ring_;

    swap_.resize(R.dim());
    for (std::size_t rk = 0; rk < R.dim(); ++rk) {
        std::vector<int> e = R.exponents(rk);
        for (int i = 0; i < r_; ++i) std::swap(e[i], e[i + r_]);
        swap_[rk] = static_cast<std::uint32_t>(R.rank_of(e));
    }

    kpp_ = contact_condition(R);
    if (kpp_.dim() != R.dim())
        throw ContactNormalizationError("contact solution space does not match the carrier");

    // Evaluation of the contact form on the solution space.
    DiffForm omega = cartan_form(CartanKind::K, R);
    FpMat M0(R.dim(), R.dim(), p);
    for (std::size_t j = 0; j < R.dim(); ++j) {
        Derivation D = Derivation::from_vec(R, kpp_.basis_vector(j));
        TruncPoly val = eval_one_form(omega, D);
        for (std::size_t i = 0; i < R.dim(); ++i) M0.at(i, j) = val.coeff(i);
    }
    auto inv0 = inverse(M0);
    if (!inv0)
        throw ContactNormalizationError("contact form evaluation is not bijective");
    theta_inv_mat_ = M0;   // K'' coords -> carrier (up to 1/c)
    theta_mat_ = *inv0;    // carrier -> K'' coords (up to c)

    // Fix the scalar from the pinned bracket value.
    c_ = 1;
    const PrimeField F(p);
    TruncPoly one = TruncPoly::constant(R, 1);
    TruncPoly xn = TruncPoly::variable(R, n());
    TruncPoly xr2r = TruncPoly::variable(R, r_) * TruncPoly::variable(R, 2 * r_);
    TruncPoly g1 = one + xn;
    TruncPoly g2 = xr2r * (one + xn);
    TruncPoly got = bracket(g1, g2);
    TruncPoly want = g2.scaled(2);
    if (got.is_zero())
        throw ContactNormalizationError("pinned bracket value vanished");
    fp_t scale = 0;
    for (std::size_t k = 0; k < R.dim(); ++k) {
        if (got.coeff(k)) {
            scale = F.div(want.coeff(k), got.coeff(k));
            break;
        }
    }
    if (scale == 0 || !(got.scaled(scale) == want))
        throw ContactNormalizationError("no scalar reproduces the pinned bracket value");
    c_ = scale;
    if (!(bracket(g1, g2) == want))
        throw ContactNormalizationError("normalization does not hold after scaling");
    if (!bracket(xr2r, g1).is_zero())
        throw ContactNormalizationError("scalar-independent bracket value failed");

    // Resolve the swap ambiguity: the standard torus must be abelian.  The
    // pinned values above are swap-invariant, so they stay valid.
    {
        auto gens = standard_torus();
        bool abelian = true;
        for (std::size_t i = 0; i < gens.size() && abelian; ++i)
            for (std::size_t j = i + 1; j < gens.size(); ++j)
                if (!bracket(gens[i], gens[j]).is_zero()) { abelian = false; break; }
        if (!abelian) {
            use_swap_ = true;
            abelian = true;
            for (std::size_t i = 0; i < gens.size() && abelian; ++i)
                for (std::size_t j = i + 1; j < gens.size(); ++j)
                    if (!bracket(gens[i], gens[j]).is_zero()) { abelian = false; break; }
            if (!abelian)
                throw ContactNormalizationError("standard torus fails to commute "
                                                "under either identification");
            if (!(bracket(g1, g2) == want) || !bracket(xr2r, g1).is_zero())
                throw ContactNormalizationError("pinned values lost after swap fix");
        }
    }

    k_ = derived_subalgebra(kpp_, witt_ops(R));
    k_.set_label("K");
    std::vector<FpVec> kc;
    for (std::size_t i = 0; i < k_.dim(); ++i)
        kc.push_back(theta_inv(Derivation::from_vec(R, k_.basis_vector(i))).coeffs());
    k_carrier_ = SubalgebraBasis::span("K(carrier)", R.dim(), p, kc);
}

Derivation ContactAlgebra::theta(const TruncPoly& f) const {
    check_same_ring(*ring_, f.ring());
    FpVec scaled = swapped(f).scaled(c_).coeffs();
    FpVec coords = mat_vec(theta_mat_, scaled);
    return Derivation::from_vec(*ring_, kpp_.from_coords(coords));
}

TruncPoly ContactAlgebra::theta_inv(const Derivation& D) const {
    FpVec coords = kpp_.coords_of(D.to_vec()); // throws if not in K''
    FpVec carrier = mat_vec(theta_inv_mat_, coords);
    const PrimeField F(ring_->p());
    fp_t cinv = F.inv(c_);
    for (auto& v : carrier) v = F.mul(v, cinv);
    return swapped(TruncPoly(*ring_, std::move(carrier)));
}

TruncPoly ContactAlgebra::bracket(const TruncPoly& f, const TruncPoly& g) const {
    return theta_inv(rlct::bracket(theta(f), theta(g)));
}

TruncPoly ContactAlgebra::p_map(const TruncPoly& f) const {
    return theta_inv(p_power(theta(f)));
}

int ContactAlgebra::carrier_degree(std::size_t rank) const {
    const auto& e = ring_->exponents(rank);
    int d = 0;
    for (int i = 0; i < 2 * r_; ++i) d += e[i];
    d += 2 * e[2 * r_];
    return d - 2;
}

std::vector<TruncPoly> ContactAlgebra::standard_torus() const {
    const Ring& R = *ring_;
    std::vector<TruncPoly> t;
    TruncPoly one = TruncPoly::constant(R, 1);
    for (int i = 1; i <= r_; ++i)
        t.push_back(TruncPoly::variable(R, i) * (one + TruncPoly::variable(R, i + r_)));
    TruncPoly last(R);
    for (int i = 1; i <= r_; ++i)
        last += TruncPoly::variable(R, i) * TruncPoly::variable(R, i + r_);
    last -= TruncPoly::variable(R, n());
    t.push_back(last);
    return t;
}

std::vector<TruncPoly> ContactAlgebra::centralizer_torus() const {
    const Ring& R = *ring_;
    std::vector<TruncPoly> t;
    for (int i = 1; i <= r_; ++i)
        t.push_back(TruncPoly::variable(R, i) * TruncPoly::variable(R, i + r_));
    t.push_back(TruncPoly::constant(R, 1) + TruncPoly::variable(R, n()));
    return t;
}

LieOps ContactAlgebra::ops() const {
    LieOps o;
    o.dim = ring_->dim();
    o.p = ring_->p();
    o.bracket = [this](const FpVec& a, const FpVec& b) {
        return bracket(TruncPoly(*ring_, a), TruncPoly(*ring_, b)).coeffs();
    };
    o.p_power = [this](const FpVec& a) { return p_map(TruncPoly(*ring_, a)).coeffs(); };
    o.coord_degree = [this](std::size_t i) { return carrier_degree(i); };
    return o;
}

} // namespace rlct
