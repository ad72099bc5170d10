#include "rlct/poisson.hpp"

namespace rlct {

PoissonAlgebra::PoissonAlgebra(int r, fp_t p, Center center)
    : r_(r), center_(center), ring_(&rlct::ring(2 * r, p)) {
    if (r < 1) throw ArityMismatch("Poisson algebra needs r >= 1");
}

TruncPoly PoissonAlgebra::bracket(const TruncPoly& f, const TruncPoly& g) const {
    check_same_ring(*ring_, f.ring());
    check_same_ring(*ring_, g.ring());
    TruncPoly out(*ring_);
    for (int i = 1; i <= r_; ++i)
        out += f.partial(i) * g.partial(i + r_) - f.partial(i + r_) * g.partial(i);
    return out;
}

TruncPoly PoissonAlgebra::monomial_p_rule(std::size_t rank) const {
    const auto& e = ring_->exponents(rank);
    bool keep = false;
    if (ring_->total_degree(rank) == 0)
        keep = (center_ == Center::Toral);
    else {
        // x^a with a = eps_i + eps_{i+r}
        for (int i = 0; i < r_; ++i)
            if (e[i] == 1 && e[i + r_] == 1 && ring_->total_degree(rank) == 2) keep = true;
    }
    TruncPoly out(*ring_);
    if (keep) out.set_coeff(rank, 1);
    return out;
}

TruncPoly PoissonAlgebra::p_map(const TruncPoly& f) const {
    LieOps o = ops();
    FpVec v = p_power_by_terms(o, f.coeffs(), [this](std::size_t rank, fp_t c) {
        return monomial_p_rule(rank).scaled(c).coeffs(); // c^p = c
    });
    return TruncPoly(*ring_, std::move(v));
}

Derivation PoissonAlgebra::hamiltonian(const TruncPoly& f) const {
    return hamiltonian_vector_field(f);
}

const SubalgebraBasis& PoissonAlgebra::derived() const {
    if (!derived_ready_) {
        SubalgebraBasis full = SubalgebraBasis::full("P", ring_->dim(), ring_->p());
        derived_ = derived_subalgebra(full, ops());
        derived_.set_label("P'");
        derived_ready_ = true;
    }
    return derived_;
}

TruncPoly PoissonAlgebra::phi_lambda(const FpVec& lambda, const TruncPoly& f) const {
    if (lambda.size() != ring_->dim()) throw ArityMismatch("functional length mismatch");
    const PrimeField F(ring_->p());
    const SubalgebraBasis& der = derived();
    for (std::size_t i = 0; i < der.dim(); ++i) {
        FpVec b = der.basis_vector(i);
        fp_t acc = 0;
        for (std::size_t j = 0; j < b.size(); ++j) acc = F.add(acc, F.mul(lambda[j], b[j]));
        if (acc) throw InvalidForm("functional does not vanish on the derived subalgebra");
    }
    fp_t val = 0;
    for (std::size_t j = 0; j < lambda.size(); ++j)
        val = F.add(val, F.mul(lambda[j], f.coeff(j)));
    TruncPoly out = f;
    out.set_coeff(0, F.add(out.coeff(0), val));
    return out;
}

FpVec PoissonAlgebra::lambda_from_scalar(fp_t s) const {
    // The derived subalgebra has the span of x^tau as a complement, so the
    // conditions lambda(P^(1)) = 0, lambda(x^tau) = s pin the functional.
    const SubalgebraBasis& der = derived();
    if (der.dim() + 1 != ring_->dim())
        throw VerificationFailure("derived subalgebra does not have codimension 1");
    FpMat M(der.dim() + 1, ring_->dim(), ring_->p());
    for (std::size_t i = 0; i < der.dim(); ++i) {
        FpVec b = der.basis_vector(i);
        for (std::size_t j = 0; j < b.size(); ++j) M.at(i, j) = b[j];
    }
    M.at(der.dim(), ring_->dim() - 1) = 1;
    FpVec rhs(der.dim() + 1, 0);
    rhs[der.dim()] = s % ring_->p();
    // M * lambda = rhs; M is square-ish (dim x dim) and invertible by the
    // complement property.
    std::vector<FpVec> cols;
    for (std::size_t j = 0; j < ring_->dim(); ++j) {
        FpVec col(M.rows(), 0);
        for (std::size_t i = 0; i < M.rows(); ++i) col[i] = M.at(i, j);
        cols.push_back(std::move(col));
    }
    auto sol = solve_coords(cols, rhs, ring_->p());
    if (!sol) throw VerificationFailure("could not build the scalar functional");
    return *sol;
}

LieOps PoissonAlgebra::ops() const {
    LieOps o;
    o.dim = ring_->dim();
    o.p = ring_->p();
    o.bracket = [this](const FpVec& a, const FpVec& b) {
        return bracket(TruncPoly(*ring_, a), TruncPoly(*ring_, b)).coeffs();
    };
    o.p_power = [this](const FpVec& a) { return p_map(TruncPoly(*ring_, a)).coeffs(); };
    o.coord_degree = [this](std::size_t i) { return ring_->total_degree(i); };
    return o;
}

RestrictedAlgebra build_lr(int r, fp_t p) {
    if (r < 1) throw ArityMismatch("l_r needs r >= 1");
    const std::size_t d = static_cast<std::size_t>(r) + 2;
    std::vector<std::string> labels;
    labels.push_back("z");
    labels.push_back("x");
    for (int i = 1; i <= r; ++i) labels.push_back("t" + std::to_string(i));

    std::vector<std::vector<FpVec>> sc(d, std::vector<FpVec>(d, FpVec(d, 0)));
    // [t_1, x] = x; index of x is 1, of t_1 is 2
    sc[2][1][1] = 1;
    sc[1][2][1] = p - 1;

    std::vector<FpVec> pmap(d, FpVec(d, 0));
    pmap[0][0] = 1; // z^[p] = z
    pmap[1][0] = 1; // x^[p] = z
    for (std::size_t i = 2; i < d; ++i) pmap[i][i] = 1;

    return RestrictedAlgebra(std::move(labels), std::move(sc), std::move(pmap), p);
}

LrRealization realize_l_in_poisson(const PoissonAlgebra& P) {
    const Ring& R = P.ring();
    const int r = P.r();
    LrRealization out;
    out.images.push_back(TruncPoly::constant(R, 1));
    out.images.push_back(TruncPoly::constant(R, 1) + TruncPoly::variable(R, r + 1));
    for (int i = 1; i <= r; ++i) {
        TruncPoly xi = TruncPoly::variable(R, i);
        TruncPoly one_plus = TruncPoly::constant(R, 1) + TruncPoly::variable(R, i + r);
        out.images.push_back(xi * one_plus);
    }
    std::vector<FpVec> gens;
    for (const auto& f : out.images) gens.push_back(f.coeffs());
    out.span = SubalgebraBasis::span("l", R.dim(), R.p(), gens);
    return out;
}

bool lr_realization_is_isomorphism(const PoissonAlgebra& P, const RestrictedAlgebra& lr,
                                   const LrRealization& real, std::string* why) {
    const std::size_t d = lr.dim();
    if (real.images.size() != d || real.span.dim() != d) {
        if (why) *why = "realization images are not independent";
        return false;
    }
    const PrimeField F(P.p());
    auto combine = [&](const FpVec& coords) {
        TruncPoly acc(P.ring());
        for (std::size_t i = 0; i < d; ++i)
            if (coords[i]) acc += real.images[i].scaled(coords[i]);
        return acc;
    };
    (void)F;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            TruncPoly got = P.bracket(real.images[i], real.images[j]);
            TruncPoly want = combine(lr.basis_bracket(i, j));
            if (got != want) {
                if (why)
                    *why = "bracket mismatch on basis pair (" + lr.labels()[i] + ", " +
                           lr.labels()[j] + ")";
                return false;
            }
        }
        TruncPoly gotp = P.p_map(real.images[i]);
        TruncPoly wantp = combine(lr.basis_p_power(i));
        if (gotp != wantp) {
            if (why) *why = "p-map mismatch on basis element " + lr.labels()[i];
            return false;
        }
    }
    return true;
}

} // namespace rlct
