#include <doctest.h>

#include "rlct/contact.hpp"
#include "rlct/tori.hpp"
#include "rlct/poisson.hpp"
#include "rlct/rng.hpp"

using namespace rlct;

TEST_CASE("poisson bracket pinned values") {
    PoissonAlgebra P(2, 3);
    const Ring& R = P.ring();
    TruncPoly one = TruncPoly::constant(R, 1);
    for (int i = 1; i <= 2; ++i) {
        CHECK(P.bracket(TruncPoly::variable(R, i), TruncPoly::variable(R, i + 2)) == one);
        // {x_i (1 + x_{i+r}), 1 + x_{r+1}} = delta_{i1} (1 + x_{i+r})
        TruncPoly ti = TruncPoly::variable(R, i) * (one + TruncPoly::variable(R, i + 2));
        TruncPoly want = i == 1 ? one + TruncPoly::variable(R, 3) : TruncPoly::zero(R);
        CHECK(P.bracket(ti, one + TruncPoly::variable(R, 3)) == want);
    }
    SplitRng rng(61);
    for (int s = 0; s < 20; ++s) {
        TruncPoly f(R, rng.vec(R.dim(), 3));
        CHECK(P.bracket(f, one).is_zero());
    }
}

TEST_CASE("poisson p-map pinned values") {
    for (fp_t p : {3u, 5u}) {
        PoissonAlgebra P(1, p);
        const Ring& R = P.ring();
        TruncPoly one = TruncPoly::constant(R, 1);
        TruncPoly x1 = TruncPoly::variable(R, 1);
        TruncPoly x2 = TruncPoly::variable(R, 2);
        CHECK(P.p_map(one) == one);
        CHECK(P.p_map(x1 * x2) == x1 * x2);
        CHECK(P.p_map(x1).is_zero());
        CHECK(P.p_map(one + x2) == one);
        CHECK(P.p_map(x1 * (one + x2)) == x1 * (one + x2));
    }
}

TEST_CASE("realization of the abstract model inside the Poisson algebra") {
    for (int r : {1, 2}) {
        PoissonAlgebra P(r, 3);
        RestrictedAlgebra lr = build_lr(r, 3);
        LrRealization real = realize_l_in_poisson(P);
        std::string why;
        CHECK_MESSAGE(lr_realization_is_isomorphism(P, lr, real, &why), why);
        CHECK(real.span.dim() == static_cast<std::size_t>(r) + 2);
    }
}

TEST_CASE("hamiltonian map") {
    PoissonAlgebra P(1, 3);
    const Ring& R = P.ring();
    CHECK(P.hamiltonian(TruncPoly::constant(R, 1)).is_zero());
    SplitRng rng(67);
    for (int s = 0; s < 30; ++s) {
        TruncPoly f(R, rng.vec(R.dim(), 3));
        TruncPoly g(R, rng.vec(R.dim(), 3));
        CHECK(P.hamiltonian(f).apply(g) == P.bracket(f, g));
    }
    // restrictedness on the monomial basis
    for (std::size_t rk = 0; rk < R.dim(); ++rk) {
        TruncPoly m(R);
        m.set_coeff(rk, 1);
        CHECK(P.hamiltonian(P.p_map(m)) == p_power(P.hamiltonian(m)));
    }
}

TEST_CASE("translation automorphisms") {
    PoissonAlgebra P(1, 3);
    const Ring& R = P.ring();
    SplitRng rng(71);
    FpVec lam0 = P.lambda_from_scalar(0);
    FpVec lam = P.lambda_from_scalar(1);
    for (int s = 0; s < 20; ++s) {
        TruncPoly f(R, rng.vec(R.dim(), 3));
        TruncPoly g(R, rng.vec(R.dim(), 3));
        CHECK(P.phi_lambda(lam0, f) == f);
        CHECK(P.bracket(P.phi_lambda(lam, f), P.phi_lambda(lam, g)) ==
              P.phi_lambda(lam, P.bracket(f, g)));
    }
    for (std::size_t i = 0; i < P.derived().dim(); ++i) {
        TruncPoly b(R, P.derived().basis_vector(i));
        CHECK(P.phi_lambda(lam, b) == b);
    }
    FpVec bad(R.dim(), 0);
    bad[1] = 1; // the x-degree-one coordinate functional does not kill P'
    CHECK_THROWS_AS(P.phi_lambda(bad, TruncPoly::constant(R, 1)), InvalidForm);
}

TEST_CASE("contact algebra pinned values") {
    for (fp_t p : {3u, 5u}) {
        ContactAlgebra C(1, p);
        const Ring& R = C.ring();
        TruncPoly one = TruncPoly::constant(R, 1);
        TruncPoly x1 = TruncPoly::variable(R, 1);
        TruncPoly x2 = TruncPoly::variable(R, 2);
        TruncPoly xn = TruncPoly::variable(R, 3);
        TruncPoly g2 = x1 * x2 * (one + xn);

        CHECK(C.kpp().dim() == R.dim());
        CHECK(C.bracket(x1 * x2, one + xn).is_zero());
        CHECK(C.bracket(one + xn, g2) == g2.scaled(2));
        CHECK(C.bracket(one, g2) == (x1 * x2).scaled(2));
        CHECK(C.bracket(xn, g2) == (x1 * x2 * xn).scaled(2));
        CHECK(C.p_map(one + xn) == one + xn);
        CHECK(C.p_map(g2) == x1 * x2);
        CHECK(C.p_map(one).is_zero()); // theta(1) is a multiple of d_n

        // theta conjugation consistency
        SplitRng rng(73);
        for (int s = 0; s < 15; ++s) {
            TruncPoly f(R, rng.vec(R.dim(), p));
            TruncPoly g(R, rng.vec(R.dim(), p));
            CHECK(C.theta_inv(C.theta(f)) == f);
            CHECK(bracket(C.theta(f), C.theta(g)) == C.theta(C.bracket(f, g)));
        }
    }
}

TEST_CASE("contact torus and filtration") {
    ContactAlgebra C(1, 3);
    LieOps ops = C.ops();
    std::vector<FpVec> gens;
    for (const auto& t : C.standard_torus()) gens.push_back(t.coeffs());
    CHECK(torus_check(gens, ops).ok());
    CHECK(toral_basis(gens, ops).has_value());
    for (const auto& g : gens) CHECK(C.k_carrier().contains(g));
    // the last generator is homogeneous of contact degree zero, so the span
    // meets the filtration subalgebra in exactly one line
    CHECK(f0(gens, ops) == 1);

    std::vector<FpVec> cent;
    for (const auto& t : C.centralizer_torus()) cent.push_back(t.coeffs());
    CHECK(torus_check(cent, ops).ok());

    // carrier degrees
    const Ring& R = C.ring();
    CHECK(C.carrier_degree(R.rank_of({0, 0, 0})) == -2);
    CHECK(C.carrier_degree(R.rank_of({1, 0, 0})) == -1);
    CHECK(C.carrier_degree(R.rank_of({0, 0, 1})) == 0);
    CHECK(C.carrier_degree(R.rank_of({1, 1, 0})) == 0);
}

TEST_CASE("unipotent center variant") {
    PoissonAlgebra P(1, 3, PoissonAlgebra::Center::Unipotent);
    const Ring& R = P.ring();
    TruncPoly one = TruncPoly::constant(R, 1);
    CHECK(P.p_map(one).is_zero());
    // exact sequence stays restricted
    for (std::size_t rk = 0; rk < R.dim(); ++rk) {
        TruncPoly m(R);
        m.set_coeff(rk, 1);
        CHECK(P.hamiltonian(P.p_map(m)) == p_power(P.hamiltonian(m)));
    }
}
