#include <doctest.h>

#include "rlct/invariants.hpp"
#include "rlct/rng.hpp"

using namespace rlct;

TEST_CASE("symbolic polynomials") {
    SymPoly x = SymPoly::variable(2, 3, 1);
    SymPoly y = SymPoly::variable(2, 3, 2);
    SymPoly f = x * x + y.scaled(2);
    CHECK(f.degree() == 2);
    CHECK(f.eval({1, 1}) == 0); // 1 + 2 = 0 mod 3
    CHECK(f.eval({2, 0}) == 1);
    FpMat A = FpMat::identity(2, 3);
    A.at(0, 1) = 1; // x -> x + y
    SymPoly g = f.subst_linear(A);
    SymPoly want = (x + y) * (x + y) + y.scaled(2);
    CHECK(g == want);
    CHECK((f - f).is_zero());
}

TEST_CASE("dickson coefficients") {
    SUBCASE("one variable") {
        for (fp_t p : {3u, 5u}) {
            auto d = dickson_coefficients(1, p);
            REQUIRE(d.size() == static_cast<std::size_t>(p) + 1);
            SymPoly want(1, p);
            want.add_term({static_cast<int>(p - 1)}, p - 1);
            CHECK(d[1] == want); // -x^{p-1} at T^1
            CHECK(d[p] == SymPoly::constant(1, p, 1));
            for (std::size_t i = 2; i < p; ++i) CHECK(d[i].is_zero());
            CHECK(d[0].is_zero());
        }
    }
    SUBCASE("invariance and degrees, two variables") {
        auto d = dickson_coefficients(2, 3);
        CHECK(d[1].degree() == 8);
        CHECK(d[3].degree() == 6);
        CHECK(d[9] == SymPoly::constant(2, 3, 1));
        FpMat tv = FpMat::identity(2, 3);
        tv.at(0, 1) = 1;
        FpMat pm(2, 2, 3);
        pm.at(0, 1) = 1;
        pm.at(1, 0) = 1;
        for (std::size_t q : {1u, 3u}) {
            CHECK(d[q].subst_linear(tv) == d[q]);
            CHECK(d[q].subst_linear(pm) == d[q]);
        }
    }
    SUBCASE("point evaluation agrees with the symbolic expansion") {
        auto d = dickson_coefficients(2, 3);
        SplitRng rng(81);
        for (int s = 0; s < 10; ++s) {
            FpVec pt = rng.vec(2, 3);
            FpVec prod = dickson_product_at_point(pt, 3);
            for (std::size_t k = 0; k < prod.size(); ++k)
                CHECK(prod[k] == d[k].eval(pt));
        }
    }
    CHECK_THROWS_AS(dickson_coefficients(4, 3), EnvelopeError);
    CHECK_THROWS_AS(dickson_coefficients(3, 5), EnvelopeError);
}

TEST_CASE("module actions and characteristic polynomials") {
    const Ring& R = ring(2, 3);
    ModuleAction act = natural_action(R);
    LieOps ops = witt_ops(R);
    std::string why;
    CHECK_MESSAGE(action_is_restricted(act, ops, &why), why);

    FpVec zero(witt_dim(R), 0);
    FpVec cp = action_char_poly(act, zero);
    for (std::size_t i = 0; i + 1 < cp.size(); ++i) CHECK(cp[i] == 0);
    CHECK(cp.back() == 1);
    CHECK(psi_coefficient(act, zero, cp.size() - 1) == 1);
}

TEST_CASE("per-element invariant polynomial") {
    const Ring& R = ring(2, 3);
    LieOps ops = witt_ops(R);
    // a toral element is degenerate for the global profile and yields T^p - T
    std::vector<TruncPoly> c(2, TruncPoly(R));
    c[0] = TruncPoly::constant(R, 1) + TruncPoly::variable(R, 1);
    Derivation T(R, std::move(c));
    QPolyResult qt = q_polynomial(T.to_vec(), ops, 0, 2);
    CHECK(qt.degenerate);
    CHECK(qt.q == PPolynomial{3, {2, 1}});

    SplitRng rng(83);
    int nondeg = 0;
    for (int s = 0; s < 60; ++s) {
        FpVec x = rng.vec(witt_dim(R), 3);
        QPolyResult q = q_polynomial(x, ops, 0, 2);
        if (q.degenerate) continue;
        ++nondeg;
        CHECK(q.q.pdegree() == 2);
        CHECK(q.q.is_monic());
        CHECK(q.q.coeff(0) != 0);
    }
    CHECK(nondeg > 10);
}

TEST_CASE("beta minors") {
    const Ring& R = ring(2, 3);
    LieOps ops = witt_ops(R);
    BetaForm beta{3, {witt_index(R, 0, 0), witt_index(R, 1, 0)}};
    SplitRng rng(87);
    int used = 0;
    for (int s = 0; s < 60 && used < 20; ++s) {
        FpVec x = rng.vec(witt_dim(R), 3);
        QPolyResult q = q_polynomial(x, ops, 0, 2);
        if (q.degenerate) continue;
        try {
            fp_t p0 = phi_via_beta(x, beta, ops, 0, 2, 0);
            fp_t p1 = phi_via_beta(x, beta, ops, 0, 2, 1);
            CHECK(p0 == q.q.coeff(0));
            CHECK(p1 == q.q.coeff(1));
            ++used;
        } catch (const OutsideOmegaBeta&) {
        }
    }
    CHECK(used > 5);
    // a nilpotent element lies outside the beta domain
    CHECK_THROWS_AS(
        phi_via_beta(Derivation::partial(R, 1).to_vec(), beta, ops, 0, 2, 0),
        OutsideOmegaBeta);
}

TEST_CASE("restriction identities, small cases") {
    auto rep = restriction_identity_check(Family::W, 2, 3, 4242, 12);
    CHECK(rep.toral_points_ok);
    CHECK(rep.exponent == 0);
    CHECK(rep.p_polynomiality_ok);
    CHECK(rep.q_match_ok);
    CHECK(rep.q_exponent == 0);

    auto repS = restriction_identity_check(Family::S, 3, 3, 4242, 12);
    CHECK(repS.toral_points_ok);
    CHECK(repS.exponent == 1);
    CHECK(repS.q_exponent == 1);

    auto repH = restriction_identity_check(Family::H, 4, 3, 4242, 8);
    CHECK(repH.toral_points_ok);
    CHECK(repH.exponent == 2);
    CHECK(repH.p_polynomiality_ok);

    CHECK_THROWS_AS(restriction_identity_check(Family::K, 3, 3, 1, 1), UsageError);
}
