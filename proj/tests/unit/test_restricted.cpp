#include <doctest.h>

#include "rlct/poisson.hpp"
#include "rlct/rng.hpp"

using namespace rlct;

TEST_CASE("structure constants from a subalgebra") {
    const Ring& R1 = ring(1, 3);
    LieOps ops = witt_ops(R1);
    SubalgebraBasis W1 = SubalgebraBasis::full("W1", witt_dim(R1), 3);
    RestrictedAlgebra alg = from_subalgebra(W1, ops, "W1");
    CHECK(alg.dim() == 3);
    // table brackets agree with the derivation brackets
    SplitRng rng(41);
    for (int s = 0; s < 30; ++s) {
        FpVec x = rng.vec(3, 3), y = rng.vec(3, 3);
        CHECK(alg.bracket(x, y) == ops.bracket(x, y));
        CHECK(alg.p_power(x) == ops.p_power(x));
    }

    // non-closed input is rejected: [d, x^2 d] = 2 x d escapes the span
    std::vector<FpVec> bad{Derivation::partial(R1, 1).to_vec(),
                           Derivation::basis(R1, R1.rank_of({2}), 1).to_vec()};
    SubalgebraBasis notclosed = SubalgebraBasis::span("nc", witt_dim(R1), 3, bad);
    CHECK_THROWS_AS(from_subalgebra(notclosed, ops), ClosureError);
}

TEST_CASE("constructor validation") {
    // an invalid p-map is rejected: ad(b^[p]) != (ad b)^p
    std::vector<std::vector<FpVec>> sc(2, std::vector<FpVec>(2, FpVec(2, 0)));
    sc[0][1] = {0, 1}; // [b0, b1] = b1
    sc[1][0] = {0, 2};
    std::vector<FpVec> pmap{{0, 1}, {0, 0}}; // b0^[p] = b1 is inconsistent
    CHECK_THROWS_AS(
        RestrictedAlgebra({"a", "b"}, sc, pmap, 3),
        VerificationFailure);
    std::vector<FpVec> good{{1, 0}, {0, 0}}; // b0^[p] = b0, b1^[p] = 0
    CHECK_NOTHROW(RestrictedAlgebra({"a", "b"}, sc, good, 3));
}

TEST_CASE("jacobson terms") {
    const Ring& R = ring(2, 3);
    LieOps ops = witt_ops(R);
    SplitRng rng(43);
    FpVec zero(ops.dim, 0);
    for (int s = 0; s < 10; ++s) {
        FpVec x = rng.vec(ops.dim, 3);
        // s_i(x, 0) = 0
        for (const auto& si : jacobson_s_terms(ops, x, zero))
            for (fp_t v : si) CHECK(v == 0);
    }
    // commuting pair: all correction terms sum to zero
    FpVec d1 = Derivation::partial(R, 1).to_vec();
    FpVec d2 = Derivation::partial(R, 2).to_vec();
    PrimeField F(3);
    FpVec sum(ops.dim, 0);
    for (const auto& si : jacobson_s_terms(ops, d1, d2))
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = F.add(sum[i], si[i]);
    for (fp_t v : sum) CHECK(v == 0);
    FpVec both(ops.dim, 0);
    for (std::size_t i = 0; i < both.size(); ++i) both[i] = F.add(d1[i], d2[i]);
    CHECK(ops.p_power(both) == zero); // (d1 + d2)^[p] = 0 for commuting nilpotents
}

TEST_CASE("general p-th powers in the Poisson carrier") {
    PoissonAlgebra P(2, 3);
    const Ring& R = P.ring();
    TruncPoly one = TruncPoly::constant(R, 1);
    for (int i = 1; i <= 2; ++i) {
        TruncPoly ti = TruncPoly::variable(R, i) * (one + TruncPoly::variable(R, i + 2));
        CHECK(P.p_map(ti) == ti); // x_i + x_i x_{i+r} has fixed p-th power
    }
    // semilinearity over the prime field
    SplitRng rng(47);
    for (int s = 0; s < 10; ++s) {
        TruncPoly f(R, rng.vec(R.dim(), 3));
        for (fp_t c = 0; c < 3; ++c)
            CHECK(P.p_map(f.scaled(c)) == P.p_map(f).scaled(c));
    }
}

TEST_CASE("p-closures and Jordan-Chevalley parts") {
    const Ring& R = ring(2, 3);
    LieOps ops = witt_ops(R);

    SUBCASE("toral element") {
        std::vector<TruncPoly> c(2, TruncPoly(R));
        c[0] = TruncPoly::constant(R, 1) + TruncPoly::variable(R, 1);
        Derivation T(R, std::move(c));
        auto [s, n] = jordan_chevalley(T.to_vec(), ops);
        CHECK(s == T.to_vec());
        for (fp_t v : n) CHECK(v == 0);
        PPolynomial q = minimal_p_polynomial(T.to_vec(), ops);
        CHECK(q == PPolynomial{3, {2, 1}}); // T^p - T
    }

    SUBCASE("p-nilpotent element") {
        FpVec d1 = Derivation::partial(R, 1).to_vec();
        auto [s, n] = jordan_chevalley(d1, ops);
        for (fp_t v : s) CHECK(v == 0);
        CHECK(n == d1);
        PPolynomial q = minimal_p_polynomial(d1, ops);
        CHECK(q == PPolynomial{3, {0, 1}}); // T^p
    }

    SUBCASE("mixed element against the periodicity oracle") {
        // (1+x_1) d_1 + d_2
        std::vector<TruncPoly> c(2, TruncPoly(R));
        c[0] = TruncPoly::constant(R, 1) + TruncPoly::variable(R, 1);
        c[1] = TruncPoly::constant(R, 1);
        Derivation X(R, std::move(c));
        FpVec x = X.to_vec();
        auto [xs, xn] = jordan_chevalley(x, ops);
        PrimeField F(3);
        for (std::size_t i = 0; i < x.size(); ++i) CHECK(F.add(xs[i], xn[i]) == x[i]);
        for (fp_t v : ops.bracket(xs, xn)) CHECK(v == 0);
        CHECK(is_p_unipotent({xn}, ops));
        // independent oracle: iterate the p-map until it becomes periodic
        PClosure pc = p_closure(x, ops);
        FpVec z = x;
        for (std::size_t k = 0; k < pc.d + 1; ++k) z = ops.p_power(z);
        FpVec w = ops.p_power(z);
        std::size_t period = 1;
        while (w != z) {
            w = ops.p_power(w);
            ++period;
        }
        std::size_t m = period;
        while (m < pc.d + 1) m += period;
        FpVec oracle = x;
        for (std::size_t k = 0; k < m; ++k) oracle = ops.p_power(oracle);
        CHECK(oracle == xs);
    }

    SUBCASE("randomized contract") {
        SplitRng rng(53);
        for (int s = 0; s < 40; ++s) {
            FpVec x = rng.vec(witt_dim(R), 3);
            PClosure pc = p_closure(x, ops);
            CHECK(pc.torus_part.size() + pc.nil_part.size() == pc.d);
            // the minimal p-polynomial annihilates exactly at the closure size
            PPolynomial q = minimal_p_polynomial(x, ops);
            CHECK(q.pdegree() == pc.d);
            CHECK(q.is_monic());
            FpVec v = evaluate_p_polynomial(q, x, ops);
            for (fp_t t : v) CHECK(t == 0);
        }
    }
}

TEST_CASE("torus predicates") {
    const Ring& R = ring(2, 3);
    LieOps ops = witt_ops(R);
    std::vector<FpVec> torus;
    for (int j = 1; j <= 2; ++j) {
        std::vector<TruncPoly> c(2, TruncPoly(R));
        c[j - 1] = TruncPoly::constant(R, 1) + TruncPoly::variable(R, j);
        torus.push_back(Derivation(R, std::move(c)).to_vec());
    }
    CHECK(torus_check(torus, ops).ok());
    auto tb = toral_basis(torus, ops);
    REQUIRE(tb.has_value());
    CHECK(tb->size() == 2);
    for (const auto& t : *tb) CHECK(ops.p_power(t) == t);

    std::vector<FpVec> nilline{Derivation::partial(R, 1).to_vec()};
    CHECK_FALSE(torus_check(nilline, ops).ok());
    CHECK(is_p_unipotent(nilline, ops));
    CHECK_FALSE(is_p_unipotent(torus, ops));
}

TEST_CASE("p-polynomial type") {
    PPolynomial q{3, {2, 0, 1}}; // T^{p^2} + 2T
    CHECK(q.is_monic());
    CHECK(q.pdegree() == 2);
    FpVec plain = q.to_plain();
    CHECK(plain.size() == 10);
    CHECK(plain[9] == 1);
    CHECK(plain[1] == 2);
    auto back = PPolynomial::from_plain(plain, 3);
    REQUIRE(back.has_value());
    CHECK(*back == q);
    plain[2] = 1;
    CHECK_FALSE(PPolynomial::from_plain(plain, 3).has_value());
    PPolynomial shifted = q.power_pe(1);
    CHECK(shifted.c == FpVec{0, 2, 0, 1});
}

TEST_CASE("abstract l_r algebra") {
    RestrictedAlgebra lr = build_lr(3, 3);
    CHECK(lr.dim() == 5);
    // [t_1, x] = x and all other products vanish
    FpVec x(5, 0), t1(5, 0), t2(5, 0), z(5, 0);
    x[1] = 1;
    t1[2] = 1;
    t2[3] = 1;
    z[0] = 1;
    CHECK(lr.bracket(t1, x) == x);
    FpVec zero(5, 0);
    CHECK(lr.bracket(t2, x) == zero);
    CHECK(lr.bracket(t1, t2) == zero);
    CHECK(lr.p_power(x) == z);
    CHECK(lr.p_power(z) == z);
    CHECK(lr.p_power(t1) == t1);
}
