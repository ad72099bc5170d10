#include <doctest.h>

#include "rlct/json_io.hpp"
#include "rlct/rng.hpp"
#include "rlct/substitution.hpp"

using namespace rlct;

TEST_CASE("prime field residue arithmetic") {
    CHECK(FpScalar(2, 3) + FpScalar(2, 3) == FpScalar(1, 3));
    CHECK(FpScalar(2, 5).inv() == FpScalar(3, 5));
    CHECK(FpScalar(-1, 3) == FpScalar(2, 3));
    CHECK_THROWS_AS(FpScalar(0, 3).inv(), DivisionByZero);
    CHECK_THROWS_AS(FpScalar(1, 3) + FpScalar(1, 5), ModulusMismatch);
    CHECK_THROWS_AS(PrimeField(4), UsageError);
    CHECK_THROWS_AS(PrimeField(2), UsageError);
    PrimeField F(7);
    for (fp_t a = 1; a < 7; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
}

TEST_CASE("monomial ring tables") {
    const Ring& R = ring(2, 3);
    CHECK(R.dim() == 9);
    CHECK(R.rank_of({0, 0}) == 0);
    CHECK(R.rank_of({2, 2}) == 8);
    // lex order: rank order equals lexicographic order on exponent vectors
    for (std::size_t a = 0; a + 1 < R.dim(); ++a)
        CHECK(R.exponents(a) < R.exponents(a + 1));
    CHECK_THROWS_AS(R.rank_of({3, 0}), IndexError);
    CHECK_THROWS_AS(ring(30, 3), EnvelopeError);
}

TEST_CASE("truncated polynomial arithmetic") {
    const Ring& R = ring(2, 3);
    TruncPoly x1 = TruncPoly::variable(R, 1);
    TruncPoly x2 = TruncPoly::variable(R, 2);
    TruncPoly one = TruncPoly::constant(R, 1);

    CHECK((x1 * x1 * x1).is_zero());          // x^p = 0
    CHECK((one + x1).pow(3) == one);          // xi^p = 1
    CHECK((one + x1) * (one - x1) + x1 * x1 == one);

    SplitRng rng(101);
    for (int s = 0; s < 50; ++s) {
        TruncPoly f(R, rng.vec(R.dim(), 3));
        TruncPoly g(R, rng.vec(R.dim(), 3));
        TruncPoly w(R, rng.vec(R.dim(), 3));
        CHECK(one * f == f);
        CHECK((f * g) * w == f * (g * w));
        CHECK(f * (g + w) == f * g + f * w);
        CHECK(f * g == g * f);
        // elements without constant term have vanishing p-th power
        TruncPoly u = f;
        u.set_coeff(0, 0);
        CHECK(u.pow(3).is_zero());
        // Leibniz rule
        for (int i = 1; i <= 2; ++i)
            CHECK((f * g).partial(i) == f.partial(i) * g + f * g.partial(i));
    }
}

TEST_CASE("partial derivatives") {
    const Ring& R = ring(3, 3);
    TruncPoly x1 = TruncPoly::variable(R, 1);
    TruncPoly x2 = TruncPoly::variable(R, 2);
    CHECK((x1 * x2).partial(1) == x2);
    CHECK(x2.partial(1).is_zero());
    // d_i(xi_j) = delta_ij
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            TruncPoly xi_j = TruncPoly::constant(R, 1) + TruncPoly::variable(R, j);
            CHECK(xi_j.partial(i) == TruncPoly::constant(R, i == j ? 1 : 0));
        }
    CHECK_THROWS_AS(x1.partial(4), IndexError);
}

namespace {
// independent elimination, kept deliberately separate from FpMat
std::size_t plain_rank(std::vector<std::vector<fp_t>> rows, fp_t p) {
    PrimeField F(p);
    std::size_t rank = 0, cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        fp_t inv = F.inv(rows[rank][c]);
        for (auto& v : rows[rank]) v = F.mul(v, inv);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][c] == 0) continue;
            fp_t f = rows[i][c];
            for (std::size_t j = 0; j < cols; ++j)
                rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[rank][j]));
        }
        ++rank;
    }
    return rank;
}
} // namespace

TEST_CASE("substitution endomorphisms") {
    const Ring& R = ring(2, 3);
    TruncPoly x1 = TruncPoly::variable(R, 1);
    TruncPoly x2 = TruncPoly::variable(R, 2);

    Substitution id = Substitution::identity(R);
    CHECK(id.is_automorphism());
    SplitRng rng(55);
    TruncPoly f(R, rng.vec(R.dim(), 3));
    CHECK(id.apply(f) == f);

    // xi_1 -> xi_1 xi_2: x_1 -> x_1 + x_2 + x_1 x_2
    Substitution sigma(R, {x1 + x2 + x1 * x2, x2});
    CHECK(sigma.is_automorphism());
    // cross-check the rank through an independent elimination
    std::vector<std::vector<fp_t>> rows;
    for (std::size_t s = 0; s < R.dim(); ++s) {
        std::vector<fp_t> row(R.dim());
        for (std::size_t t = 0; t < R.dim(); ++t) row[t] = sigma.matrix().at(t, s);
        rows.push_back(std::move(row));
    }
    CHECK(plain_rank(rows, 3) == R.dim());

    // multiplicativity
    for (int s = 0; s < 30; ++s) {
        TruncPoly a(R, rng.vec(R.dim(), 3));
        TruncPoly b(R, rng.vec(R.dim(), 3));
        CHECK(sigma.apply(a * b) == sigma.apply(a) * sigma.apply(b));
    }
    CHECK(sigma.apply(TruncPoly::constant(R, 1)) == TruncPoly::constant(R, 1));

    // nonzero constant term violates the defining relations
    CHECK_THROWS_AS(Substitution(R, {TruncPoly::constant(R, 1) + x1, x2}),
                    RelationViolation);

    // a non-bijective endomorphism
    Substitution degenerate(R, {x1, x1});
    CHECK_FALSE(degenerate.is_automorphism());
    CHECK_THROWS_AS(degenerate.inverse_matrix(), NotInvertible);
}

TEST_CASE("json round trips") {
    const Ring& R = ring(2, 5);
    SplitRng rng(77);
    for (int s = 0; s < 20; ++s) {
        TruncPoly f(R, rng.vec(R.dim(), 5));
        CHECK(truncpoly_from_json(to_json(f)) == f);
        Derivation D = Derivation::from_vec(R, rng.vec(witt_dim(R), 5));
        CHECK(derivation_from_json(to_json(D)) == D);
    }
    // serialized exponents come out lexicographically sorted
    TruncPoly g(R, rng.vec(R.dim(), 5));
    auto j = to_json(g);
    for (std::size_t i = 0; i + 1 < j["terms"].size(); ++i)
        CHECK(j["terms"][i]["exp"].get<std::vector<int>>() <
              j["terms"][i + 1]["exp"].get<std::vector<int>>());
}
