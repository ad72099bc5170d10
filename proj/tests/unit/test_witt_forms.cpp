#include <doctest.h>

#include <climits>

#include "rlct/diff_form.hpp"
#include "rlct/rng.hpp"

using namespace rlct;

TEST_CASE("derivation brackets") {
    const Ring& R = ring(2, 3);
    Derivation x1d1 = Derivation::basis(R, R.rank_of({1, 0}), 1);
    Derivation d1 = Derivation::partial(R, 1);

    CHECK(bracket(x1d1, x1d1).is_zero());
    CHECK(bracket(x1d1, d1) == -d1);

    // bracket equals the operator commutator on the generators
    SplitRng rng(11);
    for (int s = 0; s < 40; ++s) {
        Derivation D = Derivation::from_vec(R, rng.vec(witt_dim(R), 3));
        Derivation E = Derivation::from_vec(R, rng.vec(witt_dim(R), 3));
        Derivation B = bracket(D, E);
        for (int i = 1; i <= 2; ++i) {
            TruncPoly xi = TruncPoly::variable(R, i);
            CHECK(B.apply(xi) == D.apply(E.apply(xi)) - E.apply(D.apply(xi)));
        }
        CHECK(bracket(D, E) == -bracket(E, D));
    }
}

TEST_CASE("derivation p-th powers") {
    const Ring& R = ring(2, 3);
    // (x^a d_j)^[p] = 0 unless a = e_j, where it is fixed
    for (int j = 1; j <= 2; ++j)
        for (std::size_t rk = 0; rk < R.dim(); ++rk) {
            Derivation D = Derivation::basis(R, rk, j);
            std::vector<int> ej(2, 0);
            ej[j - 1] = 1;
            if (R.exponents(rk) == ej)
                CHECK(p_power(D) == D);
            else
                CHECK(p_power(D).is_zero());
        }
    // (1+x_j) d_j is toral
    for (int j = 1; j <= 2; ++j) {
        std::vector<TruncPoly> c(2, TruncPoly(R));
        c[j - 1] = TruncPoly::constant(R, 1) + TruncPoly::variable(R, j);
        Derivation T(R, std::move(c));
        CHECK(p_power(T) == T);
    }
}

TEST_CASE("divergence") {
    const Ring& R = ring(2, 3);
    Derivation x1d1 = Derivation::basis(R, R.rank_of({1, 0}), 1);
    CHECK(divergence(x1d1) == TruncPoly::constant(R, 1));

    SplitRng rng(13);
    for (int s = 0; s < 40; ++s) {
        Derivation D = Derivation::from_vec(R, rng.vec(witt_dim(R), 3));
        Derivation E = Derivation::from_vec(R, rng.vec(witt_dim(R), 3));
        CHECK(divergence(bracket(D, E)) ==
              D.apply(divergence(E)) - E.apply(divergence(D)));
    }
}

TEST_CASE("grading and filtration") {
    const Ring& R = ring(2, 3);
    CHECK(Derivation::partial(R, 1).filtration_level() == -1);
    Derivation x1x2d1 = Derivation::basis(R, R.rank_of({1, 1}), 1);
    CHECK(x1x2d1.filtration_level() == 1);
    auto parts = x1x2d1.graded_parts();
    CHECK(parts.size() == 1);
    CHECK(parts.begin()->first == 1);

    Derivation mixed = Derivation::partial(R, 1) + Derivation::basis(R, R.rank_of({1, 0}), 1);
    CHECK(mixed.filtration_level() == -1);
    CHECK(mixed.graded_parts().size() == 2);
    CHECK(Derivation(R).filtration_level() == INT_MAX);
}

TEST_CASE("exterior calculus") {
    const Ring& R = ring(3, 3);
    TruncPoly x1 = TruncPoly::variable(R, 1);
    TruncPoly x2 = TruncPoly::variable(R, 2);

    SUBCASE("d and evaluation") {
        DiffForm d12 = exterior_d(x1 * x2);
        DiffForm want(R, 1);
        want.add_component({1}, x2);
        want.add_component({2}, x1);
        CHECK(d12 == want);
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j)
                CHECK(eval_one_form(DiffForm::dx(R, i), Derivation::partial(R, j)) ==
                      TruncPoly::constant(R, i == j ? 1 : 0));
    }

    SUBCASE("wedge is graded commutative and alternating") {
        DiffForm a = DiffForm::dx(R, 1);
        DiffForm b = DiffForm::dx(R, 2);
        CHECK(wedge(a, a).is_zero());
        CHECK(wedge(a, b) == wedge(b, a).scaled(2)); // anti-commuting in degree 1
        DiffForm ab = wedge(a, b);
        CHECK(wedge(ab, DiffForm::dx(R, 3)).component({1, 2, 3}) ==
              TruncPoly::constant(R, 1));
        CHECK_THROWS_AS(wedge(ab, ab), DegreeError);
    }

    SUBCASE("volume form identity on every basis derivation") {
        DiffForm ws = cartan_form(CartanKind::S, R);
        for (std::size_t b = 0; b < witt_dim(R); ++b) {
            Derivation D =
                Derivation::basis(R, b % R.dim(), static_cast<int>(b / R.dim()) + 1);
            CHECK(lie_derivative(D, ws) == divergence(D) * ws);
        }
    }

    SUBCASE("action commutes with d") {
        SplitRng rng(17);
        for (int s = 0; s < 25; ++s) {
            TruncPoly u(R, rng.vec(R.dim(), 3));
            Derivation D = Derivation::from_vec(R, rng.vec(witt_dim(R), 3));
            CHECK(lie_derivative(D, exterior_d(u)) == exterior_d(D.apply(u)));
        }
    }
}

TEST_CASE("distinguished forms") {
    const Ring& R2 = ring(2, 3);
    DiffForm s2 = cartan_form(CartanKind::S, R2);
    DiffForm h2 = cartan_form(CartanKind::H, R2);
    DiffForm want(R2, 2);
    want.add_component({1, 2}, TruncPoly::constant(R2, 1));
    CHECK(s2 == want);
    CHECK(h2 == want);

    const Ring& R3 = ring(3, 3);
    DiffForm k3 = cartan_form(CartanKind::K, R3);
    CHECK(k3.component({3}) == TruncPoly::constant(R3, 1));
    CHECK(k3.component({1}) == TruncPoly::variable(R3, 2));
    CHECK(k3.component({2}) == -TruncPoly::variable(R3, 1));

    CHECK_THROWS_AS(cartan_form(CartanKind::H, R3), ParityError);
    CHECK_THROWS_AS(cartan_form(CartanKind::K, R2), ParityError);
}

TEST_CASE("jacobi identity in the derivation algebra") {
    const Ring& R = ring(2, 5);
    SplitRng rng(19);
    for (int s = 0; s < 20; ++s) {
        Derivation X = Derivation::from_vec(R, rng.vec(witt_dim(R), 5));
        Derivation Y = Derivation::from_vec(R, rng.vec(witt_dim(R), 5));
        Derivation Z = Derivation::from_vec(R, rng.vec(witt_dim(R), 5));
        Derivation acc =
            bracket(X, bracket(Y, Z)) + bracket(Y, bracket(Z, X)) + bracket(Z, bracket(X, Y));
        CHECK(acc.is_zero());
    }
}

TEST_CASE("conjugation by ring automorphisms") {
    const Ring& R = ring(2, 3);
    Substitution id = Substitution::identity(R);
    SplitRng rng(23);
    Derivation D = Derivation::from_vec(R, rng.vec(witt_dim(R), 3));
    CHECK(conjugate(id, D) == D);

    TruncPoly x1 = TruncPoly::variable(R, 1);
    TruncPoly x2 = TruncPoly::variable(R, 2);
    Substitution swap(R, {x2, x1});
    // conjugation is a Lie homomorphism
    for (int s = 0; s < 20; ++s) {
        Derivation A = Derivation::from_vec(R, rng.vec(witt_dim(R), 3));
        Derivation B = Derivation::from_vec(R, rng.vec(witt_dim(R), 3));
        CHECK(conjugate(swap, bracket(A, B)) ==
              bracket(conjugate(swap, A), conjugate(swap, B)));
        CHECK(conjugate(swap, p_power(A)) == p_power(conjugate(swap, A)));
    }
}
