#include <doctest.h>

#include "rlct/cartan_family.hpp"
#include "rlct/tori.hpp"

using namespace rlct;

TEST_CASE("standard tori verify") {
    const Ring& R = ring(2, 3);
    LieOps ops = witt_ops(R);
    std::vector<FpVec> gens;
    for (const auto& t : standard_torus_w(R)) gens.push_back(t.to_vec());
    CHECK(torus_check(gens, ops).ok());
    CHECK(f0(gens, ops) == 0);

    // a torus inside the filtration subalgebra has full f0
    std::vector<FpVec> inner{Derivation::basis(R, R.rank_of({1, 0}), 1).to_vec()};
    CHECK(torus_check(inner, ops).ok());
    CHECK(f0(inner, ops) == 1);
}

TEST_CASE("centralizers") {
    const Ring& R = ring(2, 3);
    LieOps ops = witt_ops(R);
    SubalgebraBasis full = SubalgebraBasis::full("W", witt_dim(R), 3);

    std::vector<FpVec> gens;
    for (const auto& t : standard_torus_w(R)) gens.push_back(t.to_vec());
    SubalgebraBasis c = centralizer_of(gens, ops, full);
    CHECK(c == SubalgebraBasis::span("t", witt_dim(R), 3, gens));

    CHECK(centralizer_of({}, ops, full).dim() == witt_dim(R));
}

TEST_CASE("theta frame identities") {
    for (int n : {2, 3}) {
        const Ring& R = ring(n, 3);
        ThetaFrame fr = theta_frame(R);
        const PrimeField F(3);

        // eigenvalue formula, exhaustively over the xi-monomial basis
        for (std::size_t rk = 0; rk < R.dim(); ++rk) {
            const auto& a = R.exponents(rk);
            TruncPoly xa = fr.xi_monomial(a);
            for (int i = 1; i < n; ++i)
                CHECK(fr.theta[i - 1].apply(xa) == xa.scaled(F.reduce(a[i - 1] - a[n - 1])));
        }

        // zeta is invertible, annihilated by theta_i, scaled by theta_n
        TruncPoly zinv = fr.zeta;
        for (fp_t k = 0; k + 2 < 3; ++k) zinv = zinv * fr.zeta;
        CHECK(fr.zeta * zinv * fr.zeta == fr.zeta);
        for (int i = 1; i < n; ++i) CHECK(fr.theta[i - 1].apply(fr.zeta).is_zero());
        CHECK(fr.theta[n - 1].apply(fr.zeta) == -fr.zeta);

        // theta generators are toral and commute
        std::vector<FpVec> gens;
        for (int i = 0; i + 1 < n; ++i) gens.push_back(fr.theta[i].to_vec());
        CHECK(torus_check(gens, witt_ops(R)).ok());
    }
}

TEST_CASE("weight decompositions") {
    const Ring& R = ring(2, 3);
    LieOps ops = witt_ops(R);
    SubalgebraBasis full = SubalgebraBasis::full("W", witt_dim(R), 3);
    std::vector<FpMat> acts;
    for (const auto& t : standard_torus_w(R))
        acts.push_back(ad_action_matrix(full, ops, t.to_vec()));
    WeightDecomposition wd = weight_decomposition(acts, 3);
    CHECK(wd.spaces.size() == 9);
    std::size_t total = 0;
    for (const auto& ws : wd.spaces) {
        CHECK(ws.basis.rows() == 2);
        total += ws.basis.rows();
    }
    CHECK(total == witt_dim(R));
    CHECK(wd.find({0, 0}) != nullptr);
    CHECK(wd.find({9, 9}) == nullptr);

    // a non-semisimple action is rejected
    FpMat nilp(3, 3, 3);
    nilp.at(0, 1) = 1;
    CHECK_THROWS_AS(weight_decomposition({nilp}, 3), NotSemisimple);
}

TEST_CASE("substitution realization of the torus normalizer") {
    const Ring& R = ring(2, 3);

    WeylElement id = weyl_substitution(R, FpMat::identity(2, 3));
    CHECK(id.induced == FpMat::identity(2, 3));

    FpMat swp(2, 2, 3);
    swp.at(0, 1) = 1;
    swp.at(1, 0) = 1;
    WeylElement w = weyl_substitution(R, swp);
    CHECK(w.induced == swp);

    FpMat sing(2, 2, 3);
    sing.at(0, 0) = 1;
    CHECK_THROWS_AS(weyl_substitution(R, sing), NotInvertible);

    CHECK(enumerate_gl(2, 3).size() == 48);
    CHECK(enumerate_gl(1, 5).size() == 4);

    // homomorphism on a few pairs
    auto gl = enumerate_gl(2, 3);
    for (std::size_t a = 0; a < 5; ++a)
        for (std::size_t b = 0; b < 5; ++b) {
            WeylElement wa = weyl_substitution(R, gl[a * 7]);
            WeylElement wb = weyl_substitution(R, gl[b * 9]);
            WeylElement wab = weyl_substitution(R, mat_mul(gl[a * 7], gl[b * 9]));
            CHECK(mat_mul(wa.induced, wb.induced) == wab.induced);
        }
}

TEST_CASE("cartan subalgebra nilpotency") {
    const Ring& R = ring(3, 3);
    LieOps ops = witt_ops(R);
    FamilyBuild S = build_family(Family::S, 3, 3);
    std::vector<FpVec> gens;
    for (const auto& t : standard_torus_s(R)) gens.push_back(t.to_vec());
    SubalgebraBasis h = centralizer_of(gens, ops, S.basis);
    NilpotencyReport rep = cartan_nilpotency_check(h, gens, ops, SplitRng(99), 25);
    CHECK(rep.nilpotent);
    CHECK(rep.powers_land_in_torus);
    CHECK(rep.ell == h.dim() - 2);

    // the self-centralizing case is vacuous: ell = 0
    const Ring& R2 = ring(2, 3);
    LieOps ops2 = witt_ops(R2);
    std::vector<FpVec> tw;
    for (const auto& t : standard_torus_w(R2)) tw.push_back(t.to_vec());
    SubalgebraBasis full = SubalgebraBasis::full("W", witt_dim(R2), 3);
    SubalgebraBasis c = centralizer_of(tw, ops2, full);
    NilpotencyReport rep2 = cartan_nilpotency_check(c, tw, ops2, SplitRng(99), 10);
    CHECK(rep2.ell == 0);
    CHECK(rep2.nilpotent);
    CHECK(rep2.powers_land_in_torus);
}
