#include <doctest.h>

#include "rlct/fpmat.hpp"
#include "rlct/rng.hpp"

using namespace rlct;

namespace {
FpMat random_matrix(SplitRng& rng, std::size_t r, std::size_t c, fp_t p) {
    FpMat m(r, c, p);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rng.mod(p);
    return m;
}

FpVec poly_mul(const FpVec& a, const FpVec& b, fp_t p) {
    PrimeField F(p);
    FpVec c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
    return c;
}
} // namespace

TEST_CASE("parallel kernels match the serial reference") {
    SplitRng rng(1);
    for (fp_t p : {3u, 5u}) {
        for (std::size_t n : {17u, 40u, 130u}) { // straddles the dispatch threshold
            FpMat A = random_matrix(rng, n, n, p);
            FpMat B = random_matrix(rng, n, n, p);
            CHECK(mat_mul(A, B) == serial::mat_mul(A, B));
            CHECK(rank(A) == serial::rank(A));
        }
    }
}

TEST_CASE("rref, kernel, inverse") {
    SplitRng rng(2);
    for (int s = 0; s < 20; ++s) {
        FpMat A = random_matrix(rng, 12, 20, 3);
        Echelon e = rref(A);
        CHECK(e.rank == rank(A));
        // pivots are 1 with zeros elsewhere in the column
        for (std::size_t i = 0; i < e.rank; ++i) {
            CHECK(e.m.at(i, e.pivots[i]) == 1);
            for (std::size_t k = 0; k < e.rank; ++k)
                if (k != i) CHECK(e.m.at(k, e.pivots[i]) == 0);
        }
        FpMat K = kernel(A);
        CHECK(K.rows() == A.cols() - e.rank);
        for (std::size_t k = 0; k < K.rows(); ++k) {
            FpVec out = mat_vec(A, K.row_vec(k));
            for (fp_t v : out) CHECK(v == 0);
        }
    }
    for (int s = 0; s < 10; ++s) {
        FpMat A = random_matrix(rng, 9, 9, 5);
        auto inv = inverse(A);
        if (!inv) {
            CHECK(det(A) == 0);
            continue;
        }
        CHECK(mat_mul(A, *inv) == FpMat::identity(9, 5));
    }
}

TEST_CASE("determinant basics") {
    SplitRng rng(3);
    FpMat sing(4, 4, 3);
    CHECK(det(sing) == 0);
    for (int s = 0; s < 20; ++s) {
        FpMat A = random_matrix(rng, 6, 6, 3);
        FpMat B = random_matrix(rng, 6, 6, 3);
        PrimeField F(3);
        CHECK(det(mat_mul(A, B)) == F.mul(det(A), det(B)));
    }
}

TEST_CASE("characteristic polynomial") {
    PrimeField F(3);

    SUBCASE("companion matrix reproduces its polynomial") {
        // T^4 + 2T^2 + T + 1 over F_3: companion has last column (-1,-1,-2,0)
        FpVec poly{1, 1, 2, 0, 1};
        FpMat C(4, 4, 3);
        for (std::size_t i = 1; i < 4; ++i) C.at(i, i - 1) = 1;
        for (std::size_t i = 0; i < 4; ++i) C.at(i, 3) = F.neg(poly[i]);
        CHECK(charpoly(C) == poly);
    }

    SUBCASE("block diagonal multiplies") {
        SplitRng rng(4);
        FpMat A = random_matrix(rng, 5, 5, 3);
        FpMat B = random_matrix(rng, 4, 4, 3);
        FpMat D(9, 9, 3);
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j) D.at(i, j) = A.at(i, j);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) D.at(5 + i, 5 + j) = B.at(i, j);
        CHECK(charpoly(D) == poly_mul(charpoly(A), charpoly(B), 3));
    }

    SUBCASE("pointwise determinant oracle") {
        SplitRng rng(5);
        for (fp_t p : {3u, 5u}) {
            for (int s = 0; s < 25; ++s) {
                FpMat A = random_matrix(rng, 11, 11, p);
                FpVec cp = charpoly(A);
                PrimeField Fp(p);
                for (fp_t t = 0; t < p; ++t) {
                    fp_t val = 0, pw = 1;
                    for (fp_t c : cp) {
                        val = Fp.add(val, Fp.mul(c, pw));
                        pw = Fp.mul(pw, t);
                    }
                    CHECK(val == serial::charpoly_eval(A, t));
                }
            }
        }
    }

    SUBCASE("diagonal matrix") {
        FpMat D(3, 3, 5);
        D.at(0, 0) = 1;
        D.at(1, 1) = 2;
        D.at(2, 2) = 4;
        // (T-1)(T-2)(T-4) = T^3 - 7T^2 + 14T - 8 = T^3 + 3T^2 + 4T + 2 mod 5
        CHECK(charpoly(D) == FpVec{2, 4, 3, 1});
    }
}

TEST_CASE("span builder") {
    SplitRng rng(6);
    SpanBuilder sb(10, 3);
    std::vector<FpVec> gens;
    for (int s = 0; s < 6; ++s) gens.push_back(rng.vec(10, 3));
    for (const auto& g : gens) sb.add(g);
    for (const auto& g : gens) CHECK(sb.contains(g));
    CHECK(sb.rank() == rank(FpMat::from_rows(gens, 3)));

    // canonical basis does not depend on generator order
    SpanBuilder sb2(10, 3);
    for (auto it = gens.rbegin(); it != gens.rend(); ++it) sb2.add(*it);
    CHECK(sb.rref_basis() == sb2.rref_basis());

    // reduce of a contained vector is empty; of an outside vector, nonzero
    FpVec linear_comb(10, 0);
    PrimeField F(3);
    for (std::size_t j = 0; j < 10; ++j)
        linear_comb[j] = F.add(gens[0][j], F.mul(2, gens[1][j]));
    CHECK(sb.reduce(linear_comb).empty());
}
