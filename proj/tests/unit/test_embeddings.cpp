#include <doctest.h>

#include "rlct/embeddings.hpp"
#include "rlct/tori.hpp"

using namespace rlct;

TEST_CASE("sigma formula values") {
    const int n = 3;
    const fp_t p = 3;
    const Ring& Rs = ring(n - 1, p);
    const Ring& Rt = ring(n, p);
    EmbeddingMap e = sigma(n, p);
    CHECK(e.src_dim == witt_dim(Rs));
    CHECK(rank(e.matrix) == e.src_dim);

    // sigma(x_j d_j) = x_j d_j - x_n d_n
    for (int j = 1; j < n; ++j) {
        std::vector<int> a(n - 1, 0);
        a[j - 1] = 1;
        FpVec u(e.src_dim, 0);
        u[witt_index(Rs, j - 1, Rs.rank_of(a))] = 1;
        Derivation img = Derivation::from_vec(Rt, e.apply(u));
        std::vector<int> at(n, 0);
        at[j - 1] = 1;
        std::vector<int> an(n, 0);
        an[n - 1] = 1;
        Derivation want = Derivation::basis(Rt, Rt.rank_of(at), j) -
                          Derivation::basis(Rt, Rt.rank_of(an), n);
        CHECK(img == want);
    }
    // divergence of every image vanishes
    for (std::size_t b = 0; b < e.src_dim; ++b) {
        FpVec u(e.src_dim, 0);
        u[b] = 1;
        CHECK(divergence(Derivation::from_vec(Rt, e.apply(u))).is_zero());
    }
}

TEST_CASE("sigma is a restricted embedding into the special algebra") {
    for (auto [n, p] : std::vector<std::pair<int, fp_t>>{{2, 3}, {3, 3}, {2, 5}}) {
        EmbeddingMap e = sigma(n, p);
        FamilyBuild S = build_family(Family::S, n, p);
        auto v = verify_embedding(e, witt_ops(ring(n - 1, p)), witt_ops(ring(n, p)), &S.basis);
        CHECK_MESSAGE(v.ok(), (e.label + ": " + v.first_failure));
    }
}

TEST_CASE("phi formula and embedding") {
    const fp_t p = 3;
    for (int r : {1, 2}) {
        const Ring& Rs = ring(r, p);
        const Ring& Rt = ring(2 * r, p);
        EmbeddingMap e = phi(r, p);
        PoissonAlgebra P(r, p);
        // phi(x_j d_j) = x_j x_{j+r}
        for (int j = 1; j <= r; ++j) {
            std::vector<int> a(r, 0);
            a[j - 1] = 1;
            FpVec u(e.src_dim, 0);
            u[witt_index(Rs, j - 1, Rs.rank_of(a))] = 1;
            CHECK(TruncPoly(Rt, e.apply(u)) ==
                  TruncPoly::variable(Rt, j) * TruncPoly::variable(Rt, j + r));
        }
        auto v = verify_embedding(e, witt_ops(Rs), P.ops(), nullptr);
        CHECK_MESSAGE(v.ok(), (e.label + ": " + v.first_failure));
    }
}

TEST_CASE("composite embedding into the Hamiltonian algebra") {
    for (auto [r, p] : std::vector<std::pair<int, fp_t>>{{1, 3}, {2, 3}, {1, 5}}) {
        EmbeddingMap e = phi_H(r, p);
        FamilyBuild H = build_family(Family::H, 2 * r, p);
        auto v = verify_embedding(e, witt_ops(ring(r, p)), witt_ops(ring(2 * r, p)), &H.basis);
        CHECK_MESSAGE(v.ok(), (e.label + ": " + v.first_failure));
        CHECK(rank(e.matrix) == witt_dim(ring(r, p)));
    }
}

TEST_CASE("sigma carries the standard torus to the special torus") {
    const Ring& Rs = ring(2, 3);
    const Ring& Rt = ring(3, 3);
    EmbeddingMap e = sigma(3, 3);
    auto tw = standard_torus_w(Rs);
    auto ts = standard_torus_s(Rt);
    REQUIRE(tw.size() == ts.size());
    for (std::size_t i = 0; i < tw.size(); ++i)
        CHECK(Derivation::from_vec(Rt, e.apply(tw[i].to_vec())) == ts[i]);
}

TEST_CASE("image torus of the composite avoids the filtration") {
    EmbeddingMap e = phi_H(2, 3);
    LieOps ops = witt_ops(ring(4, 3));
    std::vector<FpVec> gens;
    for (const auto& t : standard_torus_w(ring(2, 3))) gens.push_back(e.apply(t.to_vec()));
    CHECK(torus_check(gens, ops).ok());
    CHECK(f0(gens, ops) == 0);
}

TEST_CASE("extension helpers") {
    const Ring& R2 = ring(2, 3);
    const Ring& R3 = ring(3, 3);
    TruncPoly f = TruncPoly::variable(R2, 1) * TruncPoly::variable(R2, 2);
    TruncPoly g = extend_poly(R3, f);
    CHECK(g == TruncPoly::variable(R3, 1) * TruncPoly::variable(R3, 2));
    CHECK_THROWS_AS(extend_poly(R2, TruncPoly::variable(R3, 1)), ArityMismatch);
    Derivation D = Derivation::partial(R2, 2);
    Derivation E = extend_derivation(R3, D);
    CHECK(E.apply(TruncPoly::variable(R3, 3)).is_zero());
}
