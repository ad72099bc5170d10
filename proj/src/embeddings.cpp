#include "rlct/embeddings.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rlct {

TruncPoly extend_poly(const Ring& Rn, const TruncPoly& f) {
    const Ring& Rm = f.ring();
    if (Rm.p() != Rn.p()) throw ModulusMismatch("rings have different moduli");
    if (Rm.n() > Rn.n()) throw ArityMismatch("cannot extend to fewer variables");
    TruncPoly out(Rn);
    for (auto [rank, c] : f.terms()) {
        std::vector<int> e = Rm.exponents(rank);
        e.resize(Rn.n(), 0);
        out.set_coeff(Rn.rank_of(e), c);
    }
    return out;
}

Derivation extend_derivation(const Ring& Rn, const Derivation& D) {
    const Ring& Rm = D.ring();
    std::vector<TruncPoly> coeffs(Rn.n(), TruncPoly(Rn));
    for (int j = 1; j <= Rm.n(); ++j) coeffs[j - 1] = extend_poly(Rn, D.coeff(j));
    return Derivation(Rn, std::move(coeffs));
}

EmbeddingVerification verify_embedding(const EmbeddingMap& e, const LieOps& src,
                                       const LieOps& dst, const SubalgebraBasis* target) {
    EmbeddingVerification v;
    v.injective = rank(e.matrix) == e.src_dim;
    v.brackets_preserved = true;
    v.pmaps_preserved = true;
    v.image_contained = true;
    std::string failure;

    auto unit = [&](std::size_t i) {
        FpVec u(e.src_dim, 0);
        u[i] = 1;
        return u;
    };

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4)
#endif
    for (long long ii = 0; ii < static_cast<long long>(e.src_dim); ++ii) {
        auto i = static_cast<std::size_t>(ii);
        FpVec ei = unit(i);
        FpVec img_i = e.apply(ei);
        // p-map on the basis element
        FpVec lhs = dst.p_power(img_i);
        FpVec rhs = e.apply(src.p_power(ei));
        if (lhs != rhs) {
#ifdef _OPENMP
#pragma omp critical
#endif
            {
                v.pmaps_preserved = false;
                if (failure.empty())
                    failure = "p-map mismatch on source basis " + std::to_string(i);
            }
        }
        if (target && !target->contains(img_i)) {
#ifdef _OPENMP
#pragma omp critical
#endif
            {
                v.image_contained = false;
                if (failure.empty())
                    failure = "image of basis " + std::to_string(i) + " escapes " +
                              target->label();
            }
        }
        for (std::size_t j = i + 1; j < e.src_dim; ++j) {
            FpVec ej = unit(j);
            FpVec lhs2 = dst.bracket(img_i, e.apply(ej));
            FpVec rhs2 = e.apply(src.bracket(ei, ej));
            if (lhs2 != rhs2) {
#ifdef _OPENMP
#pragma omp critical
#endif
                {
                    v.brackets_preserved = false;
                    if (failure.empty())
                        failure = "bracket mismatch on source pair (" + std::to_string(i) +
                                  ", " + std::to_string(j) + ")";
                }
            }
        }
    }
    v.first_failure = failure;
    return v;
}

EmbeddingMap sigma(int n, fp_t p) {
    if (n < 2) throw ArityMismatch("sigma needs n >= 2");
    const Ring& Rs = ring(n - 1, p);
    const Ring& Rt = ring(n, p);
    EmbeddingMap e;
    e.label = "sigma_" + std::to_string(n);
    e.p = p;
    e.src_dim = witt_dim(Rs);
    e.dst_dim = witt_dim(Rt);
    e.matrix = FpMat(e.dst_dim, e.src_dim, p);

    TruncPoly xn = TruncPoly::variable(Rt, n);
    for (std::size_t b = 0; b < e.src_dim; ++b) {
        Derivation D = Derivation::from_vec(
            Rs, [&] { FpVec u(e.src_dim, 0); u[b] = 1; return u; }());
        Derivation Dt = extend_derivation(Rt, D);
        TruncPoly div = divergence(Dt);
        Derivation img = Dt;
        std::vector<TruncPoly> corr(Rt.n(), TruncPoly(Rt));
        corr[Rt.n() - 1] = div * xn;
        img -= Derivation(Rt, std::move(corr));
        FpVec col = img.to_vec();
        for (std::size_t i = 0; i < e.dst_dim; ++i) e.matrix.at(i, b) = col[i];
    }
    return e;
}

EmbeddingMap phi(int r, fp_t p) {
    if (r < 1) throw ArityMismatch("phi needs r >= 1");
    const Ring& Rs = ring(r, p);
    const Ring& Rt = ring(2 * r, p);
    EmbeddingMap e;
    e.label = "phi_" + std::to_string(r);
    e.p = p;
    e.src_dim = witt_dim(Rs);
    e.dst_dim = Rt.dim();
    e.matrix = FpMat(e.dst_dim, e.src_dim, p);

    for (int j = 0; j < r; ++j) {
        for (std::size_t rk = 0; rk < Rs.dim(); ++rk) {
            // x^a d_j  |->  x_j * (shifted monomial a on variables r+1..2r)
            const auto& a = Rs.exponents(rk);
            std::vector<int> ex(Rt.n(), 0);
            ex[j] = 1;
            for (int i = 0; i < r; ++i) ex[r + i] = a[i];
            e.matrix.at(Rt.rank_of(ex), witt_index(Rs, j, rk)) = 1;
        }
    }
    return e;
}

EmbeddingMap phi_H(int r, fp_t p) {
    const Ring& Rt = ring(2 * r, p);
    EmbeddingMap base = phi(r, p);
    EmbeddingMap e;
    e.label = "phiH_" + std::to_string(r);
    e.p = p;
    e.src_dim = base.src_dim;
    e.dst_dim = witt_dim(Rt);
    e.matrix = FpMat(e.dst_dim, e.src_dim, p);
    for (std::size_t b = 0; b < e.src_dim; ++b) {
        FpVec u(e.src_dim, 0);
        u[b] = 1;
        TruncPoly f(Rt, base.apply(u));
        FpVec col = hamiltonian_vector_field(f).to_vec();
        for (std::size_t i = 0; i < e.dst_dim; ++i) e.matrix.at(i, b) = col[i];
    }
    return e;
}

} // namespace rlct
