#include "rlct/substitution.hpp"

namespace rlct {

Substitution::Substitution(const Ring& R, std::vector<TruncPoly> images)
    : ring_(&R), images_(std::move(images)) {
    if (static_cast<int>(images_.size()) != R.n())
        throw ArityMismatch("need one image per variable");
    for (const auto& g : images_) {
        check_same_ring(R, g.ring());
        if (g.constant_term() != 0)
            throw RelationViolation("substitution image has nonzero constant term");
    }

    // powers images[i]^k for k < p
    const fp_t p = R.p();
    std::vector<std::vector<TruncPoly>> pw(R.n());
    for (int i = 0; i < R.n(); ++i) {
        pw[i].resize(p);
        pw[i][0] = TruncPoly::constant(R, 1);
        for (fp_t k = 1; k < p; ++k) pw[i][k] = pw[i][k - 1] * images_[i];
    }

    mat_ = FpMat(R.dim(), R.dim(), p);
    for (std::size_t s = 0; s < R.dim(); ++s) {
        const auto& e = R.exponents(s);
        TruncPoly img = TruncPoly::constant(R, 1);
        for (int i = 0; i < R.n(); ++i)
            if (e[i]) img = img * pw[i][e[i]];
        for (std::size_t t = 0; t < R.dim(); ++t) mat_.at(t, s) = img.coeff(t);
    }
}

Substitution Substitution::identity(const Ring& R) {
    std::vector<TruncPoly> imgs;
    for (int i = 1; i <= R.n(); ++i) imgs.push_back(TruncPoly::variable(R, i));
    return Substitution(R, std::move(imgs));
}

const TruncPoly& Substitution::image(int i) const {
    if (i < 1 || i > ring_->n()) throw IndexError("variable index out of range");
    return images_[i - 1];
}

TruncPoly Substitution::apply(const TruncPoly& f) const {
    check_same_ring(*ring_, f.ring());
    return TruncPoly(*ring_, mat_vec(mat_, f.coeffs()));
}

bool Substitution::is_automorphism() const {
    return rank(mat_) == ring_->dim();
}

const FpMat& Substitution::inverse_matrix() const {
    if (!inv_ready_) {
        auto inv = inverse(mat_);
        if (!inv) throw NotInvertible("substitution is not an automorphism");
        inv_ = *inv;
        inv_ready_ = true;
    }
    return inv_;
}

TruncPoly Substitution::apply_inverse(const TruncPoly& f) const {
    check_same_ring(*ring_, f.ring());
    return TruncPoly(*ring_, mat_vec(inverse_matrix(), f.coeffs()));
}

} // namespace rlct
