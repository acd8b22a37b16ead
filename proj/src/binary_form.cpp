#include "atiyah/binary_form.hpp"

#include "atiyah/errors.hpp"

namespace atiyah {

BinaryForm::BinaryForm(std::vector<ComplexBall> coeffs)
    : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw internal_error("BinaryForm requires at least one coefficient");
    }
}

BinaryForm BinaryForm::one(mpfr_prec_t prec) {
    std::vector<ComplexBall> c;
    c.push_back(ComplexBall::from_real(RealBall::from_si(1, prec)));
    return BinaryForm(std::move(c));
}

BinaryForm BinaryForm::from_linear(const LinearForm& form) {
    return BinaryForm({form.u, form.v});
}

ComplexBall BinaryForm::evaluate(const ComplexBall& x,
                                 const ComplexBall& y) const {
    // Horner in x for fixed powers of y would need division; instead use
    // the direct sum coeff(k) * x^{d-k} * y^k with binary powering.
    const std::size_t d = degree();
    mpfr_prec_t prec = x.re().precision();
    ComplexBall acc = ComplexBall::from_real(RealBall::from_si(0, prec));
    for (std::size_t k = 0; k <= d; ++k) {
        ComplexBall term = coeffs_[k];
        if (d - k > 0) term = mul(term, pow_ui(x, static_cast<unsigned long>(d - k)));
        if (k > 0) term = mul(term, pow_ui(y, static_cast<unsigned long>(k)));
        acc = add(acc, term);
    }
    return acc;
}

BinaryForm multiply_forms(const BinaryForm& f, const BinaryForm& g) {
    const std::size_t df = f.degree();
    const std::size_t dg = g.degree();
    mpfr_prec_t prec = f.coeff(0).re().precision();
    std::vector<ComplexBall> out(
        df + dg + 1, ComplexBall::from_real(RealBall::from_si(0, prec)));
    for (std::size_t a = 0; a <= df; ++a) {
        for (std::size_t b = 0; b <= dg; ++b) {
            out[a + b] = add(out[a + b], mul(f.coeff(a), g.coeff(b)));
        }
    }
    return BinaryForm(std::move(out));
}

BinaryForm atiyah_polynomial(std::size_t i, const std::vector<BallPoint>& pts) {
    const std::size_t n = pts.size();
    if (i >= n) throw internal_error("atiyah_polynomial: index out of range");
    mpfr_prec_t prec = pts.at(0).z.re().precision();
    BinaryForm p = BinaryForm::one(prec);
    for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        p = multiply_forms(p, BinaryForm::from_linear(linear_form(i, j, pts)));
    }
    return p;
}

BallMatrix coefficient_matrix_generic(const Configuration& cfg,
                                      mpfr_prec_t prec) {
    const std::vector<BallPoint> pts = cfg.realize(prec);
    const std::size_t n = pts.size();
    BallMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        BinaryForm p = atiyah_polynomial(i, pts);
        if (p.degree() != n - 1) {
            throw internal_error("atiyah polynomial has unexpected degree");
        }
        m[i] = p.coeffs();
    }
    return m;
}

std::vector<ComplexBall> dehomogenize(const BinaryForm& f) {
    return f.coeffs();
}

} // namespace atiyah
