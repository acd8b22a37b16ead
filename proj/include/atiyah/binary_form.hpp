#pragma once

#include <cstddef>
#include <vector>

#include "atiyah/ball.hpp"
#include "atiyah/certified.hpp"
#include "atiyah/geometry.hpp"

namespace atiyah {

// Homogeneous binary polynomial in x, y with complex enclosure
// coefficients. coeff(k) multiplies x^{degree-k} y^k.
class BinaryForm {
public:
    explicit BinaryForm(std::vector<ComplexBall> coeffs);
    static BinaryForm one(mpfr_prec_t prec);
    static BinaryForm from_linear(const LinearForm& form);

    std::size_t degree() const { return coeffs_.size() - 1; }
    const ComplexBall& coeff(std::size_t k) const { return coeffs_.at(k); }
    const std::vector<ComplexBall>& coeffs() const { return coeffs_; }

    ComplexBall evaluate(const ComplexBall& x, const ComplexBall& y) const;

private:
    std::vector<ComplexBall> coeffs_;
};

// Coefficient convolution; degrees add.
BinaryForm multiply_forms(const BinaryForm& f, const BinaryForm& g);

// p_i = prod_{j != i} l_ij in ascending j. i is 0-based.
BinaryForm atiyah_polynomial(std::size_t i, const std::vector<BallPoint>& pts);

// N x N matrix whose row i holds the coefficients of p_i in the monomial
// order x^{N-1-k} y^k, k = 0..N-1.
BallMatrix coefficient_matrix_generic(const Configuration& cfg,
                                      mpfr_prec_t prec);

// Coefficients read as a polynomial in y after setting x = 1: the same
// vector, reinterpreted (index k multiplies y^k).
std::vector<ComplexBall> dehomogenize(const BinaryForm& f);

} // namespace atiyah
