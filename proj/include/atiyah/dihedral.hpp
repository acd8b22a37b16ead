#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "atiyah/ball.hpp"
#include "atiyah/certified.hpp"
#include "atiyah/geometry.hpp"

namespace atiyah {

// Parameters of a dihedral configuration: m points (a_i, 0) on the axis,
// a_1 < ... < a_m, plus the regular n-gon (0, b_j), b_j = -zeta^j,
// zeta = e^{2 pi i / n}, on the unit circle. N = m + n points total.
//
// The closed form depends on the axis coordinates only through
// lambda_i = a_i + sqrt(1 + a_i^2), so configs may alternatively be built
// directly from a lambda list (needed for the equal-lambda limit case and
// for the inversion transformation, neither of which maps back to exact
// double axis coordinates).
class DihedralConfig {
public:
    static DihedralConfig from_axis(std::vector<double> axis_coords, long n);
    // Requires positive, non-decreasing lambdas (ties allowed: the
    // equal-lambda limit case is built this way).
    static DihedralConfig from_lambdas(std::vector<double> lambdas, long n);

    long m() const { return static_cast<long>(values_.size()); }
    long n() const { return n_; }
    long N() const { return m() + n_; }

    bool axis_built() const { return kind_ == Kind::Axis; }
    // "axis", "lambda", or "lambda-inverse"; with raw_values() this echoes
    // how the config was built.
    std::string param_kind() const;
    const std::vector<double>& raw_values() const { return values_; }

    // The reflection a -> -a of the axis, i.e.
    // (lambda_1,...,lambda_m) -> (1/lambda_m,...,1/lambda_1).
    DihedralConfig inverted() const;

    // lambda_1..lambda_m as enclosures at the given precision.
    std::vector<RealBall> lambdas(mpfr_prec_t prec) const;

    // The corresponding point configuration (axis points first, then the
    // polygon). Only available for axis-built configs; throws usage_error
    // otherwise.
    Configuration to_configuration() const;

private:
    enum class Kind { Axis, Lambda, LambdaInverse };
    DihedralConfig(Kind kind, std::vector<double> values, long n);

    Kind kind_;
    std::vector<double> values_;
    long n_;
};

// lambda(a) = a + sqrt(1 + a^2), evaluated in the cancellation-free form
// 1 / (sqrt(1 + a^2) - a) for a < 0. Strictly positive and increasing.
RealBall lambda_of(double a, mpfr_prec_t prec);

// The polygon vertex b_j = -zeta^j and the chord difference b_s - b_j in
// the closed trigonometric form -2i e^{i pi (j+s)/n} sin(pi (s-j)/n).
ComplexBall polygon_vertex(long j, long n, mpfr_prec_t prec);
ComplexBall chord_closed_form(long j, long s, long n, mpfr_prec_t prec);

// Coefficients c_0..c_{n-1} of prod_{s=1}^{n-1} (y - i e^{i pi s / n})
// = sum_j c_j y^{n-1-j}. The product is expanded in complex enclosure
// arithmetic; the exact values are real, so every imaginary enclosure must
// contain 0 (checked; internal_error otherwise) and the real parts are
// returned. All c_j are positive.
std::vector<RealBall> c_coefficients(long n, mpfr_prec_t prec);

// E_0..E_k of the given values: E_0 = 1, prod (y + v_i) = sum E_j y^{k-j}.
std::vector<RealBall> elementary_symmetric(const std::vector<RealBall>& values,
                                           mpfr_prec_t prec);

struct SymmetricCoefficients {
    std::vector<RealBall> c;       // c_0..c_{n-1}
    std::vector<RealBall> E;       // E_0..E_m, elementary symmetric in lambdas
    std::vector<RealBall> tildeE;  // ~E_0..~E_{N-1} via the convolution
};

SymmetricCoefficients symmetric_coefficients(const DihedralConfig& cfg,
                                             mpfr_prec_t prec);

// ~E_0..~E_{N-1}: ~E_k = sum_i c_i E_{k-i}; these are the elementary
// symmetric functions of the N-1 numbers lambda_i and -i e^{i pi s/n}.
std::vector<RealBall> tilde_E(const DihedralConfig& cfg, mpfr_prec_t prec);

// f_k = sum_{s>=0} (prod_{j=1}^{s} lambda_{N-jn-k}^n) ~E_{k+sn}, 0 <= k < n.
// The series is finite: terms stop once k+sn > N-1 (out-of-range ~E are 0,
// which is also exactly when a lambda subscript would drop below 1).
std::vector<RealBall> f_values(const DihedralConfig& cfg, mpfr_prec_t prec);

struct ClosedFormResult {
    std::vector<RealBall> f;  // f_0..f_{n-1}, all positive
    RealBall c_factor;        // n^{n/2}
    RealBall abs_det;         // n^{n/2} * prod f_k
};

// |det P| = n^{n/2} * prod_k f_k for the normalized coefficient matrix P.
ClosedFormResult closed_form_abs_det(const DihedralConfig& cfg,
                                     mpfr_prec_t prec);

// The N x N coefficient matrix P of the normalized dehomogenized rows
// y^{i-1} (1 - lambda_i^n y^n), 1 <= i <= m, and f(zeta^j y), 0 <= j < n,
// where f(y) = sum_k ~E_{N-1-k} y^k. Column k holds the y^k coefficient.
BallMatrix closed_form_matrix(const DihedralConfig& cfg, mpfr_prec_t prec);

// Row-by-row comparison of the generic pipeline against the closed form.
// Each generic row must be a single complex scalar multiple sigma of its
// counterpart row of P (generic polygon row m+j pairs with P row
// m + ((n-j) mod n)); verified coefficientwise by cross-multiplication
// against a reference column whose P entry is known nonzero.
struct RowProportionality {
    std::size_t generic_row = 0;    // row in the generic matrix
    std::size_t reference_row = 0;  // paired row in P
    ComplexBall sigma;              // generic row = sigma * P row
    bool consistent = true;
    std::size_t bad_column = 0;     // set when !consistent
};

struct CrossCheckResult {
    bool proportional = false;  // every row consistent
    bool det_match = false;     // |det G| overlaps prod|sigma| * |det P|
    std::vector<RowProportionality> rows;
    RealBall generic_abs_det;    // |det| enclosure of the generic matrix
    RealBall predicted_abs_det;  // prod_i |sigma_i| * n^{n/2} prod_k f_k
    ClosedFormResult closed_form;
    Verdict generic_verdict;     // det_certified on the generic matrix
    mpfr_prec_t prec = 0;

    bool ok() const { return proportional && det_match; }
};

CrossCheckResult cross_check_proportionality(const DihedralConfig& cfg,
                                             mpfr_prec_t prec = 256,
                                             const PrecisionPolicy& policy = {});

} // namespace atiyah
