#pragma once

#include <complex>
#include <cstddef>
#include <utility>
#include <variant>
#include <vector>

#include "atiyah/ball.hpp"

namespace atiyah {

// A point of R^3 identified with R x C: axis coordinate a and transverse
// complex coordinate z. External coordinates (x1,x2,x3) map to
// (a, z) = (x1, x2 + i*x3).
struct Point3 {
    double a = 0.0;
    std::complex<double> z{0.0, 0.0};

    bool operator==(const Point3&) const = default;
};

Point3 point_from_xyz(double x1, double x2, double x3);

// Point realized in enclosure arithmetic at some working precision.
struct BallPoint {
    RealBall a;
    ComplexBall z;
};

// An ordered configuration of pairwise distinct points. Points are stored
// symbolically: either an exact coordinate triple or a regular-polygon
// vertex (0, -zeta^j), zeta = e^{2 pi i / n}, which is realized at whatever
// precision the pipeline currently runs at.
class Configuration {
public:
    struct PolygonVertex {
        long j = 0;
        long n = 1;
    };
    using PointSpec = std::variant<Point3, PolygonVertex>;

    // Validates the ordering convention (for i<j with z_i = z_j, a_i < a_j)
    // and pairwise distinctness; throws validation_error otherwise.
    static Configuration from_points(std::vector<Point3> points);

    // Trusted constructor for specs whose distinctness and ordering hold
    // structurally (used by the dihedral builder).
    static Configuration from_specs_unchecked(std::vector<PointSpec> specs);

    std::size_t size() const { return specs_.size(); }
    const std::vector<PointSpec>& specs() const { return specs_; }

    std::vector<BallPoint> realize(mpfr_prec_t prec) const;

    // Exact coordinates when every point is an exact Point3.
    bool all_exact() const;
    std::vector<Point3> exact_points() const;

private:
    std::vector<PointSpec> specs_;
};

// h(z,w) = ((|z|^2 - |w|^2)/2, z * conj(w)). Throws usage_error on the
// exact zero pair.
BallPoint hopf_project(const ComplexBall& z, const ComplexBall& w);
BallPoint hopf_project(std::complex<double> z, std::complex<double> w,
                       mpfr_prec_t prec);

// lambda_ij = (a_j - a_i) + sqrt((a_j - a_i)^2 + |z_j - z_i|^2).
// When the midpoint of a_j - a_i is negative the conjugate form
// |z_j - z_i|^2 / (-(a_j - a_i) + sqrt(...)) is used; it avoids the
// cancellation and makes the collinear-descending case exactly zero.
// Throws usage_error when both points are exactly identical.
RealBall lambda_pair(const BallPoint& xi, const BallPoint& xj);

// The linear form u*x + v*y attached to the ordered pair (i, j).
struct LinearForm {
    ComplexBall u;
    ComplexBall v;
};

// Indices are 0-based here; for i<j the form is
// (lambda_ij, conj(z_j) - conj(z_i)), for i>j it is (z_j - z_i, lambda_ji).
LinearForm linear_form(std::size_t i, std::size_t j,
                       const std::vector<BallPoint>& pts);

// Reorders raw points so the ordering convention holds, moving points only
// within groups of equal z (the conjecture is permutation-invariant, so the
// verdict is unaffected). Returns the configuration and the applied
// permutation: entry k is the 1-based original index of the point now in
// position k. Throws validation_error on duplicates (naming the pair) or
// non-finite coordinates.
std::pair<Configuration, std::vector<std::size_t>>
normalize_configuration(const std::vector<Point3>& raw);

} // namespace atiyah
