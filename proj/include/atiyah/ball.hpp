#pragma once

#include <mpfr.h>

#include <complex>
#include <string>
#include <vector>

#include "atiyah/errors.hpp"

namespace atiyah {

// Midpoint-radius enclosure of a real number.
//
// The midpoint is an MPFR float carrying the working precision; the radius
// is a low-precision MPFR float, always rounded upward, so that the exact
// value represented is guaranteed to lie in [mid - rad, mid + rad].
// Every operation widens the radius by a bound on its own rounding error,
// so enclosures stay rigorous through arbitrarily long computations.
//
// A ball whose radius is +inf is "indeterminate": it encloses every real
// number. Operations propagate indeterminacy instead of throwing; sign
// queries on an indeterminate ball all answer "cannot certify", which is
// what drives precision escalation upstream.
class RealBall {
public:
    static constexpr mpfr_prec_t kRadiusPrec = 32;

    explicit RealBall(mpfr_prec_t prec);              // exact zero
    RealBall() : RealBall(mpfr_prec_t{53}) {}         // exact zero, double prec
    RealBall(const RealBall& other);
    RealBall(RealBall&& other) noexcept;
    RealBall& operator=(const RealBall& other);
    RealBall& operator=(RealBall&& other) noexcept;
    ~RealBall();

    static RealBall from_double(double x, mpfr_prec_t prec);   // exact for prec >= 53
    static RealBall from_si(long x, mpfr_prec_t prec);
    static RealBall from_ui(unsigned long x, mpfr_prec_t prec);
    static RealBall from_rational(long num, long den, mpfr_prec_t prec);
    static RealBall pi(mpfr_prec_t prec);
    static RealBall indeterminate(mpfr_prec_t prec);
    // Ball [0 +- r] from an already upward-rounded radius.
    static RealBall zero_centered(mpfr_srcptr radius_upper, mpfr_prec_t prec);

    mpfr_prec_t prec() const { return prec_; }

    bool is_exact() const;           // radius == 0
    bool is_indeterminate() const;
    bool contains_zero() const;      // |mid| <= rad
    bool excludes_zero() const;
    bool is_strictly_positive() const;
    bool is_strictly_negative() const;

    // Directed endpoint at the ball's own precision.
    void lower_bound(mpfr_t out) const;   // <= mid - rad
    void upper_bound(mpfr_t out) const;   // >= mid + rad

    bool overlaps(const RealBall& other) const;
    bool disjoint_from(const RealBall& other) const;
    // True when [mid-rad, mid+rad] certifiably contains other's enclosure.
    bool contains_ball(const RealBall& other) const;

    double mid_double() const;
    double rad_double_upper() const;
    mpfr_prec_t precision() const;
    // Decimal serialization; deterministic for fixed input and precision.
    std::string mid_string() const;
    std::string rad_string() const;

    // Raw access for oracles and serialization.
    mpfr_srcptr mid() const { return mid_; }
    mpfr_srcptr rad() const { return rad_; }

    friend RealBall add(const RealBall& a, const RealBall& b);
    friend RealBall sub(const RealBall& a, const RealBall& b);
    friend RealBall mul(const RealBall& a, const RealBall& b);
    friend RealBall div(const RealBall& a, const RealBall& b);
    friend RealBall neg(const RealBall& a);
    friend RealBall abs_ball(const RealBall& a);
    // Requires the represented exact value to be >= 0; the enclosure is
    // intersected with [0, inf) before taking the root.
    friend RealBall sqrt_ball(const RealBall& a);
    friend RealBall sin_ball(const RealBall& a);
    friend RealBall cos_ball(const RealBall& a);
    friend RealBall pow_ui(const RealBall& a, unsigned long e);
    friend RealBall mul_2si(const RealBall& a, long e);   // exact scaling by 2^e
    friend RealBall hull(const RealBall& a, const RealBall& b);

private:
    RealBall(mpfr_prec_t prec, bool /*uninit_tag*/);
    void add_round_error(int ternary);   // absorb <= 0.5 ulp of mid_ into rad_
    void become_indeterminate();
    bool regular() const;                // finite mid and rad

    mpfr_t mid_;
    mpfr_t rad_;
    mpfr_prec_t prec_;
};

RealBall operator+(const RealBall& a, const RealBall& b);
RealBall operator-(const RealBall& a, const RealBall& b);
RealBall operator*(const RealBall& a, const RealBall& b);
RealBall operator/(const RealBall& a, const RealBall& b);
RealBall operator-(const RealBall& a);

// Rectangular complex enclosure: independent balls for the real and the
// imaginary part. The reported disc radius is an upper bound for
// hypot(re.rad, im.rad), so (midpoint, radius) is a valid complex ball.
class ComplexBall {
public:
    ComplexBall(RealBall re, RealBall im);
    explicit ComplexBall(mpfr_prec_t prec);            // exact zero
    ComplexBall() : ComplexBall(mpfr_prec_t{53}) {}    // exact zero, double prec
    static ComplexBall from_real(RealBall re);
    static ComplexBall from_doubles(double re, double im, mpfr_prec_t prec);
    static ComplexBall from_complex(std::complex<double> z, mpfr_prec_t prec);
    static ComplexBall unit_circle_point(const RealBall& angle);   // e^{i*angle}

    const RealBall& re() const { return re_; }
    const RealBall& im() const { return im_; }
    mpfr_prec_t prec() const { return re_.prec(); }

    bool is_exact() const { return re_.is_exact() && im_.is_exact(); }
    bool contains_zero() const { return re_.contains_zero() && im_.contains_zero(); }
    bool excludes_zero() const { return !contains_zero(); }
    bool is_exact_zero() const;
    bool overlaps(const ComplexBall& other) const;

    std::complex<double> mid_complex() const;
    double rad_double_upper() const;
    std::string rad_string() const;

    friend ComplexBall add(const ComplexBall& a, const ComplexBall& b);
    friend ComplexBall sub(const ComplexBall& a, const ComplexBall& b);
    friend ComplexBall mul(const ComplexBall& a, const ComplexBall& b);
    friend ComplexBall div(const ComplexBall& a, const ComplexBall& b);
    friend ComplexBall neg(const ComplexBall& a);
    friend ComplexBall conj_ball(const ComplexBall& a);
    friend ComplexBall mul_i(const ComplexBall& a);    // multiply by i, exact
    friend ComplexBall pow_ui(const ComplexBall& a, unsigned long e);

    RealBall abs_sq() const;       // re^2 + im^2
    RealBall abs_ball() const;     // sqrt(abs_sq)

private:
    RealBall re_;
    RealBall im_;
};

ComplexBall operator+(const ComplexBall& a, const ComplexBall& b);
ComplexBall operator-(const ComplexBall& a, const ComplexBall& b);
ComplexBall operator*(const ComplexBall& a, const ComplexBall& b);
ComplexBall operator/(const ComplexBall& a, const ComplexBall& b);
ComplexBall operator-(const ComplexBall& a);
ComplexBall operator*(const RealBall& a, const ComplexBall& b);

} // namespace atiyah
