// Enclosure arithmetic: containment against exact rational arithmetic,
// sign predicates, indeterminacy propagation, serialization determinism.

#include <doctest.h>

#include <gmp.h>
#include <mpfr.h>

#include <random>
#include <string>

#include "atiyah/ball.hpp"

using namespace atiyah;

namespace {

// True when the enclosure certifiably contains the exact rational q.
bool contains_q(const RealBall& b, const mpq_t q) {
    if (b.is_indeterminate()) return true;
    mpfr_t lo, hi;
    mpfr_init2(lo, b.prec());
    mpfr_init2(hi, b.prec());
    b.lower_bound(lo);
    b.upper_bound(hi);
    bool ok = mpfr_cmp_q(lo, q) <= 0 && mpfr_cmp_q(hi, q) >= 0;
    mpfr_clear(lo);
    mpfr_clear(hi);
    return ok;
}

bool contains_si(const RealBall& b, long v) {
    mpq_t q;
    mpq_init(q);
    mpq_set_si(q, v, 1);
    bool ok = contains_q(b, q);
    mpq_clear(q);
    return ok;
}

struct Rational {
    long num;
    long den;  // > 0
};

RealBall ball_of(const Rational& r, mpfr_prec_t prec) {
    return RealBall::from_rational(r.num, r.den, prec);
}

void set_q(mpq_t q, const Rational& r) {
    mpq_set_si(q, r.num, static_cast<unsigned long>(r.den));
    mpq_canonicalize(q);
}

} // namespace

TEST_CASE("exact constructors") {
    RealBall half = RealBall::from_double(0.5, 64);
    CHECK(half.is_exact());
    CHECK(half.mid_double() == 0.5);
    CHECK(half.is_strictly_positive());
    CHECK(half.excludes_zero());

    RealBall three = RealBall::from_si(-3, 64);
    CHECK(three.is_exact());
    CHECK(three.is_strictly_negative());

    RealBall z(64);
    CHECK(z.is_exact());
    CHECK(z.contains_zero());
    CHECK(!z.excludes_zero());
    CHECK(!z.is_strictly_positive());
    CHECK(!z.is_strictly_negative());
}

TEST_CASE("from_rational contains the exact value") {
    mpq_t q;
    mpq_init(q);
    mpq_set_si(q, 1, 3);
    RealBall third = RealBall::from_rational(1, 3, 128);
    CHECK(contains_q(third, q));
    CHECK(!third.is_exact());  // 1/3 is not a binary float
    CHECK(third.rad_double_upper() < 1e-36);
    mpq_clear(q);
}

TEST_CASE("field operations contain exact rational results") {
    std::mt19937_64 gen(12345);
    std::uniform_int_distribution<long> num(-99, 99);
    std::uniform_int_distribution<long> den(1, 23);

    mpq_t qa, qb, qr;
    mpq_init(qa);
    mpq_init(qb);
    mpq_init(qr);
    for (int iter = 0; iter < 500; ++iter) {
        Rational ra{num(gen), den(gen)};
        Rational rb{num(gen), den(gen)};
        set_q(qa, ra);
        set_q(qb, rb);
        RealBall a = ball_of(ra, 64);
        RealBall b = ball_of(rb, 64);

        mpq_add(qr, qa, qb);
        CHECK(contains_q(add(a, b), qr));
        mpq_sub(qr, qa, qb);
        CHECK(contains_q(sub(a, b), qr));
        mpq_mul(qr, qa, qb);
        CHECK(contains_q(mul(a, b), qr));
        if (mpq_sgn(qb) != 0 && b.excludes_zero()) {
            mpq_div(qr, qa, qb);
            CHECK(contains_q(div(a, b), qr));
        }
        mpq_neg(qr, qa);
        CHECK(contains_q(neg(a), qr));
        mpq_abs(qr, qa);
        CHECK(contains_q(abs_ball(a), qr));
    }
    mpq_clear(qa);
    mpq_clear(qb);
    mpq_clear(qr);
}

TEST_CASE("pow, scaling, hull") {
    RealBall two = RealBall::from_ui(2, 64);
    RealBall p = pow_ui(two, 10);
    CHECK(p.is_exact());
    CHECK(p.mid_double() == 1024.0);
    CHECK(pow_ui(two, 0).mid_double() == 1.0);

    RealBall scaled = mul_2si(RealBall::from_si(3, 64), 2);
    CHECK(scaled.is_exact());
    CHECK(scaled.mid_double() == 12.0);
    CHECK(mul_2si(RealBall::from_si(3, 64), -1).mid_double() == 1.5);

    RealBall h = hull(RealBall::from_si(-1, 64), RealBall::from_si(2, 64));
    CHECK(contains_si(h, -1));
    CHECK(contains_si(h, 2));
    CHECK(contains_si(h, 0));
    CHECK(contains_si(h, 1));
}

TEST_CASE("sqrt and trig") {
    RealBall r2 = sqrt_ball(RealBall::from_ui(2, 128));
    RealBall sq = mul(r2, r2);
    mpq_t q;
    mpq_init(q);
    mpq_set_si(q, 2, 1);
    CHECK(contains_q(sq, q));
    mpq_clear(q);
    CHECK(r2.is_strictly_positive());

    RealBall pi = RealBall::pi(128);
    CHECK(sin_ball(pi).contains_zero());
    CHECK(add(cos_ball(pi), RealBall::from_ui(1, 128)).contains_zero());
    // sin(pi/2) = 1, cos(pi/2) = 0
    RealBall half_pi = mul_2si(pi, -1);
    CHECK(sub(sin_ball(half_pi), RealBall::from_ui(1, 128)).contains_zero());
    CHECK(cos_ball(half_pi).contains_zero());
    CHECK(sin_ball(half_pi).is_strictly_positive());
}

TEST_CASE("indeterminacy propagates instead of throwing") {
    RealBall bad = RealBall::indeterminate(64);
    CHECK(bad.is_indeterminate());
    CHECK(bad.contains_zero());
    CHECK(!bad.excludes_zero());
    CHECK(!bad.is_strictly_positive());

    RealBall sum = add(bad, RealBall::from_ui(1, 64));
    CHECK(sum.is_indeterminate());
    CHECK(mul(bad, RealBall::from_ui(0, 64)).is_indeterminate());

    // Division by a zero-containing ball is indeterminate.
    RealBall tiny = RealBall::zero_centered(
        RealBall::from_rational(1, 10, 64).mid(), 64);
    CHECK(tiny.contains_zero());
    CHECK(div(RealBall::from_ui(1, 64), tiny).is_indeterminate());
    // Square root of an entirely negative enclosure is API misuse; a
    // zero-straddling ball is clipped to [0, inf) and stays determinate.
    CHECK_THROWS_AS((void)sqrt_ball(RealBall::from_si(-1, 64)),
                    usage_error);
    CHECK(!sqrt_ball(tiny).is_indeterminate());
}

TEST_CASE("overlap and containment predicates") {
    RealBall a = RealBall::from_rational(1, 3, 64);
    RealBall b = RealBall::from_rational(1, 3, 256);
    CHECK(a.overlaps(b));
    CHECK(!a.disjoint_from(b));
    CHECK(a.contains_ball(b));  // wider enclosure contains the tighter one
    CHECK(!b.contains_ball(a));

    RealBall c = RealBall::from_ui(5, 64);
    CHECK(!a.overlaps(c));
    CHECK(a.disjoint_from(c));
}

TEST_CASE("serialization is deterministic") {
    RealBall a = sqrt_ball(RealBall::from_ui(3, 128));
    RealBall b = sqrt_ball(RealBall::from_ui(3, 128));
    CHECK(a.mid_string() == b.mid_string());
    CHECK(a.rad_string() == b.rad_string());
    CHECK(a.mid_string().substr(0, 7) == "1.73205");
}

TEST_CASE("complex multiplication contains exact values") {
    // (3 + 4i)(1 - 2i) = 11 - 2i
    ComplexBall a = ComplexBall::from_doubles(3, 4, 64);
    ComplexBall b = ComplexBall::from_doubles(1, -2, 64);
    ComplexBall p = mul(a, b);
    CHECK(contains_si(p.re(), 11));
    CHECK(contains_si(p.im(), -2));

    CHECK(contains_si(a.abs_sq(), 25));
    CHECK(contains_si(a.abs_ball(), 5));

    ComplexBall q = div(p, b);
    CHECK(contains_si(q.re(), 3));
    CHECK(contains_si(q.im(), 4));

    ComplexBall i_times = mul_i(a);  // i(3+4i) = -4+3i, exact
    CHECK(i_times.is_exact());
    CHECK(i_times.mid_complex() == std::complex<double>(-4, 3));
    ComplexBall cj = conj_ball(a);
    CHECK(cj.mid_complex() == std::complex<double>(3, -4));

    // (1+i)^4 = -4
    ComplexBall one_i = ComplexBall::from_doubles(1, 1, 64);
    ComplexBall p4 = pow_ui(one_i, 4);
    CHECK(contains_si(p4.re(), -4));
    CHECK(contains_si(p4.im(), 0));
}

TEST_CASE("unit circle points") {
    // e^{i pi/2} = i
    RealBall half_pi = mul_2si(RealBall::pi(128), -1);
    ComplexBall i = ComplexBall::unit_circle_point(half_pi);
    CHECK(i.re().contains_zero());
    CHECK(sub(i.im(), RealBall::from_ui(1, 128)).contains_zero());
    CHECK(contains_si(i.abs_sq(), 1));

    // e^{i 2pi/3} has real part -1/2
    RealBall angle = div(mul_2si(RealBall::pi(128), 1),
                         RealBall::from_ui(3, 128));
    ComplexBall w = ComplexBall::unit_circle_point(angle);
    mpq_t q;
    mpq_init(q);
    mpq_set_si(q, -1, 2);
    CHECK(contains_q(w.re(), q));
    mpq_clear(q);
    CHECK(w.im().is_strictly_positive());
}

TEST_CASE("mixed real-complex product") {
    RealBall two = RealBall::from_ui(2, 64);
    ComplexBall z = ComplexBall::from_doubles(1.5, -2.5, 64);
    ComplexBall p = two * z;
    CHECK(p.mid_complex() == std::complex<double>(3, -5));
}
