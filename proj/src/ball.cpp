#include "atiyah/ball.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace atiyah {

namespace {

// Scratch radius-precision temporary. MPFR temporaries are cheap enough at
// 32 bits that we just init/clear per call.
struct RadTmp {
    mpfr_t v;
    RadTmp() { mpfr_init2(v, RealBall::kRadiusPrec); }
    ~RadTmp() { mpfr_clear(v); }
};

// |x| rounded toward the requested direction at radius precision.
void abs_rounded(mpfr_t out, mpfr_srcptr x, mpfr_rnd_t rnd) {
    mpfr_abs(out, x, rnd);
}

} // namespace

RealBall::RealBall(mpfr_prec_t prec, bool) : prec_(prec) {
    mpfr_init2(mid_, prec);
    mpfr_init2(rad_, kRadiusPrec);
}

RealBall::RealBall(mpfr_prec_t prec) : RealBall(prec, true) {
    mpfr_set_zero(mid_, 1);
    mpfr_set_zero(rad_, 1);
}

RealBall::RealBall(const RealBall& other) : RealBall(other.prec_, true) {
    mpfr_set(mid_, other.mid_, MPFR_RNDN);   // same precision: exact
    mpfr_set(rad_, other.rad_, MPFR_RNDU);
}

RealBall::RealBall(RealBall&& other) noexcept : prec_(other.prec_) {
    mpfr_init2(mid_, 2);
    mpfr_init2(rad_, kRadiusPrec);
    mpfr_swap(mid_, other.mid_);
    mpfr_swap(rad_, other.rad_);
}

RealBall& RealBall::operator=(const RealBall& other) {
    if (this != &other) {
        if (prec_ != other.prec_) {
            mpfr_set_prec(mid_, other.prec_);
            prec_ = other.prec_;
        }
        mpfr_set(mid_, other.mid_, MPFR_RNDN);
        mpfr_set(rad_, other.rad_, MPFR_RNDU);
    }
    return *this;
}

RealBall& RealBall::operator=(RealBall&& other) noexcept {
    mpfr_swap(mid_, other.mid_);
    mpfr_swap(rad_, other.rad_);
    std::swap(prec_, other.prec_);
    return *this;
}

RealBall::~RealBall() {
    mpfr_clear(mid_);
    mpfr_clear(rad_);
}

RealBall RealBall::from_double(double x, mpfr_prec_t prec) {
    RealBall r(prec, true);
    int t = mpfr_set_d(r.mid_, x, MPFR_RNDN);
    mpfr_set_zero(r.rad_, 1);
    r.add_round_error(t);
    if (!std::isfinite(x)) r.become_indeterminate();
    return r;
}

RealBall RealBall::from_si(long x, mpfr_prec_t prec) {
    RealBall r(prec, true);
    int t = mpfr_set_si(r.mid_, x, MPFR_RNDN);
    mpfr_set_zero(r.rad_, 1);
    r.add_round_error(t);
    return r;
}

RealBall RealBall::from_ui(unsigned long x, mpfr_prec_t prec) {
    RealBall r(prec, true);
    int t = mpfr_set_ui(r.mid_, x, MPFR_RNDN);
    mpfr_set_zero(r.rad_, 1);
    r.add_round_error(t);
    return r;
}

RealBall RealBall::from_rational(long num, long den, mpfr_prec_t prec) {
    if (den == 0) throw usage_error("RealBall::from_rational: zero denominator");
    RealBall r(prec, true);
    mpfr_set_si(r.mid_, num, MPFR_RNDN);
    mpfr_set_zero(r.rad_, 1);
    int t = mpfr_div_si(r.mid_, r.mid_, den, MPFR_RNDN);
    r.add_round_error(t);
    return r;
}

RealBall RealBall::pi(mpfr_prec_t prec) {
    RealBall r(prec, true);
    int t = mpfr_const_pi(r.mid_, MPFR_RNDN);
    mpfr_set_zero(r.rad_, 1);
    r.add_round_error(t);
    return r;
}

RealBall RealBall::indeterminate(mpfr_prec_t prec) {
    RealBall r(prec);
    r.become_indeterminate();
    return r;
}

RealBall RealBall::zero_centered(mpfr_srcptr radius_upper, mpfr_prec_t prec) {
    RealBall r(prec);
    if (mpfr_sgn(radius_upper) < 0)
        throw usage_error("zero_centered: negative radius");
    mpfr_set(r.rad_, radius_upper, MPFR_RNDU);
    return r;
}

void RealBall::become_indeterminate() {
    mpfr_set_zero(mid_, 1);
    mpfr_set_inf(rad_, 1);
}

bool RealBall::regular() const {
    return mpfr_number_p(mid_) && mpfr_number_p(rad_);
}

// After a correctly rounded (RNDN) operation on mid_, the rounding error is
// at most half an ulp, i.e. 2^(exp - prec - 1). A zero result with nonzero
// ternary cannot occur in the default exponent range.
void RealBall::add_round_error(int ternary) {
    if (ternary == 0) return;
    if (!mpfr_number_p(mid_) || mpfr_zero_p(mid_)) {
        become_indeterminate();
        return;
    }
    RadTmp e;
    mpfr_set_ui_2exp(e.v, 1, mpfr_get_exp(mid_) - prec_ - 1, MPFR_RNDU);
    mpfr_add(rad_, rad_, e.v, MPFR_RNDU);
}

bool RealBall::is_exact() const {
    return regular() && mpfr_zero_p(rad_);
}

bool RealBall::is_indeterminate() const {
    return !regular();
}

bool RealBall::contains_zero() const {
    if (!regular()) return true;
    return mpfr_cmpabs(mid_, rad_) <= 0;
}

bool RealBall::excludes_zero() const {
    return regular() && mpfr_cmpabs(mid_, rad_) > 0;
}

bool RealBall::is_strictly_positive() const {
    return excludes_zero() && mpfr_sgn(mid_) > 0;
}

bool RealBall::is_strictly_negative() const {
    return excludes_zero() && mpfr_sgn(mid_) < 0;
}

void RealBall::lower_bound(mpfr_t out) const {
    if (!regular()) {
        mpfr_set_inf(out, -1);
        return;
    }
    mpfr_sub(out, mid_, rad_, MPFR_RNDD);
}

void RealBall::upper_bound(mpfr_t out) const {
    if (!regular()) {
        mpfr_set_inf(out, 1);
        return;
    }
    mpfr_add(out, mid_, rad_, MPFR_RNDU);
}

bool RealBall::disjoint_from(const RealBall& other) const {
    if (!regular() || !other.regular()) return false;
    mpfr_t ahi, blo;
    mpfr_init2(ahi, prec_);
    mpfr_init2(blo, other.prec_);
    upper_bound(ahi);
    other.lower_bound(blo);
    bool a_below_b = mpfr_cmp(ahi, blo) < 0;
    other.upper_bound(blo);
    lower_bound(ahi);
    bool b_below_a = mpfr_cmp(blo, ahi) < 0;
    mpfr_clear(ahi);
    mpfr_clear(blo);
    return a_below_b || b_below_a;
}

bool RealBall::overlaps(const RealBall& other) const {
    return !disjoint_from(other);
}

bool RealBall::contains_ball(const RealBall& other) const {
    if (!regular()) return true;
    if (!other.regular()) return false;
    mpfr_t a, b;
    mpfr_init2(a, std::max(prec_, other.prec_));
    mpfr_init2(b, std::max(prec_, other.prec_));
    lower_bound(a);
    other.lower_bound(b);
    bool lo_ok = mpfr_cmp(a, b) <= 0;
    upper_bound(a);
    other.upper_bound(b);
    bool hi_ok = mpfr_cmp(b, a) <= 0;
    mpfr_clear(a);
    mpfr_clear(b);
    return lo_ok && hi_ok;
}

double RealBall::mid_double() const {
    return mpfr_get_d(mid_, MPFR_RNDN);
}

double RealBall::rad_double_upper() const {
    return mpfr_get_d(rad_, MPFR_RNDU);
}

namespace {

std::string format_mpfr(mpfr_srcptr x, long digits, mpfr_rnd_t rnd) {
    if (mpfr_nan_p(x)) return "nan";
    if (mpfr_inf_p(x)) return mpfr_sgn(x) > 0 ? "inf" : "-inf";
    if (mpfr_zero_p(x)) return "0";
    mpfr_exp_t e = 0;
    char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), x, rnd);
    std::string body(s);
    mpfr_free_str(s);
    std::string sign;
    if (!body.empty() && body[0] == '-') {
        sign = "-";
        body = body.substr(1);
    }
    // strip trailing zeros but keep at least one digit
    size_t last = body.find_last_not_of('0');
    if (last != std::string::npos) body = body.substr(0, last + 1);
    if (body.empty()) body = "0";
    std::string out = sign + body.substr(0, 1);
    if (body.size() > 1) out += "." + body.substr(1);
    out += "e" + std::to_string(static_cast<long>(e) - 1);
    return out;
}

} // namespace

mpfr_prec_t RealBall::precision() const {
    return prec_;
}

std::string RealBall::mid_string() const {
    long digits = static_cast<long>(static_cast<double>(prec_) * 0.30103) + 3;
    return format_mpfr(mid_, digits, MPFR_RNDN);
}

std::string RealBall::rad_string() const {
    return format_mpfr(rad_, 3, MPFR_RNDU);
}

RealBall add(const RealBall& a, const RealBall& b) {
    mpfr_prec_t p = std::max(a.prec_, b.prec_);
    if (!a.regular() || !b.regular()) return RealBall::indeterminate(p);
    RealBall r(p, true);
    int t = mpfr_add(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
    mpfr_add(r.rad_, a.rad_, b.rad_, MPFR_RNDU);
    r.add_round_error(t);
    return r;
}

RealBall sub(const RealBall& a, const RealBall& b) {
    mpfr_prec_t p = std::max(a.prec_, b.prec_);
    if (!a.regular() || !b.regular()) return RealBall::indeterminate(p);
    RealBall r(p, true);
    int t = mpfr_sub(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
    mpfr_add(r.rad_, a.rad_, b.rad_, MPFR_RNDU);
    r.add_round_error(t);
    return r;
}

RealBall mul(const RealBall& a, const RealBall& b) {
    mpfr_prec_t p = std::max(a.prec_, b.prec_);
    if (!a.regular() || !b.regular()) return RealBall::indeterminate(p);
    RealBall r(p, true);
    int t = mpfr_mul(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
    // rad = |a.mid|*b.rad + |b.mid|*a.rad + a.rad*b.rad, rounded up
    RadTmp am, bm, term;
    abs_rounded(am.v, a.mid_, MPFR_RNDU);
    abs_rounded(bm.v, b.mid_, MPFR_RNDU);
    mpfr_mul(term.v, am.v, b.rad_, MPFR_RNDU);
    mpfr_set(r.rad_, term.v, MPFR_RNDU);
    mpfr_mul(term.v, bm.v, a.rad_, MPFR_RNDU);
    mpfr_add(r.rad_, r.rad_, term.v, MPFR_RNDU);
    mpfr_mul(term.v, a.rad_, b.rad_, MPFR_RNDU);
    mpfr_add(r.rad_, r.rad_, term.v, MPFR_RNDU);
    r.add_round_error(t);
    return r;
}

// For x in [m1 +- r1], y in [m2 +- r2] with |m2| > r2:
//   |x/y - m1/m2| <= (r1|m2| + r2|m1|) / (|m2| (|m2| - r2)).
RealBall div(const RealBall& a, const RealBall& b) {
    mpfr_prec_t p = std::max(a.prec_, b.prec_);
    if (!a.regular() || !b.regular() || !b.excludes_zero())
        return RealBall::indeterminate(p);
    RealBall r(p, true);
    int t = mpfr_div(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
    RadTmp am_up, bm_up, bm_dn, num, term, den;
    abs_rounded(am_up.v, a.mid_, MPFR_RNDU);
    abs_rounded(bm_up.v, b.mid_, MPFR_RNDU);
    abs_rounded(bm_dn.v, b.mid_, MPFR_RNDD);
    mpfr_mul(num.v, a.rad_, bm_up.v, MPFR_RNDU);
    mpfr_mul(term.v, b.rad_, am_up.v, MPFR_RNDU);
    mpfr_add(num.v, num.v, term.v, MPFR_RNDU);
    mpfr_sub(den.v, bm_dn.v, b.rad_, MPFR_RNDD);
    mpfr_mul(den.v, den.v, bm_dn.v, MPFR_RNDD);
    if (!(mpfr_sgn(den.v) > 0)) return RealBall::indeterminate(p);
    mpfr_div(r.rad_, num.v, den.v, MPFR_RNDU);
    r.add_round_error(t);
    return r;
}

RealBall neg(const RealBall& a) {
    RealBall r(a);
    mpfr_neg(r.mid_, r.mid_, MPFR_RNDN);   // exact
    return r;
}

RealBall abs_ball(const RealBall& a) {
    RealBall r(a);
    mpfr_abs(r.mid_, r.mid_, MPFR_RNDN);   // exact
    return r;
}

// Monotone: take the root of both endpoints with directed rounding, then
// re-center. The enclosure is intersected with [0, inf); callers only apply
// this to quantities that are exactly nonnegative.
RealBall sqrt_ball(const RealBall& a) {
    mpfr_prec_t p = a.prec_;
    if (!a.regular()) return RealBall::indeterminate(p);
    mpfr_t lo, hi;
    mpfr_init2(lo, p);
    mpfr_init2(hi, p);
    a.lower_bound(lo);
    a.upper_bound(hi);
    if (mpfr_sgn(hi) < 0) {
        mpfr_clear(lo);
        mpfr_clear(hi);
        throw usage_error("sqrt_ball: enclosure entirely negative");
    }
    if (mpfr_sgn(lo) < 0) mpfr_set_zero(lo, 1);
    mpfr_sqrt(lo, lo, MPFR_RNDD);
    mpfr_sqrt(hi, hi, MPFR_RNDU);
    RealBall r(p, true);
    mpfr_add(r.mid_, lo, hi, MPFR_RNDN);
    mpfr_div_2ui(r.mid_, r.mid_, 1, MPFR_RNDN);
    // rad covers [lo, hi] around the rounded midpoint
    RadTmp d1, d2;
    mpfr_sub(d1.v, hi, r.mid_, MPFR_RNDU);
    mpfr_sub(d2.v, r.mid_, lo, MPFR_RNDU);
    if (mpfr_cmp(d1.v, d2.v) >= 0)
        mpfr_set(r.rad_, d1.v, MPFR_RNDU);
    else
        mpfr_set(r.rad_, d2.v, MPFR_RNDU);
    if (mpfr_sgn(r.rad_) < 0) mpfr_set_zero(r.rad_, 1);
    mpfr_clear(lo);
    mpfr_clear(hi);
    return r;
}

// sin and cos are 1-Lipschitz: evaluate at the midpoint, keep the input
// radius, and absorb the evaluation's own rounding error.
RealBall sin_ball(const RealBall& a) {
    if (!a.regular()) return RealBall::indeterminate(a.prec_);
    RealBall r(a);
    int t = mpfr_sin(r.mid_, a.mid_, MPFR_RNDN);
    r.add_round_error(t);
    return r;
}

RealBall cos_ball(const RealBall& a) {
    if (!a.regular()) return RealBall::indeterminate(a.prec_);
    RealBall r(a);
    int t = mpfr_cos(r.mid_, a.mid_, MPFR_RNDN);
    r.add_round_error(t);
    return r;
}

RealBall pow_ui(const RealBall& a, unsigned long e) {
    RealBall acc = RealBall::from_ui(1, a.prec_);
    RealBall base(a);
    while (e > 0) {
        if (e & 1UL) acc = mul(acc, base);
        e >>= 1UL;
        if (e > 0) base = mul(base, base);
    }
    return acc;
}

RealBall mul_2si(const RealBall& a, long e) {
    RealBall r(a);
    mpfr_mul_2si(r.mid_, r.mid_, e, MPFR_RNDN);   // exact
    mpfr_mul_2si(r.rad_, r.rad_, e, MPFR_RNDU);
    return r;
}

RealBall hull(const RealBall& a, const RealBall& b) {
    mpfr_prec_t p = std::max(a.prec_, b.prec_);
    if (!a.regular() || !b.regular()) return RealBall::indeterminate(p);
    mpfr_t lo, hi, t;
    mpfr_init2(lo, p);
    mpfr_init2(hi, p);
    mpfr_init2(t, p);
    a.lower_bound(lo);
    b.lower_bound(t);
    if (mpfr_cmp(t, lo) < 0) mpfr_set(lo, t, MPFR_RNDD);
    a.upper_bound(hi);
    b.upper_bound(t);
    if (mpfr_cmp(t, hi) > 0) mpfr_set(hi, t, MPFR_RNDU);
    RealBall r(p, true);
    mpfr_add(r.mid_, lo, hi, MPFR_RNDN);
    mpfr_div_2ui(r.mid_, r.mid_, 1, MPFR_RNDN);
    RadTmp d1, d2;
    mpfr_sub(d1.v, hi, r.mid_, MPFR_RNDU);
    mpfr_sub(d2.v, r.mid_, lo, MPFR_RNDU);
    if (mpfr_cmp(d1.v, d2.v) >= 0)
        mpfr_set(r.rad_, d1.v, MPFR_RNDU);
    else
        mpfr_set(r.rad_, d2.v, MPFR_RNDU);
    if (mpfr_sgn(r.rad_) < 0) mpfr_set_zero(r.rad_, 1);
    mpfr_clear(lo);
    mpfr_clear(hi);
    mpfr_clear(t);
    return r;
}

RealBall operator+(const RealBall& a, const RealBall& b) { return add(a, b); }
RealBall operator-(const RealBall& a, const RealBall& b) { return sub(a, b); }
RealBall operator*(const RealBall& a, const RealBall& b) { return mul(a, b); }
RealBall operator/(const RealBall& a, const RealBall& b) { return div(a, b); }
RealBall operator-(const RealBall& a) { return neg(a); }

// ---------------------------------------------------------------------------
// ComplexBall

ComplexBall::ComplexBall(RealBall re, RealBall im)
    : re_(std::move(re)), im_(std::move(im)) {}

ComplexBall::ComplexBall(mpfr_prec_t prec) : re_(prec), im_(prec) {}

ComplexBall ComplexBall::from_real(RealBall re) {
    mpfr_prec_t p = re.prec();
    return ComplexBall(std::move(re), RealBall(p));
}

ComplexBall ComplexBall::from_doubles(double re, double im, mpfr_prec_t prec) {
    return ComplexBall(RealBall::from_double(re, prec),
                       RealBall::from_double(im, prec));
}

ComplexBall ComplexBall::from_complex(std::complex<double> z, mpfr_prec_t prec) {
    return from_doubles(z.real(), z.imag(), prec);
}

ComplexBall ComplexBall::unit_circle_point(const RealBall& angle) {
    return ComplexBall(cos_ball(angle), sin_ball(angle));
}

bool ComplexBall::is_exact_zero() const {
    return re_.is_exact() && im_.is_exact() &&
           mpfr_zero_p(re_.mid()) && mpfr_zero_p(im_.mid());
}

bool ComplexBall::overlaps(const ComplexBall& other) const {
    return re_.overlaps(other.re_) && im_.overlaps(other.im_);
}

std::complex<double> ComplexBall::mid_complex() const {
    return {re_.mid_double(), im_.mid_double()};
}

double ComplexBall::rad_double_upper() const {
    double rr = re_.rad_double_upper();
    double ri = im_.rad_double_upper();
    return std::hypot(rr, ri) * (1.0 + 1e-15);
}

std::string ComplexBall::rad_string() const {
    // hypot of the two component radii, rounded up
    mpfr_t tmp;
    mpfr_init2(tmp, RealBall::kRadiusPrec);
    mpfr_hypot(tmp, re_.rad(), im_.rad(), MPFR_RNDU);
    std::string s = format_mpfr(tmp, 3, MPFR_RNDU);
    mpfr_clear(tmp);
    return s;
}

ComplexBall add(const ComplexBall& a, const ComplexBall& b) {
    return {add(a.re_, b.re_), add(a.im_, b.im_)};
}

ComplexBall sub(const ComplexBall& a, const ComplexBall& b) {
    return {sub(a.re_, b.re_), sub(a.im_, b.im_)};
}

ComplexBall mul(const ComplexBall& a, const ComplexBall& b) {
    return {sub(mul(a.re_, b.re_), mul(a.im_, b.im_)),
            add(mul(a.re_, b.im_), mul(a.im_, b.re_))};
}

ComplexBall div(const ComplexBall& a, const ComplexBall& b) {
    RealBall d = b.abs_sq();
    if (!d.is_strictly_positive()) {
        mpfr_prec_t p = std::max(a.prec(), b.prec());
        return {RealBall::indeterminate(p), RealBall::indeterminate(p)};
    }
    ComplexBall num = mul(a, conj_ball(b));
    return {div(num.re_, d), div(num.im_, d)};
}

ComplexBall neg(const ComplexBall& a) { return {neg(a.re_), neg(a.im_)}; }

ComplexBall conj_ball(const ComplexBall& a) { return {a.re_, neg(a.im_)}; }

ComplexBall mul_i(const ComplexBall& a) { return {neg(a.im_), a.re_}; }

ComplexBall pow_ui(const ComplexBall& a, unsigned long e) {
    ComplexBall acc = ComplexBall::from_real(RealBall::from_ui(1, a.re_.precision()));
    ComplexBall base(a);
    while (e > 0) {
        if (e & 1UL) acc = mul(acc, base);
        e >>= 1UL;
        if (e > 0) base = mul(base, base);
    }
    return acc;
}

RealBall ComplexBall::abs_sq() const {
    return add(mul(re_, re_), mul(im_, im_));
}

RealBall ComplexBall::abs_ball() const {
    return sqrt_ball(abs_sq());
}

ComplexBall operator+(const ComplexBall& a, const ComplexBall& b) { return add(a, b); }
ComplexBall operator-(const ComplexBall& a, const ComplexBall& b) { return sub(a, b); }
ComplexBall operator*(const ComplexBall& a, const ComplexBall& b) { return mul(a, b); }
ComplexBall operator/(const ComplexBall& a, const ComplexBall& b) { return div(a, b); }
ComplexBall operator-(const ComplexBall& a) { return neg(a); }

ComplexBall operator*(const RealBall& a, const ComplexBall& b) {
    return {mul(a, b.re()), mul(a, b.im())};
}

} // namespace atiyah
