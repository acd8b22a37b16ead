#include "atiyah/certified.hpp"

#include <algorithm>

#include "atiyah/errors.hpp"

namespace atiyah {

const char* to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::CertifiedNonzero: return "certified_nonzero";
        case VerdictStatus::CertifiedZero: return "certified_zero";
        case VerdictStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

const char* to_string(Comparison c) {
    switch (c) {
        case Comparison::Less: return "less";
        case Comparison::Greater: return "greater";
        case Comparison::Overlapping: return "overlapping";
    }
    return "?";
}

namespace {

void check_square(const BallMatrix& m) {
    for (const auto& row : m)
        if (row.size() != m.size())
            throw usage_error("determinant: matrix is not square");
}

// Compare |mid| of two complex entries, deterministically, at a fixed
// 64-bit working precision. Used only for pivot ordering, not for rigor.
int cmp_mid_magnitude(const ComplexBall& a, const ComplexBall& b) {
    mpfr_t ma, mb;
    mpfr_init2(ma, 64);
    mpfr_init2(mb, 64);
    mpfr_hypot(ma, a.re().mid(), a.im().mid(), MPFR_RNDN);
    mpfr_hypot(mb, b.re().mid(), b.im().mid(), MPFR_RNDN);
    int c = mpfr_cmp(ma, mb);
    mpfr_clear(ma);
    mpfr_clear(mb);
    return c;
}

// Upper bound on |z|^2 over the whole enclosure, rounded up at radius
// precision: (|re mid| + re rad)^2 + (|im mid| + im rad)^2.
void abs_sq_upper(mpfr_t out, const ComplexBall& z) {
    mpfr_t t, s;
    mpfr_init2(t, RealBall::kRadiusPrec);
    mpfr_init2(s, RealBall::kRadiusPrec);
    mpfr_abs(t, z.re().mid(), MPFR_RNDU);
    mpfr_add(t, t, z.re().rad(), MPFR_RNDU);
    mpfr_sqr(s, t, MPFR_RNDU);
    mpfr_abs(t, z.im().mid(), MPFR_RNDU);
    mpfr_add(t, t, z.im().rad(), MPFR_RNDU);
    mpfr_sqr(t, t, MPFR_RNDU);
    mpfr_add(out, s, t, MPFR_RNDU);
    mpfr_clear(t);
    mpfr_clear(s);
}

// Hadamard bound on |det| of the trailing block m[k..][k..], rounded up.
RealBall hadamard_bound(const BallMatrix& m, size_t k, mpfr_prec_t prec) {
    size_t n = m.size();
    mpfr_t acc, row, term;
    mpfr_init2(acc, RealBall::kRadiusPrec);
    mpfr_init2(row, RealBall::kRadiusPrec);
    mpfr_init2(term, RealBall::kRadiusPrec);
    mpfr_set_ui(acc, 1, MPFR_RNDU);
    for (size_t i = k; i < n; ++i) {
        mpfr_set_zero(row, 1);
        for (size_t j = k; j < n; ++j) {
            abs_sq_upper(term, m[i][j]);
            mpfr_add(row, row, term, MPFR_RNDU);
        }
        mpfr_sqrt(row, row, MPFR_RNDU);
        mpfr_mul(acc, acc, row, MPFR_RNDU);
    }
    RealBall res = RealBall::zero_centered(acc, prec);
    mpfr_clear(acc);
    mpfr_clear(row);
    mpfr_clear(term);
    return res;
}

bool rows_exactly_equal(const BallMatrix& m, size_t r1, size_t r2) {
    for (size_t j = 0; j < m.size(); ++j) {
        const ComplexBall &a = m[r1][j], &b = m[r2][j];
        if (!a.is_exact() || !b.is_exact()) return false;
        if (!mpfr_equal_p(a.re().mid(), b.re().mid())) return false;
        if (!mpfr_equal_p(a.im().mid(), b.im().mid())) return false;
    }
    return true;
}

bool row_exactly_zero(const BallMatrix& m, size_t r) {
    for (size_t j = 0; j < m.size(); ++j)
        if (!m[r][j].is_exact_zero()) return false;
    return true;
}

// nullopt-like: returns true and sets out when a structural zero exists.
bool structural_zero(const BallMatrix& m) {
    size_t n = m.size();
    for (size_t i = 0; i < n; ++i)
        if (row_exactly_zero(m, i)) return true;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (rows_exactly_equal(m, i, j)) return true;
    return false;
}

} // namespace

ComplexBall det_ball(BallMatrix m) {
    check_square(m);
    size_t n = m.size();
    if (n == 0) throw usage_error("determinant: empty matrix");
    mpfr_prec_t prec = m[0][0].re().precision();

    ComplexBall det = ComplexBall::from_doubles(1.0, 0.0, prec);
    int sign = 1;
    for (size_t k = 0; k < n; ++k) {
        // pivot: largest midpoint magnitude among rows whose entry in
        // column k certifiably excludes zero; lowest row wins ties
        size_t pivot = n;
        for (size_t i = k; i < n; ++i) {
            if (!m[i][k].excludes_zero()) continue;
            if (pivot == n || cmp_mid_magnitude(m[i][k], m[pivot][k]) > 0)
                pivot = i;
        }
        if (pivot == n) {
            // no certified pivot: bound the trailing block instead
            RealBall bound = hadamard_bound(m, k, prec);
            ComplexBall block(bound, bound);
            return mul(det, block);
        }
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        det = mul(det, m[k][k]);
        for (size_t i = k + 1; i < n; ++i) {
            ComplexBall factor = div(m[i][k], m[k][k]);
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = sub(m[i][j], mul(factor, m[k][j]));
        }
    }
    if (sign < 0) det = neg(det);
    return det;
}

Verdict det_certified(const std::function<BallMatrix(mpfr_prec_t)>& matrix_at,
                      const PrecisionPolicy& policy) {
    if (policy.initial_bits > policy.max_bits)
        throw usage_error("precision policy: initial_bits > max_bits");
    mpfr_prec_t bits = policy.initial_bits;
    while (true) {
        BallMatrix m = matrix_at(bits);
        check_square(m);
        if (structural_zero(m)) {
            return Verdict{VerdictStatus::CertifiedZero, ComplexBall(bits),
                           bits};
        }
        ComplexBall d = det_ball(std::move(m));
        if (d.excludes_zero())
            return Verdict{VerdictStatus::CertifiedNonzero, d, bits};
        if (bits >= policy.max_bits)
            return Verdict{VerdictStatus::Inconclusive, d, bits};
        bits = std::min<mpfr_prec_t>(bits * 2, policy.max_bits);
    }
}

Verdict det_certified(const BallMatrix& m, const PrecisionPolicy& policy) {
    return det_certified([&m](mpfr_prec_t) { return m; }, policy);
}

Comparison compare_certified(const RealBall& a, const RealBall& b) {
    if (a.disjoint_from(b)) {
        mpfr_t ahi, blo;
        mpfr_init2(ahi, a.prec());
        mpfr_init2(blo, b.prec());
        a.upper_bound(ahi);
        b.lower_bound(blo);
        bool less = mpfr_cmp(ahi, blo) < 0;
        mpfr_clear(ahi);
        mpfr_clear(blo);
        return less ? Comparison::Less : Comparison::Greater;
    }
    return Comparison::Overlapping;
}

} // namespace atiyah
