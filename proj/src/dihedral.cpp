#include "atiyah/dihedral.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>

#include "atiyah/binary_form.hpp"
#include "atiyah/errors.hpp"

namespace atiyah {

namespace {

// 2*pi*num/den as an enclosure.
RealBall circle_angle(long num, long den, mpfr_prec_t prec) {
    RealBall two_pi = mul_2si(RealBall::pi(prec), 1);
    return div(mul(two_pi, RealBall::from_si(num, prec)),
               RealBall::from_si(den, prec));
}

// zeta^e for zeta = e^{2 pi i / n}, with the exponent reduced mod n first
// so the evaluated angle stays in [0, 2*pi).
ComplexBall zeta_power(long e, long n, mpfr_prec_t prec) {
    long r = e % n;
    if (r < 0) r += n;
    return ComplexBall::unit_circle_point(circle_angle(r, n, prec));
}

void validate_polygon_order(long n) {
    if (n < 1) throw validation_error("polygon order n must be >= 1");
}

} // namespace

DihedralConfig::DihedralConfig(Kind kind, std::vector<double> values, long n)
    : kind_(kind), values_(std::move(values)), n_(n) {}

DihedralConfig DihedralConfig::from_axis(std::vector<double> axis_coords,
                                         long n) {
    validate_polygon_order(n);
    for (std::size_t i = 0; i < axis_coords.size(); ++i) {
        if (!std::isfinite(axis_coords[i])) {
            throw validation_error("axis coordinates must be finite");
        }
        if (i > 0 && !(axis_coords[i - 1] < axis_coords[i])) {
            throw validation_error(
                "axis coordinates must be strictly increasing");
        }
    }
    if (static_cast<long>(axis_coords.size()) + n < 2) {
        throw validation_error("a configuration needs at least 2 points");
    }
    return DihedralConfig(Kind::Axis, std::move(axis_coords), n);
}

DihedralConfig DihedralConfig::from_lambdas(std::vector<double> lambdas,
                                            long n) {
    validate_polygon_order(n);
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        if (!std::isfinite(lambdas[i]) || lambdas[i] <= 0.0) {
            throw validation_error("lambda values must be finite and > 0");
        }
        if (i > 0 && lambdas[i - 1] > lambdas[i]) {
            throw validation_error("lambda values must be non-decreasing");
        }
    }
    if (static_cast<long>(lambdas.size()) + n < 2) {
        throw validation_error("a configuration needs at least 2 points");
    }
    return DihedralConfig(Kind::Lambda, std::move(lambdas), n);
}

std::string DihedralConfig::param_kind() const {
    switch (kind_) {
        case Kind::Axis: return "axis";
        case Kind::Lambda: return "lambda";
        case Kind::LambdaInverse: return "lambda-inverse";
    }
    throw internal_error("unreachable");
}

DihedralConfig DihedralConfig::inverted() const {
    std::vector<double> rev(values_.rbegin(), values_.rend());
    switch (kind_) {
        case Kind::Axis:
            // Reflecting the axis is exact on the coordinates and realizes
            // lambda -> 1/lambda without any rounding.
            for (double& a : rev) a = -a;
            return DihedralConfig(Kind::Axis, std::move(rev), n_);
        case Kind::Lambda:
            return DihedralConfig(Kind::LambdaInverse, std::move(rev), n_);
        case Kind::LambdaInverse:
            return DihedralConfig(Kind::Lambda, std::move(rev), n_);
    }
    throw internal_error("unreachable");
}

std::vector<RealBall> DihedralConfig::lambdas(mpfr_prec_t prec) const {
    std::vector<RealBall> out;
    out.reserve(values_.size());
    for (double v : values_) {
        switch (kind_) {
            case Kind::Axis:
                out.push_back(lambda_of(v, prec));
                break;
            case Kind::Lambda:
                out.push_back(RealBall::from_double(v, prec));
                break;
            case Kind::LambdaInverse:
                out.push_back(div(RealBall::from_si(1, prec),
                                  RealBall::from_double(v, prec)));
                break;
        }
    }
    return out;
}

Configuration DihedralConfig::to_configuration() const {
    if (kind_ != Kind::Axis) {
        throw usage_error(
            "only axis-built dihedral configs map to a point configuration");
    }
    std::vector<Configuration::PointSpec> specs;
    specs.reserve(static_cast<std::size_t>(N()));
    for (double a : values_) {
        specs.emplace_back(Point3{a, {0.0, 0.0}});
    }
    for (long j = 0; j < n_; ++j) {
        specs.emplace_back(Configuration::PolygonVertex{j, n_});
    }
    return Configuration::from_specs_unchecked(std::move(specs));
}

RealBall lambda_of(double a, mpfr_prec_t prec) {
    if (!std::isfinite(a)) throw validation_error("lambda_of: non-finite input");
    RealBall ab = RealBall::from_double(a, prec);
    RealBall root =
        sqrt_ball(add(RealBall::from_si(1, prec), mul(ab, ab)));
    if (a < 0.0) {
        // a + root cancels; 1 / (root - a) is the same value, addition only.
        return div(RealBall::from_si(1, prec), sub(root, ab));
    }
    return add(ab, root);
}

ComplexBall polygon_vertex(long j, long n, mpfr_prec_t prec) {
    validate_polygon_order(n);
    return neg(zeta_power(j, n, prec));
}

ComplexBall chord_closed_form(long j, long s, long n, mpfr_prec_t prec) {
    validate_polygon_order(n);
    // -2i e^{i pi (j+s)/n} sin(pi (s-j)/n)
    RealBall pi_ball = RealBall::pi(prec);
    RealBall nb = RealBall::from_si(n, prec);
    RealBall half_angle =
        div(mul(pi_ball, RealBall::from_si(j + s, prec)), nb);
    RealBall sine =
        sin_ball(div(mul(pi_ball, RealBall::from_si(s - j, prec)), nb));
    ComplexBall phase = ComplexBall::unit_circle_point(half_angle);
    return neg(mul_i(mul_2si(sine, 1) * phase));
}

std::vector<RealBall> c_coefficients(long n, mpfr_prec_t prec) {
    validate_polygon_order(n);
    // Expand prod_{s=1}^{n-1} (y - i e^{i pi s/n}) with ascending-power
    // coefficients, then read c_j = coeff of y^{n-1-j}.
    std::vector<ComplexBall> poly;
    poly.push_back(ComplexBall::from_real(RealBall::from_si(1, prec)));
    RealBall pi_ball = RealBall::pi(prec);
    RealBall nb = RealBall::from_si(n, prec);
    for (long s = 1; s <= n - 1; ++s) {
        RealBall angle = div(mul(pi_ball, RealBall::from_si(s, prec)), nb);
        ComplexBall root = mul_i(ComplexBall::unit_circle_point(angle));
        std::vector<ComplexBall> next(poly.size() + 1, ComplexBall(prec));
        for (std::size_t t = 0; t < poly.size(); ++t) {
            next[t + 1] = add(next[t + 1], poly[t]);
            next[t] = sub(next[t], mul(root, poly[t]));
        }
        poly = std::move(next);
    }
    std::vector<RealBall> c;
    c.reserve(static_cast<std::size_t>(n));
    for (long jj = 0; jj < n; ++jj) {
        const ComplexBall& coeff = poly[static_cast<std::size_t>(n - 1 - jj)];
        if (!coeff.im().contains_zero()) {
            throw internal_error(
                "c coefficient has imaginary enclosure excluding 0");
        }
        c.push_back(coeff.re());
    }
    return c;
}

std::vector<RealBall> elementary_symmetric(const std::vector<RealBall>& values,
                                           mpfr_prec_t prec) {
    std::vector<RealBall> e;
    e.push_back(RealBall::from_si(1, prec));
    for (const RealBall& v : values) {
        e.push_back(RealBall(prec));  // new top coefficient, starts at 0
        for (std::size_t k = e.size() - 1; k >= 1; --k) {
            e[k] = add(e[k], mul(v, e[k - 1]));
        }
    }
    return e;
}

SymmetricCoefficients symmetric_coefficients(const DihedralConfig& cfg,
                                             mpfr_prec_t prec) {
    SymmetricCoefficients sc;
    sc.c = c_coefficients(cfg.n(), prec);
    sc.E = elementary_symmetric(cfg.lambdas(prec), prec);
    const long big_n = cfg.N();
    const long m = cfg.m();
    sc.tildeE.reserve(static_cast<std::size_t>(big_n));
    for (long k = 0; k < big_n; ++k) {
        RealBall acc(prec);
        for (long i = 0; i < cfg.n(); ++i) {
            long ei = k - i;
            if (ei < 0 || ei > m) continue;
            acc = add(acc, mul(sc.c[static_cast<std::size_t>(i)],
                               sc.E[static_cast<std::size_t>(ei)]));
        }
        sc.tildeE.push_back(std::move(acc));
    }
    return sc;
}

std::vector<RealBall> tilde_E(const DihedralConfig& cfg, mpfr_prec_t prec) {
    return symmetric_coefficients(cfg, prec).tildeE;
}

std::vector<RealBall> f_values(const DihedralConfig& cfg, mpfr_prec_t prec) {
    const long n = cfg.n();
    const long m = cfg.m();
    const long big_n = cfg.N();
    const std::vector<RealBall> te = tilde_E(cfg, prec);
    const std::vector<RealBall> lam = cfg.lambdas(prec);
    std::vector<RealBall> f;
    f.reserve(static_cast<std::size_t>(n));
    for (long k = 0; k < n; ++k) {
        RealBall acc(prec);
        RealBall lambda_prod = RealBall::from_si(1, prec);
        for (long s = 0; k + s * n <= big_n - 1; ++s) {
            if (s >= 1) {
                // lambda subscript N - sn - k; for s = 1 this is m - k,
                // the other indexing of the same factor.
                long idx = big_n - s * n - k;
                if (s == 1 && idx != m - k) {
                    throw internal_error("lambda index conventions disagree");
                }
                if (idx < 1 || idx > m) {
                    throw internal_error("lambda index out of range");
                }
                lambda_prod =
                    mul(lambda_prod,
                        pow_ui(lam[static_cast<std::size_t>(idx - 1)],
                               static_cast<unsigned long>(n)));
            }
            acc = add(acc, mul(lambda_prod,
                               te[static_cast<std::size_t>(k + s * n)]));
        }
        f.push_back(std::move(acc));
    }
    return f;
}

ClosedFormResult closed_form_abs_det(const DihedralConfig& cfg,
                                     mpfr_prec_t prec) {
    ClosedFormResult r;
    r.f = f_values(cfg, prec);
    const long n = cfg.n();
    RealBall nb = RealBall::from_si(n, prec);
    RealBall c = pow_ui(nb, static_cast<unsigned long>(n / 2));
    if (n % 2 != 0) c = mul(c, sqrt_ball(nb));
    RealBall det(c);
    for (const RealBall& fk : r.f) det = mul(det, fk);
    r.c_factor = std::move(c);
    r.abs_det = std::move(det);
    return r;
}

BallMatrix closed_form_matrix(const DihedralConfig& cfg, mpfr_prec_t prec) {
    const long m = cfg.m();
    const long n = cfg.n();
    const long big_n = cfg.N();
    const std::vector<RealBall> lam = cfg.lambdas(prec);
    const std::vector<RealBall> te = tilde_E(cfg, prec);

    BallMatrix p(static_cast<std::size_t>(big_n),
                 std::vector<ComplexBall>(static_cast<std::size_t>(big_n),
                                          ComplexBall(prec)));
    // Row i-1 (1 <= i <= m): y^{i-1} - lambda_i^n y^{i-1+n}.
    for (long i = 1; i <= m; ++i) {
        auto& row = p[static_cast<std::size_t>(i - 1)];
        row[static_cast<std::size_t>(i - 1)] =
            ComplexBall::from_real(RealBall::from_si(1, prec));
        row[static_cast<std::size_t>(i - 1 + n)] =
            ComplexBall::from_real(
                neg(pow_ui(lam[static_cast<std::size_t>(i - 1)],
                           static_cast<unsigned long>(n))));
    }
    // Row m+j: coefficients of f(zeta^j y); the y^k coefficient is
    // ~E_{N-1-k} zeta^{jk}.
    for (long j = 0; j < n; ++j) {
        auto& row = p[static_cast<std::size_t>(m + j)];
        for (long k = 0; k < big_n; ++k) {
            row[static_cast<std::size_t>(k)] =
                te[static_cast<std::size_t>(big_n - 1 - k)] *
                zeta_power(j * k, n, prec);
        }
    }
    return p;
}

CrossCheckResult cross_check_proportionality(const DihedralConfig& cfg,
                                             mpfr_prec_t prec,
                                             const PrecisionPolicy& policy) {
    if (!cfg.axis_built()) {
        throw usage_error("cross-check needs an axis-built dihedral config");
    }
    const long m = cfg.m();
    const long n = cfg.n();
    const std::size_t big_n = static_cast<std::size_t>(cfg.N());

    CrossCheckResult r;
    r.prec = prec;
    r.closed_form = closed_form_abs_det(cfg, prec);

    const Configuration conf = cfg.to_configuration();
    const BallMatrix g = coefficient_matrix_generic(conf, prec);
    const BallMatrix p = closed_form_matrix(cfg, prec);

    r.proportional = true;
    RealBall sigma_abs_prod = RealBall::from_si(1, prec);
    for (std::size_t gr = 0; gr < big_n; ++gr) {
        RowProportionality row;
        row.generic_row = gr;
        std::size_t cref = 0;
        if (gr < static_cast<std::size_t>(m)) {
            row.reference_row = gr;
            cref = gr;  // entry of P there is exactly 1
        } else {
            long j = static_cast<long>(gr) - m;
            row.reference_row =
                static_cast<std::size_t>(m + ((n - j) % n));
            cref = 0;  // entry of P there is ~E_{N-1} > 0
        }
        const auto& grow = g[gr];
        const auto& prow = p[row.reference_row];
        row.sigma = div(grow[cref], prow[cref]);
        row.consistent = true;
        for (std::size_t k = 0; k < big_n; ++k) {
            ComplexBall d =
                sub(mul(grow[k], prow[cref]), mul(grow[cref], prow[k]));
            if (d.excludes_zero()) {
                row.consistent = false;
                row.bad_column = k;
                r.proportional = false;
                break;
            }
        }
        sigma_abs_prod = mul(sigma_abs_prod, row.sigma.abs_ball());
        r.rows.push_back(std::move(row));
    }

    r.generic_abs_det = det_ball(g).abs_ball();
    r.predicted_abs_det = mul(sigma_abs_prod, r.closed_form.abs_det);
    r.det_match = r.generic_abs_det.overlaps(r.predicted_abs_det);

    r.generic_verdict = det_certified(
        [&conf](mpfr_prec_t bits) {
            return coefficient_matrix_generic(conf, bits);
        },
        policy);
    return r;
}

} // namespace atiyah
