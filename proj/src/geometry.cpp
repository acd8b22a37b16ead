#include "atiyah/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "atiyah/errors.hpp"

namespace atiyah {

Point3 point_from_xyz(double x1, double x2, double x3) {
    return Point3{x1, {x2, x3}};
}

namespace {

void check_finite(const std::vector<Point3>& pts) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Point3& p = pts[i];
        if (!std::isfinite(p.a) || !std::isfinite(p.z.real()) ||
            !std::isfinite(p.z.imag()))
            throw validation_error("point " + std::to_string(i + 1) +
                                   " has non-finite coordinates");
    }
}

void check_distinct(const std::vector<Point3>& pts) {
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i] == pts[j])
                throw validation_error(
                    "duplicate points at positions " + std::to_string(i + 1) +
                    " and " + std::to_string(j + 1));
}

void check_ordering(const std::vector<Point3>& pts) {
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i].z == pts[j].z && !(pts[i].a < pts[j].a))
                throw validation_error(
                    "ordering convention violated by points " +
                    std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                    " (equal z requires increasing a)");
}

// -zeta^j with zeta = e^{2 pi i / n}, computed from the angle directly so
// enclosures stay tight for large j.
ComplexBall polygon_point(long j, long n, mpfr_prec_t prec) {
    RealBall angle = RealBall::pi(prec);
    angle = mul(angle, RealBall::from_si(2 * j, prec));
    angle = div(angle, RealBall::from_si(n, prec));
    return neg(ComplexBall::unit_circle_point(angle));
}

} // namespace

Configuration Configuration::from_points(std::vector<Point3> points) {
    if (points.size() < 2)
        throw validation_error("configuration needs at least 2 points");
    check_finite(points);
    check_distinct(points);
    check_ordering(points);
    Configuration cfg;
    cfg.specs_.reserve(points.size());
    for (const Point3& p : points) cfg.specs_.emplace_back(p);
    return cfg;
}

Configuration Configuration::from_specs_unchecked(std::vector<PointSpec> specs) {
    Configuration cfg;
    cfg.specs_ = std::move(specs);
    return cfg;
}

std::vector<BallPoint> Configuration::realize(mpfr_prec_t prec) const {
    std::vector<BallPoint> out;
    out.reserve(specs_.size());
    for (const PointSpec& s : specs_) {
        if (const Point3* p = std::get_if<Point3>(&s)) {
            out.push_back(BallPoint{RealBall::from_double(p->a, prec),
                                    ComplexBall::from_complex(p->z, prec)});
        } else {
            const auto& v = std::get<PolygonVertex>(s);
            out.push_back(
                BallPoint{RealBall(prec), polygon_point(v.j, v.n, prec)});
        }
    }
    return out;
}

bool Configuration::all_exact() const {
    return std::all_of(specs_.begin(), specs_.end(), [](const PointSpec& s) {
        return std::holds_alternative<Point3>(s);
    });
}

std::vector<Point3> Configuration::exact_points() const {
    std::vector<Point3> out;
    out.reserve(specs_.size());
    for (const PointSpec& s : specs_) out.push_back(std::get<Point3>(s));
    return out;
}

BallPoint hopf_project(const ComplexBall& z, const ComplexBall& w) {
    if (z.is_exact_zero() && w.is_exact_zero())
        throw usage_error("hopf_project: zero input pair");
    RealBall a = mul_2si(sub(z.abs_sq(), w.abs_sq()), -1);
    return BallPoint{std::move(a), mul(z, conj_ball(w))};
}

BallPoint hopf_project(std::complex<double> z, std::complex<double> w,
                       mpfr_prec_t prec) {
    return hopf_project(ComplexBall::from_complex(z, prec),
                        ComplexBall::from_complex(w, prec));
}

RealBall lambda_pair(const BallPoint& xi, const BallPoint& xj) {
    RealBall da = sub(xj.a, xi.a);
    ComplexBall dz = sub(xj.z, xi.z);
    if (da.is_exact() && mpfr_zero_p(da.mid()) && dz.is_exact_zero())
        throw usage_error("lambda_pair: identical points");
    RealBall dz_sq = dz.abs_sq();
    RealBall root = sqrt_ball(add(mul(da, da), dz_sq));
    if (mpfr_sgn(da.mid()) < 0) {
        // conjugate form; exact zero when the points share z
        return div(dz_sq, add(neg(da), root));
    }
    return add(da, root);
}

LinearForm linear_form(std::size_t i, std::size_t j,
                       const std::vector<BallPoint>& pts) {
    if (i == j) throw usage_error("linear_form: i == j");
    if (i >= pts.size() || j >= pts.size())
        throw usage_error("linear_form: index out of range");
    const BallPoint& pi_ = pts[i];
    const BallPoint& pj_ = pts[j];
    if (i < j) {
        RealBall lam = lambda_pair(pi_, pj_);
        ComplexBall v = sub(conj_ball(pj_.z), conj_ball(pi_.z));
        return LinearForm{ComplexBall::from_real(std::move(lam)), std::move(v)};
    }
    RealBall lam = lambda_pair(pj_, pi_);
    ComplexBall u = sub(pj_.z, pi_.z);
    return LinearForm{std::move(u), ComplexBall::from_real(std::move(lam))};
}

std::pair<Configuration, std::vector<std::size_t>>
normalize_configuration(const std::vector<Point3>& raw) {
    if (raw.size() < 2)
        throw validation_error("configuration needs at least 2 points");
    check_finite(raw);
    check_distinct(raw);

    // Stable-sort each equal-z group by axis coordinate, leaving the slots
    // the group occupies (and all other points) untouched. An input that
    // already satisfies the convention comes back unchanged.
    struct ZKey {
        double re, im;
        bool operator<(const ZKey& o) const {
            return re < o.re || (re == o.re && im < o.im);
        }
    };
    std::map<ZKey, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < raw.size(); ++i)
        groups[{raw[i].z.real(), raw[i].z.imag()}].push_back(i);

    std::vector<std::size_t> perm(raw.size());
    std::iota(perm.begin(), perm.end(), 0);
    for (auto& [key, slots] : groups) {
        std::vector<std::size_t> sorted = slots;
        std::stable_sort(sorted.begin(), sorted.end(),
                         [&raw](std::size_t a, std::size_t b) {
                             return raw[a].a < raw[b].a;
                         });
        for (std::size_t k = 0; k < slots.size(); ++k) perm[slots[k]] = sorted[k];
    }

    std::vector<Point3> ordered;
    ordered.reserve(raw.size());
    std::vector<std::size_t> perm_1based;
    perm_1based.reserve(raw.size());
    for (std::size_t k = 0; k < perm.size(); ++k) {
        ordered.push_back(raw[perm[k]]);
        perm_1based.push_back(perm[k] + 1);
    }
    return {Configuration::from_points(std::move(ordered)), perm_1based};
}

} // namespace atiyah
