#include "atiyah/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>

#include "atiyah/errors.hpp"
#include "atiyah/rng.hpp"

namespace atiyah {

namespace {

long choose2(long n) { return n * (n - 1) / 2; }

// prod_i (1 + lambda_i^2)^n
RealBall product_one_plus_sq_pow(const std::vector<RealBall>& lams, long n,
                                 mpfr_prec_t prec) {
    RealBall acc = RealBall::from_si(1, prec);
    for (const RealBall& l : lams) {
        RealBall base = add(RealBall::from_si(1, prec), mul(l, l));
        acc = mul(acc, pow_ui(base, static_cast<unsigned long>(n)));
    }
    return acc;
}

RealBall n_pow_half_n(long n, mpfr_prec_t prec) {
    RealBall nb = RealBall::from_si(n, prec);
    RealBall r = pow_ui(nb, static_cast<unsigned long>(n / 2));
    if (n % 2 != 0) r = mul(r, sqrt_ball(nb));
    return r;
}

// C(m, 0..m) as enclosures, via the ratio recurrence.
std::vector<RealBall> binomial_row(long m, mpfr_prec_t prec) {
    std::vector<RealBall> row;
    row.push_back(RealBall::from_si(1, prec));
    for (long t = 1; t <= m; ++t) {
        row.push_back(div(mul(row.back(), RealBall::from_si(m - t + 1, prec)),
                          RealBall::from_si(t, prec)));
    }
    return row;
}

template <typename Compute>
InequalityReport run_escalating(std::string which, Compute&& compute,
                                const PrecisionPolicy& policy) {
    if (policy.initial_bits > policy.max_bits) {
        throw usage_error("precision policy: initial_bits > max_bits");
    }
    InequalityReport rep;
    rep.which = std::move(which);
    mpfr_prec_t bits = policy.initial_bits;
    while (true) {
        std::pair<RealBall, RealBall> sides = compute(bits);
        rep.lhs = std::move(sides.first);
        rep.rhs = std::move(sides.second);
        rep.margin = sub(rep.lhs, rep.rhs);
        rep.bits_used = bits;
        if (rep.margin.is_strictly_positive()) {
            rep.verdict = InequalityVerdict::Holds;
            break;
        }
        if (rep.margin.is_strictly_negative()) {
            rep.verdict = InequalityVerdict::Violated;
            break;
        }
        // An exact margin straddling zero is a genuine equality; a cap hit
        // stays undecided. Either way: Overlapping.
        if (rep.margin.is_exact() || bits >= policy.max_bits) {
            rep.verdict = InequalityVerdict::Overlapping;
            break;
        }
        bits = std::min<mpfr_prec_t>(bits * 2, policy.max_bits);
    }
    return rep;
}

void echo_config(InequalityReport& rep, const DihedralConfig& cfg) {
    rep.m = cfg.m();
    rep.n = cfg.n();
    rep.values = cfg.raw_values();
    rep.value_kind = cfg.param_kind();
}

} // namespace

const char* to_string(InequalityVerdict v) {
    switch (v) {
        case InequalityVerdict::Holds: return "Holds";
        case InequalityVerdict::Violated: return "Violated";
        case InequalityVerdict::Overlapping: return "Overlapping";
    }
    return "?";
}

InequalityReport conj2_margin(const DihedralConfig& cfg,
                              const PrecisionPolicy& policy) {
    InequalityReport rep = run_escalating(
        "conj2",
        [&cfg](mpfr_prec_t bits) {
            ClosedFormResult cf = closed_form_abs_det(cfg, bits);
            RealBall rhs = mul_2si(
                product_one_plus_sq_pow(cfg.lambdas(bits), cfg.n(), bits),
                choose2(cfg.n()));
            return std::make_pair(cf.abs_det, rhs);
        },
        policy);
    echo_config(rep, cfg);
    return rep;
}

InequalityReport spec_margin(const DihedralConfig& cfg,
                             const PrecisionPolicy& policy) {
    InequalityReport rep = run_escalating(
        "spec",
        [&cfg](mpfr_prec_t bits) {
            std::vector<RealBall> f = f_values(cfg, bits);
            std::vector<RealBall> c = c_coefficients(cfg.n(), bits);
            RealBall lhs = RealBall::from_si(1, bits);
            for (std::size_t k = 0; k < f.size(); ++k) {
                lhs = mul(lhs, div(f[k], c[k]));
            }
            RealBall rhs =
                product_one_plus_sq_pow(cfg.lambdas(bits), cfg.n(), bits);
            return std::make_pair(lhs, rhs);
        },
        policy);
    echo_config(rep, cfg);
    return rep;
}

InequalityReport spec_equal_lambda_margin(long m, double lambda, long n,
                                          const PrecisionPolicy& policy) {
    if (m < 0) throw validation_error("m must be >= 0");
    if (n < 1) throw validation_error("n must be >= 1");
    if (!std::isfinite(lambda) || lambda <= 0.0) {
        throw validation_error(
            "spec-eq needs lambda > 0 (the lambda = 0 limit is the "
            "lambda-zero bound)");
    }
    const long big_n = m + n;
    InequalityReport rep = run_escalating(
        "spec-eq",
        [m, n, lambda, big_n](mpfr_prec_t bits) {
            std::vector<RealBall> c = c_coefficients(n, bits);
            std::vector<RealBall> binom = binomial_row(m, bits);
            RealBall lb = RealBall::from_double(lambda, bits);
            RealBall lhs = RealBall::from_si(1, bits);
            for (long k = 0; k < n; ++k) {
                RealBall fk(bits);
                for (long s = 0; k + s * n <= big_n - 1; ++s) {
                    for (long i = 0; i < n; ++i) {
                        long t = k + s * n - i;   // binomial lower index
                        if (t < 0 || t > m) continue;
                        // lambda exponent 2sn+k-i = t + sn >= 0
                        RealBall term =
                            mul(binom[static_cast<std::size_t>(t)],
                                c[static_cast<std::size_t>(i)]);
                        term = mul(term,
                                   pow_ui(lb, static_cast<unsigned long>(
                                                  t + s * n)));
                        fk = add(fk, term);
                    }
                }
                lhs = mul(lhs, fk);
            }
            RealBall rhs = RealBall::from_si(1, bits);
            for (const RealBall& ck : c) rhs = mul(rhs, ck);
            RealBall base = add(RealBall::from_si(1, bits), mul(lb, lb));
            rhs = mul(rhs, pow_ui(base, static_cast<unsigned long>(m * n)));
            return std::make_pair(lhs, rhs);
        },
        policy);
    rep.m = m;
    rep.n = n;
    rep.values = {lambda};
    rep.value_kind = "lambda-scalar";
    return rep;
}

InequalityReport n3_margin(const DihedralConfig& cfg,
                           const PrecisionPolicy& policy) {
    if (cfg.n() != 3) throw usage_error("n3_margin needs n = 3");
    const long m = cfg.m();
    InequalityReport rep = run_escalating(
        "n3",
        [&cfg, m](mpfr_prec_t bits) {
            std::vector<RealBall> lam = cfg.lambdas(bits);
            std::vector<RealBall> e = elementary_symmetric(lam, bits);
            RealBall sqrt3 = sqrt_ball(RealBall::from_si(3, bits));
            auto e_at = [&e, m, bits](long idx) {
                if (idx < 0 || idx > m) return RealBall(bits);
                return e[static_cast<std::size_t>(idx)];
            };
            RealBall lhs = RealBall::from_si(1, bits);
            for (long k = 0; k < 3; ++k) {
                RealBall fk(bits);
                RealBall lambda_prod = RealBall::from_si(1, bits);
                for (long s = 0; 3 * s + k - 2 <= m; ++s) {
                    if (s >= 1) {
                        long idx = m + 3 - 3 * s - k;  // lambda_{N-3s-k}
                        if (idx < 1 || idx > m) {
                            throw internal_error("lambda index out of range");
                        }
                        lambda_prod = mul(
                            lambda_prod,
                            pow_ui(lam[static_cast<std::size_t>(idx - 1)], 3));
                    }
                    RealBall bracket = add(
                        add(e_at(3 * s + k), mul(sqrt3, e_at(3 * s + k - 1))),
                        e_at(3 * s + k - 2));
                    fk = add(fk, mul(lambda_prod, bracket));
                }
                lhs = mul(lhs, fk);
            }
            RealBall rhs =
                mul(sqrt3, product_one_plus_sq_pow(lam, 3, bits));
            return std::make_pair(lhs, rhs);
        },
        policy);
    echo_config(rep, cfg);
    return rep;
}

InequalityReport lambda_zero_bound(long n, const PrecisionPolicy& policy) {
    if (n < 1) throw validation_error("n must be >= 1");
    InequalityReport rep = run_escalating(
        "lambda-zero",
        [n](mpfr_prec_t bits) {
            RealBall lhs = n_pow_half_n(n, bits);
            for (const RealBall& ck : c_coefficients(n, bits)) {
                lhs = mul(lhs, ck);
            }
            RealBall rhs =
                mul_2si(RealBall::from_si(1, bits), choose2(n));
            return std::make_pair(lhs, rhs);
        },
        policy);
    rep.m = 0;
    rep.n = n;
    rep.value_kind = "none";
    return rep;
}

RealBall inversion_invariance_check(const DihedralConfig& cfg,
                                    mpfr_prec_t prec) {
    auto ratio = [prec](const DihedralConfig& c) {
        RealBall num = RealBall::from_si(1, prec);
        for (const RealBall& fk : f_values(c, prec)) num = mul(num, fk);
        return div(num,
                   product_one_plus_sq_pow(c.lambdas(prec), c.n(), prec));
    };
    return sub(ratio(cfg), ratio(cfg.inverted()));
}

std::vector<double> GridSpec::points() const {
    std::vector<double> out;
    if (kind == Kind::List) return list;
    if (count == 0) return out;
    out.reserve(count);
    if (count == 1) {
        out.push_back(lo);
        return out;
    }
    for (std::size_t t = 0; t < count; ++t) {
        double frac =
            static_cast<double>(t) / static_cast<double>(count - 1);
        if (kind == Kind::Log) {
            out.push_back(lo * std::pow(hi / lo, frac));
        } else {
            out.push_back(lo + (hi - lo) * frac);
        }
    }
    return out;
}

GridSpec GridSpec::parse(const std::string& text) {
    auto fail = [&text]() -> GridSpec {
        throw validation_error(
            "bad grid spec '" + text +
            "' (expected log:LO:HI:COUNT, lin:LO:HI:COUNT or list:V1,V2,...)");
    };
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = text.find(':', pos);
        parts.push_back(text.substr(pos, next - pos));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    GridSpec g;
    try {
        if (parts[0] == "list") {
            if (parts.size() != 2) return fail();
            g.kind = Kind::List;
            std::size_t p = 0;
            const std::string& body = parts[1];
            while (p < body.size()) {
                std::size_t comma = body.find(',', p);
                std::string tok = body.substr(p, comma - p);
                std::size_t used = 0;
                double v = std::stod(tok, &used);
                if (used != tok.size() || !std::isfinite(v) || v <= 0.0) {
                    return fail();
                }
                g.list.push_back(v);
                if (comma == std::string::npos) break;
                p = comma + 1;
            }
            if (g.list.empty()) return fail();
            return g;
        }
        if (parts[0] != "log" && parts[0] != "lin") return fail();
        if (parts.size() != 4) return fail();
        g.kind = parts[0] == "log" ? Kind::Log : Kind::Linear;
        std::size_t used = 0;
        g.lo = std::stod(parts[1], &used);
        if (used != parts[1].size()) return fail();
        g.hi = std::stod(parts[2], &used);
        if (used != parts[2].size()) return fail();
        long cnt = std::stol(parts[3], &used);
        if (used != parts[3].size() || cnt < 1) return fail();
        g.count = static_cast<std::size_t>(cnt);
    } catch (const std::logic_error&) {
        return fail();
    }
    if (!std::isfinite(g.lo) || !std::isfinite(g.hi)) return fail();
    if (g.lo <= 0.0 || g.hi < g.lo) return fail();
    return g;
}

namespace {

// All non-decreasing m-tuples over the grid points (lambda lists are
// unordered, so this is the full tensor grid without duplicates).
void tensor_lists(const std::vector<double>& pts, long m,
                  std::vector<double>& current,
                  std::size_t from,
                  std::vector<std::vector<double>>& out) {
    if (static_cast<long>(current.size()) == m) {
        out.push_back(current);
        return;
    }
    for (std::size_t i = from; i < pts.size(); ++i) {
        current.push_back(pts[i]);
        tensor_lists(pts, m, current, i, out);
        current.pop_back();
    }
}

std::vector<std::vector<double>> lambda_lists_for(long m, const GridSpec& grid,
                                                  SeededRng& rng) {
    std::vector<std::vector<double>> lists;
    if (m == 0) {
        lists.emplace_back();
        return lists;
    }
    const std::vector<double> pts = grid.points();
    if (pts.empty()) return lists;
    if (m <= 3) {
        std::vector<double> current;
        tensor_lists(pts, m, current, 0, lists);
        return lists;
    }
    // Latin-hypercube style: one stratum permutation per dimension; each of
    // count samples takes one stratum per dimension, jittered within it.
    const std::size_t count = pts.size();
    std::vector<std::vector<std::size_t>> perms;
    for (long d = 0; d < m; ++d) perms.push_back(rng.permutation(count));
    for (std::size_t samp = 0; samp < count; ++samp) {
        std::vector<double> lam;
        lam.reserve(static_cast<std::size_t>(m));
        for (long d = 0; d < m; ++d) {
            std::size_t stratum = perms[static_cast<std::size_t>(d)][samp];
            double v = 0.0;
            if (grid.kind == GridSpec::Kind::List) {
                v = pts[stratum];
            } else if (grid.kind == GridSpec::Kind::Log) {
                double llo = std::log(grid.lo);
                double width = (std::log(grid.hi) - llo) /
                               static_cast<double>(count);
                v = std::exp(llo + (static_cast<double>(stratum) +
                                    rng.uniform01()) *
                                       width);
            } else {
                double width =
                    (grid.hi - grid.lo) / static_cast<double>(count);
                v = grid.lo + (static_cast<double>(stratum) +
                               rng.uniform01()) *
                                  width;
            }
            lam.push_back(v);
        }
        std::sort(lam.begin(), lam.end());
        lists.push_back(std::move(lam));
    }
    return lists;
}

} // namespace

SweepResult sweep(const SweepRequest& req) {
    SweepResult out;
    auto add_report = [&out](InequalityReport rep) {
        switch (rep.verdict) {
            case InequalityVerdict::Holds: ++out.holds; break;
            case InequalityVerdict::Violated: ++out.violated; break;
            case InequalityVerdict::Overlapping: ++out.overlapping; break;
        }
        out.reports.push_back(std::move(rep));
        std::size_t last = out.reports.size() - 1;
        if (last == 0 ||
            mpfr_cmp(out.reports[last].margin.mid(),
                     out.reports[out.min_margin_index].margin.mid()) < 0) {
            out.min_margin_index = last;
        }
    };

    if (req.which == "lambda-zero") {
        add_report(lambda_zero_bound(req.n, req.policy));
        return out;
    }
    if (req.which == "spec-eq") {
        for (long m : req.m_values) {
            for (double lam : req.grid.points()) {
                add_report(
                    spec_equal_lambda_margin(m, lam, req.n, req.policy));
            }
        }
        out.min_margin_index =
            out.reports.empty() ? 0 : out.min_margin_index;
        return out;
    }

    InequalityReport (*margin_fn)(const DihedralConfig&,
                                  const PrecisionPolicy&) = nullptr;
    if (req.which == "conj2") {
        margin_fn = conj2_margin;
    } else if (req.which == "spec") {
        margin_fn = spec_margin;
    } else if (req.which == "n3") {
        margin_fn = n3_margin;
        if (req.n != 3) throw validation_error("n3 sweeps need n = 3");
    } else {
        throw validation_error("unknown inequality '" + req.which + "'");
    }

    SeededRng rng(req.seed);
    for (long m : req.m_values) {
        if (m < 0) throw validation_error("m must be >= 0");
        for (const std::vector<double>& lam :
             lambda_lists_for(m, req.grid, rng)) {
            DihedralConfig cfg = DihedralConfig::from_lambdas(lam, req.n);
            add_report(margin_fn(cfg, req.policy));
        }
    }
    if (out.reports.empty()) out.min_margin_index = 0;
    return out;
}

} // namespace atiyah
