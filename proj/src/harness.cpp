#include "atiyah/harness.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

#include "atiyah/binary_form.hpp"
#include "atiyah/errors.hpp"
#include "atiyah/rng.hpp"

namespace atiyah {

namespace {

using Clock = std::chrono::steady_clock;

long long elapsed_ms(Clock::time_point start, bool timing) {
    if (!timing) return 0;
    auto d = Clock::now() - start;
    return std::chrono::duration_cast<std::chrono::milliseconds>(d).count();
}

ordered_json policy_json(const PrecisionPolicy& p) {
    return ordered_json{{"initial_bits", static_cast<long>(p.initial_bits)},
                        {"max_bits", static_cast<long>(p.max_bits)}};
}

ordered_json point_json(const Point3& p) {
    return ordered_json{
        {"x1", p.a}, {"x2", p.z.real()}, {"x3", p.z.imag()}};
}

double require_number(const ordered_json& j, const std::string& what) {
    if (!j.is_number()) {
        throw validation_error(what + " must be a number");
    }
    return j.get<double>();
}

long require_integer(const ordered_json& j, const std::string& what) {
    if (!j.is_number_integer()) {
        throw validation_error(what + " must be an integer");
    }
    return j.get<long>();
}

const char* verdict_label(VerdictStatus s) { return to_string(s); }

struct Timer {
    Clock::time_point start = Clock::now();
};

} // namespace

ordered_json ball_json(const RealBall& b) {
    return ordered_json{{"mid", b.mid_string()}, {"rad", b.rad_string()}};
}

ordered_json ball_json(const ComplexBall& b) {
    return ordered_json{{"re", ball_json(b.re())}, {"im", ball_json(b.im())}};
}

ParsedConfig parse_config_json(const ordered_json& doc) {
    if (!doc.is_object()) {
        throw validation_error("config must be a JSON object");
    }
    const bool has_points = doc.contains("points");
    const bool has_dihedral = doc.contains("dihedral");
    if (has_points == has_dihedral) {
        throw validation_error(
            "config needs exactly one of \"points\" or \"dihedral\"");
    }
    ParsedConfig cfg;
    if (has_points) {
        const ordered_json& pts = doc["points"];
        if (!pts.is_array() || pts.empty()) {
            throw validation_error("\"points\" must be a non-empty array");
        }
        for (const ordered_json& p : pts) {
            if (!p.is_object()) {
                throw validation_error("each point must be an object");
            }
            for (const char* key : {"x1", "x2", "x3"}) {
                if (!p.contains(key)) {
                    throw validation_error(
                        std::string("point missing \"") + key + "\"");
                }
            }
            cfg.points.push_back(point_from_xyz(
                require_number(p["x1"], "x1"), require_number(p["x2"], "x2"),
                require_number(p["x3"], "x3")));
        }
        return cfg;
    }
    const ordered_json& d = doc["dihedral"];
    if (!d.is_object()) {
        throw validation_error("\"dihedral\" must be an object");
    }
    cfg.is_dihedral = true;
    if (!d.contains("a") || !d["a"].is_array()) {
        throw validation_error("dihedral config needs an array \"a\"");
    }
    for (const ordered_json& a : d["a"]) {
        cfg.axis.push_back(require_number(a, "axis coordinate"));
    }
    if (!d.contains("n")) {
        throw validation_error("dihedral config needs \"n\"");
    }
    cfg.n = require_integer(d["n"], "n");
    if (d.contains("m")) {
        long m = require_integer(d["m"], "m");
        if (m != static_cast<long>(cfg.axis.size())) {
            throw validation_error("\"m\" disagrees with the length of \"a\"");
        }
    }
    if (d.contains("radius")) {
        cfg.radius = require_number(d["radius"], "radius");
    }
    if (d.contains("offset")) {
        cfg.offset = require_number(d["offset"], "offset");
    }
    if (!std::isfinite(cfg.radius) || cfg.radius <= 0.0) {
        throw validation_error("radius must be finite and > 0");
    }
    if (!std::isfinite(cfg.offset)) {
        throw validation_error("offset must be finite");
    }
    for (double a : cfg.axis) {
        cfg.normalized_axis.push_back((a - cfg.offset) / cfg.radius);
    }
    return cfg;
}

ParsedConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw validation_error("cannot read config file '" + path + "'");
    }
    ordered_json doc;
    try {
        doc = ordered_json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw validation_error("config file '" + path +
                               "' is not valid JSON: " + e.what());
    }
    return parse_config_json(doc);
}

RunOutcome run_verify(const ParsedConfig& cfg, const CommonOptions& opts) {
    Timer timer;
    ordered_json rep;
    rep["command"] = "verify";
    rep["schema_version"] = 1;
    rep["policy"] = policy_json(opts.policy);

    Configuration conf;
    ordered_json echo;
    if (cfg.is_dihedral) {
        DihedralConfig dc =
            DihedralConfig::from_axis(cfg.normalized_axis, cfg.n);
        conf = dc.to_configuration();
        echo["dihedral"] =
            ordered_json{{"m", static_cast<long>(cfg.axis.size())},
                         {"a", cfg.axis},
                         {"n", cfg.n},
                         {"radius", cfg.radius},
                         {"offset", cfg.offset},
                         {"normalized_a", cfg.normalized_axis}};
        std::vector<std::size_t> identity;
        for (std::size_t i = 1; i <= conf.size(); ++i) identity.push_back(i);
        echo["permutation"] = identity;
    } else {
        auto normalized = normalize_configuration(cfg.points);
        conf = normalized.first;
        ordered_json pts = ordered_json::array();
        for (const Point3& p : cfg.points) pts.push_back(point_json(p));
        echo["points"] = std::move(pts);
        echo["permutation"] = normalized.second;
    }
    rep["config"] = std::move(echo);

    Verdict v = det_certified(
        [&conf](mpfr_prec_t bits) {
            return coefficient_matrix_generic(conf, bits);
        },
        opts.policy);

    rep["result"] = ordered_json{
        {"status", verdict_label(v.status)},
        {"bits_used", static_cast<long>(v.bits_used)},
        {"det", ball_json(v.witness)},
        {"abs_det", ball_json(v.witness.abs_ball())}};
    rep["duration_ms"] = elapsed_ms(timer.start, opts.timing);

    int code = 0;
    if (v.status == VerdictStatus::Inconclusive) code = 2;
    if (v.status == VerdictStatus::CertifiedZero) code = 4;
    return RunOutcome{std::move(rep), code};
}

RunOutcome run_dihedral(const DihedralConfig& cfg, bool cross_check,
                        const CommonOptions& opts) {
    Timer timer;
    ordered_json rep;
    rep["command"] = "dihedral";
    rep["schema_version"] = 1;
    rep["policy"] = policy_json(opts.policy);
    rep["config"] = ordered_json{{"m", cfg.m()},
                                 {"n", cfg.n()},
                                 {"param_kind", cfg.param_kind()},
                                 {"values", cfg.raw_values()}};

    // The f_k are positive; escalate until the enclosures certify it.
    mpfr_prec_t bits = opts.policy.initial_bits;
    ClosedFormResult cf = closed_form_abs_det(cfg, bits);
    auto all_positive = [](const ClosedFormResult& r) {
        if (!r.abs_det.is_strictly_positive()) return false;
        for (const RealBall& fk : r.f) {
            if (!fk.is_strictly_positive()) return false;
        }
        return true;
    };
    while (!all_positive(cf) && bits < opts.policy.max_bits) {
        bits = std::min<mpfr_prec_t>(bits * 2, opts.policy.max_bits);
        cf = closed_form_abs_det(cfg, bits);
    }

    ordered_json fs = ordered_json::array();
    for (const RealBall& fk : cf.f) fs.push_back(ball_json(fk));
    ordered_json result;
    result["closed_form"] =
        ordered_json{{"f", std::move(fs)},
                     {"c_factor", ball_json(cf.c_factor)},
                     {"abs_det", ball_json(cf.abs_det)},
                     {"bits_used", static_cast<long>(bits)},
                     {"positive", all_positive(cf)}};
    result["outside_theorem"] = cfg.n() < 3;

    int code = all_positive(cf) ? 0 : 2;
    if (cross_check) {
        CrossCheckResult cc = cross_check_proportionality(
            cfg, opts.policy.initial_bits, opts.policy);
        ordered_json sigmas = ordered_json::array();
        ordered_json bad = ordered_json::array();
        for (const RowProportionality& row : cc.rows) {
            sigmas.push_back(
                ordered_json{{"generic_row", row.generic_row},
                             {"reference_row", row.reference_row},
                             {"sigma", ball_json(row.sigma)}});
            if (!row.consistent) {
                bad.push_back(ordered_json{{"generic_row", row.generic_row},
                                           {"column", row.bad_column}});
            }
        }
        result["cross_check"] = ordered_json{
            {"proportional", cc.proportional},
            {"det_match", cc.det_match},
            {"generic_abs_det", ball_json(cc.generic_abs_det)},
            {"predicted_abs_det", ball_json(cc.predicted_abs_det)},
            {"generic_status", verdict_label(cc.generic_verdict.status)},
            {"generic_bits_used",
             static_cast<long>(cc.generic_verdict.bits_used)},
            {"rows", std::move(sigmas)},
            {"inconsistent_rows", std::move(bad)}};
        if (!cc.ok()) {
            code = 4;
        } else if (cc.generic_verdict.status != VerdictStatus::CertifiedNonzero) {
            code = std::max(code, 2);
        }
    }
    rep["result"] = std::move(result);
    rep["duration_ms"] = elapsed_ms(timer.start, opts.timing);
    return RunOutcome{std::move(rep), code};
}

namespace {

ordered_json inequality_report_json(const InequalityReport& r) {
    return ordered_json{{"which", r.which},
                        {"m", r.m},
                        {"n", r.n},
                        {"value_kind", r.value_kind},
                        {"values", r.values},
                        {"verdict", to_string(r.verdict)},
                        {"lhs", ball_json(r.lhs)},
                        {"rhs", ball_json(r.rhs)},
                        {"margin", ball_json(r.margin)},
                        {"bits_used", static_cast<long>(r.bits_used)}};
}

} // namespace

RunOutcome run_inequality(const InequalityOptions& iopts,
                          const CommonOptions& opts) {
    Timer timer;
    ordered_json rep;
    rep["command"] = "inequality";
    rep["schema_version"] = 1;
    rep["policy"] = policy_json(opts.policy);
    rep["seed"] = iopts.seed;

    const std::string& which = iopts.which;
    bool explicit_values = !iopts.lambdas.empty() || !iopts.axis.empty();
    if (!iopts.lambdas.empty() && !iopts.axis.empty()) {
        throw validation_error("give either --lambda or --axis, not both");
    }

    std::vector<InequalityReport> reports;
    std::size_t holds = 0, violated = 0, overlapping = 0;
    std::size_t min_index = 0;
    auto account = [&](InequalityReport r) {
        switch (r.verdict) {
            case InequalityVerdict::Holds: ++holds; break;
            case InequalityVerdict::Violated: ++violated; break;
            case InequalityVerdict::Overlapping: ++overlapping; break;
        }
        reports.push_back(std::move(r));
        std::size_t last = reports.size() - 1;
        if (last == 0 || mpfr_cmp(reports[last].margin.mid(),
                                  reports[min_index].margin.mid()) < 0) {
            min_index = last;
        }
    };

    if (which == "lambda-zero") {
        account(lambda_zero_bound(iopts.n, opts.policy));
    } else if (explicit_values) {
        if (which == "spec-eq") {
            if (iopts.lambdas.size() != 1) {
                throw validation_error(
                    "spec-eq takes a single --lambda value");
            }
            account(spec_equal_lambda_margin(iopts.m, iopts.lambdas[0],
                                             iopts.n, opts.policy));
        } else {
            DihedralConfig cfg =
                iopts.axis.empty()
                    ? DihedralConfig::from_lambdas(iopts.lambdas, iopts.n)
                    : DihedralConfig::from_axis(iopts.axis, iopts.n);
            if (which == "conj2") {
                account(conj2_margin(cfg, opts.policy));
            } else if (which == "spec") {
                account(spec_margin(cfg, opts.policy));
            } else if (which == "n3") {
                account(n3_margin(cfg, opts.policy));
            } else {
                throw validation_error("unknown inequality '" + which + "'");
            }
        }
    } else {
        SweepRequest req;
        req.which = which;
        req.m_values = {iopts.m};
        req.n = iopts.n;
        req.grid = iopts.grid;  // defaulted GridSpec when none was given
        req.seed = iopts.seed;
        req.policy = opts.policy;
        SweepResult sr = sweep(req);
        for (InequalityReport& r : sr.reports) account(std::move(r));
    }

    ordered_json rs = ordered_json::array();
    for (const InequalityReport& r : reports) {
        rs.push_back(inequality_report_json(r));
    }
    ordered_json summary{{"holds", holds},
                         {"violated", violated},
                         {"overlapping", overlapping}};
    if (!reports.empty()) {
        summary["min_margin"] = ball_json(reports[min_index].margin);
        summary["min_margin_index"] = min_index;
    }
    rep["result"] =
        ordered_json{{"reports", std::move(rs)}, {"summary", summary}};
    rep["duration_ms"] = elapsed_ms(timer.start, opts.timing);

    int code = 0;
    if (overlapping > 0) code = 2;
    if (violated > 0) code = 4;
    return RunOutcome{std::move(rep), code};
}

namespace {

// Minimum pairwise distance check in R x C coordinates.
double distance3(const Point3& p, const Point3& q) {
    double da = p.a - q.a;
    double dre = p.z.real() - q.z.real();
    double dim = p.z.imag() - q.z.imag();
    return std::sqrt(da * da + dre * dre + dim * dim);
}

std::vector<Point3> sample_general_points(SeededRng& rng, long count,
                                          double min_dist) {
    std::vector<Point3> pts;
    for (long i = 0; i < count; ++i) {
        bool placed = false;
        for (int attempt = 0; attempt < 1000 && !placed; ++attempt) {
            Point3 p = point_from_xyz(rng.uniform(-1.0, 1.0),
                                      rng.uniform(-1.0, 1.0),
                                      rng.uniform(-1.0, 1.0));
            placed = true;
            for (const Point3& q : pts) {
                if (distance3(p, q) < min_dist) {
                    placed = false;
                    break;
                }
            }
            if (placed) pts.push_back(p);
        }
        if (!placed) {
            throw validation_error(
                "cannot place points this far apart; lower --min-sep");
        }
    }
    return pts;
}

} // namespace

RunOutcome run_fuzz(const FuzzOptions& fopts, const CommonOptions& opts) {
    Timer timer;
    if (fopts.count < 1) throw validation_error("--count must be >= 1");
    if (fopts.mode != "general" && fopts.mode != "dihedral") {
        throw validation_error("--mode must be general or dihedral");
    }
    if (fopts.n_min < 2 || fopts.n_max < fopts.n_min) {
        throw validation_error("need 2 <= n-min <= n-max");
    }
    if (!(fopts.min_separation > 0.0) || fopts.min_separation >= 1.0) {
        throw validation_error("--min-sep must be in (0, 1)");
    }

    ordered_json rep;
    rep["command"] = "fuzz";
    rep["schema_version"] = 1;
    rep["policy"] = policy_json(opts.policy);
    rep["seed"] = fopts.seed;
    rep["config"] = ordered_json{{"count", fopts.count},
                                 {"mode", fopts.mode},
                                 {"n_min", fopts.n_min},
                                 {"n_max", fopts.n_max},
                                 {"min_separation", fopts.min_separation}};

    SeededRng rng(fopts.seed);
    std::size_t certified = 0, inconclusive = 0, zero = 0, mismatches = 0;
    std::map<long, long> bits_histogram;
    double min_abs_lower = -1.0;
    std::size_t min_abs_index = 0;
    ordered_json failures = ordered_json::array();

    for (std::size_t idx = 0; idx < fopts.count; ++idx) {
        if (fopts.mode == "general") {
            long n_points = rng.uniform_int(fopts.n_min, fopts.n_max);
            // box side 2; the threshold is relative to it
            std::vector<Point3> pts = sample_general_points(
                rng, n_points, fopts.min_separation * 2.0);
            Configuration conf = normalize_configuration(pts).first;
            Verdict v = det_certified(
                [&conf](mpfr_prec_t bits) {
                    return coefficient_matrix_generic(conf, bits);
                },
                opts.policy);
            ++bits_histogram[static_cast<long>(v.bits_used)];
            if (v.status == VerdictStatus::CertifiedNonzero) {
                ++certified;
                double lower = std::abs(v.witness.mid_complex()) -
                               v.witness.rad_double_upper();
                if (min_abs_lower < 0.0 || lower < min_abs_lower) {
                    min_abs_lower = lower;
                    min_abs_index = idx;
                }
            } else {
                if (v.status == VerdictStatus::Inconclusive) ++inconclusive;
                if (v.status == VerdictStatus::CertifiedZero) ++zero;
                ordered_json ps = ordered_json::array();
                for (const Point3& p : pts) ps.push_back(point_json(p));
                failures.push_back(
                    ordered_json{{"index", idx},
                                 {"points", std::move(ps)},
                                 {"status", verdict_label(v.status)},
                                 {"bits_used",
                                  static_cast<long>(v.bits_used)}});
            }
        } else {
            long m = 0, n = 3;
            bool found = false;
            for (int attempt = 0; attempt < 10000 && !found; ++attempt) {
                m = rng.uniform_int(0, 5);
                n = rng.uniform_int(3, 8);
                found = m + n >= fopts.n_min && m + n <= fopts.n_max;
            }
            if (!found) {
                throw validation_error(
                    "no dihedral (m, n) with m <= 5, 3 <= n <= 8 fits the "
                    "requested point-count range");
            }
            std::vector<double> a;
            while (true) {
                a.clear();
                for (long i = 0; i < m; ++i) a.push_back(rng.uniform(-10, 10));
                std::sort(a.begin(), a.end());
                bool distinct = true;
                for (std::size_t i = 1; i < a.size(); ++i) {
                    if (a[i - 1] == a[i]) distinct = false;
                }
                if (distinct) break;
            }
            DihedralConfig cfg = DihedralConfig::from_axis(a, n);
            CrossCheckResult cc = cross_check_proportionality(
                cfg, opts.policy.initial_bits, opts.policy);
            ++bits_histogram[
                static_cast<long>(cc.generic_verdict.bits_used)];
            bool ok = cc.ok() && cc.generic_verdict.status ==
                                     VerdictStatus::CertifiedNonzero;
            if (ok) {
                ++certified;
            } else {
                if (cc.generic_verdict.status == VerdictStatus::Inconclusive)
                    ++inconclusive;
                if (!cc.ok()) ++mismatches;
                failures.push_back(ordered_json{
                    {"index", idx},
                    {"m", m},
                    {"a", a},
                    {"n", n},
                    {"proportional", cc.proportional},
                    {"det_match", cc.det_match},
                    {"generic_status",
                     verdict_label(cc.generic_verdict.status)}});
            }
        }
    }

    ordered_json hist;
    for (const auto& [bits, cnt] : bits_histogram) {
        hist[std::to_string(bits)] = cnt;
    }
    ordered_json result{{"instances", fopts.count},
                        {"certified", certified},
                        {"inconclusive", inconclusive},
                        {"certified_zero", zero},
                        {"cross_check_mismatches", mismatches},
                        {"bits_used_histogram", std::move(hist)},
                        {"failures", std::move(failures)}};
    if (min_abs_lower >= 0.0) {
        result["min_abs_det_lower"] = min_abs_lower;
        result["min_abs_det_index"] = min_abs_index;
    }
    rep["result"] = std::move(result);
    rep["duration_ms"] = elapsed_ms(timer.start, opts.timing);

    int code = 0;
    if (inconclusive > 0) code = 2;
    if (zero > 0 || mismatches > 0) code = 4;
    return RunOutcome{std::move(rep), code};
}

namespace {

std::string csv_escape(const std::string& s) {
    bool needs = s.find_first_of(",\"\n") != std::string::npos;
    if (!needs) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

void csv_row(std::ostringstream& out, const std::string& command,
             std::size_t index, const std::string& label, const std::string& m,
             const std::string& n, const std::string& verdict,
             const std::string& mid, const std::string& rad,
             const std::string& bits) {
    out << csv_escape(command) << ',' << index << ',' << csv_escape(label)
        << ',' << m << ',' << n << ',' << csv_escape(verdict) << ','
        << csv_escape(mid) << ',' << csv_escape(rad) << ',' << bits << '\n';
}

std::string render_csv(const ordered_json& rep) {
    std::ostringstream out;
    out << "command,index,label,m,n,verdict,mid,rad,bits_used\n";
    const std::string cmd = rep.value("command", "?");
    const ordered_json& result = rep.at("result");
    if (cmd == "verify") {
        csv_row(out, cmd, 0, "abs_det", "", "",
                result.at("status").get<std::string>(),
                result.at("abs_det").at("mid").get<std::string>(),
                result.at("abs_det").at("rad").get<std::string>(),
                std::to_string(result.at("bits_used").get<long>()));
    } else if (cmd == "dihedral") {
        const ordered_json& cf = result.at("closed_form");
        const ordered_json& cfgj = rep.at("config");
        std::string m = std::to_string(cfgj.at("m").get<long>());
        std::string n = std::to_string(cfgj.at("n").get<long>());
        csv_row(out, cmd, 0, "closed_form_abs_det", m, n,
                cf.at("positive").get<bool>() ? "Positive" : "Undecided",
                cf.at("abs_det").at("mid").get<std::string>(),
                cf.at("abs_det").at("rad").get<std::string>(),
                std::to_string(cf.at("bits_used").get<long>()));
        if (result.contains("cross_check")) {
            const ordered_json& cc = result.at("cross_check");
            csv_row(out, cmd, 1, "proportional", m, n,
                    cc.at("proportional").get<bool>() ? "Consistent"
                                                      : "Inconsistent",
                    "", "", "");
            csv_row(out, cmd, 2, "det_match", m, n,
                    cc.at("det_match").get<bool>() ? "Overlap" : "Disjoint",
                    cc.at("generic_abs_det").at("mid").get<std::string>(),
                    cc.at("generic_abs_det").at("rad").get<std::string>(),
                    std::to_string(cc.at("generic_bits_used").get<long>()));
            csv_row(out, cmd, 3, "generic_det", m, n,
                    cc.at("generic_status").get<std::string>(), "", "", "");
        }
    } else if (cmd == "inequality") {
        const ordered_json& reports = result.at("reports");
        std::size_t i = 0;
        for (const ordered_json& r : reports) {
            csv_row(out, cmd, i++, r.at("which").get<std::string>(),
                    std::to_string(r.at("m").get<long>()),
                    std::to_string(r.at("n").get<long>()),
                    r.at("verdict").get<std::string>(),
                    r.at("margin").at("mid").get<std::string>(),
                    r.at("margin").at("rad").get<std::string>(),
                    std::to_string(r.at("bits_used").get<long>()));
        }
    } else if (cmd == "fuzz") {
        csv_row(out, cmd, 0, "summary", "", "",
                result.at("failures").empty() ? "AllCertified" : "Failures",
                std::to_string(result.at("certified").get<long>()),
                std::to_string(result.at("inconclusive").get<long>()), "");
        std::size_t i = 1;
        for (const ordered_json& f : result.at("failures")) {
            csv_row(out, cmd, i++, "failure",
                    f.contains("m") ? std::to_string(f.at("m").get<long>())
                                    : "",
                    f.contains("n") ? std::to_string(f.at("n").get<long>())
                                    : "",
                    f.contains("status")
                        ? f.at("status").get<std::string>()
                        : "CrossCheckMismatch",
                    "", "", "");
        }
    }
    return out.str();
}

std::string render_text(const ordered_json& rep) {
    std::ostringstream out;
    const std::string cmd = rep.value("command", "?");
    const ordered_json& result = rep.at("result");
    out << "command: " << cmd << "\n";
    if (cmd == "verify") {
        out << "status: " << result.at("status").get<std::string>() << " ("
            << result.at("bits_used").get<long>() << " bits)\n";
        out << "|det| = " << result.at("abs_det").at("mid").get<std::string>()
            << " +/- " << result.at("abs_det").at("rad").get<std::string>()
            << "\n";
    } else if (cmd == "dihedral") {
        const ordered_json& cf = result.at("closed_form");
        out << "closed-form |det| = "
            << cf.at("abs_det").at("mid").get<std::string>() << " +/- "
            << cf.at("abs_det").at("rad").get<std::string>() << " ("
            << cf.at("bits_used").get<long>() << " bits)\n";
        out << "f_k:";
        for (const ordered_json& f : cf.at("f")) {
            out << " " << f.at("mid").get<std::string>();
        }
        out << "\n";
        if (result.at("outside_theorem").get<bool>()) {
            out << "note: n < 3 is outside the certified theorem range\n";
        }
        if (result.contains("cross_check")) {
            const ordered_json& cc = result.at("cross_check");
            out << "cross-check: proportional="
                << (cc.at("proportional").get<bool>() ? "yes" : "no")
                << " det-match="
                << (cc.at("det_match").get<bool>() ? "yes" : "no")
                << " generic=" << cc.at("generic_status").get<std::string>()
                << "\n";
        }
    } else if (cmd == "inequality") {
        const ordered_json& summary = result.at("summary");
        out << "holds: " << summary.at("holds").get<long>()
            << "  violated: " << summary.at("violated").get<long>()
            << "  overlapping: " << summary.at("overlapping").get<long>()
            << "\n";
        if (summary.contains("min_margin")) {
            out << "min margin: "
                << summary.at("min_margin").at("mid").get<std::string>()
                << " +/- "
                << summary.at("min_margin").at("rad").get<std::string>()
                << "\n";
        }
    } else if (cmd == "fuzz") {
        out << "instances: " << result.at("instances").get<long>()
            << "  certified: " << result.at("certified").get<long>()
            << "  inconclusive: " << result.at("inconclusive").get<long>()
            << "  failures: " << result.at("failures").size() << "\n";
    }
    return out.str();
}

} // namespace

std::string render_report(const ordered_json& report,
                          const std::string& format) {
    if (format == "json") return report.dump(2) + "\n";
    if (format == "csv") return render_csv(report);
    if (format == "text") return render_text(report);
    throw validation_error("unknown format '" + format +
                           "' (expected json, csv or text)");
}

} // namespace atiyah
