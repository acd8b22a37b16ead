// Command-line frontend: verify | dihedral | inequality | fuzz.
//
// Exit codes: 0 = certified / all hold, 2 = inconclusive or overlapping,
// 3 = invalid input, 4 = violation found, 1 = internal error.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "atiyah/errors.hpp"
#include "atiyah/harness.hpp"

namespace {

// ATIYAH_MAX_BITS, when set, replaces the precision cap (flag included).
void apply_env_cap(atiyah::PrecisionPolicy& policy) {
    const char* env = std::getenv("ATIYAH_MAX_BITS");
    if (env == nullptr || *env == '\0') return;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 8) {
        throw atiyah::validation_error(
            "ATIYAH_MAX_BITS must be an integer >= 8");
    }
    policy.max_bits = static_cast<mpfr_prec_t>(v);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certified evaluation of point-configuration determinants"};
    app.require_subcommand(1);

    long initial_bits = 128;
    long max_bits = 4096;
    std::string format = "json";
    bool no_timing = false;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--initial-bits", initial_bits,
                        "starting working precision in bits")
            ->check(CLI::Range(8L, 1L << 24));
        sub->add_option("--max-bits", max_bits,
                        "precision cap in bits (ATIYAH_MAX_BITS overrides)")
            ->check(CLI::Range(8L, 1L << 24));
        sub->add_option("--format", format, "report format: json|csv|text")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_flag("--no-timing", no_timing,
                      "report duration_ms as 0 (byte-stable output)");
    };

    CLI::App* verify =
        app.add_subcommand("verify", "certify that the determinant of a "
                                     "configuration's coefficient matrix "
                                     "is nonzero");
    std::string config_path;
    verify->add_option("--config", config_path, "JSON configuration file")
        ->required();
    add_common(verify);

    CLI::App* dihedral = app.add_subcommand(
        "dihedral", "evaluate the closed-form determinant of an "
                    "axis-plus-polygon configuration");
    long dm = -1;
    std::vector<double> da;
    long dn = 0;
    bool cross = false;
    dihedral->add_option("--m", dm,
                         "number of axis points (checked against --a)");
    dihedral->add_option("--a", da, "axis coordinates, comma separated")
        ->delimiter(',');
    dihedral->add_option("--n", dn, "polygon order")->required();
    dihedral->add_flag("--cross-check", cross,
                       "also run the generic pipeline and compare");
    add_common(dihedral);

    CLI::App* ineq =
        app.add_subcommand("inequality", "verify an inequality family");
    std::string which;
    long im = 0;
    long in_value = 3;
    std::vector<double> lambdas;
    std::vector<double> iaxis;
    std::string grid_text;
    std::uint64_t iseed = 0;
    ineq->add_option("--which", which,
                     "conj2|spec|spec-eq|n3|lambda-zero")
        ->required()
        ->check(CLI::IsMember({"conj2", "spec", "spec-eq", "n3",
                               "lambda-zero"}));
    ineq->add_option("--m", im, "number of lambda parameters");
    ineq->add_option("--n", in_value, "polygon order");
    ineq->add_option("--lambda", lambdas,
                     "explicit lambda values, comma separated")
        ->delimiter(',');
    ineq->add_option("--axis", iaxis,
                     "axis coordinates (alternative to --lambda)")
        ->delimiter(',');
    ineq->add_option("--grid", grid_text,
                     "sweep grid: log:LO:HI:COUNT | lin:LO:HI:COUNT | "
                     "list:V1,V2,...");
    ineq->add_option("--seed", iseed, "seed for sampled sweep grids");
    add_common(ineq);

    CLI::App* fuzz =
        app.add_subcommand("fuzz", "randomized certification runs");
    atiyah::FuzzOptions fo;
    fuzz->add_option("--count", fo.count, "number of instances");
    fuzz->add_option("--seed", fo.seed, "RNG seed");
    fuzz->add_option("--n-min", fo.n_min, "minimum point count");
    fuzz->add_option("--n-max", fo.n_max, "maximum point count");
    fuzz->add_option("--mode", fo.mode, "general|dihedral")
        ->check(CLI::IsMember({"general", "dihedral"}));
    fuzz->add_option("--min-sep", fo.min_separation,
                     "minimum pairwise separation relative to the box size");
    add_common(fuzz);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 3;
    }

    try {
        atiyah::CommonOptions copts;
        copts.policy.initial_bits = static_cast<mpfr_prec_t>(initial_bits);
        copts.policy.max_bits = static_cast<mpfr_prec_t>(max_bits);
        apply_env_cap(copts.policy);
        if (copts.policy.max_bits < copts.policy.initial_bits) {
            throw atiyah::validation_error(
                "precision cap below initial precision");
        }
        copts.timing = !no_timing;

        atiyah::RunOutcome out;
        if (verify->parsed()) {
            out = atiyah::run_verify(atiyah::parse_config_file(config_path),
                                     copts);
        } else if (dihedral->parsed()) {
            if (dm >= 0 && dm != static_cast<long>(da.size())) {
                throw atiyah::validation_error(
                    "--m disagrees with the number of --a values");
            }
            out = atiyah::run_dihedral(
                atiyah::DihedralConfig::from_axis(da, dn), cross, copts);
        } else if (ineq->parsed()) {
            atiyah::InequalityOptions io;
            io.which = which;
            io.m = im;
            io.n = in_value;
            io.lambdas = lambdas;
            io.axis = iaxis;
            io.seed = iseed;
            if (ineq->count("--m") == 0 && !lambdas.empty() &&
                which != "spec-eq") {
                io.m = static_cast<long>(lambdas.size());
            }
            if (!grid_text.empty()) {
                io.grid = atiyah::GridSpec::parse(grid_text);
                io.has_grid = true;
            }
            out = atiyah::run_inequality(io, copts);
        } else {
            out = atiyah::run_fuzz(fo, copts);
        }
        std::cout << atiyah::render_report(out.report, format);
        return out.exit_code;
    } catch (const atiyah::validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
