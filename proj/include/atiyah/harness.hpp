#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "atiyah/certified.hpp"
#include "atiyah/dihedral.hpp"
#include "atiyah/geometry.hpp"
#include "atiyah/inequalities.hpp"

namespace atiyah {

using ordered_json = nlohmann::ordered_json;

// Enclosures in reports: {"mid": <decimal>, "rad": <decimal upper bound>}.
ordered_json ball_json(const RealBall& b);
ordered_json ball_json(const ComplexBall& b);

// A parsed configuration file: either an explicit point list or dihedral
// parameters. A dihedral entry may carry a polygon radius and an axis
// offset; those are normalized away (a -> (a - offset)/radius) before
// evaluation, and the applied similarity transform is echoed in reports.
struct ParsedConfig {
    bool is_dihedral = false;
    std::vector<Point3> points;        // point-list form
    std::vector<double> axis;          // dihedral form, as given
    long n = 0;
    double radius = 1.0;
    double offset = 0.0;
    std::vector<double> normalized_axis;
};

ParsedConfig parse_config_json(const ordered_json& doc);
ParsedConfig parse_config_file(const std::string& path);

// A finished command run: the report document plus the process exit code
// (0 ok, 2 inconclusive/overlapping, 4 violation; validation errors throw
// and map to 3 at the CLI boundary).
struct RunOutcome {
    ordered_json report;
    int exit_code = 0;
};

struct CommonOptions {
    PrecisionPolicy policy;
    bool timing = true;  // false pins duration_ms to 0 for byte-stable output
};

RunOutcome run_verify(const ParsedConfig& cfg, const CommonOptions& opts);

RunOutcome run_dihedral(const DihedralConfig& cfg, bool cross_check,
                        const CommonOptions& opts);

struct InequalityOptions {
    std::string which;            // conj2 | spec | spec-eq | n3 | lambda-zero
    long m = 0;
    long n = 3;
    std::vector<double> lambdas;  // explicit lambda list (spec-eq: one value)
    std::vector<double> axis;     // alternative: axis coordinates
    bool has_grid = false;
    GridSpec grid;                // sweep grid when no explicit values given
    std::uint64_t seed = 0;
};

RunOutcome run_inequality(const InequalityOptions& iopts,
                          const CommonOptions& opts);

struct FuzzOptions {
    std::size_t count = 100;
    std::uint64_t seed = 0;
    long n_min = 3;
    long n_max = 8;
    std::string mode = "general";  // general | dihedral
    double min_separation = 1e-3;  // relative to the sampling-box size
};

RunOutcome run_fuzz(const FuzzOptions& fopts, const CommonOptions& opts);

// Render a report in the requested format: "json" (normative), "csv"
// (one verdict per row), or "text" (human-readable summary).
std::string render_report(const ordered_json& report,
                          const std::string& format);

} // namespace atiyah
