#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "atiyah/ball.hpp"
#include "atiyah/certified.hpp"
#include "atiyah/dihedral.hpp"

namespace atiyah {

enum class InequalityVerdict { Holds, Violated, Overlapping };

const char* to_string(InequalityVerdict v);

// One evaluated inequality instance: lhs >= rhs with margin = lhs - rhs.
// Holds iff the margin enclosure is strictly positive, Violated iff
// strictly negative; a margin straddling 0 triggers precision escalation
// and, if still undecided at the cap (or provably an exact equality),
// the verdict Overlapping.
struct InequalityReport {
    std::string which;  // conj2 | spec | spec-eq | n3 | lambda-zero
    RealBall lhs;
    RealBall rhs;
    RealBall margin;
    InequalityVerdict verdict = InequalityVerdict::Overlapping;
    long m = 0;
    long n = 0;
    std::vector<double> values;  // axis / lambda list / single lambda
    std::string value_kind;      // "axis"|"lambda"|"lambda-inverse"|"lambda-scalar"|"none"
    mpfr_prec_t bits_used = 0;
};

// n^{n/2} prod f_k  >=  2^{C(n,2)} prod (1 + lambda_i^2)^n.
InequalityReport conj2_margin(const DihedralConfig& cfg,
                              const PrecisionPolicy& policy = {});

// prod (f_k / c_k)  >=  prod (1 + lambda_i^2)^n.
InequalityReport spec_margin(const DihedralConfig& cfg,
                             const PrecisionPolicy& policy = {});

// The equal-lambda specialization, evaluated through the binomial form
// f_k = sum_s lambda^{2sn+k} sum_i C(m, k+sn-i) c_i lambda^{-i}:
// prod f_k >= (prod c_k) (1 + lambda^2)^{mn}. Requires lambda > 0.
InequalityReport spec_equal_lambda_margin(long m, double lambda, long n,
                                          const PrecisionPolicy& policy = {});

// The n = 3 specialization f_0 f_1 f_2 >= sqrt(3) prod (1 + lambda_i^2)^3,
// with the f_k computed from the E_j and the weights (1, sqrt(3), 1).
// Requires cfg.n() == 3.
InequalityReport n3_margin(const DihedralConfig& cfg,
                           const PrecisionPolicy& policy = {});

// The lambda -> 0 limit bound n^{n/2} prod c_k >= 2^{C(n,2)}.
InequalityReport lambda_zero_bound(long n, const PrecisionPolicy& policy = {});

// Enclosure of ratio(cfg) - ratio(inverted cfg) for
// ratio = prod f_k / prod (1 + lambda_i^2)^n; must contain 0.
RealBall inversion_invariance_check(const DihedralConfig& cfg,
                                    mpfr_prec_t prec = 256);

// One-dimensional lambda grid. Text forms: "log:LO:HI:COUNT",
// "lin:LO:HI:COUNT", "list:V1,V2,...". Default: log:1e-2:1e2:50.
struct GridSpec {
    enum class Kind { Log, Linear, List };
    Kind kind = Kind::Log;
    double lo = 1e-2;
    double hi = 1e2;
    std::size_t count = 50;
    std::vector<double> list;  // Kind::List only

    std::vector<double> points() const;
    static GridSpec parse(const std::string& text);
};

struct SweepRequest {
    std::string which;         // conj2 | spec | spec-eq | n3 | lambda-zero
    std::vector<long> m_values;
    long n = 3;
    GridSpec grid;
    std::uint64_t seed = 0;    // used for m > 3 Latin-hypercube sampling
    PrecisionPolicy policy;
};

struct SweepResult {
    std::vector<InequalityReport> reports;
    std::size_t holds = 0;
    std::size_t violated = 0;
    std::size_t overlapping = 0;
    // Index into reports of the smallest margin midpoint; reports.size()
    // when empty.
    std::size_t min_margin_index = 0;

    bool all_hold() const { return violated == 0 && overlapping == 0; }
};

// Deterministic enumeration: for each m, lambda lists are drawn from the
// grid — the full non-decreasing tensor grid for m <= 3, seeded
// Latin-hypercube samples (count per m) for m > 3; "spec-eq" sweeps the
// scalar lambda grid directly; "lambda-zero" evaluates once per n (no
// grid). Aggregation order is the enumeration order.
SweepResult sweep(const SweepRequest& req);

} // namespace atiyah
