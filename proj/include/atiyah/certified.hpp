#pragma once

#include <functional>
#include <string>
#include <vector>

#include "atiyah/ball.hpp"

namespace atiyah {

using BallMatrix = std::vector<std::vector<ComplexBall>>;

// Precision escalation schedule: start at initial_bits, double until the
// verdict is conclusive or max_bits is reached.
struct PrecisionPolicy {
    mpfr_prec_t initial_bits = 128;
    mpfr_prec_t max_bits = 4096;
};

enum class VerdictStatus { CertifiedNonzero, CertifiedZero, Inconclusive };

struct Verdict {
    VerdictStatus status = VerdictStatus::Inconclusive;
    ComplexBall witness;      // final determinant enclosure
    mpfr_prec_t bits_used = 0;
};

const char* to_string(VerdictStatus s);

// Determinant enclosure of a ball matrix by Gaussian elimination with
// magnitude-of-midpoint pivoting (ties broken by lowest row index), taken
// only over rows whose pivot entry certifiably excludes zero. If no such
// pivot exists the remaining block is bounded by a Hadamard estimate, which
// yields a zero-centered enclosure; escalation then decides.
ComplexBall det_ball(BallMatrix m);

// Re-evaluates the matrix at escalating precision until the determinant
// enclosure excludes zero or the precision cap is hit. CertifiedZero is
// emitted only for structural zeros (an exact zero row or two exactly
// identical rows), never from a numeric coincidence.
Verdict det_certified(const std::function<BallMatrix(mpfr_prec_t)>& matrix_at,
                      const PrecisionPolicy& policy);

// Convenience overload for a fixed matrix (entries are not recomputed; only
// the elimination reruns, so escalation helps only through the Hadamard
// fallback path).
Verdict det_certified(const BallMatrix& m, const PrecisionPolicy& policy);

enum class Comparison { Less, Greater, Overlapping };

// Disjointness comparison of two real enclosures.
Comparison compare_certified(const RealBall& a, const RealBall& b);

const char* to_string(Comparison c);

} // namespace atiyah
