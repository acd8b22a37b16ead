#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace atiyah {

// Deterministic RNG used by fuzzing and sampling. std::mt19937_64 has a
// standard-mandated sequence; the transforms below are written out (rather
// than using std::uniform_real_distribution etc.) so the exact stream of
// values is identical across standard-library implementations.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1) with 53 bits of mantissa.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    // Uniform integer in [lo, hi] by rejection-free modulo; the slight
    // modulo bias is irrelevant here (ranges are tiny vs 2^64) and keeps
    // the mapping deterministic and simple.
    long uniform_int(long lo, long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(engine_() % span);
    }

    // Log-uniform over [lo, hi], lo > 0.
    double log_uniform(double lo, double hi) {
        return lo * std::exp(std::log(hi / lo) * uniform01());
    }

    // Fisher-Yates permutation of 0..count-1.
    std::vector<std::size_t> permutation(std::size_t count) {
        std::vector<std::size_t> p(count);
        for (std::size_t i = 0; i < count; ++i) p[i] = i;
        for (std::size_t i = count; i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(engine_() % i);
            std::swap(p[i - 1], p[j]);
        }
        return p;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace atiyah
