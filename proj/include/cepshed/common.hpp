#pragma once

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cepshed {

/// Wall-clock nanoseconds on the process-wide monotonic time base.
/// All arrival timestamps and latency math use this clock; dataset time
/// (source_ts) is a separate axis and is never mixed with it.
inline int64_t now_ns() {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

/// Deterministic 64-bit generator (splitmix64). The standard engines are
/// bit-exact across platforms but the distributions are not, so sampling
/// goes through the helpers below to keep generated streams reproducible.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [0, n). n must be > 0.
    uint64_t below(uint64_t n) {
        // Rejection sampling to avoid modulo bias.
        uint64_t threshold = (0 - n) % n;
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    uint64_t state_;
};

/// Busy-wait support for injected per-guard processing cost. The loop count
/// is calibrated once so a target duration can be spun without reading the
/// clock on the hot path.
class SpinCalibrator {
public:
    SpinCalibrator();

    /// Spin for approximately target_ns.
    void spin(int64_t target_ns) const;

    double iterations_per_ns() const { return iters_per_ns_; }

private:
    double iters_per_ns_ = 1.0;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace cepshed
