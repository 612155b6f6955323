#ifndef RMDEC_CHANNEL_HPP
#define RMDEC_CHANNEL_HPP

#include <utility>

#include "rmdec/syndecode.hpp"

// Reproducible corruption models and the Monte-Carlo harness. Every
// randomized quantity flows from an explicit 64-bit seed; the per-trial
// seeds are derived as trial_seed = mix(master_seed ^ mix(trial_index))
// (splitmix64 finalizer), which is the reproducibility contract: trials are
// independent of scheduling and may run concurrently.

namespace rmdec {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_trial_seed(std::uint64_t master_seed, std::uint64_t trial_index) {
    return splitmix64(master_seed ^ splitmix64(trial_index));
}

// Small deterministic generator (splitmix64 stream); identical output on
// every platform, unlike distributions from <random>.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() { return splitmix64(state_++); }

    // Uniform in [0, bound); rejection sampling, no modulo bias.
    std::uint64_t next_below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("Rng::next_below: zero bound");
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t x = next_u64();
            if (x >= threshold) return x % bound;
        }
    }

    bool bernoulli(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        return next_u64() < static_cast<std::uint64_t>(p * 18446744073709551616.0);
    }

    BitVector random_bits(std::size_t length) {
        BitVector v(length);
        auto words = v.words();
        for (auto& w : words) w = next_u64();
        if (length & 63) words[words.size() - 1] &= (std::uint64_t(1) << (length & 63)) - 1;
        return v;
    }

  private:
    std::uint64_t state_;
};

struct ErrorPattern {
    BitVector support;

    std::size_t length() const { return support.size(); }
    std::size_t weight() const { return support.popcount(); }

    std::vector<Point> points() const {
        std::vector<Point> pts;
        for (std::size_t i = 0; i < support.size(); ++i)
            if (support.bit(i)) pts.push_back(static_cast<Point>(i));
        return pts;
    }
};

// Uniform weight-t support; deterministic for a fixed seed.
ErrorPattern random_error_pattern(std::size_t n, std::size_t t, std::uint64_t seed);

// w xor support. Applying a pattern twice restores the word.
BitVector apply(const ErrorPattern& pattern, const BitVector& w);

// Flips each bit independently with probability p; returns the corrupted
// word and the realized pattern.
std::pair<BitVector, ErrorPattern> bsc(const BitVector& w, double p, std::uint64_t seed);

// Erases each bit independently with probability p.
std::pair<ErasureWord, ErrorPattern> bec(const BitVector& w, double p, std::uint64_t seed);

enum class ChannelMode { fixed_weight, bsc, bec };

struct ExperimentConfig {
    int m = 0;
    int r = 0;               // locator degree; the code is RM(m, m-2r-2)
    std::size_t t = 0;       // error weight in fixed_weight mode
    std::size_t trials = 1;
    std::uint64_t seed = 0;
    ChannelMode mode = ChannelMode::fixed_weight;
    double p = 0.0;          // corruption probability for bsc/bec
    double epsilon = 0.01;   // failure budget used only for reporting
};

struct TrialRecord {
    std::size_t index;
    bool independent;  // degree-r columns of the pattern are independent
    bool success;      // decoder output equals the transmitted codeword
    std::uint64_t micros;
};

struct TrialReport {
    std::vector<TrialRecord> trials;
    std::size_t independent_count = 0;
    std::size_t success_count = 0;

    double independence_fraction() const {
        return trials.empty() ? 0.0
                              : static_cast<double>(independent_count) / trials.size();
    }
    double success_fraction() const {
        return trials.empty() ? 0.0
                              : static_cast<double>(success_count) / trials.size();
    }
};

// Largest weight with failure probability at most epsilon under the
// uniform-pattern bound: C(m - log2(dim) - log2(1/epsilon), <= r).
// Reported alongside experiment aggregates for context.
std::size_t predicted_weight_bound(int m, int r, double epsilon);

// Runs the experiment: per trial, sample a codeword and a pattern, record
// whether the pattern's degree-r columns are independent, decode, and record
// success. An independent trial that fails to decode correctly aborts the
// run (it would falsify the decoder, not the statistics).
TrialReport run_experiment(const ExperimentConfig& config, int threads = 1);

}  // namespace rmdec

#endif
