#include "rmdec/channel.hpp"

#include <chrono>
#include <cmath>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

namespace rmdec {

ErrorPattern random_error_pattern(std::size_t n, std::size_t t, std::uint64_t seed) {
    if (t > n) throw std::invalid_argument("random_error_pattern: weight exceeds length");
    Rng rng(seed);
    // Partial Fisher-Yates over the index range; the first t entries form a
    // uniform t-subset.
    std::vector<std::uint32_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0u);
    BitVector support(n);
    for (std::size_t i = 0; i < t; ++i) {
        const std::size_t j = i + rng.next_below(n - i);
        std::swap(idx[i], idx[j]);
        support.set_bit(idx[i]);
    }
    return {std::move(support)};
}

BitVector apply(const ErrorPattern& pattern, const BitVector& w) {
    if (pattern.length() != w.size())
        throw std::invalid_argument("apply: length mismatch");
    return w ^ pattern.support;
}

std::pair<BitVector, ErrorPattern> bsc(const BitVector& w, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("bsc: p must be in [0,1]");
    Rng rng(seed);
    BitVector support(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        if (rng.bernoulli(p)) support.set_bit(i);
    ErrorPattern pattern{std::move(support)};
    return {w ^ pattern.support, std::move(pattern)};
}

std::pair<ErasureWord, ErrorPattern> bec(const BitVector& w, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("bec: p must be in [0,1]");
    Rng rng(seed);
    BitVector erased(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        if (rng.bernoulli(p)) erased.set_bit(i);
    BitVector known = erased;
    for (auto& word : known.words()) word = ~word;
    if (w.size() & 63) {
        auto words = known.words();
        words[words.size() - 1] &= (std::uint64_t(1) << (w.size() & 63)) - 1;
    }
    return {ErasureWord{known, star(w, known)}, ErrorPattern{std::move(erased)}};
}

std::size_t predicted_weight_bound(int m, int r, double epsilon) {
    if (epsilon <= 0.0 || epsilon >= 1.0) return 0;
    const double budget =
        m - std::log2(static_cast<double>(binomial_sum(m, r))) - std::log2(1.0 / epsilon);
    if (budget < 0.0) return 0;
    return binomial_sum(static_cast<int>(budget), r);
}

namespace {

TrialRecord run_one_trial(const ExperimentConfig& config, const SyndromeDecoder& decoder,
                          std::size_t index) {
    const RMCode code = decoder.params().code();
    const std::size_t n = code.block_length();
    Rng rng(derive_trial_seed(config.seed, index));

    const BitVector coeffs = rng.random_bits(code.dimension());
    const BitVector sent = encode(code, coeffs);

    // Sampling seeds are drawn from the trial stream so the two modes of a
    // trial (pattern + any decode randomness) stay coupled to one seed.
    const std::uint64_t pattern_seed = rng.next_u64();

    ErrorPattern pattern{BitVector(n)};
    std::optional<ErasureWord> erasure;
    BitVector received(n);
    switch (config.mode) {
        case ChannelMode::fixed_weight:
            pattern = random_error_pattern(n, config.t, pattern_seed);
            received = apply(pattern, sent);
            break;
        case ChannelMode::bsc: {
            auto [word, pat] = bsc(sent, config.p, pattern_seed);
            received = std::move(word);
            pattern = std::move(pat);
            break;
        }
        case ChannelMode::bec: {
            auto [word, pat] = bec(sent, config.p, pattern_seed);
            erasure = std::move(word);
            pattern = std::move(pat);
            break;
        }
    }

    const bool independent =
        erasure_correctable(pattern.points(), decoder.params().m, decoder.params().r);

    const auto start = std::chrono::steady_clock::now();
    bool success = false;
    if (erasure) {
        const ErasureDecodeResult res = erasure_decode(code, *erasure);
        success = res.status == ErasureStatus::ok && res.word == sent;
    } else {
        const std::optional<BitVector> out = decoder.decode(received);
        success = out.has_value() && *out == sent;
    }
    const auto stop = std::chrono::steady_clock::now();
    const auto micros =
        std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count();

    if (independent && !success) {
        std::ostringstream msg;
        msg << "independent pattern failed to decode: m=" << config.m
            << " r=" << config.r << " trial=" << index << " seed=" << config.seed
            << " weight=" << pattern.weight();
        throw std::logic_error(msg.str());
    }
    return {index, independent, success, static_cast<std::uint64_t>(micros)};
}

}  // namespace

TrialReport run_experiment(const ExperimentConfig& config, int threads) {
    if (config.trials == 0) throw std::invalid_argument("run_experiment: trials must be >= 1");
    const DecoderParams params(config.m, config.r);
    if (config.mode == ChannelMode::fixed_weight &&
        config.t > params.code().block_length())
        throw std::invalid_argument("run_experiment: weight exceeds block length");
    const SyndromeDecoder decoder(params);

    TrialReport report;
    report.trials.resize(config.trials);

    const std::size_t workers = std::min<std::size_t>(
        std::max(threads, 1), config.trials);
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&](std::size_t lo, std::size_t hi) {
        try {
            for (std::size_t i = lo; i < hi; ++i)
                report.trials[i] = run_one_trial(config, decoder, i);
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };

    if (workers <= 1) {
        worker(0, config.trials);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (config.trials + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t lo = w * chunk;
            const std::size_t hi = std::min(config.trials, lo + chunk);
            if (lo < hi) pool.emplace_back(worker, lo, hi);
        }
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    for (const TrialRecord& rec : report.trials) {
        report.independent_count += rec.independent;
        report.success_count += rec.success;
    }
    return report;
}

}  // namespace rmdec
