#include <doctest.h>

#include <chrono>
#include <cmath>

#include "oracles.hpp"
#include "rmdec/channel.hpp"
#include "rmdec/syndecode.hpp"

using namespace rmdec;

namespace {

// Value at u of the polynomial with the given coefficients over the basis.
bool eval_poly(const MonomialBasis& basis, const BitVector& coeffs, Point u) {
    int acc = 0;
    for (std::size_t j = 0; j < basis.size(); ++j)
        if (coeffs.bit(j) && monomial_value(basis.mask(j), u)) acc ^= 1;
    return acc;
}

Syndrome pattern_syndrome(const std::vector<Point>& points, int m, int s) {
    BitVector w(std::size_t(1) << m);
    for (Point p : points) w.set_bit(p);
    return syndrome(w, s);
}

// Samples a weight-t pattern conditioned on independent degree-r columns.
std::vector<Point> sample_independent(int m, int r, std::size_t t, std::uint64_t seed) {
    const std::size_t n = std::size_t(1) << m;
    for (std::uint64_t attempt = 0;; ++attempt) {
        const auto pts =
            random_error_pattern(n, t, derive_trial_seed(seed, attempt)).points();
        if (erasure_correctable(pts, m, r)) return pts;
    }
}

BitVector random_codeword(const RMCode& code, Rng& rng) {
    return encode(code, rng.random_bits(code.dimension()));
}

}  // namespace

TEST_CASE("guess system shape and syndrome validation") {
    const DecoderParams params(6, 1);
    const SyndromeDecoder decoder(params);
    const Syndrome alpha = pattern_syndrome({3, 17}, 6, 3);
    const GuessSystem sys = decoder.build_guess_system(alpha, 0);
    const std::size_t k = binomial_sum(6, 1);
    CHECK(sys.lhs.rows() == 2 + 7 * k);
    CHECK(sys.lhs.cols() == k);
    CHECK(sys.rhs.size() == sys.lhs.rows());

    const Syndrome wrong = pattern_syndrome({3}, 6, 2);
    CHECK_THROWS_AS(decoder.build_guess_system(wrong, 0), std::invalid_argument);
    CHECK_THROWS_AS(DecoderParams(5, 2), std::invalid_argument);  // m-2r-2 < 0
}

TEST_CASE("zero syndrome: every guess is inconsistent") {
    for (const auto& [m, r] : std::vector<std::pair<int, int>>{{3, 0}, {4, 1}, {6, 1}}) {
        const DecoderParams params(m, r);
        const SyndromeDecoder decoder(params);
        const Syndrome alpha = pattern_syndrome({}, m, 2 * r + 1);
        for (Point v = 0; v < (1u << m); ++v) CHECK_FALSE(decoder.test_guess(alpha, v));
        CHECK(decoder.locate_errors(alpha).empty());
    }
}

TEST_CASE("singleton error: constant polynomial witnesses the guess") {
    for (const auto& [m, r] : std::vector<std::pair<int, int>>{{4, 1}, {5, 1}, {6, 2}}) {
        const DecoderParams params(m, r);
        const SyndromeDecoder decoder(params);
        Rng rng(0xF00 + m);
        const Point u = static_cast<Point>(rng.next_below(1u << m));
        const Syndrome alpha = pattern_syndrome({u}, m, 2 * r + 1);
        CHECK(decoder.test_guess(alpha, u));
        // the constant 1 solves the system at v = u
        const GuessSystem sys = decoder.build_guess_system(alpha, u);
        BitVector ones(binomial_sum(m, r));
        ones.set_bit(0);
        CHECK(sys.lhs.multiply(ones) == sys.rhs);
        CHECK(decoder.locate_errors(alpha) == std::vector<Point>{u});
    }
}

TEST_CASE("degree-zero locator: consistent exactly on single-point syndromes (m=3)") {
    const DecoderParams params(3, 0);
    const SyndromeDecoder decoder(params);
    for (Point u = 0; u < 8; ++u) {
        const Syndrome alpha = pattern_syndrome({u}, 3, 1);
        for (Point v = 0; v < 8; ++v) CHECK(decoder.test_guess(alpha, v) == (v == u));
    }
    // two errors: the sum row forces 0 = 1 for the only (constant) locator
    for (Point u = 1; u < 8; ++u) {
        const Syndrome alpha = pattern_syndrome({0, u}, 3, 1);
        CHECK(decoder.locate_errors(alpha).empty());
    }
}

TEST_CASE("locate_errors matches the exhaustive oracle (m=4, r=1)") {
    const int m = 4;
    const DecoderParams params(m, 1);
    const SyndromeDecoder decoder(params);

    // Oracle: all point subsets of weight <= 5 keyed by their syndrome.
    struct Candidate {
        std::vector<Point> points;
        BitVector alpha;
        bool independent;
    };
    std::vector<Candidate> all;
    for (std::size_t w = 0; w <= 5; ++w)
        for (const auto& subset : testing::subsets_of_size(16, w)) {
            std::vector<Point> pts(subset.begin(), subset.end());
            Candidate c{pts, pattern_syndrome(pts, m, 3).values,
                        erasure_correctable(pts, m, 1)};
            all.push_back(std::move(c));
        }

    Rng rng(0x0AC1E);
    int tested = 0;
    while (tested < 40) {
        const std::size_t t = rng.next_below(4);  // weights 0..3
        const auto pts = random_error_pattern(16, t, rng.next_u64()).points();
        if (!erasure_correctable(pts, m, 1)) continue;
        ++tested;
        const Syndrome alpha = pattern_syndrome(pts, m, 3);
        std::vector<std::vector<Point>> matches;
        for (const Candidate& c : all)
            if (c.independent && c.alpha == alpha.values) matches.push_back(c.points);
        REQUIRE(matches.size() == 1);  // the syndrome pins the set down
        CHECK(matches[0] == pts);
        CHECK(decoder.locate_errors(alpha) == pts);
    }
}

TEST_CASE("witness recovery: solutions are the dual polynomials") {
    for (const auto& [m, r] : std::vector<std::pair<int, int>>{{6, 1}, {8, 1}, {6, 2}}) {
        const DecoderParams params(m, r);
        const SyndromeDecoder decoder(params);
        const MonomialBasis locator(m, r);
        const std::size_t t = binomial_sum(m, r) - 1;
        const auto pts = sample_independent(m, r, t, 0x3E7 + m + 16 * r);
        const Syndrome alpha = pattern_syndrome(pts, m, 2 * r + 1);

        for (std::size_t pick = 0; pick < std::min<std::size_t>(3, pts.size()); ++pick) {
            const Point v = pts[pick];
            const GuessSystem sys = decoder.build_guess_system(alpha, v);
            const auto f = solve(sys.lhs, sys.rhs);
            REQUIRE(f.has_value());
            for (const Point u : pts) CHECK(eval_poly(locator, *f, u) == (u == v));
            // every solution behaves the same: kernel elements vanish on U
            for (const BitVector& kvec : kernel_basis(sys.lhs))
                for (const Point u : pts) CHECK_FALSE(eval_poly(locator, kvec, u));
        }
    }
}

TEST_CASE("decode: codeword passthrough and exact correction") {
    Rng rng(0xDEC0);
    for (const auto& [m, r] :
         std::vector<std::pair<int, int>>{{6, 1}, {7, 1}, {6, 2}, {8, 2}}) {
        const DecoderParams params(m, r);
        const SyndromeDecoder decoder(params);
        const RMCode code = params.code();

        const BitVector c = random_codeword(code, rng);
        const auto same = decoder.decode(c);
        REQUIRE(same.has_value());
        CHECK(*same == c);

        for (int trial = 0; trial < 10; ++trial) {
            const std::size_t t = 1 + rng.next_below(binomial_sum(m, r) - 1);
            const auto pts = sample_independent(m, r, t, rng.next_u64());
            BitVector y = random_codeword(code, rng);
            const BitVector sent = y;
            for (Point p : pts) y.flip_bit(p);
            const auto out = decoder.decode(y);
            REQUIRE(out.has_value());
            CHECK(*out == sent);
        }
    }
}

TEST_CASE("decode: dependent patterns fail loudly, never corrupt silently") {
    const DecoderParams params(5, 1);
    const SyndromeDecoder decoder(params);
    const RMCode code = params.code();
    Rng rng(0xBAD);
    const BitVector c = random_codeword(code, rng);

    // The 3-dimensional subspace x4 = x5 = 0: eight points whose degree-1
    // columns have rank 4. Every locator candidate fails the sum row, so the
    // guess set is empty and verification rejects the unchanged word.
    std::vector<Point> subspace;
    for (Point p = 0; p < 8; ++p) subspace.push_back(p);
    CHECK_FALSE(erasure_correctable(subspace, 5, 1));
    BitVector y = c;
    for (Point p : subspace) y.flip_bit(p);
    CHECK(decoder.locate_errors(syndrome(y, 3)).empty());
    CHECK_FALSE(decoder.decode(y).has_value());

    // Random dependent eight-point sets: decode may fail or return some
    // codeword, but a returned word is always a verified codeword.
    for (int trial = 0; trial < 20; ++trial) {
        const auto pts = random_error_pattern(32, 8, rng.next_u64()).points();
        BitVector z = c;
        for (Point p : pts) z.flip_bit(p);
        const auto out = decoder.decode(z);
        if (out) CHECK(is_codeword(code, *out));
    }
}

TEST_CASE("soundness at r=1: every independent pattern is located exactly") {
    // decode(c + pattern) == c reduces to locate(syndrome(pattern)) == pattern,
    // because the scan sees only the syndrome and flips the located points:
    // the transmitted codeword cancels out of the syndrome entirely.
    auto sweep = [](int m, std::size_t max_exhaustive_weight, int sampled_per_weight) {
        const DecoderParams params(m, 1);
        const SyndromeDecoder decoder(params);
        const std::size_t n = std::size_t(1) << m;
        const std::size_t cap = binomial_sum(m, 1) - 1;

        std::vector<Point> stack;
        auto sweep_exhaustive = [&](auto&& self, std::size_t start) -> void {
            if (erasure_correctable(stack, m, 1)) {
                const Syndrome alpha = pattern_syndrome(stack, m, 3);
                CHECK(decoder.locate_errors(alpha) == stack);
            }
            if (stack.size() == max_exhaustive_weight) return;
            for (std::size_t p = start; p < n; ++p) {
                stack.push_back(static_cast<Point>(p));
                self(self, p + 1);
                stack.pop_back();
            }
        };
        sweep_exhaustive(sweep_exhaustive, 0);

        Rng rng(0x50 + m);
        for (std::size_t t = max_exhaustive_weight + 1; t <= cap; ++t)
            for (int i = 0; i < sampled_per_weight; ++i) {
                const auto pts = sample_independent(m, 1, t, rng.next_u64());
                CHECK(decoder.locate_errors(pattern_syndrome(pts, m, 3)) == pts);
            }
    };
    sweep(4, 5, 0);    // all weight <= 5 subsets of the 16 points
    sweep(5, 3, 120);  // all weight <= 3, heavy weights sampled
}

TEST_CASE("soundness at r=1: decode returns the codeword for every codeword (m=4)") {
    const DecoderParams params(4, 1);
    const SyndromeDecoder decoder(params);
    const RMCode code = params.code();  // RM(4,0): two codewords
    BitVector ones(16);
    for (std::size_t i = 0; i < 16; ++i) ones.set_bit(i);

    std::vector<Point> stack;
    auto sweep = [&](auto&& self, std::size_t start) -> void {
        if (erasure_correctable(stack, 4, 1)) {
            for (const BitVector& c : {BitVector(16), ones}) {
                BitVector y = c;
                for (Point p : stack) y.flip_bit(p);
                const auto out = decoder.decode(y);
                REQUIRE(out.has_value());
                CHECK(*out == c);
            }
        }
        if (stack.size() == 5) return;
        for (std::size_t p = start; p < 16; ++p) {
            stack.push_back(static_cast<Point>(p));
            self(self, p + 1);
            stack.pop_back();
        }
    };
    sweep(sweep, 0);
}

TEST_CASE("guess-set identity on sampled independent patterns") {
    for (const auto& [m, r] :
         std::vector<std::pair<int, int>>{{6, 1}, {8, 1}, {10, 1}, {6, 2}, {8, 2}, {10, 2}}) {
        const DecoderParams params(m, r);
        const SyndromeDecoder decoder(params);
        Rng rng(0x1D + m + 100 * r);
        const int samples = m >= 10 ? 8 : 25;
        for (int i = 0; i < samples; ++i) {
            const std::size_t t = 1 + rng.next_below(binomial_sum(m, r) - 1);
            const auto pts = sample_independent(m, r, t, rng.next_u64());
            const Syndrome alpha = pattern_syndrome(pts, m, 2 * r + 1);
            CHECK(decoder.locate_errors(alpha) == pts);
        }
    }
}

TEST_CASE("locate_errors is schedule independent") {
    const DecoderParams params(8, 1);
    const SyndromeDecoder decoder(params);
    const auto pts = sample_independent(8, 1, 7, 0x7EAD);
    const Syndrome alpha = pattern_syndrome(pts, 8, 3);
    const auto serial = decoder.locate_errors(alpha, 1);
    CHECK(decoder.locate_errors(alpha, 2) == serial);
    CHECK(decoder.locate_errors(alpha, 16) == serial);
}

TEST_CASE("decode cost grows like the guess count times the solve cost") {
    auto timed_decode = [](int m) {
        const DecoderParams params(m, 1);
        const SyndromeDecoder decoder(params);
        const RMCode code = params.code();
        Rng rng(0x71AE + m);
        BitVector y = encode(code, rng.random_bits(code.dimension()));
        const std::size_t t = std::min<std::size_t>(10, binomial_sum(m, 1) - 1);
        for (Point p : sample_independent(m, 1, t, 0xFEED + m)) y.flip_bit(p);
        double best = 1e18;
        for (int rep = 0; rep < 3; ++rep) {
            const auto start = std::chrono::steady_clock::now();
            const auto out = decoder.decode(y);
            const auto stop = std::chrono::steady_clock::now();
            REQUIRE(out.has_value());
            best = std::min(best, std::chrono::duration<double>(stop - start).count());
        }
        return best;
    };
    auto predicted = [](int m) {
        const double k = m + 1;  // C(m,<=1)
        const double rows = 2 + (m + 1) * k;
        return std::pow(2.0, m) * rows * k;
    };

    const double t8 = timed_decode(8), t10 = timed_decode(10), t12 = timed_decode(12);
    const double r1 = (t10 / t8) / (predicted(10) / predicted(8));
    const double r2 = (t12 / t10) / (predicted(12) / predicted(10));
    CHECK(r1 > 1.0 / 3.0);
    CHECK(r1 < 3.0);
    CHECK(r2 > 1.0 / 3.0);
    CHECK(r2 < 3.0);
}
