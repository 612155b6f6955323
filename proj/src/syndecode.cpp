#include "rmdec/syndecode.hpp"

#include <thread>

namespace rmdec {

namespace {

// Forward elimination over the coefficient columns of an augmented system
// stored as packed rows (rhs lives at bit `cols`). Consistent iff no
// leftover row reduces to 0 = 1.
bool consistent_in_place(std::vector<std::uint64_t>& rows, std::size_t nrows,
                         std::size_t wpr, std::size_t cols) {
    std::size_t next = 0;
    for (std::size_t col = 0; col < cols && next < nrows; ++col) {
        const std::size_t word = col >> 6;
        const std::uint64_t mask = std::uint64_t(1) << (col & 63);
        std::size_t pivot = next;
        while (pivot < nrows && !(rows[pivot * wpr + word] & mask)) ++pivot;
        if (pivot == nrows) continue;
        if (pivot != next)
            for (std::size_t k = 0; k < wpr; ++k)
                std::swap(rows[pivot * wpr + k], rows[next * wpr + k]);
        for (std::size_t r = next + 1; r < nrows; ++r)
            if (rows[r * wpr + word] & mask)
                for (std::size_t k = 0; k < wpr; ++k)
                    rows[r * wpr + k] ^= rows[next * wpr + k];
        ++next;
    }
    const std::size_t rhs_word = cols >> 6;
    const std::uint64_t rhs_mask = std::uint64_t(1) << (cols & 63);
    for (std::size_t r = next; r < nrows; ++r)
        if (rows[r * wpr + rhs_word] & rhs_mask) return false;
    return true;
}

}  // namespace

// Coefficient-part images of the rows, fixed for one syndrome. The rows for
// the coordinate factors come in two variants per variable: when v_l = 1 the
// factor is x_l, otherwise x_l + 1, which adds the plain monomial-multiple
// row on top.
struct SyndromeDecoder::PreparedRows {
    std::vector<std::uint64_t> sum_row;      // 1 x wpr
    std::vector<std::uint64_t> mono_rows;    // K x wpr
    std::vector<std::uint64_t> var_set;      // (m*K) x wpr, v_l = 1 variant
    std::vector<std::uint64_t> var_clear;    // (m*K) x wpr, v_l = 0 variant
};

SyndromeDecoder::SyndromeDecoder(DecoderParams params)
    : params_(params),
      locator_(params.m, params.r),
      syndromes_(params.m, params.syndrome_degree()) {
    const std::size_t k = locator_.size();
    const int m = params_.m;
    row_count_ = 2 + (m + 1) * k;
    words_per_row_ = (k + 1 + 63) / 64;  // coefficients plus one rhs bit

    single_idx_.resize(k);
    for (std::size_t j = 0; j < k; ++j)
        single_idx_[j] = static_cast<std::uint32_t>(syndromes_.index_of(locator_.mask(j)));

    pair_idx_.resize(k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            pair_idx_[i * k + j] = static_cast<std::uint32_t>(
                syndromes_.index_of(locator_.mask(i) | locator_.mask(j)));

    triple_idx_.resize(std::size_t(m) * k * k);
    for (int l = 0; l < m; ++l) {
        const std::uint32_t bit = std::uint32_t(1) << l;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                triple_idx_[(std::size_t(l) * k + i) * k + j] =
                    static_cast<std::uint32_t>(
                        syndromes_.index_of(locator_.mask(i) | locator_.mask(j) | bit));
    }
}

void SyndromeDecoder::check_syndrome(const Syndrome& alpha) const {
    if (alpha.m != params_.m || alpha.degree != params_.syndrome_degree() ||
        alpha.values.size() != syndromes_.size())
        throw std::invalid_argument("SyndromeDecoder: syndrome degree/dimension mismatch");
}

SyndromeDecoder::PreparedRows SyndromeDecoder::prepare(const Syndrome& alpha) const {
    const std::size_t k = locator_.size();
    const std::size_t wpr = words_per_row_;
    const int m = params_.m;
    PreparedRows rows;
    rows.sum_row.assign(wpr, 0);
    rows.mono_rows.assign(k * wpr, 0);
    rows.var_set.assign(std::size_t(m) * k * wpr, 0);
    rows.var_clear.assign(std::size_t(m) * k * wpr, 0);

    auto set = [wpr](std::vector<std::uint64_t>& buf, std::size_t row, std::size_t j) {
        buf[row * wpr + (j >> 6)] |= std::uint64_t(1) << (j & 63);
    };

    for (std::size_t j = 0; j < k; ++j)
        if (alpha.values.bit(single_idx_[j])) set(rows.sum_row, 0, j);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (alpha.values.bit(pair_idx_[i * k + j])) set(rows.mono_rows, i, j);
    for (std::size_t li = 0; li < std::size_t(m) * k; ++li)
        for (std::size_t j = 0; j < k; ++j)
            if (alpha.values.bit(triple_idx_[li * k + j])) set(rows.var_set, li, j);
    // x_l + 1 variant: the plain monomial-multiple row folds in.
    for (std::size_t l = 0; l < std::size_t(m); ++l)
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t w = 0; w < wpr; ++w)
                rows.var_clear[(l * k + i) * wpr + w] =
                    rows.var_set[(l * k + i) * wpr + w] ^ rows.mono_rows[i * wpr + w];
    return rows;
}

// Writes the assembled augmented system for guess v into the first
// row_count_ rows of `ws`; one extra scratch row at the end holds the
// point-column bits of v (so the hot loop never allocates).
void SyndromeDecoder::assemble(const PreparedRows& rows, Point v,
                               std::vector<std::uint64_t>& ws) const {
    const std::size_t wpr = words_per_row_;
    const std::size_t k = locator_.size();
    const int m = locator_.m();
    const std::size_t rhs_word = k >> 6;
    const std::uint64_t rhs_mask = std::uint64_t(1) << (k & 63);

    std::uint64_t* value_row = ws.data() + row_count_ * wpr;  // bit j = M_j(v)
    for (std::size_t w = 0; w < wpr; ++w) value_row[w] = 0;
    for (std::size_t j = 0; j < k; ++j)
        if (monomial_value(locator_.mask(j), v))
            value_row[j >> 6] |= std::uint64_t(1) << (j & 63);

    std::size_t out = 0;
    auto emit = [&](const std::uint64_t* src, bool rhs) {
        for (std::size_t w = 0; w < wpr; ++w) ws[out * wpr + w] = src[w];
        if (rhs) ws[out * wpr + rhs_word] |= rhs_mask;
        ++out;
    };

    emit(rows.sum_row.data(), true);
    emit(value_row, true);
    for (std::size_t i = 0; i < k; ++i) {
        const bool rhs = (value_row[i >> 6] >> (i & 63)) & 1;
        emit(rows.mono_rows.data() + i * wpr, rhs);
    }
    for (int l = 0; l < m; ++l) {
        const auto& variant = ((v >> l) & 1) ? rows.var_set : rows.var_clear;
        for (std::size_t i = 0; i < k; ++i) {
            const bool rhs = (value_row[i >> 6] >> (i & 63)) & 1;
            emit(variant.data() + (std::size_t(l) * k + i) * wpr, rhs);
        }
    }
}

GuessSystem SyndromeDecoder::build_guess_system(const Syndrome& alpha, Point v) const {
    check_syndrome(alpha);
    const std::size_t k = locator_.size();
    const PreparedRows rows = prepare(alpha);
    std::vector<std::uint64_t> ws((row_count_ + 1) * words_per_row_, 0);
    assemble(rows, v, ws);

    GuessSystem sys{BitMatrix(row_count_, k), BitVector(row_count_)};
    for (std::size_t r = 0; r < row_count_; ++r) {
        for (std::size_t j = 0; j < k; ++j)
            if ((ws[r * words_per_row_ + (j >> 6)] >> (j & 63)) & 1)
                sys.lhs.set_bit(r, j);
        if ((ws[r * words_per_row_ + (k >> 6)] >> (k & 63)) & 1) sys.rhs.set_bit(r);
    }
    return sys;
}

bool SyndromeDecoder::test_guess(const Syndrome& alpha, Point v) const {
    check_syndrome(alpha);
    const PreparedRows rows = prepare(alpha);
    std::vector<std::uint64_t> ws((row_count_ + 1) * words_per_row_, 0);
    assemble(rows, v, ws);
    return consistent_in_place(ws, row_count_, words_per_row_, locator_.size());
}

std::vector<Point> SyndromeDecoder::locate_errors(const Syndrome& alpha,
                                                  int threads) const {
    check_syndrome(alpha);
    const std::size_t n = std::size_t(1) << params_.m;
    const PreparedRows rows = prepare(alpha);

    std::vector<std::uint8_t> hits(n, 0);
    auto scan = [&](std::size_t lo, std::size_t hi) {
        std::vector<std::uint64_t> ws((row_count_ + 1) * words_per_row_, 0);
        for (std::size_t v = lo; v < hi; ++v) {
            assemble(rows, static_cast<Point>(v), ws);
            if (consistent_in_place(ws, row_count_, words_per_row_, locator_.size()))
                hits[v] = 1;
        }
    };

    const std::size_t workers =
        std::min<std::size_t>(std::max(threads, 1), n);
    if (workers <= 1) {
        scan(0, n);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (n + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t lo = w * chunk;
            const std::size_t hi = std::min(n, lo + chunk);
            if (lo < hi) pool.emplace_back(scan, lo, hi);
        }
        for (auto& t : pool) t.join();
    }

    std::vector<Point> found;
    for (std::size_t v = 0; v < n; ++v)
        if (hits[v]) found.push_back(static_cast<Point>(v));
    return found;
}

std::optional<BitVector> SyndromeDecoder::decode(const BitVector& y, int threads) const {
    if (y.size() != (std::size_t(1) << params_.m))
        throw std::invalid_argument("decode: word length must equal 2^m");
    const Syndrome alpha = syndrome(y, params_.syndrome_degree());
    if (alpha.is_zero()) return y;  // already a codeword of RM(m, m-2r-2)
    BitVector corrected = y;
    for (Point v : locate_errors(alpha, threads)) corrected.flip_bit(v);
    if (!is_codeword(params_.code(), corrected)) return std::nullopt;
    return corrected;
}

GuessSystem build_guess_system(const Syndrome& alpha, Point v, const DecoderParams& params) {
    return SyndromeDecoder(params).build_guess_system(alpha, v);
}

bool test_guess(const Syndrome& alpha, Point v, const DecoderParams& params) {
    return SyndromeDecoder(params).test_guess(alpha, v);
}

std::vector<Point> locate_errors(const Syndrome& alpha, const DecoderParams& params,
                                 int threads) {
    return SyndromeDecoder(params).locate_errors(alpha, threads);
}

std::optional<BitVector> decode(const BitVector& y, const DecoderParams& params,
                                int threads) {
    return SyndromeDecoder(params).decode(y, threads);
}

}  // namespace rmdec
