#include "rmdec/rm.hpp"

#include <algorithm>

namespace rmdec {

namespace {

// Bits whose j-th index bit is set, for j < 6; the intra-word halves of the
// butterfly levels.
constexpr std::uint64_t kLevelMask[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
};

void require_power_of_two_length(const BitVector& w, int m) {
    if (w.size() != (std::size_t(1) << m))
        throw std::invalid_argument("expected a word of length 2^m");
}

int log2_length(const BitVector& w) {
    const std::size_t n = w.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::invalid_argument("word length must be a power of two");
    return std::countr_zero(n);
}

}  // namespace

void accumulate_subset_sums(BitVector& table, int m) {
    require_power_of_two_length(table, m);
    auto w = table.words();
    for (int j = 0; j < m && j < 6; ++j) {
        const std::uint64_t mask = kLevelMask[j];
        const int d = 1 << j;
        for (auto& word : w) word ^= (word << d) & mask;
    }
    for (int j = 6; j < m; ++j) {
        const std::size_t stride = std::size_t(1) << (j - 6);
        for (std::size_t base = 0; base < w.size(); base += 2 * stride)
            for (std::size_t k = 0; k < stride; ++k)
                w[base + stride + k] ^= w[base + k];
    }
}

void accumulate_superset_sums(BitVector& table, int m) {
    require_power_of_two_length(table, m);
    auto w = table.words();
    for (int j = 0; j < m && j < 6; ++j) {
        const std::uint64_t mask = ~kLevelMask[j];
        const int d = 1 << j;
        for (auto& word : w) word ^= (word >> d) & mask;
    }
    for (int j = 6; j < m; ++j) {
        const std::size_t stride = std::size_t(1) << (j - 6);
        for (std::size_t base = 0; base < w.size(); base += 2 * stride)
            for (std::size_t k = 0; k < stride; ++k)
                w[base + k] ^= w[base + stride + k];
    }
}

BitVector encode(const RMCode& code, const BitVector& coeffs) {
    const MonomialBasis basis(code.m, code.r);
    if (coeffs.size() != basis.size())
        throw std::invalid_argument("encode: coefficient length must equal dimension");
    BitVector table(code.block_length());
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (coeffs.bit(i)) table.set_bit(basis.mask(i));
    accumulate_subset_sums(table, code.m);
    return table;
}

std::optional<BitVector> anf_coefficients(const RMCode& code, const BitVector& word) {
    require_power_of_two_length(word, code.m);
    BitVector table = word;
    accumulate_subset_sums(table, code.m);  // involution: back to coefficients
    const MonomialBasis basis(code.m, code.r);
    BitVector coeffs(basis.size());
    for (std::size_t mask = 0; mask < table.size(); ++mask) {
        if (!table.bit(mask)) continue;
        if (!basis.contains(static_cast<std::uint32_t>(mask))) return std::nullopt;
        coeffs.set_bit(basis.index_of(static_cast<std::uint32_t>(mask)));
    }
    return coeffs;
}

bool is_codeword(const RMCode& code, const BitVector& w) {
    require_power_of_two_length(w, code.m);
    if (code.r == code.m) return true;
    return syndrome(w, code.m - code.r - 1).is_zero();
}

Syndrome syndrome(const BitVector& w, int s) {
    const int m = log2_length(w);
    if (s < 0 || s > m) throw std::invalid_argument("syndrome: need 0 <= s <= m");
    BitVector table = w;
    accumulate_superset_sums(table, m);
    const MonomialBasis basis(m, s);
    Syndrome result{m, s, BitVector(basis.size())};
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (table.bit(basis.mask(i))) result.values.set_bit(i);
    return result;
}

bool erasure_correctable(const std::vector<Point>& points, int m, int r) {
    {
        std::vector<Point> sorted = points;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("erasure_correctable: points must be distinct");
    }
    const MonomialBasis basis(m, r);
    if (points.size() > basis.size()) return false;
    BitMatrix columns(points.size(), basis.size());
    for (std::size_t i = 0; i < points.size(); ++i)
        columns.set_row(i, point_column(basis, points[i]));
    return rank(columns) == points.size();
}

ErasureDecodeResult erasure_decode(const RMCode& code, const ErasureWord& w) {
    if (w.known.size() != code.block_length() || w.values.size() != w.known.size())
        throw std::invalid_argument("erasure_decode: word length must equal 2^m");
    for (std::size_t i = 0; i < w.values.size(); ++i)
        if (w.values.bit(i) && !w.known.bit(i))
            throw std::invalid_argument("erasure_decode: value set at unknown position");

    std::vector<Point> erased;
    for (std::size_t i = 0; i < w.known.size(); ++i)
        if (!w.known.bit(i)) erased.push_back(static_cast<Point>(i));

    if (erased.empty()) {
        if (is_codeword(code, w.values)) return {ErasureStatus::ok, w.values};
        return {ErasureStatus::inconsistent, BitVector(w.size())};
    }
    if (code.r == code.m)  // full space: every completion is a codeword
        return {ErasureStatus::ambiguous, BitVector(w.size())};

    // One equation per parity monomial, one unknown per erased coordinate.
    const int s = code.m - code.r - 1;
    const MonomialBasis parity(code.m, s);
    BitMatrix a(parity.size(), erased.size());
    for (std::size_t j = 0; j < erased.size(); ++j)
        for (std::size_t i = 0; i < parity.size(); ++i)
            if (monomial_value(parity.mask(i), erased[j])) a.set_bit(i, j);
    const BitVector rhs = syndrome(w.values, s).values;

    const SolveReport rep = solve_full(a, rhs);
    if (rep.status == SolveStatus::inconsistent)
        return {ErasureStatus::inconsistent, BitVector(w.size())};
    if (rep.status == SolveStatus::underdetermined)
        return {ErasureStatus::ambiguous, BitVector(w.size())};
    BitVector filled = w.values;
    for (std::size_t j = 0; j < erased.size(); ++j)
        if (rep.x.bit(j)) filled.set_bit(erased[j]);
    return {ErasureStatus::ok, std::move(filled)};
}

}  // namespace rmdec
