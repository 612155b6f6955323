#include "rmdec/monomial.hpp"

namespace rmdec {

namespace {

constexpr int kMaxVariables = 24;  // index tables are 2^m entries

// Next integer with the same popcount (Gosper's hack).
std::uint32_t next_same_weight(std::uint32_t v) {
    const std::uint32_t c = v & -v;
    const std::uint32_t r = v + c;
    return (((r ^ v) >> 2) / c) | r;
}

}  // namespace

std::size_t binomial_sum(int m, int r) {
    if (m < 0 || r < 0) throw std::invalid_argument("binomial_sum: negative input");
    std::size_t total = 0;
    std::size_t c = 1;  // C(m, 0)
    for (int d = 0; d <= r && d <= m; ++d) {
        total += c;
        c = c * static_cast<std::size_t>(m - d) / static_cast<std::size_t>(d + 1);
    }
    return total;
}

MonomialBasis::MonomialBasis(int m, int r) : m_(m), r_(r) {
    if (m < 0 || r < 0 || r > m)
        throw std::invalid_argument("MonomialBasis: need 0 <= r <= m");
    if (m > kMaxVariables)
        throw std::length_error("MonomialBasis: m exceeds supported size");
    masks_.reserve(binomial_sum(m, r));
    for (int d = 0; d <= r; ++d) {
        if (d == 0) {
            masks_.push_back(0);
            continue;
        }
        const std::uint32_t limit = std::uint32_t(1) << m;
        for (std::uint32_t v = (std::uint32_t(1) << d) - 1; v < limit;
             v = next_same_weight(v))
            masks_.push_back(v);
    }
    index_.assign(std::size_t(1) << m, -1);
    for (std::size_t i = 0; i < masks_.size(); ++i)
        index_[masks_[i]] = static_cast<std::int32_t>(i);
}

BitVector point_column(const MonomialBasis& basis, Point u) {
    BitVector col(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (monomial_value(basis.mask(i), u)) col.set_bit(i);
    return col;
}

BitMatrix evaluation_matrix(int m, int r) {
    constexpr std::size_t kBudgetBits = std::size_t(1) << 33;
    const MonomialBasis basis(m, r);
    const std::size_t n = std::size_t(1) << m;
    if (basis.size() * n > kBudgetBits)
        throw std::length_error("evaluation_matrix: size exceeds memory budget");
    BitMatrix e(basis.size(), n);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const std::uint32_t mask = basis.mask(i);
        // Points where the monomial is 1 are exactly the supersets of mask.
        const std::uint32_t comp = static_cast<std::uint32_t>(n - 1) & ~mask;
        std::uint32_t sub = 0;
        for (;;) {
            e.set_bit(i, mask | sub);
            if (sub == comp) break;
            sub = (sub - comp) & comp;
        }
    }
    return e;
}

}  // namespace rmdec
