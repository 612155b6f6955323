#include "rmdec/gf2.hpp"

namespace rmdec {

std::vector<std::size_t> reduced_row_echelon(BitMatrix& m, std::size_t col_limit) {
    std::vector<std::size_t> pivots;
    std::size_t next_row = 0;
    for (std::size_t col = 0; col < col_limit && next_row < m.rows(); ++col) {
        std::size_t pivot = next_row;
        while (pivot < m.rows() && !m.bit(pivot, col)) ++pivot;
        if (pivot == m.rows()) continue;
        m.swap_rows(next_row, pivot);
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (r != next_row && m.bit(r, col)) m.xor_row(r, next_row);
        pivots.push_back(col);
        ++next_row;
    }
    return pivots;
}

std::size_t rank(const BitMatrix& m) {
    BitMatrix work = m;
    return reduced_row_echelon(work, m.cols()).size();
}

namespace {

// Augments A with b as an extra trailing column.
BitMatrix augmented(const BitMatrix& a, const BitVector& b) {
    if (b.size() != a.rows())
        throw std::invalid_argument("solve: b length must equal row count");
    BitMatrix m(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        auto src = a.row_words(r);
        auto dst = m.row_words(r);
        for (std::size_t i = 0; i < src.size(); ++i) dst[i] = src[i];
        if (b.bit(r)) m.set_bit(r, a.cols());
    }
    return m;
}

}  // namespace

SolveReport solve_full(const BitMatrix& a, const BitVector& b) {
    BitMatrix m = augmented(a, b);
    const std::vector<std::size_t> pivots = reduced_row_echelon(m, a.cols());
    // Rows past the pivots have zero coefficients; a set rhs bit there means
    // the augmented rank exceeds rank(A).
    for (std::size_t r = pivots.size(); r < m.rows(); ++r)
        if (m.bit(r, a.cols()))
            return {SolveStatus::inconsistent, BitVector(a.cols())};
    BitVector x(a.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        if (m.bit(i, a.cols())) x.set_bit(pivots[i]);
    const SolveStatus status = pivots.size() == a.cols() ? SolveStatus::unique
                                                         : SolveStatus::underdetermined;
    return {status, std::move(x)};
}

std::optional<BitVector> solve(const BitMatrix& a, const BitVector& b) {
    SolveReport rep = solve_full(a, b);
    if (rep.status == SolveStatus::inconsistent) return std::nullopt;
    return std::move(rep.x);
}

bool consistent(const BitMatrix& a, const BitVector& b) {
    BitMatrix m = augmented(a, b);
    std::size_t next_row = 0;
    for (std::size_t col = 0; col < a.cols() && next_row < m.rows(); ++col) {
        std::size_t pivot = next_row;
        while (pivot < m.rows() && !m.bit(pivot, col)) ++pivot;
        if (pivot == m.rows()) continue;
        m.swap_rows(next_row, pivot);
        for (std::size_t r = next_row + 1; r < m.rows(); ++r)
            if (m.bit(r, col)) m.xor_row(r, next_row);
        ++next_row;
    }
    for (std::size_t r = next_row; r < m.rows(); ++r)
        if (m.bit(r, a.cols())) return false;
    return true;
}

std::vector<BitVector> kernel_basis(const BitMatrix& a) {
    BitMatrix m = a;
    const std::vector<std::size_t> pivots = reduced_row_echelon(m, a.cols());
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<BitVector> basis;
    basis.reserve(a.cols() - pivots.size());
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        BitVector x(a.cols());
        x.set_bit(f);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (m.bit(i, f)) x.set_bit(pivots[i]);
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace rmdec
