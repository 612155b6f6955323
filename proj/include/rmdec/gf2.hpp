#ifndef RMDEC_GF2_HPP
#define RMDEC_GF2_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Exact linear algebra over F2 on bit-packed words. All arithmetic here is
// exact; row operations are word-wide XORs. The elimination pivot order is
// fixed (leftmost column first, topmost row first) so that solve() and
// kernel_basis() return the same vectors on every platform.

namespace rmdec {

class BitVector {
  public:
    BitVector() = default;

    explicit BitVector(std::size_t length)
        : len_(length), words_((length + 63) / 64, 0) {}

    // Parses a string of '0'/'1' characters, index 0 first.
    static BitVector from_string(std::string_view bits) {
        BitVector v(bits.size());
        for (std::size_t i = 0; i < bits.size(); ++i) {
            if (bits[i] == '1')
                v.set_bit(i);
            else if (bits[i] != '0')
                throw std::invalid_argument("BitVector::from_string: bad character");
        }
        return v;
    }

    std::size_t size() const { return len_; }

    bool bit(std::size_t i) const {
        check_index(i);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set_bit(std::size_t i, bool value = true) {
        check_index(i);
        const std::uint64_t mask = std::uint64_t(1) << (i & 63);
        if (value)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    void flip_bit(std::size_t i) {
        check_index(i);
        words_[i >> 6] ^= std::uint64_t(1) << (i & 63);
    }

    std::size_t popcount() const {
        std::size_t c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool is_zero() const {
        for (std::uint64_t w : words_)
            if (w) return false;
        return true;
    }

    BitVector& operator^=(const BitVector& other) {
        require_same_length(other);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
        return *this;
    }

    BitVector& operator|=(const BitVector& other) {
        require_same_length(other);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }

    BitVector& operator&=(const BitVector& other) {
        require_same_length(other);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
        return *this;
    }

    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

    bool operator==(const BitVector&) const = default;

    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }

    std::string to_string() const {
        std::string s(len_, '0');
        for (std::size_t i = 0; i < len_; ++i)
            if (bit(i)) s[i] = '1';
        return s;
    }

  private:
    void check_index(std::size_t i) const {
        if (i >= len_) throw std::out_of_range("BitVector: index out of range");
    }
    void require_same_length(const BitVector& other) const {
        if (len_ != other.len_)
            throw std::invalid_argument("BitVector: length mismatch");
    }

    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

// Coordinatewise product; over F2 this is bitwise AND.
inline BitVector star(const BitVector& u, const BitVector& v) {
    if (u.size() != v.size())
        throw std::invalid_argument("star: length mismatch");
    BitVector r = u;
    r &= v;
    return r;
}

class BitMatrix {
  public:
    BitMatrix() = default;

    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), data_(rows * wpr_, 0) {}

    static BitMatrix identity(std::size_t n) {
        BitMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set_bit(i, i);
        return m;
    }

    static BitMatrix from_rows(const std::vector<BitVector>& rows) {
        if (rows.empty()) return BitMatrix(0, 0);
        BitMatrix m(rows.size(), rows[0].size());
        for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
        return m;
    }

    // Test helper: one string per row.
    static BitMatrix from_strings(const std::vector<std::string_view>& rows) {
        std::vector<BitVector> v;
        v.reserve(rows.size());
        for (auto s : rows) v.push_back(BitVector::from_string(s));
        return from_rows(v);
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return wpr_; }

    bool bit(std::size_t r, std::size_t c) const {
        check(r, c);
        return (data_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u;
    }

    void set_bit(std::size_t r, std::size_t c, bool value = true) {
        check(r, c);
        const std::uint64_t mask = std::uint64_t(1) << (c & 63);
        if (value)
            data_[r * wpr_ + (c >> 6)] |= mask;
        else
            data_[r * wpr_ + (c >> 6)] &= ~mask;
    }

    std::span<std::uint64_t> row_words(std::size_t r) {
        return {data_.data() + r * wpr_, wpr_};
    }
    std::span<const std::uint64_t> row_words(std::size_t r) const {
        return {data_.data() + r * wpr_, wpr_};
    }

    BitVector row(std::size_t r) const {
        BitVector v(cols_);
        auto src = row_words(r);
        auto dst = v.words();
        for (std::size_t i = 0; i < wpr_; ++i) dst[i] = src[i];
        return v;
    }

    void set_row(std::size_t r, const BitVector& v) {
        if (v.size() != cols_)
            throw std::invalid_argument("BitMatrix::set_row: length mismatch");
        auto src = v.words();
        auto dst = row_words(r);
        for (std::size_t i = 0; i < wpr_; ++i) dst[i] = src[i];
    }

    void xor_row(std::size_t dst, std::size_t src) {
        auto d = row_words(dst);
        auto s = row_words(src);
        for (std::size_t i = 0; i < wpr_; ++i) d[i] ^= s[i];
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        auto ra = row_words(a);
        auto rb = row_words(b);
        for (std::size_t i = 0; i < wpr_; ++i) std::swap(ra[i], rb[i]);
    }

    // Matrix-vector product over F2; entry r is the parity of <row r, x>.
    BitVector multiply(const BitVector& x) const {
        if (x.size() != cols_)
            throw std::invalid_argument("BitMatrix::multiply: dimension mismatch");
        BitVector y(rows_);
        auto xb = x.words();
        for (std::size_t r = 0; r < rows_; ++r) {
            auto rw = row_words(r);
            std::uint64_t acc = 0;
            for (std::size_t i = 0; i < wpr_; ++i) acc ^= rw[i] & xb[i];
            if (std::popcount(acc) & 1) y.set_bit(r);
        }
        return y;
    }

    BitMatrix transposed() const {
        BitMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (bit(r, c)) t.set_bit(c, r);
        return t;
    }

    bool operator==(const BitMatrix&) const = default;

  private:
    void check(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols_)
            throw std::out_of_range("BitMatrix: index out of range");
    }

    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> data_;
};

// Reduces M in place to reduced row echelon form, using only columns
// [0, col_limit) for pivots; row operations act on the full rows. Returns
// the pivot columns in ascending order (pivot i lives in row i).
std::vector<std::size_t> reduced_row_echelon(BitMatrix& m, std::size_t col_limit);

// F2 row rank.
std::size_t rank(const BitMatrix& m);

// Any x with A x = b, free variables zero under the fixed pivot order;
// nullopt when the system is inconsistent. Dimension mismatch throws.
std::optional<BitVector> solve(const BitMatrix& a, const BitVector& b);

enum class SolveStatus { unique, underdetermined, inconsistent };

struct SolveReport {
    SolveStatus status;
    BitVector x;  // valid unless inconsistent; free variables zero
};

// Like solve() but also reports whether the solution was unique.
SolveReport solve_full(const BitMatrix& a, const BitVector& b);

// True iff A x = b has a solution. Forward elimination only; cheaper than
// solve() when the witness is not needed.
bool consistent(const BitMatrix& a, const BitVector& b);

// Basis of {x : A x = 0}, ordered by free column ascending. Size is
// cols - rank(A).
std::vector<BitVector> kernel_basis(const BitMatrix& a);

}  // namespace rmdec

#endif
