#ifndef RMDEC_MONOMIAL_HPP
#define RMDEC_MONOMIAL_HPP

#include <cstdint>
#include <vector>

#include "rmdec/gf2.hpp"

// Multilinear monomials over F2 in m variables, and the ordered basis of all
// monomials of degree <= r. A monomial is a subset of variables stored as a
// bit mask: bit j of the mask selects variable x_{j+1}. Points of the
// evaluation domain F2^m use the same packing: point index i assigns to
// x_{j+1} the value of bit j of i. This convention is global; every
// serialized word relies on it.

namespace rmdec {

using Point = std::uint32_t;

struct Monomial {
    std::uint32_t mask = 0;
    int m = 0;

    int degree() const { return std::popcount(mask); }
};

// Value of the monomial with the given variable mask at a point: 1 iff every
// selected variable is 1. The empty mask is the constant monomial 1.
inline bool monomial_value(std::uint32_t mask, Point u) {
    return (u & mask) == mask;
}

inline bool eval(const Monomial& mono, Point u) { return monomial_value(mono.mask, u); }

// Pointwise product of monomials; x^2 = x on F2 evaluations, so the product
// is the union of the variable sets.
inline Monomial product(const Monomial& a, const Monomial& b) {
    if (a.m != b.m) throw std::invalid_argument("Monomial product: mixed m");
    return {a.mask | b.mask, a.m};
}

// Sum of binomial coefficients C(m,0) + ... + C(m,r).
std::size_t binomial_sum(int m, int r);

// All monomials of degree <= r in m variables, in graded lexicographic
// order: degree ascending, then mask-as-integer ascending. The inverse map
// from mask to basis position is precomputed.
class MonomialBasis {
  public:
    MonomialBasis(int m, int r);

    int m() const { return m_; }
    int r() const { return r_; }
    std::size_t size() const { return masks_.size(); }

    std::uint32_t mask(std::size_t i) const { return masks_[i]; }
    Monomial monomial(std::size_t i) const { return {masks_[i], m_}; }

    std::size_t index_of(std::uint32_t mask) const {
        const std::int32_t idx = index_[mask];
        if (idx < 0) throw std::out_of_range("MonomialBasis: mask outside basis");
        return static_cast<std::size_t>(idx);
    }

    bool contains(std::uint32_t mask) const { return index_[mask] >= 0; }

    const std::vector<std::uint32_t>& masks() const { return masks_; }

  private:
    int m_, r_;
    std::vector<std::uint32_t> masks_;
    std::vector<std::int32_t> index_;  // 2^m entries, -1 when degree > r
};

// All monomial values at one point, in basis order: the column of the
// evaluation matrix indexed by u. Entry 0 (constant monomial) is always 1.
BitVector point_column(const MonomialBasis& basis, Point u);

// The full evaluation matrix: rows indexed by the basis, columns by the 2^m
// points; entry (M, u) = M(u). Materialized only on request; callers that
// stream columns should use point_column instead. Throws when the bit count
// exceeds the memory budget.
BitMatrix evaluation_matrix(int m, int r);

}  // namespace rmdec

#endif
