#ifndef RMDEC_RM_HPP
#define RMDEC_RM_HPP

#include <optional>

#include "rmdec/monomial.hpp"

// Reed-Muller codes RM(m,r): evaluation vectors over all 2^m points of the
// multilinear polynomials of degree <= r. The evaluation matrix of degree s
// is simultaneously the generator of RM(m,s) and the parity check of
// RM(m, m-s-1); membership and syndromes lean on that duality throughout.

namespace rmdec {

struct RMCode {
    int m = 0;
    int r = 0;

    RMCode(int m_in, int r_in) : m(m_in), r(r_in) {
        if (m < 0 || r < 0 || r > m)
            throw std::invalid_argument("RMCode: need 0 <= r <= m");
    }

    std::size_t block_length() const { return std::size_t(1) << m; }
    std::size_t dimension() const { return binomial_sum(m, r); }
    std::size_t distance() const { return std::size_t(1) << (m - r); }
    double rate() const {
        return static_cast<double>(dimension()) / static_cast<double>(block_length());
    }
};

// Degree-s syndrome of a word (or of an error pattern): entry at basis index
// of M is the parity of M over the support, i.e. sum_{i: w_i=1} M(point i).
struct Syndrome {
    int m = 0;
    int degree = 0;
    BitVector values;  // length binomial_sum(m, degree), basis order

    bool is_zero() const { return values.is_zero(); }
};

// A partially known word: values holds the known coordinates and is zero
// wherever known is zero.
struct ErasureWord {
    BitVector known;   // 1 = coordinate is known
    BitVector values;  // meaningful only where known

    std::size_t size() const { return known.size(); }
};

// In-place F2 transforms on a truth table of 2^m bits. accumulate_subset_sums
// sends coefficient vectors (indexed by monomial mask) to evaluation vectors
// (indexed by point) and is an involution; accumulate_superset_sums computes
// every syndrome entry of a word at once.
void accumulate_subset_sums(BitVector& table, int m);
void accumulate_superset_sums(BitVector& table, int m);

// Evaluation vector of the polynomial with the given coefficients (basis
// order, length = dimension). Linear and injective.
BitVector encode(const RMCode& code, const BitVector& coeffs);

// Inverse of encode: the coefficient vector of a codeword, or nullopt when
// the word's polynomial has degree above r (i.e. the word is not in the
// code). Independent of the parity-check route used by is_codeword.
std::optional<BitVector> anf_coefficients(const RMCode& code, const BitVector& word);

// Membership via the duality: w is in RM(m,r) iff its degree-(m-r-1)
// syndrome vanishes. Every word belongs to RM(m,m).
bool is_codeword(const RMCode& code, const BitVector& w);

// Degree-s syndrome of a word of length 2^m. Streams over the word; the
// evaluation matrix is never materialized.
Syndrome syndrome(const BitVector& w, int s);

// True iff the degree-r point columns {u^r : u in U} are linearly
// independent; equivalently, the pattern U is correctable from erasures in
// RM(m, m-r-1). Points must be distinct.
bool erasure_correctable(const std::vector<Point>& points, int m, int r);

enum class ErasureStatus { ok, ambiguous, inconsistent };

struct ErasureDecodeResult {
    ErasureStatus status;
    BitVector word;  // the completed codeword when status == ok
};

// Fills the unknown coordinates so that every parity check of the code
// holds. Solves for the erased coordinates only. "ambiguous" when more than
// one completion exists, "inconsistent" when none does.
ErasureDecodeResult erasure_decode(const RMCode& code, const ErasureWord& w);

}  // namespace rmdec

#endif
