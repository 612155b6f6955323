#ifndef RMDEC_PAIRS_HPP
#define RMDEC_PAIRS_HPP

#include "rmdec/rm.hpp"

// Error location for generic binary linear codes. A triple of codes
// (E, C, N) of common length with E*C contained in N lets any error pattern
// that is erasure-correctable in N be corrected in C: solving a * y = b over
// a in E, b in N pins the error support down as the common zeros of the
// a-solutions, after which the errors are erased and filled back in by
// erasure decoding in C. The degree-three tensor construction manufactures
// such a triple for an arbitrary parity-check matrix by embedding its
// columns among the degree-one monomial columns.

namespace rmdec {

class GenericLinearCode {
  public:
    GenericLinearCode() = default;

    // Rows must be linearly independent; the parity check is derived as a
    // kernel basis of the generator.
    static GenericLinearCode from_generator(BitMatrix generator);

    // Generator derived as a kernel basis of the parity check. Redundant
    // parity rows are allowed.
    static GenericLinearCode from_parity(BitMatrix parity);

    // Row-reduces a (possibly dependent) spanning set to a basis first.
    static GenericLinearCode from_spanning_rows(const BitMatrix& rows);

    std::size_t length() const { return length_; }
    std::size_t dimension() const { return generator_.rows(); }

    const BitMatrix& generator() const { return generator_; }
    const BitMatrix& parity() const { return parity_; }

    bool contains(const BitVector& w) const;

    // Sum of the generator rows selected by the coefficient vector.
    BitVector codeword_from_coeffs(const BitVector& coeffs) const;

  private:
    std::size_t length_ = 0;
    BitMatrix generator_;
    BitMatrix parity_;
};

// True iff star(e, c) lies in N for every pair of generator rows; by
// bilinearity of the pointwise product this decides closure for all pairs
// of codewords.
bool check_star_closure(const GenericLinearCode& e, const GenericLinearCode& c,
                        const GenericLinearCode& n);

struct ErrorLocatingTriple {
    GenericLinearCode locator;  // E
    GenericLinearCode code;     // C, the code being decoded
    GenericLinearCode product;  // N, receiving E*C
};

// Validates equal lengths and star closure; throws on violation.
ErrorLocatingTriple make_error_locating_triple(GenericLinearCode e, GenericLinearCode c,
                                               GenericLinearCode n);

// True iff some codeword of E vanishes on all of `zeros` and is 1 at i.
bool locator_exists(const ErrorLocatingTriple& triple, const std::vector<std::size_t>& zeros,
                    std::size_t i);

// Solutions (a, b) of a * y = b as a kernel basis, projected to the
// a-coefficients and expanded to codewords of E.
std::vector<BitVector> locator_solutions(const ErrorLocatingTriple& triple,
                                         const BitVector& y);

// Erasure decoding against an arbitrary parity check; unknowns are the
// coordinates with known = 0.
ErasureDecodeResult erasure_decode(const GenericLinearCode& code, const ErasureWord& w);

// The full abstract decode: locate via a * y = b, erase the common zeros of
// the a-solutions, complete by erasure decoding in C. Fails (nullopt) when
// the erasure step is ambiguous or inconsistent.
std::optional<BitVector> abstract_decode(const BitVector& y,
                                         const ErrorLocatingTriple& triple);

// RM instantiation: E = RM(m, r+1), C = RM(m, m-2r-2), N = RM(m, m-r-1),
// all as generic codes over the 2^m evaluation points.
ErrorLocatingTriple rm_triple(int m, int r);

struct TensorEmbedding {
    BitMatrix parity;           // the original H
    BitMatrix extended_parity;  // H with a parity bit: leading all-ones row,
                                // leading zero column on the old rows
    int m = 0;                  // rows of H
    std::vector<Point> column_points;  // column j of the extended check read
                                       // as a point of F2^m
    ErrorLocatingTriple triple;
};

// Builds the degree-three tensor triple of the code with parity check H.
// H must have full row rank and the extended check must have distinct
// columns. The embedded code has length cols(H) + 1.
TensorEmbedding build_tensor_triple(const BitMatrix& h);

}  // namespace rmdec

#endif
