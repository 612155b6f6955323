#ifndef RMDEC_SYNDECODE_HPP
#define RMDEC_SYNDECODE_HPP

#include "rmdec/rm.hpp"

// Syndrome-driven error location for RM(m, m-2r-2). For every candidate
// point v the decoder asks whether some degree-r polynomial f could be the
// "locator" that singles v out of the unknown error set: f must sum to 1
// over the errors, take value 1 at v, and keep both properties after
// multiplication by any basis monomial and by any factor (x_l + v_l + 1).
// Each of those constraints is linear in the coefficients of f and every
// coefficient of the constraint matrix is an entry of the degree-(2r+1)
// syndrome, so the test is one small F2 system per guess. When the error
// points have independent degree-r columns, the system is consistent exactly
// for the error points.

namespace rmdec {

struct DecoderParams {
    int m = 0;
    int r = 0;  // locator degree; the decoded code is RM(m, m-2r-2)

    DecoderParams(int m_in, int r_in) : m(m_in), r(r_in) {
        if (m < 0 || r < 0 || m - 2 * r - 2 < 0)
            throw std::invalid_argument("DecoderParams: need m - 2r - 2 >= 0");
    }

    RMCode code() const { return RMCode(m, m - 2 * r - 2); }
    int syndrome_degree() const { return 2 * r + 1; }
};

// The per-guess linear system in the C(m,<=r) coefficients of f.
// Row layout: sum-over-errors row, value-at-v row, C(m,<=r) rows for the
// monomial multiples, m*C(m,<=r) rows for the coordinate factors.
struct GuessSystem {
    BitMatrix lhs;
    BitVector rhs;
};

class SyndromeDecoder {
  public:
    explicit SyndromeDecoder(DecoderParams params);

    const DecoderParams& params() const { return params_; }

    GuessSystem build_guess_system(const Syndrome& alpha, Point v) const;

    // True iff the guess system for v is consistent.
    bool test_guess(const Syndrome& alpha, Point v) const;

    // All points whose guess system is consistent, in point-index order.
    // Guess ranges may be evaluated concurrently; the result does not depend
    // on the schedule.
    std::vector<Point> locate_errors(const Syndrome& alpha, int threads = 1) const;

    // Full decode: syndrome, locate, flip, verify. Returns the corrected
    // codeword, or nullopt when the flipped word fails the parity check
    // (the pattern was not correctable).
    std::optional<BitVector> decode(const BitVector& y, int threads = 1) const;

  private:
    struct PreparedRows;  // per-syndrome row images, coefficient part only

    PreparedRows prepare(const Syndrome& alpha) const;
    void assemble(const PreparedRows& rows, Point v, std::vector<std::uint64_t>& ws) const;
    void check_syndrome(const Syndrome& alpha) const;

    DecoderParams params_;
    MonomialBasis locator_;    // M(m, r)
    MonomialBasis syndromes_;  // M(m, 2r+1)
    std::size_t row_count_;
    std::size_t words_per_row_;
    // Syndrome indices of mask unions, flattened: pair_idx_[i*K+j] is the
    // index of (mask_i | mask_j); triple_idx_ additionally unions variable l.
    std::vector<std::uint32_t> single_idx_;
    std::vector<std::uint32_t> pair_idx_;
    std::vector<std::uint32_t> triple_idx_;
};

// One-shot conveniences; construct a SyndromeDecoder for repeated use.
GuessSystem build_guess_system(const Syndrome& alpha, Point v, const DecoderParams& params);
bool test_guess(const Syndrome& alpha, Point v, const DecoderParams& params);
std::vector<Point> locate_errors(const Syndrome& alpha, const DecoderParams& params,
                                 int threads = 1);
std::optional<BitVector> decode(const BitVector& y, const DecoderParams& params,
                                int threads = 1);

}  // namespace rmdec

#endif
