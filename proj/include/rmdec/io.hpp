#ifndef RMDEC_IO_HPP
#define RMDEC_IO_HPP

#include <iosfwd>

#include "rmdec/rm.hpp"

// Text serialization. Words and matrices travel as human-auditable bit
// strings with a one-line header; at desk scale the size cost is worth the
// auditability. Coordinate i of a word is always the value at point index i.

namespace rmdec {

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "rmword m=<m>" followed by one line of exactly 2^m characters from
// {0,1,?}; '?' marks an erased coordinate.
struct WordFileData {
    int m = 0;
    ErasureWord word;

    bool has_erasures() const { return word.known.popcount() != word.known.size(); }
};

WordFileData read_word_file(std::istream& in);
void write_word_file(std::ostream& out, int m, const BitVector& word);
void write_word_file(std::ostream& out, int m, const ErasureWord& word);

// "gf2matrix rows=<R> cols=<C>" followed by R lines of C characters.
BitMatrix read_matrix_file(std::istream& in);
void write_matrix_file(std::ostream& out, const BitMatrix& m);

// "rmcoeffs m=<m> r=<r>" followed by one line of C(m,<=r) characters.
struct CoeffsFileData {
    int m = 0;
    int r = 0;
    BitVector coeffs;
};

CoeffsFileData read_coeffs_file(std::istream& in);
void write_coeffs_file(std::ostream& out, int m, int r, const BitVector& coeffs);

}  // namespace rmdec

#endif
