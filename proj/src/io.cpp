#include "rmdec/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace rmdec {

namespace {

std::string read_line(std::istream& in, const char* what) {
    std::string line;
    if (!std::getline(in, line)) throw FormatError(std::string("missing ") + what);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

// Parses "key=<non-negative integer>" out of a header token.
long parse_field(const std::string& token, const std::string& key) {
    const std::string prefix = key + "=";
    if (token.rfind(prefix, 0) != 0)
        throw FormatError("malformed header field, expected " + prefix + "<int>");
    const std::string digits = token.substr(prefix.size());
    if (digits.empty()) throw FormatError("empty value for header field " + key);
    long value = 0;
    for (char c : digits) {
        if (c < '0' || c > '9') throw FormatError("non-numeric header field " + key);
        value = value * 10 + (c - '0');
        if (value > (1L << 30)) throw FormatError("header field out of range: " + key);
    }
    return value;
}

void expect_end(std::istream& in) {
    std::string extra;
    while (std::getline(in, extra)) {
        if (!extra.empty() && extra.back() == '\r') extra.pop_back();
        if (!extra.empty()) throw FormatError("trailing content after data");
    }
}

}  // namespace

WordFileData read_word_file(std::istream& in) {
    std::istringstream header(read_line(in, "word header"));
    std::string magic, field;
    header >> magic >> field;
    if (magic != "rmword" || !header.eof())
        throw FormatError("expected header 'rmword m=<m>'");
    const long m = parse_field(field, "m");
    if (m > 24) throw FormatError("word file m exceeds supported size");
    const std::size_t n = std::size_t(1) << m;

    const std::string bits = read_line(in, "word data");
    if (bits.size() != n)
        throw FormatError("word length does not match header");
    WordFileData data;
    data.m = static_cast<int>(m);
    data.word.known = BitVector(n);
    data.word.values = BitVector(n);
    for (std::size_t i = 0; i < n; ++i) {
        switch (bits[i]) {
            case '0': data.word.known.set_bit(i); break;
            case '1': data.word.known.set_bit(i); data.word.values.set_bit(i); break;
            case '?': break;
            default: throw FormatError("word data must use characters 0, 1, ?");
        }
    }
    expect_end(in);
    return data;
}

void write_word_file(std::ostream& out, int m, const BitVector& word) {
    if (word.size() != (std::size_t(1) << m))
        throw std::invalid_argument("write_word_file: length must equal 2^m");
    out << "rmword m=" << m << '\n' << word.to_string() << '\n';
}

void write_word_file(std::ostream& out, int m, const ErasureWord& word) {
    if (word.size() != (std::size_t(1) << m))
        throw std::invalid_argument("write_word_file: length must equal 2^m");
    std::string line(word.size(), '?');
    for (std::size_t i = 0; i < word.size(); ++i)
        if (word.known.bit(i)) line[i] = word.values.bit(i) ? '1' : '0';
    out << "rmword m=" << m << '\n' << line << '\n';
}

BitMatrix read_matrix_file(std::istream& in) {
    std::istringstream header(read_line(in, "matrix header"));
    std::string magic, rows_field, cols_field;
    header >> magic >> rows_field >> cols_field;
    if (magic != "gf2matrix" || !header.eof())
        throw FormatError("expected header 'gf2matrix rows=<R> cols=<C>'");
    const long rows = parse_field(rows_field, "rows");
    const long cols = parse_field(cols_field, "cols");
    if (rows <= 0 || cols <= 0) throw FormatError("matrix dimensions must be positive");

    BitMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    for (long r = 0; r < rows; ++r) {
        const std::string line = read_line(in, "matrix row");
        if (line.size() != static_cast<std::size_t>(cols))
            throw FormatError("matrix row length does not match header");
        for (long c = 0; c < cols; ++c) {
            if (line[c] == '1')
                m.set_bit(r, c);
            else if (line[c] != '0')
                throw FormatError("matrix data must use characters 0, 1");
        }
    }
    expect_end(in);
    return m;
}

void write_matrix_file(std::ostream& out, const BitMatrix& m) {
    out << "gf2matrix rows=" << m.rows() << " cols=" << m.cols() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) out << m.row(r).to_string() << '\n';
}

CoeffsFileData read_coeffs_file(std::istream& in) {
    std::istringstream header(read_line(in, "coefficients header"));
    std::string magic, m_field, r_field;
    header >> magic >> m_field >> r_field;
    if (magic != "rmcoeffs" || !header.eof())
        throw FormatError("expected header 'rmcoeffs m=<m> r=<r>'");
    const long m = parse_field(m_field, "m");
    const long r = parse_field(r_field, "r");
    if (m > 24 || r > m) throw FormatError("invalid coefficient header parameters");
    const std::size_t k = binomial_sum(static_cast<int>(m), static_cast<int>(r));

    const std::string bits = read_line(in, "coefficient data");
    if (bits.size() != k)
        throw FormatError("coefficient length does not match C(m,<=r)");
    CoeffsFileData data;
    data.m = static_cast<int>(m);
    data.r = static_cast<int>(r);
    try {
        data.coeffs = BitVector::from_string(bits);
    } catch (const std::invalid_argument&) {
        throw FormatError("coefficient data must use characters 0, 1");
    }
    expect_end(in);
    return data;
}

void write_coeffs_file(std::ostream& out, int m, int r, const BitVector& coeffs) {
    if (coeffs.size() != binomial_sum(m, r))
        throw std::invalid_argument("write_coeffs_file: length must equal C(m,<=r)");
    out << "rmcoeffs m=" << m << " r=" << r << '\n' << coeffs.to_string() << '\n';
}

}  // namespace rmdec
