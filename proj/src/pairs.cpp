#include "rmdec/pairs.hpp"

#include <algorithm>

namespace rmdec {

GenericLinearCode GenericLinearCode::from_generator(BitMatrix generator) {
    if (rank(generator) != generator.rows())
        throw std::invalid_argument("GenericLinearCode: generator rows must be independent");
    GenericLinearCode code;
    code.length_ = generator.cols();
    code.parity_ = BitMatrix::from_rows(kernel_basis(generator));
    if (code.parity_.rows() == 0) code.parity_ = BitMatrix(0, generator.cols());
    code.generator_ = std::move(generator);
    return code;
}

GenericLinearCode GenericLinearCode::from_parity(BitMatrix parity) {
    GenericLinearCode code;
    code.length_ = parity.cols();
    code.generator_ = BitMatrix::from_rows(kernel_basis(parity));
    if (code.generator_.rows() == 0) code.generator_ = BitMatrix(0, parity.cols());
    code.parity_ = std::move(parity);
    return code;
}

GenericLinearCode GenericLinearCode::from_spanning_rows(const BitMatrix& rows) {
    BitMatrix reduced = rows;
    const std::size_t r = reduced_row_echelon(reduced, reduced.cols()).size();
    BitMatrix basis(r, rows.cols());
    for (std::size_t i = 0; i < r; ++i) basis.set_row(i, reduced.row(i));
    return from_generator(std::move(basis));
}

bool GenericLinearCode::contains(const BitVector& w) const {
    if (w.size() != length_)
        throw std::invalid_argument("GenericLinearCode::contains: length mismatch");
    return parity_.multiply(w).is_zero();
}

BitVector GenericLinearCode::codeword_from_coeffs(const BitVector& coeffs) const {
    if (coeffs.size() != generator_.rows())
        throw std::invalid_argument("codeword_from_coeffs: dimension mismatch");
    BitVector w(length_);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs.bit(i)) w ^= generator_.row(i);
    return w;
}

bool check_star_closure(const GenericLinearCode& e, const GenericLinearCode& c,
                        const GenericLinearCode& n) {
    if (e.length() != c.length() || c.length() != n.length())
        throw std::invalid_argument("check_star_closure: length mismatch");
    for (std::size_t i = 0; i < e.dimension(); ++i) {
        const BitVector ei = e.generator().row(i);
        for (std::size_t j = 0; j < c.dimension(); ++j)
            if (!n.contains(star(ei, c.generator().row(j)))) return false;
    }
    return true;
}

ErrorLocatingTriple make_error_locating_triple(GenericLinearCode e, GenericLinearCode c,
                                               GenericLinearCode n) {
    if (!check_star_closure(e, c, n))
        throw std::invalid_argument("error-locating triple: E*C not contained in N");
    return {std::move(e), std::move(c), std::move(n)};
}

bool locator_exists(const ErrorLocatingTriple& triple, const std::vector<std::size_t>& zeros,
                    std::size_t i) {
    const BitMatrix& gen = triple.locator.generator();
    BitMatrix a(zeros.size() + 1, gen.rows());
    BitVector rhs(zeros.size() + 1);
    for (std::size_t row = 0; row < zeros.size(); ++row)
        for (std::size_t col = 0; col < gen.rows(); ++col)
            if (gen.bit(col, zeros[row])) a.set_bit(row, col);
    for (std::size_t col = 0; col < gen.rows(); ++col)
        if (gen.bit(col, i)) a.set_bit(zeros.size(), col);
    rhs.set_bit(zeros.size());
    return consistent(a, rhs);
}

std::vector<BitVector> locator_solutions(const ErrorLocatingTriple& triple,
                                         const BitVector& y) {
    const std::size_t n = triple.code.length();
    if (y.size() != n) throw std::invalid_argument("locator_solutions: length mismatch");
    const BitMatrix& egen = triple.locator.generator();
    const BitMatrix& ngen = triple.product.generator();
    const std::size_t ke = egen.rows();
    const std::size_t kn = ngen.rows();

    // One equation per coordinate: (a * y)_i + b_i = 0, written over the
    // coefficient vectors of a in E and b in N.
    BitMatrix sys(n, ke + kn);
    for (std::size_t i = 0; i < n; ++i) {
        if (y.bit(i))
            for (std::size_t a = 0; a < ke; ++a)
                if (egen.bit(a, i)) sys.set_bit(i, a);
        for (std::size_t b = 0; b < kn; ++b)
            if (ngen.bit(b, i)) sys.set_bit(i, ke + b);
    }

    std::vector<BitVector> locators;
    for (const BitVector& k : kernel_basis(sys)) {
        BitVector coeffs(ke);
        for (std::size_t a = 0; a < ke; ++a)
            if (k.bit(a)) coeffs.set_bit(a);
        locators.push_back(triple.locator.codeword_from_coeffs(coeffs));
    }
    return locators;
}

ErasureDecodeResult erasure_decode(const GenericLinearCode& code, const ErasureWord& w) {
    if (w.known.size() != code.length() || w.values.size() != w.known.size())
        throw std::invalid_argument("erasure_decode: length mismatch");

    std::vector<std::size_t> erased;
    for (std::size_t i = 0; i < w.known.size(); ++i)
        if (!w.known.bit(i)) erased.push_back(i);

    if (erased.empty()) {
        if (code.contains(w.values)) return {ErasureStatus::ok, w.values};
        return {ErasureStatus::inconsistent, BitVector(w.size())};
    }

    const BitMatrix& parity = code.parity();
    BitMatrix a(parity.rows(), erased.size());
    for (std::size_t j = 0; j < erased.size(); ++j)
        for (std::size_t row = 0; row < parity.rows(); ++row)
            if (parity.bit(row, erased[j])) a.set_bit(row, j);
    const BitVector rhs = parity.multiply(w.values);

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

std::optional<BitVector> abstract_decode(const BitVector& y,
                                         const ErrorLocatingTriple& triple) {
    const std::size_t n = triple.code.length();
    if (y.size() != n) throw std::invalid_argument("abstract_decode: length mismatch");

    const std::vector<BitVector> locators = locator_solutions(triple, y);

    // Coordinates covered by some locator are trusted; the common zeros are
    // the suspected error positions and get erased.
    BitVector covered(n);
    for (const BitVector& a : locators) covered |= a;

    ErasureWord masked{covered, star(y, covered)};
    const ErasureDecodeResult res = erasure_decode(triple.code, masked);
    if (res.status != ErasureStatus::ok) return std::nullopt;
    return res.word;
}

ErrorLocatingTriple rm_triple(int m, int r) {
    if (m < 0 || r < 0 || m - 2 * r - 2 < 0)
        throw std::invalid_argument("rm_triple: need m - 2r - 2 >= 0");
    GenericLinearCode e = GenericLinearCode::from_generator(evaluation_matrix(m, r + 1));
    GenericLinearCode c =
        GenericLinearCode::from_generator(evaluation_matrix(m, m - 2 * r - 2));
    GenericLinearCode n =
        GenericLinearCode::from_generator(evaluation_matrix(m, m - r - 1));
    return make_error_locating_triple(std::move(e), std::move(c), std::move(n));
}

TensorEmbedding build_tensor_triple(const BitMatrix& h) {
    if (h.rows() == 0 || h.cols() == 0)
        throw std::invalid_argument("build_tensor_triple: empty parity check");
    if (rank(h) != h.rows())
        throw std::invalid_argument("build_tensor_triple: parity check must have full row rank");
    const int m = static_cast<int>(h.rows());
    const std::size_t n = h.cols() + 1;

    BitMatrix h0(h.rows() + 1, n);
    for (std::size_t j = 0; j < n; ++j) h0.set_bit(0, j);  // the added parity bit
    for (std::size_t i = 0; i < h.rows(); ++i)
        for (std::size_t j = 0; j < h.cols(); ++j)
            if (h.bit(i, j)) h0.set_bit(i + 1, j + 1);

    // Column j of the extended check is (1, v); v indexes the evaluation
    // point the column is embedded at.
    std::vector<Point> points(n);
    for (std::size_t j = 0; j < n; ++j) {
        Point v = 0;
        for (int i = 0; i < m; ++i)
            if (h0.bit(i + 1, j)) v |= Point(1) << i;
        points[j] = v;
    }
    {
        std::vector<Point> sorted = points;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument(
                "build_tensor_triple: extended parity check has repeated columns");
    }

    // Restriction of a full evaluation matrix to the embedded coordinates.
    auto restricted_rows = [&](int degree) {
        const MonomialBasis basis(m, degree);
        BitMatrix rows(basis.size(), n);
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (monomial_value(basis.mask(i), points[j])) rows.set_bit(i, j);
        return rows;
    };

    GenericLinearCode ncode = GenericLinearCode::from_parity(h0);
    GenericLinearCode ccode = GenericLinearCode::from_parity(restricted_rows(3));
    GenericLinearCode ecode = GenericLinearCode::from_spanning_rows(restricted_rows(2));

    TensorEmbedding emb{h, std::move(h0), m, std::move(points),
                        make_error_locating_triple(std::move(ecode), std::move(ccode),
                                                   std::move(ncode))};
    return emb;
}

}  // namespace rmdec
