#pragma once

#include <utility>
#include <vector>

#include "sncfp/rational.hpp"

namespace sn {

/// Dense matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Rational& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    static RationalMatrix identity(size_t n) {
        RationalMatrix m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    RationalMatrix transposed() const {
        RationalMatrix t(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    RationalMatrix operator*(const RationalMatrix& o) const;
    bool operator==(const RationalMatrix& o) const = default;

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

using RationalVector = std::vector<Rational>;

/// Multiplies through by the lcm of denominators, divides by the content,
/// and makes the first nonzero entry positive. No-op on the zero vector.
void integer_clear(RationalVector& v);

/// Basis of the right null space, exact. Fraction-free elimination with
/// first-nonzero pivoting, so the result depends only on the matrix.
/// Returned vectors are integer-cleared, first nonzero entry positive,
/// ordered by free column. Empty when the kernel is trivial.
std::vector<RationalVector> kernel(const RationalMatrix& m);

size_t rank(const RationalMatrix& m);

/// Sequential Gram-Schmidt against the given Gram matrix. Returns the
/// integer-cleared orthogonal vectors with their exact squared norms
/// v^T G v; the unit vector is v/sqrt(N). Throws E_DEPENDENT if an input
/// lies in the span of its predecessors.
std::vector<std::pair<RationalVector, Rational>>
gram_schmidt(const std::vector<RationalVector>& vectors, const RationalMatrix& gram);

/// Same, with a diagonal Gram matrix given by its diagonal.
std::vector<std::pair<RationalVector, Rational>>
gram_schmidt_diag(const std::vector<RationalVector>& vectors, const RationalVector& gram_diag);

/// Row-echelon basis of the span (deterministic, integer-cleared rows).
std::vector<RationalVector> row_space_basis(std::vector<RationalVector> rows);

/// Coordinates of target in the given independent spanning set, or empty
/// if target is outside the span.
RationalVector coordinates_in_span(const std::vector<RationalVector>& basis,
                                   const RationalVector& target);

/// Basis of span(a) ∩ span(b).
std::vector<RationalVector> intersect_spans(const std::vector<RationalVector>& a,
                                            const std::vector<RationalVector>& b);

inline Rational dot(const RationalVector& a, const RationalVector& b) {
    Rational s = 0;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
    return s;
}

} // namespace sn
