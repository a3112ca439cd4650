#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sncfp/partition.hpp"
#include "sncfp/rational.hpp"
#include "sncfp/word.hpp"

namespace sn {

/// Exact rational vector over words. Words are declared orthonormal, so
/// inner products are coefficient sums over shared words. Kept
/// unnormalized; norms are taken symbolically at presentation time.
class WordVector {
public:
    WordVector() = default;
    explicit WordVector(int n) : n_(n) {}
    /// Single word with coefficient 1.
    explicit WordVector(const Word& w) : n_(w.n()) { terms_[w] = 1; }

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Word, Rational>& terms() const { return terms_; }

    void add(const Word& w, const Rational& c);

    WordVector& operator+=(const WordVector& o);
    WordVector& operator-=(const WordVector& o);
    WordVector operator+(const WordVector& o) const { WordVector r = *this; r += o; return r; }
    WordVector operator-(const WordVector& o) const { WordVector r = *this; r -= o; return r; }
    WordVector operator*(const Rational& c) const;

    Rational inner(const WordVector& o) const; // E_SIZE_MISMATCH on width conflict
    Rational norm2() const { return inner(*this); }

    /// Label transposition p(i, j), an isometric involution.
    WordVector transposed(int i, int j) const; // E_LABEL_RANGE
    /// Relabels via image[label] (1-based).
    WordVector mapped(const std::vector<int>& image) const;
    /// Sum over all transpositions p(i,j), 1 <= i < j <= n.
    WordVector class_sum() const;

    /// Tensor-style merge with a factor occupying disjoint slots/labels.
    WordVector merged(const WordVector& o) const;

    std::string str() const;

private:
    int n_ = 0;
    std::map<Word, Rational> terms_;
};

/// Unnormalized sum over all assignments of the given labels to the
/// contiguous orbital range [first_orbital, first_orbital + k). The label
/// list order is the sign reference for the antisymmetric case. norm2 = k!.
WordVector symmetrize_set(const std::vector<int>& labels, int first_orbital, int width);
WordVector antisymmetrize_set(const std::vector<int>& labels, int first_orbital, int width);

/// Young operator for shape f with the given row filling: all row
/// symmetrizers, then all column antisymmetrizers, acting by relabeling.
/// The image lies in the f-isotypic component. Throws E_SHAPE_MISMATCH.
WordVector young_operator_apply(const Partition& f,
                                const std::vector<std::vector<int>>& filling_rows,
                                const WordVector& v);

} // namespace sn
