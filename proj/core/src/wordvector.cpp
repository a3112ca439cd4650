#include "sncfp/wordvector.hpp"

#include <algorithm>
#include <numeric>

namespace sn {

void WordVector::add(const Word& w, const Rational& c) {
    if (c == 0) return;
    if (n_ == 0) n_ = w.n();
    else if (w.n() != n_) fail("E_SIZE_MISMATCH", "word width mismatch");
    auto [it, fresh] = terms_.try_emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

WordVector& WordVector::operator+=(const WordVector& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

WordVector& WordVector::operator-=(const WordVector& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

WordVector WordVector::operator*(const Rational& c) const {
    WordVector r(n_);
    if (c == 0) return r;
    for (const auto& [w, x] : terms_) r.terms_[w] = x * c;
    return r;
}

Rational WordVector::inner(const WordVector& o) const {
    if (n_ != 0 && o.n_ != 0 && n_ != o.n_) fail("E_SIZE_MISMATCH", "word width mismatch");
    // walk the smaller map
    const WordVector* small = this;
    const WordVector* large = &o;
    if (small->terms_.size() > large->terms_.size()) std::swap(small, large);
    Rational s = 0;
    for (const auto& [w, c] : small->terms_) {
        auto it = large->terms_.find(w);
        if (it != large->terms_.end()) s += c * it->second;
    }
    return s;
}

WordVector WordVector::transposed(int i, int j) const {
    if (i < 1 || j < 1 || i >= j || j > n_) fail("E_LABEL_RANGE", "transposition labels out of range");
    WordVector r(n_);
    for (const auto& [w, c] : terms_) r.add(w.transposed(i, j), c);
    return r;
}

WordVector WordVector::mapped(const std::vector<int>& image) const {
    WordVector r(n_);
    for (const auto& [w, c] : terms_) r.add(w.mapped(image), c);
    return r;
}

WordVector WordVector::class_sum() const {
    WordVector r(n_);
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j) r += transposed(i, j);
    return r;
}

WordVector WordVector::merged(const WordVector& o) const {
    WordVector r(n_);
    for (const auto& [w1, c1] : terms_)
        for (const auto& [w2, c2] : o.terms_) r.add(w1.merged(w2), c1 * c2);
    return r;
}

std::string WordVector::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        std::string coeff = to_string(c);
        if (!first && coeff[0] != '-') out += "+";
        out += coeff + "*" + w.str();
        first = false;
    }
    return out;
}

namespace {

WordVector assign_set(const std::vector<int>& labels, int first_orbital, int width, bool anti) {
    const int k = static_cast<int>(labels.size());
    if (first_orbital < 0 || first_orbital + k > width)
        fail("E_SIZE_MISMATCH", "orbital range does not fit the label set");
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    WordVector out(width);
    // iterate all permutations of the label list, tracking parity
    std::vector<int> perm = idx;
    auto parity_of = [&](const std::vector<int>& p) {
        int par = 0;
        std::vector<bool> seen(p.size(), false);
        for (size_t s = 0; s < p.size(); ++s) {
            if (seen[s]) continue;
            int len = 0;
            for (size_t t = s; !seen[t]; t = p[t]) { seen[t] = true; ++len; }
            par ^= (len - 1) & 1;
        }
        return par;
    };
    std::sort(perm.begin(), perm.end());
    do {
        Word w(width);
        for (int pos = 0; pos < k; ++pos) w.set_slot(first_orbital + pos, labels[perm[pos]]);
        Rational c = 1;
        if (anti && parity_of(perm)) c = -1;
        out.add(w, c);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// group-algebra symmetrizer over a label subset: v <- sum_p (sign^a) p(v)
WordVector subset_symmetrizer(const std::vector<int>& labels, const WordVector& v, bool anti,
                              int max_label) {
    std::vector<int> perm = labels;
    std::sort(perm.begin(), perm.end());
    std::vector<int> sorted = perm;
    WordVector out(v.n());
    do {
        // label map sending sorted[i] -> perm[i]
        std::vector<int> image(max_label + 1);
        std::iota(image.begin(), image.end(), 0);
        for (size_t i = 0; i < sorted.size(); ++i) image[sorted[i]] = perm[i];
        int par = 0;
        if (anti) {
            std::vector<bool> seen(sorted.size(), false);
            std::vector<int> pos(max_label + 1, -1);
            for (size_t i = 0; i < sorted.size(); ++i) pos[perm[i]] = static_cast<int>(i);
            for (size_t s = 0; s < sorted.size(); ++s) {
                if (seen[s]) continue;
                int len = 0;
                for (int t = static_cast<int>(s); !seen[t]; t = pos[sorted[t]]) { seen[t] = true; ++len; }
                par ^= (len - 1) & 1;
            }
        }
        WordVector term = v.mapped(image);
        if (par) out -= term;
        else out += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

} // namespace

WordVector symmetrize_set(const std::vector<int>& labels, int first_orbital, int width) {
    return assign_set(labels, first_orbital, width, false);
}

WordVector antisymmetrize_set(const std::vector<int>& labels, int first_orbital, int width) {
    return assign_set(labels, first_orbital, width, true);
}

WordVector young_operator_apply(const Partition& f,
                                const std::vector<std::vector<int>>& filling_rows,
                                const WordVector& v) {
    if (static_cast<int>(filling_rows.size()) != f.rows())
        fail("E_SHAPE_MISMATCH", "filling row count does not match " + f.str());
    std::vector<bool> seen(v.n() + 1, false);
    for (int r = 0; r < f.rows(); ++r) {
        if (static_cast<int>(filling_rows[r].size()) != f.part(r))
            fail("E_SHAPE_MISMATCH", "filling row length does not match " + f.str());
        for (int label : filling_rows[r]) {
            if (label < 1 || label > v.n() || seen[label])
                fail("E_SHAPE_MISMATCH", "filling labels must be distinct and in range");
            seen[label] = true;
        }
    }
    // row symmetrizers first, then column antisymmetrizers
    WordVector cur = v;
    for (const auto& row : filling_rows)
        if (row.size() > 1) cur = subset_symmetrizer(row, cur, false, v.n());
    Partition conj = f.conjugate();
    for (int c = 0; c < conj.rows(); ++c) {
        std::vector<int> col;
        for (int r = 0; r < f.rows(); ++r)
            if (f.part(r) > c) col.push_back(filling_rows[r][c]);
        if (col.size() > 1) cur = subset_symmetrizer(col, cur, true, v.n());
    }
    return cur;
}

} // namespace sn
