#include "sncfp/linalg.hpp"

#include <algorithm>

#include "sncfp/error.hpp"

namespace sn {

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (cols_ != o.rows()) fail("E_SIZE_MISMATCH", "matrix product shape");
    RationalMatrix r(rows_, o.cols());
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Rational& v = at(i, k);
            if (v == 0) continue;
            for (size_t j = 0; j < o.cols(); ++j)
                if (o.at(k, j) != 0) r.at(i, j) += v * o.at(k, j);
        }
    return r;
}

void integer_clear(RationalVector& v) {
    Int l = 1;
    for (const auto& x : v)
        if (x != 0) l = lcm(l, denominator(x));
    Int g = 0;
    for (auto& x : v) {
        x *= Rational(l);
        g = gcd(g, numerator(x));
    }
    if (g == 0) return;
    int lead = 0;
    for (const auto& x : v) {
        if (x != 0) { lead = sign_of(x); break; }
    }
    if (lead < 0) g = -g;
    for (auto& x : v) x /= Rational(g);
}

namespace {

struct Echelon {
    // reduced rows over the rationals, fraction-free inner loop
    std::vector<RationalVector> rows;
    std::vector<size_t> pivot_col; // per reduced row
};

// Deterministic forward elimination: columns scanned left to right, pivot is
// the first unused row with a nonzero entry.
Echelon echelonize(std::vector<RationalVector> rows, size_t cols) {
    Echelon e;
    std::vector<bool> used(rows.size(), false);
    for (auto& r : rows) integer_clear(r);
    for (size_t col = 0; col < cols; ++col) {
        size_t pivot = rows.size();
        for (size_t i = 0; i < rows.size(); ++i) {
            if (!used[i] && rows[i].size() > col && rows[i][col] != 0) { pivot = i; break; }
        }
        if (pivot == rows.size()) continue;
        used[pivot] = true;
        const RationalVector& p = rows[pivot];
        for (size_t i = 0; i < rows.size(); ++i) {
            if (used[i] || rows[i][col] == 0) continue;
            // r <- r*p[col] - p*r[col], then renormalize
            Rational f = rows[i][col];
            for (size_t j = 0; j < cols; ++j) rows[i][j] = rows[i][j] * p[col] - p[j] * f;
            integer_clear(rows[i]);
        }
        e.rows.push_back(p);
        e.pivot_col.push_back(col);
    }
    return e;
}

} // namespace

std::vector<RationalVector> kernel(const RationalMatrix& m) {
    const size_t n = m.cols();
    std::vector<RationalVector> rows(m.rows(), RationalVector(n));
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < n; ++j) rows[i][j] = m.at(i, j);
    Echelon e = echelonize(std::move(rows), n);

    // back substitution into reduced form
    for (size_t i = e.rows.size(); i-- > 0;) {
        for (size_t k = i + 1; k < e.rows.size(); ++k) {
            Rational f = e.rows[i][e.pivot_col[k]];
            if (f == 0) continue;
            Rational p = e.rows[k][e.pivot_col[k]];
            for (size_t j = 0; j < n; ++j) e.rows[i][j] = e.rows[i][j] * p - e.rows[k][j] * f;
            integer_clear(e.rows[i]);
        }
    }

    std::vector<bool> is_pivot(n, false);
    for (size_t c : e.pivot_col) is_pivot[c] = true;

    std::vector<RationalVector> basis;
    for (size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        RationalVector v(n, Rational(0));
        v[free_col] = 1;
        for (size_t r = 0; r < e.rows.size(); ++r) {
            if (e.rows[r][free_col] == 0) continue;
            v[e.pivot_col[r]] = -e.rows[r][free_col] / e.rows[r][e.pivot_col[r]];
        }
        integer_clear(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

size_t rank(const RationalMatrix& m) {
    std::vector<RationalVector> rows(m.rows(), RationalVector(m.cols()));
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j);
    return echelonize(std::move(rows), m.cols()).rows.size();
}

std::vector<std::pair<RationalVector, Rational>>
gram_schmidt(const std::vector<RationalVector>& vectors, const RationalMatrix& gram) {
    std::vector<std::pair<RationalVector, Rational>> out;
    const size_t dim = gram.rows();
    auto gdot = [&](const RationalVector& a, const RationalVector& b) {
        Rational s = 0;
        for (size_t i = 0; i < dim; ++i) {
            if (a[i] == 0) continue;
            for (size_t j = 0; j < dim; ++j)
                if (b[j] != 0 && gram.at(i, j) != 0) s += a[i] * gram.at(i, j) * b[j];
        }
        return s;
    };
    for (const auto& v : vectors) {
        RationalVector u = v;
        for (const auto& [w, nw] : out) {
            Rational proj = gdot(u, w);
            if (proj == 0) continue;
            Rational f = proj / nw;
            for (size_t i = 0; i < dim; ++i) u[i] -= f * w[i];
        }
        integer_clear(u);
        Rational nu = gdot(u, u);
        if (nu == 0) fail("E_DEPENDENT", "vector depends on its predecessors");
        out.emplace_back(std::move(u), std::move(nu));
    }
    return out;
}

std::vector<std::pair<RationalVector, Rational>>
gram_schmidt_diag(const std::vector<RationalVector>& vectors, const RationalVector& gram_diag) {
    std::vector<std::pair<RationalVector, Rational>> out;
    const size_t dim = gram_diag.size();
    auto gdot = [&](const RationalVector& a, const RationalVector& b) {
        Rational s = 0;
        for (size_t i = 0; i < dim; ++i)
            if (a[i] != 0 && b[i] != 0) s += a[i] * gram_diag[i] * b[i];
        return s;
    };
    for (const auto& v : vectors) {
        RationalVector u = v;
        for (const auto& [w, nw] : out) {
            Rational proj = gdot(u, w);
            if (proj == 0) continue;
            Rational f = proj / nw;
            for (size_t i = 0; i < dim; ++i)
                if (w[i] != 0) u[i] -= f * w[i];
        }
        integer_clear(u);
        Rational nu = gdot(u, u);
        if (nu == 0) fail("E_DEPENDENT", "vector depends on its predecessors");
        out.emplace_back(std::move(u), std::move(nu));
    }
    return out;
}

std::vector<RationalVector> row_space_basis(std::vector<RationalVector> rows) {
    if (rows.empty()) return {};
    size_t cols = rows[0].size();
    Echelon e = echelonize(std::move(rows), cols);
    return e.rows;
}

RationalVector coordinates_in_span(const std::vector<RationalVector>& basis,
                                   const RationalVector& target) {
    if (basis.empty()) return {};
    const size_t dim = target.size();
    const size_t k = basis.size();
    // solve basis^T x = target by eliminating the (dim x (k+1)) system
    RationalMatrix aug(dim, k + 1);
    for (size_t j = 0; j < k; ++j)
        for (size_t i = 0; i < dim; ++i) aug.at(i, j) = basis[j][i];
    for (size_t i = 0; i < dim; ++i) aug.at(i, k) = target[i];
    auto null_basis = kernel(aug);
    // a kernel vector with nonzero last coordinate encodes a solution
    for (const auto& v : null_basis) {
        if (v[k] == 0) continue;
        RationalVector x(k);
        for (size_t j = 0; j < k; ++j) x[j] = -v[j] / v[k];
        return x;
    }
    return {};
}

std::vector<RationalVector> intersect_spans(const std::vector<RationalVector>& a,
                                            const std::vector<RationalVector>& b) {
    if (a.empty() || b.empty()) return {};
    const size_t dim = a[0].size();
    // kernel of [A^T | -B^T] gives coefficient pairs with A x = B y
    RationalMatrix m(dim, a.size() + b.size());
    for (size_t j = 0; j < a.size(); ++j)
        for (size_t i = 0; i < dim; ++i) m.at(i, j) = a[j][i];
    for (size_t j = 0; j < b.size(); ++j)
        for (size_t i = 0; i < dim; ++i) m.at(i, a.size() + j) = -b[j][i];
    std::vector<RationalVector> out;
    for (const auto& v : kernel(m)) {
        RationalVector w(dim, Rational(0));
        for (size_t j = 0; j < a.size(); ++j)
            if (v[j] != 0)
                for (size_t i = 0; i < dim; ++i) w[i] += v[j] * a[j][i];
        integer_clear(w);
        bool zero = std::all_of(w.begin(), w.end(), [](const Rational& x) { return x == 0; });
        if (!zero) out.push_back(std::move(w));
    }
    return out;
}

} // namespace sn
