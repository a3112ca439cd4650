#pragma once

#include <map>
#include <string>
#include <vector>

#include "sncfp/rational.hpp"

namespace sn {

/// Exact number of the form coeff * sqrt(radicand) with the radicand a
/// positive squarefree integer. This is the closed form of every table
/// entry. Radicals with unequal radicands do not add; use RadicalSum.
class Radical {
public:
    Radical() : coeff_(0), radicand_(1) {}
    Radical(Rational coeff, Int radicand_squarefree)
        : coeff_(std::move(coeff)), radicand_(std::move(radicand_squarefree)) {
        if (coeff_ == 0) radicand_ = 1;
    }
    /// Canonicalizes coeff * sqrt(radicand) for any positive rational
    /// radicand: c*sqrt(p/q) = (c/q)*sqrt(pq), square factors pulled out.
    /// Throws E_NEG_RADICAND if radicand < 0 with coeff != 0.
    static Radical canonicalize(const Rational& coeff, const Rational& radicand);

    static Radical of_rational(const Rational& q) { return Radical(q, 1); }
    /// sqrt of a nonnegative rational, canonicalized.
    static Radical sqrt_of(const Rational& q) { return canonicalize(1, q); }

    const Rational& coeff() const { return coeff_; }
    const Int& radicand() const { return radicand_; }

    bool is_zero() const { return coeff_ == 0; }
    bool is_rational() const { return radicand_ == 1; }
    /// The represented value squared (always rational).
    Rational squared() const { return coeff_ * coeff_ * Rational(radicand_); }

    Radical operator-() const { return Radical(-coeff_, radicand_); }
    Radical operator*(const Radical& o) const {
        if (is_zero() || o.is_zero()) return Radical();
        return canonicalize(coeff_ * o.coeff_, Rational(radicand_ * o.radicand_));
    }
    Radical operator*(const Rational& q) const { return Radical(coeff_ * q, q == 0 ? Int(1) : radicand_); }
    /// Addition requires equal radicands; anything else must go through
    /// RadicalSum. Throws E_RADICAND_MISMATCH.
    Radical operator+(const Radical& o) const;

    bool operator==(const Radical& o) const = default;
    auto operator<=>(const Radical& o) const = default;

    double approx() const;

    /// Canonical text form: "r" when radicand is 1, else "r*sqrt(s)", r in
    /// lowest terms, e.g. "-3/220*sqrt(110)".
    std::string str() const;

private:
    Rational coeff_;
    Int radicand_; // positive squarefree; 1 when coeff is 0
};

/// Extracts the largest square divisor: n = square * squarefree.
/// Exact for any |n| < B^3 with trial division bound B (far beyond the
/// sizes this engine produces).
void squarefree_split(const Int& n, Int& square_root_part, Int& squarefree_part);

/// Finite sum of radicals keyed by squarefree radicand. Closed under
/// addition and multiplication; cancels exactly to the empty sum.
class RadicalSum {
public:
    RadicalSum() = default;
    RadicalSum(const Radical& r) { add(r); }
    RadicalSum(const Rational& q) { add(Radical::of_rational(q)); }

    void add(const Radical& r) {
        if (r.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(r.radicand(), r.coeff());
        if (!fresh) {
            it->second += r.coeff();
            if (it->second == 0) terms_.erase(it);
        }
    }

    RadicalSum& operator+=(const RadicalSum& o) {
        for (const auto& [s, c] : o.terms_) add(Radical(c, s));
        return *this;
    }
    RadicalSum& operator-=(const RadicalSum& o) {
        for (const auto& [s, c] : o.terms_) add(Radical(-c, s));
        return *this;
    }
    RadicalSum operator+(const RadicalSum& o) const { RadicalSum r = *this; r += o; return r; }
    RadicalSum operator-(const RadicalSum& o) const { RadicalSum r = *this; r -= o; return r; }
    RadicalSum operator*(const RadicalSum& o) const {
        RadicalSum r;
        for (const auto& [s1, c1] : terms_)
            for (const auto& [s2, c2] : o.terms_) r.add(Radical(c1, s1) * Radical(c2, s2));
        return r;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
    }
    Rational rational_value() const {
        if (terms_.empty()) return 0;
        if (!is_rational()) fail("E_RADICAND_MISMATCH", "sum is irrational: " + str());
        return terms_.begin()->second;
    }
    size_t term_count() const { return terms_.size(); }
    const std::map<Int, Rational>& terms() const { return terms_; }

    bool operator==(const RadicalSum& o) const { return terms_ == o.terms_; }

    std::string str() const;

private:
    std::map<Int, Rational> terms_; // squarefree radicand -> coefficient, no zeros
};

} // namespace sn
