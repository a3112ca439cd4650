#include "sncfp/radical.hpp"

#include <cmath>

namespace sn {

namespace {

void squarefree_split_u64(unsigned long long m, Int& root, Int& free_part) {
    unsigned long long root64 = 1;
    for (unsigned long long p = 2; p * p <= m; p == 2 ? p = 3 : p += 2) {
        if (m % p != 0) continue;
        unsigned e = 0;
        while (m % p == 0) { m /= p; ++e; }
        for (unsigned i = 0; i + 1 < e; i += 2) {
            if (root64 > (1ULL << 31)) { root *= Int(root64); root64 = 1; }
            root64 *= p;
        }
        if (e % 2) free_part *= Int(p);
    }
    if (m > 1) free_part *= Int(m);
    root *= Int(root64);
}

} // namespace

void squarefree_split(const Int& n, Int& square_root_part, Int& squarefree_part) {
    if (n == 0) {
        square_root_part = 0;
        squarefree_part = 1;
        return;
    }
    Int m = n < 0 ? Int(-n) : n;
    Int root = 1, free = 1;
    if (m < Int(1) << 62) {
        squarefree_split_u64(m.convert_to<unsigned long long>(), root, free);
        square_root_part = root;
        squarefree_part = free;
        return;
    }
    // factor out small primes completely
    static const unsigned kBound = 1000000;
    for (unsigned p = 2; Int(p) * p <= m && p <= kBound; p == 2 ? p = 3 : p += 2) {
        if (m % p != 0) continue;
        unsigned e = 0;
        while (m % p == 0) { m /= p; ++e; }
        for (unsigned i = 0; i + 1 < e; i += 2) root *= p;
        if (e % 2) free *= p;
    }
    // remaining cofactor has no prime factor <= min(sqrt(m), bound); below
    // bound^3 it is 1, p, p*q or p^2, so a perfect-square test finishes it
    if (m > 1) {
        Int r;
        if (is_perfect_square(m, &r)) root *= r;
        else free *= m;
    }
    square_root_part = root;
    squarefree_part = free;
}

Radical Radical::canonicalize(const Rational& coeff, const Rational& radicand) {
    if (coeff == 0) return Radical();
    if (radicand == 0) return Radical();
    if (radicand < 0) fail("E_NEG_RADICAND", "sqrt of negative value " + to_string(radicand));
    // c*sqrt(p/q) = (c/q)*sqrt(p*q)
    Int p = numerator(radicand), q = denominator(radicand);
    Rational c = coeff / Rational(q);
    Int pq = p * q;
    Int root, free;
    squarefree_split(pq, root, free);
    return Radical(c * Rational(root), free);
}

Radical Radical::operator+(const Radical& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (radicand_ != o.radicand_)
        fail("E_RADICAND_MISMATCH",
             "cannot add sqrt(" + radicand_.str() + ") and sqrt(" + o.radicand_.str() + ")");
    Rational c = coeff_ + o.coeff_;
    if (c == 0) return Radical();
    return Radical(c, radicand_);
}

double Radical::approx() const {
    return coeff_.convert_to<double>() * std::sqrt(radicand_.convert_to<double>());
}

std::string Radical::str() const {
    if (is_rational()) return to_string(coeff_);
    return to_string(coeff_) + "*sqrt(" + radicand_.str() + ")";
}

std::string RadicalSum::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [s, c] : terms_) {
        std::string piece = Radical(c, s).str();
        if (!first && piece[0] != '-') out += "+";
        out += piece;
        first = false;
    }
    return out;
}

} // namespace sn
