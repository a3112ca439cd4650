#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <string_view>

#include "sncfp/error.hpp"

namespace sn {

// All table entries are exact. Integers and rationals are arbitrary
// precision; mpq keeps num/den coprime with positive denominator, which is
// exactly the canonical form the tables need.
using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Int numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline int sign_of(const Rational& q) { return q.sign(); }

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

/// Floor square root.
inline Int isqrt(const Int& a) { return boost::multiprecision::sqrt(a); }

inline bool is_perfect_square(const Int& a, Int* root = nullptr) {
    if (a < 0) return false;
    Int r = isqrt(a);
    if (root) *root = r;
    return r * r == a;
}

inline std::string to_string(const Int& v) { return v.str(); }

/// "3", "-3", "3/4" (denominator positive after canonicalization).
inline std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

/// Parses "a" or "a/b" with optional sign. Throws E_PARSE.
Rational parse_rational(std::string_view text);

inline Rational parse_rational(std::string_view text) {
    size_t slash = text.find('/');
    try {
        if (slash == std::string_view::npos) return Rational(Int(std::string(text)));
        Int num{std::string(text.substr(0, slash))};
        Int den{std::string(text.substr(slash + 1))};
        if (den == 0) fail("E_PARSE", "zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        fail("E_PARSE", "bad rational '" + std::string(text) + "'");
    }
}

} // namespace sn
