#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "sncfp/error.hpp"

namespace sn {

/// Young diagram [f] = (f1 >= f2 >= ...), the irrep label of S_n.
/// Text syntax: "[3,2,1]", exponents allowed: "[2^3]", "[2,1^2]".
class Partition {
public:
    Partition() = default; // empty partition of 0
    explicit Partition(std::vector<int> parts);

    static Partition parse(std::string_view text);

    int n() const { return n_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return i < rows() ? parts_[i] : 0; } // 0-based, 0 beyond
    const std::vector<int>& parts() const { return parts_; }

    Partition conjugate() const;
    /// Number of standard Young tableaux (hook length formula).
    long long dimension() const;
    /// Class-sum eigenvalue: sum C(f_i,2) - sum C(conj_j,2).
    long long lambda() const;

    bool operator==(const Partition& o) const = default;
    /// Lexicographic on the part vector; canonical display order is
    /// descending under this ([n] first, [1^n] last).
    auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

    /// Exponent-compressed text, e.g. "[2^2,1]".
    std::string str() const;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// Canonical ordering for listings: [n], ..., [1^n].
struct PartitionDescLex {
    bool operator()(const Partition& a, const Partition& b) const { return b < a; }
};

/// All partitions of n in canonical (descending lex) order.
std::vector<Partition> partitions_of(int n);

} // namespace sn
