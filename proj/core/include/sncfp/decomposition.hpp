#pragma once

#include <string>
#include <vector>

#include "sncfp/partition.hpp"

namespace sn {

/// Multiset of irreps with multiplicities, canonical descending-lex order.
class DecompositionMultiset {
public:
    DecompositionMultiset() = default;
    explicit DecompositionMultiset(std::vector<std::pair<Partition, int>> entries);

    const std::vector<std::pair<Partition, int>>& entries() const { return entries_; }
    int multiplicity(const Partition& f) const;
    bool contains(const Partition& f) const { return multiplicity(f) > 0; }

    /// Sum of multiplicity * dimension over all entries.
    long long total_dimension() const;

    bool operator==(const DecompositionMultiset& o) const = default;

    /// "[4,1] + [3,2] + 2[3,1^2]" style.
    std::string str() const;

private:
    std::vector<std::pair<Partition, int>> entries_;
};

/// Outer product with a one-row [k] (horizontal strip) or one-column [1^k]
/// (vertical strip) factor; multiplicity-free. Throws E_STRIP_SHAPE.
DecompositionMultiset pieri_decompose(const Partition& f1, const Partition& strip);

/// General outer product f1 x f2 under S_{n1+n2}: Littlewood-Richardson
/// multiplicities by enumeration of LR skew tableaux.
DecompositionMultiset outer_decompose(const Partition& f1, const Partition& f2);

} // namespace sn
