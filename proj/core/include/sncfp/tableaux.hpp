#pragma once

#include <string>
#include <vector>

#include "sncfp/partition.hpp"

namespace sn {

/// Yamanouchi symbol of a standard tableau: row_of[k] is the row (1-based)
/// holding label k+1. Rendered as the digit string r_n ... r_1.
class YamanouchiSymbol {
public:
    YamanouchiSymbol() = default;
    /// row_of ordered by label (label 1 first). Validates the prefix rule.
    explicit YamanouchiSymbol(std::vector<int> row_of);

    int n() const { return static_cast<int>(row_of_.size()); }
    int row_of(int label) const { return row_of_[label - 1]; } // labels 1..n
    const std::vector<int>& rows_by_label() const { return row_of_; }

    Partition shape() const;

    bool operator==(const YamanouchiSymbol& o) const = default;
    auto operator<=>(const YamanouchiSymbol& o) const { return row_of_ <=> o.row_of_; }

    /// Digit string r_n ... r_1, e.g. "2111".
    std::string str() const;

private:
    std::vector<int> row_of_;
};

/// All standard tableaux of shape f in the canonical component order:
/// ascending lexicographic on (r_1, ..., r_n). Length = dimension(f).
std::vector<YamanouchiSymbol> enumerate_syt(const Partition& f);

} // namespace sn
