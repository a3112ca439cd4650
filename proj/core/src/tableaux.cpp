#include "sncfp/tableaux.hpp"

#include <algorithm>

namespace sn {

YamanouchiSymbol::YamanouchiSymbol(std::vector<int> row_of) : row_of_(std::move(row_of)) {
    std::vector<int> count;
    for (int r : row_of_) {
        if (r < 1) fail("E_PARSE", "row indices are 1-based");
        if (static_cast<size_t>(r) > count.size()) count.resize(r, 0);
        ++count[r - 1];
        // every prefix must have weakly decreasing row counts
        for (size_t i = 1; i < count.size(); ++i)
            if (count[i] > count[i - 1]) fail("E_PARSE", "invalid Yamanouchi prefix");
    }
}

Partition YamanouchiSymbol::shape() const {
    std::vector<int> count;
    for (int r : row_of_) {
        if (static_cast<size_t>(r) > count.size()) count.resize(r, 0);
        ++count[r - 1];
    }
    return Partition(std::move(count));
}

std::string YamanouchiSymbol::str() const {
    std::string s;
    for (auto it = row_of_.rbegin(); it != row_of_.rend(); ++it) s += std::to_string(*it);
    return s;
}

std::vector<YamanouchiSymbol> enumerate_syt(const Partition& f) {
    std::vector<YamanouchiSymbol> out;
    std::vector<int> row_of(f.n());
    std::vector<int> count(std::max(f.rows(), 1), 0);
    auto rec = [&](auto&& self, int label) -> void {
        if (label > f.n()) {
            out.emplace_back(YamanouchiSymbol(row_of));
            return;
        }
        for (int r = 0; r < f.rows(); ++r) {
            if (count[r] >= f.part(r)) continue;
            if (r > 0 && count[r - 1] <= count[r]) continue;
            ++count[r];
            row_of[label - 1] = r + 1;
            self(self, label + 1);
            --count[r];
        }
    };
    rec(rec, 1);
    return out;
}

} // namespace sn
