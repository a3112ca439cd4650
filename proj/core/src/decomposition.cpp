#include "sncfp/decomposition.hpp"

#include <algorithm>
#include <map>

namespace sn {

DecompositionMultiset::DecompositionMultiset(std::vector<std::pair<Partition, int>> entries)
    : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(),
              [](const auto& a, const auto& b) { return b.first < a.first; });
    for (size_t i = 1; i < entries_.size(); ++i)
        if (entries_[i].first == entries_[i - 1].first)
            fail("E_PARSE", "duplicate partition in decomposition");
}

int DecompositionMultiset::multiplicity(const Partition& f) const {
    for (const auto& [p, m] : entries_)
        if (p == f) return m;
    return 0;
}

long long DecompositionMultiset::total_dimension() const {
    long long s = 0;
    for (const auto& [p, m] : entries_) s += m * p.dimension();
    return s;
}

std::string DecompositionMultiset::str() const {
    if (entries_.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += " + ";
        if (entries_[i].second != 1) out += std::to_string(entries_[i].second);
        out += entries_[i].first.str();
    }
    return out;
}

namespace {

// adds every horizontal (or vertical) k-strip to f
void add_strips(const Partition& f, int k, bool vertical, std::vector<Partition>& out) {
    // choose how many boxes go to each row (horizontal: at most one per
    // column; vertical: at most one per row)
    std::vector<int> parts = f.parts();
    int max_rows = f.rows() + (vertical ? k : 1);
    parts.resize(max_rows, 0);
    std::vector<int> add(max_rows, 0);
    auto emit = [&] {
        std::vector<int> result;
        for (int i = 0; i < max_rows; ++i) {
            int v = parts[i] + add[i];
            if (v == 0) break;
            result.push_back(v);
        }
        out.emplace_back(result);
    };
    auto rec = [&](auto&& self, int row, int remaining) -> void {
        if (remaining == 0) {
            for (int i = row; i < max_rows; ++i) add[i] = 0;
            bool valid = true;
            for (int i = 1; i < max_rows; ++i)
                if (parts[i] + add[i] > parts[i - 1] + add[i - 1]) { valid = false; break; }
            if (valid) emit();
            return;
        }
        if (row >= max_rows) return;
        int prev_total = row == 0 ? (f.n() + k) : parts[row - 1] + add[row - 1];
        int hi, lo = 0;
        if (vertical) {
            hi = std::min(remaining, 1); // at most one box per row
        } else {
            hi = remaining;
        }
        for (int a = lo; a <= hi; ++a) {
            if (parts[row] + a > prev_total) break;
            if (!vertical && a > 0) {
                // horizontal strip: no two boxes in one column means the
                // new boxes must land strictly right of the row below's end
                // in the previous shape; equivalently new_row <= old_prev_row
                if (row > 0 && parts[row] + a > parts[row - 1]) break;
            }
            if (vertical && a > 0) {
                // vertical strip: boxes in distinct rows, columns strict;
                // adding at row r requires resulting part <= previous part
                if (row > 0 && parts[row] + a > parts[row - 1] + add[row - 1]) break;
            }
            add[row] = a;
            self(self, row + 1, remaining - a);
        }
        add[row] = 0;
    };
    rec(rec, 0, k);
}

// counts LR skew tableaux of shape nu/f1 with content f2
long long lr_count(const Partition& nu, const Partition& f1, const Partition& f2) {
    const int rows = nu.rows();
    // skew cells row-major; within a row visit right to left so the lattice
    // condition on the reverse reading word is checkable incrementally
    struct Cell { int r, c; };
    std::vector<Cell> cells;
    for (int r = 0; r < rows; ++r) {
        if (nu.part(r) < f1.part(r)) return 0;
        for (int c = nu.part(r) - 1; c >= f1.part(r); --c) cells.push_back({r, c});
    }
    if (cells.size() != static_cast<size_t>(f2.n())) return 0;
    const int vmax = f2.rows();
    std::vector<std::vector<int>> grid(rows);
    for (int r = 0; r < rows; ++r) grid[r].assign(nu.part(r), 0);
    std::vector<int> used(vmax + 1, 0);
    long long count = 0;
    auto rec = [&](auto&& self, size_t idx) -> void {
        if (idx == cells.size()) { ++count; return; }
        auto [r, c] = cells[idx];
        for (int v = 1; v <= vmax; ++v) {
            if (used[v] >= f2.part(v - 1)) continue;
            // lattice: after placing, count(v) <= count(v-1)
            if (v > 1 && used[v] + 1 > used[v - 1]) continue;
            // row weakly increasing left to right: cell to the right filled first
            if (c + 1 < nu.part(r) && grid[r][c + 1] != 0 && v > grid[r][c + 1]) continue;
            // column strictly increasing downward: cell above
            if (r > 0 && c < nu.part(r - 1)) {
                int above = grid[r - 1][c]; // 0 when the cell above is in f1
                if (above == 0 && c >= f1.part(r - 1)) continue; // above is a later skew cell: impossible in visit order
                if (above != 0 && v <= above) continue;
            }
            grid[r][c] = v;
            ++used[v];
            self(self, idx + 1);
            --used[v];
            grid[r][c] = 0;
        }
    };
    rec(rec, 0);
    return count;
}

} // namespace

DecompositionMultiset pieri_decompose(const Partition& f1, const Partition& strip) {
    bool row_strip = strip.rows() == 1;
    bool col_strip = strip.part(0) == 1 && strip.rows() >= 1;
    if (!row_strip && !col_strip)
        fail("E_STRIP_SHAPE", "strip must be one row or one column, got " + strip.str());
    int k = strip.n();
    std::vector<Partition> shapes;
    add_strips(f1, k, !row_strip, shapes);
    std::sort(shapes.begin(), shapes.end());
    shapes.erase(std::unique(shapes.begin(), shapes.end()), shapes.end());
    std::vector<std::pair<Partition, int>> entries;
    for (auto& s : shapes) entries.emplace_back(std::move(s), 1);
    return DecompositionMultiset(std::move(entries));
}

DecompositionMultiset outer_decompose(const Partition& f1, const Partition& f2) {
    // single-row/column factors through a strip; the general case counts
    // LR tableaux directly
    std::vector<std::pair<Partition, int>> entries;
    for (const auto& nu : partitions_of(f1.n() + f2.n())) {
        bool contains = true;
        for (int i = 0; i < f1.rows(); ++i)
            if (nu.part(i) < f1.part(i)) { contains = false; break; }
        if (!contains) continue;
        long long m = lr_count(nu, f1, f2);
        if (m > 0) entries.emplace_back(nu, static_cast<int>(m));
    }
    return DecompositionMultiset(std::move(entries));
}

} // namespace sn
