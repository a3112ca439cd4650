#include "sncfp/partition.hpp"

#include <numeric>

#include "sncfp/rational.hpp"

namespace sn {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) fail("E_PARSE", "partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            fail("E_PARSE", "partition parts must be weakly decreasing");
        n_ += parts_[i];
    }
}

Partition Partition::parse(std::string_view text) {
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && text[i] == ' ') ++i; };
    skip_ws();
    if (i >= text.size() || text[i] != '[') fail("E_PARSE", "partition must start with '['");
    ++i;
    std::vector<int> parts;
    skip_ws();
    if (i < text.size() && text[i] == ']') { ++i; return Partition(); }
    while (true) {
        skip_ws();
        size_t start = i;
        while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) fail("E_PARSE", "expected digit in partition at offset " + std::to_string(i));
        int value = std::stoi(std::string(text.substr(start, i - start)));
        int repeat = 1;
        skip_ws();
        if (i < text.size() && text[i] == '^') {
            ++i;
            skip_ws();
            size_t rs = i;
            while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == rs) fail("E_PARSE", "expected exponent digit at offset " + std::to_string(i));
            repeat = std::stoi(std::string(text.substr(rs, i - rs)));
        }
        for (int k = 0; k < repeat; ++k) parts.push_back(value);
        skip_ws();
        if (i < text.size() && text[i] == ',') { ++i; continue; }
        if (i < text.size() && text[i] == ']') { ++i; break; }
        fail("E_PARSE", "expected ',' or ']' at offset " + std::to_string(i));
    }
    skip_ws();
    if (i != text.size()) fail("E_PARSE", "trailing characters after partition");
    return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
    std::vector<int> conj;
    for (int col = 0; col < part(0); ++col) {
        int height = 0;
        while (height < rows() && parts_[height] > col) ++height;
        conj.push_back(height);
    }
    return Partition(std::move(conj));
}

long long Partition::dimension() const {
    if (n_ == 0) return 1;
    Partition conj = conjugate();
    Int num = 1, den = 1;
    for (int k = 1; k <= n_; ++k) num *= k;
    for (int i = 0; i < rows(); ++i)
        for (int j = 0; j < parts_[i]; ++j) {
            int hook = (parts_[i] - j) + (conj.parts()[j] - i) - 1;
            den *= hook;
        }
    Int d = num / den;
    return d.convert_to<long long>();
}

long long Partition::lambda() const {
    auto choose2 = [](long long k) { return k * (k - 1) / 2; };
    long long v = 0;
    for (int p : parts_) v += choose2(p);
    for (int p : conjugate().parts()) v -= choose2(p);
    return v;
}

std::string Partition::str() const {
    std::string out = "[";
    for (size_t i = 0; i < parts_.size();) {
        size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
        if (i > 0) out += ",";
        out += std::to_string(parts_[i]);
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    out += "]";
    return out;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

} // namespace sn
