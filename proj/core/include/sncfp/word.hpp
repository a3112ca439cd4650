#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sncfp/error.hpp"

namespace sn {

/// Assignment of distinct particle labels to orbital slots, packed four
/// bits per slot. slot(k) = label occupying orbital k (1-based labels),
/// 0 = empty slot. A full word is a bijection of {1..n} onto the slots.
class Word {
public:
    static constexpr int kMaxSlots = 10;

    Word() = default;
    explicit Word(int n) : n_(static_cast<uint8_t>(n)) {
        if (n < 0 || n > kMaxSlots) fail("E_SIZE", "word width out of range");
    }
    explicit Word(const std::vector<int>& slots) : Word(static_cast<int>(slots.size())) {
        for (size_t k = 0; k < slots.size(); ++k) set_slot(static_cast<int>(k), slots[k]);
    }

    int n() const { return n_; }
    int slot(int k) const { return static_cast<int>((bits_ >> (4 * k)) & 0xFull); }
    void set_slot(int k, int label) {
        if (label < 0 || label > 15) fail("E_LABEL_RANGE", "label out of packing range");
        bits_ = (bits_ & ~(0xFull << (4 * k))) | (static_cast<uint64_t>(label) << (4 * k));
    }

    bool full() const {
        for (int k = 0; k < n_; ++k)
            if (slot(k) == 0) return false;
        return true;
    }

    /// Position of a label, or -1 when absent.
    int find(int label) const {
        for (int k = 0; k < n_; ++k)
            if (slot(k) == label) return k;
        return -1;
    }

    /// Applies a label map: every nonzero slot value v becomes image[v].
    /// image is 1-based and indexed up to the largest label in use.
    Word mapped(const std::vector<int>& image) const {
        Word w(n_);
        for (int k = 0; k < n_; ++k) {
            int v = slot(k);
            w.set_slot(k, v == 0 ? 0 : image[v]);
        }
        return w;
    }

    Word transposed(int i, int j) const {
        Word w(n_);
        for (int k = 0; k < n_; ++k) {
            int v = slot(k);
            if (v == i) v = j;
            else if (v == j) v = i;
            w.set_slot(k, v);
        }
        return w;
    }

    /// Disjoint union: both labels and occupied slots must not overlap.
    Word merged(const Word& o) const {
        Word w(n_);
        for (int k = 0; k < n_; ++k) {
            int a = slot(k), b = o.slot(k);
            if (a != 0 && b != 0) fail("E_SIZE_MISMATCH", "overlapping slots in word merge");
            w.set_slot(k, a + b);
        }
        return w;
    }

    bool operator==(const Word& o) const = default;
    auto operator<=>(const Word& o) const = default;

    /// "(3,1,2)" with "_" for empty slots.
    std::string str() const {
        std::string s = "(";
        for (int k = 0; k < n_; ++k) {
            if (k) s += ",";
            int v = slot(k);
            s += v == 0 ? std::string("_") : std::to_string(v);
        }
        return s + ")";
    }

private:
    uint64_t bits_ = 0;
    uint8_t n_ = 0;
};

} // namespace sn
