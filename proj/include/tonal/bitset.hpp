#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace tonal {

// Dynamic fixed-width bitset over 64-bit words. Host vertices are bit
// positions; the red/blue adjacency matrices are stored as one Bitset64
// row per vertex.
class Bitset64 {
public:
    Bitset64() = default;
    explicit Bitset64(int bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    int size() const { return bits_; }

    void set(int i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    void set_all() {
        for (auto& w : words_) w = ~uint64_t{0};
        trim();
    }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (uint64_t w : words_)
            if (w) return true;
        return false;
    }

    bool none() const { return !any(); }

    // First set bit, or -1 when empty.
    int first_set() const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k]) return int(k * 64) + std::countr_zero(words_[k]);
        return -1;
    }

    Bitset64& operator&=(const Bitset64& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }

    Bitset64& operator|=(const Bitset64& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }

    // *this = a & b / a ^ b, without reallocating.
    void assign_and(const Bitset64& a, const Bitset64& b) {
        resize_like(a);
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] = a.words_[k] & b.words_[k];
    }

    void assign_xor(const Bitset64& a, const Bitset64& b) {
        resize_like(a);
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] = a.words_[k] ^ b.words_[k];
    }

    int count_and(const Bitset64& o) const {
        int c = 0;
        for (std::size_t k = 0; k < words_.size(); ++k)
            c += std::popcount(words_[k] & o.words_[k]);
        return c;
    }

    // Visits set bits in ascending order.
    template <typename F>
    void for_each_set(F&& f) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            uint64_t w = words_[k];
            while (w) {
                int b = std::countr_zero(w);
                f(int(k * 64) + b);
                w &= w - 1;
            }
        }
    }

    friend bool operator==(const Bitset64&, const Bitset64&) = default;

private:
    void trim() {
        if (bits_ % 64 != 0 && !words_.empty())
            words_.back() &= (uint64_t{1} << (bits_ % 64)) - 1;
    }

    void resize_like(const Bitset64& a) {
        if (words_.size() != a.words_.size()) {
            bits_ = a.bits_;
            words_.resize(a.words_.size());
        }
    }

    int bits_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace tonal
