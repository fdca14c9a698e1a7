#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace limpack {

// Fixed-universe dynamic bitset. Adjacency rows and vertex sets are stored in
// this form so that neighborhood-intersection counts are word-parallel popcounts.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int universe) : n_(universe), w_((universe + 63) / 64, 0) {
        if (universe < 0) throw std::invalid_argument("Bitset: negative universe");
    }

    int universe() const { return n_; }
    int words() const { return static_cast<int>(w_.size()); }
    std::uint64_t word(int i) const { return w_[i]; }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    void clear() { for (auto& w : w_) w = 0; }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (auto w : w_) if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    int count_and(const Bitset& o) const {
        int c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
        return c;
    }
    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i) if (w_[i] & o.w_[i]) return true;
        return false;
    }
    bool is_subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i) if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }

    // First set bit, or -1 when empty.
    int find_first() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return static_cast<int>(i) * 64 + std::countr_zero(w_[i]);
        return -1;
    }
    // First set bit strictly after i, or -1.
    int find_next(int i) const {
        ++i;
        if (i >= n_) return -1;
        std::size_t wi = i >> 6;
        std::uint64_t w = w_[wi] & (~std::uint64_t(0) << (i & 63));
        if (w) return static_cast<int>(wi) * 64 + std::countr_zero(w);
        for (++wi; wi < w_.size(); ++wi)
            if (w_[wi]) return static_cast<int>(wi) * 64 + std::countr_zero(w_[wi]);
        return -1;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int v = find_first(); v != -1; v = find_next(v)) out.push_back(v);
        return out;
    }

    friend bool operator==(const Bitset& a, const Bitset& b) {
        return a.n_ == b.n_ && a.w_ == b.w_;
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace limpack
