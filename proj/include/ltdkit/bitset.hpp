#pragma once

#include <cstdint>
#include <vector>

namespace ltdkit {

// Fixed-capacity bitset sized at construction. Adjacency rows and solver
// state use this; everything at desk scale fits in a few words.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int capacity() const { return n_; }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
    void clear() { for (auto& w : w_) w = 0; }

    bool any() const {
        for (uint64_t w : w_) if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += __builtin_popcountll(w);
        return c;
    }

    bool intersects(const Bitset& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool is_subset_of(const Bitset& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    Bitset& operator|=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator^=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }
    // this & ~o
    Bitset and_not(const Bitset& o) const {
        Bitset r(n_);
        for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & ~o.w_[i];
        return r;
    }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator^(Bitset a, const Bitset& b) { return a ^= b; }

    bool operator==(const Bitset& o) const { return w_ == o.w_; }
    bool operator!=(const Bitset& o) const { return w_ != o.w_; }
    bool operator<(const Bitset& o) const { return w_ < o.w_; }

    int find_first() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i) * 64 + __builtin_ctzll(w_[i]);
        return -1;
    }

    template <class F>
    void for_each(F f) const {
        for (size_t i = 0; i < w_.size(); ++i) {
            uint64_t w = w_[i];
            while (w) {
                f(int(i) * 64 + __builtin_ctzll(w));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    static Bitset of(int n, const std::vector<int>& members) {
        Bitset b(n);
        for (int v : members) b.set(v);
        return b;
    }

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace ltdkit
