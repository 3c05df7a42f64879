#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace holowedge {

/*
 * Packed GF(2) vector. All row operations used by the Pauli linear
 * algebra are word-parallel XORs over the packed representation.
 */
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    size_t size() const { return n_; }

    bool get(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(size_t i, bool v) {
        uint64_t m = uint64_t(1) << (i & 63);
        if (v) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
    }
    void flip(size_t i) { w_[i >> 6] ^= uint64_t(1) << (i & 63); }

    void xor_with(const BitVec& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    }
    void and_with(const BitVec& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    }
    void or_with(const BitVec& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    }
    void clear() { for (auto& w : w_) w = 0; }

    bool none() const {
        for (auto w : w_) if (w) return false;
        return true;
    }
    bool any() const { return !none(); }

    size_t count() const {
        size_t c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    // Parity of the AND with another vector; the workhorse of the
    // symplectic inner product.
    bool parity_and(const BitVec& o) const {
        uint64_t acc = 0;
        for (size_t i = 0; i < w_.size(); ++i) acc ^= w_[i] & o.w_[i];
        return std::popcount(acc) & 1;
    }

    size_t count_and(const BitVec& o) const {
        size_t c = 0;
        for (size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
        return c;
    }

    bool intersects(const BitVec& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    // True when this is a subset of o.
    bool subset_of(const BitVec& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    // Index of the lowest set bit, or size() when empty.
    size_t lowest() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return (i << 6) + std::countr_zero(w_[i]);
        return n_;
    }

    BitVec complemented() const {
        BitVec r(*this);
        for (auto& w : r.w_) w = ~w;
        r.trim();
        return r;
    }

    friend bool operator==(const BitVec& a, const BitVec& b) {
        return a.n_ == b.n_ && a.w_ == b.w_;
    }

private:
    void trim() {
        if (n_ & 63) w_.back() &= (uint64_t(1) << (n_ & 63)) - 1;
    }

    size_t n_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace holowedge
