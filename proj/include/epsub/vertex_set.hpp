#pragma once

#include <cstdint>
#include <vector>

#include "epsub/errors.hpp"

namespace epsub {

using VertexId = int;

// Bitset over a fixed vertex universe 0..n-1. Iteration yields vertices in
// ascending canonical order, which every tie-break in the toolkit relies on.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

    VertexSet(int universe, const std::vector<VertexId>& vertices) : VertexSet(universe) {
        for (VertexId v : vertices) insert(v);
    }

    int universe() const { return universe_; }

    bool contains(VertexId v) const {
        if (v < 0 || v >= universe_) return false;
        return (words_[v >> 6] >> (v & 63)) & 1u;
    }

    void insert(VertexId v) {
        check(v);
        words_[v >> 6] |= uint64_t(1) << (v & 63);
    }

    void erase(VertexId v) {
        check(v);
        words_[v >> 6] &= ~(uint64_t(1) << (v & 63));
    }

    int size() const {
        int c = 0;
        for (uint64_t w : words_) c += __builtin_popcountll(w);
        return c;
    }

    bool empty() const {
        for (uint64_t w : words_)
            if (w) return false;
        return true;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    VertexSet& operator-=(const VertexSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool operator==(const VertexSet& o) const {
        return universe_ == o.universe_ && words_ == o.words_;
    }

    bool is_subset_of(const VertexSet& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    VertexSet complement() const {
        VertexSet r(universe_);
        for (int v = 0; v < universe_; ++v)
            if (!contains(v)) r.insert(v);
        return r;
    }

    std::vector<VertexId> to_vector() const {
        std::vector<VertexId> out;
        out.reserve(size());
        for (size_t i = 0; i < words_.size(); ++i) {
            uint64_t w = words_[i];
            while (w) {
                int b = __builtin_ctzll(w);
                out.push_back(static_cast<VertexId>(i * 64 + b));
                w &= w - 1;
            }
        }
        return out;
    }

    // Usable as a memo key when the universe fits one word.
    uint64_t word0() const { return words_.empty() ? 0 : words_[0]; }

    const std::vector<uint64_t>& words() const { return words_; }

private:
    void check(VertexId v) const {
        if (v < 0 || v >= universe_)
            throw MalformedInputError("vertex " + std::to_string(v) + " outside universe of size " +
                                      std::to_string(universe_));
    }

    int universe_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace epsub
