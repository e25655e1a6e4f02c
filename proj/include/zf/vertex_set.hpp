#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "zf/errors.hpp"

namespace zf {

using Word = std::uint64_t;

/// Subset of {0..n-1} stored as a packed bit vector. The universe size n is
/// part of the value: operations require both operands to share it.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe) : n_(universe), w_(word_count(universe), 0) {
        if (universe < 0) throw GraphError("negative universe size");
    }

    static VertexSet of(int universe, std::initializer_list<int> vs) {
        VertexSet s(universe);
        for (int v : vs) s.add(v);
        return s;
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int w = 0; w < static_cast<int>(s.w_.size()); ++w) s.w_[w] = ~Word{0};
        s.trim();
        return s;
    }

    static VertexSet from_word(int universe, Word bits) {
        VertexSet s(universe);
        if (!s.w_.empty()) s.w_[0] = bits;
        s.trim();
        return s;
    }

    int universe() const noexcept { return n_; }

    bool contains(int v) const {
        check(v);
        return (w_[v >> 6] >> (v & 63)) & 1u;
    }

    void add(int v) {
        check(v);
        w_[v >> 6] |= Word{1} << (v & 63);
    }

    void remove(int v) {
        check(v);
        w_[v >> 6] &= ~(Word{1} << (v & 63));
    }

    int count() const noexcept {
        int c = 0;
        for (Word w : w_) c += std::popcount(w);
        return c;
    }

    bool empty() const noexcept {
        for (Word w : w_)
            if (w) return false;
        return true;
    }

    bool is_subset_of(const VertexSet& o) const {
        match(o);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    bool is_proper_subset_of(const VertexSet& o) const {
        return is_subset_of(o) && *this != o;
    }

    VertexSet operator|(const VertexSet& o) const {
        match(o);
        VertexSet r(n_);
        for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] | o.w_[i];
        return r;
    }

    VertexSet operator&(const VertexSet& o) const {
        match(o);
        VertexSet r(n_);
        for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
        return r;
    }

    /// Set difference.
    VertexSet operator-(const VertexSet& o) const {
        match(o);
        VertexSet r(n_);
        for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & ~o.w_[i];
        return r;
    }

    VertexSet& operator|=(const VertexSet& o) {
        match(o);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }

    bool operator==(const VertexSet& o) const = default;

    /// Least element, or -1 when empty.
    int first() const noexcept {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return static_cast<int>(i * 64 + std::countr_zero(w_[i]));
        return -1;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            Word w = w_[i];
            while (w) {
                f(static_cast<int>(i * 64 + std::countr_zero(w)));
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

    std::span<const Word> words() const noexcept { return w_; }

    Word word0() const noexcept { return w_.empty() ? 0 : w_[0]; }

    /// Colexicographic order: S < T iff max(S xor T) lies in T.
    /// Returns <0, 0, >0 like strcmp. Requires equal universes.
    static int colex_compare(const VertexSet& a, const VertexSet& b) {
        a.match(b);
        for (std::size_t i = a.w_.size(); i-- > 0;) {
            if (a.w_[i] != b.w_[i]) {
                Word diff = a.w_[i] ^ b.w_[i];
                int bit = 63 - std::countl_zero(diff);
                return ((b.w_[i] >> bit) & 1u) ? -1 : 1;
            }
        }
        return 0;
    }

    std::string str() const {
        std::string s = "{";
        bool sep = false;
        for_each([&](int v) {
            if (sep) s += ",";
            s += std::to_string(v);
            sep = true;
        });
        return s + "}";
    }

private:
    static std::size_t word_count(int n) { return (static_cast<std::size_t>(n) + 63) / 64; }

    void check(int v) const {
        if (v < 0 || v >= n_)
            throw GraphError("vertex " + std::to_string(v) + " out of range for universe " +
                             std::to_string(n_));
    }

    void match(const VertexSet& o) const {
        if (n_ != o.n_) throw GraphError("vertex sets over different universes");
    }

    void trim() {
        if (w_.empty()) return;
        int used = n_ & 63;
        if (used) w_.back() &= (Word{1} << used) - 1;
    }

    int n_ = 0;
    std::vector<Word> w_;
};

}  // namespace zf
