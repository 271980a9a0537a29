#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace lclaw {

/// Set of vertex ids over a fixed universe 0..universe-1, stored as 64-bit
/// words. All algorithms in this library take induced views via such masks
/// instead of rebuilding graphs.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe)
        : universe_(universe), words_(word_count(universe), 0) {}

    static VertexSet of(int universe, std::initializer_list<int> vs) {
        VertexSet s(universe);
        for (int v : vs) s.add(v);
        return s;
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        if (universe == 0) return s;
        for (auto& w : s.words_) w = ~std::uint64_t{0};
        s.clear_tail();
        return s;
    }

    int universe() const { return universe_; }

    bool contains(int v) const {
        assert(v >= 0 && v < universe_);
        return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
    }

    void add(int v) {
        assert(v >= 0 && v < universe_);
        words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void remove(int v) {
        assert(v >= 0 && v < universe_);
        words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    /// Lowest member, or -1 when empty.
    int first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    /// Lowest member greater than v, or -1.
    int next(int v) const {
        if (v + 1 >= universe_) return -1;
        std::size_t i = static_cast<std::size_t>(v + 1) >> 6;
        std::uint64_t w = words_[i] & (~std::uint64_t{0} << ((v + 1) & 63));
        while (true) {
            if (w) return static_cast<int>(i * 64 + std::countr_zero(w));
            if (++i >= words_.size()) return -1;
            w = words_[i];
        }
    }

    class iterator {
    public:
        using value_type = int;
        iterator(const VertexSet* s, int v) : set_(s), v_(v) {}
        int operator*() const { return v_; }
        iterator& operator++() {
            v_ = set_->next(v_);
            return *this;
        }
        bool operator==(const iterator& o) const { return v_ == o.v_; }
        bool operator!=(const iterator& o) const { return v_ != o.v_; }

    private:
        const VertexSet* set_;
        int v_;
    };

    iterator begin() const { return {this, first()}; }
    iterator end() const { return {this, -1}; }

    VertexSet& operator|=(const VertexSet& o) {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    /// Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool intersects(const VertexSet& o) const {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool subset_of(const VertexSet& o) const {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool operator==(const VertexSet& o) const = default;

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (int v : *this) out.push_back(v);
        return out;
    }

    /// Space-separated sorted ids, e.g. "0 2 5"; empty set prints "".
    std::string to_string() const {
        std::string out;
        for (int v : *this) {
            if (!out.empty()) out += ' ';
            out += std::to_string(v);
        }
        return out;
    }

    std::size_t hash() const {
        std::size_t h = static_cast<std::size_t>(universe_);
        for (auto w : words_) h = h * 0x9e3779b97f4a7c15ull + static_cast<std::size_t>(w);
        return h;
    }

private:
    static std::size_t word_count(int universe) {
        return (static_cast<std::size_t>(universe) + 63) / 64;
    }

    void clear_tail() {
        int tail = universe_ & 63;
        if (tail != 0 && !words_.empty())
            words_.back() &= (~std::uint64_t{0}) >> (64 - tail);
    }

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

/// Orders sets by their sorted id lists, lexicographically ({1,3} < {1,4},
/// {1} < {1,4}). Used for reproducible tie-breaking among optima.
inline bool lex_less(const VertexSet& a, const VertexSet& b) {
    int x = a.first(), y = b.first();
    while (x != -1 && y != -1) {
        if (x != y) return x < y;
        x = a.next(x);
        y = b.next(y);
    }
    return y != -1;
}

} // namespace lclaw
