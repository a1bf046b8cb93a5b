#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

namespace mimkit {

using Vertex = std::size_t;

/// Bitset over the vertex universe 0..universe()-1 of one graph.
///
/// Set algebra between two sets requires equal universes; the result of
/// complement() never contains bits at or above universe().
class VertexSet {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    VertexSet() = default;
    explicit VertexSet(std::size_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}
    VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
        : VertexSet(universe) {
        for (auto v : members) insert(v);
    }

    static VertexSet full(std::size_t universe) {
        VertexSet s(universe);
        for (auto& w : s.words_) w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    std::size_t universe() const { return universe_; }

    bool contains(Vertex v) const {
        return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U);
    }
    void insert(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    void clear() {
        for (auto& w : words_) w = 0;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    bool is_subset_of(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    /// Smallest member, or npos.
    std::size_t first() const { return next_from(0); }
    /// Smallest member strictly greater than v, or npos.
    std::size_t next(Vertex v) const { return next_from(v + 1); }

    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    /// Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const {
        VertexSet s(*this);
        for (auto& w : s.words_) w = ~w;
        s.trim();
        return s;
    }

    bool operator==(const VertexSet&) const = default;

    std::vector<Vertex> to_vector() const {
        std::vector<Vertex> out;
        out.reserve(count());
        for (auto v : *this) out.push_back(v);
        return out;
    }

    std::span<const std::uint64_t> words() const { return words_; }

    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex*;
        using reference = Vertex;

        iterator() = default;
        iterator(const VertexSet* set, std::size_t pos) : set_(set), pos_(pos) {}
        Vertex operator*() const { return pos_; }
        iterator& operator++() {
            pos_ = set_->next(pos_);
            return *this;
        }
        iterator operator++(int) {
            auto tmp = *this;
            ++*this;
            return tmp;
        }
        bool operator==(const iterator& o) const { return pos_ == o.pos_; }

    private:
        const VertexSet* set_ = nullptr;
        std::size_t pos_ = npos;
    };

    iterator begin() const { return {this, first()}; }
    iterator end() const { return {this, npos}; }

private:
    std::size_t next_from(std::size_t from) const {
        if (from >= universe_) return npos;
        std::size_t wi = from >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w) return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi >= words_.size()) return npos;
            w = words_[wi];
        }
    }

    void trim() {
        if (universe_ & 63) words_.back() &= (std::uint64_t{1} << (universe_ & 63)) - 1;
    }

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace mimkit
