#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace hcolor {

/// Fixed-universe bitset over the vertex ids 0..universe()-1.
class VertexSet {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    VertexSet() = default;
    explicit VertexSet(std::size_t universe)
        : universe_(universe), words_((universe + kWordBits - 1) / kWordBits, 0) {}
    VertexSet(std::size_t universe, std::initializer_list<int> members) : VertexSet(universe) {
        for (int v : members) insert(v);
    }

    static VertexSet full(std::size_t universe) {
        VertexSet s(universe);
        for (std::size_t v = 0; v < universe; ++v) s.insert(static_cast<int>(v));
        return s;
    }
    static VertexSet from(std::size_t universe, const std::vector<int>& members) {
        VertexSet s(universe);
        for (int v : members) s.insert(v);
        return s;
    }

    std::size_t universe() const noexcept { return universe_; }

    bool contains(int v) const noexcept {
        return v >= 0 && static_cast<std::size_t>(v) < universe_ &&
               (words_[v / kWordBits] >> (v % kWordBits)) & 1U;
    }
    void insert(int v) {
        check(v);
        words_[v / kWordBits] |= Word{1} << (v % kWordBits);
    }
    void erase(int v) {
        check(v);
        words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
    }
    void clear() noexcept {
        for (auto& w : words_) w = 0;
    }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool empty() const noexcept {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    /// Smallest member >= from, or -1.
    int next(int from = 0) const noexcept {
        if (from < 0) from = 0;
        std::size_t wi = static_cast<std::size_t>(from) / kWordBits;
        if (wi >= words_.size()) return -1;
        Word w = words_[wi] & (~Word{0} << (static_cast<std::size_t>(from) % kWordBits));
        while (true) {
            if (w) return static_cast<int>(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
            if (++wi >= words_.size()) return -1;
            w = words_[wi];
        }
    }
    int first() const noexcept { return next(0); }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            Word w = words_[wi];
            while (w) {
                f(static_cast<int>(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w))));
                w &= w - 1;
            }
        }
    }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    VertexSet& operator|=(const VertexSet& o) {
        same(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        same(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    /// Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        same(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    /// Complement within the universe.
    VertexSet complement() const {
        VertexSet c(universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) c.words_[i] = ~words_[i];
        c.trim();
        return c;
    }

    bool intersects(const VertexSet& o) const {
        same(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    std::size_t intersection_count(const VertexSet& o) const {
        same(o);
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
        return c;
    }
    bool is_subset_of(const VertexSet& o) const {
        same(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    /// (this ∩ mask) ⊆ (o ∩ mask), without materialising either side.
    bool is_subset_of_within(const VertexSet& o, const VertexSet& mask) const {
        same(o);
        same(mask);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & mask.words_[i] & ~o.words_[i]) return false;
        return true;
    }
    bool intersects_within(const VertexSet& o, const VertexSet& mask) const {
        same(o);
        same(mask);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & mask.words_[i] & o.words_[i]) return true;
        return false;
    }

    const std::vector<Word>& words() const noexcept { return words_; }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.universe_ == b.universe_ && a.words_ == b.words_;
    }
    /// Lexicographic order of the sorted member lists.
    friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
        int x = a.first();
        int y = b.first();
        while (x >= 0 && y >= 0) {
            if (x != y) return x <=> y;
            x = a.next(x + 1);
            y = b.next(y + 1);
        }
        if (x < 0 && y < 0) return a.universe_ <=> b.universe_;
        return x < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }

private:
    void check(int v) const {
        if (v < 0 || static_cast<std::size_t>(v) >= universe_)
            throw std::out_of_range("vertex id outside set universe");
    }
    void same(const VertexSet& o) const {
        if (o.universe_ != universe_) throw std::invalid_argument("vertex sets over different universes");
    }
    void trim() noexcept {
        if (universe_ % kWordBits != 0 && !words_.empty())
            words_.back() &= (Word{1} << (universe_ % kWordBits)) - 1;
    }

    std::size_t universe_ = 0;
    std::vector<Word> words_;
};

}  // namespace hcolor
