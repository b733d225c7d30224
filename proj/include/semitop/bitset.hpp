#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace semitop {

// Fixed-universe bitset. Element i lives in word i/64, bit i%64.
// Canonical ordering is (popcount, numeric mask value); see operator<=>.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t universe)
        : size_(universe), words_((universe + 63) / 64, 0) {}

    static Bitset full(std::size_t universe) {
        Bitset b(universe);
        for (std::size_t i = 0; i < universe; ++i) b.set(i);
        return b;
    }

    std::size_t universe() const { return size_; }

    void set(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool empty() const {
        for (auto w : words_) if (w) return false;
        return true;
    }

    Bitset operator|(const Bitset& o) const {
        Bitset r = *this;
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] |= o.words_[i];
        return r;
    }
    Bitset operator&(const Bitset& o) const {
        Bitset r = *this;
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
        return r;
    }
    Bitset operator-(const Bitset& o) const {
        Bitset r = *this;
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
        return r;
    }
    Bitset complement() const { return full(size_) - *this; }

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    bool subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool operator==(const Bitset& o) const = default;

    // (cardinality, mask value) — the canonical family order.
    std::strong_ordering operator<=>(const Bitset& o) const {
        if (auto c = count() <=> o.count(); c != 0) return c;
        for (std::size_t i = words_.size(); i-- > 0;)
            if (auto c = words_[i] <=> o.words_[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }

    std::vector<std::size_t> members() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < size_; ++i)
            if (test(i)) out.push_back(i);
        return out;
    }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace semitop
