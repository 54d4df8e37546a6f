#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace ryserlab {

// A subset of a fixed point universe {0, ..., universe-1}, packed into
// 64-bit words.  Universe sizes are small (a few hundred at most) but not
// bounded by 64, so this is a thin dynamic bitset with only the operations
// the rest of the library needs.
class PointSet {
public:
    PointSet() = default;

    explicit PointSet(int universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    int universe() const { return universe_; }

    bool test(int p) const {
        return (words_[p >> 6] >> (p & 63)) & 1;
    }

    void set(int p) { words_[p >> 6] |= std::uint64_t{1} << (p & 63); }
    void reset(int p) { words_[p >> 6] &= ~(std::uint64_t{1} << (p & 63)); }

    int count() const {
        int n = 0;
        for (std::uint64_t w : words_) n += std::popcount(w);
        return n;
    }

    std::vector<int> points() const {
        std::vector<int> out;
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                out.push_back(static_cast<int>(k * 64) + std::countr_zero(w));
                w &= w - 1;
            }
        }
        return out;
    }

    // Incidence row as text: character j is '1' when point j is in the set.
    std::string to_row() const {
        std::string s(universe_, '0');
        for (int p : points()) s[p] = '1';
        return s;
    }

    int intersection_count(const PointSet& o) const {
        int n = 0;
        for (std::size_t k = 0; k < words_.size(); ++k)
            n += std::popcount(words_[k] & o.words_[k]);
        return n;
    }

    PointSet sym_diff(const PointSet& o) const {
        PointSet r(universe_);
        for (std::size_t k = 0; k < words_.size(); ++k)
            r.words_[k] = words_[k] ^ o.words_[k];
        return r;
    }

    PointSet set_union(const PointSet& o) const {
        PointSet r(universe_);
        for (std::size_t k = 0; k < words_.size(); ++k)
            r.words_[k] = words_[k] | o.words_[k];
        return r;
    }

    PointSet set_intersection(const PointSet& o) const {
        PointSet r(universe_);
        for (std::size_t k = 0; k < words_.size(); ++k)
            r.words_[k] = words_[k] & o.words_[k];
        return r;
    }

    // Complement within the universe; trailing bits of the last word stay 0.
    PointSet complement() const {
        PointSet r(universe_);
        for (std::size_t k = 0; k < words_.size(); ++k)
            r.words_[k] = ~words_[k];
        int tail = universe_ & 63;
        if (tail != 0 && !r.words_.empty())
            r.words_.back() &= (std::uint64_t{1} << tail) - 1;
        return r;
    }

    bool operator==(const PointSet&) const = default;

    // Orders sets by their incidence row text.  The first differing point
    // index decides, and the set missing that point is the smaller one
    // ('0' < '1').
    bool operator<(const PointSet& o) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t diff = words_[k] ^ o.words_[k];
            if (diff) {
                int bit = std::countr_zero(diff);
                return !((words_[k] >> bit) & 1);
            }
        }
        return false;
    }

private:
    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace ryserlab
