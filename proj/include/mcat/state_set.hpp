#ifndef MCAT_STATE_SET_HPP
#define MCAT_STATE_SET_HPP

#include <cstdint>
#include <cstddef>
#include <vector>

namespace mcat {

/// Fixed-width bit vector over a state universe {0, ..., width-1}.
/// Width is pinned at construction; all set operations require equal widths.
class StateSet {
public:
    StateSet() = default;

    explicit StateSet(int width)
        : width_(width), words_((static_cast<size_t>(width) + 63) / 64, 0) {}

    int width() const { return width_; }

    void set(int i) { words_[static_cast<size_t>(i) >> 6] |= (uint64_t{1} << (i & 63)); }

    bool test(int i) const {
        return (words_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1;
    }

    bool empty() const {
        for (uint64_t w : words_)
            if (w) return false;
        return true;
    }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += __builtin_popcountll(w);
        return c;
    }

    /// Smallest member, or -1 when empty.
    int min_element() const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64 + __builtin_ctzll(words_[i]));
        return -1;
    }

    StateSet& operator|=(const StateSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    bool intersects(const StateSet& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool operator==(const StateSet& o) const {
        return width_ == o.width_ && words_ == o.words_;
    }
    bool operator!=(const StateSet& o) const { return !(*this == o); }

    /// Members in [lo, hi) renumbered to a fresh set of width hi-lo.
    StateSet slice(int lo, int hi) const {
        StateSet out(hi - lo);
        for (int i = lo; i < hi; ++i)
            if (test(i)) out.set(i - lo);
        return out;
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (size_t i = 0; i < words_.size(); ++i) {
            uint64_t w = words_[i];
            while (w) {
                int b = __builtin_ctzll(w);
                fn(static_cast<int>(i * 64 + b));
                w &= w - 1;
            }
        }
    }

    size_t hash() const {
        uint64_t h = 1469598103934665603ull ^ static_cast<uint64_t>(width_);
        for (uint64_t w : words_) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }

private:
    int width_ = 0;
    std::vector<uint64_t> words_;
};

struct StateSetHash {
    size_t operator()(const StateSet& s) const { return s.hash(); }
};

} // namespace mcat

#endif
