#ifndef INDPOLY_VERTEX_SET_HPP
#define INDPOLY_VERTEX_SET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace indpoly {

// Set of vertex indices backed by 64-bit words. Indices below 64 live in a
// single inline word, so desk-scale graphs never touch the heap; larger
// universes spill extra words into `tail_`. The word list is kept trimmed
// (no trailing zero words), which makes equality and hashing plain
// word-by-word comparisons.
class VertexSet {
public:
    VertexSet() = default;

    static VertexSet full(int n) {
        VertexSet s;
        if (n <= 0) return s;
        if (n <= 64) {
            s.head_ = low_mask(n);
            return s;
        }
        s.head_ = ~std::uint64_t{0};
        int rest = n - 64;
        s.tail_.assign(static_cast<std::size_t>((rest + 63) / 64), ~std::uint64_t{0});
        int top_bits = rest - static_cast<int>(s.tail_.size() - 1) * 64;
        s.tail_.back() = low_mask(top_bits);
        return s;
    }

    static VertexSet single(int v) {
        VertexSet s;
        s.set(v);
        return s;
    }

    bool test(int v) const {
        if (v < 0) return false;
        std::size_t w = static_cast<std::size_t>(v) >> 6;
        if (w >= word_count()) return false;
        return (word(w) >> (v & 63)) & 1u;
    }

    VertexSet& set(int v) {
        std::size_t w = static_cast<std::size_t>(v) >> 6;
        if (w > 0 && w > tail_.size()) tail_.resize(w, 0);
        if (w == 0) {
            head_ |= std::uint64_t{1} << (v & 63);
        } else {
            tail_[w - 1] |= std::uint64_t{1} << (v & 63);
        }
        return *this;
    }

    VertexSet& reset(int v) {
        std::size_t w = static_cast<std::size_t>(v) >> 6;
        if (w < word_count()) {
            if (w == 0) {
                head_ &= ~(std::uint64_t{1} << (v & 63));
            } else {
                tail_[w - 1] &= ~(std::uint64_t{1} << (v & 63));
                trim();
            }
        }
        return *this;
    }

    VertexSet with(int v) const {
        VertexSet s = *this;
        s.set(v);
        return s;
    }

    VertexSet without(int v) const {
        VertexSet s = *this;
        s.reset(v);
        return s;
    }

    bool empty() const { return head_ == 0 && tail_.empty(); }

    int count() const {
        int c = std::popcount(head_);
        for (std::uint64_t w : tail_) c += std::popcount(w);
        return c;
    }

    // Lowest set index, or -1 when empty.
    int lowest() const {
        if (head_) return std::countr_zero(head_);
        for (std::size_t k = 0; k < tail_.size(); ++k) {
            if (tail_[k]) return 64 * static_cast<int>(k + 1) + std::countr_zero(tail_[k]);
        }
        return -1;
    }

    int highest() const {
        for (std::size_t k = tail_.size(); k > 0; --k) {
            if (tail_[k - 1]) return 64 * static_cast<int>(k) + 63 - std::countl_zero(tail_[k - 1]);
        }
        if (head_) return 63 - std::countl_zero(head_);
        return -1;
    }

    bool contains(const VertexSet& sub) const {
        for (std::size_t k = 0; k < sub.word_count(); ++k) {
            if (sub.word(k) & ~word(k)) return false;
        }
        return true;
    }

    bool intersects(const VertexSet& other) const {
        std::size_t n = std::min(word_count(), other.word_count());
        for (std::size_t k = 0; k < n; ++k) {
            if (word(k) & other.word(k)) return true;
        }
        return false;
    }

    friend VertexSet operator&(const VertexSet& a, const VertexSet& b) {
        VertexSet r;
        std::size_t n = std::min(a.word_count(), b.word_count());
        r.head_ = a.head_ & b.head_;
        if (n > 1) {
            r.tail_.resize(n - 1);
            for (std::size_t k = 1; k < n; ++k) r.tail_[k - 1] = a.word(k) & b.word(k);
        }
        r.trim();
        return r;
    }

    friend VertexSet operator|(const VertexSet& a, const VertexSet& b) {
        VertexSet r;
        std::size_t n = std::max(a.word_count(), b.word_count());
        r.head_ = a.head_ | b.head_;
        if (n > 1) {
            r.tail_.resize(n - 1);
            for (std::size_t k = 1; k < n; ++k) r.tail_[k - 1] = a.word(k) | b.word(k);
        }
        return r;
    }

    friend VertexSet operator^(const VertexSet& a, const VertexSet& b) {
        VertexSet r;
        std::size_t n = std::max(a.word_count(), b.word_count());
        r.head_ = a.head_ ^ b.head_;
        if (n > 1) {
            r.tail_.resize(n - 1);
            for (std::size_t k = 1; k < n; ++k) r.tail_[k - 1] = a.word(k) ^ b.word(k);
        }
        r.trim();
        return r;
    }

    // Set difference a \ b.
    friend VertexSet operator-(const VertexSet& a, const VertexSet& b) {
        VertexSet r;
        r.head_ = a.head_ & ~b.head_;
        if (a.word_count() > 1) {
            r.tail_.resize(a.word_count() - 1);
            for (std::size_t k = 1; k < a.word_count(); ++k) r.tail_[k - 1] = a.word(k) & ~b.word(k);
        }
        r.trim();
        return r;
    }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.head_ == b.head_ && a.tail_ == b.tail_;
    }
    friend bool operator!=(const VertexSet& a, const VertexSet& b) { return !(a == b); }

    // Visits set indices in ascending order.
    template <typename F>
    void for_each(F&& f) const {
        std::uint64_t w = head_;
        while (w) {
            f(std::countr_zero(w));
            w &= w - 1;
        }
        for (std::size_t k = 0; k < tail_.size(); ++k) {
            w = tail_[k];
            int base = 64 * static_cast<int>(k + 1);
            while (w) {
                f(base + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    // Low 64 bits; the whole set when all indices are below 64.
    std::uint64_t low64() const { return head_; }

    std::size_t hash() const {
        std::uint64_t h = mix(head_ + 0x9e3779b97f4a7c15ULL);
        for (std::uint64_t w : tail_) h = mix(h ^ (w + 0x9e3779b97f4a7c15ULL));
        return static_cast<std::size_t>(h);
    }

private:
    static constexpr std::uint64_t low_mask(int k) {
        return k >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1);
    }

    static std::uint64_t mix(std::uint64_t x) {
        x ^= x >> 30;
        x *= 0xbf58476d1ce4e5b9ULL;
        x ^= x >> 27;
        x *= 0x94d049bb133111ebULL;
        x ^= x >> 31;
        return x;
    }

    std::size_t word_count() const { return tail_.size() + 1; }

    std::uint64_t word(std::size_t k) const {
        if (k == 0) return head_;
        return k <= tail_.size() ? tail_[k - 1] : 0;
    }

    void trim() {
        while (!tail_.empty() && tail_.back() == 0) tail_.pop_back();
    }

    std::uint64_t head_ = 0;
    std::vector<std::uint64_t> tail_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const noexcept { return s.hash(); }
};

}  // namespace indpoly

#endif
