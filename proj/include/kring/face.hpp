#ifndef KRING_FACE_HPP
#define KRING_FACE_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace kring {

/// Hard cap on vertex count: vertex sets pack into one machine word.
inline constexpr int kMaxVertices = 64;

/// A vertex subset of {1, ..., m} stored as a 64-bit mask (vertex v lives at
/// bit v-1).  Set semantics make the "sorted, duplicate-free" representation
/// automatic; the empty set is a legal face.
class Face {
  public:
    constexpr Face() = default;
    constexpr explicit Face(std::uint64_t bits) : bits_(bits) {}

    static constexpr Face empty() { return Face(); }

    static Face single(int v) {
        check_vertex(v);
        return Face(std::uint64_t(1) << (v - 1));
    }

    static Face from_vertices(const std::vector<int>& vs) {
        Face f;
        for (int v : vs) f = f.with(v);
        return f;
    }

    static Face from_vertices(std::initializer_list<int> vs) {
        return from_vertices(std::vector<int>(vs));
    }

    bool contains(int v) const {
        check_vertex(v);
        return (bits_ >> (v - 1)) & 1u;
    }

    Face with(int v) const {
        check_vertex(v);
        return Face(bits_ | (std::uint64_t(1) << (v - 1)));
    }

    Face without(int v) const {
        check_vertex(v);
        return Face(bits_ & ~(std::uint64_t(1) << (v - 1)));
    }

    int size() const { return std::popcount(bits_); }
    bool is_empty() const { return bits_ == 0; }

    bool subset_of(Face o) const { return (bits_ & ~o.bits_) == 0; }

    Face unite(Face o) const { return Face(bits_ | o.bits_); }
    Face intersect(Face o) const { return Face(bits_ & o.bits_); }
    Face minus(Face o) const { return Face(bits_ & ~o.bits_); }

    std::uint64_t bits() const { return bits_; }

    /// Largest vertex present, or 0 for the empty set.
    int max_vertex() const {
        return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_);
    }

    /// Vertices in ascending order, 1-based.
    std::vector<int> vertices() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        std::uint64_t b = bits_;
        while (b) {
            int i = std::countr_zero(b);
            out.push_back(i + 1);
            b &= b - 1;
        }
        return out;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int v : vertices()) {
            if (!first) s += ",";
            s += std::to_string(v);
            first = false;
        }
        s += "}";
        return s;
    }

    friend bool operator==(Face a, Face b) { return a.bits_ == b.bits_; }
    friend bool operator!=(Face a, Face b) { return a.bits_ != b.bits_; }

  private:
    static void check_vertex(int v) {
        if (v < 1 || v > kMaxVertices)
            throw std::out_of_range("vertex label " + std::to_string(v) +
                                    " outside 1.." + std::to_string(kMaxVertices));
    }

    std::uint64_t bits_ = 0;
};

/// Lexicographic order on the ascending vertex sequences of two equal-size
/// sets: the set owning the smallest differing vertex comes first.
inline bool lex_less(Face a, Face b) {
    std::uint64_t d = a.bits() ^ b.bits();
    if (d == 0) return false;
    std::uint64_t low = d & (~d + 1);
    return (a.bits() & low) != 0;
}

/// The enumeration order used everywhere: cardinality, then lexicographic.
inline bool card_lex_less(Face a, Face b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a, b);
}

struct CardLexLess {
    bool operator()(Face a, Face b) const { return card_lex_less(a, b); }
};

/// Applies fn to every subset of f, the empty set and f included.
/// Enumeration order is by increasing submask value (not card-lex); callers
/// that need a canonical order sort afterwards.
template <typename Fn>
void for_each_subset(Face f, Fn&& fn) {
    std::uint64_t mask = f.bits();
    std::uint64_t sub = 0;
    while (true) {
        fn(Face(sub));
        if (sub == mask) break;
        sub = (sub - mask) & mask;
    }
}

}  // namespace kring

#endif  // KRING_FACE_HPP
