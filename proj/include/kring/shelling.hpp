#ifndef KRING_SHELLING_HPP
#define KRING_SHELLING_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "kring/simplicial_complex.hpp"

namespace kring {

/// An ordered facet list F_1..F_d together with the restriction faces
/// r(F_1)..r(F_d).  The half-open intervals [r(F_i), F_i] partition the
/// faces of the complex; r(F_1) is always the empty face.
struct Shelling {
    std::vector<Face> order;
    std::vector<Face> restrictions;

    int d() const { return static_cast<int>(order.size()); }
};

/// Result of checking a candidate facet order.  failure_step is the earliest
/// 1-based step whose new faces do not have a unique minimal element; 0 on
/// success.
struct ShellingOutcome {
    std::optional<Shelling> shelling;
    int failure_step = 0;

    bool ok() const { return shelling.has_value(); }
};

namespace detail {

/// One shelling step against the faces accumulated so far.  On success the
/// restriction is appended and `seen` grows by the new interval.
/// The restriction comes from the vertex criterion
///     r(F) = { v in F : F\{v} already present },
/// then the defining condition is confirmed directly: among the subsets of F
/// not yet present, exactly one must be minimal, and it must equal r(F).
inline bool shelling_step(Face facet, std::unordered_set<std::uint64_t>& seen,
                          Face& restriction_out) {
    Face r;
    for (int v : facet.vertices()) {
        if (seen.count(facet.without(v).bits())) r = r.with(v);
    }
    std::vector<Face> new_faces;
    for_each_subset(facet, [&](Face g) {
        if (!seen.count(g.bits())) new_faces.push_back(g);
    });
    int minimal_count = 0;
    Face minimal;
    for (const Face& g : new_faces) {
        bool is_minimal = true;
        for (int v : g.vertices()) {
            if (!seen.count(g.without(v).bits())) {
                is_minimal = false;
                break;
            }
        }
        if (g.is_empty()) is_minimal = true;  // nothing below the empty face
        if (is_minimal) {
            ++minimal_count;
            minimal = g;
        }
    }
    if (minimal_count != 1 || minimal != r) return false;
    for (const Face& g : new_faces) seen.insert(g.bits());
    restriction_out = r;
    return true;
}

}  // namespace detail

/// Checks that `order` (a permutation of the complex's facets) is a shelling
/// and computes the restriction faces.  Throws std::invalid_argument if
/// `order` is not a permutation of the facets.
inline ShellingOutcome verify_shelling(const SimplicialComplex& complex,
                                       const std::vector<Face>& order) {
    std::vector<Face> a = complex.facets();
    std::vector<Face> b = order;
    std::sort(a.begin(), a.end(), CardLexLess{});
    std::sort(b.begin(), b.end(), CardLexLess{});
    if (a != b)
        throw std::invalid_argument("facet order is not a permutation of the complex's facets");

    ShellingOutcome out;
    Shelling sh;
    sh.order = order;
    std::unordered_set<std::uint64_t> seen;
    for (std::size_t i = 0; i < order.size(); ++i) {
        Face r;
        if (!detail::shelling_step(order[i], seen, r)) {
            out.failure_step = static_cast<int>(i) + 1;
            return out;
        }
        sh.restrictions.push_back(r);
    }
    out.shelling = std::move(sh);
    return out;
}

/// Searches for a shelling order by depth-first backtracking.
///
/// Search order (documented for reproducibility): at every depth the unused
/// facets are taken in card-lex order, those sharing a ridge with the
/// current subcomplex first.  The first complete order found is returned, so
/// the result is deterministic; nullopt means no facet order is a shelling.
inline std::optional<Shelling> find_shelling(const SimplicialComplex& complex) {
    const std::vector<Face>& facets = complex.facets();  // already card-lex sorted
    int d = static_cast<int>(facets.size());
    if (d == 0) return std::nullopt;

    std::vector<Face> order;
    std::vector<Face> restrictions;
    std::vector<bool> used(static_cast<std::size_t>(d), false);
    std::unordered_set<std::uint64_t> seen;

    auto attaches_along_ridge = [&seen](Face f) {
        for (int v : f.vertices())
            if (seen.count(f.without(v).bits())) return true;
        return false;
    };

    auto dfs = [&](auto&& self, int depth) -> bool {
        if (depth == d) return true;
        std::vector<int> candidates;
        candidates.reserve(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i)
            if (!used[static_cast<std::size_t>(i)] && attaches_along_ridge(facets[static_cast<std::size_t>(i)]))
                candidates.push_back(i);
        for (int i = 0; i < d; ++i)
            if (!used[static_cast<std::size_t>(i)] && !attaches_along_ridge(facets[static_cast<std::size_t>(i)]))
                candidates.push_back(i);
        for (int i : candidates) {
            std::unordered_set<std::uint64_t> saved = seen;
            Face r;
            if (detail::shelling_step(facets[static_cast<std::size_t>(i)], seen, r)) {
                used[static_cast<std::size_t>(i)] = true;
                order.push_back(facets[static_cast<std::size_t>(i)]);
                restrictions.push_back(r);
                if (self(self, depth + 1)) return true;
                used[static_cast<std::size_t>(i)] = false;
                order.pop_back();
                restrictions.pop_back();
            }
            seen = std::move(saved);
        }
        return false;
    };

    if (!dfs(dfs, 0)) return std::nullopt;
    return Shelling{std::move(order), std::move(restrictions)};
}

/// The unique 1-based index i with r(F_i) <= g <= F_i.  Throws
/// std::invalid_argument when g is not a face of the shelled complex.
inline int interval_of(const Shelling& sh, Face g) {
    int found = 0;
    for (int i = 0; i < sh.d(); ++i) {
        if (sh.restrictions[static_cast<std::size_t>(i)].subset_of(g) &&
            g.subset_of(sh.order[static_cast<std::size_t>(i)])) {
            if (found != 0)
                throw std::logic_error("interval partition violated: face " + g.to_string() +
                                       " lies in two intervals");
            found = i + 1;
        }
    }
    if (found == 0)
        throw std::invalid_argument("not a face of the shelled complex: " + g.to_string());
    return found;
}

/// h_k = #{ i : |r(F_i)| = k } for k = 0..n where n-1 is the complex
/// dimension.  Satisfies sum h_k = d and h_0 = 1 for any shelling.
using HVector = std::vector<long>;

inline HVector h_vector(const Shelling& sh) {
    if (sh.order.empty()) return {};
    int n = sh.order.front().size();
    HVector h(static_cast<std::size_t>(n) + 1, 0);
    for (const Face& r : sh.restrictions) ++h[static_cast<std::size_t>(r.size())];
    return h;
}

/// Dimensions of the even cells induced by the shelling: one cell of real
/// dimension 2*(n - |r(F_i)|) per facet, returned as a sorted multiset.
inline std::vector<int> cell_dimensions(const Shelling& sh, int ambient_n) {
    if (sh.order.empty() || sh.order.front().size() != ambient_n)
        throw std::invalid_argument("ambient dimension does not match facet size");
    std::vector<int> dims;
    dims.reserve(sh.restrictions.size());
    for (const Face& r : sh.restrictions) dims.push_back(2 * (ambient_n - r.size()));
    std::sort(dims.begin(), dims.end());
    return dims;
}

/// Even Betti numbers read off the cell structure: b[k] holds b_{2k} and
/// equals h_{n-k}.
inline std::vector<long> betti_numbers(const Shelling& sh, int ambient_n) {
    std::vector<int> dims = cell_dimensions(sh, ambient_n);
    std::vector<long> b(static_cast<std::size_t>(ambient_n) + 1, 0);
    for (int dim2 : dims) ++b[static_cast<std::size_t>(dim2 / 2)];
    return b;
}

}  // namespace kring

#endif  // KRING_SHELLING_HPP
