#ifndef KRING_SIMPLICIAL_COMPLEX_HPP
#define KRING_SIMPLICIAL_COMPLEX_HPP

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "kring/face.hpp"

namespace kring {

/// One failed structural invariant, with a witness.
struct Violation {
    enum class Kind { no_facets, purity, coverage, containment };
    Kind kind;
    std::vector<Face> witness;  // offending facet(s); empty for coverage
    int vertex = 0;             // uncovered vertex for coverage
    std::string message;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;
};

/// Abstract simplicial complex on vertices {1..m}, given by its maximal
/// simplices.  Immutable after construction; all queries are const.
///
/// This is the nerve of the facet covering of an orbit space: vertex j
/// stands for the facet Q_j, and a vertex subset is a face exactly when the
/// corresponding facets have a common point.
class SimplicialComplex {
  public:
    SimplicialComplex(int num_vertices, std::vector<Face> facets)
        : m_(num_vertices), facets_(std::move(facets)) {
        if (m_ < 1 || m_ > kMaxVertices)
            throw std::out_of_range("vertex count must be in 1.." +
                                    std::to_string(kMaxVertices));
        for (const Face& f : facets_) {
            if (f.max_vertex() > m_)
                throw std::out_of_range("facet " + f.to_string() +
                                        " uses a vertex above m=" + std::to_string(m_));
        }
        std::sort(facets_.begin(), facets_.end(), CardLexLess{});
        for (const Face& f : facets_) dim_ = std::max(dim_, f.size() - 1);
    }

    static SimplicialComplex from_vertex_lists(int m, const std::vector<std::vector<int>>& lists) {
        std::vector<Face> fs;
        fs.reserve(lists.size());
        for (const auto& l : lists) fs.push_back(Face::from_vertices(l));
        return SimplicialComplex(m, std::move(fs));
    }

    int num_vertices() const { return m_; }
    const std::vector<Face>& facets() const { return facets_; }
    int dim() const { return dim_; }

    Face vertex_universe() const {
        return Face(m_ == 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << m_) - 1));
    }

    /// Checks purity, vertex coverage and mutual non-containment of facets.
    /// Violations are reported as data, never thrown.
    ValidationReport validate() const {
        ValidationReport rep;
        auto fail = [&rep](Violation v) {
            rep.ok = false;
            rep.violations.push_back(std::move(v));
        };

        if (facets_.empty()) {
            fail({Violation::Kind::no_facets, {}, 0, "complex has no facets"});
            return rep;
        }
        for (const Face& f : facets_) {
            if (f.size() != dim_ + 1)
                fail({Violation::Kind::purity,
                      {f},
                      0,
                      "facet " + f.to_string() + " has " + std::to_string(f.size()) +
                          " vertices, expected " + std::to_string(dim_ + 1)});
        }
        Face covered;
        for (const Face& f : facets_) covered = covered.unite(f);
        for (int v = 1; v <= m_; ++v) {
            if (!covered.contains(v))
                fail({Violation::Kind::coverage,
                      {},
                      v,
                      "vertex " + std::to_string(v) + " lies in no facet"});
        }
        for (std::size_t i = 0; i < facets_.size(); ++i) {
            for (std::size_t j = 0; j < facets_.size(); ++j) {
                if (i == j) continue;
                if (facets_[i].subset_of(facets_[j]) &&
                    (facets_[i] != facets_[j] || i < j)) {
                    fail({Violation::Kind::containment,
                          {facets_[i], facets_[j]},
                          0,
                          "facet " + facets_[i].to_string() + " is contained in facet " +
                              facets_[j].to_string()});
                }
            }
        }
        return rep;
    }

    /// True iff s spans a simplex, i.e. is a subset of some facet.  The empty
    /// set is always a face of a complex with at least one facet.
    bool is_face(Face s) const {
        if (s.max_vertex() > m_)
            throw std::out_of_range("vertex label above m=" + std::to_string(m_));
        for (const Face& f : facets_)
            if (s.subset_of(f)) return true;
        return false;
    }

    /// All inclusion-minimal vertex sets that are not faces, in card-lex
    /// order.  A set is a face iff it contains none of these.
    std::vector<Face> minimal_nonfaces() const {
        std::vector<Face> out;
        // A minimal nonface has every proper subset a face, so its size is at
        // most dim+2 (faces cannot be larger than dim+1).
        int kmax = std::min(m_, dim_ + 2);
        std::vector<int> idx;
        for (int k = 1; k <= kmax; ++k) {
            idx.assign(static_cast<std::size_t>(k), 0);
            for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
            while (true) {
                Face s = Face::from_vertices(idx);
                if (!is_face(s)) {
                    bool minimal = true;
                    for (int v : idx) {
                        if (!is_face(s.without(v))) {
                            minimal = false;
                            break;
                        }
                    }
                    if (minimal) out.push_back(s);
                }
                // next k-combination of {1..m} in lexicographic order
                int i = k - 1;
                while (i >= 0 && idx[static_cast<std::size_t>(i)] == m_ - (k - 1 - i)) --i;
                if (i < 0) break;
                ++idx[static_cast<std::size_t>(i)];
                for (int j = i + 1; j < k; ++j)
                    idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
            }
        }
        return out;
    }

    /// Every face including the empty one, deduplicated, in card-lex order.
    std::vector<Face> all_faces() const {
        std::set<Face, CardLexLess> seen;
        for (const Face& f : facets_)
            for_each_subset(f, [&seen](Face g) { seen.insert(g); });
        return std::vector<Face>(seen.begin(), seen.end());
    }

  private:
    int m_;
    std::vector<Face> facets_;
    int dim_ = -1;
};

}  // namespace kring

#endif  // KRING_SIMPLICIAL_COMPLEX_HPP
