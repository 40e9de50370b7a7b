#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "kring/shelling.hpp"

using kring::Face;
using kring::Shelling;
using kring::SimplicialComplex;

namespace {

SimplicialComplex boundary_triangle() {
    return SimplicialComplex::from_vertex_lists(3, {{1, 2}, {2, 3}, {1, 3}});
}

SimplicialComplex square() {
    return SimplicialComplex::from_vertex_lists(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
}

SimplicialComplex octahedron() {
    return SimplicialComplex::from_vertex_lists(
        6, {{1, 2, 3}, {1, 2, 6}, {1, 5, 3}, {1, 5, 6}, {4, 2, 3}, {4, 2, 6}, {4, 5, 3}, {4, 5, 6}});
}

SimplicialComplex disjoint_edges() {
    return SimplicialComplex::from_vertex_lists(4, {{1, 2}, {3, 4}});
}

// Oracle for one shelling step, phrased via ridges instead of minimal new
// faces: the old part of 2^{F_i} must be exactly the union of the subsets of
// the ridges it contains, and the restriction is then the set of vertices
// opposite those ridges.  Works directly on std::set, no bit tricks.
struct StepOracle {
    std::set<Face, kring::CardLexLess> seen;

    // Returns the restriction on success.
    std::optional<Face> step(Face facet) {
        std::vector<Face> old_subsets;
        std::vector<Face> ridges;  // facets of `facet` already seen
        bool first = seen.empty();
        kring::for_each_subset(facet, [&](Face g) {
            if (seen.count(g)) old_subsets.push_back(g);
            if (g.size() == facet.size() - 1 && seen.count(g)) ridges.push_back(g);
        });
        if (!first) {
            if (ridges.empty()) return std::nullopt;
            std::set<Face, kring::CardLexLess> covered;
            for (Face r : ridges)
                kring::for_each_subset(r, [&covered](Face g) { covered.insert(g); });
            if (std::set<Face, kring::CardLexLess>(old_subsets.begin(), old_subsets.end()) !=
                covered)
                return std::nullopt;
        } else if (!old_subsets.empty()) {
            return std::nullopt;
        }
        Face restriction;
        for (Face r : ridges) restriction = restriction.unite(facet.minus(r));
        kring::for_each_subset(facet, [&](Face g) { seen.insert(g); });
        return restriction;
    }
};

std::optional<std::vector<Face>> oracle_verify(const std::vector<Face>& order) {
    StepOracle o;
    std::vector<Face> restrictions;
    for (Face f : order) {
        auto r = o.step(f);
        if (!r) return std::nullopt;
        restrictions.push_back(*r);
    }
    return restrictions;
}

}  // namespace

TEST_CASE("verify_shelling agrees with the ridge oracle on frozen orders") {
    SimplicialComplex tri = boundary_triangle();
    std::vector<Face> order = {Face::from_vertices({1, 2}), Face::from_vertices({2, 3}),
                               Face::from_vertices({1, 3})};
    auto out = kring::verify_shelling(tri, order);
    REQUIRE(out.ok());
    CHECK(out.shelling->restrictions ==
          std::vector<Face>{Face(), Face::single(3), Face::from_vertices({1, 3})});
    CHECK(oracle_verify(order) == out.shelling->restrictions);

    SimplicialComplex sq = square();
    std::vector<Face> sq_order = {Face::from_vertices({1, 2}), Face::from_vertices({2, 3}),
                                  Face::from_vertices({3, 4}), Face::from_vertices({1, 4})};
    auto sq_out = kring::verify_shelling(sq, sq_order);
    REQUIRE(sq_out.ok());
    CHECK(sq_out.shelling->restrictions ==
          std::vector<Face>{Face(), Face::single(3), Face::single(4),
                            Face::from_vertices({1, 4})});
    CHECK(oracle_verify(sq_order) == sq_out.shelling->restrictions);
}

TEST_CASE("verify_shelling rejects non-shellings and non-permutations") {
    SimplicialComplex sq = square();
    // {1,2} then {3,4} attach along nothing: fails at step 2.
    auto out = kring::verify_shelling(
        sq, {Face::from_vertices({1, 2}), Face::from_vertices({3, 4}),
             Face::from_vertices({2, 3}), Face::from_vertices({1, 4})});
    CHECK_FALSE(out.ok());
    CHECK(out.failure_step == 2);

    CHECK_THROWS_AS(kring::verify_shelling(sq, {Face::from_vertices({1, 2})}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        kring::verify_shelling(sq, {Face::from_vertices({1, 2}), Face::from_vertices({1, 2}),
                                    Face::from_vertices({3, 4}), Face::from_vertices({2, 3})}),
        std::invalid_argument);
}

TEST_CASE("verify_shelling and the oracle agree on every facet permutation") {
    for (const SimplicialComplex& c : {boundary_triangle(), square()}) {
        std::vector<Face> order = c.facets();
        std::sort(order.begin(), order.end(), kring::CardLexLess{});
        kring::HVector reference_h;
        do {
            auto got = kring::verify_shelling(c, order);
            auto want = oracle_verify(order);
            CHECK(got.ok() == want.has_value());
            if (got.ok() && want) {
                CHECK(got.shelling->restrictions == *want);
                // h-vector is an invariant of the complex, not the order
                kring::HVector h = kring::h_vector(*got.shelling);
                if (reference_h.empty())
                    reference_h = h;
                else
                    CHECK(h == reference_h);
            }
        } while (std::next_permutation(order.begin(), order.end(), kring::CardLexLess{}));
        CHECK_FALSE(reference_h.empty());
    }
}

TEST_CASE("find_shelling, frozen deterministic outputs") {
    auto tri = kring::find_shelling(boundary_triangle());
    REQUIRE(tri.has_value());
    CHECK(tri->order == std::vector<Face>{Face::from_vertices({1, 2}),
                                          Face::from_vertices({1, 3}),
                                          Face::from_vertices({2, 3})});
    CHECK(tri->restrictions ==
          std::vector<Face>{Face(), Face::single(3), Face::from_vertices({2, 3})});

    auto sq = kring::find_shelling(square());
    REQUIRE(sq.has_value());
    CHECK(sq->order == std::vector<Face>{Face::from_vertices({1, 2}), Face::from_vertices({1, 4}),
                                         Face::from_vertices({2, 3}),
                                         Face::from_vertices({3, 4})});
    CHECK(sq->restrictions == std::vector<Face>{Face(), Face::single(4), Face::single(3),
                                                Face::from_vertices({3, 4})});
}

TEST_CASE("find_shelling results always pass verify_shelling and the oracle") {
    for (const SimplicialComplex& c :
         {boundary_triangle(), square(), octahedron(),
          SimplicialComplex::from_vertex_lists(3, {{1, 2, 3}})}) {
        auto sh = kring::find_shelling(c);
        REQUIRE(sh.has_value());
        auto verified = kring::verify_shelling(c, sh->order);
        REQUIRE(verified.ok());
        CHECK(verified.shelling->restrictions == sh->restrictions);
        CHECK(oracle_verify(sh->order) == sh->restrictions);
    }
}

TEST_CASE("find_shelling returns nullopt for a disconnected complex") {
    CHECK_FALSE(kring::find_shelling(disjoint_edges()).has_value());
    auto out = kring::verify_shelling(
        disjoint_edges(), {Face::from_vertices({1, 2}), Face::from_vertices({3, 4})});
    CHECK_FALSE(out.ok());
    CHECK(out.failure_step == 2);
}

TEST_CASE("h-vectors and cell data of the standard examples") {
    auto tri = *kring::find_shelling(boundary_triangle());
    CHECK(kring::h_vector(tri) == kring::HVector{1, 1, 1});
    CHECK(kring::cell_dimensions(tri, 2) == std::vector<int>{0, 2, 4});
    CHECK(kring::betti_numbers(tri, 2) == std::vector<long>{1, 1, 1});

    auto sq = *kring::find_shelling(square());
    CHECK(kring::h_vector(sq) == kring::HVector{1, 2, 1});
    CHECK(kring::cell_dimensions(sq, 2) == std::vector<int>{0, 2, 2, 4});
    CHECK(kring::betti_numbers(sq, 2) == std::vector<long>{1, 2, 1});

    auto oct = *kring::find_shelling(octahedron());
    CHECK(kring::h_vector(oct) == kring::HVector{1, 3, 3, 1});
    CHECK(kring::betti_numbers(oct, 3) == std::vector<long>{1, 3, 3, 1});

    auto point = *kring::find_shelling(SimplicialComplex::from_vertex_lists(3, {{1, 2, 3}}));
    CHECK(kring::h_vector(point) == kring::HVector{1, 0, 0, 0});

    CHECK_THROWS_AS(kring::cell_dimensions(sq, 3), std::invalid_argument);
}

TEST_CASE("shelling intervals partition the face poset") {
    for (const SimplicialComplex& c : {boundary_triangle(), square(), octahedron()}) {
        auto sh = *kring::find_shelling(c);
        std::vector<Face> faces = c.all_faces();

        // every face lands in exactly one interval (interval_of throws on a
        // double cover), and the interval sizes add up to the face count
        long total = 0;
        for (int i = 0; i < sh.d(); ++i)
            total += 1L << (sh.order[std::size_t(i)].size() -
                            sh.restrictions[std::size_t(i)].size());
        CHECK(total == long(faces.size()));

        std::vector<long> hits(std::size_t(sh.d()), 0);
        for (Face g : faces) {
            int idx = kring::interval_of(sh, g);
            REQUIRE(idx >= 1);
            REQUIRE(idx <= sh.d());
            ++hits[std::size_t(idx - 1)];
            CHECK(sh.restrictions[std::size_t(idx - 1)].subset_of(g));
            CHECK(g.subset_of(sh.order[std::size_t(idx - 1)]));
        }
        for (int i = 0; i < sh.d(); ++i)
            CHECK(hits[std::size_t(i)] ==
                  1L << (sh.order[std::size_t(i)].size() - sh.restrictions[std::size_t(i)].size()));
    }
    CHECK_THROWS_AS(kring::interval_of(*kring::find_shelling(square()),
                                       Face::from_vertices({1, 3})),
                    std::invalid_argument);
}
