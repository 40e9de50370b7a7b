#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "kring/simplicial_complex.hpp"

using kring::CardLexLess;
using kring::Face;
using kring::SimplicialComplex;
using kring::Violation;

namespace {

// Oracle: the face set as an explicit downward closure of the facet list,
// built with std::set instead of bitmask subset tests.
std::set<Face, CardLexLess> closure(const SimplicialComplex& c) {
    std::set<Face, CardLexLess> faces;
    for (const Face& f : c.facets())
        kring::for_each_subset(f, [&faces](Face g) { faces.insert(g); });
    return faces;
}

// Oracle: minimal nonfaces by exhaustive enumeration of all 2^m subsets.
std::vector<Face> oracle_minimal_nonfaces(const SimplicialComplex& c) {
    auto faces = closure(c);
    std::vector<Face> out;
    int m = c.num_vertices();
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << m); ++mask) {
        Face s(mask);
        if (faces.count(s)) continue;
        bool minimal = true;
        for (int v : s.vertices()) {
            if (!faces.count(s.without(v))) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(s);
    }
    return out;  // ascending mask; caller sorts card-lex when comparing
}

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

}  // namespace

TEST_CASE("construction sorts facets card-lex and records the dimension") {
    SimplicialComplex c = boundary_triangle();
    CHECK(c.num_vertices() == 3);
    CHECK(c.dim() == 1);
    CHECK(c.facets() == std::vector<Face>{Face::from_vertices({1, 2}),
                                          Face::from_vertices({1, 3}),
                                          Face::from_vertices({2, 3})});
    CHECK(c.vertex_universe() == Face::from_vertices({1, 2, 3}));
    CHECK_THROWS_AS(SimplicialComplex::from_vertex_lists(2, {{1, 3}}), std::out_of_range);
    CHECK_THROWS_AS(SimplicialComplex(0, {}), std::out_of_range);
}

TEST_CASE("validate accepts the pure examples") {
    CHECK(boundary_triangle().validate().ok);
    CHECK(square().validate().ok);
    CHECK(octahedron().validate().ok);
}

TEST_CASE("validate reports each broken invariant with a witness") {
    SECTION("no facets") {
        SimplicialComplex c(2, {});
        auto rep = c.validate();
        REQUIRE_FALSE(rep.ok);
        REQUIRE(rep.violations.size() == 1);
        CHECK(rep.violations[0].kind == Violation::Kind::no_facets);
    }
    SECTION("impure facet") {
        auto rep = SimplicialComplex::from_vertex_lists(3, {{1, 2}, {3}}).validate();
        REQUIRE_FALSE(rep.ok);
        bool found = false;
        for (const auto& v : rep.violations)
            if (v.kind == Violation::Kind::purity && v.witness == std::vector<Face>{Face::single(3)})
                found = true;
        CHECK(found);
    }
    SECTION("uncovered vertex") {
        auto rep = SimplicialComplex::from_vertex_lists(4, {{1, 2}, {2, 3}}).validate();
        REQUIRE_FALSE(rep.ok);
        REQUIRE(rep.violations.size() == 1);
        CHECK(rep.violations[0].kind == Violation::Kind::coverage);
        CHECK(rep.violations[0].vertex == 4);
    }
    SECTION("nested facets") {
        auto rep = SimplicialComplex::from_vertex_lists(2, {{1}, {1, 2}}).validate();
        REQUIRE_FALSE(rep.ok);
        bool found = false;
        for (const auto& v : rep.violations)
            if (v.kind == Violation::Kind::containment) found = true;
        CHECK(found);
    }
    SECTION("duplicate facets count once") {
        auto rep = SimplicialComplex::from_vertex_lists(2, {{1, 2}, {1, 2}}).validate();
        REQUIRE_FALSE(rep.ok);
        int containments = 0;
        for (const auto& v : rep.violations)
            if (v.kind == Violation::Kind::containment) ++containments;
        CHECK(containments == 1);
    }
}

TEST_CASE("face membership") {
    SimplicialComplex c = square();
    CHECK(c.is_face(Face()));
    CHECK(c.is_face(Face::single(2)));
    CHECK(c.is_face(Face::from_vertices({1, 4})));
    CHECK_FALSE(c.is_face(Face::from_vertices({1, 3})));
    CHECK_FALSE(c.is_face(Face::from_vertices({1, 2, 3})));
    CHECK_THROWS_AS(c.is_face(Face::single(5)), std::out_of_range);
}

TEST_CASE("all_faces enumerates the downward closure in card-lex order") {
    SimplicialComplex c = square();
    std::vector<Face> faces = c.all_faces();
    CHECK(faces.size() == 9);
    CHECK(faces.front() == Face());
    auto cl = closure(c);
    CHECK(std::vector<Face>(cl.begin(), cl.end()) == faces);
    CHECK(boundary_triangle().all_faces().size() == 7);
    CHECK(octahedron().all_faces().size() == 27);
}

TEST_CASE("minimal nonfaces match the exhaustive oracle") {
    auto check = [](const SimplicialComplex& c) {
        std::vector<Face> got = c.minimal_nonfaces();
        std::vector<Face> want = oracle_minimal_nonfaces(c);
        std::sort(want.begin(), want.end(), CardLexLess{});
        CHECK(got == want);
    };
    check(boundary_triangle());
    check(square());
    check(octahedron());
    check(SimplicialComplex::from_vertex_lists(5, {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}}));
}

TEST_CASE("minimal nonfaces, frozen values") {
    CHECK(boundary_triangle().minimal_nonfaces() ==
          std::vector<Face>{Face::from_vertices({1, 2, 3})});
    CHECK(square().minimal_nonfaces() ==
          std::vector<Face>{Face::from_vertices({1, 3}), Face::from_vertices({2, 4})});
    CHECK(octahedron().minimal_nonfaces() ==
          std::vector<Face>{Face::from_vertices({1, 4}), Face::from_vertices({2, 5}),
                            Face::from_vertices({3, 6})});
    CHECK(SimplicialComplex::from_vertex_lists(5, {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}})
              .minimal_nonfaces() ==
          std::vector<Face>{Face::from_vertices({1, 4}), Face::from_vertices({1, 5}),
                            Face::from_vertices({2, 5})});
}
