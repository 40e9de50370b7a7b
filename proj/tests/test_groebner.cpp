#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "kring/groebner.hpp"

using kring::GroebnerBasis;
using kring::Int;
using kring::Monomial;
using kring::Polynomial;
using kring::TermOrder;

namespace {

constexpr TermOrder kOrd = TermOrder::degrevlex;

Polynomial poly(int nvars, std::vector<std::pair<int, Monomial>> terms,
                TermOrder order = kOrd) {
    Polynomial p(nvars, order);
    for (auto& [c, m] : terms) p.add_term(m, c);
    return p;
}

Polynomial random_poly(std::mt19937& rng, int nvars, TermOrder order, int max_terms = 3) {
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> expo(0, 2);
    Polynomial p(nvars, order);
    int terms = 1 + int(rng() % std::size_t(max_terms));
    for (int t = 0; t < terms; ++t) {
        Monomial m(std::size_t(nvars), 0);
        for (auto& e : m) e = expo(rng);
        p.add_term(m, coef(rng));
    }
    return p;
}

}  // namespace

TEST_CASE("floor division keeps remainders nonnegative") {
    CHECK(kring::floor_div(7, 3) == 2);
    CHECK(kring::floor_div(6, 3) == 2);
    CHECK(kring::floor_div(-7, 3) == -3);
    CHECK(kring::floor_div(-6, 3) == -2);
    CHECK(kring::floor_div(0, 5) == 0);
    for (int a = -20; a <= 20; ++a)
        for (int b = 1; b <= 7; ++b) {
            Int q = kring::floor_div(a, b);
            Int r = Int(a) - q * b;
            CHECK(r >= 0);
            CHECK(r < b);
        }
}

TEST_CASE("strong reduction produces coefficients in [0, lc)") {
    auto g = poly(1, {{3, {1}}});  // 3*v1
    CHECK(kring::reduce(poly(1, {{4, {1}}}), {g}) == poly(1, {{1, {1}}}));
    CHECK(kring::reduce(poly(1, {{-1, {1}}}), {g}) == poly(1, {{2, {1}}}));
    CHECK(kring::reduce(poly(1, {{6, {1}}}), {g}).is_zero());
    CHECK(kring::reduce(poly(1, {{2, {1}}}), {g}) == poly(1, {{2, {1}}}));

    // reduction acts on lower terms once the leading term is irreducible
    auto f = poly(2, {{1, {2, 0}}, {5, {0, 1}}});  // v1^2 + 5*v2
    auto h = poly(2, {{2, {0, 1}}});               // 2*v2
    CHECK(kring::reduce(f, {h}) == poly(2, {{1, {2, 0}}, {1, {0, 1}}}));
}

TEST_CASE("S- and G-polynomials, frozen") {
    auto f = poly(3, {{2, {1, 1, 0}}, {-1, {0, 0, 1}}});  // 2*v1*v2 - v3
    auto g = poly(3, {{3, {0, 2, 0}}, {1, {1, 0, 0}}});   // 3*v2^2 + v1
    CHECK(kring::s_polynomial(f, g) == poly(3, {{-2, {2, 0, 0}}, {-3, {0, 1, 1}}}));

    auto a = poly(1, {{2, {1}}});
    auto b = poly(1, {{3, {1}}});
    Polynomial gp = kring::normalize_sign(kring::g_polynomial(a, b));
    CHECK(gp.leading_monomial() == Monomial{1});
    CHECK(gp.leading_coefficient() == 1);
}

TEST_CASE("buchberger on the projective plane ideal, frozen basis") {
    std::vector<Polynomial> gens = {
        poly(3, {{1, {1, 1, 1}}}),               // v1*v2*v3
        poly(3, {{1, {0, 0, 1}}, {-1, {1, 0, 0}}}),  // v3 - v1
        poly(3, {{1, {0, 0, 1}}, {-1, {0, 1, 0}}}),  // v3 - v2
    };
    GroebnerBasis gb = kring::buchberger_z(gens, 3, kOrd);
    REQUIRE(gb.complete);
    CHECK(gb.unit_leading_coefficients());
    REQUIRE(gb.gens.size() == 3);
    CHECK(gb.gens[0] == poly(3, {{1, {0, 1, 0}}, {-1, {0, 0, 1}}}));  // v2 - v3
    CHECK(gb.gens[1] == poly(3, {{1, {1, 0, 0}}, {-1, {0, 0, 1}}}));  // v1 - v3
    CHECK(gb.gens[2] == poly(3, {{1, {0, 0, 3}}}));                   // v3^3

    CHECK(kring::normal_form(poly(3, {{1, {1, 0, 0}}}), gb) == poly(3, {{1, {0, 0, 1}}}));
    CHECK(kring::normal_form(poly(3, {{1, {0, 0, 3}}}), gb).is_zero());
    for (const Polynomial& g : gens) CHECK(kring::ideal_contains(gb, g));
}

TEST_CASE("coefficient arithmetic in the basis") {
    SECTION("gcd of leading coefficients enters the basis") {
        GroebnerBasis gb =
            kring::buchberger_z({poly(1, {{2, {1}}}), poly(1, {{3, {1}}})}, 1, kOrd);
        REQUIRE(gb.gens.size() == 1);
        CHECK(gb.gens[0] == poly(1, {{1, {1}}}));
    }
    SECTION("2*v1 and v1^2 stay separate generators") {
        GroebnerBasis gb =
            kring::buchberger_z({poly(1, {{2, {1}}}), poly(1, {{1, {2}}})}, 1, kOrd);
        REQUIRE(gb.gens.size() == 2);
        CHECK(gb.gens[0] == poly(1, {{2, {1}}}));
        CHECK(gb.gens[1] == poly(1, {{1, {2}}}));
        CHECK_FALSE(gb.unit_leading_coefficients());
        CHECK(kring::normal_form(poly(1, {{1, {1}}}), gb) == poly(1, {{1, {1}}}));
        CHECK(kring::normal_form(poly(1, {{3, {1}}}), gb) == poly(1, {{1, {1}}}));
        CHECK(kring::normal_form(poly(1, {{1, {2}}}), gb).is_zero());
        CHECK(kring::normal_form(poly(1, {{5, {3}}}), gb).is_zero());
    }
}

TEST_CASE("degenerate inputs") {
    GroebnerBasis empty = kring::buchberger_z({}, 2, kOrd);
    CHECK(empty.complete);
    CHECK(empty.gens.empty());
    CHECK(kring::normal_form(poly(2, {{7, {1, 1}}}), empty) == poly(2, {{7, {1, 1}}}));

    GroebnerBasis zero = kring::buchberger_z({Polynomial::zero(2, kOrd)}, 2, kOrd);
    CHECK(zero.gens.empty());

    CHECK_THROWS_AS(kring::normal_form(poly(3, {{1, {0, 0, 1}}}), empty),
                    std::invalid_argument);
    CHECK_THROWS_AS(kring::buchberger_z({poly(3, {{1, {0, 0, 1}}})}, 2, kOrd),
                    std::invalid_argument);
}

TEST_CASE("mutual containment of equal ideals") {
    GroebnerBasis a = kring::buchberger_z(
        {poly(3, {{1, {1, 1, 1}}}), poly(3, {{1, {0, 0, 1}}, {-1, {1, 0, 0}}}),
         poly(3, {{1, {0, 0, 1}}, {-1, {0, 1, 0}}})},
        3, kOrd);
    GroebnerBasis b = kring::buchberger_z(
        {poly(3, {{1, {3, 0, 0}}}), poly(3, {{1, {1, 0, 0}}, {-1, {0, 1, 0}}}),
         poly(3, {{1, {0, 1, 0}}, {-1, {0, 0, 1}}})},
        3, kOrd);
    CHECK(kring::same_ideal(a, b));

    GroebnerBasis c = kring::buchberger_z({poly(3, {{1, {1, 0, 0}}})}, 3, kOrd);
    CHECK_FALSE(kring::same_ideal(a, c));
}

TEST_CASE("normal form is a ring homomorphism onto representatives") {
    std::mt19937 rng(2718281);
    for (TermOrder order : {TermOrder::degrevlex, TermOrder::deglex}) {
        for (int trial = 0; trial < 12; ++trial) {
            std::vector<Polynomial> gens;
            int ng = 1 + int(rng() % 3);
            for (int i = 0; i < ng; ++i) gens.push_back(random_poly(rng, 2, order));
            GroebnerBasis gb = kring::buchberger_z(gens, 2, order);
            REQUIRE(gb.complete);

            for (const Polynomial& g : gens) CHECK(kring::ideal_contains(gb, g));

            Polynomial p = random_poly(rng, 2, order);
            Polynomial q = random_poly(rng, 2, order);

            // idempotence
            CHECK(kring::normal_form(kring::normal_form(p, gb), gb) ==
                  kring::normal_form(p, gb));
            // coset invariance: adding multiples of generators changes nothing
            Polynomial shifted = p;
            for (const Polynomial& g : gens) shifted += random_poly(rng, 2, order) * g;
            CHECK(kring::normal_form(shifted, gb) == kring::normal_form(p, gb));
            // compatibility with ring operations
            CHECK(kring::normal_form(p + q, gb) ==
                  kring::normal_form(kring::normal_form(p, gb) + kring::normal_form(q, gb), gb));
            CHECK(kring::normal_form(p * q, gb) ==
                  kring::normal_form(kring::normal_form(p, gb) * kring::normal_form(q, gb), gb));
        }
    }
}

TEST_CASE("closure property holds for the returned basis") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Polynomial> gens;
        int ng = 2 + int(rng() % 2);
        for (int i = 0; i < ng; ++i) gens.push_back(random_poly(rng, 2, kOrd, 2));
        GroebnerBasis gb = kring::buchberger_z(gens, 2, kOrd);
        for (std::size_t i = 0; i < gb.gens.size(); ++i)
            for (std::size_t j = i + 1; j < gb.gens.size(); ++j) {
                CHECK(kring::reduce(kring::s_polynomial(gb.gens[i], gb.gens[j]), gb.gens)
                          .is_zero());
                CHECK(kring::reduce(kring::g_polynomial(gb.gens[i], gb.gens[j]), gb.gens)
                          .is_zero());
            }
    }
}
