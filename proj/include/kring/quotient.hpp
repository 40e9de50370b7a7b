#ifndef KRING_QUOTIENT_HPP
#define KRING_QUOTIENT_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kring/groebner.hpp"
#include "kring/polynomial.hpp"
#include "kring/smith.hpp"

namespace kring {

/// Z-module structure of Z[v_1..v_m]/I read off a complete strong basis.
///
/// The rank is exact in every case: a strong basis over Z is a Groebner
/// basis over Q with the same leading monomials, so the rank equals
/// the number of monomials outside the leading-monomial staircase.  When
/// every leading coefficient is 1 those monomials are moreover a Z-basis
/// (via_standard_monomials) and the module is free.  Otherwise freeness is
/// not decided here; the truncation at degree <= bound scans for torsion
/// (any torsion it finds embeds into the full quotient and disproves
/// freeness), and a clean scan leaves the proof to the basis certificate.
struct QuotientModule {
    bool via_standard_monomials = false;
    bool finite = true;  // false: the staircase leaves infinitely many monomials
    bool free = false;
    long rank = 0;
    std::vector<Monomial> standard_monomials;  // ascending term order; empty off the unit route
    std::vector<Int> torsion;                  // invariant factors > 1 within the scan
    int bound_used = 0;
    std::string note;
};

/// Monomials not divisible by any leading monomial of the basis.  Requires
/// every variable to carry a pure-power leading monomial (else the set is
/// infinite and nullopt is returned).  Leading coefficients play no role;
/// the set counts the rank in general and is a Z-basis for unit ones.
inline std::optional<std::vector<Monomial>> standard_monomials(const GroebnerBasis& gb) {
    const int m = gb.nvars;
    std::vector<int> cap(static_cast<std::size_t>(m), -1);
    for (const Polynomial& g : gb.gens) {
        const Monomial& u = g.leading_monomial();
        int support = -1;
        bool pure = true;
        for (int j = 0; j < m; ++j)
            if (u[static_cast<std::size_t>(j)] > 0) {
                if (support >= 0) pure = false;
                support = j;
            }
        if (pure && support >= 0) {
            int e = u[static_cast<std::size_t>(support)];
            if (cap[static_cast<std::size_t>(support)] < 0 ||
                e < cap[static_cast<std::size_t>(support)])
                cap[static_cast<std::size_t>(support)] = e;
        }
    }
    for (int c : cap)
        if (c < 0) return std::nullopt;

    std::vector<Monomial> out;
    Monomial cur(static_cast<std::size_t>(m), 0);
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == m) {
            for (const Polynomial& g : gb.gens)
                if (mono_divides(g.leading_monomial(), cur)) return;
            out.push_back(cur);
            return;
        }
        for (int e = 0; e < cap[static_cast<std::size_t>(pos)]; ++e) {
            cur[static_cast<std::size_t>(pos)] = e;
            self(self, pos + 1);
        }
        cur[static_cast<std::size_t>(pos)] = 0;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), [&gb](const Monomial& a, const Monomial& b) {
        return term_greater(b, a, gb.order);
    });
    return out;
}

struct TruncatedModule {
    long rank = 0;
    std::vector<Int> torsion;
    long monomial_count = 0;
};

/// Presents the quotient on all monomials of degree <= bound.  The relation
/// lattice is spanned by m*g for g in the basis and monomials m with
/// deg m + deg g <= bound; for a degree-compatible order this lattice equals
/// the ideal's intersection with the truncation, so the truncated module
/// embeds into the full quotient.
inline TruncatedModule truncated_module(const GroebnerBasis& gb, int bound) {
    std::vector<Monomial> mons = monomials_up_to(gb.nvars, bound, gb.order);
    std::map<Monomial, std::size_t, TermGreater> index{TermGreater{gb.order}};
    for (std::size_t i = 0; i < mons.size(); ++i) index.emplace(mons[i], i);

    Matrix rows;
    for (const Polynomial& g : gb.gens) {
        int dg = g.degree();
        if (dg > bound) continue;
        for (const Monomial& mu : monomials_up_to(gb.nvars, bound - dg, gb.order)) {
            std::vector<Int> row(mons.size(), 0);
            for (const auto& [m, c] : g.terms()) row[index.at(mono_mul(mu, m))] = c;
            rows.push_back(std::move(row));
        }
    }

    LatticeInvariants inv = lattice_invariants(std::move(rows), mons.size());
    TruncatedModule out;
    out.monomial_count = static_cast<long>(mons.size());
    out.rank = out.monomial_count - static_cast<long>(inv.rank);
    for (const Int& d : inv.factors)
        if (d > 1) out.torsion.push_back(d);
    return out;
}

/// See QuotientModule.  bound applies only to the torsion scan.
inline QuotientModule quotient_module(const GroebnerBasis& gb, int bound) {
    if (bound < 1) throw std::invalid_argument("bound must be >= 1");
    QuotientModule q;
    q.bound_used = bound;

    std::optional<std::vector<Monomial>> box = standard_monomials(gb);
    if (!box) {
        q.finite = false;
        if (gb.unit_leading_coefficients()) {
            q.via_standard_monomials = true;
            q.free = true;
            q.note = "some variable has no pure-power leading monomial; the quotient is free "
                     "of infinite rank";
        } else {
            q.note = "some variable has no pure-power leading monomial; the quotient has "
                     "infinite rank and freeness is undetermined";
        }
        return q;
    }
    q.rank = static_cast<long>(box->size());

    if (gb.unit_leading_coefficients()) {
        q.via_standard_monomials = true;
        q.standard_monomials = std::move(*box);
        q.free = true;
        return q;
    }

    TruncatedModule scan = truncated_module(gb, bound);
    q.torsion = scan.torsion;
    q.free = scan.torsion.empty();
    q.note = q.free ? "no torsion within degree <= " + std::to_string(bound) +
                          "; freeness rests on the basis certificate"
                    : "torsion within degree <= " + std::to_string(bound);
    return q;
}

}  // namespace kring

#endif  // KRING_QUOTIENT_HPP
