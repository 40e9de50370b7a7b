#ifndef KRING_GROEBNER_HPP
#define KRING_GROEBNER_HPP

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "kring/integer.hpp"
#include "kring/polynomial.hpp"

namespace kring {

/// Floor quotient for b > 0; the remainder a - q*b lies in [0, b).
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

inline Polynomial mul_term(const Int& c, const Monomial& m, const Polynomial& f) {
    Polynomial out(f.nvars(), f.order());
    for (const auto& [mf, cf] : f.terms()) out.add_term(mono_mul(m, mf), c * cf);
    return out;
}

/// Flips the sign so the leading coefficient is positive.
inline Polynomial normalize_sign(Polynomial p) {
    if (!p.is_zero() && p.leading_coefficient() < 0) return -p;
    return p;
}

/// Strong reduction over Z.  A term c*u is rewritten by g whenever lm(g)
/// divides u and the floor quotient of c by lc(g) is nonzero; the remainder
/// keeps every coefficient in [0, lc(g)) for all applicable g, which makes
/// the result a canonical coset representative once the reducers form a
/// strong Groebner basis.
inline Polynomial reduce(Polynomial p, const std::vector<Polynomial>& gens) {
    Polynomial rem(p.nvars(), p.order());
    while (!p.is_zero()) {
        const Monomial u = p.leading_monomial();
        const Int c = p.leading_coefficient();
        bool changed = false;
        for (const Polynomial& g : gens) {
            if (g.is_zero() || !mono_divides(g.leading_monomial(), u)) continue;
            Int q = floor_div(c, g.leading_coefficient());
            if (q == 0) continue;
            p.sub_mul(q, mono_div(u, g.leading_monomial()), g);
            changed = true;
            break;
        }
        if (changed) continue;
        rem.add_term(u, c);
        p.add_term(u, -c);
    }
    return rem;
}

/// S-polynomial: cancels leading terms using the lcm of the leading
/// coefficients (positive leading coefficients assumed).
inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    Monomial u = mono_lcm(f.leading_monomial(), g.leading_monomial());
    Int cl = lcm(f.leading_coefficient(), g.leading_coefficient());
    Polynomial out = mul_term(cl / f.leading_coefficient(),
                              mono_div(u, f.leading_monomial()), f);
    out -= mul_term(cl / g.leading_coefficient(), mono_div(u, g.leading_monomial()), g);
    return out;
}

/// G-polynomial: realizes gcd(lc f, lc g) on the lcm monomial via a Bezout
/// pair.  Redundant when one leading coefficient divides the other.
inline Polynomial g_polynomial(const Polynomial& f, const Polynomial& g) {
    Int a, b;
    ext_gcd(f.leading_coefficient(), g.leading_coefficient(), a, b);
    Monomial u = mono_lcm(f.leading_monomial(), g.leading_monomial());
    Polynomial out = mul_term(a, mono_div(u, f.leading_monomial()), f);
    out += mul_term(b, mono_div(u, g.leading_monomial()), g);
    return out;
}

struct GroebnerBasis {
    int nvars = 0;
    TermOrder order = TermOrder::degrevlex;
    std::vector<Polynomial> gens;  // auto-reduced, positive leading coefficients, ascending lm
    bool complete = false;

    bool unit_leading_coefficients() const {
        for (const Polynomial& g : gens)
            if (g.leading_coefficient() != 1) return false;
        return true;
    }
};

/// Canonical remainder modulo the basis; unique for a complete strong basis.
inline Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
    if (p.nvars() != gb.nvars || p.order() != gb.order)
        throw std::invalid_argument("polynomial context does not match the basis");
    return reduce(p, gb.gens);
}

namespace detail {

/// Pair-selection key: minimal lcm degree first, then the lcm monomial in
/// ascending term order, then the pair indices.
struct PairKey {
    int deg;
    Monomial lcm;
    int i, j;
    TermOrder order;

    bool operator<(const PairKey& o) const {
        if (deg != o.deg) return deg < o.deg;
        if (lcm != o.lcm) return term_greater(o.lcm, lcm, order);
        return std::tie(i, j) < std::tie(o.i, o.j);
    }
};

inline std::vector<Polynomial> autoreduce(std::vector<Polynomial> basis) {
    for (int round = 0; round < 1000; ++round) {
        bool changed = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            std::vector<Polynomial> others;
            others.reserve(basis.size() - 1);
            for (std::size_t j = 0; j < basis.size(); ++j)
                if (j != i) others.push_back(basis[j]);
            Polynomial h = normalize_sign(reduce(basis[i], others));
            if (h == basis[i]) continue;
            changed = true;
            if (h.is_zero()) {
                basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
                --i;
            } else {
                basis[i] = std::move(h);
            }
        }
        if (!changed) {
            std::sort(basis.begin(), basis.end(), [](const Polynomial& a, const Polynomial& b) {
                return term_greater(b.leading_monomial(), a.leading_monomial(), a.order());
            });
            return basis;
        }
    }
    throw std::logic_error("autoreduction failed to stabilize");
}

inline void close_under_pairs(std::vector<Polynomial>& basis, TermOrder order) {
    std::set<PairKey> queue;
    auto push_pairs = [&](int upto) {
        for (int i = 0; i < upto; ++i) {
            Monomial u = mono_lcm(basis[static_cast<std::size_t>(i)].leading_monomial(),
                                  basis[static_cast<std::size_t>(upto)].leading_monomial());
            queue.insert(PairKey{total_degree(u), std::move(u), i, upto, order});
        }
    };
    for (int i = 1; i < static_cast<int>(basis.size()); ++i) push_pairs(i);

    while (!queue.empty()) {
        PairKey k = *queue.begin();
        queue.erase(queue.begin());
        const Polynomial& f = basis[static_cast<std::size_t>(k.i)];
        const Polynomial& g = basis[static_cast<std::size_t>(k.j)];

        std::vector<Polynomial> candidates;
        candidates.push_back(s_polynomial(f, g));
        const Int& cf = f.leading_coefficient();
        const Int& cg = g.leading_coefficient();
        if (cg % cf != 0 && cf % cg != 0) candidates.push_back(g_polynomial(f, g));

        for (Polynomial& cand : candidates) {
            Polynomial h = normalize_sign(reduce(std::move(cand), basis));
            if (h.is_zero()) continue;
            basis.push_back(std::move(h));
            push_pairs(static_cast<int>(basis.size()) - 1);
        }
    }
}

inline bool closure_holds(const std::vector<Polynomial>& basis) {
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            const Polynomial& f = basis[i];
            const Polynomial& g = basis[j];
            if (!reduce(s_polynomial(f, g), basis).is_zero()) return false;
            const Int& cf = f.leading_coefficient();
            const Int& cg = g.leading_coefficient();
            if (cg % cf != 0 && cf % cg != 0)
                if (!reduce(g_polynomial(f, g), basis).is_zero()) return false;
        }
    return true;
}

}  // namespace detail

/// Buchberger completion over Z with S- and G-polynomials, followed by
/// autoreduction.  The returned basis is a strong Groebner basis: the
/// completeness flag is set only after the closure property has been
/// re-verified on the reduced basis.
inline GroebnerBasis buchberger_z(const std::vector<Polynomial>& gens, int nvars,
                                  TermOrder order) {
    std::vector<Polynomial> basis;
    for (const Polynomial& g : gens) {
        if (g.nvars() != nvars || g.order() != order)
            throw std::invalid_argument("generator context does not match the ring");
        if (!g.is_zero()) basis.push_back(normalize_sign(g));
    }

    for (int round = 0; round < 64; ++round) {
        detail::close_under_pairs(basis, order);
        basis = detail::autoreduce(std::move(basis));
        if (detail::closure_holds(basis)) {
            GroebnerBasis gb;
            gb.nvars = nvars;
            gb.order = order;
            gb.gens = std::move(basis);
            gb.complete = true;
            return gb;
        }
    }
    throw std::logic_error("Groebner completion failed to stabilize");
}

/// Ideal membership via the unique normal form.
inline bool ideal_contains(const GroebnerBasis& gb, const Polynomial& p) {
    return normal_form(p, gb).is_zero();
}

/// Mutual containment of two ideals presented by complete bases.
inline bool same_ideal(const GroebnerBasis& a, const GroebnerBasis& b) {
    for (const Polynomial& g : a.gens)
        if (!ideal_contains(b, g)) return false;
    for (const Polynomial& g : b.gens)
        if (!ideal_contains(a, g)) return false;
    return true;
}

}  // namespace kring

#endif  // KRING_GROEBNER_HPP
