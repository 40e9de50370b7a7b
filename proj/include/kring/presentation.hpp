#ifndef KRING_PRESENTATION_HPP
#define KRING_PRESENTATION_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "kring/char_matrix.hpp"
#include "kring/face.hpp"
#include "kring/groebner.hpp"
#include "kring/polynomial.hpp"
#include "kring/quotient.hpp"
#include "kring/shelling.hpp"
#include "kring/simplicial_complex.hpp"
#include "kring/smith.hpp"

namespace kring {

/// Raised when the combinatorial hypotheses fail: the nerve is not a valid
/// pure complex, the characteristic matrix violates unimodularity on some
/// face, or no shelling exists.  Distinct from input/shape errors, which use
/// std::invalid_argument.
class hypothesis_error : public std::runtime_error {
  public:
    enum class Kind { complex_invalid, nonsingularity, shelling };

    hypothesis_error(Kind kind, std::string message, std::vector<Face> witnesses = {})
        : std::runtime_error(std::move(message)), kind_(kind), witnesses_(std::move(witnesses)) {}

    Kind kind() const { return kind_; }
    const std::vector<Face>& witnesses() const { return witnesses_; }

  private:
    Kind kind_;
    std::vector<Face> witnesses_;
};

/// The combinatorial input: nerve complex plus characteristic matrix, with
/// optional facet labels (one per vertex of the nerve).
struct ManifoldSpec {
    SimplicialComplex complex;
    Matrix lambda;
    std::vector<std::string> names;

    int m() const { return complex.num_vertices(); }
    int n() const { return complex.dim() + 1; }
    long d() const { return static_cast<long>(complex.facets().size()); }
};

/// Relations use factors (1 - v_j) by default; the plus convention applies
/// the ring involution v_j -> -v_j and uses (1 + v_j).  Ranks and
/// isomorphism type are unaffected.
enum class SignConvention { minus, plus };

inline const char* sign_convention_name(SignConvention s) {
    return s == SignConvention::minus ? "minus" : "plus";
}

struct Options {
    TermOrder order = TermOrder::degrevlex;
    SignConvention sign = SignConvention::minus;
    std::vector<std::vector<Int>> extra_t;
    int bound = 0;  // 0 selects the default n+2

    // Degree bound for the torsion scan and for the graded cohomology walk.
    // Shelling monomials have degree <= n and the graded ranks vanish above
    // degree n, so n+2 leaves one spare degree past everything of interest.
    int effective_bound(int n, int /*m*/) const { return bound > 0 ? bound : n + 2; }
};

/// Throws hypothesis_error if the complex fails validation or lambda fails
/// the face condition; throws std::invalid_argument on shape mismatch.
inline void require_hypotheses(const ManifoldSpec& spec) {
    ValidationReport v = spec.complex.validate();
    if (!v.ok) {
        std::string msg = "nerve validation failed:";
        for (const Violation& viol : v.violations) msg += " [" + viol.message + "]";
        throw hypothesis_error(hypothesis_error::Kind::complex_invalid, msg);
    }
    NonsingularityReport ns = validate_nonsingular(spec.complex, spec.lambda);
    if (!ns.ok) {
        std::string msg = "characteristic matrix fails unimodularity on faces:";
        for (const Face& f : ns.violations) msg += " " + f.to_string();
        throw hypothesis_error(hypothesis_error::Kind::nonsingularity, msg, ns.violations);
    }
}

/// One squarefree monomial per minimal nonface, in card-lex order of the
/// nonfaces.
inline std::vector<Polynomial> sr_relations(const SimplicialComplex& complex, TermOrder order) {
    std::vector<Polynomial> out;
    const int m = complex.num_vertices();
    for (const Face& f : complex.minimal_nonfaces())
        out.push_back(Polynomial::monomial(m, order, mono_from_face(m, f)));
    return out;
}

/// The type (ii) relation for the covector t:
///   prod over <t,a_j> > 0 of (1 -+ v_j)^{<t,a_j>}
/// minus
///   prod over <t,a_j> < 0 of (1 -+ v_j)^{-<t,a_j>},
/// fully expanded.  Zero when t pairs to zero with every row.
inline Polynomial t_relation(const Matrix& lambda, const std::vector<Int>& t, TermOrder order,
                             SignConvention sign) {
    const int m = static_cast<int>(row_count(lambda));
    const Int unit = sign == SignConvention::minus ? Int(-1) : Int(1);
    Polynomial pos = Polynomial::constant(m, order, 1);
    Polynomial neg = pos;
    for (int j = 1; j <= m; ++j) {
        Int c = pairing(t, lambda[static_cast<std::size_t>(j - 1)]);
        if (c == 0) continue;
        Polynomial factor = Polynomial::constant(m, order, 1);
        factor.add_term(mono_variable(m, j), unit);
        int e = static_cast<int>(to_long_checked(abs(c)));
        if (c > 0)
            pos = pos * factor.pow(e);
        else
            neg = neg * factor.pow(e);
    }
    return pos - neg;
}

/// Normal form of the type (ii) relation for t, multiplying factor by
/// factor with reduction in between so intermediates stay no larger than
/// the standard-monomial support.  Agrees with
/// normal_form(t_relation(...), gb) by the multiplicativity of normal forms.
inline Polynomial t_relation_normal_form(const Matrix& lambda, const std::vector<Int>& t,
                                         const GroebnerBasis& gb, SignConvention sign) {
    const int m = static_cast<int>(row_count(lambda));
    const Int unit = sign == SignConvention::minus ? Int(-1) : Int(1);
    Polynomial pos = Polynomial::constant(m, gb.order, 1);
    Polynomial neg = pos;
    for (int j = 1; j <= m; ++j) {
        Int c = pairing(t, lambda[static_cast<std::size_t>(j - 1)]);
        if (c == 0) continue;
        Polynomial factor = Polynomial::constant(m, gb.order, 1);
        factor.add_term(mono_variable(m, j), unit);
        int e = static_cast<int>(to_long_checked(abs(c)));
        Polynomial fp = normal_form(factor.pow(e), gb);
        if (c > 0)
            pos = normal_form(pos * fp, gb);
        else
            neg = normal_form(neg * fp, gb);
    }
    return normal_form(pos - neg, gb);
}

/// The covectors whose relations generate the default ideal: e_1..e_n, then
/// any extras.
inline std::vector<std::vector<Int>> default_covectors(int n,
                                                       const std::vector<std::vector<Int>>& extra) {
    std::vector<std::vector<Int>> ts;
    for (int k = 0; k < n; ++k) {
        std::vector<Int> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(k)] = 1;
        ts.push_back(std::move(e));
    }
    for (const std::vector<Int>& t : extra) {
        if (static_cast<int>(t.size()) != n)
            throw std::invalid_argument("extra covector has length " + std::to_string(t.size()) +
                                        ", expected " + std::to_string(n));
        ts.push_back(t);
    }
    return ts;
}

/// Certifies that the shelling monomials form a Z-basis.  On the
/// standard-monomial route the square matrix expressing their normal forms
/// over the standard monomials must have determinant +-1; otherwise the
/// generation route proves freeness directly and any basis identification
/// is unimodular.
struct BasisCertificate {
    bool available = false;
    bool ok = false;
    bool via_generation = false;  // certified by surjectivity instead of coordinates
    Matrix change_of_basis;  // column i = coordinates of basis monomial i; unit route only
    Int det = 0;
};

/// c[i][j][k] with v_{T_i} * v_{T_j} = sum_k c * v_{T_k}, stored flat as
/// (i, j, k, c) with i <= j and zero entries omitted; 1-based indices in
/// shelling order.
struct StructureConstants {
    long d = 0;
    std::vector<std::tuple<int, int, int, Int>> entries;

    Int at(int i, int j, int k) const {
        if (i > j) std::swap(i, j);
        for (const auto& [a, b, c, val] : entries)
            if (a == i && b == j && c == k) return val;
        return 0;
    }
};

struct RingPresentation {
    int nvars = 0;
    TermOrder order = TermOrder::degrevlex;
    SignConvention sign = SignConvention::minus;
    long d = 0;

    std::vector<Polynomial> sr_rels;
    std::vector<std::pair<std::vector<Int>, Polynomial>> t_rels;
    GroebnerBasis gb;
    QuotientModule module;
    Shelling shelling;
    std::vector<Monomial> shelling_basis;  // v_{T_i} in shelling order

    BasisCertificate certificate;
    StructureConstants constants;

    bool conforming = false;
    std::string diagnostics;
};

namespace detail {

inline std::vector<Int> coords_over_standard(const Polynomial& p,
                                             const std::vector<Monomial>& standard,
                                             const std::map<Monomial, std::size_t, TermGreater>& index) {
    std::vector<Int> out(standard.size(), 0);
    for (const auto& [m, c] : p.terms()) {
        auto it = index.find(m);
        if (it == index.end())
            throw std::logic_error("normal form contains a non-standard monomial " +
                                   mono_to_string(m));
        out[it->second] = c;
    }
    return out;
}

}  // namespace detail

/// Change-of-basis certificate for the shelling monomials.
inline BasisCertificate shelling_basis_check(const GroebnerBasis& gb, const QuotientModule& module,
                                             const std::vector<Monomial>& basis_monomials) {
    BasisCertificate cert;
    if (!module.via_standard_monomials || !module.finite) return cert;
    if (static_cast<long>(basis_monomials.size()) != module.rank) return cert;
    cert.available = true;

    std::map<Monomial, std::size_t, TermGreater> index{TermGreater{gb.order}};
    for (std::size_t i = 0; i < module.standard_monomials.size(); ++i)
        index.emplace(module.standard_monomials[i], i);

    const std::size_t d = basis_monomials.size();
    cert.change_of_basis.assign(d, std::vector<Int>(d, 0));
    for (std::size_t i = 0; i < d; ++i) {
        Polynomial nf = normal_form(
            Polynomial::monomial(gb.nvars, gb.order, basis_monomials[i]), gb);
        std::vector<Int> col = detail::coords_over_standard(nf, module.standard_monomials, index);
        for (std::size_t r = 0; r < d; ++r) cert.change_of_basis[r][i] = col[r];
    }
    cert.det = determinant(cert.change_of_basis);
    cert.ok = cert.det == 1 || cert.det == -1;
    return cert;
}

/// Multiplication tensor of the certified basis.
inline StructureConstants structure_constants(const GroebnerBasis& gb, const QuotientModule& module,
                                              const std::vector<Monomial>& basis_monomials,
                                              const BasisCertificate& cert) {
    if (!cert.available || !cert.ok)
        throw std::invalid_argument("structure constants need a certified basis");
    StructureConstants sc;
    sc.d = static_cast<long>(basis_monomials.size());

    std::map<Monomial, std::size_t, TermGreater> index{TermGreater{gb.order}};
    for (std::size_t i = 0; i < module.standard_monomials.size(); ++i)
        index.emplace(module.standard_monomials[i], i);
    Matrix inv = inverse_unimodular(cert.change_of_basis);

    const int d = static_cast<int>(basis_monomials.size());
    for (int i = 1; i <= d; ++i)
        for (int j = i; j <= d; ++j) {
            Monomial prod = mono_mul(basis_monomials[static_cast<std::size_t>(i - 1)],
                                     basis_monomials[static_cast<std::size_t>(j - 1)]);
            Polynomial nf = normal_form(Polynomial::monomial(gb.nvars, gb.order, prod), gb);
            std::vector<Int> y =
                detail::coords_over_standard(nf, module.standard_monomials, index);
            for (int k = 1; k <= d; ++k) {
                Int c = 0;
                for (std::size_t r = 0; r < y.size(); ++r)
                    c += inv[static_cast<std::size_t>(k - 1)][r] * y[r];
                if (c != 0) sc.entries.emplace_back(i, j, k, std::move(c));
            }
        }
    return sc;
}

struct GenerationOutcome {
    BasisCertificate cert;
    StructureConstants constants;
};

/// Fallback certificate for a strong basis with non-unit leading
/// coefficients, where standard monomials are no Z-basis.  Exactness of the
/// degree truncation (the relation lattice at degree <= B is the ideal's
/// full intersection with that truncation, so the truncated quotient embeds
/// into the full one) gives two facts checkable by integer linear algebra:
///
///   - the truncated quotient at B = maxdeg(basis) + 1 must have rank d,
///     else the basis monomials are already dependent inside it;
///   - if every product (variable) * (basis monomial) is an integer
///     combination of the basis modulo the lattice, the basis spans the
///     whole quotient (induction over monomial degree).
///
/// Spanned by d elements and of rank >= d, the quotient is then free with
/// the given monomials as a basis.  Membership is solved on an echelon of
/// the lattice augmented with tag columns, one per basis monomial: reducing
/// a target vector through the main columns either fails (provably not in
/// span + lattice) or leaves the basis coefficients in the tags.  Products
/// of basis pairs are then chains of the variable multiplication operators,
/// which yields the structure constants.
inline GenerationOutcome generation_certificate(const GroebnerBasis& gb,
                                                const QuotientModule& module,
                                                const std::vector<Monomial>& basis_monomials) {
    GenerationOutcome out;
    if (!module.finite || !module.free) return out;
    if (static_cast<long>(basis_monomials.size()) != module.rank) return out;

    const int nv = gb.nvars;
    const std::size_t d = basis_monomials.size();
    int maxdeg = 0;
    for (const Monomial& b : basis_monomials) maxdeg = std::max(maxdeg, total_degree(b));
    const int bound = maxdeg + 1;  // covers every variable * basis product

    std::vector<Monomial> mons = monomials_up_to(nv, bound, gb.order);
    std::map<Monomial, std::size_t, TermGreater> index{TermGreater{gb.order}};
    for (std::size_t i = 0; i < mons.size(); ++i) index.emplace(mons[i], i);
    const std::size_t M = mons.size();

    Matrix rows;
    for (const Polynomial& g : gb.gens) {
        int dg = g.degree();
        if (dg > bound) continue;
        for (const Monomial& mu : monomials_up_to(nv, bound - dg, gb.order)) {
            std::vector<Int> row(M + d, 0);
            for (const auto& [m, c] : g.terms()) row[index.at(mono_mul(mu, m))] = c;
            rows.push_back(std::move(row));
        }
    }
    // tag columns are zero on lattice rows, so this is the lattice rank
    Matrix ech = echelon_rows(std::move(rows), M + d);
    const std::size_t lattice_rank = ech.size();

    out.cert.available = true;
    out.cert.via_generation = true;
    if (M - lattice_rank != d) return out;  // basis dependent in the truncation; ok stays false

    for (std::size_t k = 0; k < d; ++k) {
        std::vector<Int> row(M + d, 0);
        row[index.at(basis_monomials[k])] = 1;
        row[M + k] = 1;
        ech.push_back(std::move(row));
    }
    ech = echelon_rows(std::move(ech), M + d);
    std::vector<std::size_t> pivot_of_col(M + d, static_cast<std::size_t>(-1));
    for (std::size_t r = 0; r < ech.size(); ++r) {
        std::size_t lead = 0;
        while (lead < M + d && ech[r][lead] == 0) ++lead;
        pivot_of_col[lead] = r;
    }

    // b is in span(basis) + lattice iff the divisibility walk clears the
    // main columns; the tags then hold minus the basis coefficients
    auto coords = [&](const Monomial& target) -> std::optional<std::vector<Int>> {
        std::vector<Int> v(M + d, 0);
        v[index.at(target)] = 1;
        for (std::size_t c = 0; c < M; ++c) {
            if (v[c] == 0) continue;
            std::size_t p = pivot_of_col[c];
            if (p == static_cast<std::size_t>(-1) || v[c] % ech[p][c] != 0) return std::nullopt;
            Int q = v[c] / ech[p][c];
            for (std::size_t j = c; j < M + d; ++j)
                if (ech[p][j] != 0) v[j] -= q * ech[p][j];
        }
        std::vector<Int> c(d);
        for (std::size_t k = 0; k < d; ++k) c[k] = -v[M + k];
        return c;
    };

    // multiplication operator of each variable on the candidate basis
    std::vector<Matrix> mult(static_cast<std::size_t>(nv));
    for (int j = 0; j < nv; ++j) {
        Monomial var = mono_one(nv);
        var[static_cast<std::size_t>(j)] = 1;
        Matrix op(d, std::vector<Int>(d, 0));
        for (std::size_t i = 0; i < d; ++i) {
            auto c = coords(mono_mul(var, basis_monomials[i]));
            if (!c) return out;  // provably outside the span; ok stays false
            for (std::size_t r = 0; r < d; ++r) op[r][i] = (*c)[r];
        }
        mult[static_cast<std::size_t>(j)] = std::move(op);
    }
    out.cert.ok = true;
    out.cert.det = 1;  // a surjection Z^d -> Z^d is unimodular in any coordinates

    auto apply = [&](const Matrix& op, const std::vector<Int>& x) {
        std::vector<Int> y(d, 0);
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t s = 0; s < d; ++s)
                if (op[r][s] != 0 && x[s] != 0) y[r] += op[r][s] * x[s];
        return y;
    };

    out.constants.d = static_cast<long>(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
            std::vector<Int> x(d, 0);
            x[i] = 1;
            for (int var = 0; var < nv; ++var)
                for (int e = 0; e < basis_monomials[j][static_cast<std::size_t>(var)]; ++e)
                    x = apply(mult[static_cast<std::size_t>(var)], x);
            for (std::size_t k = 0; k < d; ++k)
                if (x[k] != 0)
                    out.constants.entries.emplace_back(static_cast<int>(i) + 1,
                                                       static_cast<int>(j) + 1,
                                                       static_cast<int>(k) + 1, x[k]);
        }
    return out;
}

/// Full K-ring pipeline: hypotheses, shelling, ideal, strong basis, module,
/// shelling-basis certificate, structure constants.  Hypothesis failures
/// throw; a rank or freeness failure returns a presentation flagged
/// non-conforming with diagnostics.
inline RingPresentation k_presentation(const ManifoldSpec& spec, const Options& options = {}) {
    require_hypotheses(spec);

    RingPresentation pres;
    pres.nvars = spec.m();
    pres.order = options.order;
    pres.sign = options.sign;
    pres.d = spec.d();

    std::optional<Shelling> sh = find_shelling(spec.complex);
    if (!sh)
        throw hypothesis_error(hypothesis_error::Kind::shelling,
                               "the nerve admits no shelling order");
    pres.shelling = std::move(*sh);

    pres.sr_rels = sr_relations(spec.complex, options.order);
    std::vector<Polynomial> gens = pres.sr_rels;
    for (const std::vector<Int>& t : default_covectors(spec.n(), options.extra_t)) {
        Polynomial rel = t_relation(spec.lambda, t, options.order, options.sign);
        pres.t_rels.emplace_back(t, rel);
        gens.push_back(std::move(rel));
    }

    pres.gb = buchberger_z(gens, pres.nvars, options.order);
    pres.module = quotient_module(pres.gb, options.effective_bound(spec.n(), spec.m()));

    for (const Face& r : pres.shelling.restrictions)
        pres.shelling_basis.push_back(mono_from_face(pres.nvars, r));

    if (!pres.module.finite) {
        pres.diagnostics = "quotient has infinite rank; " + pres.module.note;
        return pres;
    }
    if (!pres.module.free || pres.module.rank != pres.d) {
        pres.diagnostics = "quotient is not free of rank d: rank " +
                           std::to_string(pres.module.rank) + " vs d = " + std::to_string(pres.d);
        if (!pres.module.torsion.empty()) {
            pres.diagnostics += "; torsion factors:";
            for (const Int& f : pres.module.torsion) pres.diagnostics += " " + f.str();
        }
        return pres;
    }

    pres.certificate = shelling_basis_check(pres.gb, pres.module, pres.shelling_basis);
    if (pres.certificate.available) {
        if (pres.certificate.ok)
            pres.constants = structure_constants(pres.gb, pres.module, pres.shelling_basis,
                                                 pres.certificate);
    } else {
        GenerationOutcome gen =
            generation_certificate(pres.gb, pres.module, pres.shelling_basis);
        pres.certificate = std::move(gen.cert);
        if (pres.certificate.ok) pres.constants = std::move(gen.constants);
    }

    if (!pres.certificate.available) {
        pres.diagnostics = "basis certificate unavailable for this quotient";
        return pres;
    }
    if (!pres.certificate.ok) {
        pres.diagnostics =
            pres.certificate.via_generation
                ? "shelling basis certificate failed: some product of a variable with a basis "
                  "element is not an integer combination of the basis"
                : "shelling basis certificate failed: change-of-basis determinant " +
                      pres.certificate.det.str();
        return pres;
    }
    pres.conforming = true;
    return pres;
}

/// Graded companion: Z[v]/(SR + the degree-2 linearizations sum_j <t,a_j> v_j).
/// Computed degree by degree; once some degree vanishes exactly, all higher
/// degrees vanish (the algebra is generated in degree one).
struct CohomologyPresentation {
    int nvars = 0;
    std::vector<Polynomial> sr_rels;
    std::vector<Polynomial> linear_rels;
    std::vector<long> graded_ranks;  // index k holds the rank in degree 2k
    std::vector<Int> torsion;
    long total_rank = 0;
    bool vanished = false;  // stopped at an exactly-zero degree
    bool indeterminate = false;
    bool conforming = false;
    std::string diagnostics;
};

inline CohomologyPresentation cohomology_presentation(const ManifoldSpec& spec,
                                                      const Options& options = {}) {
    require_hypotheses(spec);

    CohomologyPresentation coh;
    const int m = spec.m();
    const int n = spec.n();
    coh.nvars = m;
    coh.sr_rels = sr_relations(spec.complex, options.order);
    for (const std::vector<Int>& t : default_covectors(n, options.extra_t)) {
        Polynomial lin(m, options.order);
        for (int j = 1; j <= m; ++j)
            lin.add_term(mono_variable(m, j), pairing(t, spec.lambda[static_cast<std::size_t>(j - 1)]));
        coh.linear_rels.push_back(std::move(lin));
    }

    std::vector<Polynomial> gens = coh.sr_rels;
    for (const Polynomial& l : coh.linear_rels)
        if (!l.is_zero()) gens.push_back(l);

    const int bound = options.effective_bound(n, m);
    for (int k = 0; k <= bound; ++k) {
        std::vector<Monomial> mons = monomials_of_degree(m, k, options.order);
        std::map<Monomial, std::size_t, TermGreater> index{TermGreater{options.order}};
        for (std::size_t i = 0; i < mons.size(); ++i) index.emplace(mons[i], i);

        Matrix rows;
        for (const Polynomial& g : gens) {
            const int dg = g.degree();
            if (dg > k || dg < 0) continue;
            for (const Monomial& mu : monomials_of_degree(m, k - dg, options.order)) {
                std::vector<Int> row(mons.size(), 0);
                for (const auto& [mg, c] : g.terms()) row[index.at(mono_mul(mu, mg))] = c;
                rows.push_back(std::move(row));
            }
        }
        LatticeInvariants inv = lattice_invariants(std::move(rows), mons.size());
        long rank_k = static_cast<long>(mons.size()) - static_cast<long>(inv.rank);
        bool clean = true;
        for (const Int& f : inv.factors)
            if (f != 1) {
                coh.torsion.push_back(f);
                clean = false;
            }
        if (rank_k == 0 && clean) {
            coh.vanished = true;
            break;
        }
        coh.graded_ranks.push_back(rank_k);
        coh.total_rank += rank_k;
    }
    if (!coh.vanished) {
        coh.indeterminate = true;
        coh.diagnostics = "graded ranks did not vanish by degree bound " + std::to_string(bound);
    }
    coh.conforming = coh.vanished && coh.torsion.empty() && coh.total_rank == spec.d();
    if (coh.conforming == false && coh.diagnostics.empty()) {
        coh.diagnostics = "graded module mismatch: total rank " + std::to_string(coh.total_rank) +
                          " vs d = " + std::to_string(spec.d());
        if (!coh.torsion.empty()) {
            coh.diagnostics += "; torsion present";
        }
    }
    return coh;
}

}  // namespace kring

#endif  // KRING_PRESENTATION_HPP
