#ifndef KRING_REPORT_HPP
#define KRING_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kring/presentation.hpp"
#include "kring/spec_io.hpp"

namespace kring {

/// Wall-clock stage timings in milliseconds.  Omitted from serialized
/// output unless explicitly requested, so reports stay byte-identical
/// across runs.
struct Timings {
    double validate_ms = 0;
    double shelling_ms = 0;
    double k_theory_ms = 0;
    double cohomology_ms = 0;
    double total_ms = 0;
};

/// Everything a pipeline stage produced, ready for serialization.  Partial
/// by design: each block is present only if its stage ran.
struct Report {
    std::string command;
    SpecDocument input;

    int exit_code = 0;
    std::string verdict;  // conforming | non-conforming | hypothesis-failure | input-error
    std::string diagnostics;

    std::optional<ValidationReport> validation;
    std::optional<NonsingularityReport> nonsingular;

    bool shelling_searched = false;
    std::optional<Shelling> shelling;
    std::optional<HVector> h;
    std::optional<std::vector<long>> betti;
    std::optional<std::vector<int>> cells;

    std::optional<RingPresentation> presentation;
    std::optional<CohomologyPresentation> cohomology;
    std::optional<bool> betti_match;  // cohomology graded ranks vs shelling Betti numbers

    std::optional<Timings> timings;
};

namespace detail {

using OrderedJson = nlohmann::ordered_json;

inline OrderedJson face_json(Face f) {
    OrderedJson arr = OrderedJson::array();
    for (int v : f.vertices()) arr.push_back(v);
    return arr;
}

inline OrderedJson covector_json(const std::vector<Int>& t) {
    OrderedJson arr = OrderedJson::array();
    for (const Int& v : t) arr.push_back(v.str());
    return arr;
}

inline OrderedJson poly_list_json(const std::vector<Polynomial>& ps) {
    OrderedJson arr = OrderedJson::array();
    for (const Polynomial& p : ps) arr.push_back(p.to_string());
    return arr;
}

inline OrderedJson monomial_list_json(const std::vector<Monomial>& ms) {
    OrderedJson arr = OrderedJson::array();
    for (const Monomial& m : ms) arr.push_back(mono_to_string(m));
    return arr;
}

inline OrderedJson input_json(const SpecDocument& doc) {
    OrderedJson j;
    if (!doc.name.empty()) j["name"] = doc.name;
    j["n"] = doc.n;
    j["m"] = doc.m;
    if (!doc.facet_names.empty()) j["facet_names"] = doc.facet_names;
    j["facets"] = doc.facets;
    OrderedJson lam = OrderedJson::array();
    for (const std::vector<Int>& row : doc.lambda) {
        OrderedJson r = OrderedJson::array();
        for (const Int& v : row) r.push_back(v.str());
        lam.push_back(std::move(r));
    }
    j["lambda"] = std::move(lam);
    OrderedJson opt;
    opt["order"] = term_order_name(doc.options.order);
    opt["sign"] = sign_convention_name(doc.options.sign);
    opt["bound"] = doc.options.bound;
    opt["effective_bound"] = doc.options.effective_bound(doc.n, doc.m);
    OrderedJson extra = OrderedJson::array();
    for (const std::vector<Int>& t : doc.options.extra_t) extra.push_back(covector_json(t));
    opt["extra_t"] = std::move(extra);
    j["options"] = std::move(opt);
    return j;
}

}  // namespace detail

/// Machine-readable rendering, schema "kring-report/1".  Ring integers
/// (lambda entries, coefficients, determinants, torsion, structure
/// constants) are decimal strings; counts, ranks, and indices are JSON
/// numbers.
inline std::string render_json(const Report& rep) {
    using detail::OrderedJson;
    OrderedJson j;
    j["schema"] = "kring-report/1";
    j["command"] = rep.command;
    j["verdict"] = rep.verdict;
    j["exit_code"] = rep.exit_code;
    if (!rep.diagnostics.empty()) j["diagnostics"] = rep.diagnostics;
    j["input"] = detail::input_json(rep.input);

    if (rep.validation) {
        OrderedJson v;
        v["ok"] = rep.validation->ok;
        OrderedJson viols = OrderedJson::array();
        for (const Violation& viol : rep.validation->violations) viols.push_back(viol.message);
        v["violations"] = std::move(viols);
        j["nerve"] = std::move(v);
    }
    if (rep.nonsingular) {
        OrderedJson v;
        v["ok"] = rep.nonsingular->ok;
        OrderedJson viols = OrderedJson::array();
        for (Face f : rep.nonsingular->violations) viols.push_back(detail::face_json(f));
        v["violations"] = std::move(viols);
        j["nonsingular"] = std::move(v);
    }
    if (rep.shelling_searched) {
        OrderedJson s;
        s["found"] = rep.shelling.has_value();
        if (rep.shelling) {
            OrderedJson order = OrderedJson::array();
            for (Face f : rep.shelling->order) order.push_back(detail::face_json(f));
            s["order"] = std::move(order);
            OrderedJson restr = OrderedJson::array();
            for (Face f : rep.shelling->restrictions) restr.push_back(detail::face_json(f));
            s["restrictions"] = std::move(restr);
        }
        if (rep.h) s["h_vector"] = *rep.h;
        if (rep.betti) s["betti"] = *rep.betti;
        if (rep.cells) s["cell_dimensions"] = *rep.cells;
        j["shelling"] = std::move(s);
    }
    if (rep.presentation) {
        const RingPresentation& p = *rep.presentation;
        OrderedJson k;
        k["d"] = p.d;
        k["sr_relations"] = detail::poly_list_json(p.sr_rels);
        OrderedJson trels = OrderedJson::array();
        for (const auto& [t, poly] : p.t_rels) {
            OrderedJson e;
            e["t"] = detail::covector_json(t);
            e["poly"] = poly.to_string();
            trels.push_back(std::move(e));
        }
        k["t_relations"] = std::move(trels);
        k["groebner_basis"] = detail::poly_list_json(p.gb.gens);
        k["unit_leading_coefficients"] = p.gb.unit_leading_coefficients();
        OrderedJson mod;
        mod["rank"] = p.module.rank;
        mod["free"] = p.module.free;
        mod["finite"] = p.module.finite;
        mod["via_standard_monomials"] = p.module.via_standard_monomials;
        OrderedJson tors = OrderedJson::array();
        for (const Int& f : p.module.torsion) tors.push_back(f.str());
        mod["torsion"] = std::move(tors);
        mod["standard_monomials"] = detail::monomial_list_json(p.module.standard_monomials);
        k["module"] = std::move(mod);
        k["shelling_basis"] = detail::monomial_list_json(p.shelling_basis);
        if (p.certificate.available) {
            k["change_of_basis_det"] = p.certificate.det.str();
            k["basis_certified"] = p.certificate.ok;
            k["certificate_route"] =
                p.certificate.via_generation ? "generation" : "standard_monomials";
        }
        if (p.certificate.available && p.certificate.ok) {
            OrderedJson sc = OrderedJson::array();
            for (const auto& [a, b, c, val] : p.constants.entries) {
                OrderedJson e = OrderedJson::array();
                e.push_back(a);
                e.push_back(b);
                e.push_back(c);
                e.push_back(val.str());
                sc.push_back(std::move(e));
            }
            k["structure_constants"] = std::move(sc);
        }
        k["conforming"] = p.conforming;
        if (!p.diagnostics.empty()) k["diagnostics"] = p.diagnostics;
        j["k_theory"] = std::move(k);
    }
    if (rep.cohomology) {
        const CohomologyPresentation& c = *rep.cohomology;
        OrderedJson h;
        h["sr_relations"] = detail::poly_list_json(c.sr_rels);
        h["linear_relations"] = detail::poly_list_json(c.linear_rels);
        h["graded_ranks"] = c.graded_ranks;
        h["total_rank"] = c.total_rank;
        OrderedJson tors = OrderedJson::array();
        for (const Int& f : c.torsion) tors.push_back(f.str());
        h["torsion"] = std::move(tors);
        h["indeterminate"] = c.indeterminate;
        if (rep.betti_match) h["matches_betti"] = *rep.betti_match;
        h["conforming"] = c.conforming;
        if (!c.diagnostics.empty()) h["diagnostics"] = c.diagnostics;
        j["cohomology"] = std::move(h);
    }
    if (rep.timings) {
        OrderedJson t;
        t["validate_ms"] = rep.timings->validate_ms;
        t["shelling_ms"] = rep.timings->shelling_ms;
        t["k_theory_ms"] = rep.timings->k_theory_ms;
        t["cohomology_ms"] = rep.timings->cohomology_ms;
        t["total_ms"] = rep.timings->total_ms;
        j["timings"] = std::move(t);
    }
    return j.dump(2) + "\n";
}

namespace detail {

inline std::string faces_line(const std::vector<Face>& fs) {
    std::string s;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (i) s += " ";
        s += fs[i].to_string();
    }
    return s;
}

template <typename T>
std::string num_line(const std::vector<T>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

}  // namespace detail

/// Human-readable rendering of the same content.
inline std::string render_text(const Report& rep) {
    std::string out;
    auto line = [&out](const std::string& s) { out += s + "\n"; };

    std::string title = rep.command + " ";
    title += rep.input.name.empty() ? "(unnamed input)" : rep.input.name;
    line(title);
    line(std::string(title.size(), '-'));
    line("n = " + std::to_string(rep.input.n) + ", m = " + std::to_string(rep.input.m) +
         ", facets = " + std::to_string(rep.input.facets.size()));
    line("verdict: " + rep.verdict + " (exit " + std::to_string(rep.exit_code) + ")");
    if (!rep.diagnostics.empty()) line("diagnostics: " + rep.diagnostics);

    if (rep.validation) {
        line("");
        line(rep.validation->ok ? "nerve: valid" : "nerve: INVALID");
        for (const Violation& v : rep.validation->violations) line("  - " + v.message);
    }
    if (rep.nonsingular) {
        if (rep.nonsingular->ok) {
            line("nonsingular: yes (all faces unimodular)");
        } else {
            line("nonsingular: NO; violating faces: " +
                 detail::faces_line(rep.nonsingular->violations));
        }
    }
    if (rep.shelling_searched) {
        line("");
        if (rep.shelling) {
            line("shelling order:        " + detail::faces_line(rep.shelling->order));
            line("restriction faces:     " + detail::faces_line(rep.shelling->restrictions));
            if (rep.h) line("h-vector:              " + detail::num_line(*rep.h));
            if (rep.betti) line("even Betti numbers:    " + detail::num_line(*rep.betti));
            if (rep.cells) line("cell dimensions:       " + detail::num_line(*rep.cells));
        } else {
            line("shelling: none exists");
        }
    }
    if (rep.presentation) {
        const RingPresentation& p = *rep.presentation;
        line("");
        line("K-ring presentation (order " + std::string(term_order_name(p.order)) + ", sign " +
             sign_convention_name(p.sign) + ")");
        for (const Polynomial& g : p.sr_rels) line("  SR relation:  " + g.to_string());
        for (const auto& [t, poly] : p.t_rels) {
            std::string ts;
            for (std::size_t i = 0; i < t.size(); ++i) ts += (i ? "," : "") + t[i].str();
            line("  t = (" + ts + "):  " + poly.to_string());
        }
        line("  Groebner basis:");
        for (const Polynomial& g : p.gb.gens) line("    " + g.to_string());
        line("  rank " + std::to_string(p.module.rank) + " (d = " + std::to_string(p.d) + "), " +
             (p.module.free ? "free" : "NOT free"));
        if (!p.module.standard_monomials.empty()) {
            std::string s = "  standard monomials:";
            for (const Monomial& m : p.module.standard_monomials) s += " " + mono_to_string(m);
            line(s);
        }
        if (!p.shelling_basis.empty()) {
            std::string s = "  shelling basis:";
            for (const Monomial& m : p.shelling_basis) s += " " + mono_to_string(m);
            line(s);
        }
        if (p.certificate.available) {
            std::string route = p.certificate.via_generation ? "generation" : "standard monomials";
            line("  change-of-basis determinant: " + p.certificate.det.str() +
                 (p.certificate.ok ? " (basis certified via " + route + ")"
                                   : " (CERTIFICATE FAILED)"));
        }
        if (p.certificate.available && p.certificate.ok) {
            line("  structure constants (i j k c), i <= j, zeros omitted:");
            for (const auto& [a, b, c, val] : p.constants.entries)
                line("    " + std::to_string(a) + " " + std::to_string(b) + " " +
                     std::to_string(c) + " " + val.str());
        }
    }
    if (rep.cohomology) {
        const CohomologyPresentation& c = *rep.cohomology;
        line("");
        line("cohomology presentation");
        for (const Polynomial& g : c.linear_rels) line("  linear relation: " + g.to_string());
        line("  graded ranks: " + detail::num_line(c.graded_ranks) + ", total " +
             std::to_string(c.total_rank));
        if (!c.torsion.empty()) {
            std::string s = "  torsion:";
            for (const Int& f : c.torsion) s += " " + f.str();
            line(s);
        }
        if (rep.betti_match)
            line(std::string("  matches Betti numbers: ") + (*rep.betti_match ? "yes" : "NO"));
    }
    if (rep.timings) {
        line("");
        line("timings (ms): validate " + std::to_string(rep.timings->validate_ms) + ", shelling " +
             std::to_string(rep.timings->shelling_ms) + ", k-theory " +
             std::to_string(rep.timings->k_theory_ms) + ", cohomology " +
             std::to_string(rep.timings->cohomology_ms) + ", total " +
             std::to_string(rep.timings->total_ms));
    }
    return out;
}

}  // namespace kring

#endif  // KRING_REPORT_HPP
