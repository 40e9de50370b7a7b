#ifndef KRING_SPEC_IO_HPP
#define KRING_SPEC_IO_HPP

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "kring/presentation.hpp"

namespace kring {

/// Parsed form of the kspec text format (version 1).  See the repository
/// README for the grammar.  A SpecDocument is purely structural; the
/// combinatorial hypotheses are checked later on the ManifoldSpec.
struct SpecDocument {
    std::string name;
    int n = 0;
    int m = 0;
    std::vector<std::string> facet_names;  // empty, or one label per vertex
    std::vector<std::vector<int>> facets;
    Matrix lambda;
    Options options;

    friend bool operator==(const SpecDocument& a, const SpecDocument& b) {
        return a.name == b.name && a.n == b.n && a.m == b.m && a.facet_names == b.facet_names &&
               a.facets == b.facets && a.lambda == b.lambda &&
               a.options.order == b.options.order && a.options.sign == b.options.sign &&
               a.options.extra_t == b.options.extra_t && a.options.bound == b.options.bound;
    }
    friend bool operator!=(const SpecDocument& a, const SpecDocument& b) { return !(a == b); }
};

/// Parse failure anchored to a 1-based line and the field being read.
class spec_parse_error : public std::runtime_error {
  public:
    spec_parse_error(int line, std::string field, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + field + ": " + message),
          line_(line),
          field_(std::move(field)) {}

    int line() const { return line_; }
    const std::string& field() const { return field_; }

  private:
    int line_;
    std::string field_;
};

namespace detail {

inline std::vector<std::string> split_tokens(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

inline std::string strip_comment(const std::string& line) {
    std::size_t pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

inline bool looks_like_integer(const std::string& s) {
    std::size_t i = (s.size() > 1 && s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

inline Int parse_int(const std::string& tok, int line, const std::string& field) {
    if (!looks_like_integer(tok))
        throw spec_parse_error(line, field, "expected an integer, got '" + tok + "'");
    return Int(tok);
}

inline int parse_small_int(const std::string& tok, int line, const std::string& field) {
    Int v = parse_int(tok, line, field);
    if (v < -1000000 || v > 1000000)
        throw spec_parse_error(line, field, "value out of range: " + tok);
    return static_cast<int>(to_long_checked(v));
}

}  // namespace detail

inline SpecDocument parse_spec(const std::string& text) {
    using detail::parse_int;
    using detail::parse_small_int;
    using detail::split_tokens;

    SpecDocument doc;
    bool saw_header = false, saw_n = false, saw_m = false, saw_facets = false, saw_lambda = false;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    // block is "" at top level, else the name of the open { } section
    std::string block;

    while (std::getline(in, raw)) {
        ++lineno;
        std::vector<std::string> tok = split_tokens(detail::strip_comment(raw));
        if (tok.empty()) continue;

        if (!saw_header) {
            if (tok.size() != 2 || tok[0] != "kspec" || tok[1] != "1")
                throw spec_parse_error(lineno, "header", "expected 'kspec 1' as the first directive");
            saw_header = true;
            continue;
        }

        if (!block.empty()) {
            if (tok.size() == 1 && tok[0] == "}") {
                block.clear();
                continue;
            }
            if (block == "facets") {
                std::vector<int> facet;
                for (const std::string& t : tok) {
                    int v = parse_small_int(t, lineno, "facets");
                    if (v < 1)
                        throw spec_parse_error(lineno, "facets",
                                               "vertices are 1-based; got " + std::to_string(v));
                    if (v > doc.m)
                        throw spec_parse_error(lineno, "facets",
                                               "vertex " + std::to_string(v) + " above m = " +
                                                   std::to_string(doc.m));
                    facet.push_back(v);
                }
                doc.facets.push_back(std::move(facet));
            } else if (block == "lambda") {
                std::vector<Int> row;
                for (const std::string& t : tok) row.push_back(parse_int(t, lineno, "lambda"));
                if (static_cast<int>(row.size()) != doc.n)
                    throw spec_parse_error(lineno, "lambda",
                                           "row has " + std::to_string(row.size()) +
                                               " entries, expected n = " + std::to_string(doc.n));
                doc.lambda.push_back(std::move(row));
            } else {  // options
                const std::string& key = tok[0];
                if (key == "order") {
                    if (tok.size() != 2 || (tok[1] != "degrevlex" && tok[1] != "deglex"))
                        throw spec_parse_error(lineno, "options.order",
                                               "expected 'degrevlex' or 'deglex'");
                    doc.options.order =
                        tok[1] == "degrevlex" ? TermOrder::degrevlex : TermOrder::deglex;
                } else if (key == "sign") {
                    if (tok.size() != 2 || (tok[1] != "minus" && tok[1] != "plus"))
                        throw spec_parse_error(lineno, "options.sign", "expected 'minus' or 'plus'");
                    doc.options.sign =
                        tok[1] == "minus" ? SignConvention::minus : SignConvention::plus;
                } else if (key == "bound") {
                    if (tok.size() != 2)
                        throw spec_parse_error(lineno, "options.bound", "expected one integer");
                    int b = parse_small_int(tok[1], lineno, "options.bound");
                    if (b < 0) throw spec_parse_error(lineno, "options.bound", "must be >= 0");
                    doc.options.bound = b;
                } else if (key == "extra_t") {
                    std::vector<Int> t;
                    for (std::size_t i = 1; i < tok.size(); ++i)
                        t.push_back(parse_int(tok[i], lineno, "options.extra_t"));
                    if (static_cast<int>(t.size()) != doc.n)
                        throw spec_parse_error(lineno, "options.extra_t",
                                               "covector has " + std::to_string(t.size()) +
                                                   " entries, expected n = " + std::to_string(doc.n));
                    doc.options.extra_t.push_back(std::move(t));
                } else {
                    throw spec_parse_error(lineno, "options", "unknown option '" + key + "'");
                }
            }
            continue;
        }

        const std::string& key = tok[0];
        if (key == "name") {
            if (tok.size() != 2)
                throw spec_parse_error(lineno, "name", "expected one whitespace-free token");
            doc.name = tok[1];
        } else if (key == "n") {
            if (tok.size() != 2) throw spec_parse_error(lineno, "n", "expected one integer");
            doc.n = parse_small_int(tok[1], lineno, "n");
            if (doc.n < 1) throw spec_parse_error(lineno, "n", "must be >= 1");
            saw_n = true;
        } else if (key == "m") {
            if (tok.size() != 2) throw spec_parse_error(lineno, "m", "expected one integer");
            doc.m = parse_small_int(tok[1], lineno, "m");
            if (doc.m < 1 || doc.m > kMaxVertices)
                throw spec_parse_error(lineno, "m",
                                       "must be in 1.." + std::to_string(kMaxVertices));
            saw_m = true;
        } else if (key == "facet_names") {
            doc.facet_names.assign(tok.begin() + 1, tok.end());
        } else if (key == "facets" || key == "lambda" || key == "options") {
            if (tok.size() != 2 || tok[1] != "{")
                throw spec_parse_error(lineno, key, "expected '" + key + " {'");
            if ((key == "facets" || key == "lambda") && (!saw_n || !saw_m))
                throw spec_parse_error(lineno, key, "n and m must come before " + key);
            if (key == "options" && !saw_n)
                throw spec_parse_error(lineno, key, "n must come before options");
            block = key;
            if (key == "facets") saw_facets = true;
            if (key == "lambda") saw_lambda = true;
        } else {
            throw spec_parse_error(lineno, "document", "unknown directive '" + key + "'");
        }
    }

    if (!saw_header) throw spec_parse_error(lineno, "header", "empty document");
    if (!block.empty()) throw spec_parse_error(lineno, block, "unterminated block");
    if (!saw_n) throw spec_parse_error(lineno, "n", "missing");
    if (!saw_m) throw spec_parse_error(lineno, "m", "missing");
    if (!saw_facets || doc.facets.empty())
        throw spec_parse_error(lineno, "facets", "missing or empty");
    if (!saw_lambda) throw spec_parse_error(lineno, "lambda", "missing");
    if (static_cast<int>(doc.lambda.size()) != doc.m)
        throw spec_parse_error(lineno, "lambda",
                               "has " + std::to_string(doc.lambda.size()) +
                                   " rows, expected m = " + std::to_string(doc.m));
    if (!doc.facet_names.empty() && static_cast<int>(doc.facet_names.size()) != doc.m)
        throw spec_parse_error(lineno, "facet_names",
                               "has " + std::to_string(doc.facet_names.size()) +
                                   " labels, expected m = " + std::to_string(doc.m));
    return doc;
}

/// Canonical text form; parse_spec(serialize(doc)) == doc.
inline std::string serialize(const SpecDocument& doc) {
    std::ostringstream out;
    out << "kspec 1\n";
    if (!doc.name.empty()) out << "name " << doc.name << "\n";
    out << "n " << doc.n << "\n";
    out << "m " << doc.m << "\n";
    if (!doc.facet_names.empty()) {
        out << "facet_names";
        for (const std::string& s : doc.facet_names) out << " " << s;
        out << "\n";
    }
    out << "facets {\n";
    for (const std::vector<int>& f : doc.facets) {
        out << " ";
        for (int v : f) out << " " << v;
        out << "\n";
    }
    out << "}\n";
    out << "lambda {\n";
    for (const std::vector<Int>& row : doc.lambda) {
        out << " ";
        for (const Int& v : row) out << " " << v.str();
        out << "\n";
    }
    out << "}\n";
    out << "options {\n";
    out << "  order " << term_order_name(doc.options.order) << "\n";
    out << "  sign " << sign_convention_name(doc.options.sign) << "\n";
    out << "  bound " << doc.options.bound << "\n";
    for (const std::vector<Int>& t : doc.options.extra_t) {
        out << "  extra_t";
        for (const Int& v : t) out << " " << v.str();
        out << "\n";
    }
    out << "}\n";
    return out.str();
}

/// Builds the validated input pair.  Shape problems throw
/// std::invalid_argument; combinatorial hypotheses are not checked here.
inline ManifoldSpec to_manifold_spec(const SpecDocument& doc) {
    SimplicialComplex complex = SimplicialComplex::from_vertex_lists(doc.m, doc.facets);
    if (complex.dim() + 1 != doc.n)
        throw std::invalid_argument("facet size " + std::to_string(complex.dim() + 1) +
                                    " does not match n = " + std::to_string(doc.n));
    check_lambda_shape(doc.lambda, doc.m, doc.n);
    return ManifoldSpec{std::move(complex), doc.lambda, doc.facet_names};
}

}  // namespace kring

#endif  // KRING_SPEC_IO_HPP
