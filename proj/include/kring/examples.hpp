#ifndef KRING_EXAMPLES_HPP
#define KRING_EXAMPLES_HPP

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "kring/spec_io.hpp"

namespace kring {

/// Built-in example documents, selected by a small expression language:
///
///   simplex(n)          projective-space data on the boundary of the n-simplex
///   hirzebruch(k)       square nerve with rows (1,0),(0,1),(-1,k),(0,-1)
///   bott(C)             cross-polytope nerve for a strictly upper-triangular
///                       integer matrix C, e.g. bott([[0,1,2],[0,0,1],[0,0,0]])
///   product(e1, e2)     join of nerves, block-diagonal lambda
///
/// Whitespace is ignored.  Invalid parameters raise std::invalid_argument.

namespace detail {

struct ExampleParser {
    const std::string& src;
    std::size_t pos = 0;

    explicit ExampleParser(const std::string& s) : src(s) {}

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("example expression, offset " + std::to_string(pos) + ": " +
                                    msg);
    }

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }
    bool peek_is(char c) {
        skip_ws();
        return pos < src.size() && src[pos] == c;
    }
    void expect(char c) {
        skip_ws();
        if (pos >= src.size() || src[pos] != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }
    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < src.size() && std::isalpha(static_cast<unsigned char>(src[pos]))) ++pos;
        if (start == pos) fail("expected a generator name");
        return src.substr(start, pos - start);
    }
    long integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < src.size() && src[pos] == '-') ++pos;
        std::size_t digits = pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        if (digits == pos) fail("expected an integer");
        long v = std::stol(src.substr(start, pos - start));
        if (v < -1000 || v > 1000) fail("integer out of the supported range [-1000, 1000]");
        return v;
    }
    std::vector<std::vector<long>> matrix() {
        std::vector<std::vector<long>> rows;
        expect('[');
        while (true) {
            expect('[');
            std::vector<long> row;
            if (!peek_is(']')) {
                row.push_back(integer());
                while (peek_is(',')) {
                    expect(',');
                    row.push_back(integer());
                }
            }
            expect(']');
            rows.push_back(std::move(row));
            if (peek_is(',')) {
                expect(',');
                continue;
            }
            break;
        }
        expect(']');
        return rows;
    }

    SpecDocument expr();
};

inline SpecDocument make_simplex(long n) {
    if (n < 1 || n > 16) throw std::invalid_argument("simplex(n) supports n in 1..16");
    SpecDocument doc;
    doc.name = "simplex(" + std::to_string(n) + ")";
    doc.n = static_cast<int>(n);
    doc.m = static_cast<int>(n) + 1;
    for (int skip = doc.m; skip >= 1; --skip) {
        std::vector<int> facet;
        for (int v = 1; v <= doc.m; ++v)
            if (v != skip) facet.push_back(v);
        doc.facets.push_back(std::move(facet));
    }
    for (int i = 0; i < doc.n; ++i) {
        std::vector<Int> row(static_cast<std::size_t>(doc.n), 0);
        row[static_cast<std::size_t>(i)] = 1;
        doc.lambda.push_back(std::move(row));
    }
    doc.lambda.emplace_back(static_cast<std::size_t>(doc.n), Int(-1));
    return doc;
}

inline SpecDocument make_hirzebruch(long k) {
    SpecDocument doc;
    doc.name = "hirzebruch(" + std::to_string(k) + ")";
    doc.n = 2;
    doc.m = 4;
    doc.facets = {{1, 2}, {2, 3}, {3, 4}, {4, 1}};
    doc.lambda = {{1, 0}, {0, 1}, {-1, Int(k)}, {0, -1}};
    return doc;
}

inline SpecDocument make_bott(const std::vector<std::vector<long>>& c) {
    const int n = static_cast<int>(c.size());
    if (n < 1 || n > 10) throw std::invalid_argument("bott(C) supports 1 <= n <= 10");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(c[static_cast<std::size_t>(i)].size()) != n)
            throw std::invalid_argument("bott(C) needs a square matrix");
        for (int j = 0; j <= i; ++j)
            if (c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0)
                throw std::invalid_argument("bott(C) needs a strictly upper-triangular matrix");
    }

    SpecDocument doc;
    std::string name = "bott([";
    for (int i = 0; i < n; ++i) {
        name += i ? ",[" : "[";
        for (int j = 0; j < n; ++j)
            name += (j ? "," : "") +
                    std::to_string(c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        name += "]";
    }
    doc.name = name + "])";
    doc.n = n;
    doc.m = 2 * n;
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> facet;
        for (int i = 1; i <= n; ++i) facet.push_back((mask >> (i - 1)) & 1 ? n + i : i);
        std::sort(facet.begin(), facet.end());
        doc.facets.push_back(std::move(facet));
    }
    for (int i = 1; i <= n; ++i) {
        std::vector<Int> row(static_cast<std::size_t>(n), 0);
        row[static_cast<std::size_t>(i - 1)] = 1;
        doc.lambda.push_back(std::move(row));
    }
    for (int i = 1; i <= n; ++i) {
        std::vector<Int> row(static_cast<std::size_t>(n), 0);
        row[static_cast<std::size_t>(i - 1)] = -1;
        for (int k = i + 1; k <= n; ++k)
            row[static_cast<std::size_t>(k - 1)] =
                c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k - 1)];
        doc.lambda.push_back(std::move(row));
    }
    return doc;
}

inline SpecDocument make_product(const SpecDocument& a, const SpecDocument& b) {
    if (a.m + b.m > kMaxVertices)
        throw std::invalid_argument("product exceeds the vertex limit of " +
                                    std::to_string(kMaxVertices));
    SpecDocument doc;
    doc.name = "product(" + a.name + "," + b.name + ")";
    doc.n = a.n + b.n;
    doc.m = a.m + b.m;
    for (const std::vector<int>& fa : a.facets)
        for (const std::vector<int>& fb : b.facets) {
            std::vector<int> facet = fa;
            for (int v : fb) facet.push_back(v + a.m);
            doc.facets.push_back(std::move(facet));
        }
    for (const std::vector<Int>& row : a.lambda) {
        std::vector<Int> r = row;
        r.resize(static_cast<std::size_t>(doc.n), 0);
        doc.lambda.push_back(std::move(r));
    }
    for (const std::vector<Int>& row : b.lambda) {
        std::vector<Int> r(static_cast<std::size_t>(a.n), 0);
        r.insert(r.end(), row.begin(), row.end());
        doc.lambda.push_back(std::move(r));
    }
    return doc;
}

inline SpecDocument ExampleParser::expr() {
    std::string head = ident();
    if (head == "simplex") {
        expect('(');
        long n = integer();
        expect(')');
        return make_simplex(n);
    }
    if (head == "hirzebruch") {
        expect('(');
        long k = integer();
        expect(')');
        return make_hirzebruch(k);
    }
    if (head == "bott") {
        expect('(');
        std::vector<std::vector<long>> c = matrix();
        expect(')');
        return make_bott(c);
    }
    if (head == "product") {
        expect('(');
        SpecDocument a = expr();
        expect(',');
        SpecDocument b = expr();
        expect(')');
        return make_product(a, b);
    }
    fail("unknown generator '" + head + "' (expected simplex, hirzebruch, bott, or product)");
}

}  // namespace detail

inline SpecDocument generate_example(const std::string& expression) {
    detail::ExampleParser p(expression);
    SpecDocument doc = p.expr();
    p.skip_ws();
    if (p.pos != expression.size())
        throw std::invalid_argument("example expression, offset " + std::to_string(p.pos) +
                                    ": trailing input");
    return doc;
}

}  // namespace kring

#endif  // KRING_EXAMPLES_HPP
