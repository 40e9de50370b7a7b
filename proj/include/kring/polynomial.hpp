#ifndef KRING_POLYNOMIAL_HPP
#define KRING_POLYNOMIAL_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kring/face.hpp"
#include "kring/integer.hpp"

namespace kring {

/// Exponent vector; one nonnegative entry per variable v_1..v_m.
using Monomial = std::vector<int>;

inline int total_degree(const Monomial& a) { return std::accumulate(a.begin(), a.end(), 0); }

inline Monomial mono_one(int nvars) { return Monomial(static_cast<std::size_t>(nvars), 0); }

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

/// Whether a divides b.
inline bool mono_divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

/// b / a; requires a | b.
inline Monomial mono_div(const Monomial& b, const Monomial& a) {
    Monomial out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
        out[i] = b[i] - a[i];
        if (out[i] < 0) throw std::invalid_argument("monomial division with remainder");
    }
    return out;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
    return out;
}

inline Monomial mono_variable(int nvars, int j) {
    if (j < 1 || j > nvars) throw std::out_of_range("variable index out of range");
    Monomial out = mono_one(nvars);
    out[static_cast<std::size_t>(j - 1)] = 1;
    return out;
}

inline Monomial mono_from_face(int nvars, Face f) {
    Monomial out = mono_one(nvars);
    for (int v : f.vertices()) {
        if (v > nvars) throw std::out_of_range("face vertex above variable count");
        out[static_cast<std::size_t>(v - 1)] = 1;
    }
    return out;
}

inline std::string mono_to_string(const Monomial& a) {
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "v" + std::to_string(i + 1);
        if (a[i] > 1) s += "^" + std::to_string(a[i]);
    }
    return s.empty() ? "1" : s;
}

/// Variables are ranked v1 > v2 > ... > vm in both orders.
enum class TermOrder { degrevlex, deglex };

inline const char* term_order_name(TermOrder o) {
    return o == TermOrder::degrevlex ? "degrevlex" : "deglex";
}

/// Strict comparison: a comes before b (a is the larger term).
inline bool term_greater(const Monomial& a, const Monomial& b, TermOrder order) {
    int da = total_degree(a);
    int db = total_degree(b);
    if (da != db) return da > db;
    if (order == TermOrder::deglex) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] > b[i];
        return false;
    }
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

struct TermGreater {
    TermOrder order = TermOrder::degrevlex;
    bool operator()(const Monomial& a, const Monomial& b) const {
        return term_greater(a, b, order);
    }
};

/// Sparse integer polynomial with a fixed variable count and term order.
/// Terms are kept in a map sorted leading term first; no zero coefficients
/// are stored, so the zero polynomial has an empty map.
class Polynomial {
  public:
    using TermMap = std::map<Monomial, Int, TermGreater>;

    Polynomial(int nvars, TermOrder order)
        : nvars_(nvars), order_(order), terms_(TermGreater{order}) {
        if (nvars < 1) throw std::invalid_argument("polynomial needs at least one variable");
    }

    static Polynomial zero(int nvars, TermOrder order) { return Polynomial(nvars, order); }

    static Polynomial constant(int nvars, TermOrder order, Int c) {
        Polynomial p(nvars, order);
        p.add_term(mono_one(nvars), std::move(c));
        return p;
    }

    static Polynomial variable(int nvars, TermOrder order, int j) {
        Polynomial p(nvars, order);
        p.add_term(mono_variable(nvars, j), 1);
        return p;
    }

    static Polynomial monomial(int nvars, TermOrder order, Monomial m, Int c = 1) {
        Polynomial p(nvars, order);
        p.add_term(std::move(m), std::move(c));
        return p;
    }

    int nvars() const { return nvars_; }
    TermOrder order() const { return order_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    const Monomial& leading_monomial() const {
        require_nonzero();
        return terms_.begin()->first;
    }
    const Int& leading_coefficient() const {
        require_nonzero();
        return terms_.begin()->second;
    }

    int degree() const {  // max total degree over terms; -1 for zero
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
        return d;
    }

    void add_term(Monomial m, Int c) {
        check_mono(m);
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (c != 0) terms_.emplace(std::move(m), std::move(c));
            return;
        }
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_compat(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        check_compat(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator-(const Polynomial& a) {
        Polynomial out(a.nvars_, a.order_);
        for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, -c);
        return out;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_compat(b);
        Polynomial out(a.nvars_, a.order_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) out.add_term(mono_mul(ma, mb), ca * cb);
        return out;
    }

    friend Polynomial operator*(const Int& c, const Polynomial& a) {
        Polynomial out(a.nvars_, a.order_);
        if (c == 0) return out;
        for (const auto& [m, k] : a.terms_) out.terms_.emplace(m, c * k);
        return out;
    }

    /// this -= c * m * o, the basic reduction update.
    void sub_mul(const Int& c, const Monomial& m, const Polynomial& o) {
        check_compat(o);
        for (const auto& [mo, co] : o.terms_) add_term(mono_mul(m, mo), -c * co);
    }

    Polynomial pow(int e) const {
        if (e < 0) throw std::invalid_argument("negative exponent");
        Polynomial out = constant(nvars_, order_, 1);
        Polynomial base = *this;
        while (e > 0) {
            if (e & 1) out = out * base;
            e >>= 1;
            if (e > 0) base = base * base;
        }
        return out;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.order_ == b.order_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : terms_) {
            Int a = c;
            if (s.empty()) {
                if (a < 0) {
                    s += "-";
                    a = -a;
                }
            } else {
                s += a < 0 ? " - " : " + ";
                if (a < 0) a = -a;
            }
            bool is_one_mono = total_degree(m) == 0;
            if (a != 1 || is_one_mono) {
                s += a.str();
                if (!is_one_mono) s += "*";
            }
            if (!is_one_mono) s += mono_to_string(m);
        }
        return s;
    }

  private:
    void require_nonzero() const {
        if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
    }
    void check_mono(const Monomial& m) const {
        if (static_cast<int>(m.size()) != nvars_)
            throw std::invalid_argument("monomial length does not match variable count");
    }
    void check_compat(const Polynomial& o) const {
        if (nvars_ != o.nvars_ || order_ != o.order_)
            throw std::invalid_argument("mixed polynomial contexts");
    }

    int nvars_;
    TermOrder order_;
    TermMap terms_;
};

/// All monomials in nvars variables of total degree exactly d, ascending in
/// the term order.
inline std::vector<Monomial> monomials_of_degree(int nvars, int d, TermOrder order) {
    std::vector<Monomial> out;
    Monomial cur = mono_one(nvars);
    auto rec = [&](auto&& self, std::size_t pos, int rem) -> void {
        if (pos + 1 == cur.size()) {
            cur[pos] = rem;
            out.push_back(cur);
            cur[pos] = 0;
            return;
        }
        for (int e = 0; e <= rem; ++e) {
            cur[pos] = e;
            self(self, pos + 1, rem - e);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(),
              [order](const Monomial& a, const Monomial& b) { return term_greater(b, a, order); });
    return out;
}

/// All monomials of total degree <= bound, ascending in the term order.
inline std::vector<Monomial> monomials_up_to(int nvars, int bound, TermOrder order) {
    std::vector<Monomial> out;
    for (int d = 0; d <= bound; ++d) {
        std::vector<Monomial> layer = monomials_of_degree(nvars, d, order);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

}  // namespace kring

#endif  // KRING_POLYNOMIAL_HPP
