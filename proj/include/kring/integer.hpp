#ifndef KRING_INTEGER_HPP
#define KRING_INTEGER_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace kring {

/// Exact integer used throughout: no coefficient or matrix entry ever
/// overflows.
using Int = boost::multiprecision::cpp_int;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

/// Extended Euclid: returns g = gcd(a, b) >= 0 and sets u, v with
/// u*a + v*b = g.  When a | b the output is (sgn(a), 0), so the Bezout
/// combination of a divisor pair degenerates to the divisor itself.
inline Int ext_gcd(const Int& a, const Int& b, Int& u, Int& v) {
    Int old_r = a, r = b;
    Int old_u = 1, cur_u = 0;
    Int old_v = 0, cur_v = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int t;
        t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_u - q * cur_u;
        old_u = cur_u;
        cur_u = t;
        t = old_v - q * cur_v;
        old_v = cur_v;
        cur_v = t;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_u = -old_u;
        old_v = -old_v;
    }
    u = old_u;
    v = old_v;
    return old_r;
}

/// Narrow an Int to long, throwing instead of truncating.
inline long to_long_checked(const Int& x, const char* what = "integer") {
    if (x > Int((std::numeric_limits<long>::max)()) ||
        x < Int((std::numeric_limits<long>::min)())) {
        throw std::overflow_error(std::string(what) + " does not fit in a machine word");
    }
    return static_cast<long>(x);
}

}  // namespace kring

#endif  // KRING_INTEGER_HPP
