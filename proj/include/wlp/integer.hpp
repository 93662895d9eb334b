#pragma once

/**
 * Exact integer arithmetic shared by the symbolic modules.
 *
 * Every dimension count in this library is an arbitrary-precision integer;
 * degrees, exponents and multiplicities stay machine integers.  No floating
 * point is used anywhere on the symbolic side.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>

namespace wlp {

using Integer = boost::multiprecision::cpp_int;

/// Binomial coefficient C(a, r) extended by zero: 0 whenever r < 0 or a < r.
/// In particular C(a, r) = 0 for every negative a, the convention used by all
/// dimension formulas here.
inline Integer binomial_or_zero(long long a, long long r) {
    if (r < 0 || a < r) return 0;
    r = std::min(r, a - r);
    Integer b = 1;
    for (long long i = 1; i <= r; ++i) {
        b *= a - r + i;
        b /= i;  // exact: product of i consecutive integers is divisible by i!
    }
    return b;
}

/// max{m, 0}, written [m]_+ in the formulas.
inline Integer pos_part(const Integer& m) { return m > 0 ? m : Integer(0); }

}  // namespace wlp
