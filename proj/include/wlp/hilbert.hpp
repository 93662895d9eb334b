#pragma once

/**
 * Hilbert functions of artinian quotients by powers of general linear forms.
 *
 * For a complete intersection A = k[x_1..x_r]/(l_1^{a_1},...,l_r^{a_r}) the
 * Hilbert function is the coefficient list of prod_i (1 + z + ... + z^{a_i-1}).
 * With one extra power l_{r+1}^{a_{r+1}} the quotient R/I is an almost
 * complete intersection; since A has the strong Lefschetz property,
 *
 *     h_{R/I}(j) = max{0, h_A(j) - h_A(j - a_{r+1})}.
 *
 * Both functions are symmetric/unimodal bookkeeping over exact integers.
 */

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "integer.hpp"

namespace wlp {

/// Number of variables r and the generator exponents, kept sorted
/// nondecreasing.  Exponents must be >= 1.
struct ExponentConfig {
    int num_vars = 0;
    std::vector<long long> exponents;

    ExponentConfig() = default;
    ExponentConfig(int r, std::vector<long long> exps)
        : num_vars(r), exponents(std::move(exps)) {
        if (num_vars < 1)
            throw std::invalid_argument("ExponentConfig: need at least one variable");
        for (long long a : exponents)
            if (a < 1)
                throw std::invalid_argument("ExponentConfig: exponents must be >= 1");
        std::sort(exponents.begin(), exponents.end());
    }

    int count() const { return static_cast<int>(exponents.size()); }
    bool operator==(const ExponentConfig&) const = default;
};

/// Dense value list of a Hilbert function; value(j) is 0 outside the stored
/// range.  socle_degree is the last degree with a nonzero value (-1 if none).
struct HilbertFunction {
    std::vector<Integer> values;
    long long socle_degree = -1;

    Integer value(long long j) const {
        if (j < 0 || j >= static_cast<long long>(values.size())) return 0;
        return values[static_cast<std::size_t>(j)];
    }
};

namespace detail {

/// Multiply a coefficient list by 1 + z + ... + z^{len-1} (len >= 1).
inline void multiply_by_geometric(std::vector<Integer>& h, long long len) {
    std::vector<Integer> next(h.size() + static_cast<std::size_t>(len) - 1);
    Integer run = 0;
    for (std::size_t j = 0; j < next.size(); ++j) {
        if (j < h.size()) run += h[j];
        if (j >= static_cast<std::size_t>(len) &&
            j - static_cast<std::size_t>(len) < h.size())
            run -= h[j - static_cast<std::size_t>(len)];
        next[j] = run;
    }
    h = std::move(next);
}

}  // namespace detail

/// Hilbert function of the complete intersection cut out by one power per
/// variable.  Requires exactly num_vars exponents.
inline HilbertFunction ci_hilbert(const ExponentConfig& config) {
    if (config.count() != config.num_vars)
        throw std::invalid_argument("ci_hilbert: need exactly one exponent per variable");
    HilbertFunction h;
    h.values = {Integer(1)};
    for (long long a : config.exponents) detail::multiply_by_geometric(h.values, a);
    h.socle_degree = static_cast<long long>(h.values.size()) - 1;
    return h;
}

/// Hilbert function of the almost complete intersection with num_vars + 1
/// exponents; the largest exponent plays the role of a_{r+1}.  Trailing zeros
/// up to the complete-intersection socle are kept in the value list.
inline HilbertFunction aci_hilbert(const ExponentConfig& config) {
    if (config.count() != config.num_vars + 1)
        throw std::invalid_argument("aci_hilbert: need exactly num_vars + 1 exponents");
    const ExponentConfig ci(config.num_vars,
                            {config.exponents.begin(), config.exponents.end() - 1});
    const HilbertFunction hA = ci_hilbert(ci);
    const long long extra = config.exponents.back();
    HilbertFunction h;
    h.values.resize(hA.values.size());
    for (long long j = 0; j < static_cast<long long>(h.values.size()); ++j) {
        h.values[static_cast<std::size_t>(j)] = pos_part(hA.value(j) - hA.value(j - extra));
        if (h.values[static_cast<std::size_t>(j)] != 0) h.socle_degree = j;
    }
    return h;
}

/// First difference h_{R/I}(j) - h_{R/I}(j-1) of the almost complete
/// intersection, written through the two clamped brackets
/// [h_A(j) - h_A(j-a)]_+ - [h_A(j-1) - h_A(j-1-a)]_+.
/// simplified_applicable records whether j lies in the range
/// 2j <= a_{r+1} + sum_{i<=r}(a_i - 1) where the unclamped form is valid.
struct FirstDifference {
    Integer value;
    bool simplified_applicable = false;
};

inline FirstDifference expected_first_difference(const ExponentConfig& config, long long j) {
    if (config.count() != config.num_vars + 1)
        throw std::invalid_argument(
            "expected_first_difference: need exactly num_vars + 1 exponents");
    const ExponentConfig ci(config.num_vars,
                            {config.exponents.begin(), config.exponents.end() - 1});
    const HilbertFunction hA = ci_hilbert(ci);
    const long long a = config.exponents.back();
    const Integer bracket_j = pos_part(hA.value(j) - hA.value(j - a));
    const Integer bracket_jm1 = pos_part(hA.value(j - 1) - hA.value(j - 1 - a));
    FirstDifference out;
    out.value = bracket_j - bracket_jm1;
    out.simplified_applicable = 2 * j <= a + hA.socle_degree;
    return out;
}

/// Coefficient list of (1 + z + ... + z^d)^k.
inline std::vector<Integer> power_expansion_coeffs(long long d, int k) {
    if (d < 0 || k < 0)
        throw std::invalid_argument("power_expansion_coeffs: need d >= 0, k >= 0");
    std::vector<Integer> h{Integer(1)};
    for (int i = 0; i < k; ++i) detail::multiply_by_geometric(h, d + 1);
    return h;
}

/// For the coefficients c of (1 + z + ... + z^d)^{2n}, compares the growth of
/// the middle against the step one block earlier:
///     c[nd] - c[nd-1]  <=  c[nd-d-1] - c[nd-d-2].
struct CoefficientGrowth {
    bool holds = false;
    Integer lhs;
    Integer rhs;
};

inline CoefficientGrowth coefficient_growth_holds(int n, long long d) {
    if (n < 1 || d < 1)
        throw std::invalid_argument("coefficient_growth_holds: need n >= 1, d >= 1");
    const long long mid = static_cast<long long>(n) * d;
    if (mid - d - 2 < 0)
        throw std::out_of_range("coefficient_growth_holds: nd - d - 2 is negative");
    const std::vector<Integer> c = power_expansion_coeffs(d, 2 * n);
    const auto at = [&](long long i) -> const Integer& {
        return c[static_cast<std::size_t>(i)];
    };
    CoefficientGrowth out;
    out.lhs = at(mid) - at(mid - 1);
    out.rhs = at(mid - d - 1) - at(mid - d - 2);
    out.holds = out.lhs <= out.rhs;
    return out;
}

}  // namespace wlp
