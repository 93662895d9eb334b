#pragma once

/**
 * Weak Lefschetz classification for almost complete intersections generated
 * by powers of general linear forms: n = r + 1 powers in r variables.
 *
 * classify() routes a configuration to the sharpest covering criterion and
 * returns a verdict.  Every failure verdict names the decision rule, the
 * failing degree j (the map [R/I]_{j-1} -> [R/I]_j), whether injectivity or
 * surjectivity breaks, and a recomputed certificate comparing the actual
 * dimension of [R/(I,ell)]_j against max{h(j) - h(j-1), 0}.  Certificates are
 * recomputed from the fat-point dispatcher, never copied out of the rules.
 */

#include <array>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hilbert.hpp"
#include "integer.hpp"
#include "linsys.hpp"

namespace wlp {

struct unsupported_shape : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct no_exact_method : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class WlpStatus { Holds, Fails, ConjecturedFails, Undetermined };
enum class FailureMode { Injectivity, Surjectivity };

inline const char* to_string(WlpStatus s) {
    switch (s) {
        case WlpStatus::Holds: return "Holds";
        case WlpStatus::Fails: return "Fails";
        case WlpStatus::ConjecturedFails: return "ConjecturedFails";
        default: return "Undetermined";
    }
}
inline const char* to_string(FailureMode m) {
    return m == FailureMode::Injectivity ? "Injectivity" : "Surjectivity";
}

/// Hook for rank-oracle assistance: computes dim [R/(I,ell)]_j for a
/// configuration when the symbolic dispatcher has no exact method.
using DimOracle = std::function<Integer(const ExponentConfig&, long long)>;

/// Witness that multiplication by ell drops rank in one degree:
/// actual = dim [R/(I,ell)]_degree, expected = max{h(degree) - h(degree-1), 0},
/// gap = actual - expected (>= 1 exactly when maximal rank fails there).
struct FailureCertificate {
    long long degree = 0;
    Integer actual;
    Integer expected;
    Integer gap;
    std::string via;          // dispatcher method or "rank-oracle"
    bool oracle_used = false;
};

inline FailureCertificate failure_certificate(const ExponentConfig& config, long long j,
                                              const DimOracle& fallback = {}) {
    const FatPointSystem fat = reduce_to_fat_points(config, j);
    const LinSysResult lin = dim_linear_system(fat);
    FailureCertificate cert;
    cert.degree = j;
    if (lin.dimension) {
        cert.actual = *lin.dimension;
        cert.via = lin.method;
    } else if (fallback) {
        cert.actual = fallback(config, j);
        cert.via = "rank-oracle";
        cert.oracle_used = true;
    } else {
        throw no_exact_method(
            "failure_certificate: no exact method applies and no oracle fallback given");
    }
    cert.expected = pos_part(expected_first_difference(config, j).value);
    cert.gap = cert.actual - cert.expected;
    return cert;
}

struct WlpVerdict {
    WlpStatus status = WlpStatus::Undetermined;
    std::string theorem;                          // decision-rule tag
    std::optional<long long> failure_degree;      // j of the failing map
    std::optional<FailureMode> mode;
    std::optional<FailureCertificate> certificate;
    bool degree_ambiguous = false;
    std::string note;
};

struct ClassifyOptions {
    bool attach_certificate = true;
    DimOracle fallback;
};

namespace detail {

inline WlpVerdict holds_verdict(std::string theorem, std::string note = {}) {
    WlpVerdict v;
    v.status = WlpStatus::Holds;
    v.theorem = std::move(theorem);
    v.note = std::move(note);
    return v;
}

inline WlpVerdict fails_verdict(const ExponentConfig& config, long long degree,
                                std::string theorem, const ClassifyOptions& opts,
                                bool ambiguous = false) {
    WlpVerdict v;
    v.status = WlpStatus::Fails;
    v.theorem = std::move(theorem);
    v.failure_degree = degree;
    v.degree_ambiguous = ambiguous;
    v.mode = expected_first_difference(config, degree).value >= 0
                 ? FailureMode::Injectivity
                 : FailureMode::Surjectivity;
    if (opts.attach_certificate) {
        try {
            v.certificate = failure_certificate(config, degree, opts.fallback);
        } catch (const no_exact_method&) {
            v.note = "certificate unavailable without a rank oracle";
        }
    }
    return v;
}

inline WlpVerdict undetermined_verdict(std::string note) {
    WlpVerdict v;
    v.status = WlpStatus::Undetermined;
    v.theorem = "none";
    v.note = std::move(note);
    return v;
}

/// The nine sporadic failing families with smallest power 3 (even sum):
/// (3, a2, m, m+d4, m+d5) with m >= a2.
inline bool matches_sporadic_family(const std::array<long long, 5>& a) {
    if (a[0] != 3) return false;
    const long long m = a[2];
    if (m < a[1]) return false;
    struct Fam {
        long long a2, d4, d5;
    };
    static constexpr Fam fams[] = {{9, 0, 0},  {10, 1, 1}, {11, 0, 1},
                                   {11, 2, 2}, {12, 1, 2}, {12, 3, 3},
                                   {13, 0, 2}, {13, 2, 3}, {13, 4, 4}};
    for (const Fam& f : fams)
        if (a[1] == f.a2 && a[3] == m + f.d4 && a[4] == m + f.d5) return true;
    return false;
}

/// First degree with a positive symbolic certificate gap, if any.
inline std::optional<FailureCertificate> find_failure_witness(
    const ExponentConfig& config, const DimOracle& fallback = {}) {
    const HilbertFunction h = aci_hilbert(config);
    for (long long j = 1; j <= h.socle_degree; ++j) {
        try {
            FailureCertificate c = failure_certificate(config, j, fallback);
            if (c.gap >= 1) return c;
        } catch (const no_exact_method&) {
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// Five powers in four variables.
inline WlpVerdict four_vars(std::array<long long, 5> a, const ClassifyOptions& opts = {}) {
    std::sort(a.begin(), a.end());
    if (a[0] < 1) throw std::invalid_argument("four_vars: exponents must be >= 1");
    const ExponentConfig config(4, {a.begin(), a.end()});
    const long long s4 = a[0] + a[1] + a[2] + a[3];
    const bool even = s4 % 2 == 0;
    const long long lambda = even ? s4 / 2 - 2 : (s4 - 5) / 2;

    if (even && a[4] >= lambda) return detail::holds_verdict("thm-3.2(i)");
    if (!even && a[4] >= lambda - 1) return detail::holds_verdict("thm-3.5(i)");
    if (a[0] == 1)
        return detail::holds_verdict("three-variables",
                                     "a power is linear; reduces to three variables");
    if (a[0] == 2) return detail::holds_verdict("thm-3.8");
    if (even) {
        if (a[0] + a[3] >= a[1] + a[2])
            return detail::fails_verdict(config, lambda, "thm-3.2(ii)", opts);
        if (2 * a[4] + a[0] - a[1] - a[2] - a[3] >= 0)
            return detail::fails_verdict(config, lambda, "thm-3.2(iii)", opts);
        if (detail::matches_sporadic_family(a))
            return detail::fails_verdict(config, lambda - 1, "rem-3.4(ii)", opts,
                                         /*ambiguous=*/true);
    } else {
        if (a[0] + a[3] >= a[1] + a[2])
            return detail::fails_verdict(config, lambda, "thm-3.5(ii)", opts);
        if (2 * a[4] + 3 + a[0] - a[1] - a[2] - a[3] >= 0)
            return detail::fails_verdict(config, lambda, "thm-3.5(iii)", opts);
    }
    return detail::undetermined_verdict("four variables: outside the decided regions");
}

/// Six powers in five variables.
inline WlpVerdict five_vars(std::array<long long, 6> a, const ClassifyOptions& opts = {}) {
    std::sort(a.begin(), a.end());
    if (a[0] < 1) throw std::invalid_argument("five_vars: exponents must be >= 1");
    const ExponentConfig config(5, {a.begin(), a.end()});
    const long long d = a[0];

    const bool uniform5 = a[1] == d && a[2] == d && a[3] == d && a[4] == d;
    if (uniform5 && a[5] == d) {
        if (d <= 3) return detail::holds_verdict("thm-4.1");
        return detail::fails_verdict(config, 2 * d - 1, "thm-4.1", opts);
    }
    if (uniform5 && a[5] > d) {
        const long long e = a[5] - d;
        const bool odd = d % 2 == 1;
        if (odd ? (2 * e >= 3 * d - 5) : (2 * e >= 3 * d - 8))
            return detail::holds_verdict("thm-4.3");
        long long degree;
        if (e <= d - (odd ? 2 : 3))
            degree = 2 * d - 1 + e / 2;
        else
            degree = odd ? (5 * d - 5) / 2 : (5 * d - 6) / 2;
        return detail::fails_verdict(config, degree, "thm-4.3", opts);
    }
    if (a[0] >= 5 && a[5] <= a[0] + 2) {
        // near-uniform: fails, witness degree located by the dispatcher
        if (auto cert = detail::find_failure_witness(config, opts.fallback)) {
            WlpVerdict v = detail::fails_verdict(config, cert->degree, "prop-4.5", opts);
            if (!v.certificate) v.certificate = *cert;
            return v;
        }
        WlpVerdict v;
        v.status = WlpStatus::Fails;
        v.theorem = "prop-4.5";
        v.note = "failing degree not located symbolically";
        return v;
    }
    if (a[1] == d + 1 && a[2] == d + 2 && a[3] == d + 3 && a[4] == d + 4 &&
        a[5] == d + 5 && d >= 4)
        return detail::fails_verdict(config, 2 * d + 4, "ex-4.6(i)", opts);
    if (a[1] == d + 3 && a[2] == d + 4 && a[3] == d + 7 && a[4] == d + 7 &&
        a[5] == d + 10 && d >= 4)
        return detail::fails_verdict(config, 2 * d + 9, "ex-4.6(ii)", opts);
    return detail::undetermined_verdict("five variables: outside the decided regions");
}

/// 2n+1 equal powers d in 2n variables.
inline WlpVerdict even_vars_uniform(int n, long long d, const ClassifyOptions& opts = {}) {
    if (n < 1 || d < 1) throw std::invalid_argument("even_vars_uniform: need n, d >= 1");
    if (n == 1) return detail::holds_verdict("two-variables");
    if (n == 2) return four_vars({d, d, d, d, d}, opts);
    if (d == 1) return detail::holds_verdict("socle-zero", "quotient is the base field");
    const ExponentConfig config(2 * n, std::vector<long long>(2 * n + 1, d));
    return detail::fails_verdict(config, static_cast<long long>(n) * d - n, "thm-5.1", opts);
}

/// 2n+2 equal powers d in 2n+1 variables.
inline WlpVerdict odd_vars_uniform(int num_vars, long long d, const ClassifyOptions& opts = {}) {
    if (num_vars < 3 || num_vars % 2 == 0 || d < 1)
        throw std::invalid_argument("odd_vars_uniform: need odd num_vars >= 3 and d >= 1");
    if (num_vars == 3) return detail::holds_verdict("three-variables");
    if (num_vars == 5) return five_vars({d, d, d, d, d, d}, opts);
    if (d == 1) return detail::holds_verdict("socle-zero", "quotient is the base field");
    if (num_vars == 7) {
        if (d == 2) return detail::holds_verdict("thm-5.5");
        if (d == 3) {
            WlpVerdict v;
            v.status = WlpStatus::ConjecturedFails;
            v.theorem = "conj-5.6";
            v.note = "expected failure of surjectivity in degree 6; not proved";
            return v;
        }
        const ExponentConfig config(7, std::vector<long long>(8, d));
        return detail::fails_verdict(config, 17 * (d - 1) / 5, "thm-5.5", opts);
    }
    WlpVerdict v;
    v.status = WlpStatus::ConjecturedFails;
    v.theorem = "conj-5.6";
    v.note = "conjectured failure for 2n+2 uniform powers, n >= 4";
    return v;
}

/// Expected first difference at the critical degree for eight uniform powers
/// d in seven variables, scaled by 5! = 120.  Writing d - 1 = 5e + (case - 1)
/// and j = floor(17(d-1)/5), this equals 120 * (h(j) - h(j-1)).
inline Integer seven_var_case_polynomial(long long e, int case_id) {
    if (e < 0) throw std::invalid_argument("seven_var_case_polynomial: need e >= 0");
    const Integer E = e;
    switch (case_id) {
        case 1:
            return ((((Integer(-101995) * E - 69925) * E - 15975) * E + 565) * E + 730) * E +
                   120;
        case 2:
            return ((((Integer(-101995) * E - 139850) * E - 60225) * E - 1330) * E + 5080) *
                       E +
                   960;
        case 3:
            return ((((Integer(-101995) * E - 209775) * E - 133975) * E - 8145) * E +
                    19730) *
                       E +
                   5040;
        case 4:
            return ((((Integer(-101995) * E - 359875) * E - 499175) * E - 336365) * E -
                    107910) *
                       E -
                   12600;
        case 5:
            return Integer(-5) * (E + 1) *
                   ((((Integer(20399) * E + 65561) * E + 74044) * E + 32716) * E + 3840);
        default:
            throw std::invalid_argument("seven_var_case_polynomial: case must be 1..5");
    }
}

/// Top-level dispatch.  Requires n = r + 1 powers in r variables.  Linear
/// powers (exponent 1) are quotiented away first: each removes one variable
/// and keeps the almost-complete-intersection shape.
inline WlpVerdict classify(const ExponentConfig& config, const ClassifyOptions& opts = {}) {
    if (config.count() != config.num_vars + 1)
        throw unsupported_shape("classify: need exactly num_vars + 1 powers");
    ExponentConfig c = config;
    while (!c.exponents.empty() && c.exponents.front() == 1) {
        if (c.num_vars == 1)
            return detail::holds_verdict("socle-zero", "quotient is the base field");
        c = ExponentConfig(c.num_vars - 1,
                           {c.exponents.begin() + 1, c.exponents.end()});
    }
    const int r = c.num_vars;
    if (r == 1) return detail::holds_verdict("univariate");
    if (r == 2) return detail::holds_verdict("two-variables");
    if (r == 3) return detail::holds_verdict("three-variables");
    if (r == 4) {
        std::array<long long, 5> a{};
        std::copy(c.exponents.begin(), c.exponents.end(), a.begin());
        return four_vars(a, opts);
    }
    if (r == 5) {
        std::array<long long, 6> a{};
        std::copy(c.exponents.begin(), c.exponents.end(), a.begin());
        return five_vars(a, opts);
    }
    const bool uniform =
        std::all_of(c.exponents.begin(), c.exponents.end(),
                    [&](long long v) { return v == c.exponents.front(); });
    if (uniform) {
        if (r % 2 == 0) return even_vars_uniform(r / 2, c.exponents.front(), opts);
        return odd_vars_uniform(r, c.exponents.front(), opts);
    }
    return detail::undetermined_verdict(
        "more than five variables and non-uniform powers: no covering criterion");
}

}  // namespace wlp
