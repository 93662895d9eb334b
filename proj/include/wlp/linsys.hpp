#pragma once

/**
 * Linear systems of hypersurfaces through general fat points.
 *
 * L_r(j; m_1,...,m_n) is the space of degree-j forms on P^r vanishing to
 * order m_i at n general points; all dimensions are vector-space dimensions
 * of the homogeneous piece.  The exact evaluation pipeline combines
 *
 *   - Cremona transformations (dimension-preserving, degree-decreasing),
 *   - cone reductions when a multiplicity equals the degree,
 *   - Bezout peeling of conics/lines in the plane (at most six points),
 *   - closed formulas in standard form (plane, and space with <= 6 points).
 *
 * dim_linear_system applies these until a formula fires; when none does it
 * reports no dimension and leaves the terminal system in the trace so a rank
 * oracle can take over.
 */

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hilbert.hpp"
#include "integer.hpp"

namespace wlp {

struct precondition_error : std::domain_error {
    int index;
    precondition_error(const std::string& what, int idx)
        : std::domain_error(what), index(idx) {}
};
struct not_applicable : std::domain_error {
    using std::domain_error::domain_error;
};
struct not_standard_form : std::domain_error {
    using std::domain_error::domain_error;
};
struct too_many_points : std::domain_error {
    using std::domain_error::domain_error;
};
struct hypotheses_fail : std::domain_error {
    using std::domain_error::domain_error;
};

/// Normalized fat-point system: multiplicities sorted nonincreasing with
/// nonpositive entries dropped (they impose no conditions).  The degree may
/// be negative, which denotes the empty system.
struct FatPointSystem {
    int proj_dim = 2;
    long long degree = 0;
    std::vector<long long> mults;

    FatPointSystem() = default;
    FatPointSystem(int r, long long j, std::vector<long long> m)
        : proj_dim(r), degree(j) {
        if (r < 0) throw std::invalid_argument("FatPointSystem: proj_dim must be >= 0");
        for (long long v : m)
            if (v > 0) mults.push_back(v);
        std::sort(mults.begin(), mults.end(), std::greater<>());
    }

    bool operator==(const FatPointSystem&) const = default;

    /// Multiplicity by rank, zero-padded past the stored list.
    long long mult(std::size_t i) const { return i < mults.size() ? mults[i] : 0; }
};

/// Lower bound max{0, C(j+r, r) - sum_i C(m_i + r - 1, r)} for the dimension;
/// exact exactly when the system is non-special.
inline Integer expected_dimension(const FatPointSystem& s) {
    if (s.degree < 0) return 0;
    Integer dim = binomial_or_zero(s.degree + s.proj_dim, s.proj_dim);
    for (long long m : s.mults)
        dim -= binomial_or_zero(m + s.proj_dim - 1, s.proj_dim);
    return pos_part(dim);
}

/// Standard form: degree >= 0 and (r-1)j >= m_1 + ... + m_{r+1} for the r+1
/// largest multiplicities (zero-padded).
inline bool is_standard_form(const FatPointSystem& s) {
    if (s.proj_dim < 2)
        throw std::invalid_argument("is_standard_form: need proj_dim >= 2");
    if (s.degree < 0) return false;
    long long top = 0;
    for (std::size_t i = 0; i <= static_cast<std::size_t>(s.proj_dim); ++i)
        top += s.mult(i);
    return (s.proj_dim - 1) * s.degree >= top;
}

/// One Cremona transformation based at r+1 general points carrying the
/// largest multiplicities.  With m = (r-1)j - (m_1+...+m_{r+1}) the degree
/// and the touched multiplicities all shift by m; the dimension is preserved.
/// Requires m_i + m >= 0 for every touched point (zero-padded points count).
struct CremonaStep {
    long long shift = 0;
    int touched = 0;
    FatPointSystem before;
    FatPointSystem after;
};

inline CremonaStep cremona_transform(const FatPointSystem& s) {
    const int r = s.proj_dim;
    if (r < 2) throw std::invalid_argument("cremona_transform: need proj_dim >= 2");
    if (s.degree < 0) throw not_applicable("cremona_transform: negative degree");
    std::vector<long long> m(s.mults);
    while (m.size() < static_cast<std::size_t>(r) + 1) m.push_back(0);
    long long shift = static_cast<long long>(r - 1) * s.degree;
    for (int i = 0; i <= r; ++i) shift -= m[static_cast<std::size_t>(i)];
    for (int i = 0; i <= r; ++i)
        if (m[static_cast<std::size_t>(i)] + shift < 0)
            throw precondition_error("cremona_transform: multiplicity would drop below zero", i);
    for (int i = 0; i <= r; ++i) m[static_cast<std::size_t>(i)] += shift;
    CremonaStep step;
    step.shift = shift;
    step.touched = r + 1;
    step.before = s;
    step.after = FatPointSystem(r, s.degree + shift, std::move(m));
    return step;
}

/// When some multiplicity equals the degree the system is a cone: the point
/// drops out and the ambient dimension falls by one, same degree.
inline FatPointSystem cone_reduction(const FatPointSystem& s) {
    if (s.proj_dim < 1) throw std::invalid_argument("cone_reduction: need proj_dim >= 1");
    if (s.mults.empty() || s.mults.front() != s.degree || s.degree < 0)
        throw not_applicable("cone_reduction: no multiplicity equals the degree");
    std::vector<long long> rest(s.mults.begin() + 1, s.mults.end());
    return FatPointSystem(s.proj_dim - 1, s.degree, std::move(rest));
}

/// In the plane, standard form implies non-special: the expected dimension is
/// the dimension.
inline Integer dim_standard_p2(const FatPointSystem& s) {
    if (s.proj_dim != 2) throw std::invalid_argument("dim_standard_p2: need proj_dim == 2");
    if (!is_standard_form(s)) throw not_standard_form("dim_standard_p2: not in standard form");
    return expected_dimension(s);
}

/// Plane system on at most six points whose multiplicities (ascending
/// m_1 <= ... <= m_6, zero-padded) satisfy j >= m_5 + m_6 and
/// 2j >= m_2 + ... + m_6: the points impose independent conditions and
/// dim = C(j+2, 2) - sum_i C(m_i + 1, 2).
inline Integer dim_p2_nef(const FatPointSystem& s) {
    if (s.proj_dim != 2) throw std::invalid_argument("dim_p2_nef: need proj_dim == 2");
    if (s.mults.size() > 6) throw too_many_points("dim_p2_nef: more than six points");
    if (s.degree < 0) throw hypotheses_fail("dim_p2_nef: negative degree");
    std::array<long long, 6> m{};
    for (std::size_t i = 0; i < s.mults.size(); ++i) m[i] = s.mults[i];
    std::sort(m.begin(), m.end());
    if (s.degree < m[4] + m[5])
        throw hypotheses_fail("dim_p2_nef: j < m5 + m6");
    if (2 * s.degree < m[1] + m[2] + m[3] + m[4] + m[5])
        throw hypotheses_fail("dim_p2_nef: 2j < m2 + ... + m6");
    Integer dim = binomial_or_zero(s.degree + 2, 2);
    for (long long mi : m) dim -= binomial_or_zero(mi + 1, 2);
    return dim;  // conditions are independent, so this is >= 0
}

/// Space systems on at most six points in standard form, multiplicities
/// sorted nonincreasing so a_1 is maximal.  With t_i = a_1 + a_i - j,
///   dim = max{0, C(j+3,3) - sum_i C(a_i+2,3)} + sum_{i=2}^{6} C(t_i+1, 3).
inline Integer dim_dl_p3(const FatPointSystem& s) {
    if (s.proj_dim != 3) throw std::invalid_argument("dim_dl_p3: need proj_dim == 3");
    if (s.mults.size() > 6) throw too_many_points("dim_dl_p3: more than six points");
    if (!is_standard_form(s)) throw not_standard_form("dim_dl_p3: not in standard form");
    std::array<long long, 6> a{};
    for (std::size_t i = 0; i < s.mults.size(); ++i) a[i] = s.mults[i];
    Integer dim = binomial_or_zero(s.degree + 3, 3);
    for (long long ai : a) dim -= binomial_or_zero(ai + 2, 3);
    dim = pos_part(dim);
    for (int i = 1; i < 6; ++i) dim += binomial_or_zero(a[0] + a[i] - s.degree + 1, 3);
    return dim;
}

/// Bezout peeling record: a conic through five of six points, a line through
/// two, or a cone point split off by the dispatcher.
struct PeelStep {
    enum class Kind { Conic5, Line2, ConePoint };
    Kind kind = Kind::Line2;
    long long multiplicity_removed = 0;
    FatPointSystem before;
    FatPointSystem after;
};

struct PeelResult {
    FatPointSystem residual;
    std::vector<PeelStep> steps;
};

/// Remove forced fixed divisors from a plane system on at most six points:
/// while some conic through five points has sum m_i - 2j > 0 or some line
/// through two points has m_i + m_k - j > 0, split it off with the matching
/// multiplicity.  Each peel preserves the dimension; multiplicities are
/// clamped at zero.  Conic peels run before line peels in every pass.
inline PeelResult peel_base_locus_p2(const FatPointSystem& s) {
    if (s.proj_dim != 2)
        throw std::invalid_argument("peel_base_locus_p2: need proj_dim == 2");
    if (s.mults.size() > 6)
        throw too_many_points("peel_base_locus_p2: more than six points");
    long long j = s.degree;
    std::array<long long, 6> m{};
    for (std::size_t i = 0; i < s.mults.size(); ++i) m[i] = s.mults[i];

    PeelResult out;
    const auto snapshot = [&]() {
        return FatPointSystem(2, j, {m.begin(), m.end()});
    };
    bool changed = true;
    while (changed && j >= 0) {
        changed = false;
        for (int skip = 5; skip >= 0 && j >= 0; --skip) {
            long long sum = 0;
            for (int i = 0; i < 6; ++i)
                if (i != skip) sum += m[static_cast<std::size_t>(i)];
            const long long c = sum - 2 * j;
            if (c <= 0) continue;
            PeelStep step;
            step.kind = PeelStep::Kind::Conic5;
            step.multiplicity_removed = c;
            step.before = snapshot();
            j -= 2 * c;
            for (int i = 0; i < 6; ++i)
                if (i != skip)
                    m[static_cast<std::size_t>(i)] =
                        std::max(0LL, m[static_cast<std::size_t>(i)] - c);
            step.after = snapshot();
            out.steps.push_back(std::move(step));
            changed = true;
        }
        for (int i = 0; i < 6 && j >= 0; ++i) {
            for (int k = i + 1; k < 6 && j >= 0; ++k) {
                const long long c = m[static_cast<std::size_t>(i)] +
                                    m[static_cast<std::size_t>(k)] - j;
                if (c <= 0) continue;
                PeelStep step;
                step.kind = PeelStep::Kind::Line2;
                step.multiplicity_removed = c;
                step.before = snapshot();
                j -= c;
                m[static_cast<std::size_t>(i)] =
                    std::max(0LL, m[static_cast<std::size_t>(i)] - c);
                m[static_cast<std::size_t>(k)] =
                    std::max(0LL, m[static_cast<std::size_t>(k)] - c);
                step.after = snapshot();
                out.steps.push_back(std::move(step));
                changed = true;
            }
        }
    }
    out.residual = snapshot();
    return out;
}

/// Inverse-system reduction: for r+1 powers of general linear forms in r
/// variables plus one general linear form, the degree-j graded piece of
/// R/(I, ell) has the dimension of L_{r-2}(j; j-a_1+1, ..., j-a_{r+1}+1).
/// Nonpositive multiplicities drop out.
inline FatPointSystem reduce_to_fat_points(const ExponentConfig& config, long long j) {
    if (config.num_vars < 2)
        throw std::invalid_argument("reduce_to_fat_points: need at least two variables");
    if (j < 1) throw std::invalid_argument("reduce_to_fat_points: need degree j >= 1");
    std::vector<long long> m;
    m.reserve(config.exponents.size());
    for (long long a : config.exponents) m.push_back(j - a + 1);
    return FatPointSystem(config.num_vars - 2, j, std::move(m));
}

using ReductionStep = std::variant<CremonaStep, PeelStep>;

/// Outcome of the exact dispatcher.  `dimension` is empty when no exact
/// method applied; `terminal` is the system on which evaluation stopped and
/// `method` names the terminal rule (or why none fired).
struct LinSysResult {
    std::optional<Integer> dimension;
    std::vector<ReductionStep> trace;
    FatPointSystem terminal;
    std::string method;
};

inline LinSysResult dim_linear_system(const FatPointSystem& sys) {
    LinSysResult out;
    FatPointSystem s = sys;
    for (int guard = 0; guard < 100000; ++guard) {
        if (s.degree < 0) {
            out.dimension = 0;
            out.method = "empty-negative-degree";
            break;
        }
        if (s.proj_dim == 0) {
            // P^0 is a point: a nonzero constant-multiple survives only with
            // no vanishing condition at all.
            out.dimension = s.mults.empty() ? 1 : 0;
            out.method = "point";
            break;
        }
        if (s.mults.empty()) {
            out.dimension = binomial_or_zero(s.degree + s.proj_dim, s.proj_dim);
            out.method = "no-conditions";
            break;
        }
        if (s.mults.front() > s.degree) {
            // order of vanishing at a point cannot exceed the degree
            out.dimension = 0;
            out.method = "empty-multiplicity-exceeds-degree";
            break;
        }
        if (s.proj_dim == 1) {
            long long sum = 0;
            for (long long m : s.mults) sum += m;
            out.dimension = pos_part(Integer(s.degree + 1 - sum));
            out.method = "points-on-line";
            break;
        }
        if (s.mults.front() == s.degree) {
            PeelStep step;
            step.kind = PeelStep::Kind::ConePoint;
            step.multiplicity_removed = s.degree;
            step.before = s;
            s = cone_reduction(s);
            step.after = s;
            out.trace.push_back(std::move(step));
            continue;
        }
        if (s.proj_dim >= 3 && !is_standard_form(s) &&
            s.mults.size() >= static_cast<std::size_t>(s.proj_dim) + 1) {
            bool applicable = true;
            {
                long long shift = static_cast<long long>(s.proj_dim - 1) * s.degree;
                for (int i = 0; i <= s.proj_dim; ++i) shift -= s.mult(static_cast<std::size_t>(i));
                for (int i = 0; i <= s.proj_dim; ++i)
                    if (s.mult(static_cast<std::size_t>(i)) + shift < 0) applicable = false;
            }
            if (!applicable) {
                out.method = "unknown-cremona-blocked";
                break;
            }
            CremonaStep step = cremona_transform(s);
            s = step.after;
            out.trace.push_back(std::move(step));
            continue;
        }
        if (s.proj_dim == 2 && s.mults.size() <= 6) {
            PeelResult peel = peel_base_locus_p2(s);
            if (!peel.steps.empty()) {
                for (auto& st : peel.steps) out.trace.push_back(std::move(st));
                s = peel.residual;
                continue;
            }
            // peel-fixed plane systems on <= 6 points always satisfy the
            // independence hypotheses
            out.dimension = dim_p2_nef(s);
            out.method = "nef-p2";
            break;
        }
        if (s.proj_dim == 2) {
            if (is_standard_form(s)) {
                out.dimension = dim_standard_p2(s);
                out.method = "standard-p2";
            } else {
                out.method = "unknown-p2-many-points";
            }
            break;
        }
        if (s.proj_dim == 3 && s.mults.size() <= 6 && is_standard_form(s)) {
            out.dimension = dim_dl_p3(s);
            out.method = "dl-p3";
            break;
        }
        out.method = "unknown-no-method";
        break;
    }
    out.terminal = s;
    return out;
}

}  // namespace wlp
