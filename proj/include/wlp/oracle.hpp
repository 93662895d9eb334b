#pragma once

/**
 * Exact rank oracle over a prime field.  Instantiates random linear forms,
 * builds multiplication matrices degree by degree, and measures dimensions by
 * Gaussian elimination.  All results are exact integers mod p; a computed
 * dimension can only overestimate the generic one (rank is lower
 * semicontinuous), so agreement with an expected value certifies it.
 *
 * Working basis: the first r generators are taken as coordinate powers
 * x_i^{a_i} (any r independent forms can be moved there by a linear change),
 * so [R/(x^a)]_j has the monomial box basis {x^e : e_i < a_i}.  The extra
 * generator and the Lefschetz test form stay random.  Multiples of either are
 * expanded and projected onto the box, which keeps matrices at Hilbert-function
 * size instead of full-polynomial-ring size.
 */

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "classify.hpp"
#include "hilbert.hpp"
#include "integer.hpp"
#include "linsys.hpp"

namespace wlp {

struct degenerate_sample : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr unsigned long long kDefaultPrime = 2147483647ull;            // 2^31 - 1
inline constexpr unsigned long long kSecondaryPrime = 2305843009213693951ull; // 2^61 - 1

struct PrimeFieldConfig {
    unsigned long long prime = kDefaultPrime;
    unsigned long long seed = 0;
    int retries = 3;  // independent samples before a rank deficiency counts as persistent
};

class SplitMix64 {
public:
    explicit SplitMix64(unsigned long long seed) : state_(seed) {}
    unsigned long long next() {
        unsigned long long z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

private:
    unsigned long long state_;
};

namespace detail {

// deterministic Miller-Rabin; this witness set decides primality for all 64-bit inputs
inline bool is_prime_u64(unsigned long long n) {
    constexpr unsigned long long witnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (const unsigned long long q : witnesses)
        if (n % q == 0) return n == q;
    if (n < 2) return false;
    unsigned long long d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    const auto mulmod = [n](unsigned long long a, unsigned long long b) {
        return static_cast<unsigned long long>(static_cast<unsigned __int128>(a) * b % n);
    };
    for (const unsigned long long a : witnesses) {
        unsigned long long x = 1, base = a % n, e = d;
        while (e) {
            if (e & 1) x = mulmod(x, base);
            base = mulmod(base, base);
            e >>= 1;
        }
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s && composite; ++i) {
            x = mulmod(x, x);
            if (x == n - 1) composite = false;
        }
        if (composite) return false;
    }
    return true;
}

}  // namespace detail

/// Arithmetic mod p with fast reduction for the two Mersenne defaults.
class PrimeField {
public:
    explicit PrimeField(unsigned long long p) : p_(p) {
        if (p < 2 || p >= (1ull << 62))
            throw std::invalid_argument("PrimeField: prime must be in [2, 2^62)");
        if (p == kDefaultPrime) {
            mode_ = Mode::Mersenne31;
        } else if (p == kSecondaryPrime) {
            mode_ = Mode::Mersenne61;
        } else {
            if (!detail::is_prime_u64(p))
                throw std::invalid_argument("PrimeField: modulus must be prime");
            mode_ = Mode::Generic;
        }
    }

    unsigned long long prime() const { return p_; }

    unsigned long long add(unsigned long long a, unsigned long long b) const {
        unsigned long long s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    unsigned long long sub(unsigned long long a, unsigned long long b) const {
        return a >= b ? a - b : a + p_ - b;
    }
    unsigned long long neg(unsigned long long a) const { return a == 0 ? 0 : p_ - a; }

    unsigned long long mul(unsigned long long a, unsigned long long b) const {
        const unsigned __int128 x = static_cast<unsigned __int128>(a) * b;
        switch (mode_) {
            case Mode::Mersenne31: {
                // x < 2^62; fold 31-bit limbs twice
                unsigned long long s = static_cast<unsigned long long>(x & p_) +
                                       static_cast<unsigned long long>(x >> 31);
                s = (s & p_) + (s >> 31);
                return s >= p_ ? s - p_ : s;
            }
            case Mode::Mersenne61: {
                unsigned long long s = static_cast<unsigned long long>(x & p_) +
                                       static_cast<unsigned long long>(x >> 61);
                s = (s & p_) + (s >> 61);
                return s >= p_ ? s - p_ : s;
            }
            default:
                return static_cast<unsigned long long>(x % p_);
        }
    }

    unsigned long long pow(unsigned long long a, unsigned long long e) const {
        unsigned long long acc = 1, base = a % p_;
        while (e) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    }
    unsigned long long inv(unsigned long long a) const {
        if (a % p_ == 0) throw std::domain_error("PrimeField: zero has no inverse");
        return pow(a, p_ - 2);
    }

private:
    enum class Mode { Mersenne31, Mersenne61, Generic };
    unsigned long long p_;
    Mode mode_;
};

/// Row echelon rank of a row-major rows x cols matrix; destroys the input.
inline long long rank_mod_p(std::vector<unsigned long long>& m, long long rows, long long cols,
                            const PrimeField& F) {
    long long rank = 0;
    for (long long c = 0; c < cols && rank < rows; ++c) {
        long long piv = -1;
        for (long long r = rank; r < rows; ++r)
            if (m[static_cast<size_t>(r) * cols + c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            std::swap_ranges(m.begin() + piv * cols + c, m.begin() + (piv + 1) * cols,
                             m.begin() + rank * cols + c);
        const unsigned long long pinv = F.inv(m[static_cast<size_t>(rank) * cols + c]);
        const unsigned long long* src = &m[static_cast<size_t>(rank) * cols];
        for (long long r = rank + 1; r < rows; ++r) {
            unsigned long long* dst = &m[static_cast<size_t>(r) * cols];
            if (dst[c] == 0) continue;
            const unsigned long long f = F.mul(dst[c], pinv);
            for (long long k = c; k < cols; ++k) dst[k] = F.sub(dst[k], F.mul(f, src[k]));
        }
        ++rank;
    }
    return rank;
}

namespace detail {

// Monomials are packed 8 bits per variable; enough for 8 variables of
// exponent < 256, which covers every configuration the oracle runs on.
using MonoKey = unsigned long long;
inline constexpr int kMaxPackedVars = 8;
inline constexpr long long kMaxPackedExp = 255;

inline void check_packable(int vars, long long degree) {
    if (vars < 1 || vars > kMaxPackedVars || degree > kMaxPackedExp)
        throw std::invalid_argument("oracle: supports at most 8 variables and degree 255");
}

inline long long key_exponent(MonoKey k, int var) {
    return static_cast<long long>((k >> (8 * var)) & 0xffu);
}

struct MonoBasis {
    std::vector<MonoKey> keys;                    // lexicographic by exponent vector
    std::unordered_map<MonoKey, int> index;
};

/// All monomials of the given degree with exponent of variable i at most caps[i].
inline MonoBasis build_basis(int vars, long long degree, const std::vector<long long>& caps) {
    check_packable(vars, degree < 0 ? 0 : degree);
    MonoBasis b;
    if (degree < 0) return b;
    std::vector<long long> e(static_cast<size_t>(vars), 0);
    auto rec = [&](auto&& self, int pos, long long rem, MonoKey key) -> void {
        if (pos == vars - 1) {
            if (rem <= caps[pos]) b.keys.push_back(key | (static_cast<MonoKey>(rem) << (8 * pos)));
            return;
        }
        const long long hi = std::min(caps[pos], rem);
        for (long long v = 0; v <= hi; ++v)
            self(self, pos + 1, rem - v, key | (static_cast<MonoKey>(v) << (8 * pos)));
    };
    rec(rec, 0, degree, 0);
    b.index.reserve(b.keys.size() * 2);
    for (int i = 0; i < static_cast<int>(b.keys.size()); ++i) b.index.emplace(b.keys[i], i);
    return b;
}

/// Expansion of (sum_i form[i] x_i)^k as (monomial, coefficient) pairs.
inline std::vector<std::pair<MonoKey, unsigned long long>> expand_power(
    const std::vector<unsigned long long>& form, long long k, const PrimeField& F) {
    check_packable(static_cast<int>(form.size()), k);
    std::unordered_map<MonoKey, unsigned long long> cur;
    cur.emplace(0, 1);
    for (long long step = 0; step < k; ++step) {
        std::unordered_map<MonoKey, unsigned long long> next;
        next.reserve(cur.size() * form.size());
        for (const auto& [key, c] : cur) {
            for (int i = 0; i < static_cast<int>(form.size()); ++i) {
                const unsigned long long coef = form[i] % F.prime();
                if (coef == 0) continue;
                auto [it, inserted] =
                    next.emplace(key + (static_cast<MonoKey>(1) << (8 * i)), 0);
                it->second = F.add(it->second, F.mul(c, coef));
            }
        }
        cur = std::move(next);
    }
    std::vector<std::pair<MonoKey, unsigned long long>> out(cur.begin(), cur.end());
    return out;
}

}  // namespace detail

/// n random linear forms in r variables, any r of them linearly independent.
inline std::vector<std::vector<unsigned long long>> sample_linear_forms(
    int r, int n, const PrimeFieldConfig& field) {
    if (r < 1 || n < 1) throw std::invalid_argument("sample_linear_forms: need r, n >= 1");
    const PrimeField F(field.prime);
    SplitMix64 rng(field.seed);
    const int max_tries = 16 * std::max(1, field.retries);
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        std::vector<std::vector<unsigned long long>> forms(
            static_cast<size_t>(n), std::vector<unsigned long long>(static_cast<size_t>(r)));
        for (auto& f : forms)
            for (auto& v : f) v = rng.next() % field.prime;
        const int k = std::min(r, n);
        std::vector<int> pick(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) pick[i] = i;
        bool ok = true;
        while (ok) {
            std::vector<unsigned long long> m;
            m.reserve(static_cast<size_t>(k) * r);
            for (int i : pick) m.insert(m.end(), forms[i].begin(), forms[i].end());
            if (rank_mod_p(m, k, r, F) < k) ok = false;
            // next k-combination of {0..n-1}
            int pos = k - 1;
            while (pos >= 0 && pick[pos] == n - k + pos) --pos;
            if (pos < 0) break;
            ++pick[pos];
            for (int t = pos + 1; t < k; ++t) pick[t] = pick[t - 1] + 1;
        }
        if (ok) return forms;
    }
    throw degenerate_sample("sample_linear_forms: no independent sample found");
}

/// dim_k [R/(L_1^{a_1}, ..., L_n^{a_n})]_j computed from first principles:
/// degree-j monomials modulo the span of all generator multiples.
inline long long quotient_dim(int num_vars, const std::vector<std::vector<unsigned long long>>& forms,
                              const std::vector<long long>& exponents, long long j,
                              const PrimeFieldConfig& field) {
    if (j < 0) throw std::invalid_argument("quotient_dim: degree must be >= 0");
    if (forms.size() != exponents.size())
        throw std::invalid_argument("quotient_dim: one exponent per form");
    const PrimeField F(field.prime);
    const std::vector<long long> caps(static_cast<size_t>(num_vars), j);
    const detail::MonoBasis basis = detail::build_basis(num_vars, j, caps);
    const long long cols = static_cast<long long>(basis.keys.size());
    std::vector<unsigned long long> m;
    long long rows = 0;
    for (size_t g = 0; g < forms.size(); ++g) {
        if (static_cast<int>(forms[g].size()) != num_vars)
            throw std::invalid_argument("quotient_dim: form length mismatch");
        const long long rem = j - exponents[g];
        if (rem < 0) continue;
        const auto terms = detail::expand_power(forms[g], exponents[g], F);
        const detail::MonoBasis mons = detail::build_basis(num_vars, rem, caps);
        for (const detail::MonoKey mk : mons.keys) {
            m.resize(m.size() + static_cast<size_t>(cols), 0);
            unsigned long long* row = &m[static_cast<size_t>(rows) * cols];
            for (const auto& [tk, c] : terms) {
                const auto it = basis.index.find(mk + tk);
                row[it->second] = F.add(row[it->second], c);
            }
            ++rows;
        }
    }
    return cols - rank_mod_p(m, rows, cols, F);
}

/// Degree-graded engine for one sampled instance of an almost complete
/// intersection: I = (x_1^{a_1}, ..., x_r^{a_r}, ell_gen^{a_{r+1}}).
class BoxEngine {
public:
    BoxEngine(const ExponentConfig& config, unsigned long long prime, unsigned long long seed)
        : config_(config), F_(prime), r_(config.num_vars) {
        if (config.count() != config.num_vars + 1)
            throw std::invalid_argument("BoxEngine: need num_vars + 1 powers");
        detail::check_packable(r_, 0);
        caps_.assign(config_.exponents.begin(), config_.exponents.end() - 1);
        for (auto& c : caps_) --c;
        extra_exp_ = config_.exponents.back();
        sample(seed);
        gen_terms_ = detail::expand_power(ell_gen_, extra_exp_, F_);
    }

    const PrimeField& field() const { return F_; }

    /// dim [R/I]_j for this instance.
    long long dim_rj(long long j) {
        if (j < 0) return 0;
        if (const auto it = dim_cache_.find(j); it != dim_cache_.end()) return it->second;
        const detail::MonoBasis& bj = basis(j);
        long long dim = static_cast<long long>(bj.keys.size());
        if (dim > 0 && j >= extra_exp_) {
            std::vector<unsigned long long> m;
            const long long rows = fill_rows(m, j, gen_terms_, extra_exp_);
            dim -= rank_mod_p(m, rows, dim, F_);
        }
        dim_cache_.emplace(j, dim);
        return dim;
    }

    /// dim [R/(I, ell_test^k)]_j for this instance.
    long long dim_quotient(long long j, long long k) {
        if (j < 0) return 0;
        if (k < 1) throw std::invalid_argument("BoxEngine: power must be >= 1");
        const detail::MonoBasis& bj = basis(j);
        const long long cols = static_cast<long long>(bj.keys.size());
        if (cols == 0) return 0;
        std::vector<unsigned long long> m;
        long long rows = 0;
        if (j >= extra_exp_) rows += fill_rows(m, j, gen_terms_, extra_exp_);
        if (j >= k) rows += fill_rows(m, j, test_terms(k), k);
        return cols - rank_mod_p(m, rows, cols, F_);
    }

private:
    void sample(unsigned long long seed) {
        SplitMix64 rng(seed);
        auto draw = [&](std::vector<unsigned long long>& f) {
            f.resize(static_cast<size_t>(r_));
            for (auto& v : f) v = rng.next() % F_.prime();
        };
        // general position within {x_1..x_r, ell_gen, ell_test}: both sampled
        // forms need all coordinates nonzero and all their 2x2 minors nonzero
        for (int attempt = 0; attempt < 64; ++attempt) {
            draw(ell_gen_);
            draw(ell_test_);
            bool ok = true;
            for (int i = 0; ok && i < r_; ++i)
                if (ell_gen_[i] == 0 || ell_test_[i] == 0) ok = false;
            for (int i = 0; ok && i < r_; ++i)
                for (int t = i + 1; ok && t < r_; ++t)
                    if (F_.mul(ell_gen_[i], ell_test_[t]) ==
                        F_.mul(ell_gen_[t], ell_test_[i]))
                        ok = false;
            if (ok) return;
        }
        throw degenerate_sample("BoxEngine: no nondegenerate sample found");
    }

    const detail::MonoBasis& basis(long long j) {
        auto it = basis_.find(j);
        if (it == basis_.end()) it = basis_.emplace(j, detail::build_basis(r_, j, caps_)).first;
        return it->second;
    }

    const std::vector<std::pair<detail::MonoKey, unsigned long long>>& test_terms(long long k) {
        auto it = test_terms_.find(k);
        if (it == test_terms_.end())
            it = test_terms_.emplace(k, detail::expand_power(ell_test_, k, F_)).first;
        return it->second;
    }

    /// Appends one row per box monomial of degree j - shift, the projection of
    /// (monomial * expansion) onto the degree-j box basis.  Returns row count.
    long long fill_rows(std::vector<unsigned long long>& m, long long j,
                        const std::vector<std::pair<detail::MonoKey, unsigned long long>>& terms,
                        long long shift) {
        const detail::MonoBasis& bj = basis(j);
        const detail::MonoBasis& bsrc = basis(j - shift);
        const long long cols = static_cast<long long>(bj.keys.size());
        const size_t base = m.size();
        m.resize(base + bsrc.keys.size() * static_cast<size_t>(cols), 0);
        long long row = 0;
        for (const detail::MonoKey mk : bsrc.keys) {
            unsigned long long* dst = &m[base + static_cast<size_t>(row) * cols];
            for (const auto& [tk, c] : terms) {
                const auto hit = bj.index.find(mk + tk);
                if (hit != bj.index.end()) dst[hit->second] = F_.add(dst[hit->second], c);
            }
            ++row;
        }
        return row;
    }

    ExponentConfig config_;
    PrimeField F_;
    int r_;
    std::vector<long long> caps_;
    long long extra_exp_ = 0;
    std::vector<unsigned long long> ell_gen_, ell_test_;
    std::vector<std::pair<detail::MonoKey, unsigned long long>> gen_terms_;
    std::map<long long, detail::MonoBasis> basis_;
    std::map<long long, std::vector<std::pair<detail::MonoKey, unsigned long long>>> test_terms_;
    std::map<long long, long long> dim_cache_;
};

/// Per-degree result of the multiplication-by-ell^k maximal rank test.
struct RankReport {
    long long degree = 0;
    long long dim_rj = 0;
    long long dim_rj_minus = 0;
    long long dim_quotient_ell = 0;
    long long expected = 0;       // pos_part(dim_rj - dim_rj_minus)
    bool maximal_rank = false;    // dim_quotient_ell == expected
    long long power_k = 1;
    unsigned long long prime = 0; // prime of the reported attempt
    int attempts = 1;             // samples consumed for this degree
};

namespace detail {

struct AttemptPlan {
    const PrimeFieldConfig& field;
    int total;
    unsigned long long prime_for(int a) const {
        const bool last = a == total - 1;
        if (last && total >= 2 && field.prime != kSecondaryPrime) return kSecondaryPrime;
        return field.prime;
    }
    unsigned long long seed_for(int a) const {
        return field.seed + 0x9E3779B97F4A7C15ull * static_cast<unsigned long long>(a);
    }
};

class EngineBank {
public:
    EngineBank(const ExponentConfig& config, const PrimeFieldConfig& field)
        : config_(config), plan_{field, std::max(1, field.retries)} {}

    int attempts() const { return plan_.total; }

    BoxEngine& at(int a) {
        if (static_cast<size_t>(a) >= engines_.size()) engines_.resize(static_cast<size_t>(a) + 1);
        if (!engines_[static_cast<size_t>(a)])
            engines_[static_cast<size_t>(a)] = std::make_unique<BoxEngine>(
                config_, plan_.prime_for(a), plan_.seed_for(a));
        return *engines_[static_cast<size_t>(a)];
    }

    /// Rank test at one degree: a deficiency must survive every attempt.
    RankReport report_at(long long j, long long power_k) {
        RankReport rep;
        for (int a = 0; a < plan_.total; ++a) {
            BoxEngine& E = at(a);
            rep.degree = j;
            rep.power_k = power_k;
            rep.dim_rj = E.dim_rj(j);
            rep.dim_rj_minus = E.dim_rj(j - power_k);
            rep.dim_quotient_ell = E.dim_quotient(j, power_k);
            rep.expected = std::max<long long>(rep.dim_rj - rep.dim_rj_minus, 0);
            rep.maximal_rank = rep.dim_quotient_ell == rep.expected;
            rep.prime = E.field().prime();
            rep.attempts = a + 1;
            if (rep.maximal_rank) break;
        }
        return rep;
    }

private:
    ExponentConfig config_;
    AttemptPlan plan_;
    std::vector<std::unique_ptr<BoxEngine>> engines_;
};

}  // namespace detail

/// Maximal-rank test of x ell_test^k : [R/I]_{j-k} -> [R/I]_j for every degree
/// with dim [R/I]_j > 0.  A dimension of zero under any sample certifies zero.
inline std::vector<RankReport> wlp_check(const ExponentConfig& config,
                                         const PrimeFieldConfig& field, long long power_k = 1) {
    if (power_k < 1) throw std::invalid_argument("wlp_check: power must be >= 1");
    detail::EngineBank bank(config, field);
    long long cap = 1;
    for (const long long a : config.exponents) cap += a - 1;
    std::vector<RankReport> reports;
    for (long long j = 1; j <= cap; ++j) {
        if (bank.at(0).dim_rj(j) == 0) break;
        reports.push_back(bank.report_at(j, power_k));
    }
    return reports;
}

inline bool wlp_holds(const std::vector<RankReport>& reports) {
    return std::all_of(reports.begin(), reports.end(),
                       [](const RankReport& r) { return r.maximal_rank; });
}

inline std::vector<long long> failing_degrees(const std::vector<RankReport>& reports) {
    std::vector<long long> out;
    for (const RankReport& r : reports)
        if (!r.maximal_rank) out.push_back(r.degree);
    return out;
}

/// Single-degree version of wlp_check.
inline RankReport rank_report_at(const ExponentConfig& config, long long j,
                                 const PrimeFieldConfig& field, long long power_k = 1) {
    if (j < 1) throw std::invalid_argument("rank_report_at: degree must be >= 1");
    if (power_k < 1) throw std::invalid_argument("rank_report_at: power must be >= 1");
    detail::EngineBank bank(config, field);
    return bank.report_at(j, power_k);
}

/// dim [A/ell^2 A]_{p+1} for A cut out by four powers (a2..a5) in three
/// variables, against the closed-form table indexed by b, where
/// a2+a3+a4+a5 = 3(p+1) + b with b in {1,2,3}.
struct EllSquaredRecord {
    long long p_mid = 0;
    int b = 0;
    long long dim = 0;
    long long table_value = 0;
    bool matches = false;
    bool in_regime = false;  // 2*a5 <= a2+a3+a4-3
};

inline EllSquaredRecord max_rank_ell_squared_table(std::array<long long, 4> a,
                                                   const PrimeFieldConfig& field) {
    std::sort(a.begin(), a.end());
    if (a[0] < 2)
        throw std::invalid_argument("max_rank_ell_squared_table: exponents must be >= 2");
    const long long sum = a[0] + a[1] + a[2] + a[3];
    EllSquaredRecord rec;
    rec.b = static_cast<int>((sum - 1) % 3) + 1;
    rec.p_mid = (sum - rec.b) / 3 - 1;
    rec.table_value = rec.b == 1 ? 0 : rec.b == 2 ? 1 : 3;
    rec.in_regime = 2 * a[3] <= a[0] + a[1] + a[2] - 3;
    const ExponentConfig config(3, {a.begin(), a.end()});
    detail::EngineBank bank(config, field);
    rec.dim = bank.at(0).dim_quotient(rec.p_mid + 1, 2);
    for (int t = 1; t < bank.attempts() && rec.dim != rec.table_value; ++t)
        rec.dim = std::min(rec.dim, bank.at(t).dim_quotient(rec.p_mid + 1, 2));
    rec.matches = rec.dim == rec.table_value;
    return rec;
}

/// Interpolation dimension of a fat-point system: degree-j forms whose
/// derivatives through order m_i - 1 vanish at random points.  By the Euler
/// relation the order-(m-1) conditions subsume the lower ones when p > j.
inline long long fat_point_dim_bruteforce(const FatPointSystem& sys,
                                          const PrimeFieldConfig& field) {
    if (sys.degree < 0) return 0;
    if (field.prime <= static_cast<unsigned long long>(sys.degree))
        throw std::invalid_argument("fat_point_dim_bruteforce: prime must exceed the degree");
    const int vars = sys.proj_dim + 1;
    const long long j = sys.degree;
    const PrimeField F(field.prime);
    detail::check_packable(vars, j);

    const std::vector<long long> caps(static_cast<size_t>(vars), j);
    const detail::MonoBasis basis = detail::build_basis(vars, j, caps);
    const long long cols = static_cast<long long>(basis.keys.size());

    // binomials mod p via Pascal's rule; valid since all entries are < p
    std::vector<std::vector<unsigned long long>> ch(
        static_cast<size_t>(j + 1), std::vector<unsigned long long>(static_cast<size_t>(j + 1), 0));
    for (long long n = 0; n <= j; ++n) {
        ch[n][0] = 1;
        for (long long k = 1; k <= n; ++k)
            ch[n][k] = F.add(ch[n - 1][k - 1], k <= n - 1 ? ch[n - 1][k] : 0);
    }

    SplitMix64 rng(field.seed);
    std::vector<unsigned long long> m;
    long long rows = 0;
    for (const long long mult : sys.mults) {
        // random projective point with power table per coordinate
        std::vector<unsigned long long> pt(static_cast<size_t>(vars), 0);
        bool nonzero = false;
        while (!nonzero) {
            for (auto& v : pt) {
                v = rng.next() % field.prime;
                nonzero = nonzero || v != 0;
            }
        }
        std::vector<std::vector<unsigned long long>> pw(static_cast<size_t>(vars));
        for (int t = 0; t < vars; ++t) {
            pw[t].resize(static_cast<size_t>(j + 1));
            pw[t][0] = 1;
            for (long long e = 1; e <= j; ++e) pw[t][e] = F.mul(pw[t][e - 1], pt[t]);
        }
        const detail::MonoBasis alphas = detail::build_basis(vars, mult - 1, caps);
        for (const detail::MonoKey ak : alphas.keys) {
            m.resize(m.size() + static_cast<size_t>(cols), 0);
            unsigned long long* row = &m[static_cast<size_t>(rows) * cols];
            for (long long cidx = 0; cidx < cols; ++cidx) {
                const detail::MonoKey bk = basis.keys[cidx];
                unsigned long long v = 1;
                for (int t = 0; t < vars && v != 0; ++t) {
                    const long long be = detail::key_exponent(bk, t);
                    const long long ae = detail::key_exponent(ak, t);
                    if (be < ae) {
                        v = 0;
                        break;
                    }
                    v = F.mul(v, F.mul(ch[be][ae], pw[t][be - ae]));
                }
                row[cidx] = v;
            }
            ++rows;
        }
    }
    return cols - rank_mod_p(m, rows, cols, F);
}

/// Adapter for classifier certificates: dim [R/(I, ell)]_j from one sampled
/// instance (an upper bound that equals the generic value with overwhelming
/// probability).
inline DimOracle make_quotient_oracle(const PrimeFieldConfig& field) {
    return [field](const ExponentConfig& config, long long j) -> Integer {
        BoxEngine engine(config, field.prime, field.seed);
        return Integer(engine.dim_quotient(j, 1));
    };
}

}  // namespace wlp
