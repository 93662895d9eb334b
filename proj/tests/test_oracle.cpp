#include <catch_amalgamated.hpp>

#include "wlp/classify.hpp"
#include "wlp/hilbert.hpp"
#include "wlp/linsys.hpp"
#include "wlp/oracle.hpp"

using namespace wlp;

TEST_CASE("splitmix64 reference vector") {
    SplitMix64 rng(0);
    REQUIRE(rng.next() == 0xE220A8397B1DCDAFull);
    SplitMix64 a(42), b(42);
    for (int i = 0; i < 10; ++i) REQUIRE(a.next() == b.next());
}

TEST_CASE("prime field arithmetic against wide-integer reference") {
    for (const unsigned long long p : {kDefaultPrime, kSecondaryPrime, 1000003ull}) {
        const PrimeField F(p);
        SplitMix64 rng(7);
        for (int i = 0; i < 500; ++i) {
            const unsigned long long a = rng.next() % p, b = rng.next() % p;
            REQUIRE(F.add(a, b) == (a + b) % p);
            REQUIRE(F.sub(a, b) == (a + p - b) % p);
            const unsigned long long prod = static_cast<unsigned long long>(
                static_cast<unsigned __int128>(a) * b % p);
            REQUIRE(F.mul(a, b) == prod);
        }
        REQUIRE(F.mul(p - 1, p - 1) == 1);  // (-1)^2
        REQUIRE(F.pow(3, 0) == 1);
        unsigned long long acc = 1;
        for (int i = 0; i < 13; ++i) acc = F.mul(acc, 3);
        REQUIRE(F.pow(3, 13) == acc);
        const unsigned long long x = 123456789 % p;
        REQUIRE(F.mul(x, F.inv(x)) == 1);
        REQUIRE(F.neg(0) == 0);
        REQUIRE(F.add(F.neg(x), x) == 0);
    }
    REQUIRE_THROWS_AS(PrimeField(1), std::invalid_argument);
    REQUIRE_THROWS_AS(PrimeField(1ull << 62), std::invalid_argument);
    REQUIRE_THROWS_AS(PrimeField(97).inv(0), std::domain_error);
    // composite moduli corrupt ranks silently, so the constructor must refuse them
    REQUIRE_THROWS_AS(PrimeField(6), std::invalid_argument);
    REQUIRE_THROWS_AS(PrimeField(1ull << 40), std::invalid_argument);
    REQUIRE_THROWS_AS(PrimeField(1000003ull * 1000033ull), std::invalid_argument);
    REQUIRE_NOTHROW(PrimeField(2));
    REQUIRE_NOTHROW(PrimeField((1ull << 61) - 1));
}

TEST_CASE("row echelon rank") {
    const PrimeField F(kDefaultPrime);
    std::vector<unsigned long long> id = {1, 0, 0, 0, 1, 0, 0, 0, 1};
    REQUIRE(rank_mod_p(id, 3, 3, F) == 3);
    std::vector<unsigned long long> sing = {1, 2, 3, 2, 4, 6, 1, 1, 1};
    REQUIRE(rank_mod_p(sing, 3, 3, F) == 2);
    std::vector<unsigned long long> zero(12, 0);
    REQUIRE(rank_mod_p(zero, 3, 4, F) == 0);
    std::vector<unsigned long long> wide = {1, 1, 1, 1, 0, 1, 2, 3};
    REQUIRE(rank_mod_p(wide, 2, 4, F) == 2);
    // rank is invariant under duplicating rows mod p
    std::vector<unsigned long long> dup = {5, 7, 10, 14, 3, 3};
    REQUIRE(rank_mod_p(dup, 3, 2, F) == 2);
}

TEST_CASE("monomial packing limits") {
    REQUIRE_THROWS_AS(detail::check_packable(9, 4), std::invalid_argument);
    REQUIRE_THROWS_AS(detail::check_packable(3, 256), std::invalid_argument);
    const auto b = detail::build_basis(2, 3, {2, 2});
    REQUIRE(b.keys.size() == 2);  // x^2 y and x y^2
    const auto full = detail::build_basis(3, 4, {4, 4, 4});
    REQUIRE(full.keys.size() == 15);
    for (const auto& [key, idx] : full.index) REQUIRE(full.keys[static_cast<size_t>(idx)] == key);
}

TEST_CASE("sampled forms are deterministic and independent") {
    const PrimeFieldConfig field;
    const auto forms = sample_linear_forms(4, 6, field);
    REQUIRE(forms.size() == 6);
    for (const auto& f : forms) REQUIRE(f.size() == 4);
    REQUIRE(forms == sample_linear_forms(4, 6, field));

    PrimeFieldConfig other = field;
    other.seed = 1;
    REQUIRE(forms != sample_linear_forms(4, 6, other));

    // every pair of forms in 2 variables must be independent
    const auto pairs = sample_linear_forms(2, 5, field);
    const PrimeField F(field.prime);
    for (size_t i = 0; i < pairs.size(); ++i)
        for (size_t t = i + 1; t < pairs.size(); ++t)
            REQUIRE(F.sub(F.mul(pairs[i][0], pairs[t][1]), F.mul(pairs[i][1], pairs[t][0])) != 0);

    // over F_2 there are only three pairwise-independent directions
    PrimeFieldConfig tiny;
    tiny.prime = 2;
    REQUIRE_THROWS_AS(sample_linear_forms(2, 5, tiny), degenerate_sample);
}

TEST_CASE("first-principles quotient dimension") {
    const PrimeFieldConfig field;
    const auto forms = sample_linear_forms(3, 4, field);
    REQUIRE(quotient_dim(3, {}, {}, 0, field) == 1);
    REQUIRE(quotient_dim(3, forms, {2, 2, 2, 2}, 0, field) == 1);

    // generic powers realize the expected Hilbert function
    const ExponentConfig c(3, {2, 2, 2, 2});
    const HilbertFunction h = aci_hilbert(c);
    for (long long j = 0; j <= h.socle_degree + 1; ++j)
        REQUIRE(quotient_dim(3, forms, c.exponents, j, field) == h.value(j));

    REQUIRE_THROWS_AS(quotient_dim(3, forms, {2, 2}, 1, field), std::invalid_argument);
    REQUIRE_THROWS_AS(quotient_dim(3, forms, {2, 2, 2, 2}, -1, field), std::invalid_argument);
}

TEST_CASE("box engine matches the expected Hilbert function") {
    const ExponentConfig c(4, {5, 7, 8, 10, 10});
    const HilbertFunction h = aci_hilbert(c);
    BoxEngine engine(c, kDefaultPrime, 0);
    for (long long j = 0; j <= h.socle_degree + 1; ++j) REQUIRE(engine.dim_rj(j) == h.value(j));

    // the known rank drop at degree 13: quotient dimension 1, expected 0
    REQUIRE(engine.dim_quotient(13, 1) == 1);
    const ExponentConfig c2(4, {5, 7, 8, 10, 12});
    BoxEngine engine2(c2, kDefaultPrime, 0);
    REQUIRE(engine2.dim_quotient(13, 1) == 3);

    REQUIRE_THROWS_AS(BoxEngine(ExponentConfig(4, {2, 2, 2, 2}), kDefaultPrime, 0),
                      std::invalid_argument);
}

TEST_CASE("box engine agrees with the literal construction") {
    const PrimeFieldConfig field;
    const ExponentConfig c(3, {3, 4, 5, 6});
    BoxEngine engine(c, field.prime, field.seed);
    const auto forms = sample_linear_forms(3, 5, field);
    std::vector<long long> exps = c.exponents;
    exps.push_back(1);
    for (long long j = 1; j <= 10; ++j) {
        const std::vector<std::vector<unsigned long long>> gens(forms.begin(), forms.begin() + 4);
        REQUIRE(engine.dim_rj(j) == quotient_dim(3, gens, c.exponents, j, field));
        REQUIRE(engine.dim_quotient(j, 1) == quotient_dim(3, forms, exps, j, field));
    }
}

TEST_CASE("rank sweep stops at the socle and flags failures") {
    const PrimeFieldConfig field;
    const auto small = wlp_check(ExponentConfig(4, {2, 2, 2, 2, 2}), field);
    REQUIRE(small.size() == 2);  // dim vanishes from degree 3 on
    REQUIRE(wlp_holds(small));

    const auto cubes = wlp_check(ExponentConfig(3, {3, 3, 3, 3}), field);
    REQUIRE(wlp_holds(cubes));

    const auto k3 = wlp_check(ExponentConfig(3, {3, 3, 3, 3}), field, 3);
    REQUIRE(failing_degrees(k3) == std::vector<long long>{4});
    const auto& last = k3.back();
    REQUIRE(last.degree == 4);
    REQUIRE(last.power_k == 3);
    REQUIRE(last.dim_quotient_ell == 1);
    REQUIRE(last.expected == 0);
    REQUIRE(last.attempts == 3);
    REQUIRE(last.prime == kSecondaryPrime);  // final attempt runs on the big prime

    REQUIRE_THROWS_AS(wlp_check(ExponentConfig(3, {3, 3, 3, 3}), field, 0),
                      std::invalid_argument);
}

TEST_CASE("single-degree rank report") {
    const PrimeFieldConfig field;
    const RankReport r = rank_report_at(ExponentConfig(5, {4, 4, 4, 4, 4, 4}), 7, field);
    REQUIRE_FALSE(r.maximal_rank);
    REQUIRE(r.dim_quotient_ell == 4);
    REQUIRE(r.expected == 0);

    const RankReport ok = rank_report_at(ExponentConfig(5, {3, 3, 3, 3, 3, 3}), 5, field);
    REQUIRE(ok.maximal_rank);
    REQUIRE(ok.attempts == 1);

    REQUIRE_THROWS_AS(rank_report_at(ExponentConfig(3, {2, 2, 2, 2}), 0, field),
                      std::invalid_argument);
}

TEST_CASE("squared form multiplication table") {
    const PrimeFieldConfig field;
    const EllSquaredRecord r3 = max_rank_ell_squared_table({3, 3, 3, 3}, field);
    REQUIRE(r3.b == 3);
    REQUIRE(r3.p_mid == 2);
    REQUIRE(r3.table_value == 3);
    REQUIRE(r3.in_regime);
    REQUIRE(r3.matches);
    REQUIRE(r3.dim == 3);

    const EllSquaredRecord r2 = max_rank_ell_squared_table({2, 2, 2, 2}, field);
    REQUIRE(r2.b == 2);
    REQUIRE(r2.table_value == 1);
    REQUIRE_FALSE(r2.in_regime);
    REQUIRE(r2.matches);  // the table value still shows up for this tuple

    const EllSquaredRecord out = max_rank_ell_squared_table({2, 3, 3, 3}, field);
    REQUIRE(out.b == 2);
    REQUIRE(out.p_mid == 2);
    REQUIRE(out.table_value == 1);
    REQUIRE_FALSE(out.in_regime);

    REQUIRE_THROWS_AS(max_rank_ell_squared_table({1, 3, 3, 3}, field), std::invalid_argument);
}

TEST_CASE("interpolation matrix dimension counts") {
    const PrimeFieldConfig field;
    REQUIRE(fat_point_dim_bruteforce(FatPointSystem(2, 2, {1, 1, 1}), field) == 3);
    REQUIRE(fat_point_dim_bruteforce(FatPointSystem(3, 3, {1, 1, 1, 1, 1, 1}), field) == 14);
    REQUIRE(fat_point_dim_bruteforce(FatPointSystem(2, 13, {9, 7, 6, 4, 4}), field) == 1);
    REQUIRE(fat_point_dim_bruteforce(FatPointSystem(2, -2, {1}), field) == 0);

    // special systems exceed their expected dimension
    REQUIRE(expected_dimension(FatPointSystem(2, 4, {2, 2, 2, 2, 2})) == 0);
    REQUIRE(fat_point_dim_bruteforce(FatPointSystem(2, 4, {2, 2, 2, 2, 2}), field) == 1);
    REQUIRE(fat_point_dim_bruteforce(FatPointSystem(2, 2, {2, 2}), field) == 1);

    PrimeFieldConfig tiny;
    tiny.prime = 7;
    REQUIRE_THROWS_AS(fat_point_dim_bruteforce(FatPointSystem(2, 13, {9, 7}), tiny),
                      std::invalid_argument);
}

TEST_CASE("adjoined-form quotient equals the fat point system") {
    const PrimeFieldConfig field;
    const ExponentConfig c(4, {2, 3, 4, 5, 6});
    BoxEngine engine(c, field.prime, field.seed);
    for (long long j = 1; j <= aci_hilbert(c).socle_degree + 1; ++j) {
        const long long fat = fat_point_dim_bruteforce(reduce_to_fat_points(c, j), field);
        REQUIRE(engine.dim_quotient(j, 1) == fat);
    }
}

TEST_CASE("classifier fallback oracle") {
    const PrimeFieldConfig field;
    const DimOracle oracle = make_quotient_oracle(field);
    REQUIRE(oracle(ExponentConfig(4, {3, 3, 3, 3, 3}), 4) == 1);
    REQUIRE(oracle(ExponentConfig(4, {5, 7, 8, 10, 12}), 13) == 3);
}
