#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "floercalc/poincare.hpp"

using namespace floercalc;

namespace {

GradedPoly P(const std::string& s) { return GradedPoly::parse(s); }

/* inversion-counting oracle for the q-multinomial: sum q^{inv(w)} over all
 * arrangements of the multiset (1^{k_1}, 2^{k_2}, ...), q = S^2 */
GradedPoly inversion_oracle(const std::vector<int>& parts)
{
    std::vector<int> word;
    for (size_t j = 0; j < parts.size(); ++j)
        word.insert(word.end(), static_cast<size_t>(parts[j]), static_cast<int>(j));
    std::sort(word.begin(), word.end());
    GradedPoly acc;
    do {
        int inv = 0;
        for (size_t a = 0; a < word.size(); ++a)
            for (size_t b = a + 1; b < word.size(); ++b)
                if (word[a] > word[b])
                    ++inv;
        acc = acc + GradedPoly::monomial(2 * inv);
    } while (std::next_permutation(word.begin(), word.end()));
    return acc;
}

BigInt factorial(long n)
{
    BigInt f = 1;
    for (long i = 2; i <= n; ++i)
        f *= i;
    return f;
}

}  // namespace

TEST_CASE("PSU Betti numbers")
{
    CHECK(poincare_poly(PsuSpec{3, 0}) == P("1+S^3") * P("1+S^5"));
    CHECK(poincare_poly(PsuSpec{2, 2}) == P("1+S+S^2+S^3"));
    // p not dividing n falls back to the characteristic-zero pattern
    CHECK(poincare_poly(PsuSpec{3, 2}) == poincare_poly(PsuSpec{3, 0}));

    PsuCohomology d22 = psu_cohomology(2, 2);
    CHECK(d22.prime_power == 2);
    CHECK(d22.generation_shift);
    CHECK(d22.generator_degrees == std::vector<int>{1, 2});
    CHECK(d22.generation_max_degree() == 1);

    PsuCohomology d63 = psu_cohomology(6, 3);
    CHECK(d63.prime_power == 3);
    CHECK_FALSE(d63.generation_shift);
    // x_5 omitted, y of degree 2 added
    CHECK(d63.generator_degrees == std::vector<int>{1, 2, 3, 7, 9, 11});
    CHECK(d63.generation_max_degree() == 11);

    CHECK_THROWS_AS(psu_cohomology(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(psu_cohomology(3, 4), std::invalid_argument);
}

TEST_CASE("PSU total dimension")
{
    for (int n = 2; n <= 9; ++n) {
        CHECK(poincare_poly(PsuSpec{n, 0}).at_one() == BigInt(1) << (n - 1));
        for (long p : {2L, 3L, 5L, 7L}) {
            long pw = p_power_in(n, p);
            CHECK(poincare_poly(PsuSpec{n, p}).at_one() == BigInt(pw) * (BigInt(1) << (n - 1)));
        }
    }
}

TEST_CASE("flag and Grassmannian polynomials")
{
    CHECK(poincare_poly(FlagSpec{{1, 1, 1}}) == P("1+2*S^2+2*S^4+S^6"));
    CHECK(poincare_poly(GrassmannianSpec{1, 3}) == P("1+S^2+S^4"));

    // inversion-counting oracle
    for (const std::vector<int>& parts :
         {std::vector<int>{1, 1}, {1, 2}, {2, 1}, {1, 1, 1}, {2, 2}, {1, 2, 1}, {3, 2}})
        CHECK(poincare_poly(FlagSpec{parts}) == inversion_oracle(parts));

    // symmetric under permutation of the parts
    CHECK(poincare_poly(FlagSpec{{1, 3}}) == poincare_poly(FlagSpec{{3, 1}}));
    CHECK(poincare_poly(FlagSpec{{1, 2, 3}}) == poincare_poly(FlagSpec{{3, 1, 2}}));

    // 2-part flags are Grassmannians
    for (int n = 2; n <= 7; ++n)
        for (int k = 1; k < n; ++k)
            CHECK(poincare_poly(FlagSpec{{k, n - k}}) == poincare_poly(GrassmannianSpec{k, n}));

    CHECK_THROWS_AS(poincare_poly(FlagSpec{{3}}), std::invalid_argument);
    CHECK_THROWS_AS(poincare_poly(FlagSpec{{1, 0}}), std::invalid_argument);
}

TEST_CASE("torus, exterior, truncated algebras")
{
    CHECK(poincare_poly(TorusSpec{2}) == P("1+2*S+S^2"));
    for (int n = 1; n <= 8; ++n)
        CHECK(poincare_poly(TorusSpec{n}).at_one() == BigInt(1) << n);

    CHECK(poincare_poly(ExteriorAlgebraSpec{{3, 5}}) == P("1+S^3+S^5+S^8"));
    CHECK_THROWS_AS(poincare_poly(ExteriorAlgebraSpec{{4}}), std::invalid_argument);

    CHECK(poincare_poly(TruncatedPolySpec{2, 3}) == P("1+S^2+S^4"));
    CHECK_THROWS_AS(poincare_poly(TruncatedPolySpec{3, 2}), std::invalid_argument);
}

TEST_CASE("Poincare duality palindromicity")
{
    std::vector<SpaceSpec> curated = {
        TorusSpec{1},        TorusSpec{4},           TorusSpec{6},
        GrassmannianSpec{1, 3}, GrassmannianSpec{2, 5}, GrassmannianSpec{3, 7},
        FlagSpec{{1, 1}},    FlagSpec{{1, 2}},      FlagSpec{{2, 1}},
        FlagSpec{{1, 1, 1}}, FlagSpec{{2, 3}},      FlagSpec{{2, 2, 2}},
        PsuSpec{2, 0},       PsuSpec{3, 0},         PsuSpec{4, 2},
        PsuSpec{6, 3},       PsuSpec{8, 2},         PsuSpec{5, 5},
        ExteriorAlgebraSpec{{1, 3, 5}}, ExteriorAlgebraSpec{{3, 3, 7}},
        TruncatedPolySpec{2, 4}, TruncatedPolySpec{4, 3},
    };
    for (const SpaceSpec& s : curated) {
        GradedPoly p = poincare_poly(s);
        int dim = space_dimension(s);
        CHECK(p.max_exponent() == dim);
        CHECK(p.reversed(dim) == p);
    }
}

TEST_CASE("binomials via Lucas")
{
    CHECK(binom_mod_p(7, 3, 2) == Coefficient::mod_p(2, 1));   // 35 mod 2
    CHECK(binom_mod_p(4, 3, 2).is_zero());                     // 4 mod 2
    for (long p : {2L, 5L, 13L})
        CHECK(binom_mod_p(11, 0, p) == Coefficient::mod_p(p, 1));

    // factorial-cancellation oracle
    for (long n = 0; n <= 60; ++n)
        for (long k = 0; k <= n; ++k) {
            BigInt exact = factorial(n) / (factorial(k) * factorial(n - k));
            CHECK(binomial(n, k) == exact);
            for (long p : {2L, 3L, 5L, 7L})
                CHECK(binom_mod_p(n, k, p) == Coefficient::mod_p(p, exact % p));
        }

    CHECK_THROWS_AS(binom_mod_p(5, 2, 4), std::invalid_argument);
}

TEST_CASE("Stiefel generation degree")
{
    CHECK(generation_degree_stiefel(4, 2, 2) == 4);  // C(4,3) = 4 = 0, C(4,4) = 1
    CHECK(generation_degree_stiefel(4, 2, 3) == 3);  // C(4,3) = 4 = 1 mod 3
    CHECK(generation_degree_stiefel(5, 1, 0) == 5);

    // equals n exactly when k <= p^r
    for (int n = 2; n <= 12; ++n)
        for (int k = 1; k < n; ++k)
            for (long p : {0L, 2L, 3L, 5L, 7L}) {
                long pw = p_power_in(n, p);
                CHECK((generation_degree_stiefel(n, k, p) == n) == (k <= pw));
            }

    CHECK_THROWS_AS(generation_degree_stiefel(4, 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(generation_degree_stiefel(4, 0, 2), std::invalid_argument);
}

TEST_CASE("prime power extraction")
{
    CHECK(p_power_in(12, 2) == 4);
    CHECK(p_power_in(12, 3) == 3);
    CHECK(p_power_in(12, 5) == 1);
    CHECK(p_power_in(7, 0) == 1);
}
