#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>

#include "floercalc/ring.hpp"

using namespace floercalc;

namespace {

GradedPoly P(const std::string& s) { return GradedPoly::parse(s); }

/* independent fold: walk the term list and bucket exponents by hand */
std::vector<BigInt> fold_oracle(const GradedPoly& p, int N)
{
    std::vector<BigInt> v(static_cast<size_t>(N), BigInt(0));
    for (const auto& [e, c] : p.terms()) {
        long cls = ((e % N) + N) % N;
        v[static_cast<size_t>(cls)] += c;
    }
    return v;
}

GradedPoly random_poly(std::mt19937& rng)
{
    std::uniform_int_distribution<int> nterms(0, 8), expo(-12, 12), coeff(-9, 9);
    GradedPoly p;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i)
        p = p + GradedPoly::monomial(expo(rng), BigInt(coeff(rng)));
    return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic in sparse normal form")
{
    CHECK(P("1+S") * P("1+S") == P("1+2*S+S^2"));
    CHECK((P("1+3*S^2-S^5") * GradedPoly()).is_zero());
    CHECK(P("1+S^3") * P("1+S^5") == P("1+S^3+S^5+S^8"));

    // cancellation never leaves a stored zero
    GradedPoly d = P("1+S") - P("S+1");
    CHECK(d.is_zero());
    CHECK(d.terms().empty());
}

TEST_CASE("Laurent support")
{
    GradedPoly p = P("S^-3 + 2 - S^2");
    CHECK(p.min_exponent() == -3);
    CHECK(p.max_exponent() == 2);
    CHECK(p.coeff(0) == 2);
    CHECK(p.shifted(3) == P("1 + 2*S^3 - S^5"));
}

TEST_CASE("parser round trips and rejects junk")
{
    for (const char* s : {"0", "1", "-S", "1+2*S+S^2", "S^-1", "3*S^-4 - 7", "1+S^3+S^5+S^8"}) {
        GradedPoly p = P(s);
        CHECK(GradedPoly::parse(p.str()) == p);
    }
    CHECK_THROWS_AS(P(""), std::invalid_argument);
    CHECK_THROWS_AS(P("1+"), std::invalid_argument);
    CHECK_THROWS_AS(P("S^"), std::invalid_argument);
    CHECK_THROWS_AS(P("x+1"), std::invalid_argument);
}

TEST_CASE("cyclic_reduce folds Laurent exponents")
{
    CyclicPoly f = cyclic_reduce(P("1+S^3+S^5+S^8"), 6);
    std::vector<BigInt> expected{1, 0, 1, 1, 0, 1};  // 8 = 2 mod 6
    CHECK(f.coeffs() == expected);

    CHECK(cyclic_reduce(P("S^-1"), 4).at(3) == 1);
    CHECK(cyclic_reduce(P("S^-1"), 4).at(0) == 0);

    CyclicPoly sq = cyclic_reduce(P("1+S") * P("1+S"), 2);
    CHECK(sq.coeffs() == std::vector<BigInt>{2, 2});

    CHECK_THROWS_AS(cyclic_reduce(P("1"), 0), std::invalid_argument);
}

TEST_CASE("cyclic_reduce is a ring homomorphism")
{
    std::mt19937 rng(20240717);
    std::uniform_int_distribution<int> mod(1, 24);
    for (int trial = 0; trial < 1000; ++trial) {
        GradedPoly p = random_poly(rng), q = random_poly(rng);
        int N = mod(rng);
        CHECK(cyclic_reduce(p * q, N) == cyclic_reduce(p, N) * cyclic_reduce(q, N));
        CHECK(cyclic_reduce(p + q, N) == cyclic_reduce(p, N) + cyclic_reduce(q, N));
        CHECK(fold_oracle(p, N) == cyclic_reduce(p, N).coeffs());
        // reducing the canonical representative recovers the same vector
        CyclicPoly f = cyclic_reduce(p, N);
        CHECK(cyclic_reduce(f.representative(), N) == f);
    }
}

TEST_CASE("cyclotomic polynomials")
{
    CHECK(cyclotomic(1) == P("S-1"));
    CHECK(cyclotomic(2) == P("S+1"));
    CHECK(cyclotomic(4) == P("S^2+1"));
    CHECK(cyclotomic(6) == P("S^2-S+1"));
    // division oracle for the frozen d=6 value
    CHECK(P("S-1") * P("S+1") * P("S^2+S+1") * P("S^2-S+1") == P("S^6-1"));

    for (int N = 1; N <= 64; ++N) {
        GradedPoly prod(BigInt(1));
        for (long d : divisors(N))
            prod = prod * cyclotomic(static_cast<int>(d));
        CHECK(prod == GradedPoly::monomial(N) - GradedPoly(BigInt(1)));
    }
}

TEST_CASE("eval_at_root: exact cyclotomic residues")
{
    // folded (1+S^3)(1+S^5) vanishes at every primitive 6th root of unity
    CyclicPoly pf = cyclic_reduce(P("1+S^3+S^5+S^8"), 6);
    CHECK(eval_at_root(pf, 6).is_zero());
    // ... but not at the primitive cube roots
    CHECK_FALSE(eval_at_root(pf, 3).is_zero());

    // d = 1 evaluates at S = 1
    CyclotomicResidue one = eval_at_root(pf, 1);
    CHECK(one.coeffs().size() == 1);
    CHECK(one.coeffs()[0] == pf.total());

    // (1 + (-1))^n = 0
    for (int n = 1; n <= 6; ++n)
        CHECK(eval_at_root(cyclic_reduce(P("1+S").pow(n), 2), 2).is_zero());

    CHECK_THROWS_AS(eval_at_root(pf, 4), std::invalid_argument);  // 4 does not divide 6
}

TEST_CASE("residues agree with floating evaluation at e^{2 pi i / d}")
{
    const long double pi = 3.14159265358979323846264338327950288L;
    std::mt19937 rng(987123);
    for (int trial = 0; trial < 200; ++trial) {
        GradedPoly p = random_poly(rng);
        std::uniform_int_distribution<int> mod(1, 24);
        int N = mod(rng);
        CyclicPoly f = cyclic_reduce(p, N);
        for (long d : divisors(N)) {
            CyclotomicResidue r = eval_at_root(f, static_cast<int>(d));
            std::complex<long double> zeta = std::polar<long double>(1.0L, 2.0L * pi / d);
            std::complex<long double> direct = f.representative().eval(zeta);
            CHECK(std::abs(direct - r.eval_at_primitive_root()) < 1e-9L);
            if (r.is_zero())
                CHECK(std::abs(direct) < 1e-9L);
        }
    }
}

TEST_CASE("monic long division")
{
    GradedPoly q = (P("S^6-1")).exact_div(P("S^2-S+1"));
    CHECK(q * P("S^2-S+1") == P("S^6-1"));
    CHECK_THROWS_AS(P("S^2+1").exact_div(P("S+1")), std::domain_error);
    CHECK_THROWS_AS(P("1").exact_div(GradedPoly()), std::invalid_argument);
    CHECK_THROWS_AS(P("1").exact_div(P("2*S+1")), std::invalid_argument);  // not monic

    // Laurent dividend: quotient keeps the shift
    auto [quot, rem] = P("S^-1 + 1").divmod(P("S+1"));
    CHECK(rem.is_zero());
    CHECK(quot == P("S^-1"));
}

TEST_CASE("Coefficient field arithmetic")
{
    Coefficient a = Coefficient::rational(BigRational(1, 3));
    Coefficient b = Coefficient::rational(BigRational(1, 6));
    CHECK((a + b) == Coefficient::rational(BigRational(1, 2)));
    CHECK((a * a.inverse()) == Coefficient::integer(1));

    Coefficient x = Coefficient::mod_p(7, 3);
    CHECK((x * x.inverse()) == Coefficient::mod_p(7, 1));
    CHECK((x + Coefficient::mod_p(7, 4)).is_zero());
    CHECK(Coefficient::mod_p(5, -1) == Coefficient::mod_p(5, 4));

    CHECK_THROWS_AS(a + x, std::invalid_argument);           // mixed characteristics
    CHECK_THROWS_AS(Coefficient::mod_p(6, 1), std::invalid_argument);
    CHECK_THROWS_AS(Coefficient::mod_p(7, 0).inverse(), std::domain_error);
}

TEST_CASE("small number theory helpers")
{
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(divisors(12) == std::vector<long>{1, 2, 3, 4, 6, 12});
    CHECK(prime_divisors(BigInt(-9)) == std::vector<long>{3});
    CHECK(prime_divisors(BigInt(1)).empty());
    CHECK(is_prime(2));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
}
