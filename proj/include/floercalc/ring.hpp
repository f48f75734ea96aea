#ifndef FLOERCALC_RING_HPP
#define FLOERCALC_RING_HPP

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace floercalc {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

bool is_prime(long p);
long euler_phi(long d);
std::vector<long> divisors(long n);
std::vector<long> prime_divisors(const BigInt& m);

/* Exact scalar in a coefficient field: Q when characteristic() == 0,
 * F_p when characteristic() == p.  Mixing characteristics throws. */
class Coefficient {
  public:
    Coefficient() : char_(0), rat_(0), res_(0) {}

    static Coefficient rational(BigRational v);
    static Coefficient integer(const BigInt& v) { return rational(BigRational(v)); }
    /* reduce an integer into F_p */
    static Coefficient mod_p(long p, const BigInt& v);

    long characteristic() const { return char_; }
    bool is_zero() const;
    const BigRational& rational_value() const;
    long residue() const;

    Coefficient operator+(const Coefficient& o) const;
    Coefficient operator-(const Coefficient& o) const;
    Coefficient operator*(const Coefficient& o) const;
    Coefficient operator-() const;
    Coefficient inverse() const;
    bool operator==(const Coefficient& o) const;

    std::string str() const;

  private:
    long char_;        // 0 or a prime
    BigRational rat_;  // used when char_ == 0
    long res_;         // used when char_ > 0, normalised into [0, p)

    void require_same_field(const Coefficient& o) const;
};

/* Laurent polynomial in one variable S with exact integer coefficients.
 * Sparse normal form: no zero coefficient is ever stored. */
class GradedPoly {
  public:
    GradedPoly() = default;
    explicit GradedPoly(const BigInt& c);
    static GradedPoly monomial(int exponent, const BigInt& coeff = 1);
    static GradedPoly parse(const std::string& text);

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, BigInt>& terms() const { return terms_; }
    BigInt coeff(int exponent) const;
    int min_exponent() const;  // throws on zero polynomial
    int max_exponent() const;

    GradedPoly operator+(const GradedPoly& o) const;
    GradedPoly operator-(const GradedPoly& o) const;
    GradedPoly operator*(const GradedPoly& o) const;
    GradedPoly operator-() const;
    bool operator==(const GradedPoly& o) const { return terms_ == o.terms_; }

    GradedPoly shifted(int k) const;  // multiply by S^k
    GradedPoly pow(int e) const;

    BigInt at_one() const;  // sum of coefficients
    std::complex<long double> eval(std::complex<long double> z) const;
    /* S^top_degree * P(1/S); Poincare duality reads P palindromic about top_degree */
    GradedPoly reversed(int top_degree) const;

    /* Long division by a monic divisor with nonnegative exponents.
     * The dividend may be Laurent; the quotient absorbs the shift. */
    std::pair<GradedPoly, GradedPoly> divmod(const GradedPoly& divisor) const;
    GradedPoly exact_div(const GradedPoly& divisor) const;  // throws when remainder != 0

    std::string str() const;

  private:
    std::map<int, BigInt> terms_;

    void add_term(int exponent, const BigInt& coeff);
};

/* Residue of a GradedPoly modulo S^N - 1: the class-j coefficient collects
 * every exponent congruent to j mod N, Laurent exponents included. */
class CyclicPoly {
  public:
    explicit CyclicPoly(int modulus);

    int modulus() const { return modulus_; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    BigInt& at(int cls) { return coeffs_[index(cls)]; }
    const BigInt& at(int cls) const { return coeffs_[index(cls)]; }

    BigInt total() const;  // value at S = 1
    bool is_zero() const;
    bool shift_invariant(int step) const;  // vector equals its rotation by step
    GradedPoly representative() const;     // exponents 0..N-1

    CyclicPoly operator+(const CyclicPoly& o) const;
    CyclicPoly operator-(const CyclicPoly& o) const;
    CyclicPoly operator*(const CyclicPoly& o) const;  // cyclic convolution
    bool operator==(const CyclicPoly& o) const;

  private:
    int modulus_;
    std::vector<BigInt> coeffs_;

    int index(int cls) const;
    void require_same_modulus(const CyclicPoly& o) const;
};

CyclicPoly cyclic_reduce(const GradedPoly& p, int modulus);

/* d-th cyclotomic polynomial, exact over Z */
GradedPoly cyclotomic(int d);

/* Element of Z[S]/(Phi_d(S)); stands in for the value at a primitive
 * d-th root of unity.  Zero iff the polynomial vanishes at every one. */
class CyclotomicResidue {
  public:
    CyclotomicResidue(int conductor, std::vector<BigInt> coeffs);

    int conductor() const { return conductor_; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    bool is_zero() const;
    std::complex<long double> eval_at_primitive_root() const;
    std::string str() const;

  private:
    int conductor_;
    std::vector<BigInt> coeffs_;  // length phi(conductor)
};

/* Remainder of any representative of p modulo Phi_d; requires d | modulus(p). */
CyclotomicResidue eval_at_root(const CyclicPoly& p, int d);

}  // namespace floercalc

#endif
