#include "floercalc/ring.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace floercalc {

bool is_prime(long p)
{
    if (p < 2)
        return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

long euler_phi(long d)
{
    if (d < 1)
        throw std::invalid_argument("euler_phi: argument must be positive");
    long result = d;
    long m = d;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0)
                m /= p;
        }
    }
    if (m > 1)
        result -= result / m;
    return result;
}

std::vector<long> divisors(long n)
{
    if (n < 1)
        throw std::invalid_argument("divisors: argument must be positive");
    std::vector<long> divs;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            divs.push_back(d);
            if (d != n / d)
                divs.push_back(n / d);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::vector<long> prime_divisors(const BigInt& m)
{
    BigInt v = m < 0 ? BigInt(-m) : m;
    std::vector<long> primes;
    for (BigInt p = 2; p * p <= v; ++p) {
        if (v % p == 0) {
            primes.push_back(static_cast<long>(p));
            while (v % p == 0)
                v /= p;
        }
    }
    if (v > 1)
        primes.push_back(static_cast<long>(v));
    return primes;
}

/******** Coefficient ********/

Coefficient Coefficient::rational(BigRational v)
{
    Coefficient c;
    c.char_ = 0;
    c.rat_ = std::move(v);
    return c;
}

Coefficient Coefficient::mod_p(long p, const BigInt& v)
{
    if (!is_prime(p))
        throw std::invalid_argument("Coefficient: characteristic must be prime");
    Coefficient c;
    c.char_ = p;
    c.res_ = static_cast<long>(((v % p) + p) % p);
    return c;
}

bool Coefficient::is_zero() const
{
    return char_ == 0 ? rat_ == 0 : res_ == 0;
}

const BigRational& Coefficient::rational_value() const
{
    if (char_ != 0)
        throw std::logic_error("Coefficient: not a characteristic-zero value");
    return rat_;
}

long Coefficient::residue() const
{
    if (char_ == 0)
        throw std::logic_error("Coefficient: not a prime-field value");
    return res_;
}

void Coefficient::require_same_field(const Coefficient& o) const
{
    if (char_ != o.char_)
        throw std::invalid_argument("Coefficient: mixing characteristics");
}

Coefficient Coefficient::operator+(const Coefficient& o) const
{
    require_same_field(o);
    if (char_ == 0)
        return rational(rat_ + o.rat_);
    return mod_p(char_, BigInt(res_) + o.res_);
}

Coefficient Coefficient::operator-(const Coefficient& o) const
{
    require_same_field(o);
    if (char_ == 0)
        return rational(rat_ - o.rat_);
    return mod_p(char_, BigInt(res_) - o.res_);
}

Coefficient Coefficient::operator*(const Coefficient& o) const
{
    require_same_field(o);
    if (char_ == 0)
        return rational(rat_ * o.rat_);
    return mod_p(char_, BigInt(res_) * o.res_);
}

Coefficient Coefficient::operator-() const
{
    if (char_ == 0)
        return rational(-rat_);
    return mod_p(char_, BigInt(-res_));
}

Coefficient Coefficient::inverse() const
{
    if (is_zero())
        throw std::domain_error("Coefficient: inverse of zero");
    if (char_ == 0)
        return rational(1 / rat_);
    // extended Euclid on (res_, p)
    long a = res_, b = char_, x0 = 1, x1 = 0;
    while (b != 0) {
        long q = a / b;
        long t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
    }
    return mod_p(char_, BigInt(x0));
}

bool Coefficient::operator==(const Coefficient& o) const
{
    if (char_ != o.char_)
        return false;
    return char_ == 0 ? rat_ == o.rat_ : res_ == o.res_;
}

std::string Coefficient::str() const
{
    if (char_ == 0)
        return rat_.str();
    return std::to_string(res_) + " (mod " + std::to_string(char_) + ")";
}

/******** GradedPoly ********/

GradedPoly::GradedPoly(const BigInt& c)
{
    add_term(0, c);
}

GradedPoly GradedPoly::monomial(int exponent, const BigInt& coeff)
{
    GradedPoly p;
    p.add_term(exponent, coeff);
    return p;
}

void GradedPoly::add_term(int exponent, const BigInt& coeff)
{
    if (coeff == 0)
        return;
    auto it = terms_.find(exponent);
    if (it == terms_.end()) {
        terms_.emplace(exponent, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

BigInt GradedPoly::coeff(int exponent) const
{
    auto it = terms_.find(exponent);
    return it == terms_.end() ? BigInt(0) : it->second;
}

int GradedPoly::min_exponent() const
{
    if (terms_.empty())
        throw std::domain_error("GradedPoly: zero polynomial has no degree");
    return terms_.begin()->first;
}

int GradedPoly::max_exponent() const
{
    if (terms_.empty())
        throw std::domain_error("GradedPoly: zero polynomial has no degree");
    return terms_.rbegin()->first;
}

GradedPoly GradedPoly::operator+(const GradedPoly& o) const
{
    GradedPoly r = *this;
    for (const auto& [e, c] : o.terms_)
        r.add_term(e, c);
    return r;
}

GradedPoly GradedPoly::operator-(const GradedPoly& o) const
{
    GradedPoly r = *this;
    for (const auto& [e, c] : o.terms_)
        r.add_term(e, -c);
    return r;
}

GradedPoly GradedPoly::operator*(const GradedPoly& o) const
{
    GradedPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_)
            r.add_term(e1 + e2, c1 * c2);
    return r;
}

GradedPoly GradedPoly::operator-() const
{
    GradedPoly r;
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e, -c);
    return r;
}

GradedPoly GradedPoly::shifted(int k) const
{
    GradedPoly r;
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e + k, c);
    return r;
}

GradedPoly GradedPoly::pow(int e) const
{
    if (e < 0)
        throw std::invalid_argument("GradedPoly: negative power");
    GradedPoly result(BigInt(1));
    GradedPoly base = *this;
    while (e) {
        if (e & 1)
            result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

BigInt GradedPoly::at_one() const
{
    BigInt s = 0;
    for (const auto& [e, c] : terms_)
        s += c;
    return s;
}

std::complex<long double> GradedPoly::eval(std::complex<long double> z) const
{
    std::complex<long double> acc = 0;
    for (const auto& [e, c] : terms_) {
        std::complex<long double> ze = std::pow(z, static_cast<long double>(e));
        acc += static_cast<long double>(c) * ze;
    }
    return acc;
}

GradedPoly GradedPoly::reversed(int top_degree) const
{
    GradedPoly r;
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(top_degree - e, c);
    return r;
}

std::pair<GradedPoly, GradedPoly> GradedPoly::divmod(const GradedPoly& divisor) const
{
    if (divisor.is_zero())
        throw std::invalid_argument("GradedPoly: division by zero polynomial");
    if (divisor.min_exponent() < 0)
        throw std::invalid_argument("GradedPoly: divisor must have nonnegative exponents");
    if (divisor.terms_.rbegin()->second != 1)
        throw std::invalid_argument("GradedPoly: divisor must be monic");
    if (is_zero())
        return {GradedPoly(), GradedPoly()};

    // shift a Laurent dividend into nonnegative exponents, undo on the quotient
    int shift = std::min(0, min_exponent());
    GradedPoly rem = shifted(-shift);
    GradedPoly quot;
    int dd = divisor.max_exponent();
    while (!rem.is_zero() && rem.max_exponent() >= dd) {
        int e = rem.max_exponent() - dd;
        BigInt c = rem.terms_.rbegin()->second;
        quot.add_term(e, c);
        rem = rem - divisor.shifted(e) * GradedPoly(c);
    }
    return {quot.shifted(shift), rem.shifted(shift)};
}

GradedPoly GradedPoly::exact_div(const GradedPoly& divisor) const
{
    auto [q, r] = divmod(divisor);
    if (!r.is_zero())
        throw std::domain_error("GradedPoly: division left a remainder");
    return q;
}

std::string GradedPoly::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        BigInt a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0)
                a = -a;
        }
        if (e == 0) {
            out << a.str();
        } else {
            if (a != 1)
                out << a.str() << "*";
            out << "S";
            if (e != 1)
                out << "^" << e;
        }
        first = false;
    }
    return out.str();
}

/* term list syntax: "1 + 2*S^3 - S^-1"; no parentheses */
GradedPoly GradedPoly::parse(const std::string& text)
{
    GradedPoly result;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    auto parse_int = [&](bool allow_sign) -> long {
        size_t start = i;
        if (allow_sign && i < text.size() && (text[i] == '+' || text[i] == '-'))
            ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            ++i;
        if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
            throw std::invalid_argument("polynomial parse error at position " + std::to_string(start) +
                                        " in \"" + text + "\"");
        return std::stol(text.substr(start, i - start));
    };

    skip_ws();
    if (i == text.size())
        throw std::invalid_argument("polynomial parse error: empty input");
    bool expect_term = true;
    int sign = 1;
    while (i < text.size()) {
        skip_ws();
        if (i == text.size())
            break;
        if (!expect_term) {
            if (text[i] == '+')
                sign = 1;
            else if (text[i] == '-')
                sign = -1;
            else
                throw std::invalid_argument("polynomial parse error at position " + std::to_string(i) +
                                            " in \"" + text + "\"");
            ++i;
            expect_term = true;
            continue;
        }
        // a term: [int] ['*'] ['S' ['^' int]]
        if (text[i] == '-') {
            sign = -sign;
            ++i;
            skip_ws();
        } else if (text[i] == '+') {
            ++i;
            skip_ws();
        }
        long coeff = 1;
        bool saw_coeff = false;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            coeff = parse_int(false);
            saw_coeff = true;
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        int exponent = 0;
        if (i < text.size() && (text[i] == 'S' || text[i] == 's')) {
            ++i;
            exponent = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                exponent = static_cast<int>(parse_int(true));
            }
        } else if (!saw_coeff) {
            throw std::invalid_argument("polynomial parse error at position " + std::to_string(i) +
                                        " in \"" + text + "\"");
        }
        result.add_term(exponent, BigInt(sign) * coeff);
        sign = 1;
        expect_term = false;
        skip_ws();
    }
    if (expect_term)
        throw std::invalid_argument("polynomial parse error: trailing operator in \"" + text + "\"");
    return result;
}

/******** CyclicPoly ********/

CyclicPoly::CyclicPoly(int modulus) : modulus_(modulus)
{
    if (modulus < 1)
        throw std::invalid_argument("CyclicPoly: modulus must be at least 1");
    coeffs_.assign(static_cast<size_t>(modulus), BigInt(0));
}

int CyclicPoly::index(int cls) const
{
    int m = cls % modulus_;
    if (m < 0)
        m += modulus_;
    return m;
}

void CyclicPoly::require_same_modulus(const CyclicPoly& o) const
{
    if (modulus_ != o.modulus_)
        throw std::invalid_argument("CyclicPoly: modulus mismatch");
}

BigInt CyclicPoly::total() const
{
    BigInt s = 0;
    for (const auto& c : coeffs_)
        s += c;
    return s;
}

bool CyclicPoly::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c == 0; });
}

bool CyclicPoly::shift_invariant(int step) const
{
    for (int j = 0; j < modulus_; ++j)
        if (coeffs_[static_cast<size_t>(j)] != coeffs_[static_cast<size_t>(index(j + step))])
            return false;
    return true;
}

GradedPoly CyclicPoly::representative() const
{
    GradedPoly p;
    for (int j = 0; j < modulus_; ++j)
        p = p + GradedPoly::monomial(j, coeffs_[static_cast<size_t>(j)]);
    return p;
}

CyclicPoly CyclicPoly::operator+(const CyclicPoly& o) const
{
    require_same_modulus(o);
    CyclicPoly r(modulus_);
    for (int j = 0; j < modulus_; ++j)
        r.coeffs_[j] = coeffs_[j] + o.coeffs_[j];
    return r;
}

CyclicPoly CyclicPoly::operator-(const CyclicPoly& o) const
{
    require_same_modulus(o);
    CyclicPoly r(modulus_);
    for (int j = 0; j < modulus_; ++j)
        r.coeffs_[j] = coeffs_[j] - o.coeffs_[j];
    return r;
}

CyclicPoly CyclicPoly::operator*(const CyclicPoly& o) const
{
    require_same_modulus(o);
    CyclicPoly r(modulus_);
    for (int a = 0; a < modulus_; ++a) {
        if (coeffs_[a] == 0)
            continue;
        for (int b = 0; b < modulus_; ++b)
            r.coeffs_[static_cast<size_t>(index(a + b))] += coeffs_[a] * o.coeffs_[b];
    }
    return r;
}

bool CyclicPoly::operator==(const CyclicPoly& o) const
{
    return modulus_ == o.modulus_ && coeffs_ == o.coeffs_;
}

CyclicPoly cyclic_reduce(const GradedPoly& p, int modulus)
{
    if (modulus < 1)
        throw std::invalid_argument("cyclic_reduce: modulus must be at least 1");
    CyclicPoly r(modulus);
    for (const auto& [e, c] : p.terms())
        r.at(e % modulus) += c;  // at() renormalises negative classes
    return r;
}

/******** cyclotomic polynomials ********/

GradedPoly cyclotomic(int d)
{
    if (d < 1)
        throw std::invalid_argument("cyclotomic: index must be positive");
    // Phi_d = (S^d - 1) / prod of Phi_e over proper divisors e | d
    std::vector<GradedPoly> table(static_cast<size_t>(d) + 1);
    for (long e : divisors(d)) {
        GradedPoly num = GradedPoly::monomial(static_cast<int>(e)) - GradedPoly(BigInt(1));
        for (long f : divisors(e))
            if (f != e)
                num = num.exact_div(table[static_cast<size_t>(f)]);
        table[static_cast<size_t>(e)] = num;
    }
    return table[static_cast<size_t>(d)];
}

/******** CyclotomicResidue ********/

CyclotomicResidue::CyclotomicResidue(int conductor, std::vector<BigInt> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs))
{
    if (conductor < 1)
        throw std::invalid_argument("CyclotomicResidue: conductor must be positive");
    coeffs_.resize(static_cast<size_t>(euler_phi(conductor)), BigInt(0));
}

bool CyclotomicResidue::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c == 0; });
}

std::complex<long double> CyclotomicResidue::eval_at_primitive_root() const
{
    const long double pi = 3.14159265358979323846264338327950288L;
    std::complex<long double> z = std::polar<long double>(1.0L, 2.0L * pi / conductor_);
    std::complex<long double> acc = 0, zk = 1;
    for (const auto& c : coeffs_) {
        acc += static_cast<long double>(c) * zk;
        zk *= z;
    }
    return acc;
}

std::string CyclotomicResidue::str() const
{
    GradedPoly p;
    for (size_t j = 0; j < coeffs_.size(); ++j)
        p = p + GradedPoly::monomial(static_cast<int>(j), coeffs_[j]);
    return p.str();
}

CyclotomicResidue eval_at_root(const CyclicPoly& p, int d)
{
    if (d < 1 || p.modulus() % d != 0)
        throw std::invalid_argument("eval_at_root: conductor must divide the modulus");
    auto [q, r] = p.representative().divmod(cyclotomic(d));
    (void)q;
    std::vector<BigInt> coeffs(static_cast<size_t>(euler_phi(d)), BigInt(0));
    for (const auto& [e, c] : r.terms())
        coeffs[static_cast<size_t>(e)] = c;
    return CyclotomicResidue(d, std::move(coeffs));
}

}  // namespace floercalc
