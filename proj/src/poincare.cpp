#include "floercalc/poincare.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace floercalc {

namespace {

GradedPoly one_plus_s(int degree)
{
    return GradedPoly(BigInt(1)) + GradedPoly::monomial(degree);
}

/* 1 + S^step + ... + S^{step*(count-1)} */
GradedPoly geometric(int step, int count)
{
    GradedPoly p;
    for (int i = 0; i < count; ++i)
        p = p + GradedPoly::monomial(step * i);
    return p;
}

GradedPoly q_factorial(int n, int q_degree)
{
    GradedPoly p(BigInt(1));
    for (int j = 1; j <= n; ++j)
        p = p * geometric(q_degree, j);
    return p;
}

}  // namespace

long p_power_in(long n, long p)
{
    if (p == 0)
        return 1;
    if (!is_prime(p))
        throw std::invalid_argument("p_power_in: characteristic must be 0 or prime");
    long pw = 1;
    while (n % (pw * p) == 0)
        pw *= p;
    return pw;
}

BigInt binomial(long n, long k)
{
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

Coefficient binom_mod_p(long n, long k, long p)
{
    if (!is_prime(p))
        throw std::invalid_argument("binom_mod_p: characteristic must be prime");
    if (n < 0 || k < 0)
        throw std::invalid_argument("binom_mod_p: arguments must be nonnegative");
    if (k > n)
        return Coefficient::mod_p(p, 0);
    BigInt r = 1;
    while (n > 0 || k > 0) {
        long nd = n % p, kd = k % p;
        if (kd > nd)
            return Coefficient::mod_p(p, 0);
        r = r * binomial(nd, kd) % p;
        n /= p;
        k /= p;
    }
    return Coefficient::mod_p(p, r);
}

long generation_degree_stiefel(int n, int k, long p)
{
    if (k < 1 || k >= n)
        throw std::invalid_argument("generation_degree_stiefel: requires 1 <= k < n");
    if (p == 0)
        return n - k + 1;
    if (!is_prime(p))
        throw std::invalid_argument("generation_degree_stiefel: characteristic must be 0 or prime");
    long N = n - k + 1;
    while (binom_mod_p(n, N, p).is_zero())
        ++N;   // stops at N = n since C(n, n) = 1
    return N;
}

GradedPoly q_binomial(int n, int k, int q_degree)
{
    if (k < 0 || k > n)
        throw std::invalid_argument("q_binomial: requires 0 <= k <= n");
    GradedPoly num = q_factorial(n, q_degree);
    num = num.exact_div(q_factorial(k, q_degree));
    return num.exact_div(q_factorial(n - k, q_degree));
}

GradedPoly q_multinomial(const std::vector<int>& parts, int q_degree)
{
    int n = std::accumulate(parts.begin(), parts.end(), 0);
    GradedPoly num = q_factorial(n, q_degree);
    for (int kj : parts) {
        if (kj < 0)
            throw std::invalid_argument("q_multinomial: parts must be nonnegative");
        num = num.exact_div(q_factorial(kj, q_degree));
    }
    return num;
}

int PsuCohomology::generation_max_degree() const
{
    int best = 0;
    for (int d : generator_degrees) {
        if (generation_shift && d == 2)
            continue;  // y = x_1^2 is no longer an independent generator
        best = std::max(best, d);
    }
    return best;
}

PsuCohomology psu_cohomology(int n, long characteristic)
{
    if (n < 2)
        throw std::invalid_argument("psu_cohomology: requires n >= 2");
    if (characteristic != 0 && !is_prime(characteristic))
        throw std::invalid_argument("psu_cohomology: characteristic must be 0 or prime");

    PsuCohomology data;
    long pw = (characteristic == 0) ? 1 : p_power_in(n, characteristic);
    data.prime_power = pw;
    data.generation_shift = (characteristic == 2 && pw == 2);

    GradedPoly p(BigInt(1));
    for (int j = 1; j <= n; ++j) {
        if (j == pw)
            continue;  // x_{2 p^r - 1} is omitted (x_1 when p^r = 1)
        p = p * one_plus_s(2 * j - 1);
        data.generator_degrees.push_back(2 * j - 1);
    }
    if (pw > 1) {
        p = p * geometric(2, static_cast<int>(pw));
        data.generator_degrees.push_back(2);
    }
    std::sort(data.generator_degrees.begin(), data.generator_degrees.end());
    data.poincare = p;
    return data;
}

GradedPoly poincare_poly(const SpaceSpec& space)
{
    return std::visit(
        [](const auto& s) -> GradedPoly {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, ExteriorAlgebraSpec>) {
                GradedPoly p(BigInt(1));
                for (int d : s.degrees) {
                    if (d < 1 || d % 2 == 0)
                        throw std::invalid_argument("exterior generators must have odd positive degree");
                    p = p * one_plus_s(d);
                }
                return p;
            } else if constexpr (std::is_same_v<T, PsuSpec>) {
                return psu_cohomology(s.n, s.characteristic).poincare;
            } else if constexpr (std::is_same_v<T, FlagSpec>) {
                if (s.parts.size() < 2)
                    throw std::invalid_argument("flag spec needs at least two parts");
                for (int kj : s.parts)
                    if (kj < 1)
                        throw std::invalid_argument("flag parts must be positive");
                return q_multinomial(s.parts);
            } else if constexpr (std::is_same_v<T, GrassmannianSpec>) {
                if (s.k < 1 || s.k > s.n)
                    throw std::invalid_argument("Grassmannian spec requires 1 <= k <= n");
                return q_binomial(s.n, s.k);
            } else if constexpr (std::is_same_v<T, TorusSpec>) {
                if (s.n < 1)
                    throw std::invalid_argument("torus rank must be positive");
                return one_plus_s(1).pow(s.n);
            } else {
                static_assert(std::is_same_v<T, TruncatedPolySpec>);
                if (s.degree < 2 || s.degree % 2 != 0 || s.truncation < 1)
                    throw std::invalid_argument("truncated algebra needs even positive degree and truncation >= 1");
                return geometric(s.degree, s.truncation);
            }
        },
        space);
}

int space_dimension(const SpaceSpec& space)
{
    return std::visit(
        [](const auto& s) -> int {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, ExteriorAlgebraSpec>) {
                return std::accumulate(s.degrees.begin(), s.degrees.end(), 0);
            } else if constexpr (std::is_same_v<T, PsuSpec>) {
                return s.n * s.n - 1;
            } else if constexpr (std::is_same_v<T, FlagSpec>) {
                int d = 0;
                for (size_t i = 0; i < s.parts.size(); ++i)
                    for (size_t j = i + 1; j < s.parts.size(); ++j)
                        d += s.parts[i] * s.parts[j];
                return 2 * d;
            } else if constexpr (std::is_same_v<T, GrassmannianSpec>) {
                return 2 * s.k * (s.n - s.k);
            } else if constexpr (std::is_same_v<T, TorusSpec>) {
                return s.n;
            } else {
                static_assert(std::is_same_v<T, TruncatedPolySpec>);
                return s.degree * (s.truncation - 1);
            }
        },
        space);
}

}  // namespace floercalc
