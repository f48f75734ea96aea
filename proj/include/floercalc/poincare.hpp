#ifndef FLOERCALC_POINCARE_HPP
#define FLOERCALC_POINCARE_HPP

#include <variant>
#include <vector>

#include "floercalc/ring.hpp"

namespace floercalc {

/* Space descriptions whose graded Betti numbers the toolkit knows how to
 * build.  Degrees live in the Z-grading of singular cohomology. */
struct ExteriorAlgebraSpec {
    std::vector<int> degrees;  // odd positive generator degrees
};
struct PsuSpec {
    int n;                 // n >= 2
    long characteristic;   // 0 or a prime
};
struct FlagSpec {
    std::vector<int> parts;  // k_1..k_r, r >= 2, each >= 1
};
struct GrassmannianSpec {
    int k;
    int n;  // 1 <= k <= n
};
struct TorusSpec {
    int n;  // n >= 1
};
struct TruncatedPolySpec {
    int degree;      // even positive generator degree
    int truncation;  // power at which the generator dies, >= 1
};

using SpaceSpec = std::variant<ExteriorAlgebraSpec, PsuSpec, FlagSpec, GrassmannianSpec,
                               TorusSpec, TruncatedPolySpec>;

GradedPoly poincare_poly(const SpaceSpec& space);

/* top cohomological degree, computed from the parameters (not from the
 * polynomial), so duality tests have an independent reference point */
int space_dimension(const SpaceSpec& space);

/* Graded cohomology data of PSU(n) over a field of the given characteristic.
 *
 * For characteristic p > 0 with p^r the greatest power of p dividing n, the
 * ring is generated by odd classes x_{2j-1} (j = 1..n, j != p^r omitted) and
 * an even class y of degree 2 truncated at y^{p^r}.  When p = 2 and r = 1
 * the relation x_1^2 = 0 is replaced by x_1^2 = y; the graded dimensions are
 * unchanged but y stops being needed as a generator, which the
 * generation_shift flag records. */
struct PsuCohomology {
    GradedPoly poincare;
    std::vector<int> generator_degrees;
    long prime_power = 1;          // p^r, or 1 when p = 0 or p does not divide n
    bool generation_shift = false;

    int generation_max_degree() const;
};

PsuCohomology psu_cohomology(int n, long characteristic);

/* exact binomial coefficient */
BigInt binomial(long n, long k);

/* C(n, k) mod p by Lucas' theorem (base-p digit product) */
Coefficient binom_mod_p(long n, long k, long p);

/* greatest power of p dividing n; 1 when p = 0 */
long p_power_in(long n, long p);

/* smallest N > n-k with C(n, N) nonzero in characteristic p (n-k+1 when p = 0) */
long generation_degree_stiefel(int n, int k, long p);

/* Gaussian binomial [n choose k]_q and q-multinomial with q = S^q_degree */
GradedPoly q_binomial(int n, int k, int q_degree = 2);
GradedPoly q_multinomial(const std::vector<int>& parts, int q_degree = 2);

}  // namespace floercalc

#endif
