#ifndef FLOERCALC_PERIODICITY_HPP
#define FLOERCALC_PERIODICITY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "floercalc/poincare.hpp"
#include "floercalc/ring.hpp"

namespace floercalc {

enum class WideStatus { Wide, Narrow, Unknown };
enum class GenerationVerdict { Wide, WideOrNarrow, NoInfo };

std::string to_string(WideStatus s);
std::string to_string(GenerationVerdict v);

/* Algebra generated in degrees <= maslov - 2 pins wide; equality at
 * maslov - 1 leaves the wide-or-narrow dichotomy. */
GenerationVerdict generation_wide_narrow(int gen_max_degree, int maslov);

/* S^q + S^{2q} + ... + S^N, the factor a q-periodic polynomial must carry */
GradedPoly periodicity_factor(int q, int modulus);

/* Outcome of the grading-periodicity test on a cyclic polynomial:
 *   (a) divisibility by periodicity_factor(q', N) in Z[S]/(S^N - 1),
 *   (b) N/q' dividing the total dimension,
 *   (c) vanishing at the primitive d-th roots of unity for d | N, d not | q'.
 * Divisibility is decided exactly: it holds iff the coefficient vector is
 * invariant under rotation by q', and the quotient certificate is emitted. */
struct PeriodicityReport {
    int modulus = 0;         // N
    int period = 0;          // q as supplied
    int reduced_period = 0;  // q' = gcd(q, N)
    bool divisible = false;
    bool total_dim_divisible = false;
    BigInt total_dimension;
    std::vector<long> failing_conductors;
    GradedPoly quotient;  // quotient * factor == input, when divisible

    bool passed() const { return divisible && total_dim_divisible && failing_conductors.empty(); }
};

PeriodicityReport periodicity_test(const CyclicPoly& pf, int q);

/* No 2-periodic wide torus of rank n exists with this Maslov number:
 * the report must exhibit a failed check.  Requires maslov > 2, even. */
struct TorusBoundCertificate {
    int rank = 0;
    int maslov = 0;
    PeriodicityReport report;
};
TorusBoundCertificate torus_maslov_bound(int rank, int maslov);

/* Can an exterior algebra on the given odd degrees support a q-periodic
 * wide brane at this Maslov number?  Beyond max degree + 1 the answer is
 * no, and the failed periodicity checks certify it. */
struct ExteriorBoundVerdict {
    bool feasible = false;
    int bound = 0;  // max generator degree + 1
    std::string reason;
    std::optional<PeriodicityReport> report;
};
ExteriorBoundVerdict exterior_maslov_bound(const std::vector<int>& odd_degrees, int q, int maslov);

/* One (characteristic, status) row with its certificate.  The verdicts
 * reproduce the checks they rest on rather than bare booleans. */
struct PsuEntry {
    int n = 0;
    long characteristic = 0;
    long prime_power = 1;  // p^r || n, 1 in characteristic zero
    WideStatus status = WideStatus::Unknown;
    std::vector<int> generator_degrees;
    int generation_max_degree = 0;
    bool generation_shift = false;
    GenerationVerdict generation = GenerationVerdict::NoInfo;
    std::optional<PeriodicityReport> report;  // the failed test, narrow case
    std::string scope_note;

    std::string certificate_summary() const;
};
PsuEntry classify_psu(int n, long characteristic);

struct StiefelEntry {
    int n = 0;
    int k = 0;
    long characteristic = 0;
    long prime_power = 1;
    WideStatus status = WideStatus::Unknown;
    long generation_degree = 0;  // smallest N > n-k with C(n, N) != 0 in char p
    int generation_max_degree = 0;
    GenerationVerdict generation = GenerationVerdict::NoInfo;
    long witness_exponent = 0;   // n - p^r, narrow case
    BigInt witness_binomial;     // C(n, p^r), invertible in char p
    long witness_residue = 0;    // its residue mod p (p > 0)
    std::string scope_note;

    std::string certificate_summary() const;
};
StiefelEntry classify_stiefel(int n, int k, long characteristic);

/* characteristic -> wide/narrow map; each characteristic appears once */
struct CharVerdict {
    std::vector<std::pair<long, WideStatus>> entries;
    std::string scope_note;

    void add(long characteristic, WideStatus status);
    std::optional<WideStatus> status_for(long characteristic) const;
};

CharVerdict psu_char_verdict(int n, const std::vector<long>& characteristics);
CharVerdict stiefel_char_verdict(int n, int k, const std::vector<long>& characteristics);

}  // namespace floercalc

#endif
