#include "floercalc/periodicity.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace floercalc {

std::string to_string(WideStatus s)
{
    switch (s) {
        case WideStatus::Wide: return "wide";
        case WideStatus::Narrow: return "narrow";
        default: return "unknown";
    }
}

std::string to_string(GenerationVerdict v)
{
    switch (v) {
        case GenerationVerdict::Wide: return "wide";
        case GenerationVerdict::WideOrNarrow: return "wide-or-narrow";
        default: return "no-info";
    }
}

GenerationVerdict generation_wide_narrow(int gen_max_degree, int maslov)
{
    if (gen_max_degree <= maslov - 2)
        return GenerationVerdict::Wide;
    if (gen_max_degree == maslov - 1)
        return GenerationVerdict::WideOrNarrow;
    return GenerationVerdict::NoInfo;
}

GradedPoly periodicity_factor(int q, int modulus)
{
    if (q < 1 || modulus < 1 || modulus % q != 0)
        throw std::invalid_argument("periodicity_factor: q must divide the modulus");
    GradedPoly f;
    for (int k = 1; k <= modulus / q; ++k)
        f = f + GradedPoly::monomial(k * q);
    return f;
}

PeriodicityReport periodicity_test(const CyclicPoly& pf, int q)
{
    const int N = pf.modulus();
    if (q < 1 || q > N)
        throw std::invalid_argument("periodicity_test: period must satisfy 1 <= q <= N");

    PeriodicityReport rep;
    rep.modulus = N;
    rep.period = q;
    rep.reduced_period = std::gcd(q, N);
    const int qr = rep.reduced_period;

    /* Convolution with the folded factor (the indicator of the subgroup
     * generated by q') is constant on residue classes mod q', so exact
     * divisibility is equivalent to invariance under rotation by q'. */
    rep.divisible = pf.shift_invariant(qr);
    if (rep.divisible) {
        GradedPoly g;
        for (int c = 0; c < qr; ++c)
            g = g + GradedPoly::monomial(c, pf.at(c));
        rep.quotient = g;
    }

    rep.total_dimension = pf.total();
    rep.total_dim_divisible = (rep.total_dimension % (N / qr)) == 0;

    for (long d : divisors(N))
        if (qr % d != 0 && !eval_at_root(pf, static_cast<int>(d)).is_zero())
            rep.failing_conductors.push_back(d);
    return rep;
}

TorusBoundCertificate torus_maslov_bound(int rank, int maslov)
{
    if (rank < 1)
        throw std::invalid_argument("torus_maslov_bound: rank must be positive");
    if (maslov <= 2 || maslov % 2 != 0)
        throw std::invalid_argument("torus_maslov_bound: nothing to prove unless the Maslov number is even and > 2");

    TorusBoundCertificate cert;
    cert.rank = rank;
    cert.maslov = maslov;
    GradedPoly p = poincare_poly(TorusSpec{rank});
    cert.report = periodicity_test(cyclic_reduce(p, maslov), 2);
    if (cert.report.passed())
        throw std::logic_error("torus_maslov_bound: expected a failed check");
    return cert;
}

ExteriorBoundVerdict exterior_maslov_bound(const std::vector<int>& odd_degrees, int q, int maslov)
{
    if (odd_degrees.empty())
        throw std::invalid_argument("exterior_maslov_bound: no generators");
    for (int d : odd_degrees)
        if (d < 1 || d % 2 == 0)
            throw std::invalid_argument("exterior_maslov_bound: invalid exterior generator degree");
    if (q < 2 || q % 2 != 0)
        throw std::invalid_argument("exterior_maslov_bound: period must be even and positive");
    if (maslov < 2 || maslov % 2 != 0)
        throw std::invalid_argument("exterior_maslov_bound: Maslov number must be even and positive");

    ExteriorBoundVerdict verdict;
    verdict.bound = *std::max_element(odd_degrees.begin(), odd_degrees.end()) + 1;
    if (maslov <= verdict.bound) {
        verdict.feasible = true;
        verdict.reason = "bound not exceeded";
        return verdict;
    }

    GradedPoly p = poincare_poly(ExteriorAlgebraSpec{odd_degrees});
    PeriodicityReport rep = periodicity_test(cyclic_reduce(p, maslov), std::min(q, maslov));
    verdict.report = rep;
    if (rep.passed()) {
        // only reachable when the period collapses to the full modulus
        if (rep.reduced_period != maslov)
            throw std::logic_error("exterior_maslov_bound: unexpected pass with a proper period");
        verdict.feasible = true;
        verdict.reason = "period collapses to the Maslov number; periodicity is tautological";
        return verdict;
    }

    verdict.feasible = false;
    std::ostringstream why;
    why << "Maslov number " << maslov << " exceeds the bound " << verdict.bound << ": ";
    if (!rep.total_dim_divisible)
        why << "total dimension " << rep.total_dimension.str() << " is not divisible by "
            << maslov / rep.reduced_period;
    else {
        why << "nonzero residue at conductor";
        for (long d : rep.failing_conductors)
            why << " " << d;
    }
    verdict.reason = why.str();
    return verdict;
}

/******** PSU classification ********/

static const char* kBraneScopeNote =
    "assumes a 2-periodic brane with minimal Maslov number 2n; covers every relative spin "
    "structure and flat line bundle";

PsuEntry classify_psu(int n, long characteristic)
{
    if (n < 2)
        throw std::invalid_argument("classify_psu: out of family (needs n >= 2)");
    if (characteristic != 0 && !is_prime(characteristic))
        throw std::invalid_argument("classify_psu: characteristic must be 0 or prime");

    PsuCohomology data = psu_cohomology(n, characteristic);
    PsuEntry entry;
    entry.n = n;
    entry.characteristic = characteristic;
    entry.prime_power = data.prime_power;
    entry.generator_degrees = data.generator_degrees;
    entry.generation_max_degree = data.generation_max_degree();
    entry.generation_shift = data.generation_shift;
    entry.generation = generation_wide_narrow(entry.generation_max_degree, 2 * n);
    entry.scope_note = kBraneScopeNote;

    if (characteristic > 0 && data.prime_power == n) {
        // generators stop below degree 2n - 1, so generation alone pins wide
        if (entry.generation != GenerationVerdict::Wide)
            throw std::logic_error("classify_psu: generation certificate failed for a prime power");
        entry.status = WideStatus::Wide;
        return entry;
    }

    // generated in degree <= 2n - 1: wide or narrow; periodicity rules out wide
    entry.report = periodicity_test(cyclic_reduce(data.poincare, 2 * n), 2);
    if (entry.report->passed())
        throw std::logic_error("classify_psu: periodicity unexpectedly consistent");
    entry.status = WideStatus::Narrow;
    return entry;
}

std::string PsuEntry::certificate_summary() const
{
    std::ostringstream out;
    if (status == WideStatus::Wide) {
        out << "p^r = n = " << prime_power << "; generated in degree <= " << generation_max_degree
            << " <= 2n-2";
        if (generation_shift)
            out << " (square of the degree-1 class replaces y)";
    } else if (report) {
        out << "p^r = " << prime_power << "; ";
        if (!report->total_dim_divisible)
            out << "total dimension " << report->total_dimension.str() << " not divisible by "
                << report->modulus / report->reduced_period;
        else {
            out << "nonzero root residue at conductor";
            for (long d : report->failing_conductors)
                out << " " << d;
        }
    }
    return out.str();
}

/******** projective Stiefel classification ********/

StiefelEntry classify_stiefel(int n, int k, long characteristic)
{
    if (n < 2 || k < 1 || k >= n)
        throw std::invalid_argument("classify_stiefel: out of family (needs 1 <= k < n)");
    if (characteristic != 0 && !is_prime(characteristic))
        throw std::invalid_argument("classify_stiefel: characteristic must be 0 or prime");

    StiefelEntry entry;
    entry.n = n;
    entry.k = k;
    entry.characteristic = characteristic;
    entry.prime_power = p_power_in(n, characteristic);
    entry.generation_degree = generation_degree_stiefel(n, k, characteristic);
    entry.scope_note = "covers every relative spin structure and flat line bundle";

    const bool wide = k <= entry.prime_power;
    if ((entry.generation_degree == n) != wide)
        throw std::logic_error("classify_stiefel: certificate paths disagree");

    /* Generators: the degree-2 truncated class, plus odd classes of degree
     * 2j-1 for n-k < j <= n with j != generation_degree. */
    entry.generation_max_degree = wide ? (k >= 2 ? 2 * n - 3 : 2) : 2 * n - 1;
    entry.generation = generation_wide_narrow(entry.generation_max_degree, 2 * n);

    if (wide) {
        if (entry.generation != GenerationVerdict::Wide)
            throw std::logic_error("classify_stiefel: generation certificate failed");
        entry.status = WideStatus::Wide;
        return entry;
    }

    // invertibility chain: C(n, p^r) survives in char p, but the class it
    // multiplies lies above the rank n-k of the complement, so it vanishes
    entry.witness_exponent = n - entry.prime_power;
    entry.witness_binomial = binomial(n, entry.prime_power);
    if (characteristic > 0) {
        Coefficient w = binom_mod_p(n, entry.prime_power, characteristic);
        if (w.is_zero())
            throw std::logic_error("classify_stiefel: Lucas witness vanished");
        entry.witness_residue = w.residue();
    }
    if (!(entry.witness_exponent > n - k))
        throw std::logic_error("classify_stiefel: witness exponent below the rank bound");
    entry.status = WideStatus::Narrow;
    return entry;
}

std::string StiefelEntry::certificate_summary() const
{
    std::ostringstream out;
    if (status == WideStatus::Wide) {
        out << "k = " << k << " <= p^r = " << prime_power << "; generation degree " << generation_degree
            << " = n, generated in degree <= " << generation_max_degree;
    } else {
        out << "k = " << k << " > p^r = " << prime_power << "; C(" << n << "," << prime_power
            << ") = " << witness_binomial.str();
        if (characteristic > 0)
            out << " = " << witness_residue << " mod " << characteristic;
        out << " invertible, forces vanishing at exponent " << witness_exponent << " > " << n - k;
    }
    return out.str();
}

/******** aggregated verdicts ********/

void CharVerdict::add(long characteristic, WideStatus status)
{
    if (status_for(characteristic))
        throw std::invalid_argument("CharVerdict: duplicate characteristic");
    entries.emplace_back(characteristic, status);
}

std::optional<WideStatus> CharVerdict::status_for(long characteristic) const
{
    for (const auto& [c, s] : entries)
        if (c == characteristic)
            return s;
    return std::nullopt;
}

CharVerdict psu_char_verdict(int n, const std::vector<long>& characteristics)
{
    CharVerdict verdict;
    verdict.scope_note = kBraneScopeNote;
    for (long c : characteristics)
        verdict.add(c, classify_psu(n, c).status);
    return verdict;
}

CharVerdict stiefel_char_verdict(int n, int k, const std::vector<long>& characteristics)
{
    CharVerdict verdict;
    for (long c : characteristics) {
        StiefelEntry e = classify_stiefel(n, k, c);
        verdict.scope_note = e.scope_note;
        verdict.add(c, e.status);
    }
    return verdict;
}

}  // namespace floercalc
