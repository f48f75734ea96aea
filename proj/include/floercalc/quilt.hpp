#ifndef FLOERCALC_QUILT_HPP
#define FLOERCALC_QUILT_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "floercalc/spin_gysin.hpp"

namespace floercalc {

struct QuiltDataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct QuiltAmbiguityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Index-2 disc data for a Chekanov torus obtained as an embedded
 * composition: ambient lattice basis (sphere classes first, then the two
 * disc classes), the five disc classes in that basis, and the reference
 * sign convention induced by the standard spin structures (all discs
 * negative; a global shift flips the convention to all positive). */
struct ChekanovLedger {
    std::string name;
    std::vector<std::string> basis;
    size_t sphere_count = 0;  // leading basis entries
    std::vector<std::vector<int>> discs;
    int reference_sign = -1;

    size_t disc_basis_count() const { return basis.size() - sphere_count; }
    void validate() const;
};

ChekanovLedger chekanov_ledger(GysinFamily family);

/* the signed disc counts of an embedded composition cancel:
 * w(composition) = -w(correspondence) - w(fiber Lagrangian) */
int w_sum(int w_corr, int w_fiber);

/* one candidate assignment of the unknown disc-dual components */
struct DeltaSolution {
    std::vector<int> delta;       // (delta_1, delta_2) in Z/2
    std::vector<int> disc_signs;  // resulting signs of the five discs
};

/* Brute-force over the disc-dual components; the sphere-dual components of
 * the spin difference are forced by the background class and supplied as
 * flags.  Every assignment whose signed count hits the target is returned. */
std::vector<DeltaSolution> solve_delta(const ChekanovLedger& ledger, int target_w,
                                       const std::vector<int>& forced_sphere_flags);

/* signed sum of the disc-class coordinates; sphere coordinates have no
 * boundary and drop out */
std::pair<long, long> boundary_sum(const ChekanovLedger& ledger, const DeltaSolution& solution);

struct QuiltScenario {
    std::string label;
    SpinChoice spin;                       // on the correspondence Lagrangian
    bool shifted = false;                  // global spin shift applied
    std::vector<int> forced_sphere_flags;  // Z/2, one per sphere basis class
    int w_corr = 0;
    int w_fiber = 0;
};

std::vector<QuiltScenario> curated_scenarios(GysinFamily family);

struct QuiltRow {
    QuiltScenario scenario;
    int target_w = 0;
    DeltaSolution solution;
    long boundary_d1 = 0;
    long boundary_d2 = 0;
    std::vector<long> wide_chars;  // prime divisors of |boundary_d1|
    std::string note;
};

struct QuiltTable {
    GysinFamily family;
    std::vector<QuiltRow> rows;
};

/* Runs the pipeline on every curated scenario and cross-checks the verdict
 * table against the cone classification; disagreement, a nonzero boundary
 * in the second disc class, or a non-unique solution all throw. */
QuiltTable quilt_wide_chars(GysinFamily family);

}  // namespace floercalc

#endif
