#include "floercalc/quilt.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace floercalc {

void ChekanovLedger::validate() const
{
    if (discs.size() != 5)
        throw std::invalid_argument("ChekanovLedger: expected exactly five index-2 discs");
    if (sphere_count >= basis.size() || disc_basis_count() != 2)
        throw std::invalid_argument("ChekanovLedger: basis must end in two disc classes");
    for (const auto& d : discs)
        if (d.size() != basis.size())
            throw std::invalid_argument("ChekanovLedger: disc coordinates must match the basis");
    if (reference_sign != 1 && reference_sign != -1)
        throw std::invalid_argument("ChekanovLedger: reference sign must be +-1");
}

ChekanovLedger chekanov_ledger(GysinFamily family)
{
    ChekanovLedger ledger;
    if (family == GysinFamily::So3) {
        ledger.name = "so3";
        ledger.basis = {"S1", "S2", "D1", "D2"};
        ledger.sphere_count = 2;
        ledger.discs = {
            {0, 0, 1, 0},    // D1
            {1, 0, -1, -1},  // S1 - D1 - D2
            {1, 0, -1, 0},   // S1 - D1
            {0, 1, -1, 0},   // S2 - D1
            {0, 1, -1, 1},   // S2 - D1 + D2
        };
    } else {
        ledger.name = "lens";
        ledger.basis = {"S", "D1", "D2"};
        ledger.sphere_count = 1;
        ledger.discs = {
            {0, 1, 0},    // D1
            {1, -2, -1},  // S - 2D1 - D2
            {1, -2, 0},   // S - 2D1
            {1, -2, 0},   // S - 2D1 (twice)
            {1, -2, 1},   // S - 2D1 + D2
        };
    }
    ledger.validate();
    return ledger;
}

int w_sum(int w_corr, int w_fiber)
{
    return -w_corr - w_fiber;
}

std::vector<DeltaSolution> solve_delta(const ChekanovLedger& ledger, int target_w,
                                       const std::vector<int>& forced_sphere_flags)
{
    ledger.validate();
    if (std::abs(target_w) > 5 || target_w % 2 == 0)
        throw std::invalid_argument("solve_delta: target must be odd with |target| <= 5");
    if (forced_sphere_flags.size() != ledger.sphere_count)
        throw std::invalid_argument("solve_delta: one forced flag per sphere class required");

    std::vector<DeltaSolution> solutions;
    for (int d1 = 0; d1 <= 1; ++d1)
        for (int d2 = 0; d2 <= 1; ++d2) {
            std::vector<int> full(ledger.basis.size(), 0);
            for (size_t i = 0; i < ledger.sphere_count; ++i)
                full[i] = forced_sphere_flags[i] % 2;
            full[ledger.sphere_count] = d1;
            full[ledger.sphere_count + 1] = d2;

            DeltaSolution cand;
            cand.delta = {d1, d2};
            int total = 0;
            for (const auto& coords : ledger.discs) {
                int pairing = 0;
                for (size_t i = 0; i < coords.size(); ++i)
                    pairing += full[i] * coords[i];
                int sign = ledger.reference_sign * (pairing % 2 == 0 ? 1 : -1);
                cand.disc_signs.push_back(sign);
                total += sign;
            }
            if (total == target_w)
                solutions.push_back(std::move(cand));
        }
    return solutions;
}

std::pair<long, long> boundary_sum(const ChekanovLedger& ledger, const DeltaSolution& solution)
{
    if (solution.disc_signs.size() != ledger.discs.size())
        throw std::invalid_argument("boundary_sum: solution does not match the ledger");
    long d1 = 0, d2 = 0;
    for (size_t i = 0; i < ledger.discs.size(); ++i) {
        d1 += solution.disc_signs[i] * ledger.discs[i][ledger.sphere_count];
        d2 += solution.disc_signs[i] * ledger.discs[i][ledger.sphere_count + 1];
    }
    return {d1, d2};
}

std::vector<QuiltScenario> curated_scenarios(GysinFamily family)
{
    DiscLedger corr = standard_ledger(family);
    std::vector<std::string> ambient_spheres =
        family == GysinFamily::So3 ? std::vector<std::string>{"S1", "S2"}
                                   : std::vector<std::string>{"S1"};
    std::vector<SpinChoice> spins =
        family == GysinFamily::So3
            ? std::vector<SpinChoice>{{{1, 1, 1}}, {{1, 1, -1}}, {{-1, -1, -1}}, {{-1, -1, 1}}}
            : std::vector<SpinChoice>{{{1, 1}}, {{1, -1}}, {{-1, -1}}, {{-1, 1}}};

    std::vector<QuiltScenario> scenarios;
    for (size_t idx = 0; idx < spins.size(); ++idx) {
        const SpinChoice& spin = spins[idx];
        QuiltScenario sc;
        sc.spin = spin;
        sc.shifted = idx >= 2;
        sc.label = (sc.shifted ? "shifted " : "") + std::string("eps=(") + spin.str() + ")";
        sc.w_corr = apply_spin_change(corr, spin.as_delta()).signed_disc_count();
        // the Clifford equator bounds two positive discs; a shift flips them
        sc.w_fiber = sc.shifted ? -2 : 2;
        /* Sphere-dual components of the spin difference are the background
         * class of the scenario relative to the standard one; a global
         * shift moves both ends, so compare the unshifted partner. */
        SpinChoice effective = spin;
        if (sc.shifted)
            for (int& s : effective.signs)
                s = -s;
        for (const std::string& sphere : ambient_spheres)
            sc.forced_sphere_flags.push_back(
                sphere_background_sign(corr, effective, sphere) == -1 ? 1 : 0);
        scenarios.push_back(std::move(sc));
    }
    return scenarios;
}

QuiltTable quilt_wide_chars(GysinFamily family)
{
    QuiltTable table;
    table.family = family;
    GysinTable cone = classify_gysin_family(family);

    for (const QuiltScenario& sc : curated_scenarios(family)) {
        ChekanovLedger ledger = chekanov_ledger(family);
        ledger.reference_sign = sc.shifted ? 1 : -1;

        QuiltRow row;
        row.scenario = sc;
        row.target_w = w_sum(sc.w_corr, sc.w_fiber);

        std::vector<DeltaSolution> sols = solve_delta(ledger, row.target_w, sc.forced_sphere_flags);
        if (sols.size() != 1) {
            std::ostringstream report;
            report << "scenario " << sc.label << " target " << row.target_w << " admits "
                   << sols.size() << " delta assignments:";
            for (const DeltaSolution& s : sols)
                report << " (" << s.delta[0] << "," << s.delta[1] << ")";
            throw QuiltAmbiguityError(report.str());
        }
        row.solution = sols.front();

        auto [d1, d2] = boundary_sum(ledger, row.solution);
        row.boundary_d1 = d1;
        row.boundary_d2 = d2;
        if (d2 != 0)
            throw QuiltDataError("scenario " + sc.label + ": boundary has a second-class component " +
                                 std::to_string(d2));
        row.wide_chars = prime_divisors(BigInt(d1));
        row.note = "boundary class " + std::to_string(d1) +
                   " dD1 sweeps zero exactly in the listed characteristics; rank-2 cohomology "
                   "upgrades non-narrow to wide";

        if (row.wide_chars != cone.row_for(sc.spin).wide_chars)
            throw QuiltDataError("scenario " + sc.label + ": quilt and cone verdicts disagree");
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace floercalc
