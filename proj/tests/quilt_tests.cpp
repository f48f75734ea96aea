#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "floercalc/quilt.hpp"

using namespace floercalc;

TEST_CASE("the w-sum rule")
{
    CHECK(w_sum(3, 2) == -5);
    CHECK(w_sum(1, 2) == -3);
    CHECK(w_sum(0, 0) == 0);
}

TEST_CASE("ledger shapes")
{
    ChekanovLedger so3 = chekanov_ledger(GysinFamily::So3);
    CHECK(so3.basis.size() == 4);
    CHECK(so3.sphere_count == 2);
    CHECK(so3.discs.size() == 5);

    ChekanovLedger lens = chekanov_ledger(GysinFamily::Lens);
    CHECK(lens.sphere_count == 1);

    ChekanovLedger broken = so3;
    broken.discs.pop_back();
    CHECK_THROWS_AS(broken.validate(), std::invalid_argument);
}

TEST_CASE("solving for the disc-dual components")
{
    ChekanovLedger so3 = chekanov_ledger(GysinFamily::So3);

    // all five discs negative sums to -5, with no twisting at all
    std::vector<DeltaSolution> base = solve_delta(so3, -5, {0, 0});
    REQUIRE(base.size() == 1);
    CHECK(base[0].delta == std::vector<int>{0, 0});
    CHECK(base[0].disc_signs == std::vector<int>{-1, -1, -1, -1, -1});

    // forced sphere components and target -3 pin (1, 0)
    std::vector<DeltaSolution> twisted = solve_delta(so3, -3, {1, 1});
    REQUIRE(twisted.size() == 1);
    CHECK(twisted[0].delta == std::vector<int>{1, 0});

    ChekanovLedger lens = chekanov_ledger(GysinFamily::Lens);
    std::vector<DeltaSolution> lens_sol = solve_delta(lens, -3, {0});
    REQUIRE(lens_sol.size() == 1);
    CHECK(lens_sol[0].delta == std::vector<int>{1, 0});

    // no solution is reported as an empty set
    CHECK(solve_delta(lens, 5, {0}).empty());

    CHECK_THROWS_AS(solve_delta(so3, -4, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(solve_delta(so3, -7, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(solve_delta(so3, -3, {0}), std::invalid_argument);
}

TEST_CASE("boundary sums")
{
    ChekanovLedger so3 = chekanov_ledger(GysinFamily::So3);
    DeltaSolution all_minus = solve_delta(so3, -5, {0, 0}).front();
    CHECK(boundary_sum(so3, all_minus) == std::pair<long, long>{3, 0});

    DeltaSolution five = solve_delta(so3, -3, {1, 1}).front();
    CHECK(boundary_sum(so3, five) == std::pair<long, long>{5, 0});

    ChekanovLedger lens = chekanov_ledger(GysinFamily::Lens);
    CHECK(boundary_sum(lens, solve_delta(lens, -5, {0}).front()) == std::pair<long, long>{7, 0});
    CHECK(boundary_sum(lens, solve_delta(lens, -3, {0}).front()) == std::pair<long, long>{9, 0});
}

TEST_CASE("second boundary class cancels under balanced sphere forcing")
{
    /* The two discs carrying D2 pair equally with delta whenever the forced
     * sphere components treat their spheres alike, so their contributions
     * cancel for every (delta_1, delta_2); an asymmetric forcing is what
     * makes the coefficient land on +-2. */
    auto signs_for = [](const ChekanovLedger& ledger, const std::vector<int>& forced, int d1,
                        int d2) {
        std::vector<int> full(ledger.basis.size(), 0);
        for (size_t i = 0; i < ledger.sphere_count; ++i)
            full[i] = forced[i];
        full[ledger.sphere_count] = d1;
        full[ledger.sphere_count + 1] = d2;
        DeltaSolution sol;
        sol.delta = {d1, d2};
        for (const auto& coords : ledger.discs) {
            int pairing = 0;
            for (size_t i = 0; i < coords.size(); ++i)
                pairing += full[i] * coords[i];
            sol.disc_signs.push_back(ledger.reference_sign * (pairing % 2 == 0 ? 1 : -1));
        }
        return sol;
    };

    ChekanovLedger so3 = chekanov_ledger(GysinFamily::So3);
    for (const std::vector<int>& forced : {std::vector<int>{0, 0}, {1, 1}})
        for (int d1 = 0; d1 <= 1; ++d1)
            for (int d2 = 0; d2 <= 1; ++d2)
                CHECK(boundary_sum(so3, signs_for(so3, forced, d1, d2)).second == 0);
    for (int d1 = 0; d1 <= 1; ++d1)
        for (int d2 = 0; d2 <= 1; ++d2) {
            long b2 = boundary_sum(so3, signs_for(so3, {1, 0}, d1, d2)).second;
            CHECK((b2 == 2 || b2 == -2));
        }

    ChekanovLedger lens = chekanov_ledger(GysinFamily::Lens);
    for (const std::vector<int>& forced : {std::vector<int>{0}, {1}})
        for (int d1 = 0; d1 <= 1; ++d1)
            for (int d2 = 0; d2 <= 1; ++d2)
                CHECK(boundary_sum(lens, signs_for(lens, forced, d1, d2)).second == 0);
}

TEST_CASE("delta_2 flip permutes the solution sets")
{
    /* Both ledgers pair D2 against one disc with +1 and one with -1, so
     * flipping delta_2 maps the solution set of one target onto the
     * solution set of the recomputed target, assignment by assignment. */
    for (GysinFamily family : {GysinFamily::So3, GysinFamily::Lens}) {
        ChekanovLedger ledger = chekanov_ledger(family);
        std::vector<int> no_force(ledger.sphere_count, 0);
        for (int target : {-5, -3, -1, 1, 3, 5}) {
            for (const DeltaSolution& sol : solve_delta(ledger, target, no_force)) {
                int flipped_target = 0;
                std::vector<int> full(ledger.basis.size(), 0);
                full[ledger.sphere_count] = sol.delta[0];
                full[ledger.sphere_count + 1] = 1 - sol.delta[1];
                for (const auto& coords : ledger.discs) {
                    int pairing = 0;
                    for (size_t i = 0; i < coords.size(); ++i)
                        pairing += full[i] * coords[i];
                    flipped_target += -(pairing % 2 == 0 ? 1 : -1);
                }
                bool found = false;
                for (const DeltaSolution& other : solve_delta(ledger, flipped_target, no_force))
                    if (other.delta == std::vector<int>{sol.delta[0], 1 - sol.delta[1]})
                        found = true;
                CHECK(found);
            }
        }
    }
}

TEST_CASE("curated scenarios and the full pipeline")
{
    QuiltTable so3 = quilt_wide_chars(GysinFamily::So3);
    REQUIRE(so3.rows.size() == 4);
    CHECK(so3.rows[0].target_w == -5);
    CHECK(so3.rows[0].solution.delta == std::vector<int>{0, 0});
    CHECK(so3.rows[0].boundary_d1 == 3);
    CHECK(so3.rows[0].wide_chars == std::vector<long>{3});

    CHECK(so3.rows[1].target_w == -3);
    CHECK(so3.rows[1].solution.delta == std::vector<int>{1, 0});
    CHECK(so3.rows[1].boundary_d1 == 5);
    CHECK(so3.rows[1].wide_chars == std::vector<long>{5});

    // shifted scenarios negate the target and the boundary, same verdicts
    CHECK(so3.rows[2].target_w == 5);
    CHECK(so3.rows[2].boundary_d1 == -3);
    CHECK(so3.rows[2].wide_chars == std::vector<long>{3});
    CHECK(so3.rows[3].boundary_d1 == -5);
    CHECK(so3.rows[3].wide_chars == std::vector<long>{5});

    QuiltTable lens = quilt_wide_chars(GysinFamily::Lens);
    REQUIRE(lens.rows.size() == 4);
    CHECK(lens.rows[0].boundary_d1 == 7);
    CHECK(lens.rows[0].wide_chars == std::vector<long>{7});
    CHECK(lens.rows[1].boundary_d1 == 9);
    CHECK(lens.rows[1].wide_chars == std::vector<long>{3});
    CHECK(lens.rows[2].boundary_d1 == -7);
    CHECK(lens.rows[3].boundary_d1 == -9);

    // every scenario's boundary in the second class vanished
    for (const QuiltTable& t : {so3, lens})
        for (const QuiltRow& row : t.rows)
            CHECK(row.boundary_d2 == 0);

    // scenario-by-scenario agreement with the cone classification
    for (const QuiltTable& t : {so3, lens}) {
        GysinTable cone = classify_gysin_family(t.family);
        for (const QuiltRow& row : t.rows)
            CHECK(row.wide_chars == cone.row_for(row.scenario.spin).wide_chars);
    }
}

TEST_CASE("scenario data is consistent with the disc ledgers")
{
    for (GysinFamily family : {GysinFamily::So3, GysinFamily::Lens}) {
        DiscLedger corr = standard_ledger(family);
        for (const QuiltScenario& sc : curated_scenarios(family)) {
            // w_corr is the signed count after the spin change
            CHECK(sc.w_corr ==
                  apply_spin_change(corr, sc.spin.as_delta()).signed_disc_count());
            CHECK((sc.w_fiber == 2 || sc.w_fiber == -2));
        }
    }
}
