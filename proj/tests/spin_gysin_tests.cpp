#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "floercalc/spin_gysin.hpp"

using namespace floercalc;

namespace {

std::vector<int> signs_of(const DiscLedger& ledger)
{
    std::vector<int> s;
    for (const DiscRecord& d : ledger.discs)
        s.push_back(d.sign);
    return s;
}

}  // namespace

TEST_CASE("ledger validation")
{
    DiscLedger so3 = standard_ledger(GysinFamily::So3);
    CHECK(so3.rank() == 3);
    CHECK(so3.discs.size() == 3);
    CHECK(so3.signed_disc_count() == 3);

    DiscLedger lens = standard_ledger(GysinFamily::Lens);
    CHECK(lens.discs.size() == 3);
    CHECK(lens.signed_disc_count() == 3);

    DiscLedger broken = so3;
    broken.discs[0].coords = {1, 1, 0};  // Maslov 4
    CHECK_THROWS_AS(broken.validate(), std::invalid_argument);
    broken = so3;
    broken.discs[0].sign = 2;
    CHECK_THROWS_AS(broken.validate(), std::invalid_argument);
}

TEST_CASE("spin change acts on disc signs")
{
    DiscLedger so3 = standard_ledger(GysinFamily::So3);

    CHECK(signs_of(apply_spin_change(so3, {0, 0, 0})) == std::vector<int>{1, 1, 1});
    CHECK(signs_of(apply_spin_change(so3, {0, 0, 1})) == std::vector<int>{1, 1, -1});

    // involution, and more generally a (Z/2)^rank action
    for (const SpinChoice& s : all_spin_choices(3)) {
        std::vector<int> delta = s.as_delta();
        DiscLedger once = apply_spin_change(so3, delta);
        CHECK(signs_of(apply_spin_change(once, delta)) == signs_of(so3));
        for (const SpinChoice& t : all_spin_choices(3)) {
            std::vector<int> sum(3);
            for (int i = 0; i < 3; ++i)
                sum[i] = (delta[i] + t.as_delta()[i]) % 2;
            CHECK(signs_of(apply_spin_change(once, t.as_delta())) ==
                  signs_of(apply_spin_change(so3, sum)));
        }
    }

    // disc classes span, so the orbit of the sign vector is the full group
    std::set<std::vector<int>> orbit;
    for (const SpinChoice& s : all_spin_choices(3))
        orbit.insert(signs_of(apply_spin_change(so3, s.as_delta())));
    CHECK(orbit.size() == 8);

    std::set<std::vector<int>> lens_orbit;
    DiscLedger lens = standard_ledger(GysinFamily::Lens);
    for (const SpinChoice& s : all_spin_choices(2))
        lens_orbit.insert(signs_of(apply_spin_change(lens, s.as_delta())));
    CHECK(lens_orbit.size() == 4);

    CHECK_THROWS_AS(apply_spin_change(so3, {1, 0}), std::invalid_argument);
}

TEST_CASE("background signs of the sphere classes")
{
    DiscLedger so3 = standard_ledger(GysinFamily::So3);
    // S3 = A1 + A2 pairs through e1 e2
    CHECK(sphere_background_sign(so3, SpinChoice{{1, 1, 1}}, "S3") == 1);
    CHECK(sphere_background_sign(so3, SpinChoice{{1, -1, 1}}, "S3") == -1);
    CHECK(sphere_background_sign(so3, SpinChoice{{-1, -1, 1}}, "S3") == 1);

    DiscLedger lens = standard_ledger(GysinFamily::Lens);
    // the sphere factor's line is 2 A1: always +1
    for (const SpinChoice& s : all_spin_choices(2))
        CHECK(sphere_background_sign(lens, s, "S2") == 1);
    // the plane's line is A1 + 2 A3: the sign is e1
    CHECK(sphere_background_sign(lens, SpinChoice{{-1, 1}}, "S1") == -1);
    CHECK(sphere_background_sign(lens, SpinChoice{{1, -1}}, "S1") == 1);
}

TEST_CASE("characteristic constraints from the CO relations")
{
    CharConstraint all_equal = co_char_constraint(GysinFamily::So3, SpinChoice{{1, 1, 1}});
    CHECK(all_equal.m == -3);
    CHECK(all_equal.admissible == std::vector<long>{3});

    CharConstraint mixed = co_char_constraint(GysinFamily::So3, SpinChoice{{1, 1, -1}});
    CHECK(mixed.m == 5);
    CHECK(mixed.admissible == std::vector<long>{5});

    CharConstraint lens_mixed = co_char_constraint(GysinFamily::Lens, SpinChoice{{1, -1}});
    CHECK(lens_mixed.m == 9);
    CHECK(lens_mixed.admissible == std::vector<long>{3});

    CHECK(co_char_constraint(GysinFamily::Lens, SpinChoice{{1, 1}}).m == 7);

    CHECK_THROWS_AS(co_char_constraint(GysinFamily::So3, SpinChoice{{1, 1}}), std::invalid_argument);
}

TEST_CASE("determinant of the shifted Euler multiplication")
{
    GysinDeterminant d1 = gysin_determinant({2, 1, BigInt(-1)});
    CHECK(d1.det_coeff == -3);
    CHECK(d1.wide_chars == std::vector<long>{3});

    CHECK(gysin_determinant({4, 1, BigInt(-3)}).det_coeff == -7);
    CHECK(gysin_determinant({2, -1, BigInt(1)}).det_coeff == 5);
}

TEST_CASE("the determinant never lands on a unit")
{
    for (int e : {2, 4, 6, 8, -2, -4})
        for (int s : {1, -1}) {
            NeverUnitCertificate cert = gysin_never_unit(e, s);
            CHECK(cert.window == static_cast<long>(e) * e + 2);
        }
    CHECK_THROWS_AS(gysin_never_unit(3, 1), std::invalid_argument);
    CHECK_THROWS_AS(gysin_never_unit(0, 1), std::invalid_argument);
}

TEST_CASE("disc counts from the CO relations")
{
    CHECK(solve_nu(GysinFamily::So3, SpinChoice{{1, 1, 1}}) == -1);
    CHECK(solve_nu(GysinFamily::Lens, SpinChoice{{1, 1}}) == -3);
    CHECK(solve_nu(GysinFamily::Lens, SpinChoice{{1, -1}}) == -5);
}

TEST_CASE("family tables")
{
    GysinTable so3 = classify_gysin_family(GysinFamily::So3);
    REQUIRE(so3.rows.size() == 8);
    for (const GysinRow& row : so3.rows) {
        bool all_equal = row.spin.signs[0] == row.spin.signs[1] &&
                         row.spin.signs[1] == row.spin.signs[2];
        if (all_equal) {
            CHECK(row.wide_chars == std::vector<long>{3});
            CHECK(row.det_coeff == -3);
        } else {
            CHECK(row.wide_chars == std::vector<long>{5});
            CHECK(row.det_coeff == 5);
        }
        // the narrowness constraint and the cone determinant agree
        CHECK(row.constraint.admissible == row.wide_chars);
    }

    GysinTable lens = classify_gysin_family(GysinFamily::Lens);
    REQUIRE(lens.rows.size() == 4);
    for (const GysinRow& row : lens.rows) {
        if (row.spin.signs[0] == row.spin.signs[1]) {
            CHECK(row.wide_chars == std::vector<long>{7});
            CHECK((row.det_coeff == -7 || row.det_coeff == 7));
        } else {
            CHECK(row.wide_chars == std::vector<long>{3});
            CHECK(row.det_coeff == 9);
        }
    }
    // the standard structures reproduce the headline determinants
    CHECK(lens.row_for(SpinChoice{{1, 1}}).det_coeff == -7);
    CHECK(lens.row_for(SpinChoice{{1, -1}}).det_coeff == 9);

    // global sign flip leaves m and the determinant unchanged
    for (const GysinRow& row : so3.rows) {
        SpinChoice flipped;
        for (int s : row.spin.signs)
            flipped.signs.push_back(-s);
        const GysinRow& other = so3.row_for(flipped);
        CHECK(other.constraint.m == row.constraint.m);
        CHECK(other.det_coeff == row.det_coeff);
    }
    for (const GysinRow& row : lens.rows) {
        SpinChoice flipped{{-row.spin.signs[0], -row.spin.signs[1]}};
        const GysinRow& other = lens.row_for(flipped);
        CHECK(abs(other.constraint.m) == abs(row.constraint.m));
        CHECK(other.det_coeff == row.det_coeff);
        CHECK(other.wide_chars == row.wide_chars);
    }

    CharVerdict v = so3.verdict(SpinChoice{{1, 1, 1}}, {0, 2, 3, 5, 7});
    CHECK(v.status_for(3) == WideStatus::Wide);
    CHECK(v.status_for(5) == WideStatus::Narrow);
    CHECK(v.status_for(0) == WideStatus::Narrow);
}
