#ifndef FLOERCALC_SPIN_GYSIN_HPP
#define FLOERCALC_SPIN_GYSIN_HPP

#include <map>
#include <string>
#include <vector>

#include "floercalc/periodicity.hpp"
#include "floercalc/ring.hpp"

namespace floercalc {

/* The two curated circle-bundle families: the SO(3) orbit in the triple
 * product of projective lines, and the L(4,1) orbit in the product of the
 * projective plane with a line. */
enum class GysinFamily { So3, Lens };

GysinFamily gysin_family_from_string(const std::string& name);
std::string to_string(GysinFamily family);

struct DiscRecord {
    std::vector<int> coords;  // in the ledger's relative basis
    int sign;                 // +-1
};

/* Curated index-2 disc data for one Lagrangian: a basis of relative
 * classes with Maslov indices, the disc records, the Z/2 pairing of each
 * spin-difference basis vector against the relative basis, and the ambient
 * sphere classes written in relative coordinates. */
struct DiscLedger {
    std::string name;
    std::vector<std::string> basis;
    std::vector<int> maslov;
    std::vector<DiscRecord> discs;
    std::vector<std::vector<int>> pairings;  // rows: spin-difference basis
    std::map<std::string, std::vector<int>> sphere_classes;

    size_t rank() const { return basis.size(); }
    int disc_maslov(const DiscRecord& d) const;
    int signed_disc_count() const;  // sum of the signs
    void validate() const;
};

/* one sign per spin-difference basis vector */
struct SpinChoice {
    std::vector<int> signs;  // entries +-1

    std::vector<int> as_delta() const;  // 1 where the sign is -1
    std::string str() const;
};

std::vector<SpinChoice> all_spin_choices(size_t rank);

/* each disc sign is multiplied by (-1)^<delta, class> */
DiscLedger apply_spin_change(const DiscLedger& ledger, const std::vector<int>& delta);

/* (-1)^<background of the spin choice, sphere>: the product of the chosen
 * signs over the sphere's odd relative coordinates */
int sphere_background_sign(const DiscLedger& ledger, const SpinChoice& spin,
                           const std::string& sphere);

/* the standard ledgers, discs all counted positively */
DiscLedger standard_ledger(GysinFamily family);

/* Nonvanishing forces the characteristic to divide m: obtained by raising
 * the closed-open relation for the invertible degree-2 class to the power
 * its quantum relation dictates. */
struct CharConstraint {
    BigInt m;
    std::vector<long> admissible;  // prime divisors of |m|
    std::string derivation;
};
CharConstraint co_char_constraint(GysinFamily family, const SpinChoice& spin);

/* Euler number, quantum self-intersection sign of the base (H^2 = s T^2),
 * and the signed disc count entering the degree-shifted Euler class. */
struct GysinData {
    int euler = 0;
    int qh_sign = 1;
    BigInt nu;
};

/* matrix of multiplication by e H + nu T in the basis {1, H} */
struct GysinDeterminant {
    GysinData data;
    BigInt det_coeff;              // nu^2 - e^2 s, times T^2
    std::vector<long> wide_chars;  // the primes dividing it
};
GysinDeterminant gysin_determinant(const GysinData& data);

/* nu^2 - e^2 s never lands on a unit when e is even with |e| >= 2, so some
 * characteristic always survives.  Certified by the residue argument plus
 * a window scan over |nu| <= e^2 + 2 (squares outgrow the window). */
struct NeverUnitCertificate {
    int euler = 0;
    int qh_sign = 1;
    long window = 0;
    std::string argument;
};
NeverUnitCertificate gysin_never_unit(int e, int s);

/* the signed disc count through the angular chain, from the CO relations */
BigInt solve_nu(GysinFamily family, const SpinChoice& spin);

struct GysinRow {
    SpinChoice spin;
    CharConstraint constraint;
    GysinData data;
    BigInt det_coeff;
    std::vector<long> wide_chars;
    std::string nu_origin;  // stated directly, or derived from CO relations
    std::string certificate_note;
};

struct GysinTable {
    GysinFamily family;
    std::vector<GysinRow> rows;

    const GysinRow& row_for(const SpinChoice& spin) const;
    CharVerdict verdict(const SpinChoice& spin, const std::vector<long>& characteristics) const;
};

GysinTable classify_gysin_family(GysinFamily family);

/* same classification over supplied curated data; the ledger must present
 * the standard convention (all base signs positive) */
GysinTable classify_gysin_family(GysinFamily family, const DiscLedger& ledger, int euler,
                                 const std::string& base_sphere);

}  // namespace floercalc

#endif
