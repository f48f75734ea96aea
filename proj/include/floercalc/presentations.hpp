#ifndef FLOERCALC_PRESENTATIONS_HPP
#define FLOERCALC_PRESENTATIONS_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "floercalc/ring.hpp"

namespace floercalc {

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Generator {
    std::string name;
    int degree;  // even positive
};

/* Polynomial with integer coefficients in the generators of a presentation
 * plus the Novikov variable T.  Exponent vectors list the generators in
 * presentation order with T in the final slot.  Coefficients stay integral;
 * reduction into a field happens when a matrix is assembled. */
class GenPoly {
  public:
    GenPoly() = default;
    static GenPoly constant(size_t nvars, const BigInt& c);
    static GenPoly variable(size_t nvars, size_t index, int power = 1);

    bool is_zero() const { return terms_.empty(); }
    size_t nvars() const;
    const std::map<std::vector<int>, BigInt>& terms() const { return terms_; }
    void add_term(const std::vector<int>& exps, const BigInt& c);

    GenPoly operator+(const GenPoly& o) const;
    GenPoly operator-(const GenPoly& o) const;
    GenPoly operator*(const GenPoly& o) const;
    GenPoly operator-() const;
    GenPoly pow(int e) const;
    bool operator==(const GenPoly& o) const { return terms_ == o.terms_; }

  private:
    std::map<std::vector<int>, BigInt> terms_;
};

/* Finitely presented graded-commutative algebra over K[T], all generators
 * of even degree.  Relations must be homogeneous with deg T = novikov. */
class Presentation {
  public:
    Presentation(std::vector<Generator> generators, int novikov_degree);

    const std::vector<Generator>& generators() const { return gens_; }
    int novikov_degree() const { return novikov_; }
    const std::vector<GenPoly>& relations() const { return relations_; }

    size_t nvars() const { return gens_.size() + 1; }
    size_t t_index() const { return gens_.size(); }
    size_t generator_index(const std::string& name) const;

    GenPoly one() const { return GenPoly::constant(nvars(), 1); }
    GenPoly gen(size_t i, int power = 1) const { return GenPoly::variable(nvars(), i, power); }
    GenPoly gen(const std::string& name, int power = 1) const;
    GenPoly novikov(int power = 1) const { return GenPoly::variable(nvars(), t_index(), power); }

    int degree_of(const std::vector<int>& exps) const;
    /* -1 for the zero polynomial; throws when not homogeneous */
    int homogeneous_degree(const GenPoly& p) const;

    void add_relation(GenPoly rel);

    std::string poly_str(const GenPoly& p) const;

  private:
    std::vector<Generator> gens_;
    int novikov_;
    std::vector<GenPoly> relations_;
};

/* quantum cohomology of projective (n)-space: K[H]/(H^{n+1} - sign T),
 * deg H = 2, deg T = 2(n+1) */
Presentation qh_projective(int n, int line_sign);

/* Sign data of a background class against the line class of each
 * Grassmannian factor: line_signs[j] = (-1)^<b, line_j>. */
struct BackgroundSign {
    std::vector<int> line_signs;  // entries +-1

    static BackgroundSign trivial(size_t factors);
    /* background of the natural relative spin structure; it pairs with the
     * j-th line class by k_j, cancelling the rank sign in the quantum
     * correction */
    static BackgroundSign spin(const std::vector<int>& k_list);
};

/* quantum correction sign per factor: (-1)^{k_j} times the background sign */
std::vector<int> quantum_correction_signs(const std::vector<int>& k_list, const BackgroundSign& b);

/* product of Grassmannians Gr(k_1, n) x ... x Gr(k_r, n), n = sum k_j:
 * generators c_{j,i} and f_{j,i}, relations c(E_j) * c(F_j) = 1 + sigma_j T */
Presentation qh_grassmannian_product(const std::vector<int>& k_list, const BackgroundSign& b);

/* the flag algebra: generators c_{j,i}, relations = homogeneous components
 * of prod_j (1 + c_{j,1} + ... + c_{j,k_j}) - (1 + T), deg T = 2n */
Presentation flag_hf_presentation(const std::vector<int>& k_list);

/* Do the per-factor corrections agree once the background is twisted by
 * delta times the sum of the line duals?  Disagreement forces 2 = 0 in K. */
struct SignConsistencyVerdict {
    std::vector<int> factor_signs;
    bool consistent = false;
    bool forces_char_two = false;
    int common_sign = 0;  // meaningful when consistent
};
SignConsistencyVerdict sign_consistency(const std::vector<int>& k_list, const BackgroundSign& b,
                                        int delta);

/* Monomials of the given degree in the generators and T, graded
 * lexicographic by generator list order (T least significant). */
std::vector<std::vector<int>> monomials_of_degree(const Presentation& pres, int degree);

/* K-dimension of each even degree <= max_degree of the quotient of
 * K[generators, T] by the relation ideal, by corank of the Macaulay matrix.
 * Throws BudgetError past the cap. */
std::map<int, long> degreewise_dims(const Presentation& pres, long characteristic, int max_degree,
                                    int cap = 24);

/* the graded dimensions a wide verdict predicts: H*(Flag) tensor K[T] */
std::map<int, long> flag_wide_prediction(const std::vector<int>& k_list, int max_degree);

/* Push every ambient relation through generator images (T maps to T).
 * Images live in the target presentation and must be homogeneous of the
 * ambient generator's degree, or zero. */
std::vector<GenPoly> restriction_co_map(const Presentation& ambient,
                                        const std::map<std::string, GenPoly>& images,
                                        const Presentation& target);

}  // namespace floercalc

#endif
