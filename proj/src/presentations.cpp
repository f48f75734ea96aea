#include "floercalc/presentations.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "floercalc/poincare.hpp"

namespace floercalc {

/******** GenPoly ********/

GenPoly GenPoly::constant(size_t nvars, const BigInt& c)
{
    GenPoly p;
    p.add_term(std::vector<int>(nvars, 0), c);
    return p;
}

GenPoly GenPoly::variable(size_t nvars, size_t index, int power)
{
    if (index >= nvars)
        throw std::invalid_argument("GenPoly: variable index out of range");
    if (power < 0)
        throw std::invalid_argument("GenPoly: negative exponent");
    std::vector<int> exps(nvars, 0);
    exps[index] = power;
    GenPoly p;
    p.add_term(exps, 1);
    return p;
}

size_t GenPoly::nvars() const
{
    if (terms_.empty())
        throw std::logic_error("GenPoly: zero polynomial carries no variable count");
    return terms_.begin()->first.size();
}

void GenPoly::add_term(const std::vector<int>& exps, const BigInt& c)
{
    if (c == 0)
        return;
    if (!terms_.empty() && exps.size() != terms_.begin()->first.size())
        throw std::invalid_argument("GenPoly: exponent vector size mismatch");
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
    } else {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

GenPoly GenPoly::operator+(const GenPoly& o) const
{
    GenPoly r = *this;
    for (const auto& [e, c] : o.terms_)
        r.add_term(e, c);
    return r;
}

GenPoly GenPoly::operator-(const GenPoly& o) const
{
    GenPoly r = *this;
    for (const auto& [e, c] : o.terms_)
        r.add_term(e, -c);
    return r;
}

GenPoly GenPoly::operator*(const GenPoly& o) const
{
    GenPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            std::vector<int> e(e1.size());
            if (e1.size() != e2.size())
                throw std::invalid_argument("GenPoly: exponent vector size mismatch");
            for (size_t i = 0; i < e.size(); ++i)
                e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

GenPoly GenPoly::operator-() const
{
    GenPoly r;
    for (const auto& [e, c] : terms_)
        r.add_term(e, -c);
    return r;
}

GenPoly GenPoly::pow(int e) const
{
    if (e < 0)
        throw std::invalid_argument("GenPoly: negative power");
    if (is_zero()) {
        if (e == 0)
            throw std::invalid_argument("GenPoly: 0^0");
        return GenPoly();
    }
    GenPoly result = GenPoly::constant(nvars(), 1);
    GenPoly base = *this;
    while (e) {
        if (e & 1)
            result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

/******** Presentation ********/

Presentation::Presentation(std::vector<Generator> generators, int novikov_degree)
    : gens_(std::move(generators)), novikov_(novikov_degree)
{
    if (novikov_ < 2 || novikov_ % 2 != 0)
        throw std::invalid_argument("Presentation: Novikov degree must be even and positive");
    for (const auto& g : gens_) {
        if (g.degree < 2 || g.degree % 2 != 0)
            throw std::invalid_argument("Presentation: generator " + g.name +
                                        " must have even positive degree");
    }
    for (size_t i = 0; i < gens_.size(); ++i)
        for (size_t j = i + 1; j < gens_.size(); ++j)
            if (gens_[i].name == gens_[j].name)
                throw std::invalid_argument("Presentation: duplicate generator name " + gens_[i].name);
}

size_t Presentation::generator_index(const std::string& name) const
{
    for (size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name)
            return i;
    throw std::invalid_argument("Presentation: no generator named " + name);
}

GenPoly Presentation::gen(const std::string& name, int power) const
{
    return gen(generator_index(name), power);
}

int Presentation::degree_of(const std::vector<int>& exps) const
{
    if (exps.size() != nvars())
        throw std::invalid_argument("Presentation: exponent vector size mismatch");
    int d = 0;
    for (size_t i = 0; i < gens_.size(); ++i)
        d += exps[i] * gens_[i].degree;
    d += exps.back() * novikov_;
    return d;
}

int Presentation::homogeneous_degree(const GenPoly& p) const
{
    if (p.is_zero())
        return -1;
    int d = degree_of(p.terms().begin()->first);
    for (const auto& [e, c] : p.terms())
        if (degree_of(e) != d)
            throw std::invalid_argument("Presentation: polynomial is not homogeneous");
    return d;
}

void Presentation::add_relation(GenPoly rel)
{
    if (rel.is_zero())
        return;
    homogeneous_degree(rel);  // throws when inhomogeneous
    relations_.push_back(std::move(rel));
}

std::string Presentation::poly_str(const GenPoly& p) const
{
    if (p.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        BigInt a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0)
                a = -a;
        }
        bool trivial_monomial = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
        if (a != 1 || trivial_monomial)
            out << a.str();
        bool printed = (a != 1 || trivial_monomial);
        for (size_t i = 0; i < nvars(); ++i) {
            if (e[i] == 0)
                continue;
            if (printed)
                out << "*";
            out << (i == t_index() ? "T" : gens_[i].name);
            if (e[i] != 1)
                out << "^" << e[i];
            printed = true;
        }
        first = false;
    }
    return out.str();
}

/******** standard presentations ********/

Presentation qh_projective(int n, int line_sign)
{
    if (n < 1)
        throw std::invalid_argument("qh_projective: requires n >= 1");
    if (line_sign != 1 && line_sign != -1)
        throw std::invalid_argument("qh_projective: sign must be +-1");
    Presentation pres({{"H", 2}}, 2 * (n + 1));
    pres.add_relation(pres.gen("H", n + 1) - GenPoly::constant(pres.nvars(), line_sign) * pres.novikov());
    return pres;
}

BackgroundSign BackgroundSign::trivial(size_t factors)
{
    BackgroundSign b;
    b.line_signs.assign(factors, 1);
    return b;
}

BackgroundSign BackgroundSign::spin(const std::vector<int>& k_list)
{
    BackgroundSign b;
    for (int kj : k_list)
        b.line_signs.push_back(kj % 2 == 0 ? 1 : -1);
    return b;
}

std::vector<int> quantum_correction_signs(const std::vector<int>& k_list, const BackgroundSign& b)
{
    if (b.line_signs.size() != k_list.size())
        throw std::invalid_argument("quantum_correction_signs: one line sign per factor required");
    std::vector<int> sigma;
    for (size_t j = 0; j < k_list.size(); ++j) {
        if (b.line_signs[j] != 1 && b.line_signs[j] != -1)
            throw std::invalid_argument("quantum_correction_signs: line signs must be +-1");
        sigma.push_back((k_list[j] % 2 == 0 ? 1 : -1) * b.line_signs[j]);
    }
    return sigma;
}

static void check_parts(const std::vector<int>& k_list)
{
    if (k_list.size() < 2)
        throw std::invalid_argument("at least two factors required");
    for (int kj : k_list)
        if (kj < 1)
            throw std::invalid_argument("factor ranks must be positive");
}

Presentation qh_grassmannian_product(const std::vector<int>& k_list, const BackgroundSign& b)
{
    check_parts(k_list);
    const int n = std::accumulate(k_list.begin(), k_list.end(), 0);
    std::vector<int> sigma = quantum_correction_signs(k_list, b);

    std::vector<Generator> gens;
    for (size_t j = 0; j < k_list.size(); ++j) {
        for (int i = 1; i <= k_list[j]; ++i)
            gens.push_back({"c" + std::to_string(j + 1) + "_" + std::to_string(i), 2 * i});
        for (int i = 1; i <= n - k_list[j]; ++i)
            gens.push_back({"f" + std::to_string(j + 1) + "_" + std::to_string(i), 2 * i});
    }
    Presentation pres(std::move(gens), 2 * n);

    for (size_t j = 0; j < k_list.size(); ++j) {
        GenPoly total_c = pres.one();
        for (int i = 1; i <= k_list[j]; ++i)
            total_c = total_c + pres.gen("c" + std::to_string(j + 1) + "_" + std::to_string(i));
        GenPoly total_f = pres.one();
        for (int i = 1; i <= n - k_list[j]; ++i)
            total_f = total_f + pres.gen("f" + std::to_string(j + 1) + "_" + std::to_string(i));
        GenPoly full = total_c * total_f - pres.one() -
                       GenPoly::constant(pres.nvars(), sigma[j]) * pres.novikov();
        // split into homogeneous components, one relation per degree
        for (int m = 1; m <= n; ++m) {
            GenPoly component;
            for (const auto& [e, c] : full.terms())
                if (pres.degree_of(e) == 2 * m)
                    component.add_term(e, c);
            pres.add_relation(component);
        }
    }
    return pres;
}

Presentation flag_hf_presentation(const std::vector<int>& k_list)
{
    check_parts(k_list);
    const int n = std::accumulate(k_list.begin(), k_list.end(), 0);

    std::vector<Generator> gens;
    for (size_t j = 0; j < k_list.size(); ++j)
        for (int i = 1; i <= k_list[j]; ++i)
            gens.push_back({"c" + std::to_string(j + 1) + "_" + std::to_string(i), 2 * i});
    Presentation pres(std::move(gens), 2 * n);

    GenPoly full = pres.one();
    for (size_t j = 0; j < k_list.size(); ++j) {
        GenPoly factor = pres.one();
        for (int i = 1; i <= k_list[j]; ++i)
            factor = factor + pres.gen("c" + std::to_string(j + 1) + "_" + std::to_string(i));
        full = full * factor;
    }
    full = full - pres.one() - pres.novikov();

    for (int m = 1; m <= n; ++m) {
        GenPoly component;
        for (const auto& [e, c] : full.terms())
            if (pres.degree_of(e) == 2 * m)
                component.add_term(e, c);
        pres.add_relation(component);
    }
    return pres;
}

SignConsistencyVerdict sign_consistency(const std::vector<int>& k_list, const BackgroundSign& b,
                                        int delta)
{
    if (delta != 0 && delta != 1)
        throw std::invalid_argument("sign_consistency: delta lives in Z/2");
    SignConsistencyVerdict verdict;
    std::vector<int> sigma = quantum_correction_signs(k_list, b);
    int twist = delta == 0 ? 1 : -1;  // delta twists each line pairing once
    for (int s : sigma)
        verdict.factor_signs.push_back(s * twist);
    verdict.consistent = std::all_of(verdict.factor_signs.begin(), verdict.factor_signs.end(),
                                     [&](int s) { return s == verdict.factor_signs.front(); });
    verdict.forces_char_two = !verdict.consistent;
    verdict.common_sign = verdict.consistent ? verdict.factor_signs.front() : 0;
    return verdict;
}

/******** degreewise dimensions ********/

std::vector<std::vector<int>> monomials_of_degree(const Presentation& pres, int degree)
{
    std::vector<std::vector<int>> out;
    std::vector<int> current(pres.nvars(), 0);
    std::vector<int> var_degree;
    for (const auto& g : pres.generators())
        var_degree.push_back(g.degree);
    var_degree.push_back(pres.novikov_degree());

    auto recurse = [&](auto&& self, size_t var, int remaining) -> void {
        if (var + 1 == pres.nvars()) {
            if (remaining % var_degree[var] == 0) {
                current[var] = remaining / var_degree[var];
                out.push_back(current);
                current[var] = 0;
            }
            return;
        }
        for (int e = 0; e * var_degree[var] <= remaining; ++e) {
            current[var] = e;
            self(self, var + 1, remaining - e * var_degree[var]);
        }
        current[var] = 0;
    };
    if (degree >= 0)
        recurse(recurse, 0, degree);

    // graded lexicographic: totals are equal, so plain lex, big exponents first
    std::sort(out.begin(), out.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    });
    return out;
}

namespace {

long matrix_rank(std::vector<std::vector<Coefficient>>& rows, size_t cols)
{
    long rank = 0;
    size_t lead = 0;
    for (size_t col = 0; col < cols && lead < rows.size(); ++col) {
        size_t pivot = lead;
        while (pivot < rows.size() && rows[pivot][col].is_zero())
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[lead], rows[pivot]);
        Coefficient inv = rows[lead][col].inverse();
        for (size_t c = col; c < cols; ++c)
            rows[lead][c] = rows[lead][c] * inv;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == lead || rows[r][col].is_zero())
                continue;
            Coefficient factor = rows[r][col];
            for (size_t c = col; c < cols; ++c)
                rows[r][c] = rows[r][c] - factor * rows[lead][c];
        }
        ++lead;
        ++rank;
    }
    return rank;
}

Coefficient into_field(const BigInt& c, long characteristic)
{
    return characteristic == 0 ? Coefficient::integer(c) : Coefficient::mod_p(characteristic, c);
}

}  // namespace

std::map<int, long> degreewise_dims(const Presentation& pres, long characteristic, int max_degree,
                                    int cap)
{
    if (max_degree > cap)
        throw BudgetError("degreewise_dims: requested degree " + std::to_string(max_degree) +
                          " exceeds the cap " + std::to_string(cap));
    if (characteristic != 0 && !is_prime(characteristic))
        throw std::invalid_argument("degreewise_dims: characteristic must be 0 or prime");

    std::map<int, long> dims;
    for (int m = 0; m <= max_degree; m += 2) {
        std::vector<std::vector<int>> basis = monomials_of_degree(pres, m);
        std::map<std::vector<int>, size_t> column;
        for (size_t i = 0; i < basis.size(); ++i)
            column[basis[i]] = i;

        std::vector<std::vector<Coefficient>> rows;
        for (const GenPoly& rel : pres.relations()) {
            int d = pres.homogeneous_degree(rel);
            if (d > m)
                continue;
            for (const std::vector<int>& mu : monomials_of_degree(pres, m - d)) {
                std::vector<Coefficient> row(basis.size(), into_field(0, characteristic));
                bool nonzero = false;
                for (const auto& [e, c] : rel.terms()) {
                    std::vector<int> prod(e.size());
                    for (size_t i = 0; i < e.size(); ++i)
                        prod[i] = e[i] + mu[i];
                    Coefficient value = into_field(c, characteristic);
                    if (!value.is_zero()) {
                        row[column.at(prod)] = row[column.at(prod)] + value;
                        nonzero = true;
                    }
                }
                if (nonzero)
                    rows.push_back(std::move(row));
            }
        }
        long rank = matrix_rank(rows, basis.size());
        dims[m] = static_cast<long>(basis.size()) - rank;
    }
    return dims;
}

std::map<int, long> flag_wide_prediction(const std::vector<int>& k_list, int max_degree)
{
    check_parts(k_list);
    const int n = std::accumulate(k_list.begin(), k_list.end(), 0);
    GradedPoly betti = poincare_poly(FlagSpec{k_list});
    std::map<int, long> dims;
    for (int m = 0; m <= max_degree; m += 2) {
        BigInt total = 0;
        for (int b = 0; 2 * n * b <= m; ++b)
            total += betti.coeff(m - 2 * n * b);
        dims[m] = static_cast<long>(total);
    }
    return dims;
}

/******** restriction along generator images ********/

std::vector<GenPoly> restriction_co_map(const Presentation& ambient,
                                        const std::map<std::string, GenPoly>& images,
                                        const Presentation& target)
{
    // validate the assignment: degree < N generators all have images,
    // images are homogeneous of the right degree (or zero)
    std::vector<GenPoly> image_by_index;
    for (const auto& g : ambient.generators()) {
        auto it = images.find(g.name);
        if (it == images.end()) {
            if (g.degree < ambient.novikov_degree())
                throw std::invalid_argument("restriction_co_map: incomplete assignment, generator " +
                                            g.name + " of degree " + std::to_string(g.degree) +
                                            " has no image");
            image_by_index.push_back(GenPoly());
            continue;
        }
        const GenPoly& img = it->second;
        if (!img.is_zero()) {
            int d = target.homogeneous_degree(img);
            if (d != g.degree)
                throw std::invalid_argument("restriction_co_map: image of " + g.name +
                                            " has degree " + std::to_string(d) + ", expected " +
                                            std::to_string(g.degree));
        }
        image_by_index.push_back(img);
    }

    std::vector<GenPoly> induced;
    for (const GenPoly& rel : ambient.relations()) {
        GenPoly pushed;
        for (const auto& [e, c] : rel.terms()) {
            GenPoly term = GenPoly::constant(target.nvars(), c);
            for (size_t i = 0; i < ambient.generators().size() && !term.is_zero(); ++i)
                if (e[i] != 0)
                    term = term * image_by_index[i].pow(e[i]);
            if (!term.is_zero() && e.back() != 0)
                term = term * target.novikov(e.back());
            pushed = pushed + term;
        }
        if (!pushed.is_zero())
            target.homogeneous_degree(pushed);  // degree-preserving by construction; verify
        induced.push_back(std::move(pushed));
    }
    return induced;
}

}  // namespace floercalc
