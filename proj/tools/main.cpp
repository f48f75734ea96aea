#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "floercalc/report.hpp"

using namespace floercalc;

namespace {

int degree_cap_from_env()
{
    const char* cap = std::getenv("FLOER_DEGREE_CAP");
    if (!cap)
        return 24;
    try {
        return std::stoi(cap);
    } catch (const std::exception&) {
        throw std::invalid_argument("FLOER_DEGREE_CAP must be an integer");
    }
}

std::vector<int> parse_spin(const std::string& text)
{
    std::vector<int> signs;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        if (token == "+" || token == "+1" || token == "1")
            signs.push_back(1);
        else if (token == "-" || token == "-1")
            signs.push_back(-1);
        else
            throw std::invalid_argument("spin entries must be + or - (got '" + token + "')");
    }
    if (signs.empty())
        throw std::invalid_argument("empty spin vector");
    return signs;
}

GradedPoly polynomial_argument(const std::string& text)
{
    std::string trimmed = text;
    size_t first = trimmed.find_first_not_of(" \t");
    if (first != std::string::npos && trimmed[first] == '{')
        return poincare_poly(space_spec_from_json(json::parse(trimmed)));
    return GradedPoly::parse(trimmed);
}

void emit(const json& body, const std::string& text, const std::string& format)
{
    if (format == "json")
        std::cout << body.dump(2) << "\n";
    else
        std::cout << text;
}

const std::vector<long> kDefaultChars = {0, 2, 3, 5, 7, 11, 13};

}  // namespace

int run(int argc, char** argv)
{
    CLI::App app{"exact verdict toolkit for Floer-theoretic sign and grading computations"};
    app.require_subcommand(1);
    std::string format = "table";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"table", "json"}));

    // ---- periodicity ----
    auto* periodicity = app.add_subcommand("periodicity", "grading-periodicity test on a polynomial");
    periodicity->fallthrough();
    std::string poincare_arg;
    int maslov = 0, period = 0;
    periodicity->add_option("--poincare", poincare_arg,
                            "polynomial (e.g. \"1+S^3+S^5+S^8\") or space spec JSON")
        ->required();
    periodicity->add_option("--maslov", maslov, "grading modulus N")->required();
    periodicity->add_option("--period", period, "period q to test")->required();

    // ---- psu ----
    auto* psu = app.add_subcommand("psu", "wide/narrow classification of the unitary quotient family");
    psu->fallthrough();
    int psu_n = 0;
    std::vector<long> psu_chars = kDefaultChars;
    psu->add_option("--n", psu_n, "family parameter n >= 2")->required();
    psu->add_option("--chars", psu_chars, "characteristics to classify")->delimiter(',');

    // ---- stiefel ----
    auto* stiefel = app.add_subcommand("stiefel", "projective Stiefel classification");
    stiefel->fallthrough();
    int st_n = 0, st_k = 0;
    std::vector<long> st_chars = kDefaultChars;
    stiefel->add_option("--n", st_n, "frame dimension n")->required();
    stiefel->add_option("--k", st_k, "frame count k (1 <= k < n)")->required();
    stiefel->add_option("--chars", st_chars, "characteristics to classify")->delimiter(',');

    // ---- maslov-bound ----
    auto* bound = app.add_subcommand("maslov-bound", "Maslov bound for exterior-algebra cohomology");
    bound->fallthrough();
    std::vector<int> degrees;
    int bound_period = 2, bound_maslov = 0;
    bound->add_option("--degrees", degrees, "odd generator degrees")->required()->delimiter(',');
    bound->add_option("--period", bound_period, "even period from an invertible class");
    bound->add_option("--maslov", bound_maslov, "check one Maslov number (default: scan)");

    // ---- flag-hf ----
    auto* flag = app.add_subcommand("flag-hf", "flag Floer algebra presentation and dimensions");
    flag->fallthrough();
    std::vector<int> parts;
    int flag_max_degree = -1;
    bool flag_dims = false, flag_sign_check = false;
    std::vector<long> flag_chars = {0, 2, 3};
    flag->add_option("--parts", parts, "flag parts k_1,..,k_r")->required()->delimiter(',');
    flag->add_option("--max-degree", flag_max_degree, "top degree for the dimension table");
    flag->add_flag("--dims", flag_dims, "verify degreewise dimensions against the wide prediction");
    flag->add_flag("--sign-check", flag_sign_check, "report background-sign consistency");
    flag->add_option("--chars", flag_chars, "characteristics for the dimension table")->delimiter(',');

    // ---- gysin ----
    auto* gysin = app.add_subcommand("gysin", "circle-bundle cone classification");
    gysin->fallthrough();
    std::string gysin_family, gysin_spin, gysin_scenario;
    gysin->add_option("--family", gysin_family, "so3 or lens")->required();
    gysin->add_option("--spin", gysin_spin, "single spin choice, e.g. +,+,-");
    gysin->add_option("--scenario", gysin_scenario, "scenario JSON file");

    // ---- quilt ----
    auto* quilt = app.add_subcommand("quilt", "composition sign transfer through the Chekanov torus");
    quilt->fallthrough();
    std::string quilt_family, quilt_scenario;
    quilt->add_option("--family", quilt_family, "so3 or lens")->required();
    quilt->add_option("--scenario", quilt_scenario, "scenario JSON file");

    // ---- poincare ----
    auto* poincare = app.add_subcommand("poincare", "graded Betti numbers of a named space");
    poincare->fallthrough();
    std::string space_arg;
    poincare->add_option("--space", space_arg, "space spec JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;  // usage errors exit 1
    }

    if (periodicity->parsed()) {
        GradedPoly p = polynomial_argument(poincare_arg);
        PeriodicityReport rep = periodicity_test(cyclic_reduce(p, maslov), period);
        json body = {{"command", "periodicity"}, {"input", p.str()}, {"report", to_json(rep)}};
        emit(body, periodicity_text(rep), format);
    } else if (psu->parsed()) {
        std::vector<PsuEntry> entries;
        json rows = json::array();
        for (long c : psu_chars) {
            entries.push_back(classify_psu(psu_n, c));
            rows.push_back(to_json(entries.back()));
        }
        json body = {{"command", "psu"}, {"n", psu_n}, {"rows", rows},
                     {"verdict", to_json(psu_char_verdict(psu_n, psu_chars))}};
        emit(body, psu_table_text(entries), format);
    } else if (stiefel->parsed()) {
        std::vector<StiefelEntry> entries;
        json rows = json::array();
        for (long c : st_chars) {
            entries.push_back(classify_stiefel(st_n, st_k, c));
            rows.push_back(to_json(entries.back()));
        }
        json body = {{"command", "stiefel"}, {"n", st_n}, {"k", st_k}, {"rows", rows},
                     {"verdict", to_json(stiefel_char_verdict(st_n, st_k, st_chars))}};
        emit(body, stiefel_table_text(entries), format);
    } else if (bound->parsed()) {
        std::vector<std::pair<int, ExteriorBoundVerdict>> verdicts;
        if (bound_maslov > 0) {
            verdicts.emplace_back(bound_maslov, exterior_maslov_bound(degrees, bound_period, bound_maslov));
        } else {
            int top = 2 * (*std::max_element(degrees.begin(), degrees.end()) + 1) + 4;
            for (int m = 2; m <= top; m += 2)
                verdicts.emplace_back(m, exterior_maslov_bound(degrees, bound_period, m));
        }
        json rows = json::array();
        std::vector<std::vector<std::string>> cells;
        for (const auto& [m, v] : verdicts) {
            json row = to_json(v);
            row["maslov"] = m;
            rows.push_back(row);
            cells.push_back({std::to_string(m), v.feasible ? "feasible" : "infeasible", v.reason});
        }
        json body = {{"command", "maslov-bound"}, {"degrees", degrees}, {"period", bound_period},
                     {"rows", rows}};
        emit(body, render_table({"maslov", "verdict", "reason"}, cells), format);
    } else if (flag->parsed()) {
        Presentation pres = flag_hf_presentation(parts);
        int n = pres.novikov_degree() / 2;
        int cap = degree_cap_from_env();
        int max_degree = flag_max_degree >= 0 ? flag_max_degree : std::min(4 * n, cap);

        std::string text = presentation_text(pres);
        json body = {{"command", "flag-hf"}, {"parts", parts}, {"presentation", to_json(pres)}};
        if (flag_dims) {
            std::map<int, long> expected = flag_wide_prediction(parts, max_degree);
            json dims = json::object();
            bool all_match = true;
            for (long c : flag_chars) {
                std::map<int, long> got = degreewise_dims(pres, c, max_degree, cap);
                json col = json::object();
                for (const auto& [deg, dim] : got)
                    col[std::to_string(deg)] = dim;
                dims[std::to_string(c)] = col;
                all_match = all_match && got == expected;
                text += "characteristic " + std::to_string(c) + ":\n" +
                        dims_table_text(got, expected);
            }
            body["dims"] = dims;
            body["matches_wide_prediction"] = all_match;
        }
        if (flag_sign_check) {
            json checks = json::array();
            std::vector<std::vector<std::string>> cells;
            for (bool spin_bg : {true, false})
                for (int delta : {0, 1}) {
                    BackgroundSign b =
                        spin_bg ? BackgroundSign::spin(parts) : BackgroundSign::trivial(parts.size());
                    SignConsistencyVerdict v = sign_consistency(parts, b, delta);
                    std::string bg = spin_bg ? "spin" : "trivial";
                    checks.push_back({{"background", bg},
                                      {"delta", delta},
                                      {"consistent", v.consistent},
                                      {"factor_signs", v.factor_signs},
                                      {"forces_char_two", v.forces_char_two}});
                    std::string signs;
                    for (int s : v.factor_signs)
                        signs += (signs.empty() ? "" : " ") + std::string(s > 0 ? "+" : "-");
                    cells.push_back({bg, std::to_string(delta), signs,
                                     v.consistent ? "consistent" : "inconsistent unless 2 = 0"});
                }
            body["sign_checks"] = checks;
            text += render_table({"background", "delta", "factor signs", "verdict"}, cells);
        }
        emit(body, text, format);
    } else if (gysin->parsed()) {
        GysinFamily family = gysin_family_from_string(gysin_family);
        GysinScenario scenario = gysin_scenario.empty()
                                     ? standard_gysin_scenario(family)
                                     : gysin_scenario_from_json(load_json_file(gysin_scenario));
        if (scenario.family != family)
            throw std::invalid_argument("scenario file is for family " + to_string(scenario.family));
        GysinTable table =
            classify_gysin_family(family, scenario.ledger, scenario.euler, scenario.base_sphere);
        if (!gysin_spin.empty()) {
            SpinChoice spin{parse_spin(gysin_spin)};
            GysinTable one;
            one.family = family;
            one.rows.push_back(table.row_for(spin));
            json body = {{"command", "gysin"}, {"family", to_string(family)},
                         {"row", to_json(one.rows[0])},
                         {"verdict", to_json(table.verdict(spin, kDefaultChars))}};
            emit(body, gysin_table_text(one), format);
        } else {
            json body = {{"command", "gysin"}, {"table", to_json(table)}};
            emit(body, gysin_table_text(table), format);
        }
    } else if (quilt->parsed()) {
        GysinFamily family = gysin_family_from_string(quilt_family);
        QuiltScenarioFile file =
            quilt_scenario.empty() ? standard_quilt_scenario_file(family)
                                   : quilt_scenario_file_from_json(load_json_file(quilt_scenario));
        if (file.family != family)
            throw std::invalid_argument("scenario file is for family " + to_string(file.family));
        QuiltTable table = run_quilt_scenarios(file);
        json body = {{"command", "quilt"}, {"table", to_json(table)}};
        emit(body, quilt_table_text(table), format);
    } else if (poincare->parsed()) {
        SpaceSpec spec = space_spec_from_json(json::parse(space_arg));
        GradedPoly p = poincare_poly(spec);
        json body = {{"command", "poincare"},
                     {"space", to_json(spec)},
                     {"polynomial", to_json(p)},
                     {"pretty", p.str()},
                     {"dimension", space_dimension(spec)},
                     {"total", p.at_one().str()}};
        std::ostringstream text;
        text << p.str() << "\n"
             << "top degree " << space_dimension(spec) << ", total dimension " << p.at_one().str()
             << "\n";
        emit(body, text.str(), format);
    }
    return 0;
}

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const QuiltDataError& err) {
        std::cerr << "inconsistent data: " << err.what() << "\n";
        return 2;
    } catch (const QuiltAmbiguityError& err) {
        std::cerr << "ambiguous solution: " << err.what() << "\n";
        return 2;
    } catch (const json::exception& err) {
        std::cerr << "JSON error: " << err.what() << "\n";
        return 1;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
}
