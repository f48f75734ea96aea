#include "floercalc/report.hpp"

#include <fstream>
#include <sstream>

namespace floercalc {

namespace {

json big_to_json(const BigInt& v)
{
    return v.str();
}

BigInt big_from_json(const json& j)
{
    if (j.is_number_integer())
        return BigInt(j.get<long long>());
    return BigInt(j.get<std::string>());
}

WideStatus status_from_string(const std::string& s)
{
    if (s == "wide")
        return WideStatus::Wide;
    if (s == "narrow")
        return WideStatus::Narrow;
    if (s == "unknown")
        return WideStatus::Unknown;
    throw std::invalid_argument("unknown status " + s);
}

GenerationVerdict generation_from_string(const std::string& s)
{
    if (s == "wide")
        return GenerationVerdict::Wide;
    if (s == "wide-or-narrow")
        return GenerationVerdict::WideOrNarrow;
    if (s == "no-info")
        return GenerationVerdict::NoInfo;
    throw std::invalid_argument("unknown generation verdict " + s);
}

}  // namespace

/******** core types ********/

json to_json(const GradedPoly& p)
{
    json terms = json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back(json::array({e, big_to_json(c)}));
    return terms;
}

GradedPoly graded_poly_from_json(const json& j)
{
    GradedPoly p;
    for (const auto& term : j)
        p = p + GradedPoly::monomial(term.at(0).get<int>(), big_from_json(term.at(1)));
    return p;
}

json to_json(const SpaceSpec& s)
{
    return std::visit(
        [](const auto& v) -> json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, ExteriorAlgebraSpec>)
                return {{"variant", "exterior"}, {"degrees", v.degrees}};
            else if constexpr (std::is_same_v<T, PsuSpec>)
                return {{"variant", "psu"}, {"n", v.n}, {"char", v.characteristic}};
            else if constexpr (std::is_same_v<T, FlagSpec>)
                return {{"variant", "flag"}, {"parts", v.parts}};
            else if constexpr (std::is_same_v<T, GrassmannianSpec>)
                return {{"variant", "grassmannian"}, {"k", v.k}, {"n", v.n}};
            else if constexpr (std::is_same_v<T, TorusSpec>)
                return {{"variant", "torus"}, {"n", v.n}};
            else
                return {{"variant", "truncated"}, {"degree", v.degree}, {"truncation", v.truncation}};
        },
        s);
}

SpaceSpec space_spec_from_json(const json& j)
{
    std::string variant = j.at("variant").get<std::string>();
    if (variant == "exterior")
        return ExteriorAlgebraSpec{j.at("degrees").get<std::vector<int>>()};
    if (variant == "psu")
        return PsuSpec{j.at("n").get<int>(), j.at("char").get<long>()};
    if (variant == "flag")
        return FlagSpec{j.at("parts").get<std::vector<int>>()};
    if (variant == "grassmannian")
        return GrassmannianSpec{j.at("k").get<int>(), j.at("n").get<int>()};
    if (variant == "torus")
        return TorusSpec{j.at("n").get<int>()};
    if (variant == "truncated")
        return TruncatedPolySpec{j.at("degree").get<int>(), j.at("truncation").get<int>()};
    throw std::invalid_argument("unknown space variant " + variant);
}

/******** periodicity ********/

json to_json(const PeriodicityReport& r)
{
    return {{"modulus", r.modulus},
            {"period", r.period},
            {"reduced_period", r.reduced_period},
            {"divisible", r.divisible},
            {"total_dim_divisible", r.total_dim_divisible},
            {"total_dimension", big_to_json(r.total_dimension)},
            {"failing_conductors", r.failing_conductors},
            {"quotient", to_json(r.quotient)}};
}

PeriodicityReport periodicity_report_from_json(const json& j)
{
    PeriodicityReport r;
    r.modulus = j.at("modulus").get<int>();
    r.period = j.at("period").get<int>();
    r.reduced_period = j.at("reduced_period").get<int>();
    r.divisible = j.at("divisible").get<bool>();
    r.total_dim_divisible = j.at("total_dim_divisible").get<bool>();
    r.total_dimension = big_from_json(j.at("total_dimension"));
    r.failing_conductors = j.at("failing_conductors").get<std::vector<long>>();
    r.quotient = graded_poly_from_json(j.at("quotient"));
    return r;
}

json to_json(const TorusBoundCertificate& c)
{
    return {{"rank", c.rank}, {"maslov", c.maslov}, {"report", to_json(c.report)}};
}

TorusBoundCertificate torus_bound_from_json(const json& j)
{
    TorusBoundCertificate c;
    c.rank = j.at("rank").get<int>();
    c.maslov = j.at("maslov").get<int>();
    c.report = periodicity_report_from_json(j.at("report"));
    return c;
}

json to_json(const ExteriorBoundVerdict& v)
{
    json out = {{"feasible", v.feasible}, {"bound", v.bound}, {"reason", v.reason}};
    if (v.report)
        out["report"] = to_json(*v.report);
    return out;
}

ExteriorBoundVerdict exterior_bound_from_json(const json& j)
{
    ExteriorBoundVerdict v;
    v.feasible = j.at("feasible").get<bool>();
    v.bound = j.at("bound").get<int>();
    v.reason = j.at("reason").get<std::string>();
    if (j.contains("report"))
        v.report = periodicity_report_from_json(j.at("report"));
    return v;
}

/******** classifiers ********/

json to_json(const PsuEntry& e)
{
    json certificate = {{"prime_power", e.prime_power},
                        {"generator_degrees", e.generator_degrees},
                        {"generation_max_degree", e.generation_max_degree},
                        {"generation_shift", e.generation_shift},
                        {"generation", to_string(e.generation)}};
    if (e.report)
        certificate["periodicity"] = to_json(*e.report);
    return {{"family", "psu"},
            {"n", e.n},
            {"char", e.characteristic},
            {"status", to_string(e.status)},
            {"certificate", certificate},
            {"scope_note", e.scope_note}};
}

PsuEntry psu_entry_from_json(const json& j)
{
    PsuEntry e;
    e.n = j.at("n").get<int>();
    e.characteristic = j.at("char").get<long>();
    e.status = status_from_string(j.at("status").get<std::string>());
    const json& cert = j.at("certificate");
    e.prime_power = cert.at("prime_power").get<long>();
    e.generator_degrees = cert.at("generator_degrees").get<std::vector<int>>();
    e.generation_max_degree = cert.at("generation_max_degree").get<int>();
    e.generation_shift = cert.at("generation_shift").get<bool>();
    e.generation = generation_from_string(cert.at("generation").get<std::string>());
    if (cert.contains("periodicity"))
        e.report = periodicity_report_from_json(cert.at("periodicity"));
    e.scope_note = j.at("scope_note").get<std::string>();
    return e;
}

json to_json(const StiefelEntry& e)
{
    return {{"family", "stiefel"},
            {"n", e.n},
            {"k", e.k},
            {"char", e.characteristic},
            {"status", to_string(e.status)},
            {"certificate",
             {{"prime_power", e.prime_power},
              {"generation_degree", e.generation_degree},
              {"generation_max_degree", e.generation_max_degree},
              {"generation", to_string(e.generation)},
              {"witness_exponent", e.witness_exponent},
              {"witness_binomial", big_to_json(e.witness_binomial)},
              {"witness_residue", e.witness_residue}}},
            {"scope_note", e.scope_note}};
}

StiefelEntry stiefel_entry_from_json(const json& j)
{
    StiefelEntry e;
    e.n = j.at("n").get<int>();
    e.k = j.at("k").get<int>();
    e.characteristic = j.at("char").get<long>();
    e.status = status_from_string(j.at("status").get<std::string>());
    const json& cert = j.at("certificate");
    e.prime_power = cert.at("prime_power").get<long>();
    e.generation_degree = cert.at("generation_degree").get<long>();
    e.generation_max_degree = cert.at("generation_max_degree").get<int>();
    e.generation = generation_from_string(cert.at("generation").get<std::string>());
    e.witness_exponent = cert.at("witness_exponent").get<long>();
    e.witness_binomial = big_from_json(cert.at("witness_binomial"));
    e.witness_residue = cert.at("witness_residue").get<long>();
    e.scope_note = j.at("scope_note").get<std::string>();
    return e;
}

json to_json(const CharVerdict& v)
{
    json entries = json::array();
    for (const auto& [c, s] : v.entries)
        entries.push_back({{"char", c}, {"status", to_string(s)}});
    return {{"entries", entries}, {"scope_note", v.scope_note}};
}

CharVerdict char_verdict_from_json(const json& j)
{
    CharVerdict v;
    for (const auto& entry : j.at("entries"))
        v.add(entry.at("char").get<long>(), status_from_string(entry.at("status").get<std::string>()));
    v.scope_note = j.at("scope_note").get<std::string>();
    return v;
}

/******** Gysin and quilt ********/

json to_json(const GysinRow& r)
{
    return {{"spin", r.spin.signs},
            {"m", big_to_json(r.constraint.m)},
            {"admissible_chars", r.constraint.admissible},
            {"derivation", r.constraint.derivation},
            {"euler", r.data.euler},
            {"qh_sign", r.data.qh_sign},
            {"nu", big_to_json(r.data.nu)},
            {"det", big_to_json(r.det_coeff)},
            {"wide_chars", r.wide_chars},
            {"nu_origin", r.nu_origin},
            {"certificate_note", r.certificate_note}};
}

GysinRow gysin_row_from_json(const json& j)
{
    GysinRow r;
    r.spin.signs = j.at("spin").get<std::vector<int>>();
    r.constraint.m = big_from_json(j.at("m"));
    r.constraint.admissible = j.at("admissible_chars").get<std::vector<long>>();
    r.constraint.derivation = j.at("derivation").get<std::string>();
    r.data.euler = j.at("euler").get<int>();
    r.data.qh_sign = j.at("qh_sign").get<int>();
    r.data.nu = big_from_json(j.at("nu"));
    r.det_coeff = big_from_json(j.at("det"));
    r.wide_chars = j.at("wide_chars").get<std::vector<long>>();
    r.nu_origin = j.at("nu_origin").get<std::string>();
    r.certificate_note = j.at("certificate_note").get<std::string>();
    return r;
}

json to_json(const GysinTable& t)
{
    json rows = json::array();
    for (const GysinRow& r : t.rows)
        rows.push_back(to_json(r));
    return {{"family", to_string(t.family)}, {"rows", rows}};
}

GysinTable gysin_table_from_json(const json& j)
{
    GysinTable t;
    t.family = gysin_family_from_string(j.at("family").get<std::string>());
    for (const auto& row : j.at("rows"))
        t.rows.push_back(gysin_row_from_json(row));
    return t;
}

static json to_json(const QuiltScenario& s)
{
    return {{"label", s.label},
            {"spin", s.spin.signs},
            {"shifted", s.shifted},
            {"forced_background", s.forced_sphere_flags},
            {"w_corr", s.w_corr},
            {"w_fiber", s.w_fiber}};
}

static QuiltScenario quilt_scenario_from_json(const json& j)
{
    QuiltScenario s;
    s.label = j.at("label").get<std::string>();
    s.spin.signs = j.at("spin").get<std::vector<int>>();
    s.shifted = j.at("shifted").get<bool>();
    s.forced_sphere_flags = j.at("forced_background").get<std::vector<int>>();
    s.w_corr = j.at("w_corr").get<int>();
    s.w_fiber = j.at("w_fiber").get<int>();
    return s;
}

json to_json(const QuiltRow& r)
{
    return {{"scenario", to_json(r.scenario)},
            {"target_w", r.target_w},
            {"delta", r.solution.delta},
            {"disc_signs", r.solution.disc_signs},
            {"boundary", json::array({r.boundary_d1, r.boundary_d2})},
            {"wide_chars", r.wide_chars},
            {"note", r.note}};
}

QuiltRow quilt_row_from_json(const json& j)
{
    QuiltRow r;
    r.scenario = quilt_scenario_from_json(j.at("scenario"));
    r.target_w = j.at("target_w").get<int>();
    r.solution.delta = j.at("delta").get<std::vector<int>>();
    r.solution.disc_signs = j.at("disc_signs").get<std::vector<int>>();
    r.boundary_d1 = j.at("boundary").at(0).get<long>();
    r.boundary_d2 = j.at("boundary").at(1).get<long>();
    r.wide_chars = j.at("wide_chars").get<std::vector<long>>();
    r.note = j.at("note").get<std::string>();
    return r;
}

json to_json(const QuiltTable& t)
{
    json rows = json::array();
    for (const QuiltRow& r : t.rows)
        rows.push_back(to_json(r));
    return {{"family", to_string(t.family)}, {"rows", rows}};
}

QuiltTable quilt_table_from_json(const json& j)
{
    QuiltTable t;
    t.family = gysin_family_from_string(j.at("family").get<std::string>());
    for (const auto& row : j.at("rows"))
        t.rows.push_back(quilt_row_from_json(row));
    return t;
}

/******** presentations ********/

json to_json(const Presentation& p)
{
    json gens = json::array();
    for (const auto& g : p.generators())
        gens.push_back({{"name", g.name}, {"degree", g.degree}});
    json relations = json::array();
    for (const GenPoly& rel : p.relations()) {
        json terms = json::array();
        for (const auto& [e, c] : rel.terms())
            terms.push_back({{"coeff", big_to_json(c)}, {"exps", e}});
        relations.push_back(terms);
    }
    return {{"generators", gens}, {"novikov_degree", p.novikov_degree()}, {"relations", relations}};
}

Presentation presentation_from_json(const json& j)
{
    std::vector<Generator> gens;
    for (const auto& g : j.at("generators"))
        gens.push_back({g.at("name").get<std::string>(), g.at("degree").get<int>()});
    Presentation pres(std::move(gens), j.at("novikov_degree").get<int>());
    for (const auto& rel : j.at("relations")) {
        GenPoly poly;
        for (const auto& term : rel)
            poly.add_term(term.at("exps").get<std::vector<int>>(), big_from_json(term.at("coeff")));
        pres.add_relation(poly);
    }
    return pres;
}

/******** scenario files ********/

json to_json(const DiscLedger& l)
{
    json discs = json::array();
    json signs = json::array();
    for (const DiscRecord& d : l.discs) {
        discs.push_back(d.coords);
        signs.push_back(d.sign);
    }
    json spheres = json::object();
    for (const auto& [name, coords] : l.sphere_classes)
        spheres[name] = coords;
    return {{"name", l.name},       {"basis", l.basis},       {"maslov", l.maslov},
            {"disc_classes", discs}, {"base_signs", signs},   {"pairings", l.pairings},
            {"sphere_classes", spheres}};
}

DiscLedger disc_ledger_from_json(const json& j)
{
    DiscLedger l;
    l.name = j.at("name").get<std::string>();
    l.basis = j.at("basis").get<std::vector<std::string>>();
    l.maslov = j.at("maslov").get<std::vector<int>>();
    const json& discs = j.at("disc_classes");
    const json& signs = j.at("base_signs");
    if (discs.size() != signs.size())
        throw std::invalid_argument("disc ledger: disc_classes and base_signs must align");
    for (size_t i = 0; i < discs.size(); ++i)
        l.discs.push_back({discs[i].get<std::vector<int>>(), signs[i].get<int>()});
    l.pairings = j.at("pairings").get<std::vector<std::vector<int>>>();
    for (const auto& [name, coords] : j.at("sphere_classes").items())
        l.sphere_classes[name] = coords.get<std::vector<int>>();
    l.validate();
    return l;
}

json to_json(const GysinScenario& s)
{
    json out = to_json(s.ledger);
    out["family"] = to_string(s.family);
    out["euler"] = s.euler;
    out["base_sphere"] = s.base_sphere;
    return out;
}

GysinScenario gysin_scenario_from_json(const json& j)
{
    GysinScenario s;
    s.family = gysin_family_from_string(j.at("family").get<std::string>());
    s.ledger = disc_ledger_from_json(j);
    s.euler = j.at("euler").get<int>();
    s.base_sphere = j.at("base_sphere").get<std::string>();
    return s;
}

GysinScenario standard_gysin_scenario(GysinFamily family)
{
    GysinScenario s;
    s.family = family;
    s.ledger = standard_ledger(family);
    s.euler = family == GysinFamily::So3 ? 2 : 4;
    s.base_sphere = family == GysinFamily::So3 ? "S3" : "S2";
    return s;
}

json to_json(const QuiltScenarioFile& f)
{
    json scenarios = json::array();
    for (const QuiltScenario& s : f.scenarios)
        scenarios.push_back(to_json(s));
    return {{"family", to_string(f.family)},
            {"basis", f.ledger.basis},
            {"sphere_count", f.ledger.sphere_count},
            {"disc_classes", f.ledger.discs},
            {"scenarios", scenarios}};
}

QuiltScenarioFile quilt_scenario_file_from_json(const json& j)
{
    QuiltScenarioFile f;
    f.family = gysin_family_from_string(j.at("family").get<std::string>());
    f.ledger.name = to_string(f.family);
    f.ledger.basis = j.at("basis").get<std::vector<std::string>>();
    f.ledger.sphere_count = j.at("sphere_count").get<size_t>();
    f.ledger.discs = j.at("disc_classes").get<std::vector<std::vector<int>>>();
    f.ledger.validate();
    for (const auto& s : j.at("scenarios"))
        f.scenarios.push_back(quilt_scenario_from_json(s));
    return f;
}

QuiltScenarioFile standard_quilt_scenario_file(GysinFamily family)
{
    QuiltScenarioFile f;
    f.family = family;
    f.ledger = chekanov_ledger(family);
    f.scenarios = curated_scenarios(family);
    return f;
}

QuiltTable run_quilt_scenarios(const QuiltScenarioFile& file, bool cross_check)
{
    QuiltTable table;
    table.family = file.family;
    GysinTable cone = classify_gysin_family(file.family);

    for (const QuiltScenario& sc : file.scenarios) {
        ChekanovLedger ledger = file.ledger;
        ledger.reference_sign = sc.shifted ? 1 : -1;

        QuiltRow row;
        row.scenario = sc;
        row.target_w = w_sum(sc.w_corr, sc.w_fiber);
        std::vector<DeltaSolution> sols = solve_delta(ledger, row.target_w, sc.forced_sphere_flags);
        if (sols.size() != 1) {
            std::ostringstream report;
            report << "scenario " << sc.label << " target " << row.target_w << " admits "
                   << sols.size() << " delta assignments";
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
        if (cross_check && row.wide_chars != cone.row_for(sc.spin).wide_chars)
            throw QuiltDataError("scenario " + sc.label + ": quilt and cone verdicts disagree");
        table.rows.push_back(std::move(row));
    }
    return table;
}

json load_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& err) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + err.what());
    }
}

/******** text rendering ********/

std::string render_table(const std::vector<std::string>& headers,
                         const std::vector<std::vector<std::string>>& rows)
{
    std::vector<size_t> width;
    for (const std::string& h : headers)
        width.push_back(h.size());
    for (const auto& row : rows)
        for (size_t i = 0; i < row.size() && i < width.size(); ++i)
            width[i] = std::max(width[i], row[i].size());

    std::ostringstream out;
    auto emit = [&](const std::vector<std::string>& cells) {
        for (size_t i = 0; i < cells.size(); ++i) {
            out << cells[i];
            if (i + 1 < cells.size())
                out << std::string(width[i] - cells[i].size() + 2, ' ');
        }
        out << "\n";
    };
    emit(headers);
    for (const auto& row : rows)
        emit(row);
    return out.str();
}

std::string periodicity_text(const PeriodicityReport& r)
{
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"modulus", std::to_string(r.modulus)});
    rows.push_back({"period", std::to_string(r.period)});
    rows.push_back({"reduced period", std::to_string(r.reduced_period)});
    rows.push_back({"divisible", r.divisible ? "yes" : "no"});
    if (r.divisible)
        rows.push_back({"quotient", r.quotient.str()});
    rows.push_back({"total dimension", r.total_dimension.str()});
    rows.push_back({"dimension check",
                    r.total_dim_divisible ? "yes" : std::string("no (") + r.total_dimension.str() +
                                                        " not divisible by " +
                                                        std::to_string(r.modulus / r.reduced_period) +
                                                        ")"});
    std::string bad;
    for (long d : r.failing_conductors)
        bad += (bad.empty() ? "" : " ") + std::to_string(d);
    rows.push_back({"nonzero residues at", bad.empty() ? "none" : bad});
    rows.push_back({"verdict", r.passed() ? "consistent with the period" : "period ruled out"});
    return render_table({"check", "result"}, rows);
}

std::string psu_table_text(const std::vector<PsuEntry>& entries)
{
    std::vector<std::vector<std::string>> rows;
    for (const PsuEntry& e : entries)
        rows.push_back({"psu", std::to_string(e.n), std::to_string(e.characteristic),
                        to_string(e.status), e.certificate_summary()});
    return render_table({"family", "n", "char", "status", "certificate"}, rows);
}

std::string stiefel_table_text(const std::vector<StiefelEntry>& entries)
{
    std::vector<std::vector<std::string>> rows;
    for (const StiefelEntry& e : entries)
        rows.push_back({"stiefel", std::to_string(e.n), std::to_string(e.k),
                        std::to_string(e.characteristic), to_string(e.status),
                        e.certificate_summary()});
    return render_table({"family", "n", "k", "char", "status", "certificate"}, rows);
}

std::string gysin_table_text(const GysinTable& t)
{
    std::vector<std::vector<std::string>> rows;
    for (const GysinRow& r : t.rows) {
        std::string chars;
        for (long c : r.wide_chars)
            chars += (chars.empty() ? "" : " ") + std::to_string(c);
        rows.push_back({r.spin.str(), r.constraint.m.str(), r.data.nu.str(), r.det_coeff.str(),
                        chars.empty() ? "none" : chars});
    }
    return render_table({"spin", "m", "nu", "det", "wide chars"}, rows);
}

std::string quilt_table_text(const QuiltTable& t)
{
    std::vector<std::vector<std::string>> rows;
    for (const QuiltRow& r : t.rows) {
        std::string chars;
        for (long c : r.wide_chars)
            chars += (chars.empty() ? "" : " ") + std::to_string(c);
        rows.push_back({r.scenario.label, std::to_string(r.target_w),
                        "(" + std::to_string(r.solution.delta[0]) + "," +
                            std::to_string(r.solution.delta[1]) + ")",
                        std::to_string(r.boundary_d1) + " dD1", chars.empty() ? "none" : chars});
    }
    return render_table({"scenario", "w", "delta", "boundary", "wide chars"}, rows);
}

std::string dims_table_text(const std::map<int, long>& dims, const std::map<int, long>& expected)
{
    std::vector<std::vector<std::string>> rows;
    for (const auto& [deg, dim] : dims) {
        auto it = expected.find(deg);
        std::string want = it == expected.end() ? "-" : std::to_string(it->second);
        rows.push_back({std::to_string(deg), std::to_string(dim), want,
                        (it != expected.end() && it->second == dim) ? "ok" : "MISMATCH"});
    }
    return render_table({"degree", "dim", "wide prediction", ""}, rows);
}

std::string presentation_text(const Presentation& p)
{
    std::ostringstream out;
    out << "generators:";
    for (const auto& g : p.generators())
        out << " " << g.name << "(deg " << g.degree << ")";
    out << "; T has degree " << p.novikov_degree() << "\n";
    out << "relations:\n";
    for (const GenPoly& rel : p.relations())
        out << "  " << p.poly_str(rel) << " = 0\n";
    return out.str();
}

}  // namespace floercalc
