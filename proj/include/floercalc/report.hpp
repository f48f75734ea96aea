#ifndef FLOERCALC_REPORT_HPP
#define FLOERCALC_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "floercalc/periodicity.hpp"
#include "floercalc/poincare.hpp"
#include "floercalc/presentations.hpp"
#include "floercalc/quilt.hpp"
#include "floercalc/ring.hpp"
#include "floercalc/spin_gysin.hpp"

/* JSON encodings and aligned-column text for every verdict type the CLI
 * emits, plus the scenario file formats.  Every emitter has a matching
 * parser and the pair round-trips. */

namespace floercalc {

using json = nlohmann::ordered_json;

json to_json(const GradedPoly& p);
GradedPoly graded_poly_from_json(const json& j);

json to_json(const SpaceSpec& s);
SpaceSpec space_spec_from_json(const json& j);

json to_json(const PeriodicityReport& r);
PeriodicityReport periodicity_report_from_json(const json& j);

json to_json(const TorusBoundCertificate& c);
TorusBoundCertificate torus_bound_from_json(const json& j);

json to_json(const ExteriorBoundVerdict& v);
ExteriorBoundVerdict exterior_bound_from_json(const json& j);

json to_json(const PsuEntry& e);
PsuEntry psu_entry_from_json(const json& j);

json to_json(const StiefelEntry& e);
StiefelEntry stiefel_entry_from_json(const json& j);

json to_json(const CharVerdict& v);
CharVerdict char_verdict_from_json(const json& j);

json to_json(const GysinRow& r);
GysinRow gysin_row_from_json(const json& j);
json to_json(const GysinTable& t);
GysinTable gysin_table_from_json(const json& j);

json to_json(const QuiltRow& r);
QuiltRow quilt_row_from_json(const json& j);
json to_json(const QuiltTable& t);
QuiltTable quilt_table_from_json(const json& j);

json to_json(const Presentation& p);
Presentation presentation_from_json(const json& j);

json to_json(const DiscLedger& l);
DiscLedger disc_ledger_from_json(const json& j);

/* scenario file: curated disc data plus the cone inputs */
struct GysinScenario {
    GysinFamily family;
    DiscLedger ledger;
    int euler = 0;
    std::string base_sphere;
};
json to_json(const GysinScenario& s);
GysinScenario gysin_scenario_from_json(const json& j);
GysinScenario standard_gysin_scenario(GysinFamily family);

/* scenario file: Chekanov ledger plus the spin scenarios to run */
struct QuiltScenarioFile {
    GysinFamily family;
    ChekanovLedger ledger;
    std::vector<QuiltScenario> scenarios;
};
json to_json(const QuiltScenarioFile& f);
QuiltScenarioFile quilt_scenario_file_from_json(const json& j);
QuiltScenarioFile standard_quilt_scenario_file(GysinFamily family);

/* quilt pipeline over explicit scenario data, with the same consistency
 * guarantees as quilt_wide_chars */
QuiltTable run_quilt_scenarios(const QuiltScenarioFile& file, bool cross_check = true);

json load_json_file(const std::string& path);

/******** aligned-column text ********/

std::string render_table(const std::vector<std::string>& headers,
                         const std::vector<std::vector<std::string>>& rows);

std::string periodicity_text(const PeriodicityReport& r);
std::string psu_table_text(const std::vector<PsuEntry>& entries);
std::string stiefel_table_text(const std::vector<StiefelEntry>& entries);
std::string gysin_table_text(const GysinTable& t);
std::string quilt_table_text(const QuiltTable& t);
std::string dims_table_text(const std::map<int, long>& dims, const std::map<int, long>& expected);
std::string presentation_text(const Presentation& p);

}  // namespace floercalc

#endif
