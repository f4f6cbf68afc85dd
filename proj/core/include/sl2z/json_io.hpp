#ifndef SL2Z_JSON_IO_HPP
#define SL2Z_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "sl2z/congruence.hpp"
#include "sl2z/subgroup.hpp"

namespace sl2z {

inline constexpr const char *kSubgroupFormat = "sl2z-subgroup/1";

// {"format": "sl2z-subgroup/1", "degree": d, "L": [...], "R": [...]}
nlohmann::json subgroup_to_json(const SubgroupRep &g);

// Throws Error(invalid_argument) on malformed payloads and the structural
// validation errors from SubgroupRep::validate on bad permutation pairs.
SubgroupRep subgroup_from_json(const nlohmann::json &j);

SubgroupRep read_subgroup_file(const std::string &path);
void write_subgroup_file(const std::string &path, const SubgroupRep &g);

// The full analysis report: degree, even, cusp_widths (ascending), d,
// candidate_level, congruence, failed_relator, exact_level.
nlohmann::json verdict_report(const SubgroupRep &g);

} // namespace sl2z

#endif
