#include "sl2z/json_io.hpp"

#include <algorithm>
#include <fstream>

#include "sl2z/error.hpp"

namespace sl2z {

using nlohmann::json;

json subgroup_to_json(const SubgroupRep &g) {
  return json{{"format", kSubgroupFormat},
              {"degree", g.degree()},
              {"L", g.sigma_l().images()},
              {"R", g.sigma_r().images()}};
}

SubgroupRep subgroup_from_json(const json &j) {
  if (!j.is_object() || j.value("format", "") != kSubgroupFormat)
    throw Error(errc::invalid_argument, "missing or unknown format tag");
  if (!j.contains("degree") || !j["degree"].is_number_integer() ||
      !j.contains("L") || !j["L"].is_array() || !j.contains("R") || !j["R"].is_array())
    throw Error(errc::invalid_argument, "malformed subgroup payload");
  const int degree = j["degree"].get<int>();
  auto l = j["L"].get<std::vector<int>>();
  auto r = j["R"].get<std::vector<int>>();
  if (degree < 1 || (int)l.size() != degree || (int)r.size() != degree)
    throw Error(errc::invalid_argument, "degree does not match image arrays");
  return SubgroupRep::validate(Permutation(std::move(l)), Permutation(std::move(r)));
}

SubgroupRep read_subgroup_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw Error(errc::invalid_argument, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception &e) {
    throw Error(errc::invalid_argument, std::string("JSON parse error: ") + e.what());
  }
  return subgroup_from_json(j);
}

void write_subgroup_file(const std::string &path, const SubgroupRep &g) {
  std::ofstream out(path);
  if (!out)
    throw Error(errc::invalid_argument, "cannot write " + path);
  out << subgroup_to_json(g).dump(2) << '\n';
}

json verdict_report(const SubgroupRep &g) {
  CuspData cusps = cusp_data(g);
  Verdict v = is_congruence(g);
  std::sort(cusps.widths.begin(), cusps.widths.end());
  json j{{"degree", g.degree()},
         {"even", v.even},
         {"cusp_widths", cusps.widths},
         {"d", v.d},
         {"candidate_level", v.candidate_level},
         {"congruence", v.congruence}};
  j["failed_relator"] = v.failed_relator ? json(*v.failed_relator) : json(nullptr);
  j["exact_level"] = v.exact_level ? json(*v.exact_level) : json(nullptr);
  return j;
}

} // namespace sl2z
