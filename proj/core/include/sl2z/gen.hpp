#ifndef SL2Z_GEN_HPP
#define SL2Z_GEN_HPP

#include <cstdint>
#include <vector>

#include "sl2z/subgroup.hpp"

namespace sl2z {

// The torsion generators S (order dividing 4) and U = S R (order dividing 6)
// with S^2 = U^3. Any such transitive pair determines a subgroup.
struct AmalgamPair {
  Permutation sigma_s;
  Permutation sigma_u;
};

// Converts via R = S^-1 U and L = S R^-1 S^-1; the result always passes
// SubgroupRep::validate.
SubgroupRep to_subgroup(const AmalgamPair &p);

// The inverse extraction: sigma_s = image of L R^-1 L, sigma_u = sigma_s * sigma_r.
AmalgamPair extract_amalgam(const SubgroupRep &g);

// Deterministic in (degree, seed). Samples a central involution-or-identity
// epsilon, then sigma_s with sigma_s^2 = epsilon and sigma_u with
// sigma_u^3 = epsilon, rejecting until transitive. Throws
// Error(retry_budget_exhausted) after 10000 failed attempts.
SubgroupRep random_subgroup(int degree, std::uint64_t seed);

// All subgroups of index <= max_degree, each exactly once, sorted by
// (degree, canonical image arrays). max_degree is capped at 12.
std::vector<SubgroupRep> enumerate_subgroups(int max_degree);

} // namespace sl2z

#endif
