#ifndef SL2Z_SL2ZMOD_HPP
#define SL2Z_SL2ZMOD_HPP

#include <cstdint>
#include <functional>

#include "sl2z/subgroup.hpp"

namespace sl2z {

// 2x2 matrix over Z/n with determinant 1; entries stored as least
// nonnegative residues.
struct MatModN {
  long long n;
  long long a, b, c, d;

  static MatModN identity(long long n) { return {n, 1 % n, 0, 0, 1 % n}; }
  static MatModN gen_l(long long n) { return {n, 1 % n, 0, 1 % n, 1 % n}; }
  static MatModN gen_r(long long n) { return {n, 1 % n, 1 % n, 0, 1 % n}; }

  friend bool operator==(const MatModN &, const MatModN &) = default;
};

MatModN mat_mul(const MatModN &x, const MatModN &y);
MatModN mat_inv(const MatModN &x);
MatModN reduce_mod(const MatZ &m, long long n);

// |SL2(Z/n)| = n^3 prod_{p|n} (1 - 1/p^2); saturates at INT64_MAX on overflow.
long long sl2_group_order(long long n);

// The subgroup of SL2(Z) that is the preimage of {x : pred(x)} in SL2(Z/n),
// built by BFS over right cosets with right multiplication by L and R.
// The predicate is spot-checked for closure on sampled members; a violation
// throws Error(predicate_not_subgroup).
SubgroupRep subgroup_from_predicate(long long n,
                                    const std::function<bool(const MatModN &)> &pred);

SubgroupRep gamma0(long long n);     // c = 0 mod n
SubgroupRep gamma1(long long n);     // c = 0, a = d = 1 mod n
SubgroupRep gamma_full(long long n); // matrix = identity mod n

// Size guard for the brute-force oracle; reads SL2Z_ORACLE_MAX from the
// environment, default 1'000'000 group elements.
long long oracle_size_bound();

// Brute force: true iff the permutation assignment L -> sigma_L, R -> sigma_R
// descends to a well-defined map on SL2(Z/n), i.e. iff the subgroup contains
// Gamma(n). Throws Error(oracle_too_large) when |SL2(Z/n)| exceeds the bound.
bool oracle_factors_through(const SubgroupRep &g, long long n);
bool oracle_factors_through(const SubgroupRep &g, long long n, long long max_elements);

} // namespace sl2z

#endif
