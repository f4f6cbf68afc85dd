#ifndef SL2Z_SUBGROUP_HPP
#define SL2Z_SUBGROUP_HPP

#include <vector>

#include "sl2z/matz.hpp"
#include "sl2z/permutation.hpp"
#include "sl2z/word.hpp"

namespace sl2z {

// A finite-index subgroup of SL2(Z), encoded by the action of L and R on the
// right cosets. Point 0 is the base coset (the subgroup itself). Construction
// goes through validate(), so every SubgroupRep in circulation satisfies the
// structural relations of SL2(Z).
class SubgroupRep {
public:
  // Checks, in order: transitivity of {sigma_l, sigma_r}; the amalgam
  // relation S^2 = (S R)^3 with S := L R^-1 L; S^4 = 1; and the generator
  // consistency L = S R^-1 S^-1. Throws Error(not_transitive / bad_amalgam /
  // bad_order4 / bad_conjugation) naming the violated relation.
  static SubgroupRep validate(Permutation sigma_l, Permutation sigma_r);

  int degree() const { return sigma_l_.degree(); }
  const Permutation &sigma_l() const { return sigma_l_; }
  const Permutation &sigma_r() const { return sigma_r_; }
  const Permutation &sigma_s() const { return sigma_s_; } // image of L R^-1 L

  friend bool operator==(const SubgroupRep &, const SubgroupRep &) = default;

private:
  SubgroupRep(Permutation sigma_l, Permutation sigma_r, Permutation sigma_s);
  Permutation sigma_l_, sigma_r_, sigma_s_;
};

struct CuspData {
  std::vector<int> widths; // cycle lengths of R on the projective cosets
  long long d;             // lcm of the widths
  bool even;               // -1 in the subgroup
};

// True iff -1 lies in the subgroup (equivalently, S^2 maps to the identity).
bool is_even(const SubgroupRep &g);

// The permutation image of -1 = S^2; identity or a central involution.
Permutation minus_one(const SubgroupRep &g);

CuspData cusp_data(const SubgroupRep &g);

// Membership: the word's permutation fixes the base coset.
bool contains_word(const SubgroupRep &g, const Word &w);
bool contains_matrix(const SubgroupRep &g, const MatZ &m);

// Relabels points by BFS discovery order from point 0, L-edge before R-edge.
// Two SubgroupReps describe the same subgroup iff their canonical forms are
// equal field-by-field.
SubgroupRep canonicalize(const SubgroupRep &g);

// The subgroup g1 ∩ g2: orbit of (0,0) in the product action, canonicalized.
SubgroupRep intersect(const SubgroupRep &g1, const SubgroupRep &g2);

// The conjugate subgroup with base point moved to the image of 0 under w,
// canonicalized.
SubgroupRep conjugate_by_word(const SubgroupRep &g, const Word &w);

} // namespace sl2z

#endif
