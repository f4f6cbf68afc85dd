#ifndef SL2Z_CONGRUENCE_HPP
#define SL2Z_CONGRUENCE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sl2z/subgroup.hpp"
#include "sl2z/word.hpp"

namespace sl2z {

// Least nonnegative x with a*x = 1 mod n; 0 when n = 1.
// Throws Error(not_invertible) unless gcd(a, n) = 1.
long long mod_inverse(long long a, long long n);

// n = e * m with e the largest power of 2 dividing n and m odd.
std::pair<long long, long long> split_even_odd(long long n);

// CRT idempotents for n = e*m: c1 = 0 mod e, 1 mod m; c2 = 1 mod e, 0 mod m.
// Requires e a power of 2, m odd, e > 1, m > 1.
std::pair<long long, long long> crt_constants(long long e, long long m);

enum class RelationCase { OddN, PowerOfTwo, Mixed };

struct Relator {
  std::string name;
  Word word;
};

// The relator list for modulus n: a single relator for odd n, three when n is
// a power of two, seven in the mixed case. Equations X = Y are stored as the
// relator X * Y^-1.
struct RelationSet {
  RelationCase case_tag;
  long long n;
  std::vector<Relator> relators;
};

RelationSet relation_set(long long n);

struct Verdict {
  bool congruence;
  long long candidate_level; // N = d (even) or 2d (odd)
  long long d;
  bool even;
  std::optional<std::string> failed_relator;
  std::optional<long long> exact_level;
};

// Decides congruence: all relators of relation_set(N) must evaluate to the
// identity permutation, where N = d for even subgroups and 2d for odd ones.
Verdict is_congruence(const SubgroupRep &g);

// For a subgroup already known congruence: d when even; for odd subgroups, d
// if the subgroup contains Gamma(d), else 2d. Containment of Gamma(d) is
// decided by relator triviality for even d, and by triviality of the images
// of L^d and R^d for odd d (Gamma(d) = <Gamma(2d), L^d, R^d> when d is odd).
long long exact_level(const SubgroupRep &g, long long d, bool even);

} // namespace sl2z

#endif
