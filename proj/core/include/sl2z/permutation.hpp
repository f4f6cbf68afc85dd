#ifndef SL2Z_PERMUTATION_HPP
#define SL2Z_PERMUTATION_HPP

#include <compare>
#include <cstdint>
#include <vector>

namespace sl2z {

// A bijection on {0..degree-1}, stored as its image array. Immutable after
// construction; all operations on permutations are free functions returning
// new values.
class Permutation {
public:
  // Validates that images is a bijection; throws Error(invalid_argument) otherwise.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int x) const { return images_[x]; }
  const std::vector<int> &images() const { return images_; }

  bool is_identity() const;

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &, const Permutation &) = default;

private:
  std::vector<int> images_;
};

// c(x) = b(a(x)): apply a first, then b (left-to-right).
Permutation compose(const Permutation &a, const Permutation &b);

Permutation inverse(const Permutation &p);

// p^k for any integer k; computed cycle-wise, so cost is O(degree)
// regardless of |k|.
Permutation power(const Permutation &p, long long k);

// Least k >= 1 with p^k = id; the lcm of the cycle lengths.
long long order(const Permutation &p);

// Orbit partition: each cycle starts with its minimal point, cycles sorted by
// minimal point, fixed points included.
std::vector<std::vector<int>> cycles(const Permutation &p);

// True iff the group generated by gens has a single orbit on the points.
bool is_transitive(const std::vector<Permutation> &gens);

// The permutation induced by p on the orbits of the involution iota,
// orbits labeled by minimal element and relabeled densely in increasing
// order. Requires iota^2 = id and p iota = iota p.
Permutation quotient_by_involution(const Permutation &p, const Permutation &iota);

} // namespace sl2z

#endif
