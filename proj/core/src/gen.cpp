#include "sl2z/gen.hpp"

#include <algorithm>
#include <random>

#include "sl2z/error.hpp"

namespace sl2z {

SubgroupRep to_subgroup(const AmalgamPair &p) {
  Permutation sigma_r = compose(inverse(p.sigma_s), p.sigma_u);
  Permutation sigma_l = compose(compose(p.sigma_s, inverse(sigma_r)), inverse(p.sigma_s));
  return SubgroupRep::validate(std::move(sigma_l), std::move(sigma_r));
}

AmalgamPair extract_amalgam(const SubgroupRep &g) {
  return {g.sigma_s(), compose(g.sigma_s(), g.sigma_r())};
}

namespace {

std::vector<int> shuffled_points(int degree, std::mt19937_64 &rng) {
  std::vector<int> pts(degree);
  for (int i = 0; i < degree; ++i)
    pts[i] = i;
  std::shuffle(pts.begin(), pts.end(), rng);
  return pts;
}

} // namespace

SubgroupRep random_subgroup(int degree, std::uint64_t seed) {
  if (degree < 1)
    throw Error(errc::invalid_argument, "random_subgroup: degree must be >= 1");
  std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (std::uint64_t)degree));

  for (int attempt = 0; attempt < 10000; ++attempt) {
    // epsilon: a random involution-or-identity with an even number of
    // 2-cycles (each pair of them must assemble into a 4-cycle of sigma_s).
    auto pts = shuffled_points(degree, rng);
    const int max_pairs = degree / 2;
    int t = 2 * (int)(rng() % (std::uint64_t)(max_pairs / 2 + 1)); // even, <= max_pairs
    std::vector<std::pair<int, int>> eps_pairs;
    for (int i = 0; i < t; ++i)
      eps_pairs.emplace_back(pts[2 * i], pts[2 * i + 1]);
    std::vector<int> fixed(pts.begin() + 2 * t, pts.end());

    // sigma_s: epsilon 2-cycles combine pairwise into 4-cycles; epsilon fixed
    // points become fixed points or 2-cycles of sigma_s.
    std::vector<int> s(degree);
    for (int i = 0; i < degree; ++i)
      s[i] = i;
    std::shuffle(eps_pairs.begin(), eps_pairs.end(), rng);
    for (int i = 0; i + 1 < t; i += 2) {
      auto [a, b] = eps_pairs[i];
      auto [c, d] = eps_pairs[i + 1];
      s[a] = c; s[c] = b; s[b] = d; s[d] = a; // squares to (a b)(c d)
    }
    {
      auto f = fixed;
      std::shuffle(f.begin(), f.end(), rng);
      int k = (int)(rng() % (std::uint64_t)(f.size() / 2 + 1));
      for (int i = 0; i < k; ++i) {
        s[f[2 * i]] = f[2 * i + 1];
        s[f[2 * i + 1]] = f[2 * i];
      }
    }

    // sigma_u: epsilon 2-cycles come one per 2-cycle or three per 6-cycle;
    // epsilon fixed points become fixed points or 3-cycles.
    std::vector<int> u(degree);
    for (int i = 0; i < degree; ++i)
      u[i] = i;
    std::shuffle(eps_pairs.begin(), eps_pairs.end(), rng);
    int triples = (int)(rng() % (std::uint64_t)(t / 3 + 1));
    for (int i = 0; i < 3 * triples; i += 3) {
      auto [a, b] = eps_pairs[i];
      auto [c, d] = eps_pairs[i + 1];
      auto [e, f] = eps_pairs[i + 2];
      // (a c e b d f): cubes to (a b)(c d)(e f)
      u[a] = c; u[c] = e; u[e] = b; u[b] = d; u[d] = f; u[f] = a;
    }
    for (int i = 3 * triples; i < t; ++i) {
      auto [a, b] = eps_pairs[i];
      u[a] = b;
      u[b] = a;
    }
    {
      auto f = fixed;
      std::shuffle(f.begin(), f.end(), rng);
      int k = (int)(rng() % (std::uint64_t)(f.size() / 3 + 1));
      for (int i = 0; i < 3 * k; i += 3) {
        u[f[i]] = f[i + 1];
        u[f[i + 1]] = f[i + 2];
        u[f[i + 2]] = f[i];
      }
    }

    AmalgamPair pair{Permutation(std::move(s)), Permutation(std::move(u))};
    if (!is_transitive({pair.sigma_s, pair.sigma_u}))
      continue;
    return canonicalize(to_subgroup(pair));
  }
  throw Error(errc::retry_budget_exhausted,
              "RetryBudgetExhausted: no transitive sample within 10000 attempts");
}

namespace {

// Backtracking over the point-images of sigma_s and sigma_u. Points are
// labeled in discovery order scanning s[0], u[0], s[1], u[1], ..., and a
// fresh point always receives the next free label, so every transitive pair
// is produced exactly once, already in canonical labeling.
class Enumerator {
public:
  explicit Enumerator(int max_degree) : maxd_(max_degree) {
    s_.assign(maxd_, -1);
    u_.assign(maxd_, -1);
    s_taken_.assign(maxd_, 0);
    u_taken_.assign(maxd_, 0);
  }

  std::vector<SubgroupRep> run() {
    used_ = 1;
    rec(0);
    std::sort(out_.begin(), out_.end(), [](const SubgroupRep &a, const SubgroupRep &b) {
      if (a.degree() != b.degree())
        return a.degree() < b.degree();
      if (a.sigma_l().images() != b.sigma_l().images())
        return a.sigma_l().images() < b.sigma_l().images();
      return a.sigma_r().images() < b.sigma_r().images();
    });
    return std::move(out_);
  }

private:
  void rec(int slot) {
    int p = slot / 2;
    if (p == used_) {
      record();
      return;
    }
    bool gen_s = (slot % 2 == 0);
    auto &arr = gen_s ? s_ : u_;
    auto &taken = gen_s ? s_taken_ : u_taken_;
    int limit = (used_ < maxd_) ? used_ + 1 : used_;
    for (int q = 0; q < limit; ++q) {
      if (q < used_ && taken[q])
        continue;
      bool fresh = (q == used_);
      if (fresh)
        ++used_;
      arr[p] = q;
      taken[q] = 1;
      if (consistent())
        rec(slot + 1);
      taken[q] = 0;
      arr[p] = -1;
      if (fresh)
        --used_;
    }
  }

  // Partial-assignment pruning: cycle lengths of s must divide 4, of u must
  // divide 6, and s^2 must agree with u^3 wherever both are determined.
  bool consistent() const {
    if (!chains_ok(s_, 4) || !chains_ok(u_, 6))
      return false;
    for (int x = 0; x < used_; ++x) {
      int es = step(s_, x, 2), eu = step(u_, x, 3);
      if (es >= 0 && eu >= 0 && es != eu)
        return false;
    }
    return true;
  }

  static int step(const std::vector<int> &arr, int x, int k) {
    for (int i = 0; i < k; ++i) {
      x = arr[x];
      if (x < 0)
        return -1;
    }
    return x;
  }

  bool chains_ok(const std::vector<int> &arr, int maxlen) const {
    std::vector<char> has_pre(used_, 0), seen(used_, 0);
    for (int x = 0; x < used_; ++x)
      if (arr[x] >= 0)
        has_pre[arr[x]] = 1;
    // open chains: start where the preimage is unset
    for (int x = 0; x < used_; ++x) {
      if (arr[x] < 0 || has_pre[x])
        continue;
      int len = 1, y = x;
      seen[y] = 1;
      while (arr[y] >= 0) {
        y = arr[y];
        seen[y] = 1;
        ++len;
        if (len > maxlen)
          return false;
      }
    }
    // the rest of the assigned points lie on closed cycles
    for (int x = 0; x < used_; ++x) {
      if (arr[x] < 0 || seen[x])
        continue;
      int len = 0, y = x;
      do {
        seen[y] = 1;
        y = arr[y];
        ++len;
      } while (y != x);
      if (maxlen % len != 0)
        return false;
    }
    return true;
  }

  void record() {
    std::vector<int> s(s_.begin(), s_.begin() + used_);
    std::vector<int> u(u_.begin(), u_.begin() + used_);
    AmalgamPair pair{Permutation(std::move(s)), Permutation(std::move(u))};
    out_.push_back(canonicalize(to_subgroup(pair)));
  }

  int maxd_;
  int used_ = 1;
  std::vector<int> s_, u_;
  std::vector<char> s_taken_, u_taken_;
  std::vector<SubgroupRep> out_;
};

} // namespace

std::vector<SubgroupRep> enumerate_subgroups(int max_degree) {
  if (max_degree < 1 || max_degree > 12)
    throw Error(errc::invalid_argument, "enumerate_subgroups: max_degree must be in 1..12");
  return Enumerator(max_degree).run();
}

} // namespace sl2z
