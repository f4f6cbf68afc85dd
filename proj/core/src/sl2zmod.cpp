#include "sl2z/sl2zmod.hpp"

#include <cstdlib>
#include <limits>
#include <random>
#include <unordered_map>

#include "sl2z/error.hpp"

namespace sl2z {

MatModN mat_mul(const MatModN &x, const MatModN &y) {
  if (x.n != y.n)
    throw Error(errc::invalid_argument, "mat_mul: modulus mismatch");
  const long long n = x.n;
  return {n, (x.a * y.a + x.b * y.c) % n, (x.a * y.b + x.b * y.d) % n,
          (x.c * y.a + x.d * y.c) % n, (x.c * y.b + x.d * y.d) % n};
}

MatModN mat_inv(const MatModN &x) {
  const long long n = x.n;
  return {n, x.d, (n - x.b) % n, (n - x.c) % n, x.a};
}

MatModN reduce_mod(const MatZ &m, long long n) {
  if (n < 1)
    throw Error(errc::invalid_argument, "reduce_mod: modulus must be >= 1");
  auto red = [n](const bigint &v) {
    bigint r = v % n;
    if (r < 0)
      r += n;
    return r.convert_to<long long>();
  };
  return {n, red(m.a), red(m.b), red(m.c), red(m.d)};
}

long long sl2_group_order(long long n) {
  if (n < 1)
    throw Error(errc::invalid_argument, "sl2_group_order: n must be >= 1");
  const long long cap = std::numeric_limits<long long>::max();
  __int128 total = 1;
  long long rest = n;
  for (long long p = 2; p * p <= rest; ++p) {
    if (rest % p != 0)
      continue;
    long long pe = 1;
    while (rest % p == 0) {
      pe *= p;
      rest /= p;
    }
    // |SL2(Z/p^e)| = p^(3e-2) * (p^2 - 1)
    total *= (__int128)pe * pe * pe / (p * p) * (p * p - 1);
    if (total > cap)
      return cap;
  }
  if (rest > 1) {
    long long p = rest;
    total *= (__int128)p * (p * p - 1);
    if (total > cap)
      return cap;
  }
  return (long long)total;
}

SubgroupRep subgroup_from_predicate(long long n,
                                    const std::function<bool(const MatModN &)> &pred) {
  if (n < 1)
    throw Error(errc::invalid_argument, "subgroup_from_predicate: modulus must be >= 1");
  if (!pred(MatModN::identity(n)))
    throw Error(errc::predicate_not_subgroup,
                "PredicateNotSubgroup: identity rejected");

  const MatModN gl = MatModN::gen_l(n), gr = MatModN::gen_r(n);

  // Spot-check closure of the predicate on sampled members.
  {
    std::mt19937_64 rng(0x5125ab5cu);
    std::vector<MatModN> members{MatModN::identity(n)};
    for (int i = 0; i < 400 && members.size() < 40; ++i) {
      MatModN x = MatModN::identity(n);
      int len = 1 + (int)(rng() % 12);
      for (int j = 0; j < len; ++j) {
        const MatModN &t = (rng() & 1) ? gl : gr;
        x = (rng() & 1) ? mat_mul(x, t) : mat_mul(x, mat_inv(t));
      }
      if (pred(x))
        members.push_back(x);
    }
    for (size_t i = 0; i < members.size(); ++i)
      for (size_t j = 0; j < members.size(); ++j)
        if (!pred(mat_mul(members[i], mat_inv(members[j]))))
          throw Error(errc::predicate_not_subgroup,
                      "PredicateNotSubgroup: sampled closure check failed");
  }

  // BFS over right cosets Hg, multiplying on the right by L and R.
  // Cosets Hg1 = Hg2 iff g1 * g2^-1 in H; linear scan with precomputed
  // inverses. Quadratic in the index but exact.
  std::vector<MatModN> reps{MatModN::identity(n)};
  std::vector<MatModN> rep_invs{MatModN::identity(n)};
  std::vector<int> im_l, im_r;
  auto locate = [&](const MatModN &h) -> int {
    for (size_t j = 0; j < reps.size(); ++j)
      if (pred(mat_mul(h, rep_invs[j])))
        return (int)j;
    reps.push_back(h);
    rep_invs.push_back(mat_inv(h));
    return (int)reps.size() - 1;
  };
  for (size_t i = 0; i < reps.size(); ++i) {
    MatModN rep = reps[i]; // copy: reps may reallocate below
    im_l.push_back(locate(mat_mul(rep, gl)));
    im_r.push_back(locate(mat_mul(rep, gr)));
  }

  return canonicalize(
      SubgroupRep::validate(Permutation(std::move(im_l)), Permutation(std::move(im_r))));
}

SubgroupRep gamma0(long long n) {
  return subgroup_from_predicate(n, [](const MatModN &x) { return x.c == 0; });
}

SubgroupRep gamma1(long long n) {
  return subgroup_from_predicate(n, [](const MatModN &x) {
    return x.c == 0 && x.a == 1 % x.n && x.d == 1 % x.n;
  });
}

SubgroupRep gamma_full(long long n) {
  return subgroup_from_predicate(
      n, [](const MatModN &x) { return x == MatModN::identity(x.n); });
}

long long oracle_size_bound() {
  if (const char *env = std::getenv("SL2Z_ORACLE_MAX")) {
    char *end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v > 0)
      return v;
  }
  return 1'000'000;
}

bool oracle_factors_through(const SubgroupRep &g, long long n) {
  return oracle_factors_through(g, n, oracle_size_bound());
}

bool oracle_factors_through(const SubgroupRep &g, long long n, long long max_elements) {
  if (n < 1)
    throw Error(errc::invalid_argument, "oracle: modulus must be >= 1");
  const long long size = sl2_group_order(n);
  if (size > max_elements)
    throw Error(errc::oracle_too_large, "OracleTooLarge: |SL2(Z/" + std::to_string(n) +
                                            ")| = " + std::to_string(size) +
                                            " exceeds bound " + std::to_string(max_elements));

  auto key = [n](const MatModN &x) {
    return ((x.a * n + x.b) * n + x.c) * n + x.d;
  };
  const MatModN gl = MatModN::gen_l(n), gr = MatModN::gen_r(n);

  // BFS over SL2(Z/n) from the identity; rho(x) is the permutation of the
  // BFS word for x. The map is well defined iff every cross edge agrees.
  std::unordered_map<long long, int> index;
  std::vector<MatModN> elems{MatModN::identity(n)};
  std::vector<Permutation> rho{Permutation::identity(g.degree())};
  index.emplace(key(elems[0]), 0);
  for (size_t i = 0; i < elems.size(); ++i) {
    for (const auto &[t, sigma] :
         {std::pair{gl, g.sigma_l()}, std::pair{gr, g.sigma_r()}}) {
      MatModN y = mat_mul(elems[i], t);
      Permutation py = compose(rho[i], sigma);
      auto [it, inserted] = index.emplace(key(y), (int)elems.size());
      if (inserted) {
        elems.push_back(y);
        rho.push_back(std::move(py));
      } else if (rho[it->second] != py) {
        return false;
      }
    }
  }
  return true;
}

} // namespace sl2z
