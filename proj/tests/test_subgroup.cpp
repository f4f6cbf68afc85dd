#include <doctest.h>

#include <algorithm>
#include <random>

#include "sl2z/error.hpp"
#include "sl2z/gen.hpp"
#include "sl2z/sl2zmod.hpp"
#include "sl2z/subgroup.hpp"

using namespace sl2z;

namespace {

Word random_word(std::mt19937_64 &rng, int max_len) {
  Word w;
  int len = (int)(rng() % (max_len + 1));
  for (int i = 0; i < len; ++i) {
    Gen g = (rng() & 1) ? Gen::L : Gen::R;
    long long e = (long long)(rng() % 19) - 9;
    w = w * Word::gen(g, e);
  }
  return w;
}

std::vector<int> sorted_widths(const SubgroupRep &g) {
  auto w = cusp_data(g).widths;
  std::sort(w.begin(), w.end());
  return w;
}

} // namespace

TEST_CASE("validate") {
  CHECK(SubgroupRep::validate(Permutation::identity(1), Permutation::identity(1))
            .degree() == 1);

  // sigma_L = sigma_R = 3-cycle: S = (0 1 2) but (S R)^3 = id != S^2
  try {
    SubgroupRep::validate(Permutation({1, 2, 0}), Permutation({1, 2, 0}));
    FAIL("expected BadAmalgam");
  } catch (const Error &e) {
    CHECK(e.code() == errc::bad_amalgam);
  }

  // several orbits
  try {
    SubgroupRep::validate(Permutation::identity(2), Permutation::identity(2));
    FAIL("expected NotTransitive");
  } catch (const Error &e) {
    CHECK(e.code() == errc::not_transitive);
  }

  // satisfies the S-relations but is no SL2(Z) action: L must equal S R^-1 S^-1
  try {
    SubgroupRep::validate(Permutation({0, 1}), Permutation({1, 0}));
    FAIL("expected BadConjugation");
  } catch (const Error &e) {
    CHECK(e.code() == errc::bad_conjugation);
  }

  // a genuine coset action round-trips through validate
  SubgroupRep g = gamma0(2);
  CHECK(SubgroupRep::validate(g.sigma_l(), g.sigma_r()) == g);
}

TEST_CASE("is_even and minus_one") {
  CHECK(is_even(SubgroupRep::validate(Permutation::identity(1), Permutation::identity(1))));
  CHECK_FALSE(is_even(gamma1(5))); // -1 != 1 mod 5
  CHECK(is_even(gamma0(11)));      // -I has c = 0 mod 11

  SubgroupRep g3 = gamma_full(3);
  Permutation m = minus_one(g3);
  CHECK_FALSE(is_even(g3));
  for (const auto &cyc : cycles(m))
    CHECK(cyc.size() == 2); // fixed-point-free involution

  std::mt19937_64 rng(31);
  for (int i = 0; i < 50; ++i) {
    SubgroupRep g = random_subgroup(1 + (int)(rng() % 12), rng());
    Permutation mo = minus_one(g);
    CHECK(compose(mo, g.sigma_l()) == compose(g.sigma_l(), mo));
    CHECK(compose(mo, g.sigma_r()) == compose(g.sigma_r(), mo));
    CHECK(is_even(g) == mo.is_identity());
  }
}

TEST_CASE("cusp_data") {
  CHECK(sorted_widths(SubgroupRep::validate(Permutation::identity(1),
                                            Permutation::identity(1))) ==
        std::vector<int>{1});
  CHECK(sorted_widths(gamma0(4)) == std::vector<int>{1, 1, 4});
  CHECK(cusp_data(gamma0(4)).d == 4);
  CHECK(sorted_widths(gamma1(5)) == std::vector<int>{1, 1, 5, 5});
  CHECK(cusp_data(gamma1(5)).d == 5);

  std::mt19937_64 rng(32);
  for (int i = 0; i < 50; ++i) {
    SubgroupRep g = random_subgroup(1 + (int)(rng() % 14), rng());
    CuspData c = cusp_data(g);
    Permutation rbar = quotient_by_involution(g.sigma_r(), minus_one(g));
    CHECK(c.d == order(rbar));
    long long sum = 0;
    for (int w : c.widths)
      sum += w;
    CHECK(sum == rbar.degree());
    if (c.even)
      CHECK(sum == g.degree());
  }
}

TEST_CASE("membership") {
  SubgroupRep g02 = gamma0(2);
  CHECK(contains_word(g02, Word::R()));
  CHECK(contains_word(g02, Word::L(2)));
  CHECK_FALSE(contains_word(g02, Word::L())); // c = 1
  CHECK_FALSE(contains_word(g02, word_s()));
  CHECK(contains_matrix(gamma_full(12), MatZ{1, 12, 0, 1}));
  CHECK_FALSE(contains_matrix(gamma_full(3), MatZ::minus_identity()));

  // (L R^-1 L)^2 = -1 belongs to every even subgroup
  CHECK(contains_word(g02, word_minus_one()));
  CHECK(contains_word(gamma0(11), word_minus_one()));
}

TEST_CASE("membership agrees with the congruence predicate for gamma0(N)") {
  std::mt19937_64 rng(33);
  for (long long n : {2, 3, 4, 6, 8, 12}) {
    SubgroupRep g = gamma0(n);
    for (int i = 0; i < 60; ++i) {
      Word w = random_word(rng, 12);
      MatZ m = word_to_matrix(w);
      bool pred = (m.c % n) == 0;
      CHECK(contains_matrix(g, m) == pred);
      CHECK(contains_word(g, w) == pred);
    }
  }
}

TEST_CASE("canonicalize") {
  std::mt19937_64 rng(34);
  for (int i = 0; i < 40; ++i) {
    SubgroupRep g = random_subgroup(2 + (int)(rng() % 10), rng());
    SubgroupRep c = canonicalize(g);
    CHECK(canonicalize(c) == c);

    // relabel by a random permutation fixing 0
    std::vector<int> relab(g.degree());
    for (int x = 0; x < g.degree(); ++x)
      relab[x] = x;
    std::shuffle(relab.begin() + 1, relab.end(), rng);
    std::vector<int> il(g.degree()), ir(g.degree());
    for (int x = 0; x < g.degree(); ++x) {
      il[relab[x]] = relab[g.sigma_l()[x]];
      ir[relab[x]] = relab[g.sigma_r()[x]];
    }
    SubgroupRep shuffled = SubgroupRep::validate(Permutation(il), Permutation(ir));
    CHECK(canonicalize(shuffled) == c);
  }
}

TEST_CASE("intersect") {
  SubgroupRep full = SubgroupRep::validate(Permutation::identity(1), Permutation::identity(1));
  SubgroupRep g02 = gamma0(2);
  CHECK(intersect(g02, full) == canonicalize(g02));
  CHECK(intersect(g02, g02) == canonicalize(g02));
  CHECK(intersect(gamma0(2), gamma0(3)) == gamma0(6));
  CHECK(intersect(gamma1(3), gamma1(4)) == gamma1(12));
}

TEST_CASE("conjugate_by_word") {
  std::mt19937_64 rng(35);
  for (int i = 0; i < 40; ++i) {
    SubgroupRep g = random_subgroup(1 + (int)(rng() % 10), rng());
    Word w = random_word(rng, 8);
    CHECK(conjugate_by_word(g, Word()) == canonicalize(g));
    SubgroupRep h = conjugate_by_word(g, w);
    CHECK(conjugate_by_word(h, w.inverse()) == canonicalize(g));
    CHECK(sorted_widths(h) == sorted_widths(g)); // widths are a conjugation invariant
  }
}
