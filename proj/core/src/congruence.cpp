#include "sl2z/congruence.hpp"

#include <numeric>

#include "sl2z/error.hpp"

namespace sl2z {

long long mod_inverse(long long a, long long n) {
  if (n < 1)
    throw Error(errc::invalid_argument, "mod_inverse: modulus must be >= 1");
  if (n == 1)
    return 0;
  a %= n;
  if (a < 0)
    a += n;
  // extended Euclid on (a, n)
  long long r0 = a, r1 = n, x0 = 1, x1 = 0;
  while (r1 != 0) {
    long long q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    x0 -= q * x1;
    std::swap(x0, x1);
  }
  if (r0 != 1)
    throw Error(errc::not_invertible, "NotInvertible: gcd != 1");
  x0 %= n;
  if (x0 < 0)
    x0 += n;
  return x0;
}

std::pair<long long, long long> split_even_odd(long long n) {
  if (n < 1)
    throw Error(errc::invalid_argument, "split_even_odd: n must be >= 1");
  long long e = 1;
  while (n % 2 == 0) {
    e *= 2;
    n /= 2;
  }
  return {e, n};
}

std::pair<long long, long long> crt_constants(long long e, long long m) {
  if (e <= 1 || m <= 1 || (e & (e - 1)) != 0 || m % 2 == 0)
    throw Error(errc::invalid_argument, "crt_constants: need e a power of 2 > 1, m odd > 1");
  long long n = e * m;
  // c1 = e * (e^-1 mod m), c2 = m * (m^-1 mod e)
  long long c1 = e % n * mod_inverse(e, m) % n;
  long long c2 = m % n * mod_inverse(m, e) % n;
  return {c1, c2};
}

namespace {

bool is_power_of_two(long long n) { return n >= 1 && (n & (n - 1)) == 0; }

} // namespace

RelationSet relation_set(long long n) {
  if (n < 1)
    throw Error(errc::invalid_argument, "relation_set: n must be >= 1");

  const Word t = word_s(); // L R^-1 L

  if (n % 2 == 1) {
    long long z = mod_inverse(2, n);
    Word rel = (Word::R(2) * Word::L(-z)).pow(3);
    return {RelationCase::OddN, n, {{"odd.1", rel}}};
  }

  if (is_power_of_two(n)) {
    long long z5 = mod_inverse(5, n);
    Word w = Word::L(20) * Word::R(z5) * Word::L(-4) * Word::R(-1);
    std::vector<Relator> rels;
    rels.push_back({"pow2.1", t.inverse() * w * t * w});
    rels.push_back({"pow2.2", w.inverse() * Word::R() * w * Word::R(-25)});
    rels.push_back({"pow2.3", (w * Word::R(5) * t).pow(3) * t.pow(2).inverse()});
    return {RelationCase::PowerOfTwo, n, std::move(rels)};
  }

  auto [e, m] = split_even_odd(n);
  auto [c1, c2] = crt_constants(e, m);
  long long z5 = mod_inverse(5, e);
  long long z2 = mod_inverse(2, m);
  Word a = Word::L(c1), b = Word::R(c1);
  Word l = Word::L(c2), r = Word::R(c2);
  Word s = l.pow(20) * r.pow(z5) * l.pow(-4) * r.inverse();
  Word ta = a * b.inverse() * a; // (a b^-1 a)
  Word tl = l * r.inverse() * l; // (l r^-1 l)
  std::vector<Relator> rels;
  rels.push_back({"gen.1", a * r * a.inverse() * r.inverse()});
  rels.push_back({"gen.2", ta.pow(4)});
  rels.push_back({"gen.3", ta.pow(2) * (b.inverse() * a).pow(3).inverse()});
  rels.push_back({"gen.4", ta.pow(2) * (b.pow(2) * a.pow(-z2)).pow(3).inverse()});
  rels.push_back({"gen.5", tl.inverse() * s * tl * s});
  rels.push_back({"gen.6", s.inverse() * r * s * r.pow(-25)});
  rels.push_back({"gen.7", tl.pow(2) * (s * r.pow(5) * tl).pow(3).inverse()});
  return {RelationCase::Mixed, n, std::move(rels)};
}

Verdict is_congruence(const SubgroupRep &g) {
  CuspData cusps = cusp_data(g);
  Verdict v;
  v.d = cusps.d;
  v.even = cusps.even;
  v.candidate_level = cusps.even ? cusps.d : 2 * cusps.d;
  v.congruence = true;
  for (const auto &rel : relation_set(v.candidate_level).relators) {
    if (!evaluate_word(rel.word, g.sigma_l(), g.sigma_r()).is_identity()) {
      v.congruence = false;
      v.failed_relator = rel.name;
      break;
    }
  }
  if (v.congruence)
    v.exact_level = exact_level(g, v.d, v.even);
  return v;
}

long long exact_level(const SubgroupRep &g, long long d, bool even) {
  if (even)
    return d;
  if (d % 2 == 1) {
    // The odd-modulus relator evaluates to the image of -1 modulo Gamma(d),
    // so it can never be trivial on an odd subgroup. Instead: the subgroup
    // already contains Gamma(2d), and for odd d one has
    // Gamma(d) = <Gamma(2d), L^d, R^d>, so containment of Gamma(d) reduces
    // to the two generator images being trivial.
    bool contains = power(g.sigma_l(), d).is_identity() &&
                    power(g.sigma_r(), d).is_identity();
    return contains ? d : 2 * d;
  }
  for (const auto &rel : relation_set(d).relators)
    if (!evaluate_word(rel.word, g.sigma_l(), g.sigma_r()).is_identity())
      return 2 * d;
  return d;
}

} // namespace sl2z
