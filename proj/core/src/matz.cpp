#include "sl2z/matz.hpp"

#include "sl2z/error.hpp"

namespace sl2z {

namespace {

long long to_exponent(const bigint &v) {
  if (v > (bigint(1) << 62) || v < -(bigint(1) << 62))
    throw Error(errc::invalid_argument, "decompose_matrix: exponent out of range");
  return v.convert_to<long long>();
}

// Quotient nearest to num/den, so |num - q*den| <= |den|/2.
bigint round_div(const bigint &num, const bigint &den) {
  bigint q = num / den; // truncates toward zero
  bigint r = num - q * den;
  if (2 * abs(r) > abs(den))
    q += ((r < 0) == (den < 0)) ? 1 : -1;
  return q;
}

} // namespace

MatZ MatZ::make(bigint a, bigint b, bigint c, bigint d) {
  if (a * d - b * c != 1)
    throw Error(errc::invalid_argument, "matrix determinant is not 1");
  return {std::move(a), std::move(b), std::move(c), std::move(d)};
}

MatZ mat_mul(const MatZ &x, const MatZ &y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
          x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

MatZ mat_inv(const MatZ &x) { return {x.d, -x.b, -x.c, x.a}; }

MatZ word_to_matrix(const Word &w) {
  MatZ m = MatZ::identity();
  for (const auto &f : w.factors()) {
    bigint k = f.exp;
    // L^k = (1 0; k 1), R^k = (1 k; 0 1)
    MatZ g = (f.gen == Gen::L) ? MatZ{1, 0, k, 1} : MatZ{1, k, 0, 1};
    m = mat_mul(m, g);
  }
  return m;
}

Word decompose_matrix(const MatZ &m) {
  if (m.a * m.d - m.b * m.c != 1)
    throw Error(errc::invalid_argument, "decompose_matrix: determinant is not 1");

  // Maintain m = word_to_matrix(prefix) * rem; column-reduce rem until c = 0.
  Word prefix;
  MatZ rem = m;
  while (rem.c != 0) {
    if (rem.a == 0) {
      // det forces c = +-1; one R-step makes a = 1
      bigint q = -rem.c;
      prefix = prefix * Word::R(to_exponent(q));
      rem.a -= q * rem.c;
      rem.b -= q * rem.d;
    } else if (abs(rem.a) > abs(rem.c)) {
      bigint q = round_div(rem.a, rem.c);
      prefix = prefix * Word::R(to_exponent(q));
      rem.a -= q * rem.c;
      rem.b -= q * rem.d;
    } else {
      bigint q = round_div(rem.c, rem.a);
      prefix = prefix * Word::L(to_exponent(q));
      rem.c -= q * rem.a;
      rem.d -= q * rem.b;
    }
  }
  // rem = (±1 b; 0 ±1)
  if (rem.a == 1)
    return prefix * Word::R(to_exponent(rem.b));
  return prefix * word_minus_one() * Word::R(to_exponent(-rem.b));
}

} // namespace sl2z
