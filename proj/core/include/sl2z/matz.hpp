#ifndef SL2Z_MATZ_HPP
#define SL2Z_MATZ_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include "sl2z/word.hpp"

namespace sl2z {

using bigint = boost::multiprecision::cpp_int;

// 2x2 integer matrix (a b; c d) with determinant exactly 1.
struct MatZ {
  bigint a, b, c, d;

  // Throws Error(invalid_argument) unless ad - bc = 1.
  static MatZ make(bigint a, bigint b, bigint c, bigint d);

  static MatZ identity() { return {1, 0, 0, 1}; }
  static MatZ minus_identity() { return {-1, 0, 0, -1}; }
  static MatZ gen_l() { return {1, 0, 1, 1}; } // L = (1 0; 1 1)
  static MatZ gen_r() { return {1, 1, 0, 1}; } // R = (1 1; 0 1)

  friend bool operator==(const MatZ &, const MatZ &) = default;
};

MatZ mat_mul(const MatZ &x, const MatZ &y);
MatZ mat_inv(const MatZ &x);

// Multiplies out a word over the integer matrices L and R.
MatZ word_to_matrix(const Word &w);

// Euclidean decomposition: returns a word whose matrix product is exactly m,
// sign included; -1 is spelled (L R^-1 L)^2.
Word decompose_matrix(const MatZ &m);

} // namespace sl2z

#endif
