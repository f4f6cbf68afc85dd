#ifndef SL2Z_WORD_HPP
#define SL2Z_WORD_HPP

#include <string>
#include <vector>

#include "sl2z/permutation.hpp"

namespace sl2z {

enum class Gen { L, R };

struct WordFactor {
  Gen gen;
  long long exp;
  friend bool operator==(const WordFactor &, const WordFactor &) = default;
};

// A formal product of powers of L and R, kept in canonical form: no zero
// exponents, adjacent factors use distinct generators.
class Word {
public:
  Word() = default; // empty word

  static Word gen(Gen g, long long exp);
  static Word L(long long exp = 1) { return gen(Gen::L, exp); }
  static Word R(long long exp = 1) { return gen(Gen::R, exp); }

  Word operator*(const Word &rhs) const;
  Word inverse() const;
  Word pow(long long k) const;

  bool empty() const { return factors_.empty(); }
  const std::vector<WordFactor> &factors() const { return factors_; }

  std::string str() const; // e.g. "L^2 R^-1 L"

  friend bool operator==(const Word &, const Word &) = default;

private:
  void append(Gen g, long long exp);
  std::vector<WordFactor> factors_;
};

// The word L R^-1 L (the order-4 element S).
Word word_s();
// The word (L R^-1 L)^2, the fixed spelling of -1.
Word word_minus_one();

// Substitutes sigma_l for L and sigma_r for R and multiplies out.
Permutation evaluate_word(const Word &w, const Permutation &sigma_l,
                          const Permutation &sigma_r);

} // namespace sl2z

#endif
