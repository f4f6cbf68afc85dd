#include "sl2z/word.hpp"

#include "sl2z/error.hpp"

namespace sl2z {

void Word::append(Gen g, long long exp) {
  if (exp == 0)
    return;
  if (!factors_.empty() && factors_.back().gen == g) {
    factors_.back().exp += exp;
    if (factors_.back().exp == 0)
      factors_.pop_back();
    return;
  }
  factors_.push_back({g, exp});
}

Word Word::gen(Gen g, long long exp) {
  Word w;
  w.append(g, exp);
  return w;
}

Word Word::operator*(const Word &rhs) const {
  Word w = *this;
  for (const auto &f : rhs.factors_)
    w.append(f.gen, f.exp);
  return w;
}

Word Word::inverse() const {
  Word w;
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it)
    w.append(it->gen, -it->exp);
  return w;
}

Word Word::pow(long long k) const {
  if (k < 0)
    return inverse().pow(-k);
  Word w;
  for (long long i = 0; i < k; ++i)
    w = w * *this;
  return w;
}

std::string Word::str() const {
  if (factors_.empty())
    return "1";
  std::string out;
  for (const auto &f : factors_) {
    if (!out.empty())
      out += ' ';
    out += (f.gen == Gen::L) ? 'L' : 'R';
    if (f.exp != 1)
      out += "^" + std::to_string(f.exp);
  }
  return out;
}

Word word_s() { return Word::L() * Word::R(-1) * Word::L(); }

Word word_minus_one() { return word_s().pow(2); }

Permutation evaluate_word(const Word &w, const Permutation &sigma_l,
                          const Permutation &sigma_r) {
  if (sigma_l.degree() != sigma_r.degree())
    throw Error(errc::invalid_argument, "evaluate_word: degree mismatch");
  Permutation acc = Permutation::identity(sigma_l.degree());
  for (const auto &f : w.factors()) {
    const Permutation &base = (f.gen == Gen::L) ? sigma_l : sigma_r;
    acc = compose(acc, power(base, f.exp));
  }
  return acc;
}

} // namespace sl2z
