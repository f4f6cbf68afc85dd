#include "sl2z/subgroup.hpp"

#include <queue>

#include "sl2z/error.hpp"

namespace sl2z {

SubgroupRep::SubgroupRep(Permutation sigma_l, Permutation sigma_r, Permutation sigma_s)
    : sigma_l_(std::move(sigma_l)), sigma_r_(std::move(sigma_r)),
      sigma_s_(std::move(sigma_s)) {}

SubgroupRep SubgroupRep::validate(Permutation sigma_l, Permutation sigma_r) {
  if (sigma_l.degree() != sigma_r.degree())
    throw Error(errc::invalid_argument, "validate: degree mismatch");
  if (!is_transitive({sigma_l, sigma_r}))
    throw Error(errc::not_transitive, "NotTransitive: the pair has several orbits");

  Permutation sigma_s = evaluate_word(word_s(), sigma_l, sigma_r);
  if (power(sigma_s, 2) != power(compose(sigma_s, sigma_r), 3))
    throw Error(errc::bad_amalgam, "BadAmalgam: S^2 != (S R)^3");
  if (!power(sigma_s, 4).is_identity())
    throw Error(errc::bad_order4, "BadOrder4: S^4 != identity");
  // The relations above present SL2(Z) on the generators S and R; this last
  // check ties sigma_l to the matrix identity L = S R^-1 S^-1, making the
  // pair a genuine SL2(Z)-action.
  if (compose(compose(sigma_s, inverse(sigma_r)), inverse(sigma_s)) != sigma_l)
    throw Error(errc::bad_conjugation, "BadConjugation: L != S R^-1 S^-1");

  return SubgroupRep(std::move(sigma_l), std::move(sigma_r), std::move(sigma_s));
}

bool is_even(const SubgroupRep &g) { return power(g.sigma_s(), 2).is_identity(); }

Permutation minus_one(const SubgroupRep &g) { return power(g.sigma_s(), 2); }

CuspData cusp_data(const SubgroupRep &g) {
  Permutation rbar = quotient_by_involution(g.sigma_r(), minus_one(g));
  CuspData out;
  for (const auto &cyc : cycles(rbar))
    out.widths.push_back(static_cast<int>(cyc.size()));
  out.d = order(rbar);
  out.even = is_even(g);
  return out;
}

bool contains_word(const SubgroupRep &g, const Word &w) {
  return evaluate_word(w, g.sigma_l(), g.sigma_r())[0] == 0;
}

bool contains_matrix(const SubgroupRep &g, const MatZ &m) {
  return contains_word(g, decompose_matrix(m));
}

namespace {

// Relabels so that BFS discovery order from `start` (L-edge before R-edge)
// becomes 0,1,2,...
SubgroupRep relabel_from(const SubgroupRep &g, int start) {
  const int n = g.degree();
  std::vector<int> label(n, -1);
  std::queue<int> todo;
  label[start] = 0;
  int next = 1;
  todo.push(start);
  while (!todo.empty()) {
    int p = todo.front();
    todo.pop();
    for (const Permutation *sigma : {&g.sigma_l(), &g.sigma_r()}) {
      int q = (*sigma)[p];
      if (label[q] == -1) {
        label[q] = next++;
        todo.push(q);
      }
    }
  }
  std::vector<int> im_l(n), im_r(n);
  for (int p = 0; p < n; ++p) {
    im_l[label[p]] = label[g.sigma_l()[p]];
    im_r[label[p]] = label[g.sigma_r()[p]];
  }
  return SubgroupRep::validate(Permutation(std::move(im_l)), Permutation(std::move(im_r)));
}

} // namespace

SubgroupRep canonicalize(const SubgroupRep &g) { return relabel_from(g, 0); }

SubgroupRep intersect(const SubgroupRep &g1, const SubgroupRep &g2) {
  const int n1 = g1.degree(), n2 = g2.degree();
  // BFS over the orbit of (0,0) in the product action.
  std::vector<int> index(static_cast<size_t>(n1) * n2, -1);
  std::vector<std::pair<int, int>> points;
  auto discover = [&](int i, int j) {
    int &slot = index[static_cast<size_t>(i) * n2 + j];
    if (slot == -1) {
      slot = static_cast<int>(points.size());
      points.emplace_back(i, j);
    }
    return slot;
  };
  discover(0, 0);
  for (size_t k = 0; k < points.size(); ++k) {
    auto [i, j] = points[k];
    discover(g1.sigma_l()[i], g2.sigma_l()[j]);
    discover(g1.sigma_r()[i], g2.sigma_r()[j]);
  }
  const int n = static_cast<int>(points.size());
  std::vector<int> im_l(n), im_r(n);
  for (int k = 0; k < n; ++k) {
    auto [i, j] = points[k];
    im_l[k] = index[static_cast<size_t>(g1.sigma_l()[i]) * n2 + g2.sigma_l()[j]];
    im_r[k] = index[static_cast<size_t>(g1.sigma_r()[i]) * n2 + g2.sigma_r()[j]];
  }
  return canonicalize(
      SubgroupRep::validate(Permutation(std::move(im_l)), Permutation(std::move(im_r))));
}

SubgroupRep conjugate_by_word(const SubgroupRep &g, const Word &w) {
  int base = evaluate_word(w, g.sigma_l(), g.sigma_r())[0];
  return relabel_from(g, base);
}

} // namespace sl2z
