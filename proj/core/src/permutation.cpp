#include "sl2z/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "sl2z/error.hpp"

namespace sl2z {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty())
    throw Error(errc::invalid_argument, "permutation degree must be >= 1");
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[v])
      throw Error(errc::invalid_argument, "image array is not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  if (degree < 1)
    throw Error(errc::invalid_argument, "permutation degree must be >= 1");
  std::vector<int> im(degree);
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (int x = 0; x < degree(); ++x)
    if (images_[x] != x)
      return false;
  return true;
}

Permutation compose(const Permutation &a, const Permutation &b) {
  if (a.degree() != b.degree())
    throw Error(errc::invalid_argument, "compose: degree mismatch");
  std::vector<int> im(a.degree());
  for (int x = 0; x < a.degree(); ++x)
    im[x] = b[a[x]];
  return Permutation(std::move(im));
}

Permutation inverse(const Permutation &p) {
  std::vector<int> im(p.degree());
  for (int x = 0; x < p.degree(); ++x)
    im[p[x]] = x;
  return Permutation(std::move(im));
}

Permutation power(const Permutation &p, long long k) {
  const int n = p.degree();
  std::vector<int> im(n, -1);
  std::vector<int> cycle;
  for (int start = 0; start < n; ++start) {
    if (im[start] != -1)
      continue;
    cycle.clear();
    for (int x = start; im[x] == -1; x = p[x]) {
      im[x] = -2; // mark visited while collecting the cycle
      cycle.push_back(x);
    }
    const long long len = static_cast<long long>(cycle.size());
    long long shift = k % len;
    if (shift < 0)
      shift += len;
    for (size_t i = 0; i < cycle.size(); ++i)
      im[cycle[i]] = cycle[(i + shift) % cycle.size()];
  }
  return Permutation(std::move(im));
}

long long order(const Permutation &p) {
  long long result = 1;
  for (const auto &cyc : cycles(p))
    result = std::lcm(result, static_cast<long long>(cyc.size()));
  return result;
}

std::vector<std::vector<int>> cycles(const Permutation &p) {
  const int n = p.degree();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < n; ++start) {
    if (seen[start])
      continue;
    std::vector<int> cyc;
    for (int x = start; !seen[x]; x = p[x]) {
      seen[x] = 1;
      cyc.push_back(x);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

bool is_transitive(const std::vector<Permutation> &gens) {
  if (gens.empty())
    throw Error(errc::invalid_argument, "is_transitive: no generators");
  const int n = gens.front().degree();
  std::vector<Permutation> all;
  for (const auto &g : gens) {
    if (g.degree() != n)
      throw Error(errc::invalid_argument, "is_transitive: degree mismatch");
    all.push_back(g);
    all.push_back(inverse(g));
  }
  std::vector<char> seen(n, 0);
  std::queue<int> todo;
  seen[0] = 1;
  todo.push(0);
  int count = 1;
  while (!todo.empty()) {
    int x = todo.front();
    todo.pop();
    for (const auto &g : all) {
      int y = g[x];
      if (!seen[y]) {
        seen[y] = 1;
        ++count;
        todo.push(y);
      }
    }
  }
  return count == n;
}

Permutation quotient_by_involution(const Permutation &p, const Permutation &iota) {
  const int n = p.degree();
  if (iota.degree() != n)
    throw Error(errc::invalid_argument, "quotient_by_involution: degree mismatch");
  if (!compose(iota, iota).is_identity())
    throw Error(errc::invalid_argument, "quotient_by_involution: iota is not an involution");
  if (compose(p, iota) != compose(iota, p))
    throw Error(errc::invalid_argument, "quotient_by_involution: iota does not commute with p");

  // Orbit of x is {x, iota(x)}; label by minimal element, relabel densely.
  std::vector<int> label(n, -1);
  int next = 0;
  for (int x = 0; x < n; ++x) {
    if (std::min(x, iota[x]) == x)
      label[x] = next++;
  }
  for (int x = 0; x < n; ++x)
    if (label[x] == -1)
      label[x] = label[iota[x]];

  std::vector<int> im(next);
  for (int x = 0; x < n; ++x)
    im[label[x]] = label[p[x]];
  return Permutation(std::move(im));
}

} // namespace sl2z
