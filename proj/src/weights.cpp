#include "icher/weights.hpp"

#include <stdexcept>

namespace icher {

std::vector<int> PosRoot::coords(int n) const {
  std::vector<int> c(n, 0);
  if (is_gl) {
    c[i - 1] = 1;
    c[j - 1] = -1;
  } else {
    c[i - 1] = 1;
  }
  return c;
}

std::vector<PosRoot> positive_roots(int n) {
  std::vector<PosRoot> roots;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) roots.push_back({true, i, j});
  for (int k = 1; k <= n; ++k) roots.push_back({false, k, 0});
  return roots;
}

QPlusElement::QPlusElement(std::vector<int> coords) : nu(std::move(coords)) {
  for (int c : nu)
    if (c < 0) throw std::invalid_argument("QPlusElement: negative coordinate");
}

namespace {

// Weight functional psi(mu) = sum (n-i) mu_i; positive on every gl root,
// nonnegative on V-weights, so it bounds gl multiplicities.
long psi(const std::vector<int>& v) {
  long s = 0;
  const int n = static_cast<int>(v.size());
  for (int i = 0; i < n; ++i) s += static_cast<long>(n - 1 - i) * v[i];
  return s;
}

void enumerate(const std::vector<PosRoot>& roots, size_t pos, int n, std::vector<int>& rem,
               std::vector<int>& mult, std::vector<KostantPartition>& out) {
  if (pos == roots.size() - static_cast<size_t>(n)) {
    // Remaining roots are the V-weights e_k*; multiplicities are forced.
    for (int k = 0; k < n; ++k) {
      if (rem[k] < 0) return;
      mult[pos + k] = rem[k];
    }
    out.push_back({mult});
    return;
  }
  const PosRoot& r = roots[pos];
  long bound = psi(rem);
  if (bound < 0) return;
  int weight = r.j - r.i;  // psi of a gl root
  int kmax = static_cast<int>(bound / weight);
  for (int k = 0; k <= kmax; ++k) {
    mult[pos] = k;
    rem[r.i - 1] -= k;
    rem[r.j - 1] += k;
    enumerate(roots, pos + 1, n, rem, mult, out);
    rem[r.i - 1] += k;
    rem[r.j - 1] -= k;
  }
  mult[pos] = 0;
}

}  // namespace

std::vector<KostantPartition> kostant_partitions(const std::vector<int>& nu, int n) {
  if (static_cast<int>(nu.size()) != n)
    throw std::invalid_argument("kostant_partitions: dimension mismatch");
  auto roots = positive_roots(n);
  std::vector<KostantPartition> out;
  std::vector<int> rem = nu;
  std::vector<int> mult(roots.size(), 0);
  enumerate(roots, 0, n, rem, mult, out);
  return out;
}

long kostant_tau(const std::vector<int>& nu, int n) {
  return static_cast<long>(kostant_partitions(nu, n).size());
}

PBWMonomial partition_monomial(const GenOrder& order, const KostantPartition& m, int n) {
  auto roots = positive_roots(n);
  PBWMonomial mono{std::vector<int16_t>(order.count(), 0)};
  for (size_t r = 0; r < roots.size(); ++r) {
    if (m.mult[r] == 0) continue;
    const PosRoot& root = roots[r];
    Generator g = root.is_gl ? Generator::E(root.j, root.i) : Generator::X(root.i);
    mono.exp[order.index(g)] += static_cast<int16_t>(m.mult[r]);
  }
  return mono;
}

std::vector<PBWMonomial> weight_space_basis(const GenOrder& order, const std::vector<int>& nu,
                                            int n) {
  std::vector<PBWMonomial> basis;
  for (const auto& m : kostant_partitions(nu, n)) basis.push_back(partition_monomial(order, m, n));
  return basis;
}

}  // namespace icher
