#pragma once

#include <vector>

#include "icher/pbw.hpp"

namespace icher {

// A positive root of the extended system: either a gl_n root e_i* - e_j*
// (i < j, negative generator e_ji) or a V-weight e_k* (negative generator x_k).
struct PosRoot {
  bool is_gl;
  int i = 0;  // gl: i < j; V: index k stored in i
  int j = 0;

  // Root coordinates in the e_ii* basis.
  std::vector<int> coords(int n) const;
};

// gl roots in (i, j) lex order, then V-weights k = 1..n.
std::vector<PosRoot> positive_roots(int n);

// An element of Q+ as user input: nonnegative integer coordinates.
struct QPlusElement {
  std::vector<int> nu;

  explicit QPlusElement(std::vector<int> coords);
  int n() const { return static_cast<int>(nu.size()); }
};

// A partition of nu into positive roots; multiplicities follow the order of
// positive_roots(n).
struct KostantPartition {
  std::vector<int> mult;
};

// All partitions of an arbitrary integer vector (empty when infeasible),
// in a fixed deterministic order. This is the full Kostant partition
// enumeration; negative intermediate coordinates are fine.
std::vector<KostantPartition> kostant_partitions(const std::vector<int>& nu, int n);

// tau(nu) = number of partitions = dim U(n^-)_nu.
long kostant_tau(const std::vector<int>& nu, int n);

// The PBW monomial f^m = x^a e^b corresponding to a partition.
PBWMonomial partition_monomial(const GenOrder& order, const KostantPartition& m, int n);

// The f^m basis of U(n^-)_nu in canonical order.
std::vector<PBWMonomial> weight_space_basis(const GenOrder& order, const std::vector<int>& nu,
                                            int n);

}  // namespace icher
