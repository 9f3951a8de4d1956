#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "qmatch/common.hpp"

namespace qmatch {

// Bijection on {0..n-1}; map(i) is the image of i. As a 0/1 matrix the entry
// (map(i), i) is 1, i.e. columns index sources and rows index targets.
class Permutation {
 public:
  explicit Permutation(std::vector<int> map);

  static Permutation identity(int n);
  static Permutation random(int n, Rng& rng);

  int size() const { return static_cast<int>(map_.size()); }
  int operator()(int i) const { return map_[i]; }
  const std::vector<int>& map() const { return map_; }

  Permutation inverse() const;
  bool is_identity() const;
  bool is_involution() const;

  // Disjoint-cycle decomposition; fixed points are omitted. Each cycle is
  // listed starting from its smallest element, cycles ordered by that element.
  std::vector<std::vector<int>> cycles() const;

  bool operator==(const Permutation& o) const = default;

 private:
  std::vector<int> map_;
};

// q after r: result(i) = q(r(i)).
Permutation compose(const Permutation& q, const Permutation& r);

// Ordered sequence of >= 2 distinct indices; (i1 i2 ... ik) maps i1->i2,
// ..., ik->i1.
using Cycle = std::vector<int>;

// Pairwise-disjoint cycles over an ambient index set of size n.
class CycleSet {
 public:
  CycleSet(std::vector<Cycle> cycles, int n);

  int size() const { return static_cast<int>(cycles_.size()); }
  int ambient() const { return n_; }
  const std::vector<Cycle>& cycles() const { return cycles_; }
  const Cycle& operator[](int i) const { return cycles_[i]; }

 private:
  std::vector<Cycle> cycles_;
  int n_ = 0;
};

// (prod_i c_i^{alpha_i}) p0, cycles applied to the target side.
Permutation apply_cycles(const CycleSet& cycles, std::span<const uint8_t> alpha,
                         const Permutation& p0);

// Sparse n x n match matrix; entries are (target row, source column, weight).
class SparseMatchMatrix {
 public:
  struct Entry {
    int row;
    int col;
    double w;
  };

  SparseMatchMatrix(std::vector<Entry> entries, int n);

  static SparseMatchMatrix from_permutation(const Permutation& p);

  int ambient() const { return n_; }
  const std::vector<Entry>& entries() const { return entries_; }

 private:
  std::vector<Entry> entries_;
  int n_ = 0;
};

// (c - I) P0 as a sparse matrix: 2k nonzeros for a k-cycle.
SparseMatchMatrix cycle_to_sparse_delta(const Cycle& c, const Permutation& p0);

// Splits p into involutions (Q, R) with compose(Q, R) == p. Each cycle
// (e_1 .. e_k) of p contributes the reflections t -> 2-t and t -> 3-t of its
// position indices mod k, which are involutions whose product is the cycle.
std::pair<Permutation, Permutation> decompose_involutions(const Permutation& p);

}  // namespace qmatch
