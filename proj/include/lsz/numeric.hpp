#pragma once

#include <map>
#include <stdexcept>

#include "lsz/basics.hpp"

namespace lsz {

inline constexpr std::int64_t kHomologyPrime = 32003;

Int dot(const IntVec& a, const IntVec& b);

// Exact rank over Q by fraction-free (Bareiss) elimination.
long rank_bareiss(IntMat m);
// Determinant of a square integer matrix, fraction-free.
Int det_bareiss(IntMat m);
// Rank over F_p.
long rank_mod_p(const IntMat& m, std::int64_t p);

// Incremental row space over Q; supports independence and membership tests.
class RowSpaceQ {
 public:
  // Inserts v if independent of the current span; returns true on growth.
  bool insert(std::vector<Rat> v);
  bool contains(std::vector<Rat> v) const;
  long rank() const { return static_cast<long>(rows_.size()); }

 private:
  void reduce(std::vector<Rat>& v) const;
  std::map<std::size_t, std::vector<Rat>> rows_;  // pivot column -> row, pivot entry 1
};

// A finite complex of vector spaces  V_0 <- V_1 <- ... <- V_L.
// boundary[i] maps level i to level i-1 (rows = dims[i-1], cols = dims[i]);
// boundary[0] is unused.
struct GradedComplex {
  std::vector<long> dims;
  std::vector<IntMat> boundary;

  void verify_dd_zero() const;  // throws std::logic_error on violation
  std::vector<long> homology_q() const;
  std::vector<long> homology_mod_p(std::int64_t p) const;
  long euler_dims() const;      // sum (-1)^i dims[i]
};

struct DisjointSets {
  explicit DisjointSets(std::size_t n);
  int find(int a);
  void unite(int a, int b);
  std::vector<int> parent;
};

}  // namespace lsz
