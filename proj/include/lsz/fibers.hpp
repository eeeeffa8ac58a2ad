#pragma once

#include <map>
#include <shared_mutex>

#include "lsz/lattice.hpp"

namespace lsz {

// The fiber C_b: all monomials of degree b, lexicographically ascending.
// The first entry is the canonical representative.
struct Fiber {
  Degree degree;
  std::vector<Expo> monomials;
  bool empty() const { return monomials.empty(); }
  std::size_t size() const { return monomials.size(); }
};

// Memo shared by all copies of one GradingMap. Inserts are idempotent;
// concurrent readers and writers are safe.
class FiberCache {
 public:
  std::shared_ptr<const Fiber> get(const Degree& b) const;
  std::shared_ptr<const Fiber> put(Fiber f);
  std::optional<bool> known_nonempty(const Degree& b) const;
  void remember_nonempty(const Degree& b, bool v);

 private:
  mutable std::shared_mutex mu_;
  std::map<Degree, std::shared_ptr<const Fiber>, DegreeLexLess> fibers_;
  std::map<Degree, bool, DegreeLexLess> nonempty_;
};

Fiber enumerate_fiber_uncached(const Degree& b, const GradingMap& g);
// Memoized via g.fibers(); the reference lives as long as g's cache.
const Fiber& enumerate_fiber(const Degree& b, const GradingMap& g);
// May stop at the first solution found.
bool fiber_nonempty(const Degree& b, const GradingMap& g);

// All degrees realized by some monomial with y-value <= bound, sorted by
// (y-value, free lex, torsion lex).
std::vector<Degree> degrees_up_to(const Rat& bound, const GradingMap& g);

}  // namespace lsz
