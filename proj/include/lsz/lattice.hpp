#pragma once

#include <memory>
#include <optional>
#include <stdexcept>

#include "lsz/numeric.hpp"

namespace lsz {

class FiberCache;

// A degree in A = Z^d (+) Z/m_1 (+) ... (+) Z/m_r. Torsion residues are kept
// in canonical range [0, m_j).
struct Degree {
  IntVec free;
  IntVec torsion;
  bool operator==(const Degree&) const = default;
};

// Shape-lexicographic order; usable as a map key independent of any grading.
bool lex_less(const Degree& a, const Degree& b);
struct DegreeLexLess {
  bool operator()(const Degree& a, const Degree& b) const { return lex_less(a, b); }
};

struct LatticePresentation {
  long n = 0;
  IntMat basis;  // rows span L in Z^n; may be empty for L = {0}
};

struct NotPointed : std::runtime_error {
  NotPointed(std::string msg, IntVec cert)
      : std::runtime_error(std::move(msg)), certificate(std::move(cert)) {}
  IntVec certificate;  // nonzero u in N^n of degree 0
};

struct DependentBasis : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Smith normal form U*M*V = diag(d_1..d_r) with U, V unimodular and
// d_1 | d_2 | ... | d_r > 0.
struct SmithNF {
  IntMat u, v;
  IntVec diag;
  long rank = 0;
};
SmithNF smith_normal_form(IntMat m);

// Gordan dichotomy for the free parts of the generator degrees: either a
// rational y with y.a_i > 0 for all i, or a nonzero u in N^n whose free-part
// degree vanishes.
struct Pointedness {
  std::optional<std::vector<Rat>> y;
  IntVec gordan;  // set when y is absent
};
Pointedness pointedness_certificate(const std::vector<IntVec>& free_columns);

// The grading u |-> sum u_i a_i realizing Z^n / L together with a strictly
// positive functional on the free part. Immutable; cheap to copy (the fiber
// memo is shared between copies).
class GradingMap {
 public:
  long n() const { return n_; }
  long free_rank() const { return free_rank_; }
  const IntVec& torsion_moduli() const { return moduli_; }
  const std::vector<Degree>& generator_degrees() const { return columns_; }
  const std::vector<Rat>& y() const { return y_; }
  const IntVec& y_scaled() const { return y_scaled_; }
  const IntVec& weights() const { return weights_; }  // y_scaled . a_i, all > 0
  bool is_trivial_lattice() const;                    // L = {0}

  Degree zero() const;
  Degree degree_of(const Expo& u) const;
  Degree add(const Degree& a, const Degree& b) const;
  Degree sub(const Degree& a, const Degree& b) const;
  Int yval(const Degree& d) const;
  // (yval, free lex, torsion lex); the order used for all report output.
  bool degree_less(const Degree& a, const Degree& b) const;

  FiberCache& fibers() const { return *cache_; }

  static GradingMap from_columns(long n, std::vector<IntVec> free_columns);

  friend GradingMap smith_presentation(const LatticePresentation& lat);

 private:
  GradingMap() = default;
  void finalize();  // runs the pointedness LP, derives weights, makes cache

  long n_ = 0;
  long free_rank_ = 0;
  IntVec moduli_;
  std::vector<Degree> columns_;
  std::vector<Rat> y_;
  IntVec y_scaled_;
  IntVec weights_;
  std::shared_ptr<FiberCache> cache_;
};

GradingMap smith_presentation(const LatticePresentation& lat);

// True iff b - c lies in the semigroup; decided by fiber enumeration
// (definition in fibers.cpp).
bool leq(const Degree& c, const Degree& b, const GradingMap& g);

}  // namespace lsz
