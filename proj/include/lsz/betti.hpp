#pragma once

#include "lsz/complexes.hpp"

namespace lsz {

enum class BettiSource { GcdComplex, TorOracle };

struct BettiEntry {
  long i = 0;
  Degree b;
  long value = 0;
  bool operator==(const BettiEntry&) const = default;
};

// Multigraded Betti table of R/I_L up to a y-degree bound. Zero entries are
// omitted; entries are sorted by (i, yval, free lex, torsion lex).
struct BettiTable {
  std::vector<BettiEntry> entries;
  Rat bound;
  BettiSource source = BettiSource::GcdComplex;
  std::vector<std::string> warnings;

  long value_at(long i, const Degree& b) const;
  std::vector<Degree> degrees_at(long i) const;
  long max_index() const;
};

// beta_{i,b} = dim ~H_{i-1} of the gcd complex for i >= 1. The shift is
// frozen against the Tor oracle (see tests); homology is evaluated on
// build_delta_b, which has the same homology.
inline constexpr long kGcdHomologyShift = 1;

BettiTable betti_via_gcd(const GradingMap& g, const Rat& bound);

// Independent route: the degree-b piece of the Koszul complex on the
// variables tensored with R/I_L; one basis vector per subset J with
// C_{b - deg x^J} nonempty, differentials +-1.
BettiTable tor_oracle(const GradingMap& g, const Rat& bound);

// The Koszul-on-variables piece in one degree, exposed for verification.
GradedComplex koszul_variable_piece(const Degree& b, const GradingMap& g);

struct DegreeClassification {
  struct Item {
    long i = 0;
    Degree b;
    bool is_betti = false;
    bool is_minimal = false;
  };
  std::vector<Item> items;
  const Item* find(long i, const Degree& b) const;
};

// Marks the minimal elements of each i-Betti degree set under the semigroup
// partial order.
DegreeClassification classify_degrees(const BettiTable& t, const GradingMap& g);

// Entry-for-entry comparison; on mismatch writes the first differing (i, b).
bool same_entries(const BettiTable& a, const BettiTable& b, std::string* first_diff);

}  // namespace lsz
