#include "lsz/betti.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

namespace lsz {

namespace {

void sort_entries(std::vector<BettiEntry>& entries, const GradingMap& g) {
  std::sort(entries.begin(), entries.end(), [&](const BettiEntry& a, const BettiEntry& b) {
    if (a.i != b.i) return a.i < b.i;
    return g.degree_less(a.b, b.b);
  });
}

// Bound-edge heuristic: a nonzero entry within one generator step of the
// bound means higher Betti degrees may exist beyond the scan.
void add_bound_warning(BettiTable& t, const GradingMap& g) {
  Int step = 0;
  for (const Int& w : g.weights()) step = std::max(step, w);
  long near = 0;
  Int worst = 0;
  for (const auto& e : t.entries) {
    if (e.i == 0) continue;
    const Int yv = g.yval(e.b);
    if (Rat(yv) > t.bound - Rat(step)) {
      ++near;
      worst = std::max(worst, yv);
    }
  }
  if (near > 0) {
    std::ostringstream os;
    os << "BoundTooSmallWarning: " << near << " nonzero entr" << (near == 1 ? "y" : "ies")
       << " within one generator step (" << step << ") of the bound "
       << Rat(t.bound).str() << "; the scan may be incomplete";
    t.warnings.push_back(os.str());
  }
}

}  // namespace

long BettiTable::value_at(long i, const Degree& b) const {
  for (const auto& e : entries)
    if (e.i == i && e.b == b) return e.value;
  return 0;
}

std::vector<Degree> BettiTable::degrees_at(long i) const {
  std::vector<Degree> out;
  for (const auto& e : entries)
    if (e.i == i) out.push_back(e.b);
  return out;
}

long BettiTable::max_index() const {
  long m = 0;
  for (const auto& e : entries) m = std::max(m, e.i);
  return m;
}

BettiTable betti_via_gcd(const GradingMap& g, const Rat& bound) {
  BettiTable t;
  t.bound = bound;
  t.source = BettiSource::GcdComplex;
  t.entries.push_back(BettiEntry{0, g.zero(), 1});
  if (g.is_trivial_lattice()) return t;  // R/I_L is free

  std::vector<Degree> degs = degrees_up_to(bound, g);
  std::erase(degs, g.zero());
  std::vector<std::vector<BettiEntry>> slots(degs.size());
  parallel_for(degs.size(), [&](std::size_t k) {
    const Fiber& f = enumerate_fiber(degs[k], g);
    const HomologyProfile h = reduced_homology(build_delta_b(f));
    for (std::size_t r = 0; r < h.dims.size(); ++r)
      if (h.dims[r] > 0)
        slots[k].push_back(BettiEntry{static_cast<long>(r) + kGcdHomologyShift, degs[k], h.dims[r]});
  });
  for (auto& s : slots)
    t.entries.insert(t.entries.end(), s.begin(), s.end());
  sort_entries(t.entries, g);
  add_bound_warning(t, g);
  return t;
}

GradedComplex koszul_variable_piece(const Degree& b, const GradingMap& g) {
  const long n = g.n();
  if (n > 20) throw std::invalid_argument("Koszul-on-variables oracle supports n <= 20");
  const std::size_t masks = std::size_t{1} << n;

  // degree of x^J per subset, built from the lowest set bit
  std::vector<Degree> degJ(masks, g.zero());
  for (std::size_t m = 1; m < masks; ++m) {
    const int low = static_cast<int>(std::countr_zero(m));
    degJ[m] = g.add(degJ[m & (m - 1)], g.generator_degrees()[low]);
  }
  std::vector<long> idx(masks, -1);
  std::vector<std::vector<std::size_t>> level(n + 1);
  for (std::size_t m = 0; m < masks; ++m) {
    if (!fiber_nonempty(g.sub(b, degJ[m]), g)) continue;
    const int pc = static_cast<int>(std::popcount(m));
    idx[m] = static_cast<long>(level[pc].size());
    level[pc].push_back(m);
  }

  GradedComplex piece;
  piece.dims.resize(n + 1);
  piece.boundary.resize(n + 1);
  for (long t = 0; t <= n; ++t) piece.dims[t] = static_cast<long>(level[t].size());
  for (long t = 1; t <= n; ++t) {
    IntMat m(piece.dims[t - 1], IntVec(piece.dims[t], 0));
    for (long j = 0; j < piece.dims[t]; ++j) {
      const std::size_t mask = level[t][j];
      int pos = 0;
      for (int v = 0; v < n; ++v) {
        if (!(mask & (std::size_t{1} << v))) continue;
        ++pos;  // v is the pos-th smallest member of J
        const std::size_t sub = mask ^ (std::size_t{1} << v);
        if (idx[sub] < 0)
          throw std::logic_error("Koszul oracle: nonempty fiber lost a generator multiple");
        m[idx[sub]][j] = (pos % 2 == 1) ? 1 : -1;
      }
    }
    piece.boundary[t] = std::move(m);
  }
  piece.verify_dd_zero();
  return piece;
}

BettiTable tor_oracle(const GradingMap& g, const Rat& bound) {
  BettiTable t;
  t.bound = bound;
  t.source = BettiSource::TorOracle;
  if (g.is_trivial_lattice()) {
    t.entries.push_back(BettiEntry{0, g.zero(), 1});
    return t;
  }
  const std::vector<Degree> degs = degrees_up_to(bound, g);
  std::vector<std::vector<BettiEntry>> slots(degs.size());
  parallel_for(degs.size(), [&](std::size_t k) {
    const GradedComplex piece = koszul_variable_piece(degs[k], g);
    const std::vector<long> h = piece.homology_q();
    for (std::size_t i = 0; i < h.size(); ++i)
      if (h[i] > 0) slots[k].push_back(BettiEntry{static_cast<long>(i), degs[k], h[i]});
  });
  for (auto& s : slots)
    t.entries.insert(t.entries.end(), s.begin(), s.end());
  sort_entries(t.entries, g);
  return t;
}

DegreeClassification classify_degrees(const BettiTable& t, const GradingMap& g) {
  DegreeClassification c;
  std::map<long, std::vector<Degree>> by_index;
  for (const auto& e : t.entries) by_index[e.i].push_back(e.b);
  for (const auto& e : t.entries) {
    bool minimal = true;
    for (const Degree& other : by_index[e.i]) {
      if (other == e.b) continue;
      if (leq(other, e.b, g)) {
        minimal = false;
        break;
      }
    }
    c.items.push_back(DegreeClassification::Item{e.i, e.b, true, minimal});
  }
  return c;
}

const DegreeClassification::Item* DegreeClassification::find(long i, const Degree& b) const {
  for (const auto& item : items)
    if (item.i == i && item.b == b) return &item;
  return nullptr;
}

bool same_entries(const BettiTable& a, const BettiTable& b, std::string* first_diff) {
  const std::size_t len = std::max(a.entries.size(), b.entries.size());
  for (std::size_t k = 0; k < len; ++k) {
    const BettiEntry* ea = k < a.entries.size() ? &a.entries[k] : nullptr;
    const BettiEntry* eb = k < b.entries.size() ? &b.entries[k] : nullptr;
    if (ea && eb && *ea == *eb) continue;
    if (first_diff) {
      std::ostringstream os;
      auto show = [&os](const BettiEntry* e) {
        if (!e) {
          os << "(absent)";
          return;
        }
        os << "(i=" << e->i << ", b=[";
        for (std::size_t j = 0; j < e->b.free.size(); ++j)
          os << (j ? "," : "") << e->b.free[j];
        for (const Int& r : e->b.torsion) os << ";" << r;
        os << "], value=" << e->value << ")";
      };
      os << "first differing entry: ";
      show(ea);
      os << " vs ";
      show(eb);
      *first_diff = os.str();
    }
    return false;
  }
  return true;
}

}  // namespace lsz
