#pragma once

#include <random>
#include <set>

#include "lsz/betti.hpp"
#include "lsz/syzygy.hpp"

namespace lsz::testing {

// ---- independent oracles -------------------------------------------------

// Brute-force fiber: every u with total exponent at most ceil(y.b / min w_i),
// filtered by degree. Independent of the pruned DFS in the library.
inline std::vector<Expo> bruteforce_fiber(const Degree& b, const GradingMap& g) {
  std::vector<Expo> out;
  const Int yb = g.yval(b);
  if (yb < 0) return out;
  Int minw = g.weights()[0];
  for (const Int& w : g.weights()) minw = std::min(minw, w);
  const Int cap = (yb + minw - 1) / minw;
  const std::int64_t total_cap = cap.convert_to<std::int64_t>();
  const long n = g.n();
  Expo u(n, 0);
  std::function<void(long, std::int64_t)> rec = [&](long i, std::int64_t left) {
    if (i == n) {
      if (g.degree_of(u) == b) out.push_back(u);
      return;
    }
    for (std::int64_t e = 0; e <= left; ++e) {
      u[i] = e;
      rec(i + 1, left - e);
    }
    u[i] = 0;
  };
  rec(0, total_cap);
  std::sort(out.begin(), out.end());
  return out;
}

// All realized degrees up to the bound, by exhaustive monomial enumeration.
inline std::vector<Degree> bruteforce_degrees(const Rat& bound, const GradingMap& g) {
  std::set<Degree, DegreeLexLess> seen;
  const long n = g.n();
  Expo u(n, 0);
  std::function<void(long, Rat)> rec = [&](long i, Rat left) {
    if (i == n) {
      seen.insert(g.degree_of(u));
      return;
    }
    const Rat w{g.weights()[i]};
    for (std::int64_t e = 0; Rat(e) * w <= left; ++e) {
      u[i] = e;
      rec(i + 1, left - Rat(e) * w);
    }
    u[i] = 0;
  };
  rec(0, bound);
  std::vector<Degree> degs(seen.begin(), seen.end());
  std::sort(degs.begin(), degs.end(),
            [&](const Degree& a, const Degree& b) { return g.degree_less(a, b); });
  return degs;
}

// ---- randomized instances -------------------------------------------------

inline std::int64_t rand_in(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// Random pointed grading by columns: n <= 5, entries in [-1, 4] (retrying
// until pointed), occasionally plain nonnegative columns.
inline GradingMap random_column_grading(std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    const long n = rand_in(rng, 2, 5);
    const long d = rand_in(rng, 1, 3);
    const bool allow_negative = attempt < 32 && (rng() % 3 == 0);
    std::vector<IntVec> cols;
    bool zero_col = false;
    for (long i = 0; i < n; ++i) {
      IntVec c;
      bool nonzero = false;
      for (long j = 0; j < d; ++j) {
        const std::int64_t lo = allow_negative ? -1 : 0;
        const std::int64_t v = rand_in(rng, lo, 4);
        nonzero = nonzero || v != 0;
        c.push_back(v);
      }
      zero_col = zero_col || !nonzero;
      cols.push_back(std::move(c));
    }
    if (zero_col) continue;
    try {
      return GradingMap::from_columns(n, cols);
    } catch (const NotPointed&) {
      continue;
    }
  }
  return GradingMap::from_columns(3, {{1}, {1}, {1}});
}

// Random pointed grading via a lattice basis, exercising Smith presentation
// and torsion.
inline GradingMap random_lattice_grading(std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 128; ++attempt) {
    const long n = rand_in(rng, 2, 5);
    const long k = rand_in(rng, 1, n - 1);
    IntMat basis;
    for (long r = 0; r < k; ++r) {
      IntVec row;
      for (long j = 0; j < n; ++j) row.push_back(rand_in(rng, -3, 3));
      basis.push_back(std::move(row));
    }
    try {
      return smith_presentation(LatticePresentation{n, basis});
    } catch (const NotPointed&) {
    } catch (const DependentBasis&) {
    }
  }
  return smith_presentation(LatticePresentation{3, {{1, -1, 0}, {0, 1, -1}}});
}

// ---- data helpers ----------------------------------------------------------

inline std::string data_path(const std::string& file) {
  return std::string(LSZ_DATA_DIR) + "/" + file;
}

inline GradingMap example_semigroup() {
  return GradingMap::from_columns(4, {{4, 0}, {3, 1}, {1, 3}, {0, 4}});
}

inline GradingMap total_degree_example() {
  return smith_presentation(LatticePresentation{3, {{1, -1, 0}, {0, 1, -1}}});
}

inline GradingMap twisted_cubic() {
  return GradingMap::from_columns(4, {{3, 0}, {2, 1}, {1, 2}, {0, 3}});
}

inline GradingMap torsion_example() {
  return smith_presentation(LatticePresentation{2, {{2, -2}}});
}

inline GradingMap ci_incomparable() {
  return smith_presentation(
      LatticePresentation{6, {{2, -1, -1, 0, 0, 0}, {0, 0, 0, 2, -1, -1}}});
}

inline Degree deg_of(const GradingMap& g, const Expo& u) { return g.degree_of(u); }

// Partition of C_b induced by the gcd complex, as monomial lists.
inline std::vector<std::vector<Expo>> gcd_partition(const Degree& b, const GradingMap& g) {
  const Fiber& f = enumerate_fiber(b, g);
  std::vector<std::vector<Expo>> parts;
  for (const auto& comp : components(build_gcd_complex(f))) {
    std::vector<Expo> part;
    for (int v : comp) part.push_back(f.monomials[v]);
    parts.push_back(std::move(part));
  }
  return parts;
}

}  // namespace lsz::testing
