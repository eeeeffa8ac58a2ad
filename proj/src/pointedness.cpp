#include <cassert>

#include "lsz/lattice.hpp"

namespace lsz {

namespace {

// Dense exact-rational simplex tableau with Bland's rule. Constraints are
// kept in canonical form (basic columns are unit columns); an objective row
// of reduced costs is eliminated alongside.
struct Tableau {
  std::vector<std::vector<Rat>> t;  // rows x (cols + 1), last column = rhs
  std::vector<Rat> obj;             // reduced costs + objective value slot
  std::vector<long> basis;          // basic column per row
  long rows, cols;

  Tableau(long r, long c) : t(r, std::vector<Rat>(c + 1, 0)), obj(c + 1, 0), basis(r, -1), rows(r), cols(c) {}

  void set_costs(const std::vector<Rat>& c) {
    for (long j = 0; j <= cols; ++j) obj[j] = j < cols ? c[j] : Rat(0);
    for (long i = 0; i < rows; ++i) {
      const Rat cb = c[basis[i]];
      if (cb == 0) continue;
      for (long j = 0; j <= cols; ++j) obj[j] -= cb * t[i][j];
    }
  }

  void pivot(long row, long col) {
    const Rat p = t[row][col];
    for (long j = 0; j <= cols; ++j) t[row][j] /= p;
    for (long i = 0; i < rows; ++i) {
      if (i == row || t[i][col] == 0) continue;
      const Rat f = t[i][col];
      for (long j = 0; j <= cols; ++j) t[i][j] -= f * t[row][j];
    }
    if (obj[col] != 0) {
      const Rat f = obj[col];
      for (long j = 0; j <= cols; ++j) obj[j] -= f * t[row][j];
    }
    basis[row] = col;
  }

  // Bland: entering = smallest-index negative reduced cost; leaving by the
  // minimum ratio, ties broken by smallest basic index. Enterable columns are
  // restricted to [0, limit).
  void optimize(long limit) {
    for (;;) {
      long enter = -1;
      for (long j = 0; j < limit; ++j)
        if (obj[j] < 0) {
          enter = j;
          break;
        }
      if (enter < 0) return;
      long leave = -1;
      Rat best;
      for (long i = 0; i < rows; ++i) {
        if (t[i][enter] <= 0) continue;
        Rat ratio = t[i][cols] / t[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          best = ratio;
          leave = i;
        }
      }
      if (leave < 0) throw std::logic_error("pointedness LP: unbounded direction");
      pivot(leave, enter);
    }
  }

  Rat value() const { return -obj[cols]; }

  Rat var_value(long col) const {
    for (long i = 0; i < rows; ++i)
      if (basis[i] == col) return t[i][cols];
    return 0;
  }
};

IntVec primitive_integer(const std::vector<Rat>& v) {
  Int denom_lcm = 1;
  for (const Rat& q : v) {
    Int den = boost::multiprecision::denominator(q);
    denom_lcm = denom_lcm / boost::multiprecision::gcd(denom_lcm, den) * den;
  }
  IntVec r(v.size());
  Int g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Rat scaled = v[i] * denom_lcm;
    r[i] = boost::multiprecision::numerator(scaled);
    g = boost::multiprecision::gcd(g, r[i]);
  }
  if (g > 1)
    for (Int& x : r) x /= g;
  return r;
}

}  // namespace

// Feasibility of { y : a_i . y >= 1 } decided by two-phase exact simplex on
//   A^T(y+ - y-) - s + z = 1,  y+, y-, s, z >= 0.
// Infeasibility yields the Farkas/Gordan vector u >= 0 with sum u_i a_i = 0
// read off the surplus-column reduced costs; feasibility proceeds to phase
// two, minimizing sum s_i, which lands on the most balanced functional.
Pointedness pointedness_certificate(const std::vector<IntVec>& free_columns) {
  const long n = static_cast<long>(free_columns.size());
  const long d = n ? static_cast<long>(free_columns[0].size()) : 0;
  if (n == 0) return Pointedness{std::vector<Rat>(d, Rat(1)), {}};

  const long yplus = 0, yminus = d, scol = 2 * d, zcol = 2 * d + n;
  const long cols = 2 * d + 2 * n;
  Tableau tab(n, cols);
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < d; ++j) {
      tab.t[i][yplus + j] = Rat(free_columns[i][j]);
      tab.t[i][yminus + j] = -Rat(free_columns[i][j]);
    }
    tab.t[i][scol + i] = -1;
    tab.t[i][zcol + i] = 1;
    tab.t[i][cols] = 1;
    tab.basis[i] = zcol + i;
  }

  std::vector<Rat> phase1(cols, 0);
  for (long i = 0; i < n; ++i) phase1[zcol + i] = 1;
  tab.set_costs(phase1);
  tab.optimize(cols);

  if (tab.value() > 0) {
    // Gordan certificate: u_i = reduced cost of the i-th surplus column
    std::vector<Rat> u(n);
    for (long i = 0; i < n; ++i) u[i] = tab.obj[scol + i];
    IntVec cert = primitive_integer(u);
    bool nonzero = false;
    for (long i = 0; i < n; ++i) {
      if (cert[i] < 0) throw std::logic_error("pointedness LP: negative Farkas multiplier");
      if (cert[i] != 0) nonzero = true;
    }
    if (!nonzero) throw std::logic_error("pointedness LP: zero Farkas certificate");
    for (long j = 0; j < d; ++j) {
      Int s = 0;
      for (long i = 0; i < n; ++i) s += cert[i] * free_columns[i][j];
      if (s != 0) throw std::logic_error("pointedness LP: certificate misses the kernel");
    }
    return Pointedness{std::nullopt, std::move(cert)};
  }

  // drive leftover artificials out of the basis, dropping redundant rows
  for (long i = 0; i < tab.rows; ++i) {
    if (tab.basis[i] < zcol) continue;
    long col = -1;
    for (long j = 0; j < zcol; ++j)
      if (tab.t[i][j] != 0) {
        col = j;
        break;
      }
    if (col >= 0) {
      tab.pivot(i, col);
    } else {
      tab.t.erase(tab.t.begin() + i);
      tab.basis.erase(tab.basis.begin() + i);
      --tab.rows;
      --i;
    }
  }

  std::vector<Rat> phase2(cols, 0);
  for (long i = 0; i < n; ++i) phase2[scol + i] = 1;
  tab.set_costs(phase2);
  tab.optimize(zcol);  // artificials may not re-enter

  std::vector<Rat> y(d);
  for (long j = 0; j < d; ++j) y[j] = tab.var_value(yplus + j) - tab.var_value(yminus + j);
  for (long i = 0; i < n; ++i) {
    Rat v = 0;
    for (long j = 0; j < d; ++j) v += y[j] * Rat(free_columns[i][j]);
    if (v <= 0) throw std::logic_error("pointedness LP: functional not strictly positive");
  }
  return Pointedness{std::move(y), {}};
}

}  // namespace lsz
