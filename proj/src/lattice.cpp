#include "lsz/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "lsz/fibers.hpp"

namespace lsz {

bool lex_less(const Degree& a, const Degree& b) {
  if (a.free != b.free) return std::lexicographical_compare(a.free.begin(), a.free.end(), b.free.begin(), b.free.end());
  return std::lexicographical_compare(a.torsion.begin(), a.torsion.end(), b.torsion.begin(), b.torsion.end());
}

namespace {

IntMat identity(long n) {
  IntMat m(n, IntVec(n, 0));
  for (long i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

void swap_rows(IntMat& m, IntMat& u, long a, long b) {
  std::swap(m[a], m[b]);
  std::swap(u[a], u[b]);
}

void swap_cols(IntMat& m, IntMat& v, long a, long b) {
  for (auto& row : m) std::swap(row[a], row[b]);
  for (auto& row : v) std::swap(row[a], row[b]);
}

// row a += f * row b, mirrored on U
void row_axpy(IntMat& m, IntMat& u, long a, long b, const Int& f) {
  for (std::size_t j = 0; j < m[a].size(); ++j) m[a][j] += f * m[b][j];
  for (std::size_t j = 0; j < u[a].size(); ++j) u[a][j] += f * u[b][j];
}

// col a += f * col b, mirrored on V
void col_axpy(IntMat& m, IntMat& v, long a, long b, const Int& f) {
  for (auto& row : m) row[a] += f * row[b];
  for (auto& row : v) row[a] += f * row[b];
}

}  // namespace

SmithNF smith_normal_form(IntMat m) {
  const long k = static_cast<long>(m.size());
  const long n = k ? static_cast<long>(m[0].size()) : 0;
  SmithNF r;
  r.u = identity(k);
  r.v = identity(n);
  const long lim = std::min(k, n);
  for (long t = 0; t < lim; ++t) {
    // move a nonzero entry of smallest magnitude to the pivot slot
    long pr = -1, pc = -1;
    Int best = 0;
    for (long i = t; i < k; ++i)
      for (long j = t; j < n; ++j) {
        if (m[i][j] == 0) continue;
        Int a = abs(m[i][j]);
        if (pr < 0 || a < best) {
          best = a;
          pr = i;
          pc = j;
        }
      }
    if (pr < 0) break;  // remaining block is zero
    if (pr != t) swap_rows(m, r.u, t, pr);
    if (pc != t) swap_cols(m, r.v, t, pc);
    for (;;) {
      bool again = false;
      for (long i = t + 1; i < k; ++i) {
        if (m[i][t] == 0) continue;
        Int q = m[i][t] / m[t][t];
        if (q != 0) row_axpy(m, r.u, i, t, -q);
        if (m[i][t] != 0) {  // remainder is strictly smaller: promote it
          swap_rows(m, r.u, t, i);
          again = true;
        }
      }
      if (again) continue;
      for (long j = t + 1; j < n; ++j) {
        if (m[t][j] == 0) continue;
        Int q = m[t][j] / m[t][t];
        if (q != 0) col_axpy(m, r.v, j, t, -q);
        if (m[t][j] != 0) {
          swap_cols(m, r.v, t, j);
          again = true;
        }
      }
      if (again) continue;
      // invariant-factor divisibility: pivot must divide the whole block
      bool divisible = true;
      for (long i = t + 1; i < k && divisible; ++i)
        for (long j = t + 1; j < n && divisible; ++j)
          if (m[i][j] % m[t][t] != 0) {
            row_axpy(m, r.u, t, i, 1);
            divisible = false;
          }
      if (divisible) break;
    }
    if (m[t][t] < 0) {
      for (long j = 0; j < n; ++j) m[t][j] = -m[t][j];
      for (long j = 0; j < k; ++j) r.u[t][j] = -r.u[t][j];
    }
    r.diag.push_back(m[t][t]);
    ++r.rank;
  }
  return r;
}

bool GradingMap::is_trivial_lattice() const { return free_rank_ == n_ && moduli_.empty(); }

Degree GradingMap::zero() const {
  return Degree{IntVec(free_rank_, 0), IntVec(moduli_.size(), 0)};
}

Degree GradingMap::degree_of(const Expo& u) const {
  assert(static_cast<long>(u.size()) == n_);
  Degree d = zero();
  for (long i = 0; i < n_; ++i) {
    if (u[i] == 0) continue;
    const Degree& a = columns_[i];
    for (long j = 0; j < free_rank_; ++j) d.free[j] += u[i] * a.free[j];
    for (std::size_t j = 0; j < moduli_.size(); ++j) d.torsion[j] += u[i] * a.torsion[j];
  }
  for (std::size_t j = 0; j < moduli_.size(); ++j) {
    d.torsion[j] %= moduli_[j];
    if (d.torsion[j] < 0) d.torsion[j] += moduli_[j];
  }
  return d;
}

Degree GradingMap::add(const Degree& a, const Degree& b) const {
  Degree d = a;
  for (long j = 0; j < free_rank_; ++j) d.free[j] += b.free[j];
  for (std::size_t j = 0; j < moduli_.size(); ++j) {
    d.torsion[j] = (d.torsion[j] + b.torsion[j]) % moduli_[j];
  }
  return d;
}

Degree GradingMap::sub(const Degree& a, const Degree& b) const {
  Degree d = a;
  for (long j = 0; j < free_rank_; ++j) d.free[j] -= b.free[j];
  for (std::size_t j = 0; j < moduli_.size(); ++j) {
    d.torsion[j] = (d.torsion[j] - b.torsion[j]) % moduli_[j];
    if (d.torsion[j] < 0) d.torsion[j] += moduli_[j];
  }
  return d;
}

Int GradingMap::yval(const Degree& d) const { return dot(y_scaled_, d.free); }

bool GradingMap::degree_less(const Degree& a, const Degree& b) const {
  const Int ya = yval(a), yb = yval(b);
  if (ya != yb) return ya < yb;
  return lex_less(a, b);
}

void GradingMap::finalize() {
  std::vector<IntVec> free_cols;
  free_cols.reserve(columns_.size());
  for (const auto& c : columns_) free_cols.push_back(c.free);
  Pointedness p = pointedness_certificate(free_cols);
  if (!p.y) {
    Int scale = 1;
    for (const Int& m : moduli_) scale = scale / boost::multiprecision::gcd(scale, m) * m;
    IntVec cert = p.gordan;
    for (Int& c : cert) c *= scale;
    throw NotPointed("lattice meets N^n nontrivially: semigroup is not pointed", cert);
  }
  y_ = *p.y;
  // primitive integer representative of y
  Int denom_lcm = 1;
  for (const Rat& q : y_) {
    Int den = boost::multiprecision::denominator(q);
    denom_lcm = denom_lcm / boost::multiprecision::gcd(denom_lcm, den) * den;
  }
  y_scaled_.assign(y_.size(), 0);
  Int g = 0;
  for (std::size_t j = 0; j < y_.size(); ++j) {
    Rat v = y_[j] * denom_lcm;
    y_scaled_[j] = boost::multiprecision::numerator(v);
    g = boost::multiprecision::gcd(g, y_scaled_[j]);
  }
  if (g > 1)
    for (Int& v : y_scaled_) v /= g;
  weights_.clear();
  for (const auto& c : columns_) {
    Int w = dot(y_scaled_, c.free);
    if (w <= 0) throw std::logic_error("positive functional failed verification");
    weights_.push_back(w);
  }
  cache_ = std::make_shared<FiberCache>();
}

GradingMap GradingMap::from_columns(long n, std::vector<IntVec> free_columns) {
  if (n < 1) throw std::invalid_argument("need at least one variable");
  if (static_cast<long>(free_columns.size()) != n)
    throw std::invalid_argument("expected one grading column per variable");
  const std::size_t d = free_columns[0].size();
  for (const auto& c : free_columns)
    if (c.size() != d) throw std::invalid_argument("grading columns of unequal length");
  GradingMap g;
  g.n_ = n;
  g.free_rank_ = static_cast<long>(d);
  for (auto& c : free_columns) g.columns_.push_back(Degree{std::move(c), {}});
  g.finalize();
  return g;
}

GradingMap smith_presentation(const LatticePresentation& lat) {
  const long n = lat.n;
  if (n < 1) throw std::invalid_argument("need at least one variable");
  for (const auto& row : lat.basis)
    if (static_cast<long>(row.size()) != n)
      throw std::invalid_argument("basis row length differs from n");
  const long k = static_cast<long>(lat.basis.size());
  if (k > 0 && rank_bareiss(lat.basis) != k)
    throw DependentBasis("lattice basis rows are linearly dependent");

  SmithNF snf = smith_normal_form(lat.basis);
  if (k > 0 && snf.rank != k) throw DependentBasis("lattice basis rows are linearly dependent");
  const IntMat v = k > 0 ? snf.v : IntMat();

  GradingMap g;
  g.n_ = n;
  g.free_rank_ = n - k;
  std::vector<long> torsion_pos;
  for (long t = 0; t < k; ++t)
    if (snf.diag[t] >= 2) {
      torsion_pos.push_back(t);
      g.moduli_.push_back(snf.diag[t]);
    }
  for (long i = 0; i < n; ++i) {
    Degree a;
    a.free.resize(g.free_rank_);
    for (long j = 0; j < g.free_rank_; ++j) a.free[j] = k > 0 ? v[i][k + j] : Int(i == j ? 1 : 0);
    for (std::size_t t = 0; t < torsion_pos.size(); ++t) {
      Int r = v[i][torsion_pos[t]] % g.moduli_[t];
      if (r < 0) r += g.moduli_[t];
      a.torsion.push_back(r);
    }
    g.columns_.push_back(std::move(a));
  }

  // every basis row must map to the zero degree
  for (const auto& row : lat.basis) {
    IntVec img(g.free_rank_, 0);
    IntVec tor(g.moduli_.size(), 0);
    for (long i = 0; i < n; ++i) {
      for (long j = 0; j < g.free_rank_; ++j) img[j] += row[i] * g.columns_[i].free[j];
      for (std::size_t j = 0; j < g.moduli_.size(); ++j) tor[j] += row[i] * g.columns_[i].torsion[j];
    }
    for (const Int& x : img)
      if (x != 0) throw std::logic_error("Smith presentation: basis row has nonzero degree");
    for (std::size_t j = 0; j < g.moduli_.size(); ++j)
      if (tor[j] % g.moduli_[j] != 0)
        throw std::logic_error("Smith presentation: basis row has nonzero torsion degree");
  }

  g.finalize();

  // rank-one quotients: orient the free coordinate positively
  if (g.free_rank_ == 1 && g.y_scaled_[0] < 0) {
    for (auto& c : g.columns_) c.free[0] = -c.free[0];
    g.y_[0] = -g.y_[0];
    g.y_scaled_[0] = -g.y_scaled_[0];
  }
  return g;
}

}  // namespace lsz
