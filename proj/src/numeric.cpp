#include "lsz/numeric.hpp"

#include <algorithm>
#include <cassert>

namespace lsz {

Int dot(const IntVec& a, const IntVec& b) {
  assert(a.size() == b.size());
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

long rank_bareiss(IntMat m) {
  const long rows = static_cast<long>(m.size());
  const long cols = rows ? static_cast<long>(m[0].size()) : 0;
  long rank = 0;
  Int prev = 1;
  for (long col = 0; col < cols && rank < rows; ++col) {
    long piv = -1;
    for (long i = rank; i < rows; ++i)
      if (m[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    for (long i = rank + 1; i < rows; ++i) {
      for (long j = col + 1; j < cols; ++j)
        m[i][j] = (m[rank][col] * m[i][j] - m[i][col] * m[rank][j]) / prev;
      m[i][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

Int det_bareiss(IntMat m) {
  const long n = static_cast<long>(m.size());
  if (n == 0) return 1;
  assert(static_cast<long>(m[0].size()) == n);
  Int prev = 1;
  int sign = 1;
  for (long k = 0; k < n; ++k) {
    long piv = -1;
    for (long i = k; i < n; ++i)
      if (m[i][k] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (long i = k + 1; i < n; ++i) {
      for (long j = k + 1; j < n; ++j) m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

long rank_mod_p(const IntMat& m, std::int64_t p) {
  const long rows = static_cast<long>(m.size());
  const long cols = rows ? static_cast<long>(m[0].size()) : 0;
  std::vector<std::vector<std::int64_t>> a(rows, std::vector<std::int64_t>(cols));
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j) {
      Int r = m[i][j] % p;
      if (r < 0) r += p;
      a[i][j] = r.convert_to<std::int64_t>();
    }
  auto inv_mod = [&](std::int64_t x) {
    // Fermat inverse; p is prime.
    std::int64_t r = 1, b = x % p, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  long rank = 0;
  for (long col = 0; col < cols && rank < rows; ++col) {
    long piv = -1;
    for (long i = rank; i < rows; ++i)
      if (a[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[rank]);
    const std::int64_t inv = inv_mod(a[rank][col]);
    for (long j = col; j < cols; ++j) a[rank][j] = a[rank][j] * inv % p;
    for (long i = 0; i < rows; ++i) {
      if (i == rank || a[i][col] == 0) continue;
      const std::int64_t f = a[i][col];
      for (long j = col; j < cols; ++j) a[i][j] = ((a[i][j] - f * a[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

void RowSpaceQ::reduce(std::vector<Rat>& v) const {
  for (const auto& [piv, row] : rows_) {
    if (piv >= v.size()) break;
    if (v[piv] == 0) continue;
    const Rat f = v[piv];
    for (std::size_t j = piv; j < v.size(); ++j) v[j] -= f * row[j];
  }
}

bool RowSpaceQ::insert(std::vector<Rat> v) {
  reduce(v);
  std::size_t piv = v.size();
  for (std::size_t j = 0; j < v.size(); ++j)
    if (v[j] != 0) {
      piv = j;
      break;
    }
  if (piv == v.size()) return false;
  const Rat f = v[piv];
  for (std::size_t j = piv; j < v.size(); ++j) v[j] /= f;
  rows_.emplace(piv, std::move(v));
  return true;
}

bool RowSpaceQ::contains(std::vector<Rat> v) const {
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

void GradedComplex::verify_dd_zero() const {
  const std::size_t levels = dims.size();
  for (std::size_t i = 2; i < levels; ++i) {
    const IntMat& a = boundary[i - 1];  // level i-1 -> i-2
    const IntMat& b = boundary[i];      // level i   -> i-1
    if (dims[i - 2] == 0 || dims[i] == 0) continue;
    for (long r = 0; r < dims[i - 2]; ++r)
      for (long c = 0; c < dims[i]; ++c) {
        Int s = 0;
        for (long k = 0; k < dims[i - 1]; ++k) s += a[r][k] * b[k][c];
        if (s != 0) throw std::logic_error("graded complex: d o d != 0");
      }
  }
}

namespace {
std::vector<long> homology_from_ranks(const std::vector<long>& dims,
                                      const std::vector<long>& ranks) {
  const std::size_t levels = dims.size();
  std::vector<long> h(levels, 0);
  for (std::size_t i = 0; i < levels; ++i) {
    const long out = i > 0 ? ranks[i] : 0;
    const long in = i + 1 < levels ? ranks[i + 1] : 0;
    h[i] = dims[i] - out - in;
  }
  return h;
}
}  // namespace

std::vector<long> GradedComplex::homology_q() const {
  std::vector<long> ranks(dims.size(), 0);
  for (std::size_t i = 1; i < dims.size(); ++i) ranks[i] = rank_bareiss(boundary[i]);
  return homology_from_ranks(dims, ranks);
}

std::vector<long> GradedComplex::homology_mod_p(std::int64_t p) const {
  std::vector<long> ranks(dims.size(), 0);
  for (std::size_t i = 1; i < dims.size(); ++i) ranks[i] = rank_mod_p(boundary[i], p);
  return homology_from_ranks(dims, ranks);
}

long GradedComplex::euler_dims() const {
  long e = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) e += (i % 2 == 0) ? dims[i] : -dims[i];
  return e;
}

DisjointSets::DisjointSets(std::size_t n) : parent(n) {
  for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
}

int DisjointSets::find(int a) {
  while (parent[a] != a) {
    parent[a] = parent[parent[a]];
    a = parent[a];
  }
  return a;
}

void DisjointSets::unite(int a, int b) {
  a = find(a);
  b = find(b);
  if (a != b) parent[std::max(a, b)] = std::min(a, b);
}

}  // namespace lsz
