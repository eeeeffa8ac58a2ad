#include "lsz/fibers.hpp"

#include <algorithm>
#include <mutex>
#include <set>

namespace lsz {

std::shared_ptr<const Fiber> FiberCache::get(const Degree& b) const {
  std::shared_lock lock(mu_);
  auto it = fibers_.find(b);
  return it == fibers_.end() ? nullptr : it->second;
}

std::shared_ptr<const Fiber> FiberCache::put(Fiber f) {
  std::unique_lock lock(mu_);
  auto [it, inserted] = fibers_.try_emplace(f.degree, nullptr);
  if (inserted) it->second = std::make_shared<const Fiber>(std::move(f));
  return it->second;
}

std::optional<bool> FiberCache::known_nonempty(const Degree& b) const {
  std::shared_lock lock(mu_);
  auto it = nonempty_.find(b);
  if (it != nonempty_.end()) return it->second;
  auto fit = fibers_.find(b);
  if (fit != fibers_.end()) return !fit->second->empty();
  return std::nullopt;
}

void FiberCache::remember_nonempty(const Degree& b, bool v) {
  std::unique_lock lock(mu_);
  nonempty_.insert_or_assign(b, v);
}

namespace {

// Depth-first search over exponents in input variable order; ascending
// branches yield the fiber lexicographically sorted. Pruning: the positive
// functional must stay nonnegative on the remaining degree; torsion is
// checked at the leaves.
struct FiberDfs {
  const GradingMap& g;
  bool stop_first = false;
  std::vector<Expo>* out = nullptr;
  bool found = false;
  Expo u;

  void run(long i, Degree remaining) {
    if (found && stop_first) return;
    const long n = g.n();
    if (i == n) {
      for (const Int& x : remaining.free)
        if (x != 0) return;
      for (const Int& x : remaining.torsion)
        if (x != 0) return;
      found = true;
      if (out) out->push_back(u);
      return;
    }
    const Degree& a = g.generator_degrees()[i];
    for (std::int64_t e = 0;; ++e) {
      if (g.yval(remaining) < 0) break;
      u[i] = e;
      run(i + 1, remaining);
      if (found && stop_first) break;
      remaining = g.sub(remaining, a);
    }
    u[i] = 0;
  }
};

}  // namespace

Fiber enumerate_fiber_uncached(const Degree& b, const GradingMap& g) {
  Fiber f;
  f.degree = b;
  if (g.yval(b) >= 0) {
    FiberDfs dfs{g, false, nullptr, false, {}};
    dfs.out = &f.monomials;
    dfs.u.assign(g.n(), 0);
    dfs.run(0, b);
  }
  return f;
}

const Fiber& enumerate_fiber(const Degree& b, const GradingMap& g) {
  FiberCache& cache = g.fibers();
  if (auto hit = cache.get(b)) return *hit;
  return *cache.put(enumerate_fiber_uncached(b, g));
}

bool fiber_nonempty(const Degree& b, const GradingMap& g) {
  FiberCache& cache = g.fibers();
  if (auto known = cache.known_nonempty(b)) return *known;
  bool result = false;
  if (g.yval(b) >= 0) {
    FiberDfs dfs{g, false, nullptr, false, {}};
    dfs.stop_first = true;
    dfs.u.assign(g.n(), 0);
    dfs.run(0, b);
    result = dfs.found;
  }
  cache.remember_nonempty(b, result);
  return result;
}

bool leq(const Degree& c, const Degree& b, const GradingMap& g) {
  return fiber_nonempty(g.sub(b, c), g);
}

std::vector<Degree> degrees_up_to(const Rat& bound, const GradingMap& g) {
  if (bound < 0) throw std::invalid_argument("degree bound must be nonnegative");
  std::set<Degree, DegreeLexLess> seen;
  const long n = g.n();
  // enumerate monomials with y-value within the bound, collecting degrees
  std::function<void(long, Degree, Int)> rec = [&](long i, Degree deg, Int spent) {
    if (i == n) {
      seen.insert(deg);
      return;
    }
    const Degree& a = g.generator_degrees()[i];
    const Int& w = g.weights()[i];
    for (;;) {
      if (Rat(spent) > bound) break;
      rec(i + 1, deg, spent);
      deg = g.add(deg, a);
      spent += w;
    }
  };
  rec(0, g.zero(), 0);
  std::vector<Degree> degs(seen.begin(), seen.end());
  std::sort(degs.begin(), degs.end(),
            [&](const Degree& a, const Degree& b) { return g.degree_less(a, b); });
  return degs;
}

}  // namespace lsz
