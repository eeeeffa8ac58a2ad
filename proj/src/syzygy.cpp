#include "lsz/syzygy.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <sstream>

namespace lsz {

namespace {

bool lex_greater(const Expo& a, const Expo& b) {
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::map<Expo, int> index_of(const Fiber& f) {
  std::map<Expo, int> idx;
  for (std::size_t k = 0; k < f.monomials.size(); ++k)
    idx.emplace(f.monomials[k], static_cast<int>(k));
  return idx;
}

// The degree-b piece of the ideal generated below b is spanned by the
// elementary moves x^a(x^w - x^w') with a != 0 and w, w' in one lower fiber.
// Visits every ordered pair (index of u, index of a + w')
template <typename Fn>
void for_each_elementary_move(const Fiber& fiber, const std::map<Expo, int>& idx,
                              const GradingMap& g, Fn&& fn) {
  const long n = g.n();
  for (std::size_t p = 0; p < fiber.monomials.size(); ++p) {
    const Expo& u = fiber.monomials[p];
    Expo a(n, 0);
    // enumerate divisors a of u, skipping a = 0
    std::function<void(long)> rec = [&](long i) {
      if (i == n) {
        if (is_zero(a)) return;
        Expo w(n);
        for (long j = 0; j < n; ++j) w[j] = u[j] - a[j];
        const Fiber& lower = enumerate_fiber(g.degree_of(w), g);
        for (const Expo& w2 : lower.monomials) {
          const Expo v = add(a, w2);
          auto it = idx.find(v);
          if (it == idx.end()) throw std::logic_error("fiber graph: translated monomial left the fiber");
          if (static_cast<int>(p) != it->second) fn(static_cast<int>(p), it->second);
        }
        return;
      }
      for (a[i] = 0; a[i] <= u[i]; ++a[i]) rec(i + 1);
      a[i] = 0;
    };
    rec(0);
  }
}

std::vector<Rat> pair_vector(std::size_t size, int p, int q) {
  std::vector<Rat> v(size, Rat(0));
  v[p] = 1;
  v[q] = -1;
  return v;
}

void add_bound_warning(std::vector<std::string>& warnings, const std::vector<Degree>& hits,
                       const GradingMap& g, const Rat& bound, const char* what) {
  Int step = 0;
  for (const Int& w : g.weights()) step = std::max(step, w);
  long near = 0;
  for (const Degree& b : hits)
    if (Rat(g.yval(b)) > bound - Rat(step)) ++near;
  if (near > 0) {
    std::ostringstream os;
    os << "BoundTooSmallWarning: " << near << " " << what << " within one generator step ("
       << step << ") of the bound " << bound.str() << "; the scan may be incomplete";
    warnings.push_back(os.str());
  }
}

}  // namespace

Binomial make_binomial(Expo a, Expo b, const GradingMap& g) {
  if (a.size() != b.size() || static_cast<long>(a.size()) != g.n())
    throw std::invalid_argument("binomial exponent vectors must have length n");
  if (a == b) throw std::invalid_argument("binomial monomials must differ");
  if (!coprime(a, b))
    throw std::invalid_argument("binomial not in reduced form: monomials share a variable");
  const Degree da = g.degree_of(a), db = g.degree_of(b);
  if (!(da == db)) throw NotInIdeal("monomials have different degrees: not in the lattice ideal");
  Binomial f;
  if (lex_greater(a, b)) {
    f.plus = std::move(a);
    f.minus = std::move(b);
  } else {
    f.plus = std::move(b);
    f.minus = std::move(a);
  }
  f.degree = da;
  return f;
}

std::string binomial_string(const Binomial& f) {
  return monomial_string(f.plus) + " - " + monomial_string(f.minus);
}

bool is_simple_0syzygy(const PolyTerms& p, const GradingMap& g) {
  std::map<Expo, Rat> terms;
  for (const auto& [u, c] : p) {
    if (static_cast<long>(u.size()) != g.n())
      throw std::invalid_argument("monomial length differs from n");
    terms[u] += c;
  }
  std::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
  if (terms.empty()) throw std::invalid_argument("zero polynomial has no S-support");
  std::optional<Degree> deg;
  Rat sum = 0;
  for (const auto& [u, c] : terms) {
    const Degree d = g.degree_of(u);
    if (!deg)
      deg = d;
    else if (!(d == *deg))
      throw NotHomogeneous("monomials of mixed degree");
    sum += c;
  }
  // The degree-b piece of I is the sum-zero hyperplane of k^{C_b}.
  if (sum != 0) throw NotInIdeal("coefficients do not sum to zero");
  // A sum-zero vector on >= 3 monomials has a sum-zero vector supported on a
  // proper 2-element subset, so exactly the binomials are simple.
  return terms.size() == 2;
}

std::vector<std::vector<Expo>> fiber_graph_components(const Degree& b, const GradingMap& g) {
  const Fiber& fiber = enumerate_fiber(b, g);
  const auto idx = index_of(fiber);
  DisjointSets dsu(fiber.size());
  for_each_elementary_move(fiber, idx, g, [&](int p, int q) { dsu.unite(p, q); });
  std::map<int, std::vector<Expo>> groups;
  for (std::size_t k = 0; k < fiber.size(); ++k)
    groups[dsu.find(static_cast<int>(k))].push_back(fiber.monomials[k]);
  std::vector<std::vector<Expo>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

GeneratorCensus census(const GradingMap& g, const Rat& bound) {
  GeneratorCensus result;
  result.bound = bound;
  result.total = 0;
  std::vector<Degree> degs = degrees_up_to(bound, g);
  std::erase(degs, g.zero());
  std::vector<std::optional<DegreeCensus>> slots(degs.size());
  parallel_for(degs.size(), [&](std::size_t k) {
    const Fiber& fiber = enumerate_fiber(degs[k], g);
    if (fiber.size() < 2) return;
    const SimplicialComplex gc = build_gcd_complex(fiber);
    const auto comps = components(gc);
    if (comps.size() < 2) return;
    DegreeCensus dc;
    dc.b = degs[k];
    Int total_vertices = 0;
    for (const auto& comp : comps) {
      dc.component_sizes.push_back(static_cast<long>(comp.size()));
      total_vertices += static_cast<long>(comp.size());
    }
    // ordered pairs from distinct components: |C_b|^2 - sum t_i^2
    dc.cross_pairs = total_vertices * total_vertices;
    for (long t : dc.component_sizes) dc.cross_pairs -= Int(t) * t;
    for (std::size_t i = 0; i < comps.size(); ++i)
      for (std::size_t j = i + 1; j < comps.size(); ++j)
        dc.representatives.push_back(
            make_binomial(fiber.monomials[comps[i][0]], fiber.monomials[comps[j][0]], g));
    slots[k] = std::move(dc);
  });
  std::vector<Degree> hits;
  for (auto& s : slots) {
    if (!s) continue;
    hits.push_back(s->b);
    result.total += s->cross_pairs;
    result.per_degree.push_back(std::move(*s));
  }
  add_bound_warning(result.warnings, hits, g, bound, "contributing degrees");
  return result;
}

std::vector<Binomial> GeneratorCensus::all_representatives() const {
  std::vector<Binomial> out;
  for (const auto& dc : per_degree)
    out.insert(out.end(), dc.representatives.begin(), dc.representatives.end());
  return out;
}

Int count_minimal_binomials_bruteforce(const GradingMap& g, const Rat& bound) {
  Int total = 0;
  std::vector<Degree> degs = degrees_up_to(bound, g);
  std::erase(degs, g.zero());
  for (const Degree& b : degs) {
    const Fiber& fiber = enumerate_fiber(b, g);
    if (fiber.size() < 2) continue;
    const auto idx = index_of(fiber);
    RowSpaceQ lower_span;
    for_each_elementary_move(fiber, idx, g, [&](int p, int q) {
      lower_span.insert(pair_vector(fiber.size(), p, q));
    });
    for (std::size_t p = 0; p < fiber.size(); ++p)
      for (std::size_t q = 0; q < fiber.size(); ++q) {
        if (p == q) continue;
        if (!lower_span.contains(pair_vector(fiber.size(), static_cast<int>(p), static_cast<int>(q))))
          ++total;
      }
  }
  return total;
}

bool generation_check(const std::vector<Binomial>& bins, const GradingMap& g, const Rat& bound) {
  const std::vector<Degree> degs = degrees_up_to(bound, g);
  for (const Degree& c : degs) {
    const Fiber& fiber = enumerate_fiber(c, g);
    if (fiber.size() < 2) continue;
    const auto idx = index_of(fiber);
    RowSpaceQ span;
    for (const Binomial& f : bins) {
      const Degree shift = g.sub(c, f.degree);
      if (g.yval(shift) < 0) continue;
      const Fiber& multiples = enumerate_fiber(shift, g);
      for (const Expo& a : multiples.monomials) {
        auto ip = idx.find(add(a, f.plus));
        auto iq = idx.find(add(a, f.minus));
        if (ip == idx.end() || iq == idx.end())
          throw std::logic_error("generation check: multiple left its fiber");
        span.insert(pair_vector(fiber.size(), ip->second, iq->second));
      }
    }
    if (span.rank() != static_cast<long>(fiber.size()) - 1) return false;
  }
  return true;
}

std::vector<Binomial> indispensable_binomials(const GradingMap& g, const Rat& bound,
                                              std::vector<std::string>* warnings) {
  std::vector<Degree> degs = degrees_up_to(bound, g);
  std::erase(degs, g.zero());
  // 1-Betti degrees and their gcd-complex component structure
  struct Hit {
    Degree b;
    std::size_t fiber_size;
    std::size_t comps;
  };
  std::vector<std::optional<Hit>> slots(degs.size());
  parallel_for(degs.size(), [&](std::size_t k) {
    const Fiber& fiber = enumerate_fiber(degs[k], g);
    if (fiber.size() < 2) return;
    const auto comps = components(build_gcd_complex(fiber));
    if (comps.size() >= 2) slots[k] = Hit{degs[k], fiber.size(), comps.size()};
  });
  std::vector<Hit> hits;
  for (auto& s : slots)
    if (s) hits.push_back(*s);

  std::vector<Binomial> out;
  std::vector<Degree> hit_degrees;
  for (const auto& h : hits) hit_degrees.push_back(h.b);
  for (const auto& h : hits) {
    bool minimal = true;
    for (const auto& other : hits) {
      if (other.b == h.b) continue;
      if (leq(other.b, h.b, g)) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    if (h.fiber_size != 2 || h.comps != 2) continue;
    const Fiber& fiber = enumerate_fiber(h.b, g);
    if (!coprime(fiber.monomials[0], fiber.monomials[1])) continue;
    out.push_back(make_binomial(fiber.monomials[0], fiber.monomials[1], g));
  }
  if (warnings) add_bound_warning(*warnings, hit_degrees, g, bound, "1-Betti degrees");
  std::sort(out.begin(), out.end(), [&](const Binomial& a, const Binomial& b) {
    return g.degree_less(a.degree, b.degree);
  });
  return out;
}

std::vector<Binomial> sample_minimal_generating_set(const GradingMap& g, const Rat& bound,
                                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Degree> degs = degrees_up_to(bound, g);
  std::erase(degs, g.zero());
  std::vector<Binomial> chosen;
  for (const Degree& c : degs) {
    const Fiber& fiber = enumerate_fiber(c, g);
    if (fiber.size() < 2) continue;
    const auto idx = index_of(fiber);
    RowSpaceQ span;
    for (const Binomial& f : chosen) {
      const Degree shift = g.sub(c, f.degree);
      if (g.yval(shift) < 0) continue;
      for (const Expo& a : enumerate_fiber(shift, g).monomials)
        span.insert(pair_vector(fiber.size(), idx.at(add(a, f.plus)), idx.at(add(a, f.minus))));
    }
    std::vector<std::pair<int, int>> pairs;
    for (int p = 0; p < static_cast<int>(fiber.size()); ++p)
      for (int q = p + 1; q < static_cast<int>(fiber.size()); ++q) pairs.emplace_back(p, q);
    for (std::size_t k = pairs.size(); k > 1; --k)
      std::swap(pairs[k - 1], pairs[rng() % k]);
    for (const auto& [p, q] : pairs)
      if (span.insert(pair_vector(fiber.size(), p, q)))
        chosen.push_back(make_binomial(fiber.monomials[p], fiber.monomials[q], g));
  }
  return chosen;
}

StrongIndispVerdict strongly_indispensable_check(const BettiTable& t, const GradingMap& g) {
  StrongIndispVerdict v;
  const DegreeClassification cls = classify_degrees(t, g);
  for (const auto& e : t.entries) {
    if (e.i == 0) continue;
    const auto* item = cls.find(e.i, e.b);
    const bool minimal = item && item->is_minimal;
    const bool dim_one = e.value == 1;
    if (minimal && dim_one) continue;
    v.strongly_indispensable = false;
    v.has_witness = true;
    v.witness_i = e.i;
    v.witness_b = e.b;
    v.failed_condition = dim_one ? "not_minimal" : "homology_dimension";
    return v;
  }
  return v;
}

GradedComplex koszul_ci_piece(const std::vector<Binomial>& fs, const Degree& c,
                              const GradingMap& g) {
  const long s = static_cast<long>(fs.size());
  if (s > 20) throw std::invalid_argument("Koszul verifier supports at most 20 generators");
  const std::size_t masks = std::size_t{1} << s;
  std::vector<Degree> degJ(masks, g.zero());
  for (std::size_t m = 1; m < masks; ++m) {
    const int low = static_cast<int>(std::countr_zero(m));
    degJ[m] = g.add(degJ[m & (m - 1)], fs[low].degree);
  }
  // level t basis: (J, monomial of degree c - b_J) over all |J| = t
  struct LevelBasis {
    std::vector<std::pair<std::size_t, long>> items;         // (mask, monomial index)
    std::map<std::pair<std::size_t, Expo>, long> index;      // (mask, monomial) -> position
  };
  std::vector<LevelBasis> levels(s + 1);
  std::vector<const Fiber*> fiber_of(masks, nullptr);
  for (std::size_t m = 0; m < masks; ++m) {
    const Degree piece_deg = g.sub(c, degJ[m]);
    if (g.yval(piece_deg) < 0) continue;
    const Fiber& fib = enumerate_fiber(piece_deg, g);
    if (fib.empty()) continue;
    fiber_of[m] = &fib;
    LevelBasis& lb = levels[std::popcount(m)];
    for (std::size_t k = 0; k < fib.size(); ++k) {
      lb.index.emplace(std::make_pair(m, fib.monomials[k]), static_cast<long>(lb.items.size()));
      lb.items.emplace_back(m, static_cast<long>(k));
    }
  }

  GradedComplex piece;
  piece.dims.resize(s + 1);
  piece.boundary.resize(s + 1);
  for (long t = 0; t <= s; ++t) piece.dims[t] = static_cast<long>(levels[t].items.size());
  for (long t = 1; t <= s; ++t) {
    IntMat m(piece.dims[t - 1], IntVec(piece.dims[t], 0));
    for (long j = 0; j < piece.dims[t]; ++j) {
      const auto [mask, mono_idx] = levels[t].items[j];
      const Expo& mono = fiber_of[mask]->monomials[mono_idx];
      int pos = 0;
      for (int v = 0; v < s; ++v) {
        if (!(mask & (std::size_t{1} << v))) continue;
        ++pos;
        const int sign = (pos % 2 == 1) ? 1 : -1;
        const std::size_t sub = mask ^ (std::size_t{1} << v);
        // multiplication by f_v = x^plus - x^minus
        const auto tp = levels[t - 1].index.find(std::make_pair(sub, add(mono, fs[v].plus)));
        const auto tm = levels[t - 1].index.find(std::make_pair(sub, add(mono, fs[v].minus)));
        if (tp == levels[t - 1].index.end() || tm == levels[t - 1].index.end())
          throw std::logic_error("Koszul piece: product monomial missing from target fiber");
        m[tp->second][j] += sign;
        m[tm->second][j] -= sign;
      }
    }
    piece.boundary[t] = std::move(m);
  }
  piece.verify_dd_zero();
  return piece;
}

KoszulCIReport koszul_ci_verify(const std::vector<Binomial>& fs, const GradingMap& g,
                                const Rat& bound) {
  if (fs.empty()) throw std::invalid_argument("need at least one generator");
  KoszulCIReport r;
  r.bound = bound;
  const long s = static_cast<long>(fs.size());
  for (const Binomial& f : fs) r.generator_degrees.push_back(f.degree);

  r.leq_matrix.assign(s, std::vector<bool>(s, false));
  r.incomparable = true;
  for (long i = 0; i < s; ++i)
    for (long j = 0; j < s; ++j) {
      if (i == j) continue;
      r.leq_matrix[i][j] = leq(fs[i].degree, fs[j].degree, g);
      if (r.leq_matrix[i][j]) r.incomparable = false;
    }

  const std::vector<Degree> degs = degrees_up_to(bound, g);
  r.degrees_checked = static_cast<long>(degs.size());
  std::vector<std::string> failures(degs.size());
  parallel_for(degs.size(), [&](std::size_t k) {
    const GradedComplex piece = koszul_ci_piece(fs, degs[k], g);
    const std::vector<long> h = piece.homology_q();
    for (std::size_t t = 1; t < h.size(); ++t)
      if (h[t] != 0) {
        std::ostringstream os;
        os << "H_" << t << " has dimension " << h[t] << " in degree [";
        for (std::size_t j = 0; j < degs[k].free.size(); ++j)
          os << (j ? "," : "") << degs[k].free[j];
        for (const Int& r : degs[k].torsion) os << ";" << r;
        os << "]";
        failures[k] = os.str();
        return;
      }
  });
  r.exact_up_to_bound = true;
  for (const auto& f : failures)
    if (!f.empty()) {
      r.exact_up_to_bound = false;
      r.first_exactness_failure = f;
      break;
    }

  r.generation_ok = generation_check(fs, g, bound);

  // level degrees b_J with the strong-indispensability conditions
  const std::size_t masks = std::size_t{1} << s;
  std::map<long, std::map<Degree, long, DegreeLexLess>> level_degrees;
  for (std::size_t m = 1; m < masks; ++m) {
    Degree bj = g.zero();
    for (int v = 0; v < s; ++v)
      if (m & (std::size_t{1} << v)) bj = g.add(bj, fs[v].degree);
    ++level_degrees[std::popcount(m)][bj];
  }
  for (const auto& [t, degmap] : level_degrees) {
    for (const auto& [b, mult] : degmap) {
      KoszulLevelDegree ld;
      ld.level = t;
      ld.b = b;
      ld.multiplicity = mult;
      ld.minimal = true;
      for (const auto& [other, om] : degmap) {
        if (other == b) continue;
        if (leq(other, b, g)) {
          ld.minimal = false;
          break;
        }
      }
      r.levels.push_back(ld);
    }
  }
  std::vector<Degree> level_hits;
  for (const auto& ld : r.levels) level_hits.push_back(ld.b);
  add_bound_warning(r.warnings, level_hits, g, bound, "Koszul level degrees");
  return r;
}

}  // namespace lsz
