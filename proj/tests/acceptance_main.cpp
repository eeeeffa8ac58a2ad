// Acceptance suite: one pass/fail line per criterion, exit code = failures.
#include <chrono>
#include <iostream>
#include <sstream>

#include "lsz/cli.hpp"
#include "lsz/io.hpp"
#include "test_support.hpp"

using namespace lsz;
using namespace lsz::testing;

namespace {

struct Criterion {
  bool passed = true;
  std::ostringstream detail;
  void fail(const std::string& why) {
    if (passed) detail << why;
    passed = false;
  }
};

struct Instance {
  std::string name;
  GradingMap g;
  Rat bound;
};

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// criterion 1: the worked (6,10) example, end to end
Criterion criterion1() {
  Criterion c;
  const auto t0 = std::chrono::steady_clock::now();
  const GradingMap g = example_semigroup();
  Degree b;
  b.free = {6, 10};
  const Fiber& f = enumerate_fiber(b, g);
  if (f.monomials != std::vector<Expo>{{0, 1, 3, 0}, {0, 2, 0, 2}, {1, 0, 2, 1}})
    c.fail("fiber mismatch");
  const SimplicialComplex gc = build_gcd_complex(f);
  if (gc.facets != std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}})
    c.fail("gcd complex is not a hollow triangle");
  const SimplicialComplex dc = build_delta_b(f);
  if (dc.vertex_labels != std::vector<std::string>{"a", "b", "c", "d"} ||
      dc.facets != std::vector<std::vector<int>>{{0, 2, 3}, {1, 2}, {1, 3}})
    c.fail("delta complex facets mismatch");
  for (const SimplicialComplex* sc : {&gc, &dc}) {
    const HomologyProfile h = reduced_homology(*sc);
    const long h0 = h.dims.size() > 0 ? h.dims[0] : 0;
    const long h1 = h.dims.size() > 1 ? h.dims[1] : 0;
    if (h.h_minus1 != 0 || h0 != 0 || h1 != 1) c.fail("reduced homology is not (h0,h1) = (0,1)");
  }
  const double dt = seconds_since(t0);
  if (dt >= 1.0) c.fail("runtime " + std::to_string(dt) + "s exceeds 1s");
  c.detail << "fiber/complexes/homology exact, " << dt << "s";
  return c;
}

std::vector<Instance> shared_instance_set() {
  std::vector<Instance> set;
  set.push_back({"example_semigroup", example_semigroup(), 16});
  set.push_back({"total_degree", total_degree_example(), 6});
  set.push_back({"twisted_cubic", twisted_cubic(), 12});
  set.push_back({"torsion_example", torsion_example(), 8});
  {
    const GradingMap ci = ci_incomparable();
    Degree b12 = ci.degree_of({2, 0, 0, 2, 0, 0});
    set.push_back({"ci_incomparable", ci, Rat(ci.yval(b12)) + 1});
  }
  std::mt19937_64 rng(20250810);
  for (int k = 0; k < 200; ++k) {
    GradingMap g = k % 3 == 2 ? random_lattice_grading(rng) : random_column_grading(rng);
    set.push_back({"random_" + std::to_string(k), std::move(g), 12});
  }
  return set;
}

struct ScanOutcome {
  long nerve_checked = 0, nerve_skipped = 0;
  long comp_checked = 0, comp_skipped = 0;
  bool betti_ok = true, nerve_ok = true, comp_ok = true;
  std::string detail;
};

// one pass over an instance: both oracles, nerve checks, component partition comparison
ScanOutcome scan_instance(const Instance& inst) {
  constexpr std::size_t kFiberCap = 20;
  constexpr std::size_t kFaceCap = std::size_t{1} << 9;
  ScanOutcome o;
  const GradingMap& g = inst.g;
  const BettiTable gcd = betti_via_gcd(g, inst.bound);
  const BettiTable tor = tor_oracle(g, inst.bound);
  std::string diff;
  if (!same_entries(gcd, tor, &diff)) {
    o.betti_ok = false;
    o.detail = inst.name + ": " + diff;
  }
  std::vector<Degree> degs = degrees_up_to(inst.bound, g);
  std::erase(degs, g.zero());
  for (const Degree& b : degs) {
    const Fiber& f = enumerate_fiber(b, g);
    if (f.size() > kFiberCap) {
      ++o.nerve_skipped;
      ++o.comp_skipped;
      continue;
    }
    ++o.comp_checked;
    if (o.comp_ok && fiber_graph_components(b, g) != gcd_partition(b, g)) {
      o.comp_ok = false;
      o.detail = inst.name + ": component partition mismatch";
    }
    const SimplicialComplex gc = build_gcd_complex(f);
    try {
      count_faces(gc, kFaceCap);
    } catch (const FaceLimitExceeded&) {
      ++o.nerve_skipped;
      continue;
    }
    ++o.nerve_checked;
    const HomologyProfile hg = reduced_homology(gc, Field::Q, kFaceCap);
    const HomologyProfile hd = reduced_homology(build_delta_b(f));
    if (o.nerve_ok && !same_homology(hg, hd)) {
      o.nerve_ok = false;
      o.detail = inst.name + ": nerve homology mismatch";
    }
  }
  return o;
}

// criterion 4: the final example of the indispensability section
Criterion criterion4() {
  Criterion c;
  const GradingMap g = total_degree_example();
  const BettiTable gcd = betti_via_gcd(g, 5);
  const BettiTable tor = tor_oracle(g, 5);
  std::string diff;
  if (!same_entries(gcd, tor, &diff)) c.fail(diff);
  Degree one{IntVec{1}, {}}, two{IntVec{2}, {}};
  if (tor.value_at(1, one) != 2) c.fail("beta_{1,1} != 2");
  if (tor.value_at(2, two) != 1) c.fail("beta_{2,2} != 1");
  const DegreeClassification cls = classify_degrees(tor, g);
  const auto* item = cls.find(2, two);
  if (!item || !item->is_minimal) c.fail("degree 2 is not a minimal 2-Betti degree");
  if (!indispensable_binomials(g, 5).empty()) c.fail("indispensable set is not empty");
  const StrongIndispVerdict v = strongly_indispensable_check(tor, g);
  if (v.strongly_indispensable || !v.has_witness || v.witness_i != 1 ||
      v.witness_b.free != IntVec{1})
    c.fail("strong check did not fail at (1, degree 1)");
  c.detail << "beta_{1,1}=2, beta_{2,2}=1, no indispensables, witness (1,[1])";
  return c;
}

Criterion criterion5() {
  Criterion c;
  struct Case {
    std::string name;
    GradingMap g;
    Rat bound;
  };
  std::vector<Case> cases;
  cases.push_back({"example_semigroup", example_semigroup(), 16});
  cases.push_back({"total_degree", total_degree_example(), 6});
  cases.push_back({"twisted_cubic", twisted_cubic(), 12});
  cases.push_back({"torsion_example", torsion_example(), 8});
  {
    const GradingMap ci = ci_incomparable();
    cases.push_back({"ci_incomparable", ci, Rat(ci.yval(ci.degree_of({2, 0, 0, 2, 0, 0}))) + 1});
  }
  std::mt19937_64 rng(97531);
  int added = 0, attempts = 0;
  while (added < 50 && attempts < 600) {
    ++attempts;
    GradingMap g = attempts % 3 == 2 ? random_lattice_grading(rng) : random_column_grading(rng);
    const Rat bound = 6;
    const auto degs = degrees_up_to(bound, g);
    if (degs.size() > 30) continue;
    bool small = true;
    for (const Degree& b : degs)
      if (enumerate_fiber(b, g).size() > 8) {
        small = false;
        break;
      }
    if (!small) continue;
    cases.push_back({"random_" + std::to_string(added), std::move(g), bound});
    ++added;
  }
  if (added < 50) c.fail("could not assemble 50 random census instances");

  long checked = 0;
  for (const Case& k : cases) {
    const GeneratorCensus cen = census(k.g, k.bound);
    const Int brute = count_minimal_binomials_bruteforce(k.g, k.bound);
    if (cen.total != brute) {
      c.fail(k.name + ": census " + cen.total.str() + " != bruteforce " + brute.str());
      break;
    }
    if (k.name == "total_degree" && cen.total != 6) c.fail("final example census total != 6");
    ++checked;
  }
  c.detail << checked << " instances, formula = rank-test count everywhere";
  return c;
}

Criterion criterion7() {
  Criterion c;
  const GradingMap g = twisted_cubic();
  const Rat bound = 12;
  const std::vector<Binomial> expect = {make_binomial({1, 0, 1, 0}, {0, 2, 0, 0}, g),
                                        make_binomial({1, 0, 0, 1}, {0, 1, 1, 0}, g),
                                        make_binomial({0, 1, 0, 1}, {0, 0, 2, 0}, g)};
  std::vector<std::string> warnings;
  std::vector<Binomial> ind = indispensable_binomials(g, bound, &warnings);
  if (!warnings.empty()) c.fail("unexpected bound warning");
  if (ind.size() != 3) c.fail("expected exactly three indispensable binomials");
  for (const Binomial& f : expect)
    if (std::find(ind.begin(), ind.end(), f) == ind.end())
      c.fail("missing quadric " + binomial_string(f));
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const auto sample = sample_minimal_generating_set(g, bound, seed);
    for (const Binomial& f : expect)
      if (std::find(sample.begin(), sample.end(), f) == sample.end()) {
        c.fail("quadric missing from resample seed " + std::to_string(seed));
        break;
      }
    if (!c.passed) break;
  }
  c.detail << "three canonical quadrics, present in all 50 resamples";
  return c;
}

Criterion criterion8() {
  Criterion c;
  const GradingMap g = ci_incomparable();
  const std::vector<Binomial> fs = {
      make_binomial({2, 0, 0, 0, 0, 0}, {0, 1, 1, 0, 0, 0}, g),
      make_binomial({0, 0, 0, 2, 0, 0}, {0, 0, 0, 0, 1, 1}, g)};
  const Degree b12 = g.add(fs[0].degree, fs[1].degree);
  const Rat bound = Rat(g.yval(b12)) + 1;
  const KoszulCIReport r = koszul_ci_verify(fs, g, bound);
  if (!r.incomparable) c.fail("generator degrees compare");
  if (!r.exact_up_to_bound) c.fail("Koszul complex not exact: " + r.first_exactness_failure);
  if (!r.generation_ok) c.fail("generators do not span the scanned fibers");

  const BettiTable tor = tor_oracle(g, bound);
  // Koszul shape: beta_i = C(2, i) spread over the level degrees
  bool shape_ok = tor.degrees_at(1).size() == 2 && tor.degrees_at(2).size() == 1 &&
                  tor.value_at(1, fs[0].degree) == 1 && tor.value_at(1, fs[1].degree) == 1 &&
                  tor.value_at(2, b12) == 1 && tor.max_index() == 2;
  if (!shape_ok) c.fail("tor table does not match the Koszul shape C(2,i)");
  if (!strongly_indispensable_check(tor, g).strongly_indispensable)
    c.fail("strong indispensability expected to hold");

  const GradingMap s4 = total_degree_example();
  const std::vector<Binomial> s4_fs = {make_binomial({1, 0, 0}, {0, 1, 0}, s4),
                                       make_binomial({0, 1, 0}, {0, 0, 1}, s4)};
  const KoszulCIReport r4 = koszul_ci_verify(s4_fs, s4, 4);
  if (r4.incomparable) c.fail("final example degrees must compare");
  c.detail << "CI exact and strongly indispensable; final example incomparability false";
  return c;
}

Criterion criterion9() {
  Criterion c;
  const std::vector<std::vector<std::string>> cmds = {
      {"betti", "--input", data_path("example_semigroup.json"), "--bound", "16", "--oracle", "both"},
      {"verify-all", "--input", data_path("twisted_cubic.json"), "--bound", "12"},
      {"census", "--input", data_path("torsion_example.json"), "--bound", "8"},
  };
  for (const auto& cmd : cmds) {
    std::ostringstream out1, err1, out2, err2;
    const int c1 = run_cli(cmd, out1, err1);
    const int c2 = run_cli(cmd, out2, err2);
    if (out1.str() != out2.str() || c1 != c2) {
      c.fail("report for " + cmd[0] + " is not byte-identical");
      break;
    }
  }
  // every constructed graded differential pair composes to zero
  try {
    const GradingMap g = example_semigroup();
    for (const Degree& b : degrees_up_to(12, g)) koszul_variable_piece(b, g).verify_dd_zero();
    const GradingMap ci = ci_incomparable();
    const std::vector<Binomial> fs = {
        make_binomial({2, 0, 0, 0, 0, 0}, {0, 1, 1, 0, 0, 0}, ci),
        make_binomial({0, 0, 0, 2, 0, 0}, {0, 0, 0, 0, 1, 1}, ci)};
    for (const Degree& b : degrees_up_to(5, ci)) koszul_ci_piece(fs, b, ci).verify_dd_zero();
  } catch (const std::logic_error& e) {
    c.fail(std::string("dd != 0: ") + e.what());
  }
  c.detail << "byte-identical reports; dd = 0 on all constructed pieces";
  return c;
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  int failures = 0;
  auto report = [&](int num, const std::string& title, const Criterion& c) {
    std::cout << "criterion " << num << " [" << (c.passed ? "PASS" : "FAIL") << "] " << title
              << ": " << c.detail.str() << "\n";
    if (!c.passed) ++failures;
  };

  report(1, "worked example reproduction", criterion1());

  // criteria 2, 3, 6 share one instance scan
  {
    const auto scan_t0 = std::chrono::steady_clock::now();
    const std::vector<Instance> set = shared_instance_set();
    std::vector<ScanOutcome> outcomes(set.size());
    parallel_for(set.size(), [&](std::size_t k) {
      const auto i0 = std::chrono::steady_clock::now();
      outcomes[k] = scan_instance(set[k]);
      const double dt = seconds_since(i0);
      if (dt > 5.0) std::cerr << "slow instance " << set[k].name << ": " << dt << "s\n";
    });
    Criterion c2, c3, c6;
    long nerve_checked = 0, nerve_skipped = 0, comp_checked = 0, comp_skipped = 0;
    for (const auto& o : outcomes) {
      nerve_checked += o.nerve_checked;
      nerve_skipped += o.nerve_skipped;
      comp_checked += o.comp_checked;
      comp_skipped += o.comp_skipped;
      if (!o.nerve_ok) c2.fail(o.detail);
      if (!o.betti_ok) c3.fail(o.detail);
      if (!o.comp_ok) c6.fail(o.detail);
    }
    const double dt = seconds_since(scan_t0);
    if (dt >= 300.0) c2.fail("scan took " + std::to_string(dt) + "s, exceeding 5 minutes");
    c2.detail << set.size() << " instances, " << nerve_checked << " degrees checked ("
              << nerve_skipped << " over the size caps), " << dt << "s";
    c3.detail << "gcd vs tor equal on all " << set.size() << " instances";
    c6.detail << comp_checked << " degrees checked (" << comp_skipped << " over the fiber cap)";
    report(2, "nerve equivalence", c2);
    report(3, "cross-oracle Betti equality", c3);
    report(6, "component partition agreement", c6);
  }

  report(4, "final-example values", criterion4());
  report(5, "census formula vs rank test", criterion5());
  report(7, "twisted cubic indispensables", criterion7());
  report(8, "Koszul complete intersection", criterion8());
  report(9, "determinism and dd = 0", criterion9());

  std::cout << (failures == 0 ? "all criteria passed" : "FAILURES: " + std::to_string(failures))
            << " (" << seconds_since(t0) << "s total)\n";
  return failures;
}
