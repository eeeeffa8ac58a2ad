#include "lsz/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <iostream>

#include "lsz/io.hpp"

namespace lsz {

namespace {

constexpr const char* kVersion = "0.1.0";

struct CommonOpts {
  std::string input;
  std::string bound = "0";
  std::string field = "q";
  std::uint64_t seed = 1;
  bool allow_warnings = false;
  bool verbose = false;
};

struct CommandResult {
  Json results;
  std::vector<std::string> warnings;
  bool failed = false;  // assertion/disagreement (forces exit 1)
};

Json betti_table_json(const BettiTable& t, const GradingMap& g) {
  const DegreeClassification cls = classify_degrees(t, g);
  Json entries = Json::array();
  for (const auto& e : t.entries) {
    Json je;
    je["i"] = e.i;
    je["degree"] = degree_to_json(e.b);
    je["value"] = e.value;
    const auto* item = cls.find(e.i, e.b);
    je["minimal"] = item && item->is_minimal;
    entries.push_back(std::move(je));
  }
  return entries;
}

Json components_json(const std::vector<std::vector<int>>& comps,
                     const SimplicialComplex& c) {
  Json out = Json::array();
  for (const auto& comp : comps) {
    Json labels = Json::array();
    for (int v : comp) labels.push_back(c.vertex_labels[v]);
    out.push_back(std::move(labels));
  }
  return out;
}

Json homology_json(const HomologyProfile& h) {
  Json j;
  j["h_minus1"] = h.h_minus1;
  j["dims"] = h.dims;
  j["field"] = h.field == Field::Q ? "Q" : ("F" + std::to_string(kHomologyPrime));
  return j;
}

Json complex_json(const SimplicialComplex& c) {
  Json j;
  j["vertices"] = c.vertex_labels;
  Json facets = Json::array();
  for (const auto& f : c.facets) {
    Json labels = Json::array();
    for (int v : f) labels.push_back(c.vertex_labels[v]);
    facets.push_back(std::move(labels));
  }
  j["facets"] = std::move(facets);
  std::vector<bool> in_facet(c.vertex_labels.size(), false);
  for (const auto& f : c.facets)
    for (int v : f) in_facet[v] = true;
  Json ghosts = Json::array();
  for (std::size_t v = 0; v < c.vertex_labels.size(); ++v)
    if (!in_facet[v]) ghosts.push_back(c.vertex_labels[v]);
  j["ghost_vertices"] = std::move(ghosts);
  return j;
}

CommandResult cmd_fiber(const GradingMap& g, const std::string& degree) {
  CommandResult r;
  const Degree b = parse_degree(degree, g);
  const Fiber& f = enumerate_fiber(b, g);
  r.results["degree"] = degree_to_json(b);
  r.results["size"] = f.size();
  Json mons = Json::array(), expos = Json::array();
  for (const Expo& u : f.monomials) {
    mons.push_back(monomial_string(u));
    expos.push_back(expo_to_json(u));
  }
  r.results["monomials"] = std::move(mons);
  r.results["exponents"] = std::move(expos);
  return r;
}

CommandResult cmd_complex(const GradingMap& g, const std::string& degree,
                          const std::string& kind, Field field) {
  CommandResult r;
  const Degree b = parse_degree(degree, g);
  const Fiber& f = enumerate_fiber(b, g);
  const bool gcd_kind = kind == "gcd";
  const SimplicialComplex c = gcd_kind ? build_gcd_complex(f) : build_delta_b(f);
  r.results = complex_json(c);
  r.results["kind"] = kind;
  r.results["degree"] = degree_to_json(b);
  bool via_nerve = false;
  HomologyProfile h;
  if (gcd_kind) {
    try {
      h = reduced_homology(c, field);
    } catch (const FaceLimitExceeded&) {
      h = reduced_homology(build_delta_b(f), field);
      via_nerve = true;
    }
  } else {
    h = reduced_homology(c, field);
  }
  r.results["homology"] = homology_json(h);
  r.results["homology_via_nerve"] = via_nerve;
  r.results["components"] = components_json(components(c), c);
  if (b == g.zero())
    r.warnings.push_back("degree 0: the monomial 1 is a ghost vertex of the gcd complex");
  return r;
}

CommandResult cmd_betti(const GradingMap& g, const Rat& bound, const std::string& oracle) {
  CommandResult r;
  std::optional<BettiTable> gcd, tor;
  if (oracle == "gcd" || oracle == "both") gcd = betti_via_gcd(g, bound);
  if (oracle == "tor" || oracle == "both") tor = tor_oracle(g, bound);
  const BettiTable& primary = gcd ? *gcd : *tor;
  r.results["oracle"] = oracle;
  r.results["bound"] = rational_string(bound);
  r.results["entries"] = betti_table_json(primary, g);
  if (gcd && tor) {
    std::string diff;
    const bool agree = same_entries(*gcd, *tor, &diff);
    r.results["oracles_agree"] = agree;
    if (!agree) {
      r.results["first_difference"] = diff;
      r.failed = true;
    }
  }
  if (gcd) r.warnings = gcd->warnings;
  return r;
}

CommandResult cmd_census(const GradingMap& g, const Rat& bound) {
  CommandResult r;
  const GeneratorCensus c = census(g, bound);
  r.results["bound"] = rational_string(bound);
  Json per = Json::array();
  for (const auto& dc : c.per_degree) {
    Json jd;
    jd["degree"] = degree_to_json(dc.b);
    jd["component_sizes"] = dc.component_sizes;
    jd["cross_pairs"] = dc.cross_pairs.convert_to<std::int64_t>();
    Json reps = Json::array();
    for (const auto& f : dc.representatives) reps.push_back(binomial_to_json(f));
    jd["representatives"] = std::move(reps);
    per.push_back(std::move(jd));
  }
  r.results["per_degree"] = std::move(per);
  r.results["total"] = c.total.convert_to<std::int64_t>();
  r.warnings = c.warnings;
  return r;
}

CommandResult cmd_indispensable(const GradingMap& g, const Rat& bound, long resamples,
                                std::uint64_t seed) {
  CommandResult r;
  std::vector<std::string> warnings;
  const std::vector<Binomial> ind = indispensable_binomials(g, bound, &warnings);
  r.results["bound"] = rational_string(bound);
  Json out = Json::array();
  for (const auto& f : ind) out.push_back(binomial_to_json(f));
  r.results["indispensable"] = std::move(out);
  if (resamples > 0) {
    // cross-check: every indispensable binomial must survive each resampled
    // minimal generating set
    bool ok = true;
    for (long k = 0; k < resamples && ok; ++k) {
      const auto sample = sample_minimal_generating_set(g, bound, seed + k);
      for (const Binomial& f : ind)
        if (std::find(sample.begin(), sample.end(), f) == sample.end()) {
          ok = false;
          break;
        }
    }
    Json cross;
    cross["resamples"] = resamples;
    cross["seed"] = seed;
    cross["all_present"] = ok;
    r.results["resample_check"] = std::move(cross);
    if (!ok) r.failed = true;
  }
  r.warnings = std::move(warnings);
  return r;
}

CommandResult cmd_check_strong(const GradingMap& g, const Rat& bound) {
  CommandResult r;
  const BettiTable gcd = betti_via_gcd(g, bound);
  const BettiTable tor = tor_oracle(g, bound);
  std::string diff;
  if (!same_entries(gcd, tor, &diff)) {
    r.results["oracles_agree"] = false;
    r.results["first_difference"] = diff;
    r.failed = true;
    return r;
  }
  r.results["oracles_agree"] = true;
  r.results["bound"] = rational_string(bound);
  const StrongIndispVerdict v = strongly_indispensable_check(tor, g);
  r.results["strongly_indispensable"] = v.strongly_indispensable;
  if (v.has_witness) {
    Json w;
    w["i"] = v.witness_i;
    w["degree"] = degree_to_json(v.witness_b);
    w["failed_condition"] = v.failed_condition;
    r.results["witness"] = std::move(w);
  } else {
    r.results["witness"] = nullptr;
  }
  r.results["entries"] = betti_table_json(tor, g);
  r.warnings = gcd.warnings;
  return r;
}

CommandResult cmd_koszul_ci(const GradingMap& g, const Rat& bound,
                            const std::string& gens_path) {
  CommandResult r;
  const std::vector<Binomial> fs = parse_generators(load_json_file(gens_path), g);
  const KoszulCIReport rep = koszul_ci_verify(fs, g, bound);
  r.results["bound"] = rational_string(bound);
  Json gens = Json::array();
  for (const auto& f : fs) gens.push_back(binomial_to_json(f));
  r.results["generators"] = std::move(gens);
  Json mat = Json::array();
  for (const auto& row : rep.leq_matrix) {
    Json jrow = Json::array();
    for (bool v : row) jrow.push_back(v);
    mat.push_back(std::move(jrow));
  }
  r.results["leq_matrix"] = std::move(mat);
  r.results["incomparable"] = rep.incomparable;
  r.results["degrees_checked"] = rep.degrees_checked;
  r.results["exact_up_to_bound"] = rep.exact_up_to_bound;
  if (!rep.exact_up_to_bound) r.results["first_exactness_failure"] = rep.first_exactness_failure;
  r.results["generation_ok"] = rep.generation_ok;
  Json levels = Json::array();
  for (const auto& ld : rep.levels) {
    Json jl;
    jl["level"] = ld.level;
    jl["degree"] = degree_to_json(ld.b);
    jl["multiplicity"] = ld.multiplicity;
    jl["minimal"] = ld.minimal;
    jl["betti_one"] = ld.multiplicity == 1;
    levels.push_back(std::move(jl));
  }
  r.results["levels"] = std::move(levels);
  r.warnings = rep.warnings;
  if (!rep.exact_up_to_bound || !rep.generation_ok) r.failed = true;
  return r;
}

// Cross-validation pipeline: both Betti oracles, the component-partition
// partition comparison, the census against the rank-test count, and nerve spot checks.
CommandResult cmd_verify_all(const GradingMap& g, const Rat& bound) {
  CommandResult r;
  Json checks = Json::array();
  bool all_ok = true;
  auto push = [&](const std::string& name, bool ok, Json detail) {
    Json c;
    c["name"] = name;
    c["passed"] = ok;
    c["detail"] = std::move(detail);
    checks.push_back(std::move(c));
    all_ok = all_ok && ok;
  };

  push("pointedness", true, Json{{"y", grading_to_json(g)["y"]}});

  const BettiTable gcd = betti_via_gcd(g, bound);
  const BettiTable tor = tor_oracle(g, bound);
  std::string diff;
  const bool agree = same_entries(gcd, tor, &diff);
  push("betti_oracles_agree", agree,
       agree ? Json{{"entries", gcd.entries.size()}} : Json{{"first_difference", diff}});
  r.warnings = gcd.warnings;

  std::vector<Degree> degs = degrees_up_to(bound, g);
  std::erase(degs, g.zero());

  long comp_checked = 0, comp_skipped = 0;
  bool comp_ok = true;
  std::string comp_diff;
  long nerve_checked = 0, nerve_skipped = 0;
  bool nerve_ok = true;
  std::string nerve_diff;
  constexpr std::size_t kFiberCap = 20;
  constexpr std::size_t kFaceCap = std::size_t{1} << 10;
  for (const Degree& b : degs) {
    const Fiber& f = enumerate_fiber(b, g);
    if (f.size() > kFiberCap) {
      ++comp_skipped;
      ++nerve_skipped;
      continue;
    }
    const SimplicialComplex gc = build_gcd_complex(f);
    // fiber-graph components must match the gcd-complex components
    std::vector<std::vector<Expo>> graph_parts = fiber_graph_components(b, g);
    std::vector<std::vector<Expo>> gcd_parts;
    for (const auto& comp : components(gc)) {
      std::vector<Expo> part;
      for (int v : comp) part.push_back(f.monomials[v]);
      gcd_parts.push_back(std::move(part));
    }
    ++comp_checked;
    if (comp_ok && graph_parts != gcd_parts) {
      comp_ok = false;
      comp_diff = "partition mismatch at degree [" + degree_string(b) + "]";
    }
    // nerve spot check, direct gcd homology vs delta homology
    try {
      count_faces(gc, kFaceCap);
    } catch (const FaceLimitExceeded&) {
      ++nerve_skipped;
      continue;
    }
    const HomologyProfile hg = reduced_homology(gc, Field::Q, kFaceCap);
    const HomologyProfile hd = reduced_homology(build_delta_b(f), Field::Q);
    const HomologyProfile hp = reduced_homology(gc, Field::Fp, kFaceCap);
    ++nerve_checked;
    if (nerve_ok && (!same_homology(hg, hd) || !same_homology(hg, hp))) {
      nerve_ok = false;
      nerve_diff = "homology mismatch at degree [" + degree_string(b) + "]";
    }
  }
  push("component_partitions_agree", comp_ok,
       Json{{"checked", comp_checked},
            {"skipped_large", comp_skipped},
            {"detail", comp_ok ? "" : comp_diff}});
  push("nerve_equivalence", nerve_ok,
       Json{{"checked", nerve_checked},
            {"skipped_large", nerve_skipped},
            {"detail", nerve_ok ? "" : nerve_diff}});

  // census against the independent rank-test count, when sizes permit
  bool sizes_ok = degs.size() <= 30;
  for (const Degree& b : degs)
    if (enumerate_fiber(b, g).size() > 8) sizes_ok = false;
  if (sizes_ok) {
    const GeneratorCensus c = census(g, bound);
    const Int brute = count_minimal_binomials_bruteforce(g, bound);
    const bool census_ok = c.total == brute;
    push("census_matches_bruteforce", census_ok,
         Json{{"census_total", c.total.convert_to<std::int64_t>()},
              {"bruteforce_total", brute.convert_to<std::int64_t>()}});
  } else {
    push("census_matches_bruteforce", true, Json{{"skipped", "instance too large for the rank test"}});
  }

  r.results["checks"] = std::move(checks);
  r.results["all_passed"] = all_ok;
  r.failed = !all_ok;
  return r;
}

int emit(const Json& report, std::ostream& out) {
  out << report.dump(2) << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"lattice ideal syzygy toolkit"};
  app.set_version_flag("--version", kVersion);

  CommonOpts opts;
  std::string degree, kind = "gcd", oracle = "both", gens_path;

  auto add_common = [&](CLI::App* cmd, bool needs_bound) {
    cmd->add_option("--input", opts.input, "problem JSON file")->required();
    if (needs_bound) cmd->add_option("--bound", opts.bound, "y-degree scan bound")->required();
    cmd->add_option("--field", opts.field, "q or fp")->check(CLI::IsMember({"q", "fp"}));
    cmd->add_option("--seed", opts.seed, "RNG seed echoed in the report");
    cmd->add_flag("--allow-warnings", opts.allow_warnings, "exit 0 despite warnings");
    cmd->add_flag("--verbose", opts.verbose, "human summary on stderr");
  };

  CLI::App* c_check = app.add_subcommand("check", "validate input and pointedness");
  add_common(c_check, false);
  CLI::App* c_fiber = app.add_subcommand("fiber", "enumerate one fiber");
  add_common(c_fiber, false);
  c_fiber->add_option("--degree", degree, "comma-separated degree")->required();
  CLI::App* c_complex = app.add_subcommand("complex", "gcd or delta complex of a degree");
  add_common(c_complex, false);
  c_complex->add_option("--degree", degree, "comma-separated degree")->required();
  c_complex->add_option("--kind", kind, "gcd or delta")->check(CLI::IsMember({"gcd", "delta"}));
  CLI::App* c_betti = app.add_subcommand("betti", "multigraded Betti table");
  add_common(c_betti, true);
  c_betti->add_option("--oracle", oracle, "gcd, tor, or both")
      ->check(CLI::IsMember({"gcd", "tor", "both"}));
  CLI::App* c_census = app.add_subcommand("census", "minimal binomial census");
  add_common(c_census, true);
  CLI::App* c_ind = app.add_subcommand("indispensable", "indispensable binomials");
  add_common(c_ind, true);
  long resamples = 0;
  c_ind->add_option("--resamples", resamples,
                    "cross-check against this many seeded minimal generating sets");
  CLI::App* c_strong = app.add_subcommand("check-strong", "strong indispensability criterion");
  add_common(c_strong, true);
  CLI::App* c_koszul = app.add_subcommand("koszul-ci", "Koszul complete-intersection verifier");
  add_common(c_koszul, true);
  c_koszul->add_option("--gens", gens_path, "generators JSON file")->required();
  CLI::App* c_verify = app.add_subcommand("verify-all", "full cross-validation pipeline");
  add_common(c_verify, true);

  app.require_subcommand(1);
  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  }

  const CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  auto has_opt = [&](const char* opt) {
    const CLI::Option* o = sub->get_option_no_throw(opt);
    return o != nullptr && o->count() > 0;
  };
  const auto start = std::chrono::steady_clock::now();

  Json report;
  report["tool"] = "lsz";
  report["version"] = kVersion;
  Json cmd_echo;
  cmd_echo["name"] = name;
  cmd_echo["input"] = opts.input;
  if (has_opt("--bound")) cmd_echo["bound"] = opts.bound;
  if (has_opt("--degree")) cmd_echo["degree"] = degree;
  if (name == "complex") cmd_echo["kind"] = kind;
  if (name == "betti") cmd_echo["oracle"] = oracle;
  if (name == "koszul-ci") cmd_echo["gens"] = gens_path;
  cmd_echo["field"] = opts.field;
  cmd_echo["seed"] = opts.seed;
  report["command"] = std::move(cmd_echo);

  int exit_code = 0;
  try {
    const ProblemSpec spec = parse_problem(load_json_file(opts.input));
    report["input_echo"] = problem_to_json(spec);

    if (name == "check") {
      try {
        const GradingMap g = build_grading(spec);
        report["grading"] = grading_to_json(g);
        report["results"] = Json{{"pointed", true}};
        report["warnings"] = Json::array();
      } catch (const NotPointed& e) {
        Json res;
        res["pointed"] = false;
        res["error"] = e.what();
        Json cert = Json::array();
        for (const Int& x : e.certificate) cert.push_back(x.convert_to<std::int64_t>());
        res["gordan_certificate"] = std::move(cert);
        report["results"] = std::move(res);
        report["warnings"] = Json::array();
        exit_code = 1;
      }
      emit(report, out);
      return exit_code;
    }

    const GradingMap g = build_grading(spec);
    report["grading"] = grading_to_json(g);
    const Rat bound = has_opt("--bound") ? parse_rational(opts.bound) : Rat(0);
    const Field field = opts.field == "fp" ? Field::Fp : Field::Q;

    CommandResult res;
    if (name == "fiber")
      res = cmd_fiber(g, degree);
    else if (name == "complex")
      res = cmd_complex(g, degree, kind, field);
    else if (name == "betti")
      res = cmd_betti(g, bound, oracle);
    else if (name == "census")
      res = cmd_census(g, bound);
    else if (name == "indispensable")
      res = cmd_indispensable(g, bound, resamples, opts.seed);
    else if (name == "check-strong")
      res = cmd_check_strong(g, bound);
    else if (name == "koszul-ci")
      res = cmd_koszul_ci(g, bound, gens_path);
    else if (name == "verify-all")
      res = cmd_verify_all(g, bound);

    report["results"] = std::move(res.results);
    report["warnings"] = res.warnings;
    if (res.failed) exit_code = 1;
    if (!res.warnings.empty() && !opts.allow_warnings) exit_code = std::max(exit_code, 1);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    Json res;
    res["error"] = e.what();
    report["results"] = std::move(res);
    report["warnings"] = Json::array();
    emit(report, out);
    if (opts.verbose) err << "error: " << e.what() << "\n";
    return 1;
  }

  emit(report, out);
  if (opts.verbose) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    err << name << ": exit " << exit_code << ", " << ms << " ms\n";
  }
  return exit_code;
}

}  // namespace lsz
