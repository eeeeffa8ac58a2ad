#pragma once

#include <json.hpp>

#include "lsz/syzygy.hpp"

namespace lsz {

using Json = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Problem input: exactly one of lattice_basis / grading_columns.
struct ProblemSpec {
  long n = 0;
  std::optional<IntMat> lattice_basis;
  std::optional<std::vector<IntVec>> grading_columns;
};

Json load_json_file(const std::string& path);
ProblemSpec parse_problem(const Json& j);
Json problem_to_json(const ProblemSpec& p);
GradingMap build_grading(const ProblemSpec& p);

Rat parse_rational(const std::string& s);
std::string rational_string(const Rat& r);

// Degrees on the wire: comma-separated integers, free coordinates first,
// then torsion residues.
Degree parse_degree(const std::string& s, const GradingMap& g);
std::string degree_string(const Degree& d);
Json degree_to_json(const Degree& d);

Json grading_to_json(const GradingMap& g);
Json binomial_to_json(const Binomial& f);
Json expo_to_json(const Expo& u);

// Generators file: {"generators": [{"plus": [...], "minus": [...]}, ...]}.
std::vector<Binomial> parse_generators(const Json& j, const GradingMap& g);

}  // namespace lsz
