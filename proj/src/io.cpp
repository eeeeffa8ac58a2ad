#include "lsz/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace lsz {

namespace {

Int json_to_int(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw ParseError("expected an integer");
}

std::int64_t int_to_i64(const Int& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw ParseError("integer too large for report");
  return v.convert_to<std::int64_t>();
}

IntVec json_to_intvec(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of integers");
  IntVec v;
  for (const auto& x : j) v.push_back(json_to_int(x));
  return v;
}

Json intvec_to_json(const IntVec& v) {
  Json a = Json::array();
  for (const Int& x : v) a.push_back(int_to_i64(x));
  return a;
}

}  // namespace

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

ProblemSpec parse_problem(const Json& j) {
  if (!j.is_object()) throw ParseError("problem input must be a JSON object");
  if (!j.contains("n")) throw ParseError("problem input needs \"n\"");
  ProblemSpec p;
  p.n = j.at("n").get<long>();
  const bool has_basis = j.contains("lattice_basis");
  const bool has_cols = j.contains("grading_columns");
  if (has_basis == has_cols)
    throw ParseError("provide exactly one of \"lattice_basis\" or \"grading_columns\"");
  if (has_basis) {
    IntMat rows;
    for (const auto& row : j.at("lattice_basis")) rows.push_back(json_to_intvec(row));
    p.lattice_basis = std::move(rows);
  } else {
    std::vector<IntVec> cols;
    for (const auto& col : j.at("grading_columns")) cols.push_back(json_to_intvec(col));
    if (static_cast<long>(cols.size()) != p.n)
      throw ParseError("expected n grading columns");
    p.grading_columns = std::move(cols);
  }
  return p;
}

Json problem_to_json(const ProblemSpec& p) {
  Json j;
  j["n"] = p.n;
  if (p.lattice_basis) {
    Json rows = Json::array();
    for (const auto& row : *p.lattice_basis) rows.push_back(intvec_to_json(row));
    j["lattice_basis"] = std::move(rows);
  }
  if (p.grading_columns) {
    Json cols = Json::array();
    for (const auto& col : *p.grading_columns) cols.push_back(intvec_to_json(col));
    j["grading_columns"] = std::move(cols);
  }
  return j;
}

GradingMap build_grading(const ProblemSpec& p) {
  if (p.lattice_basis) return smith_presentation(LatticePresentation{p.n, *p.lattice_basis});
  return GradingMap::from_columns(p.n, *p.grading_columns);
}

Rat parse_rational(const std::string& s) {
  try {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw ParseError("invalid rational: " + s);
  }
}

std::string rational_string(const Rat& r) {
  if (boost::multiprecision::denominator(r) == 1)
    return boost::multiprecision::numerator(r).str();
  return r.str();
}

Degree parse_degree(const std::string& s, const GradingMap& g) {
  IntVec parts;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw ParseError("empty degree coordinate");
    try {
      parts.push_back(Int(tok));
    } catch (const std::exception&) {
      throw ParseError("invalid degree coordinate: " + tok);
    }
  }
  const std::size_t want = g.free_rank() + g.torsion_moduli().size();
  if (parts.size() != want) {
    std::ostringstream os;
    os << "degree needs " << want << " coordinates (" << g.free_rank() << " free";
    if (!g.torsion_moduli().empty()) os << " + " << g.torsion_moduli().size() << " torsion";
    os << "), got " << parts.size();
    throw ParseError(os.str());
  }
  Degree d;
  d.free.assign(parts.begin(), parts.begin() + g.free_rank());
  d.torsion.assign(parts.begin() + g.free_rank(), parts.end());
  for (std::size_t j = 0; j < d.torsion.size(); ++j) {
    d.torsion[j] %= g.torsion_moduli()[j];
    if (d.torsion[j] < 0) d.torsion[j] += g.torsion_moduli()[j];
  }
  return d;
}

std::string degree_string(const Degree& d) {
  std::ostringstream os;
  bool first = true;
  for (const Int& x : d.free) {
    if (!first) os << ",";
    os << x;
    first = false;
  }
  for (const Int& x : d.torsion) {
    if (!first) os << ",";
    os << x;
    first = false;
  }
  return os.str();
}

Json degree_to_json(const Degree& d) {
  Json a = Json::array();
  for (const Int& x : d.free) a.push_back(int_to_i64(x));
  for (const Int& x : d.torsion) a.push_back(int_to_i64(x));
  return a;
}

Json grading_to_json(const GradingMap& g) {
  Json j;
  j["n"] = g.n();
  j["free_rank"] = g.free_rank();
  j["torsion_moduli"] = intvec_to_json(g.torsion_moduli());
  Json y = Json::array();
  for (const Rat& v : g.y()) y.push_back(rational_string(v));
  j["y"] = std::move(y);
  j["y_scaled"] = intvec_to_json(g.y_scaled());
  j["generator_weights"] = intvec_to_json(g.weights());
  Json cols = Json::array();
  for (const Degree& a : g.generator_degrees()) cols.push_back(degree_to_json(a));
  j["generator_degrees"] = std::move(cols);
  std::ostringstream legend;
  legend << "degree coordinates: " << g.free_rank() << " free";
  for (std::size_t t = 0; t < g.torsion_moduli().size(); ++t)
    legend << ", then residue mod " << g.torsion_moduli()[t];
  j["degree_legend"] = legend.str();
  return j;
}

Json expo_to_json(const Expo& u) {
  Json a = Json::array();
  for (std::int64_t e : u) a.push_back(e);
  return a;
}

Json binomial_to_json(const Binomial& f) {
  Json j;
  j["plus"] = expo_to_json(f.plus);
  j["minus"] = expo_to_json(f.minus);
  j["degree"] = degree_to_json(f.degree);
  j["string"] = binomial_string(f);
  return j;
}

std::vector<Binomial> parse_generators(const Json& j, const GradingMap& g) {
  if (!j.is_object() || !j.contains("generators"))
    throw ParseError("generators file needs a \"generators\" array");
  std::vector<Binomial> out;
  for (const auto& gen : j.at("generators")) {
    if (!gen.contains("plus") || !gen.contains("minus"))
      throw ParseError("each generator needs \"plus\" and \"minus\" exponent vectors");
    Expo plus, minus;
    for (const auto& x : gen.at("plus")) plus.push_back(x.get<std::int64_t>());
    for (const auto& x : gen.at("minus")) minus.push_back(x.get<std::int64_t>());
    out.push_back(make_binomial(std::move(plus), std::move(minus), g));
  }
  return out;
}

}  // namespace lsz
