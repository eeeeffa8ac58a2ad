#pragma once

#include "lsz/betti.hpp"

namespace lsz {

struct NotHomogeneous : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotInIdeal : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// x^plus - x^minus in reduced form (disjoint supports), canonically oriented:
// plus is the lexicographically greater monomial.
struct Binomial {
  Expo plus;
  Expo minus;
  Degree degree;
  bool operator==(const Binomial&) const = default;
};

// Validates and canonicalizes; throws NotInIdeal on degree mismatch and
// std::invalid_argument on equal or non-reduced pairs.
Binomial make_binomial(Expo a, Expo b, const GradingMap& g);
std::string binomial_string(const Binomial& f);

// A-homogeneous polynomial as (monomial, coefficient) terms.
using PolyTerms = std::vector<std::pair<Expo, Rat>>;

// True iff no nonzero element of I in the same degree is supported on a
// proper subset of supp(p). Any sum-zero vector on >= 3 monomials restricts
// to a sum-zero vector on two of them, so this holds exactly for binomials.
bool is_simple_0syzygy(const PolyTerms& p, const GradingMap& g);

// Components of the graph on C_b with edges x^{a+w} ~ x^{a+w'} for a != 0 and
// w, w' in one lower fiber; built without the gcd complex.
std::vector<std::vector<Expo>> fiber_graph_components(const Degree& b, const GradingMap& g);

struct DegreeCensus {
  Degree b;
  std::vector<long> component_sizes;          // t_1(b), t_2(b), ... by lex-min member
  Int cross_pairs;                            // sum over ordered pairs i != j of t_i t_j
  std::vector<Binomial> representatives;      // one per unordered component pair
};

struct GeneratorCensus {
  std::vector<DegreeCensus> per_degree;
  Int total;                                   // sum of cross_pairs
  Rat bound;
  std::vector<std::string> warnings;
  std::vector<Binomial> all_representatives() const;
};

// Minimal-binomial census from the component structure of the gcd complexes.
GeneratorCensus census(const GradingMap& g, const Rat& bound);

// Independent count of the same quantity: per degree, the ordered monomial
// pairs whose difference lies outside the span of all multiples of
// lower-degree fiber differences (exact rank test).
Int count_minimal_binomials_bruteforce(const GradingMap& g, const Rat& bound);

// True iff the given binomials span the sum-zero hyperplane of every fiber
// up to the bound.
bool generation_check(const std::vector<Binomial>& bins, const GradingMap& g, const Rat& bound);

// Binomials forced (up to scalar) into every minimal generating set: minimal
// 1-Betti degrees whose fiber is two coprime monomials.
std::vector<Binomial> indispensable_binomials(const GradingMap& g, const Rat& bound,
                                              std::vector<std::string>* warnings = nullptr);

// Seeded greedy minimal generating set: degrees ascending, candidate pairs
// shuffled, kept when independent of everything chosen so far.
std::vector<Binomial> sample_minimal_generating_set(const GradingMap& g, const Rat& bound,
                                                    std::uint64_t seed);

struct StrongIndispVerdict {
  bool strongly_indispensable = true;
  bool has_witness = false;
  long witness_i = 0;
  Degree witness_b;
  std::string failed_condition;  // "homology_dimension" or "not_minimal"
};

// The minimal resolution is strongly indispensable iff every Betti degree
// (i >= 1) is minimal for its level and has beta_{i,b} = 1.
StrongIndispVerdict strongly_indispensable_check(const BettiTable& t, const GradingMap& g);

struct KoszulLevelDegree {
  long level = 0;
  Degree b;
  long multiplicity = 0;  // number of subsets J with b_J = b
  bool minimal = false;   // among level degrees
};

struct KoszulCIReport {
  std::vector<Degree> generator_degrees;
  std::vector<std::vector<bool>> leq_matrix;  // [i][j] = (b_i <= b_j)
  bool incomparable = false;
  bool exact_up_to_bound = false;
  long degrees_checked = 0;
  std::string first_exactness_failure;  // empty when exact
  bool generation_ok = false;
  std::vector<KoszulLevelDegree> levels;
  Rat bound;
  std::vector<std::string> warnings;
};

// Builds the Koszul complex on the given binomials degree by degree and
// verifies exactness in homological degrees >= 1, plus the degree data the
// strong-indispensability criterion needs.
KoszulCIReport koszul_ci_verify(const std::vector<Binomial>& fs, const GradingMap& g,
                                const Rat& bound);

// The Koszul graded piece in one total degree, exposed for verification.
GradedComplex koszul_ci_piece(const std::vector<Binomial>& fs, const Degree& c,
                              const GradingMap& g);

}  // namespace lsz
