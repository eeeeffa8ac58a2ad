#pragma once

#include "lsz/fibers.hpp"

namespace lsz {

// Facet-listed simplicial complex. The empty facet {} encodes the complex
// whose only face is the empty set; no facets at all is the void complex.
// Vertices absent from every facet are ghost vertices: labels that are not
// faces (they still count as singleton components).
struct SimplicialComplex {
  std::vector<std::string> vertex_labels;
  std::vector<std::vector<int>> facets;  // sorted vertex index lists, antichain
};

enum class Field { Q, Fp };  // Fp uses kHomologyPrime

// Reduced homology dimensions h_0..h_top; h_minus1 is 1 exactly for the
// complex {emptyset}.
struct HomologyProfile {
  std::vector<long> dims;
  long h_minus1 = 0;
  Field field = Field::Q;
};

bool same_homology(const HomologyProfile& a, const HomologyProfile& b);

struct FaceLimitExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultFaceLimit = std::size_t{1} << 20;

// Complex on the variable indices: facets are the maximal monomial supports.
SimplicialComplex build_delta_b(const Fiber& f);
// Complex on the fiber monomials: facets are the maximal sets
// V_i = { u in C_b : u_i > 0 }. The monomial 1 becomes a ghost vertex.
SimplicialComplex build_gcd_complex(const Fiber& f);

HomologyProfile reduced_homology(const SimplicialComplex& c, Field field = Field::Q,
                                 std::size_t face_limit = kDefaultFaceLimit);

// Connected components (vertex index sets), ordered by smallest member;
// ghost vertices are singletons.
std::vector<std::vector<int>> components(const SimplicialComplex& c);

// Exact face count of the complex generated by the facets; throws
// FaceLimitExceeded beyond the limit. Exposed for size gating.
std::size_t count_faces(const SimplicialComplex& c, std::size_t face_limit);

}  // namespace lsz
