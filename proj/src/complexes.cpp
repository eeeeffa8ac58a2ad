#include "lsz/complexes.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lsz {

namespace {

// Deduplicate and drop faces contained in another face.
std::vector<std::vector<int>> antichain(std::vector<std::vector<int>> sets) {
  std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  std::vector<std::vector<int>> kept;
  for (const auto& s : sets) {
    bool dominated = false;
    for (const auto& k : kept)
      if (std::includes(k.begin(), k.end(), s.begin(), s.end())) {
        dominated = true;
        break;
      }
    if (!dominated) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace

SimplicialComplex build_delta_b(const Fiber& f) {
  SimplicialComplex c;
  if (f.empty()) return c;  // void complex
  const std::size_t n = f.monomials[0].size();
  std::vector<std::vector<int>> supports;
  std::set<int> used;
  for (const Expo& u : f.monomials) {
    std::vector<int> s;
    for (std::size_t i = 0; i < n; ++i)
      if (u[i] > 0) s.push_back(static_cast<int>(i));
    for (int v : s) used.insert(v);
    supports.push_back(std::move(s));
  }
  // compact away variables outside every support
  std::map<int, int> local;
  for (int v : used) {
    local[v] = static_cast<int>(c.vertex_labels.size());
    c.vertex_labels.push_back(var_name(v, n));
  }
  for (auto& s : supports)
    for (int& v : s) v = local[v];
  c.facets = antichain(std::move(supports));
  return c;
}

SimplicialComplex build_gcd_complex(const Fiber& f) {
  SimplicialComplex c;
  if (f.empty()) return c;
  const std::size_t n = f.monomials[0].size();
  for (const Expo& u : f.monomials) c.vertex_labels.push_back(monomial_string(u));
  std::vector<std::vector<int>> vsets;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> vi;
    for (std::size_t k = 0; k < f.monomials.size(); ++k)
      if (f.monomials[k][i] > 0) vi.push_back(static_cast<int>(k));
    if (!vi.empty()) vsets.push_back(std::move(vi));
  }
  c.facets = antichain(std::move(vsets));
  return c;
}

namespace {

// Face lattice generated downward from the facets.
std::set<std::vector<int>> enumerate_faces(const SimplicialComplex& c, std::size_t face_limit) {
  std::set<std::vector<int>> faces;
  for (const auto& facet : c.facets) {
    if (facet.size() > 8 * sizeof(std::size_t) - 1)
      throw FaceLimitExceeded("facet too large to expand");
    const std::size_t subsets = std::size_t{1} << facet.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
      std::vector<int> face;
      for (std::size_t k = 0; k < facet.size(); ++k)
        if (mask & (std::size_t{1} << k)) face.push_back(facet[k]);
      faces.insert(std::move(face));
      if (faces.size() > face_limit) throw FaceLimitExceeded("face count exceeds limit");
    }
  }
  return faces;
}

}  // namespace

std::size_t count_faces(const SimplicialComplex& c, std::size_t face_limit) {
  return enumerate_faces(c, face_limit).size();
}

HomologyProfile reduced_homology(const SimplicialComplex& c, Field field,
                                 std::size_t face_limit) {
  HomologyProfile p;
  p.field = field;
  if (c.facets.empty()) return p;  // void complex: no homology anywhere

  const std::set<std::vector<int>> faces = enumerate_faces(c, face_limit);

  long top = -1;
  for (const auto& f : faces) top = std::max(top, static_cast<long>(f.size()) - 1);

  // level l holds the faces of dimension l - 1; level 0 is the empty face
  std::vector<std::vector<std::vector<int>>> by_level(top + 2);
  std::vector<std::map<std::vector<int>, long>> index(top + 2);
  for (const auto& f : faces) {
    const long level = static_cast<long>(f.size());
    index[level].emplace(f, static_cast<long>(by_level[level].size()));
    by_level[level].push_back(f);
  }

  GradedComplex chain;
  chain.dims.resize(top + 2);
  chain.boundary.resize(top + 2);
  for (long l = 0; l <= top + 1; ++l) chain.dims[l] = static_cast<long>(by_level[l].size());
  for (long l = 1; l <= top + 1; ++l) {
    IntMat m(chain.dims[l - 1], IntVec(chain.dims[l], 0));
    for (long j = 0; j < chain.dims[l]; ++j) {
      const auto& face = by_level[l][j];
      for (std::size_t k = 0; k < face.size(); ++k) {
        std::vector<int> sub = face;
        sub.erase(sub.begin() + k);
        m[index[l - 1].at(sub)][j] = (k % 2 == 0) ? 1 : -1;
      }
    }
    chain.boundary[l] = std::move(m);
  }
  chain.verify_dd_zero();

  const std::vector<long> h =
      field == Field::Q ? chain.homology_q() : chain.homology_mod_p(kHomologyPrime);
  p.h_minus1 = h.empty() ? 0 : h[0];
  p.dims.assign(h.begin() + 1, h.end());
  return p;
}

bool same_homology(const HomologyProfile& a, const HomologyProfile& b) {
  if (a.h_minus1 != b.h_minus1) return false;
  const std::size_t len = std::max(a.dims.size(), b.dims.size());
  for (std::size_t i = 0; i < len; ++i) {
    const long x = i < a.dims.size() ? a.dims[i] : 0;
    const long y = i < b.dims.size() ? b.dims[i] : 0;
    if (x != y) return false;
  }
  return true;
}

std::vector<std::vector<int>> components(const SimplicialComplex& c) {
  const int v = static_cast<int>(c.vertex_labels.size());
  DisjointSets dsu(v);
  for (const auto& facet : c.facets)
    for (std::size_t k = 1; k < facet.size(); ++k) dsu.unite(facet[0], facet[k]);
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < v; ++i) groups[dsu.find(i)].push_back(i);
  std::vector<std::vector<int>> comps;
  for (auto& [root, members] : groups) comps.push_back(std::move(members));
  return comps;  // map order = order of smallest member
}

}  // namespace lsz
