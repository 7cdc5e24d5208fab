#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "psts/incidence.hpp"
#include "psts/search.hpp"

namespace psts {

bool is_morphism(const IncidenceStructure& a, const IncidenceStructure& b, const PointMap& f);
bool is_automorphism(const IncidenceStructure& s, const PointMap& f);
PointMap compose(const PointMap& f, const PointMap& g);  // f after g
PointMap inverse(const PointMap& f);
PointMap identity_map(int n);

// Witness isomorphism or nullopt. Exact decision; invariant prefilter
// (params, degree multiset, triangle/Veblen counts) then partition-refinement
// backtracking.
std::optional<PointMap> isomorphism(const IncidenceStructure& a, const IncidenceStructure& b,
                                    int workers = 1);

// Injective line-preserving map of a into b, or nullopt.
std::optional<PointMap> embedding(const IncidenceStructure& a, const IncidenceStructure& b,
                                  int workers = 1);

struct AutGroup {
  std::vector<PointMap> elements;    // lexicographically sorted
  std::vector<PointMap> generators;  // canonical greedy choice
  long order = 0;
};

// Full enumeration; throws past the desk-scale size cap.
AutGroup automorphism_group(const IncidenceStructure& s, int workers = 1);

// The map (a,i) -> (f(a), i+u) on a weave-labeled structure.
PointMap product_automorphism(const ProductView& view, const PointMap& base_f, int shift);

struct ProductDecomposition {
  PointMap base_map;
  int shift = 0;
};
struct NotProduct {};

// Splits F as base_f x tau_u when possible; NotProduct otherwise.
std::variant<ProductDecomposition, NotProduct> decompose_automorphism(const ProductView& view,
                                                                      const PointMap& f);

}  // namespace psts
