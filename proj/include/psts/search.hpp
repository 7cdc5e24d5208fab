#pragma once

#include <functional>
#include <vector>

#include "psts/incidence.hpp"

namespace psts {

using PointMap = std::vector<Point>;  // pattern point -> host point

struct SearchOptions {
  // Isomorphism mode: requires equal point/line counts, prunes with joint
  // color refinement and preserves noncollinearity. Otherwise enumerates
  // embeddings (injective, line-onto-line maps).
  bool iso_mode = false;
  long limit = -1;  // stop after this many maps; -1 = all
  int workers = 1;  // parallel split of the root candidate loop
};

// All injective line-preserving maps of `pattern` into `host`, in canonical
// (lexicographic by map restricted to the internal search order) order
// independent of worker count.
std::vector<PointMap> enumerate_monomorphisms(const IncidenceStructure& pattern,
                                              const IncidenceStructure& host,
                                              const SearchOptions& opts = {});

// Stable point colors under iterated line-neighborhood refinement, seeded
// with degree, triangle-through and Veblen-through counts. Colors of a and b
// are computed jointly so equal colors are comparable across the two.
std::pair<std::vector<int>, std::vector<int>> joint_colors(const IncidenceStructure& a,
                                                           const IncidenceStructure& b);

// Per-point census used as refinement seed; isomorphism invariant.
std::vector<long> triangles_through(const IncidenceStructure& s);
std::vector<long> veblens_through(const IncidenceStructure& s);

// Independent Veblen enumeration via concurrent line pairs (not the generic
// backtracking engine): each hit is the sorted 6-point set.
std::vector<std::array<Point, 6>> veblen_point_sets(const IncidenceStructure& s);

}  // namespace psts
