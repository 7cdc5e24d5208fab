#pragma once

#include <optional>
#include <string>
#include <vector>

#include "psts/incidence.hpp"
#include "psts/search.hpp"

namespace psts {

struct Pattern {
  enum class Kind { Veblen, Fano, Desargues, Miter, Pappus, Poly, K4Closure, Custom };
  Kind kind = Kind::Veblen;
  int m = 0;                           // Poly
  std::array<int, 3> gamma{0, 1, 2};   // Poly
  std::optional<IncidenceStructure> custom;

  static Pattern named(Kind k);
  static Pattern poly(int m, const std::array<int, 3>& gamma);
  static Pattern of(const IncidenceStructure& s);
  // "veblen", "fano", "desargues", "miter", "pappus", "k4closure", "poly:4:s0".
  static Pattern parse(const std::string& text);

  // The pattern as a structure (not available for K4Closure).
  IncidenceStructure instantiate() const;
  std::string describe() const;
};

struct SubconfigHit {
  std::vector<Point> points;  // host points in pattern-role order (canonical)
  std::vector<Line> lines;    // matched host lines, sorted
  bool operator==(const SubconfigHit&) const = default;
};

inline constexpr long kAllHits = -1;

// All occurrences of the pattern, one per unordered occurrence (deduplicated
// modulo pattern automorphisms), canonically ordered. Desargues uses the
// structured center/triangles/focuses search; everything else the generic
// line-forcing backtracking engine.
std::vector<SubconfigHit> find_subconfig(const IncidenceStructure& host, const Pattern& p,
                                         long limit = kAllHits, int workers = 1);

// Generic-engine route, for cross-checking the structured searches.
std::vector<SubconfigHit> find_subconfig_generic(const IncidenceStructure& host,
                                                 const IncidenceStructure& pattern,
                                                 long limit = kAllHits, int workers = 1);

enum class Property {
  PaschFree,
  Moufangian,
  AntiFano,
  AntiDesargues,
  MiterFree,
  AntiPolypappian,  // takes the parameter m
  PappusDiagonals,
};

Property parse_property(const std::string& text, int* m_out);  // "anti-polypappian:4" etc.

struct PropertyResult {
  bool holds = false;
  std::string detail;           // witness description on failure
  std::vector<Point> witness;   // offending points, empty when holds
};

PropertyResult check_property(const IncidenceStructure& s, Property prop, int m = 0,
                              int workers = 1);

// Lemma-style taxonomy of triangles in a weaved structure.
enum class TriangleType {
  LevelTriangle = 1,    // (i,i,i) over a base triangle
  LevelLine = 2,        // (i,i,i) over a base line
  DownTriangle = 3,     // (i,i,i-1) over a base triangle
  UpTriangle = 4,       // (i,i,i+1) over a base triangle
  ThreeTriangle = 6,    // (i,i+1,i+2) over a base triangle; m=3 only
  ThreeLine = 7,        // (i,i+1,i+2) over a base line; m=3 only
  DownLine = 31,        // (i,i,i-1) over a base line
};

TriangleType classify_triangle(const ProductView& view, const Triangle& t);

// Every Veblen occurrence matches the weave template
// (a,i),(b,i),(c,i+1),(a⊙c,i),(b⊙c,i),(a⊙b,i+1) for some base triangle
// {a,b,c} whose derived set is a base line, and some level i.
bool veblen_census_conforms(const ProductView& view, int workers = 1);
// The template instances themselves (sorted host 6-point sets).
std::vector<std::array<Point, 6>> veblen_template_sets(const ProductView& view);

// Perspective triangle pairs with all three focuses present; used by both the
// structured Desargues search and the anti-Desargues predicate.
struct PerspectivePair {
  Point center;
  std::array<Point, 3> t1, t2;     // t1[k] and t2[k] collinear with center
  std::array<Point, 3> focuses;    // focus of sides (k,l): index 3-k-l
  bool focuses_collinear = false;  // the three focuses lie on a host line
};
void for_each_perspective_pair(const IncidenceStructure& s,
                               const std::function<bool(const PerspectivePair&)>& visit);

}  // namespace psts
