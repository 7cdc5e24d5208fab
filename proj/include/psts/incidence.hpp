#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "psts/groups.hpp"

namespace psts {

using Point = int;
using Line = std::array<Point, 3>;  // stored ascending

inline constexpr Point kUndefined = -1;

enum class LabelKind { Plain, Product };

struct ConfigParams {
  int v = 0;
  int b = 0;
  int k = 3;
  std::optional<int> r;  // point degree when degree-regular
  bool regular = false;
};

struct Triangle {
  std::array<Point, 3> pts{};  // ascending
  auto operator<=>(const Triangle&) const = default;
};

// Immutable incidence structure with 3-point lines: the PSTS carrier.
// Construction canonicalizes line triples to ascending order and sorts the
// line list; it does not reject invalid data (see validate()).
class IncidenceStructure {
 public:
  IncidenceStructure(std::string name, std::vector<std::string> labels,
                     std::vector<Line> lines, LabelKind kind = LabelKind::Plain);

  const std::string& name() const { return name_; }
  int v() const { return static_cast<int>(labels_.size()); }
  int b() const { return static_cast<int>(lines_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Point p) const { return labels_.at(p); }
  const std::vector<Line>& lines() const { return lines_; }
  const Line& line(int idx) const { return lines_.at(idx); }
  LabelKind label_kind() const { return kind_; }

  std::optional<Point> find_point(const std::string& label) const;

  bool collinear(Point p, Point q) const;        // p != q and on a common line
  int line_through(Point p, Point q) const;      // line index or -1
  Point third(Point p, Point q) const;           // p (p==q), third point, or kUndefined
  const std::vector<int>& lines_of(Point p) const { return lines_of_point_.at(p); }
  int degree(Point p) const { return static_cast<int>(lines_of_point_.at(p).size()); }
  const std::vector<Point>& neighbors(Point p) const { return neighbors_.at(p); }
  bool has_line(const Line& l) const;

  IncidenceStructure renamed(std::string name) const;
  // Forget label structure (for isomorphism-blind comparisons).
  IncidenceStructure relabeled_plain() const;
  // Substructure induced on a point subset: the kept lines are those fully
  // inside the subset. Points keep their labels.
  IncidenceStructure restricted_to(const std::vector<Point>& pts, std::string name) const;

 private:
  void build_index();

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Line> lines_;
  LabelKind kind_;
  std::vector<int> pair_line_;  // v*v -> line index or -1
  std::vector<std::vector<int>> lines_of_point_;
  std::vector<std::vector<Point>> neighbors_;  // sorted collinear partners
};

// Every violated PSTS invariant, with offending indices; empty <=> valid.
std::vector<std::string> validate(const IncidenceStructure& s);
bool is_valid(const IncidenceStructure& s);
void require_valid(const IncidenceStructure& s);

ConfigParams params(const IncidenceStructure& s);
std::vector<std::vector<Point>> connected_components(const IncidenceStructure& s);

bool is_triangle(const IncidenceStructure& s, const std::array<Point, 3>& pts);
std::vector<Triangle> triangles(const IncidenceStructure& s);

enum class DerivedKind { Triangle, Line, Degenerate };

struct DerivedSet {
  DerivedKind kind = DerivedKind::Degenerate;
  std::vector<Point> points;  // distinct points, ascending (kUndefined dropped)
  int multiset_size = 0;      // defined products, with multiplicity
};

// The set D' = {p⊙q, q⊙r, r⊙p} of a triangle, classified.
DerivedSet derived_triangle(const IncidenceStructure& s, const Triangle& t);

enum class SeriesHalt { Closed, Line, Degenerate, Repeat, Truncated };

struct TriangleSeries {
  // Ordered triples delta^(0..n-1), all triangles. Thread convention:
  // delta'[j] = delta[j+1] ⊙ delta[j+2] (indices mod 3), so each vertex
  // thread replaces a vertex by the product of the other two.
  std::vector<std::array<Point, 3>> steps;
  SeriesHalt halt = SeriesHalt::Truncated;
  // When halt == Closed: delta^(period)[j] == delta^(0)[gamma[j]].
  std::optional<std::array<int, 3>> gamma;
  int period = 0;  // when halt == Closed
};

TriangleSeries triangle_series(const IncidenceStructure& s, const Triangle& t, int max_len);

bool is_translation(const std::array<int, 3>& perm);  // nontrivial 3-cycle
bool is_reflection(const std::array<int, 3>& perm);   // transposition

// Least superset of seed closed under the third-point operation.
std::vector<Point> subspace_closure(const IncidenceStructure& s, std::vector<Point> seed);

// All inclusion-maximal anti-cliques (independent sets of the collinearity
// graph), canonically ordered. Exact enumeration; desk-scale structures only.
std::vector<std::vector<Point>> maximal_anticliques(const IncidenceStructure& s);

// H is an anti-clique meeting every line in exactly one point.
bool is_anticlique_hyperplane(const IncidenceStructure& s, const std::vector<Point>& h);

// Every point pair on exactly one common line.
bool is_linear_space(const IncidenceStructure& s);

// ---- Product labels ----

struct ProductLabel {
  std::string base;
  std::string weight;
};

// Splits "base|weight" at the last '|'; nullopt when there is none.
std::optional<ProductLabel> parse_product_label(const std::string& label);
std::string make_product_label(const std::string& base, const std::string& weight);

// Parsed view of a product-labeled structure: per-point base label and
// group weight, the inferred weight group, and the base (quotient) structure.
class ProductView {
 public:
  // Throws when labels do not parse as product labels, weights are not
  // uniform, or some line's base-label image is not a 3-set.
  explicit ProductView(const IncidenceStructure& s);

  const IncidenceStructure& host() const { return host_; }
  const AbelianGroup& group() const { return group_; }
  const IncidenceStructure& base() const { return base_; }
  // Modulus when the weight group is a single cyclic factor; throws otherwise.
  int modulus() const;

  Point base_of(Point p) const { return base_of_.at(p); }
  const GroupElem& weight_of(Point p) const { return weights_.at(p); }
  int cyclic_weight_of(Point p) const;
  // Host point with a given base point and weight; kUndefined when absent.
  Point at(Point base_pt, const GroupElem& w) const;
  Point at(Point base_pt, int cyclic_w) const;
  const std::vector<Point>& fiber(Point base_pt) const { return fibers_.at(base_pt); }

 private:
  IncidenceStructure host_;  // owned copy, so views may outlive their source
  AbelianGroup group_;
  IncidenceStructure base_;
  std::vector<Point> base_of_;
  std::vector<GroupElem> weights_;
  std::vector<std::vector<Point>> fibers_;
};

}  // namespace psts
