#include "psts/incidence.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace psts {

IncidenceStructure::IncidenceStructure(std::string name, std::vector<std::string> labels,
                                       std::vector<Line> lines, LabelKind kind)
    : name_(std::move(name)), labels_(std::move(labels)), lines_(std::move(lines)), kind_(kind) {
  for (auto& l : lines_) std::sort(l.begin(), l.end());
  std::sort(lines_.begin(), lines_.end());
  build_index();
}

void IncidenceStructure::build_index() {
  const int n = v();
  pair_line_.assign(static_cast<size_t>(n) * n, -1);
  lines_of_point_.assign(n, {});
  neighbors_.assign(n, {});
  for (int li = 0; li < b(); ++li) {
    const Line& l = lines_[li];
    bool ok = true;
    for (Point p : l)
      if (p < 0 || p >= n) ok = false;
    if (!ok || l[0] == l[1] || l[1] == l[2]) continue;  // validate() reports these
    for (Point p : l) lines_of_point_[p].push_back(li);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j) {
          auto& cell = pair_line_[static_cast<size_t>(l[i]) * n + l[j]];
          if (cell == -1) cell = li;
        }
  }
  for (int p = 0; p < n; ++p) {
    for (int li : lines_of_point_[p])
      for (Point q : lines_[li])
        if (q != p) neighbors_[p].push_back(q);
    std::sort(neighbors_[p].begin(), neighbors_[p].end());
    neighbors_[p].erase(std::unique(neighbors_[p].begin(), neighbors_[p].end()),
                        neighbors_[p].end());
  }
}

std::optional<Point> IncidenceStructure::find_point(const std::string& label) const {
  for (int p = 0; p < v(); ++p)
    if (labels_[p] == label) return p;
  return std::nullopt;
}

bool IncidenceStructure::collinear(Point p, Point q) const { return line_through(p, q) != -1; }

int IncidenceStructure::line_through(Point p, Point q) const {
  if (p == q || p < 0 || q < 0 || p >= v() || q >= v()) return -1;
  return pair_line_[static_cast<size_t>(p) * v() + q];
}

Point IncidenceStructure::third(Point p, Point q) const {
  if (p < 0 || q < 0 || p >= v() || q >= v()) throw std::out_of_range("point index out of range");
  if (p == q) return p;
  int li = line_through(p, q);
  if (li == -1) return kUndefined;
  for (Point r : lines_[li])
    if (r != p && r != q) return r;
  return kUndefined;  // unreachable for nondegenerate lines
}

bool IncidenceStructure::has_line(const Line& l) const {
  Line s = l;
  std::sort(s.begin(), s.end());
  return std::binary_search(lines_.begin(), lines_.end(), s);
}

IncidenceStructure IncidenceStructure::renamed(std::string name) const {
  return IncidenceStructure(std::move(name), labels_, lines_, kind_);
}

IncidenceStructure IncidenceStructure::relabeled_plain() const {
  std::vector<std::string> labels(labels_.size());
  for (size_t i = 0; i < labels.size(); ++i) labels[i] = "p" + std::to_string(i);
  return IncidenceStructure(name_, std::move(labels), lines_, LabelKind::Plain);
}

IncidenceStructure IncidenceStructure::restricted_to(const std::vector<Point>& pts,
                                                     std::string name) const {
  std::vector<int> idx(v(), -1);
  std::vector<std::string> labels;
  for (Point p : pts) {
    idx[p] = static_cast<int>(labels.size());
    labels.push_back(labels_[p]);
  }
  std::vector<Line> lines;
  for (const Line& l : lines_) {
    if (idx[l[0]] != -1 && idx[l[1]] != -1 && idx[l[2]] != -1)
      lines.push_back({idx[l[0]], idx[l[1]], idx[l[2]]});
  }
  return IncidenceStructure(std::move(name), std::move(labels), std::move(lines), kind_);
}

std::vector<std::string> validate(const IncidenceStructure& s) {
  std::vector<std::string> out;
  const int n = s.v();
  {
    std::set<std::string> seen;
    for (int p = 0; p < n; ++p)
      if (!seen.insert(s.label(p)).second)
        out.push_back("duplicate point label \"" + s.label(p) + "\"");
  }
  std::map<std::pair<Point, Point>, int> pair_count;
  std::map<Line, int> line_count;
  for (int li = 0; li < s.b(); ++li) {
    const Line& l = s.line(li);
    bool in_range = true;
    for (Point p : l)
      if (p < 0 || p >= n) in_range = false;
    std::ostringstream os;
    os << "{" << l[0] << "," << l[1] << "," << l[2] << "}";
    if (!in_range) {
      out.push_back("line " + os.str() + " has point index out of range");
      continue;
    }
    if (l[0] == l[1] || l[1] == l[2]) {
      out.push_back("degenerate line " + os.str());
      continue;
    }
    if (++line_count[l] == 2) out.push_back("duplicate line " + os.str());
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) ++pair_count[{l[i], l[j]}];
  }
  for (const auto& [pq, c] : pair_count)
    if (c > 1) {
      std::ostringstream os;
      os << "pair (" << pq.first << "," << pq.second << ") lies on " << c << " lines";
      out.push_back(os.str());
    }
  return out;
}

bool is_valid(const IncidenceStructure& s) { return validate(s).empty(); }

void require_valid(const IncidenceStructure& s) {
  auto violations = validate(s);
  if (!violations.empty())
    throw std::invalid_argument("invalid PSTS \"" + s.name() + "\": " + violations.front());
}

ConfigParams params(const IncidenceStructure& s) {
  ConfigParams p;
  p.v = s.v();
  p.b = s.b();
  p.k = 3;
  if (p.v > 0) {
    int r0 = s.degree(0);
    bool reg = true;
    for (int q = 1; q < p.v; ++q)
      if (s.degree(q) != r0) reg = false;
    p.regular = reg;
    if (reg) p.r = r0;
  }
  return p;
}

std::vector<std::vector<Point>> connected_components(const IncidenceStructure& s) {
  const int n = s.v();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Line& l : s.lines()) {
    int a = find(l[0]);
    parent[find(l[1])] = a;
    parent[find(l[2])] = a;
  }
  std::map<int, std::vector<Point>> comps;
  for (int p = 0; p < n; ++p) comps[find(p)].push_back(p);
  std::vector<std::vector<Point>> out;
  for (auto& [root, pts] : comps) out.push_back(std::move(pts));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_triangle(const IncidenceStructure& s, const std::array<Point, 3>& pts) {
  auto [p, q, r] = pts;
  if (p == q || q == r || p == r) return false;
  if (!s.collinear(p, q) || !s.collinear(q, r) || !s.collinear(p, r)) return false;
  return !s.has_line({p, q, r});
}

std::vector<Triangle> triangles(const IncidenceStructure& s) {
  std::vector<Triangle> out;
  for (Point p = 0; p < s.v(); ++p) {
    const auto& nb = s.neighbors(p);
    for (size_t i = 0; i < nb.size(); ++i) {
      if (nb[i] <= p) continue;
      for (size_t j = i + 1; j < nb.size(); ++j) {
        Point q = nb[i], r = nb[j];
        if (!s.collinear(q, r)) continue;
        if (s.has_line({p, q, r})) continue;
        out.push_back(Triangle{{p, q, r}});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

static std::array<Point, 3> ordered_derived(const IncidenceStructure& s,
                                            const std::array<Point, 3>& d) {
  // Opposite-vertex convention; see TriangleSeries.
  return {s.third(d[1], d[2]), s.third(d[2], d[0]), s.third(d[0], d[1])};
}

DerivedSet derived_triangle(const IncidenceStructure& s, const Triangle& t) {
  if (!is_triangle(s, t.pts)) throw std::invalid_argument("not a triangle of the structure");
  auto d = ordered_derived(s, t.pts);
  DerivedSet out;
  for (Point p : d)
    if (p != kUndefined) {
      ++out.multiset_size;
      out.points.push_back(p);
    }
  std::sort(out.points.begin(), out.points.end());
  out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
  if (out.points.size() < 3) {
    out.kind = DerivedKind::Degenerate;
  } else if (s.has_line({out.points[0], out.points[1], out.points[2]})) {
    out.kind = DerivedKind::Line;
  } else if (is_triangle(s, {out.points[0], out.points[1], out.points[2]})) {
    out.kind = DerivedKind::Triangle;
  } else {
    out.kind = DerivedKind::Degenerate;
  }
  return out;
}

TriangleSeries triangle_series(const IncidenceStructure& s, const Triangle& t, int max_len) {
  if (max_len < 1) throw std::invalid_argument("max_len must be >= 1");
  if (!is_triangle(s, t.pts)) throw std::invalid_argument("not a triangle of the structure");
  TriangleSeries out;
  auto set_of = [](std::array<Point, 3> d) {
    std::sort(d.begin(), d.end());
    return d;
  };
  std::vector<std::array<Point, 3>> seen_sets;
  std::array<Point, 3> cur = t.pts;
  out.steps.push_back(cur);
  seen_sets.push_back(set_of(cur));
  for (;;) {
    auto next = ordered_derived(s, cur);
    bool defined = next[0] != kUndefined && next[1] != kUndefined && next[2] != kUndefined;
    if (!defined || next[0] == next[1] || next[1] == next[2] || next[0] == next[2]) {
      out.halt = SeriesHalt::Degenerate;
      return out;
    }
    auto ns = set_of(next);
    if (s.has_line({ns[0], ns[1], ns[2]})) {
      out.halt = SeriesHalt::Line;
      return out;
    }
    if (!is_triangle(s, ns)) {
      out.halt = SeriesHalt::Degenerate;
      return out;
    }
    if (ns == seen_sets.front()) {
      out.halt = SeriesHalt::Closed;
      out.period = static_cast<int>(out.steps.size());
      std::array<int, 3> gamma{};
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          if (next[j] == out.steps.front()[k]) gamma[j] = k;
      out.gamma = gamma;
      return out;
    }
    if (std::find(seen_sets.begin(), seen_sets.end(), ns) != seen_sets.end()) {
      out.halt = SeriesHalt::Repeat;
      return out;
    }
    if (static_cast<int>(out.steps.size()) >= max_len) {
      out.halt = SeriesHalt::Truncated;
      return out;
    }
    out.steps.push_back(next);
    seen_sets.push_back(ns);
    cur = next;
  }
}

bool is_translation(const std::array<int, 3>& p) {
  return p[0] != 0 && p[1] != 1 && p[2] != 2;  // fixed-point-free on 3 elements => 3-cycle
}

bool is_reflection(const std::array<int, 3>& p) {
  int fixed = (p[0] == 0) + (p[1] == 1) + (p[2] == 2);
  return fixed == 1;
}

std::vector<Point> subspace_closure(const IncidenceStructure& s, std::vector<Point> seed) {
  if (seed.empty()) throw std::invalid_argument("seed must be nonempty");
  std::vector<char> in(s.v(), 0);
  std::vector<Point> members;
  auto push = [&](Point p) {
    if (!in[p]) {
      in[p] = 1;
      members.push_back(p);
    }
  };
  for (Point p : seed) push(p);
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = 0; j < i; ++j) {
      Point r = s.third(members[i], members[j]);
      if (r != kUndefined) push(r);
    }
  // Fixed point iteration: new members introduce new pairs with all members.
  bool grew = true;
  while (grew) {
    grew = false;
    size_t n = members.size();
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j) {
        Point r = s.third(members[i], members[j]);
        if (r != kUndefined && !in[r]) {
          push(r);
          grew = true;
        }
      }
  }
  std::sort(members.begin(), members.end());
  return members;
}

namespace {

void bron_kerbosch(const std::vector<std::vector<char>>& adj, std::vector<Point>& r,
                   std::vector<Point> p, std::vector<Point> x,
                   std::vector<std::vector<Point>>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  Point pivot = !p.empty() ? p.front() : x.front();
  int best = -1;
  for (Point u : p) {
    int cnt = 0;
    for (Point w : p)
      if (adj[u][w]) ++cnt;
    if (cnt > best) {
      best = cnt;
      pivot = u;
    }
  }
  std::vector<Point> cand;
  for (Point u : p)
    if (!adj[pivot][u]) cand.push_back(u);
  for (Point u : cand) {
    std::vector<Point> np, nx;
    for (Point w : p)
      if (adj[u][w]) np.push_back(w);
    for (Point w : x)
      if (adj[u][w]) nx.push_back(w);
    r.push_back(u);
    bron_kerbosch(adj, r, std::move(np), std::move(nx), out);
    r.pop_back();
    p.erase(std::remove(p.begin(), p.end(), u), p.end());
    x.push_back(u);
  }
}

}  // namespace

std::vector<std::vector<Point>> maximal_anticliques(const IncidenceStructure& s) {
  const int n = s.v();
  // Cliques of the noncollinearity graph.
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (p != q && !s.collinear(p, q)) adj[p][q] = 1;
  std::vector<std::vector<Point>> out;
  std::vector<Point> r, p(n), x;
  std::iota(p.begin(), p.end(), 0);
  bron_kerbosch(adj, r, std::move(p), std::move(x), out);
  for (auto& c : out) std::sort(c.begin(), c.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool is_anticlique_hyperplane(const IncidenceStructure& s, const std::vector<Point>& h) {
  std::vector<char> in(s.v(), 0);
  for (Point p : h) {
    if (p < 0 || p >= s.v()) return false;
    in[p] = 1;
  }
  for (size_t i = 0; i < h.size(); ++i)
    for (size_t j = i + 1; j < h.size(); ++j)
      if (s.collinear(h[i], h[j])) return false;
  for (const Line& l : s.lines()) {
    int c = in[l[0]] + in[l[1]] + in[l[2]];
    if (c != 1) return false;
  }
  return true;
}

bool is_linear_space(const IncidenceStructure& s) {
  if (!is_valid(s)) return false;
  for (int p = 0; p < s.v(); ++p)
    for (int q = p + 1; q < s.v(); ++q)
      if (!s.collinear(p, q)) return false;
  return true;
}

// ---- Product labels ----

std::optional<ProductLabel> parse_product_label(const std::string& label) {
  auto pos = label.rfind('|');
  if (pos == std::string::npos || pos == 0 || pos + 1 == label.size()) return std::nullopt;
  return ProductLabel{label.substr(0, pos), label.substr(pos + 1)};
}

std::string make_product_label(const std::string& base, const std::string& weight) {
  return base + "|" + weight;
}

namespace {

AbelianGroup infer_group(const std::vector<std::vector<int>>& weight_coords) {
  size_t arity = weight_coords.front().size();
  std::vector<int> moduli(arity, 1);
  for (const auto& c : weight_coords) {
    if (c.size() != arity) throw std::invalid_argument("inconsistent weight arity in labels");
    for (size_t i = 0; i < arity; ++i) moduli[i] = std::max(moduli[i], c[i] + 1);
  }
  return AbelianGroup(moduli);
}

std::vector<int> parse_weight_coords(const std::string& w) {
  std::vector<int> coords;
  try {
    if (!w.empty() && w.front() == '(') {
      if (w.back() != ')') throw std::invalid_argument("");
      std::istringstream is(w.substr(1, w.size() - 2));
      std::string tok;
      while (std::getline(is, tok, ',')) coords.push_back(std::stoi(tok));
    } else {
      size_t used = 0;
      coords.push_back(std::stoi(w, &used));
      if (used != w.size()) throw std::invalid_argument("");
    }
  } catch (...) {
    throw std::invalid_argument("label weight \"" + w + "\" is not a group element");
  }
  for (int c : coords)
    if (c < 0) throw std::invalid_argument("negative weight in label");
  return coords;
}

IncidenceStructure build_base(const IncidenceStructure& s, const std::vector<Point>& base_of,
                              const std::vector<std::string>& base_labels) {
  std::set<Line> base_lines;
  for (const Line& l : s.lines()) {
    Line bl = {base_of[l[0]], base_of[l[1]], base_of[l[2]]};
    std::sort(bl.begin(), bl.end());
    if (bl[0] == bl[1] || bl[1] == bl[2])
      throw std::invalid_argument("line base-label image has fewer than 3 points; "
                                  "labeling is not a congruence");
    base_lines.insert(bl);
  }
  return IncidenceStructure("base(" + s.name() + ")", base_labels,
                            std::vector<Line>(base_lines.begin(), base_lines.end()),
                            LabelKind::Plain);
}

}  // namespace

ProductView::ProductView(const IncidenceStructure& s)
    : host_(s),
      group_(AbelianGroup::trivial()),
      base_("", {}, {}),
      base_of_(),
      weights_() {
  std::vector<std::string> base_labels;
  std::map<std::string, Point> base_index;
  std::vector<std::vector<int>> coords(s.v());
  base_of_.resize(s.v());
  for (Point p = 0; p < s.v(); ++p) {
    auto pl = parse_product_label(s.label(p));
    if (!pl) throw std::invalid_argument("label \"" + s.label(p) + "\" is not a product label");
    auto [it, fresh] = base_index.try_emplace(pl->base, static_cast<Point>(base_labels.size()));
    if (fresh) base_labels.push_back(pl->base);
    base_of_[p] = it->second;
    coords[p] = parse_weight_coords(pl->weight);
  }
  group_ = infer_group(coords);
  weights_.reserve(s.v());
  for (Point p = 0; p < s.v(); ++p) weights_.push_back(group_.reduce(coords[p]));
  base_ = build_base(s, base_of_, base_labels);
  fibers_.assign(base_.v(), {});
  for (Point p = 0; p < s.v(); ++p) fibers_[base_of_[p]].push_back(p);
}

int ProductView::modulus() const {
  if (group_.factors() != 1)
    throw std::invalid_argument("weight group is not a single cyclic factor");
  return group_.moduli()[0];
}

int ProductView::cyclic_weight_of(Point p) const {
  if (group_.factors() != 1)
    throw std::invalid_argument("weight group is not a single cyclic factor");
  return weights_.at(p).coords[0];
}

Point ProductView::at(Point base_pt, const GroupElem& w) const {
  for (Point p : fibers_.at(base_pt))
    if (weights_[p] == w) return p;
  return kUndefined;
}

Point ProductView::at(Point base_pt, int cyclic_w) const {
  int m = modulus();
  cyclic_w %= m;
  if (cyclic_w < 0) cyclic_w += m;
  return at(base_pt, GroupElem{{cyclic_w}});
}

}  // namespace psts
