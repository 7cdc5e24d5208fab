#include "psts/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace psts {

namespace {

std::string weave_name(int m, const IncidenceStructure& base) {
  return "weave(" + std::to_string(m) + "," + base.name() + ")";
}

IncidenceStructure product_points(std::string name, const IncidenceStructure& base,
                                  const AbelianGroup& g, std::set<Line> lines) {
  auto elems = g.elements();
  std::vector<std::string> labels;
  labels.reserve(base.v() * elems.size());
  for (int a = 0; a < base.v(); ++a)
    for (const auto& e : elems) labels.push_back(make_product_label(base.label(a), g.render(e)));
  return IncidenceStructure(std::move(name), std::move(labels),
                            std::vector<Line>(lines.begin(), lines.end()), LabelKind::Product);
}

}  // namespace

IncidenceStructure weave_eps(int m, int eps, const IncidenceStructure& base) {
  if (m < 3) throw std::invalid_argument("weave requires m >= 3");
  require_valid(base);
  eps %= m;
  if (eps < 0) eps += m;
  int ord = m / std::gcd(eps, m);
  if (ord < 3)
    throw std::invalid_argument("weave weight " + std::to_string(eps) + " has order " +
                                std::to_string(ord) + " < 3 in C_" + std::to_string(m) +
                                "; degenerate");
  AbelianGroup g = AbelianGroup::cyclic(m);
  auto idx = [&](Point a, int i) { return a * m + ((i % m + m) % m); };
  std::set<Line> lines;
  for (const Line& l : base.lines()) {
    for (int i = 0; i < m; ++i) {
      lines.insert({idx(l[0], i), idx(l[1], i), idx(l[2], i + eps)});
      lines.insert({idx(l[0], i), idx(l[1], i + eps), idx(l[2], i)});
      lines.insert({idx(l[0], i + eps), idx(l[1], i), idx(l[2], i)});
    }
  }
  std::string name = eps == 1 ? weave_name(m, base)
                              : "weave_eps(" + std::to_string(m) + "," + std::to_string(eps) +
                                    "," + base.name() + ")";
  return product_points(std::move(name), base, g, std::move(lines));
}

IncidenceStructure weave(int m, const IncidenceStructure& base) {
  return weave_eps(m, 1, base);
}

IncidenceStructure convolve(const IncidenceStructure& base, const AbelianGroup& g,
                            const GroupElem& eps) {
  require_valid(base);
  if (!g.contains(eps)) throw std::invalid_argument("epsilon does not belong to the group");
  auto elems = g.elements();
  const int ge = static_cast<int>(elems.size());
  std::map<GroupElem, int> eidx;
  for (int i = 0; i < ge; ++i) eidx[elems[i]] = i;
  auto idx = [&](Point a, int e) { return a * ge + e; };
  std::set<Line> lines;
  for (const Line& l : base.lines()) {
    for (int ia = 0; ia < ge; ++ia)
      for (int ib = 0; ib < ge; ++ib) {
        GroupElem gc = g.add(eps, g.neg(g.add(elems[ia], elems[ib])));
        lines.insert({idx(l[0], ia), idx(l[1], ib), idx(l[2], eidx.at(gc))});
      }
  }
  std::ostringstream name;
  name << "convolve(" << base.name() << ",";
  for (size_t i = 0; i < g.moduli().size(); ++i) name << (i ? "x" : "") << "c" << g.moduli()[i];
  name << "," << g.render(eps) << ")";
  return product_points(name.str(), base, g, std::move(lines));
}

std::array<int, 3> parse_gamma(const std::string& name) {
  if (name == "id") return {0, 1, 2};
  if (name == "t1") return {1, 2, 0};
  if (name == "t2") return {2, 0, 1};
  if (name == "s0") return {0, 2, 1};
  if (name == "s1") return {1, 0, 2};
  if (name == "s2") return {2, 1, 0};
  throw std::invalid_argument("unknown permutation of C_3: " + name);
}

std::string gamma_name(const std::array<int, 3>& g) {
  static const std::pair<std::array<int, 3>, const char*> table[] = {
      {{0, 1, 2}, "id"}, {{1, 2, 0}, "t1"}, {{2, 0, 1}, "t2"},
      {{0, 2, 1}, "s0"}, {{1, 0, 2}, "s1"}, {{2, 1, 0}, "s2"},
  };
  for (const auto& [perm, name] : table)
    if (perm == g) return name;
  throw std::invalid_argument("not a permutation of C_3");
}

IncidenceStructure poly_triangle(int m, const std::array<int, 3>& gamma) {
  if (m < 3) throw std::invalid_argument("poly_triangle requires m >= 3");
  {
    auto g = gamma;
    std::sort(g.begin(), g.end());
    if (g != std::array<int, 3>{0, 1, 2})
      throw std::invalid_argument("gamma must be a permutation of {0,1,2}");
  }
  auto idx = [&](int a, int i) { return a * m + i; };
  std::set<Line> lines;
  for (int i = 0; i + 1 < m; ++i)
    for (int c = 0; c < 3; ++c) {
      int a = (c + 1) % 3, b = (c + 2) % 3;
      lines.insert({idx(a, i), idx(b, i), idx(c, i + 1)});
    }
  for (int c = 0; c < 3; ++c) {
    int a = (c + 1) % 3, b = (c + 2) % 3;
    lines.insert({idx(a, m - 1), idx(b, m - 1), idx(gamma[c], 0)});
  }
  std::vector<std::string> labels;
  for (int a = 0; a < 3; ++a)
    for (int i = 0; i < m; ++i)
      labels.push_back("t" + std::to_string(a) + "_" + std::to_string(i));
  return IncidenceStructure("poly(" + std::to_string(m) + "," + gamma_name(gamma) + ")",
                            std::move(labels), std::vector<Line>(lines.begin(), lines.end()),
                            LabelKind::Plain);
}

IncidenceStructure quotient_by_base(const IncidenceStructure& s) {
  if (s.label_kind() != LabelKind::Product)
    throw std::invalid_argument("quotient_by_base needs a product-labeled structure");
  ProductView view(s);
  return view.base().renamed("quotient(" + s.name() + ")");
}

IncidenceStructure linear_completion(const IncidenceStructure& s) {
  require_valid(s);
  const int n = s.v();
  // Noncollinearity classes.
  std::vector<int> cls(n, -1);
  std::vector<std::vector<Point>> classes;
  for (Point p = 0; p < n; ++p) {
    if (cls[p] != -1) continue;
    std::vector<Point> c{p};
    for (Point q = 0; q < n; ++q)
      if (q != p && !s.collinear(p, q)) c.push_back(q);
    // Equivalence check: every member must be noncollinear with exactly the others.
    for (Point q : c)
      for (Point w : c)
        if (q != w && s.collinear(q, w))
          throw std::invalid_argument("noncollinearity is not an equivalence relation");
    for (Point q : c) {
      for (Point w = 0; w < n; ++w)
        if (w != q && !s.collinear(q, w) &&
            std::find(c.begin(), c.end(), w) == c.end())
          throw std::invalid_argument("noncollinearity is not an equivalence relation");
      cls[q] = static_cast<int>(classes.size());
    }
    std::sort(c.begin(), c.end());
    classes.push_back(std::move(c));
  }
  for (const auto& c : classes)
    if (c.size() != 3)
      throw std::invalid_argument("noncollinearity class of size " + std::to_string(c.size()) +
                                  "; no completion of this form");
  std::vector<Line> lines = s.lines();
  for (const auto& c : classes) lines.push_back({c[0], c[1], c[2]});
  IncidenceStructure out("complete(" + s.name() + ")", s.labels(), std::move(lines),
                         s.label_kind());
  if (!is_linear_space(out))
    throw std::invalid_argument("completion is not a linear space");
  return out;
}

// ---- catalog structures ----

namespace {

std::vector<std::vector<int>> ternary_vectors(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, 0);
  for (;;) {
    out.push_back(cur);
    int i = n - 1;
    while (i >= 0) {
      if (++cur[i] < 3) break;
      cur[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

std::string digits_label(const std::vector<int>& v) {
  std::string s;
  for (int d : v) s.push_back(static_cast<char>('0' + d));
  return s;
}

}  // namespace

IncidenceStructure ag(int n) {
  if (n < 1) throw std::invalid_argument("ag(n) requires n >= 1");
  auto vecs = ternary_vectors(n);
  const int v = static_cast<int>(vecs.size());
  auto index_of = [&](const std::vector<int>& x) {
    int idx = 0;
    for (int d : x) idx = idx * 3 + d;
    return idx;
  };
  std::set<Line> lines;
  for (int i = 0; i < v; ++i)
    for (int j = i + 1; j < v; ++j) {
      std::vector<int> w(n);
      for (int t = 0; t < n; ++t) w[t] = (2 * vecs[i][t] + 2 * vecs[j][t]) % 3;
      int k = index_of(w);
      if (k == i || k == j) continue;  // cannot happen over GF(3), kept as a guard
      Line l = {i, j, k};
      std::sort(l.begin(), l.end());
      lines.insert(l);
    }
  std::vector<std::string> labels;
  for (const auto& x : vecs) labels.push_back(digits_label(x));
  return IncidenceStructure("ag(" + std::to_string(n) + ")", std::move(labels),
                            std::vector<Line>(lines.begin(), lines.end()), LabelKind::Plain);
}

IncidenceStructure pg(int n) {
  if (n < 1) throw std::invalid_argument("pg(n) requires n >= 1");
  const int dim = n + 1;
  const int v = (1 << dim) - 1;  // nonzero vectors, point index = value - 1
  std::set<Line> lines;
  for (int u = 1; u <= v; ++u)
    for (int w = u + 1; w <= v; ++w) {
      int x = u ^ w;
      if (x > w) continue;  // each line reached from its two smaller members
      Line l = {u - 1, w - 1, x - 1};
      std::sort(l.begin(), l.end());
      lines.insert(l);
    }
  std::vector<std::string> labels;
  for (int u = 1; u <= v; ++u) {
    std::string s;
    for (int bit = dim - 1; bit >= 0; --bit) s.push_back((u >> bit) & 1 ? '1' : '0');
    labels.push_back(s);
  }
  return IncidenceStructure("pg(" + std::to_string(n) + ")", std::move(labels),
                            std::vector<Line>(lines.begin(), lines.end()), LabelKind::Plain);
}

IncidenceStructure slit(int n) {
  if (n < 2) throw std::invalid_argument("slit(n) requires n >= 2");
  IncidenceStructure a = ag(n);
  auto vecs = ternary_vectors(n);
  std::vector<Line> keep;
  for (const Line& l : a.lines()) {
    // Direction of the line; lines parallel to the last-coordinate hyperplane
    // (direction with last coordinate 0) are deleted.
    int d = (vecs[l[1]][n - 1] - vecs[l[0]][n - 1] + 3) % 3;
    if (d != 0) keep.push_back(l);
  }
  return IncidenceStructure("slit(" + std::to_string(n) + ")", a.labels(), std::move(keep),
                            LabelKind::Plain);
}

IncidenceStructure grassmannian(int n) {
  if (n < 3) throw std::invalid_argument("grassmannian(n) requires n >= 3");
  std::vector<std::pair<int, int>> pts;
  std::map<std::pair<int, int>, int> idx;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      idx[{i, j}] = static_cast<int>(pts.size());
      pts.push_back({i, j});
    }
  std::vector<Line> lines;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        lines.push_back({idx.at({i, j}), idx.at({i, k}), idx.at({j, k})});
  std::vector<std::string> labels;
  for (auto [i, j] : pts) labels.push_back(std::to_string(i) + "." + std::to_string(j));
  return IncidenceStructure("grassmannian(" + std::to_string(n) + ")", std::move(labels),
                            std::move(lines), LabelKind::Plain);
}

IncidenceStructure single_line() {
  return IncidenceStructure("single-line", {"a", "b", "c"}, {{0, 1, 2}}, LabelKind::Plain);
}

IncidenceStructure veblen() {
  // Points a,b,c,d,p,q with p,q the noncollinear pair.
  return IncidenceStructure("veblen", {"a", "b", "c", "d", "p", "q"},
                            {{4, 0, 1}, {4, 2, 3}, {5, 0, 2}, {5, 1, 3}}, LabelKind::Plain);
}

IncidenceStructure pappus() {
  return poly_triangle(3, {0, 1, 2}).renamed("pappus");
}

IncidenceStructure miter() {
  // a,b,c,ab,ac,bc,x realizing a⊙(b⊙c) = (a⊙b)⊙(a⊙c) = x.
  return IncidenceStructure("miter", {"a", "b", "c", "ab", "ac", "bc", "x"},
                            {{0, 1, 3}, {0, 2, 4}, {1, 2, 5}, {0, 5, 6}, {3, 4, 6}},
                            LabelKind::Plain);
}

IncidenceStructure mobius_8_3() {
  IncidenceStructure a = ag(2);
  std::vector<Point> keep;
  for (Point p = 0; p + 1 < a.v(); ++p) keep.push_back(p);  // drop the last point
  return a.restricted_to(keep, "mobius-8_3");
}

IncidenceStructure fano() { return pg(2).renamed("fano"); }

IncidenceStructure desargues() {
  // o; triangle a1,a2,a3; triangle b1,b2,b3; focuses f12,f13,f23 on the axis.
  // Indices:      0   1  2  3            4  5  6           7   8   9
  return IncidenceStructure(
      "desargues", {"o", "a1", "a2", "a3", "b1", "b2", "b3", "f12", "f13", "f23"},
      {{0, 1, 4}, {0, 2, 5}, {0, 3, 6},
       {1, 2, 7}, {4, 5, 7}, {1, 3, 8}, {4, 6, 8}, {2, 3, 9}, {5, 6, 9},
       {7, 8, 9}},
      LabelKind::Plain);
}

IncidenceStructure bose(int n) {
  if (n < 1) throw std::invalid_argument("bose(n) requires n >= 1");
  auto vecs = ternary_vectors(n);
  const int nv = static_cast<int>(vecs.size());
  auto idx = [&](int x, int i) { return x * 3 + i; };
  std::set<Line> lines;
  for (int x = 0; x < nv; ++x) lines.insert({idx(x, 0), idx(x, 1), idx(x, 2)});
  auto index_of = [&](const std::vector<int>& x) {
    int id = 0;
    for (int d : x) id = id * 3 + d;
    return id;
  };
  for (int x = 0; x < nv; ++x)
    for (int y = 0; y < nv; ++y) {
      if (x == y) continue;
      std::vector<int> z(n);
      for (int t = 0; t < n; ++t) z[t] = (2 * (vecs[x][t] + vecs[y][t])) % 3;
      int zi = index_of(z);
      for (int i = 0; i < 3; ++i) {
        Line l = {idx(x, i), idx(y, i), idx(zi, (i + 1) % 3)};
        std::sort(l.begin(), l.end());
        lines.insert(l);
      }
    }
  std::vector<std::string> labels;
  for (const auto& x : vecs)
    for (int i = 0; i < 3; ++i)
      labels.push_back(make_product_label(digits_label(x), std::to_string(i)));
  return IncidenceStructure("bose(" + std::to_string(n) + ")", std::move(labels),
                            std::vector<Line>(lines.begin(), lines.end()), LabelKind::Product);
}

IncidenceStructure catalog(const std::string& name) {
  auto open = name.find('(');
  std::string head = name.substr(0, open);
  int arg = -1;
  if (open != std::string::npos) {
    auto close = name.find(')', open);
    if (close == std::string::npos) throw std::invalid_argument("bad catalog name: " + name);
    arg = std::stoi(name.substr(open + 1, close - open - 1));
  }
  if (head == "single-line") return single_line();
  if (head == "veblen") return veblen();
  if (head == "pappus") return pappus();
  if (head == "miter") return miter();
  if (head == "mobius-8_3" || head == "mobius") return mobius_8_3();
  if (head == "fano") return fano();
  if (head == "desargues") return desargues();
  if (arg < 0) throw std::invalid_argument("catalog family " + head + " needs a parameter");
  if (head == "ag") return ag(arg);
  if (head == "pg") return pg(arg);
  if (head == "slit") return slit(arg);
  if (head == "grassmannian" || head == "gras") return grassmannian(arg);
  if (head == "bose") return bose(arg);
  throw std::invalid_argument("unknown catalog name: " + name);
}

bool labeled_equal(const IncidenceStructure& a, const IncidenceStructure& b) {
  if (a.v() != b.v() || a.b() != b.b()) return false;
  std::map<std::string, Point> bidx;
  for (Point p = 0; p < b.v(); ++p) bidx[b.label(p)] = p;
  if (static_cast<int>(bidx.size()) != b.v()) return false;
  std::vector<int> map(a.v());
  for (Point p = 0; p < a.v(); ++p) {
    auto it = bidx.find(a.label(p));
    if (it == bidx.end()) return false;
    map[p] = it->second;
  }
  for (const Line& l : a.lines())
    if (!b.has_line({map[l[0]], map[l[1]], map[l[2]]})) return false;
  return true;
}

}  // namespace psts
