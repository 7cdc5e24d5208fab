#include "psts/detect.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "psts/constructions.hpp"
#include "psts/morphisms.hpp"

namespace psts {

namespace {

std::array<int, 3> canonical_gamma(const std::array<int, 3>& g) {
  // Conjugate representatives: the two 3-cycles collapse to t1, the three
  // transpositions to s0.
  if (g == std::array<int, 3>{2, 0, 1}) return {1, 2, 0};
  if (g == std::array<int, 3>{1, 0, 2} || g == std::array<int, 3>{2, 1, 0}) return {0, 2, 1};
  return g;
}

}  // namespace

Pattern Pattern::named(Kind k) {
  Pattern p;
  p.kind = k;
  return p;
}

Pattern Pattern::poly(int m, const std::array<int, 3>& gamma) {
  if (m < 3) throw std::invalid_argument("poly pattern needs m >= 3");
  Pattern p;
  p.kind = Kind::Poly;
  p.m = m;
  p.gamma = canonical_gamma(gamma);
  return p;
}

Pattern Pattern::of(const IncidenceStructure& s) {
  Pattern p;
  p.kind = Kind::Custom;
  p.custom = s;
  return p;
}

Pattern Pattern::parse(const std::string& text) {
  if (text == "veblen" || text == "pasch") return named(Kind::Veblen);
  if (text == "fano") return named(Kind::Fano);
  if (text == "desargues") return named(Kind::Desargues);
  if (text == "miter") return named(Kind::Miter);
  if (text == "pappus") return named(Kind::Pappus);
  if (text == "k4closure") return named(Kind::K4Closure);
  if (text.rfind("poly:", 0) == 0) {
    auto rest = text.substr(5);
    auto colon = rest.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("expected poly:<m>:<gamma>");
    int m = std::stoi(rest.substr(0, colon));
    return poly(m, parse_gamma(rest.substr(colon + 1)));
  }
  return of(catalog(text));  // throws on unknown names
}

IncidenceStructure Pattern::instantiate() const {
  switch (kind) {
    case Kind::Veblen: return veblen();
    case Kind::Fano: return fano();
    case Kind::Desargues: return desargues();
    case Kind::Miter: return miter();
    case Kind::Pappus: return pappus();
    case Kind::Poly: return poly_triangle(m, gamma);
    case Kind::Custom: return *custom;
    case Kind::K4Closure: break;
  }
  throw std::logic_error("k4closure has no single structure instance");
}

std::string Pattern::describe() const {
  switch (kind) {
    case Kind::Veblen: return "veblen";
    case Kind::Fano: return "fano";
    case Kind::Desargues: return "desargues";
    case Kind::Miter: return "miter";
    case Kind::Pappus: return "pappus";
    case Kind::K4Closure: return "k4closure";
    case Kind::Poly: return "poly:" + std::to_string(m) + ":" + gamma_name(gamma);
    case Kind::Custom: return "custom(" + custom->name() + ")";
  }
  return "?";
}

namespace {

std::vector<Line> image_lines(const IncidenceStructure& pat, const PointMap& f) {
  std::vector<Line> out;
  out.reserve(pat.b());
  for (const Line& l : pat.lines()) {
    Line img{f[l[0]], f[l[1]], f[l[2]]};
    std::sort(img.begin(), img.end());
    out.push_back(img);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SubconfigHit> dedup_hits(std::map<std::vector<Line>, PointMap>&& best, long limit) {
  std::vector<SubconfigHit> out;
  out.reserve(best.size());
  for (auto& [lines, pts] : best) out.push_back({std::move(pts), lines});
  std::sort(out.begin(), out.end(),
            [](const SubconfigHit& a, const SubconfigHit& b) { return a.points < b.points; });
  if (limit >= 0 && static_cast<long>(out.size()) > limit) out.resize(limit);
  return out;
}

std::vector<SubconfigHit> find_desargues(const IncidenceStructure& host, long limit) {
  std::map<std::vector<Line>, PointMap> best;
  for_each_perspective_pair(host, [&](const PerspectivePair& pp) {
    if (!pp.focuses_collinear) return true;
    std::array<Point, 10> pts{pp.center,     pp.t1[0],      pp.t1[1],      pp.t1[2],
                              pp.t2[0],      pp.t2[1],      pp.t2[2],      pp.focuses[2],
                              pp.focuses[1], pp.focuses[0]};
    std::array<Point, 10> sorted = pts;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return true;
    std::vector<Line> lines;
    auto add = [&](Point a, Point b, Point c) {
      Line l{a, b, c};
      std::sort(l.begin(), l.end());
      lines.push_back(l);
    };
    for (int k = 0; k < 3; ++k) add(pp.center, pp.t1[k], pp.t2[k]);
    for (int k = 0; k < 3; ++k)
      for (int l = k + 1; l < 3; ++l) {
        add(pp.t1[k], pp.t1[l], pp.focuses[3 - k - l]);
        add(pp.t2[k], pp.t2[l], pp.focuses[3 - k - l]);
      }
    add(pp.focuses[0], pp.focuses[1], pp.focuses[2]);
    std::sort(lines.begin(), lines.end());
    PointMap role(pts.begin(), pts.end());
    auto [it, fresh] = best.emplace(std::move(lines), role);
    if (!fresh && role < it->second) it->second = std::move(role);
    // With a nonnegative limit, stop once enough distinct occurrences exist.
    return limit < 0 || best.size() < static_cast<size_t>(limit);
  });
  return dedup_hits(std::move(best), limit);
}

std::vector<SubconfigHit> find_k4_closures(const IncidenceStructure& host, long limit) {
  std::map<std::vector<Line>, PointMap> best;
  const int n = host.v();
  for (Point p = 0; p < n; ++p)
    for (Point q : host.neighbors(p)) {
      if (q <= p) continue;
      for (Point r : host.neighbors(p)) {
        if (r <= q || !host.collinear(q, r)) continue;
        for (Point s : host.neighbors(p)) {
          if (s <= r || !host.collinear(q, s) || !host.collinear(r, s)) continue;
          std::array<Point, 4> k4{p, q, r, s};
          std::array<Point, 6> thirds{};
          int idx = 0;
          for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) thirds[idx++] = host.third(k4[a], k4[b]);
          std::array<Point, 6> uniq = thirds;
          std::sort(uniq.begin(), uniq.end());
          if (std::adjacent_find(uniq.begin(), uniq.end()) != uniq.end()) continue;
          bool overlap = false;
          for (Point t : uniq)
            for (Point v : k4)
              if (t == v) overlap = true;
          if (overlap) continue;
          // The six third points must span a Veblen on their own.
          auto sub = host.restricted_to({uniq.begin(), uniq.end()}, "k4thirds");
          auto vebs = veblen_point_sets(sub);
          bool full = false;
          for (const auto& v : vebs)
            if (v == std::array<Point, 6>{0, 1, 2, 3, 4, 5}) full = true;
          if (!full) continue;
          std::vector<Line> lines;
          idx = 0;
          for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) {
              Line l{k4[a], k4[b], thirds[idx++]};
              std::sort(l.begin(), l.end());
              lines.push_back(l);
            }
          std::sort(lines.begin(), lines.end());
          PointMap role(k4.begin(), k4.end());
          role.insert(role.end(), thirds.begin(), thirds.end());
          auto [it, fresh] = best.emplace(std::move(lines), role);
          if (!fresh && role < it->second) it->second = std::move(role);
          if (limit >= 0 && static_cast<long>(best.size()) > limit)
            return dedup_hits(std::move(best), limit);
        }
      }
    }
  return dedup_hits(std::move(best), limit);
}

}  // namespace

void for_each_perspective_pair(const IncidenceStructure& s,
                               const std::function<bool(const PerspectivePair&)>& visit) {
  for (Point o = 0; o < s.v(); ++o) {
    const auto& ls = s.lines_of(o);
    const int d = static_cast<int>(ls.size());
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j)
        for (int k = j + 1; k < d; ++k) {
          std::array<std::array<Point, 2>, 3> spokes{};
          int li[3] = {ls[i], ls[j], ls[k]};
          for (int t = 0; t < 3; ++t) {
            int w = 0;
            for (Point p : s.line(li[t]))
              if (p != o) spokes[t][w++] = p;
          }
          // Fix the first spoke's split; flipping all three swaps the pair.
          for (int mask = 0; mask < 4; ++mask) {
            PerspectivePair pp;
            pp.center = o;
            pp.t1 = {spokes[0][0], spokes[1][mask & 1], spokes[2][(mask >> 1) & 1]};
            pp.t2 = {spokes[0][1], spokes[1][1 - (mask & 1)], spokes[2][1 - ((mask >> 1) & 1)]};
            bool ok = true;
            for (int a = 0; a < 3 && ok; ++a)
              for (int b = a + 1; b < 3 && ok; ++b)
                ok = s.collinear(pp.t1[a], pp.t1[b]) && s.collinear(pp.t2[a], pp.t2[b]);
            if (!ok) continue;
            for (int a = 0; a < 3 && ok; ++a)
              for (int b = a + 1; b < 3 && ok; ++b) {
                Point f1 = s.third(pp.t1[a], pp.t1[b]);
                Point f2 = s.third(pp.t2[a], pp.t2[b]);
                if (f1 == kUndefined || f1 != f2) {
                  ok = false;
                } else {
                  pp.focuses[3 - a - b] = f1;
                }
              }
            if (!ok) continue;
            pp.focuses_collinear = pp.focuses[0] != pp.focuses[1] &&
                                   s.third(pp.focuses[0], pp.focuses[1]) == pp.focuses[2];
            if (!visit(pp)) return;
          }
        }
  }
}

std::vector<SubconfigHit> find_subconfig_generic(const IncidenceStructure& host,
                                                 const IncidenceStructure& pattern,
                                                 long limit, int workers) {
  SearchOptions opts;
  opts.workers = workers;
  if (limit >= 0) {
    // Each unordered occurrence accounts for exactly |Aut(pattern)| raw maps,
    // so this prefix is guaranteed to contain `limit` distinct occurrences
    // when that many exist.
    opts.limit = limit * automorphism_group(pattern).order;
  }
  auto maps = enumerate_monomorphisms(pattern, host, opts);
  std::map<std::vector<Line>, PointMap> best;
  for (auto& f : maps) {
    auto key = image_lines(pattern, f);
    auto [it, fresh] = best.emplace(std::move(key), f);
    if (!fresh && f < it->second) it->second = std::move(f);
  }
  return dedup_hits(std::move(best), limit);
}

std::vector<SubconfigHit> find_subconfig(const IncidenceStructure& host, const Pattern& p,
                                         long limit, int workers) {
  if (limit == 0) return {};
  switch (p.kind) {
    case Pattern::Kind::Desargues: return find_desargues(host, limit);
    case Pattern::Kind::K4Closure: return find_k4_closures(host, limit);
    default: return find_subconfig_generic(host, p.instantiate(), limit, workers);
  }
}

Property parse_property(const std::string& text, int* m_out) {
  if (m_out) *m_out = 0;
  if (text == "pasch-free") return Property::PaschFree;
  if (text == "moufangian") return Property::Moufangian;
  if (text == "anti-fano") return Property::AntiFano;
  if (text == "anti-desargues") return Property::AntiDesargues;
  if (text == "miter-free") return Property::MiterFree;
  if (text == "pappus-diagonals") return Property::PappusDiagonals;
  if (text.rfind("anti-polypappian:", 0) == 0) {
    if (m_out) *m_out = std::stoi(text.substr(17));
    return Property::AntiPolypappian;
  }
  // Alternate spelling: anti-<m>-polypappian.
  if (text.rfind("anti-", 0) == 0 && text.size() > 17 &&
      text.compare(text.size() - 12, 12, "-polypappian") == 0) {
    if (m_out) *m_out = std::stoi(text.substr(5, text.size() - 17));
    return Property::AntiPolypappian;
  }
  throw std::invalid_argument("unknown property: " + text);
}

namespace {

PropertyResult check_pasch_free(const IncidenceStructure& s) {
  auto vebs = veblen_point_sets(s);
  if (vebs.empty()) return {true, "", {}};
  return {false, "veblen configuration present",
          {vebs.front().begin(), vebs.front().end()}};
}

PropertyResult check_moufangian(const IncidenceStructure& s) {
  for (const Triangle& t : triangles(s)) {
    auto d = derived_triangle(s, t);
    if (d.kind != DerivedKind::Line)
      return {false, "triangle with non-line derived set", {t.pts.begin(), t.pts.end()}};
  }
  return {true, "", {}};
}

PropertyResult check_anti_fano(const IncidenceStructure& s) {
  // Complete quadrangles: K4 in the collinearity graph with no three of the
  // four points on one line; diagonal points are the meets of opposite sides.
  const int n = s.v();
  for (Point p = 0; p < n; ++p)
    for (Point q : s.neighbors(p)) {
      if (q <= p) continue;
      for (Point r : s.neighbors(p)) {
        if (r <= q || !s.collinear(q, r)) continue;
        for (Point x : s.neighbors(p)) {
          if (x <= r || !s.collinear(q, x) || !s.collinear(r, x)) continue;
          std::array<Point, 4> quad{p, q, r, x};
          bool general = true;
          for (int a = 0; a < 4 && general; ++a)
            for (int b = a + 1; b < 4 && general; ++b)
              for (int c = b + 1; c < 4 && general; ++c)
                if (s.third(quad[a], quad[b]) == quad[c]) general = false;
          if (!general) continue;
          // Opposite side pairs: (ab,cd), (ac,bd), (ad,bc).
          static constexpr int split[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
          std::array<Point, 3> diag{};
          bool all = true;
          for (int t = 0; t < 3 && all; ++t) {
            Point d1 = s.third(quad[split[t][0]], quad[split[t][1]]);
            Point d2 = s.third(quad[split[t][2]], quad[split[t][3]]);
            if (d1 == kUndefined || d1 != d2)
              all = false;
            else
              diag[t] = d1;
          }
          if (!all) continue;
          if (diag[0] != diag[1] && diag[1] != diag[2] && diag[0] != diag[2] &&
              s.third(diag[0], diag[1]) == diag[2])
            return {false, "quadrangle with collinear diagonal points",
                    {p, q, r, x, diag[0], diag[1], diag[2]}};
        }
      }
    }
  return {true, "", {}};
}

PropertyResult check_anti_desargues(const IncidenceStructure& s) {
  PropertyResult res{true, "", {}};
  for_each_perspective_pair(s, [&](const PerspectivePair& pp) {
    if (pp.focuses[0] == pp.focuses[1] || pp.focuses[1] == pp.focuses[2] ||
        pp.focuses[0] == pp.focuses[2])
      return true;
    if (!pp.focuses_collinear) return true;
    res.holds = false;
    res.detail = "perspective triangle pair with collinear focuses";
    res.witness = {pp.center,     pp.t1[0],      pp.t1[1],      pp.t1[2],     pp.t2[0],
                   pp.t2[1],      pp.t2[2],      pp.focuses[0], pp.focuses[1], pp.focuses[2]};
    return false;
  });
  return res;
}

PropertyResult check_miter_free(const IncidenceStructure& s) {
  auto hits = find_subconfig(s, Pattern::named(Pattern::Kind::Miter), 1);
  if (hits.empty()) return {true, "", {}};
  return {false, "miter configuration present", hits.front().points};
}

PropertyResult check_anti_polypappian(const IncidenceStructure& s, int m) {
  if (m < 3) throw std::invalid_argument("anti-polypappian needs m >= 3");
  for (int m0 = 3; m0 <= m; ++m0) {
    std::vector<std::array<int, 3>> gammas;
    if (m % m0 == 0) gammas.push_back({0, 1, 2});
    if (m % (2 * m0) == 0) gammas.push_back({0, 2, 1});
    if (m % (3 * m0) == 0) gammas.push_back({1, 2, 0});
    for (const auto& g : gammas) {
      if (3 * m0 > s.v()) continue;
      auto hits = find_subconfig(s, Pattern::poly(m0, g), 1);
      if (!hits.empty())
        return {false, "contains poly:" + std::to_string(m0) + ":" + gamma_name(g),
                hits.front().points};
    }
  }
  return {true, "", {}};
}

PropertyResult check_pappus_diagonals(const IncidenceStructure& s) {
  // Hexagons inscribed in two lines, alternating: (p1,p3,p5) on one line,
  // (p2,p4,p6) on the other; diagonal points meet opposite sides.
  for (int li = 0; li < s.b(); ++li)
    for (int lj = 0; lj < s.b(); ++lj) {
      if (lj == li) continue;
      // Every hexagon has a representative with the odd triple ascending
      // (rotate by two to place the least point first, reflect to sort the
      // rest), so permuting only the even triple is exhaustive.
      const std::array<Point, 3>& odd = s.line(li);
      std::array<Point, 3> even = s.line(lj);
      do {
        std::array<Point, 6> p{odd[0], even[0], odd[1], even[1], odd[2], even[2]};
        std::array<Point, 6> chk = p;
        std::sort(chk.begin(), chk.end());
        if (std::adjacent_find(chk.begin(), chk.end()) != chk.end()) continue;
        std::array<Point, 3> diag{};
        bool all = true;
        for (int t = 0; t < 3 && all; ++t) {
          Point d1 = s.third(p[t], p[t + 1]);
          Point d2 = s.third(p[t + 3], p[(t + 4) % 6]);
          if (d1 == kUndefined || d1 != d2)
            all = false;
          else
            diag[t] = d1;
        }
        if (!all) continue;
        bool distinct = diag[0] != diag[1] && diag[1] != diag[2] && diag[0] != diag[2];
        if (!distinct || s.third(diag[0], diag[1]) != diag[2])
          return {false, "hexagon in two lines with non-collinear diagonal points",
                  {p[0], p[1], p[2], p[3], p[4], p[5]}};
      } while (std::next_permutation(even.begin(), even.end()));
    }
  return {true, "", {}};
}

}  // namespace

PropertyResult check_property(const IncidenceStructure& s, Property prop, int m, int workers) {
  (void)workers;
  switch (prop) {
    case Property::PaschFree: return check_pasch_free(s);
    case Property::Moufangian: return check_moufangian(s);
    case Property::AntiFano: return check_anti_fano(s);
    case Property::AntiDesargues: return check_anti_desargues(s);
    case Property::MiterFree: return check_miter_free(s);
    case Property::AntiPolypappian: return check_anti_polypappian(s, m);
    case Property::PappusDiagonals: return check_pappus_diagonals(s);
  }
  throw std::logic_error("unreachable");
}

TriangleType classify_triangle(const ProductView& view, const Triangle& t) {
  const int m = view.modulus();
  std::array<Point, 3> base{view.base_of(t.pts[0]), view.base_of(t.pts[1]),
                            view.base_of(t.pts[2])};
  std::array<int, 3> w{view.cyclic_weight_of(t.pts[0]), view.cyclic_weight_of(t.pts[1]),
                       view.cyclic_weight_of(t.pts[2])};
  std::sort(base.begin(), base.end());
  bool base_line = view.base().has_line({base[0], base[1], base[2]});
  if (w[0] == w[1] && w[1] == w[2]) return base_line ? TriangleType::LevelLine
                                                     : TriangleType::LevelTriangle;
  // Two equal weights with the odd one out cyclically adjacent.
  for (int j = 0; j < 3; ++j) {
    int a = w[(j + 1) % 3], b = w[(j + 2) % 3];
    if (a != b) continue;
    int odd = w[j];
    if (odd == (a + 1) % m) {
      if (base_line) throw std::logic_error("(i,i,i+1) over a base line is a line, not a triangle");
      return TriangleType::UpTriangle;
    }
    if (odd == (a + m - 1) % m)
      return base_line ? TriangleType::DownLine : TriangleType::DownTriangle;
  }
  if (m == 3) return base_line ? TriangleType::ThreeLine : TriangleType::ThreeTriangle;
  throw std::logic_error("weight pattern inconsistent with a weaved triangle");
}

std::vector<std::array<Point, 6>> veblen_template_sets(const ProductView& view) {
  const IncidenceStructure& base = view.base();
  const int m = view.modulus();
  std::set<std::array<Point, 6>> out;
  for (const Triangle& t : triangles(base)) {
    auto d = derived_triangle(base, t);
    if (d.kind != DerivedKind::Line) continue;
    for (int pick = 0; pick < 3; ++pick) {
      Point a = t.pts[(pick + 1) % 3], b = t.pts[(pick + 2) % 3], c = t.pts[pick];
      Point ab = base.third(a, b), ac = base.third(a, c), bc = base.third(b, c);
      for (int i = 0; i < m; ++i) {
        std::array<Point, 6> v{view.at(a, i),  view.at(b, i),  view.at(c, i + 1),
                               view.at(ac, i), view.at(bc, i), view.at(ab, i + 1)};
        std::sort(v.begin(), v.end());
        out.insert(v);
      }
    }
  }
  return {out.begin(), out.end()};
}

bool veblen_census_conforms(const ProductView& view, int workers) {
  (void)workers;
  auto found = veblen_point_sets(view.host());
  auto tmpl = veblen_template_sets(view);
  return found == tmpl;  // both sorted ascending
}

}  // namespace psts
