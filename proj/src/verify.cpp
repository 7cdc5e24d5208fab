#include "psts/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "psts/constructions.hpp"
#include "psts/detect.hpp"
#include "psts/groups.hpp"
#include "psts/incidence.hpp"
#include "psts/io.hpp"
#include "psts/morphisms.hpp"

namespace psts {

namespace {

struct Check {
  int workers = 1;
  bool ok = true;
  std::ostringstream log;

  void expect(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (log.tellp() > 0) log << "; ";
    log << what;
  }
  void note(const std::string& what) {
    if (log.tellp() > 0) log << "; ";
    log << what;
  }
};

bool iso(const IncidenceStructure& a, const IncidenceStructure& b, int workers) {
  return isomorphism(a, b, workers).has_value();
}

AbelianGroup c(int m) { return AbelianGroup::cyclic(m); }
GroupElem el(int x) { return GroupElem{{x}}; }

std::vector<std::pair<std::string, IncidenceStructure>> base_corpus() {
  return {{"single-line", single_line()},
          {"veblen", veblen()},
          {"pappus", pappus()},
          {"ag(2)", ag(2)},
          {"pg(2)", pg(2)},
          {"pg(3)", pg(3)},
          {"slit(2)", slit(2)},
          {"grassmannian(5)", grassmannian(5)},
          {"miter", miter()},
          {"mobius-8_3", mobius_8_3()}};
}

// ---- individual checks ----

void check_pappus_identifications(Check& ck) {
  auto a = weave(3, single_line());
  auto b = poly_triangle(3, {0, 1, 2});
  auto cv = convolve(single_line(), c(3), el(0));
  auto d = slit(2);
  ck.expect(iso(a, b, ck.workers), "weave(3,single-line) != poly(3,id)");
  ck.expect(iso(a, cv, ck.workers), "weave(3,single-line) != convolve(single-line,c3,0)");
  ck.expect(iso(a, d, ck.workers), "weave(3,single-line) != slit(2)");
}

void check_parameter_law(Check& ck) {
  for (const auto& [name, base] : base_corpus()) {
    for (int m : {3, 4, 5}) {
      auto w = weave(m, base);
      ck.expect(w.v() == m * base.v() && w.b() == 3 * m * base.b(),
                name + " weave(" + std::to_string(m) + ") size law");
      ProductView view(w);
      bool deg = true;
      for (Point p = 0; p < w.v(); ++p)
        if (w.degree(p) != 3 * base.degree(view.base_of(p))) deg = false;
      ck.expect(deg, name + " weave(" + std::to_string(m) + ") degree law");
    }
    for (const auto& gspec : {"c2", "c3", "c4", "c2^2", "c3^2"}) {
      auto g = AbelianGroup::parse(gspec);
      long gg = g.order();
      auto cv = convolve(base, g, g.zero());
      ck.expect(cv.v() == gg * base.v() && cv.b() == gg * gg * base.b(),
                name + " convolve(" + gspec + ") size law");
      ProductView view(cv);
      bool deg = true;
      for (Point p = 0; p < cv.v(); ++p)
        if (cv.degree(p) != gg * base.degree(view.base_of(p))) deg = false;
      ck.expect(deg, name + " convolve(" + gspec + ") degree law");
    }
  }
}

void check_triangle_taxonomy(Check& ck) {
  {
    auto w = weave(4, ag(2));
    ProductView view(w);
    const auto& base = view.base();
    bool law = true;
    for (Point p = 0; p < w.v() && law; ++p)
      for (Point q = p + 1; q < w.v(); ++q) {
        Point a = view.base_of(p), b = view.base_of(q);
        int di = (view.cyclic_weight_of(p) - view.cyclic_weight_of(q) + 4) % 4;
        bool expected = a != b && base.collinear(a, b) && (di == 0 || di == 1 || di == 3);
        if (w.collinear(p, q) != expected) {
          law = false;
          break;
        }
      }
    ck.expect(law, "collinearity rule mismatch on weave(4,ag(2))");
  }
  for (int m : {4, 5}) {
    auto w = weave(m, ag(2));
    ProductView view(w);
    bool clean = true;
    for (const Triangle& t : triangles(w)) {
      auto ty = classify_triangle(view, t);
      if (ty == TriangleType::ThreeTriangle || ty == TriangleType::ThreeLine) clean = false;
    }
    ck.expect(clean, "m=" + std::to_string(m) + " produced a three-level triangle");
  }
  {
    auto w = weave(3, ag(2));
    ProductView view(w);
    auto series_union = [&](const Triangle& t) {
      auto ser = triangle_series(w, t, 4);
      std::set<Point> u;
      for (size_t j = 0; j < 3 && j < ser.steps.size(); ++j)
        for (Point p : ser.steps[j]) u.insert(p);
      return u;
    };
    std::set<std::set<Point>> type2_unions;
    std::vector<Triangle> type7;
    long n7 = 0;
    for (const Triangle& t : triangles(w)) {
      auto ty = classify_triangle(view, t);
      if (ty == TriangleType::LevelLine) type2_unions.insert(series_union(t));
      if (ty == TriangleType::ThreeLine) type7.push_back(t);
    }
    ck.expect(!type7.empty(), "no three-level line triangles found for m=3");
    for (const Triangle& t : type7) {
      ++n7;
      if (!type2_unions.count(series_union(t))) {
        ck.expect(false, "type-7 series union has no type-2 counterpart");
        break;
      }
    }
    ck.note("m=3 closing clause over " + std::to_string(n7) + " triangles");
  }
}

void check_pasch_free_preservation(Check& ck) {
  for (int m : {3, 4}) {
    auto hits = find_subconfig(weave(m, ag(2)), Pattern::named(Pattern::Kind::Veblen));
    ck.expect(hits.empty(),
              "weave(" + std::to_string(m) + ",ag(2)) has " + std::to_string(hits.size()) +
                  " veblen hits");
    auto res = check_property(weave(m, bose(2)), Property::PaschFree);
    ck.expect(res.holds, "weave(" + std::to_string(m) + ",bose(2)) is not pasch-free");
  }
}

void check_absence_theorems(Check& ck) {
  std::vector<std::pair<std::string, IncidenceStructure>> bases = {
      {"veblen", veblen()},
      {"pappus", pappus()},
      {"pg(3)", pg(3)},
      {"grassmannian(5)", grassmannian(5)},
      {"ag(2)", ag(2)}};
  std::vector<std::pair<std::string, Pattern>> pats = {
      {"fano", Pattern::named(Pattern::Kind::Fano)},
      {"desargues", Pattern::named(Pattern::Kind::Desargues)},
      {"miter", Pattern::named(Pattern::Kind::Miter)},
      {"ag(2)", Pattern::of(ag(2))},
      {"mobius-8_3", Pattern::of(mobius_8_3())}};
  for (const auto& [bname, base] : bases)
    for (int m : {3, 4}) {
      auto host = weave(m, base);
      std::string hname = "weave(" + std::to_string(m) + "," + bname + ")";
      for (const auto& [pname, pat] : pats) {
        auto hits = find_subconfig(host, pat, 1, ck.workers);
        ck.expect(hits.empty(), hname + " contains " + pname);
      }
      if (m > 3) {
        auto hits = find_subconfig(host, Pattern::named(Pattern::Kind::K4Closure), 1);
        ck.expect(hits.empty(), hname + " contains a k4-closure");
      }
      ck.expect(check_property(host, Property::AntiFano).holds, hname + " not anti-fano");
      ck.expect(check_property(host, Property::AntiDesargues).holds,
                hname + " not anti-desargues");
    }
}

void check_veblen_census(Check& ck) {
  for (auto& [bname, base] :
       std::vector<std::pair<std::string, IncidenceStructure>>{{"veblen", veblen()},
                                                               {"pg(3)", pg(3)}}) {
    auto host = weave(4, base);
    ProductView view(host);
    ck.expect(veblen_census_conforms(view), "census mismatch on weave(4," + bname + ")");
    long base_vebs = static_cast<long>(veblen_point_sets(base).size());
    long found = static_cast<long>(veblen_point_sets(host).size());
    // Each base Veblen contributes its 3 noncollinear point pairs at each of
    // the m levels, and nothing else does.
    ck.expect(found == 3 * 4 * base_vebs,
              "hit count " + std::to_string(found) + " != 12*" + std::to_string(base_vebs) +
                  " on weave(4," + bname + ")");
  }
  {
    ProductView view(weave(3, ag(2)));
    ck.expect(veblen_census_conforms(view), "census mismatch on weave(3,ag(2))");
    ck.expect(veblen_point_sets(view.host()).empty(), "weave(3,ag(2)) unexpectedly has veblens");
  }
}

void check_convolution_facts(Check& ck) {
  auto T = single_line();
  auto V = veblen();
  for (const auto* base : {&T, &V}) {
    const std::string n = base->name();
    ck.expect(iso(convolve(*base, c(2), el(0)), convolve(*base, c(2), el(1)), ck.workers),
              n + ": c2 eps-invariance fails");
    ck.expect(iso(weave(3, *base), convolve(*base, c(3), el(1)), ck.workers),
              n + ": weave(3) != convolve(c3,1)");
    ck.expect(iso(weave(3, *base), convolve(*base, c(3), el(2)), ck.workers),
              n + ": weave(3) != convolve(c3,2)");
  }
  // eps + 3e shifts and unit multipliers on single cyclic desk cases.
  ck.expect(iso(convolve(T, c(6), el(0)), convolve(T, c(6), el(3)), ck.workers),
            "c6: eps 0 vs 3");
  ck.expect(iso(convolve(T, c(6), el(1)), convolve(T, c(6), el(4)), ck.workers),
            "c6: eps 1 vs 4");
  ck.expect(iso(convolve(T, c(6), el(1)), convolve(T, c(6), el(5)), ck.workers),
            "c6: unit multiplier 5");
  ck.expect(iso(convolve(T, c(9), el(0)), convolve(T, c(9), el(3)), ck.workers),
            "c9: eps 0 vs 3");
  ck.expect(iso(convolve(T, c(9), el(0)), convolve(T, c(9), el(6)), ck.workers),
            "c9: eps 0 vs 6");
  ck.expect(iso(convolve(T, c(9), el(1)), convolve(T, c(9), el(2)), ck.workers),
            "c9: unit multiplier 2");
  // Weave/convolve and weave/weave commutation.
  ck.expect(iso(weave(3, convolve(T, c(3), el(0))), convolve(weave(3, T), c(3), el(0)),
                ck.workers),
            "weave(3)/convolve(c3) commutation on single-line");
  ck.expect(iso(weave(3, convolve(V, c(2), el(0))), convolve(weave(3, V), c(2), el(0)),
                ck.workers),
            "weave(3)/convolve(c2) commutation on veblen");
  ck.expect(iso(weave(4, convolve(T, c(2), el(0))), convolve(weave(4, T), c(2), el(0)),
                ck.workers),
            "weave(4)/convolve(c2) commutation on single-line");
  ck.expect(iso(weave(3, weave(4, T)), weave(4, weave(3, T)), ck.workers),
            "weave(3)/weave(4) commutation on single-line");
  ck.expect(iso(weave(3, weave(4, V)), weave(4, weave(3, V)), ck.workers),
            "weave(3)/weave(4) commutation on veblen");
}

void check_hyperplane_theorems(Check& ck) {
  std::vector<std::pair<std::string, IncidenceStructure>> bases = {
      {"veblen", veblen()},
      {"pappus", pappus()},
      {"slit(2)", slit(2)},
      {"poly(4,s0)", poly_triangle(4, {0, 2, 1})},
      {"poly(4,id)", poly_triangle(4, {0, 1, 2})}};
  for (const auto& [name, base] : bases) {
    ck.expect(iso(weave(3, base), convolve(base, c(3), el(0)), ck.workers),
              name + ": weave(3) != convolve(c3,0)");
    std::vector<Point> hyper;
    for (const auto& anti : maximal_anticliques(base))
      if (is_anticlique_hyperplane(base, anti)) {
        hyper = anti;
        break;
      }
    ck.expect(!hyper.empty(), name + ": no anti-clique hyperplane found");
    if (hyper.empty()) continue;
    for (int m : {3, 4}) {
      auto w = weave(m, base);
      ProductView view(w);
      std::vector<Point> lifted;
      for (Point a : hyper)
        for (int i = 0; i < m; ++i) lifted.push_back(view.at(a, i));
      std::sort(lifted.begin(), lifted.end());
      ck.expect(is_anticlique_hyperplane(w, lifted),
                name + ": lifted hyperplane fails for m=" + std::to_string(m));
    }
  }
}

void check_grassmannian_separation(Check& ck) {
  auto w = weave(3, grassmannian(5));
  auto cv = convolve(grassmannian(5), c(3), el(0));
  auto wd = find_subconfig(w, Pattern::named(Pattern::Kind::Desargues), 1);
  auto cd = find_subconfig(cv, Pattern::named(Pattern::Kind::Desargues), 1);
  ck.expect(wd.empty(), "weave(3,grassmannian(5)) contains desargues");
  ck.expect(!cd.empty(), "convolve(grassmannian(5),c3,0) lacks desargues");
  // Differing Desargues counts certify non-isomorphism directly.
  ck.note("desargues present only in the convolution");
}

long brute_force_aut_order(const IncidenceStructure& s) {
  PointMap perm = identity_map(s.v());
  long count = 0;
  do {
    if (is_automorphism(s, perm)) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

void check_automorphism_theorem(Check& ck) {
  auto V = veblen();
  auto P = pappus();
  ck.expect(brute_force_aut_order(V) == 24, "brute-force |Aut(veblen)| != 24");
  ck.expect(brute_force_aut_order(P) == 108, "brute-force |Aut(pappus)| != 108");
  auto autV = automorphism_group(V, ck.workers);
  auto autP = automorphism_group(P, ck.workers);
  ck.expect(autV.order == 24, "search |Aut(veblen)| != 24");
  ck.expect(autP.order == 108, "search |Aut(pappus)| != 108");
  std::vector<std::tuple<std::string, const IncidenceStructure*, const AutGroup*, int>> cases = {
      {"veblen", &V, &autV, 4}, {"veblen", &V, &autV, 5}, {"pappus", &P, &autP, 4}};
  for (auto& [name, base, aut, m] : cases) {
    auto w = weave(m, *base);
    ProductView view(w);
    auto big = automorphism_group(w, ck.workers);
    std::string tag = "weave(" + std::to_string(m) + "," + name + ")";
    ck.expect(big.order == m * aut->order,
              tag + ": |Aut| = " + std::to_string(big.order) + ", expected " +
                  std::to_string(m * aut->order));
    // Every product map is an automorphism, all are distinct, and every
    // automorphism decomposes back; together: the correspondence is onto.
    std::set<PointMap> prods;
    bool round_trip = true;
    for (const PointMap& f : aut->elements)
      for (int u = 0; u < m; ++u) {
        PointMap F = product_automorphism(view, f, u);
        prods.insert(F);
        auto dec = decompose_automorphism(view, F);
        auto* pd = std::get_if<ProductDecomposition>(&dec);
        if (!pd || pd->base_map != f || pd->shift != u) round_trip = false;
      }
    ck.expect(round_trip, tag + ": decomposition round trip fails");
    std::set<PointMap> all(big.elements.begin(), big.elements.end());
    ck.expect(prods == all, tag + ": product maps do not exhaust Aut");
    // Homomorphism spot check on the stored generators.
    bool hom = true;
    for (const PointMap& f : aut->generators)
      for (const PointMap& g : aut->generators)
        for (int u : {1, m - 1})
          for (int vshift : {0, 1}) {
            PointMap lhs = product_automorphism(view, compose(f, g), (u + vshift) % m);
            PointMap rhs = compose(product_automorphism(view, f, u),
                                   product_automorphism(view, g, vshift));
            if (lhs != rhs) hom = false;
          }
    ck.expect(hom, tag + ": (f,u) correspondence is not a homomorphism");
  }
}

void check_m3_exception(Check& ck) {
  auto V = veblen();
  auto w = weave(3, V);
  ProductView view(w);
  // On the two noncollinear "diagonal" points the levels swap 1<->2; on the
  // remaining four points they swap 0<->1.
  Point pp = kUndefined, qq = kUndefined;
  for (Point a = 0; a < V.v(); ++a)
    for (Point b = a + 1; b < V.v(); ++b)
      if (!V.collinear(a, b)) {
        pp = a;
        qq = b;
      }
  static constexpr int swap12[3] = {0, 2, 1};
  static constexpr int swap01[3] = {1, 0, 2};
  PointMap F(w.v());
  for (Point p = 0; p < w.v(); ++p) {
    Point a = view.base_of(p);
    int i = view.cyclic_weight_of(p);
    int j = (a == pp || a == qq) ? swap12[i] : swap01[i];
    F[p] = view.at(a, j);
  }
  ck.expect(is_automorphism(w, F), "the explicit table is not an automorphism");
  bool fixes_fibers = true;
  for (Point p = 0; p < w.v(); ++p)
    if (view.base_of(F[p]) != view.base_of(p)) fixes_fibers = false;
  ck.expect(fixes_fibers, "the table does not fix every fiber");
  auto dec = decompose_automorphism(view, F);
  ck.expect(std::holds_alternative<NotProduct>(dec), "the table decomposes as a product");
  auto big = automorphism_group(w, ck.workers);
  ck.expect(big.order > 72, "|Aut(weave(3,veblen))| = " + std::to_string(big.order) +
                                " is not above 72");
  ck.note("|Aut(weave(3,veblen))| = " + std::to_string(big.order));
}

void check_quotient_and_completion(Check& ck) {
  std::vector<std::pair<std::string, IncidenceStructure>> bases = {
      {"single-line", single_line()}, {"veblen", veblen()},
      {"pappus", pappus()},           {"ag(2)", ag(2)},
      {"pg(3)", pg(3)},               {"grassmannian(5)", grassmannian(5)}};
  for (const auto& [name, base] : bases)
    for (int m : {3, 4, 5})
      ck.expect(labeled_equal(quotient_by_base(weave(m, base)), base),
                name + ": quotient of weave(" + std::to_string(m) + ") differs");
  auto w = weave(3, ag(2));
  ProductView view(w);
  std::set<std::vector<Point>> fibers;
  for (Point a = 0; a < view.base().v(); ++a) {
    auto f = view.fiber(a);
    std::sort(f.begin(), f.end());
    fibers.insert(f);
  }
  auto anticliques = maximal_anticliques(w);
  std::set<std::vector<Point>> found(anticliques.begin(), anticliques.end());
  ck.expect(found == fibers, "maximal anti-cliques are not exactly the 9 fibers");
  bool equiv = true;
  for (Point p = 0; p < w.v() && equiv; ++p)
    for (Point q = 0; q < w.v(); ++q)
      if (p != q && !w.collinear(p, q) != (view.base_of(p) == view.base_of(q))) {
        equiv = false;
        break;
      }
  ck.expect(equiv, "non-collinearity does not coincide with the fiber relation");
  auto comp = linear_completion(w);
  ck.expect(is_linear_space(comp), "completion is not a linear space");
  ck.expect(comp.b() == 117, "completion has " + std::to_string(comp.b()) + " lines, not 117");
  ck.expect(check_property(comp, Property::PaschFree).holds, "completion is not pasch-free");
  ck.expect(embedding(miter(), comp, ck.workers).has_value(), "completion contains no miter");
}

void check_bose_equivalence(Check& ck) {
  ck.expect(labeled_equal(bose(2), linear_completion(weave(3, ag(2)))),
            "bose(2) differs from the completed 3-weave of ag(2)");
  ck.expect(iso(bose(1), ag(2), ck.workers), "bose(1) != ag(2)");
}

void check_non_embeddability(Check& ck) {
  auto base = ag(2);
  auto w = weave(3, base);
  ProductView view(w);
  auto bpt = [&](const std::string& label) {
    auto p = base.find_point(label);
    if (!p) throw std::logic_error("missing base point " + label);
    return *p;
  };
  // Base points of AG(2,3) carry digit-string labels "xy" for (x,y).
  Point th = bpt("00"), b = bpt("10"), cpt = bpt("01");
  Point p0 = view.at(th, 0), p1 = view.at(b, 0), p2 = view.at(cpt, 0);
  ck.expect(is_triangle(w, {p0, p1, p2}), "seed triple is not a triangle");
  std::set<Point> delta0{p0, p1, p2};
  std::set<Point> delta1{view.at(bpt("20"), 1), view.at(bpt("02"), 1), view.at(bpt("22"), 1)};
  std::set<Point> delta2{view.at(bpt("11"), 2), view.at(bpt("12"), 2), view.at(bpt("21"), 2)};
  Triangle t;
  t.pts = {p0, p1, p2};
  std::sort(t.pts.begin(), t.pts.end());
  auto ser = triangle_series(w, t, 4);
  ck.expect(ser.steps.size() >= 3, "series too short");
  auto as_set = [](const std::array<Point, 3>& a) { return std::set<Point>(a.begin(), a.end()); };
  ck.expect(as_set(ser.steps[1]) == delta1, "first derived set differs from the expected one");
  ck.expect(as_set(ser.steps[2]) == delta2, "second derived set differs from the expected one");
  // 2c + b = 2*(0,1) + (1,0) = (1,2).
  Point extra = w.third(view.at(cpt, 0), view.at(bpt("20"), 1));
  ck.expect(extra == view.at(bpt("12"), 0), "third((c,0),(2b,1)) is not (2c+b,0)");
  bool outside = !delta0.count(extra) && !delta1.count(extra) && !delta2.count(extra);
  ck.expect(outside, "witness point lies inside the three derived sets");
  auto closure = subspace_closure(w, {p0, p1, p2});
  ck.expect(static_cast<int>(closure.size()) == 27, "closure of the seed triangle is not 27");
  // Triangle-closure separation from AG(3,3).
  auto affine = ag(3);
  bool all9 = true;
  for (const Triangle& tr : triangles(affine))
    if (subspace_closure(affine, {tr.pts.begin(), tr.pts.end()}).size() != 9) {
      all9 = false;
      break;
    }
  ck.expect(all9, "ag(3) has a triangle closure other than 9 points");
  auto comp = linear_completion(w);
  bool big = false;
  for (const Triangle& tr : triangles(comp))
    if (subspace_closure(comp, {tr.pts.begin(), tr.pts.end()}).size() > 9) {
      big = true;
      break;
    }
  ck.expect(big, "completion has no triangle closure above 9 points");
}

void check_eps_weaving_components(Check& ck) {
  auto w = weave_eps(6, 2, single_line());
  auto comps = connected_components(w);
  ck.expect(comps.size() == 2, "expected 2 components, got " + std::to_string(comps.size()));
  auto target = weave(3, single_line());
  for (const auto& comp : comps) {
    auto sub = w.restricted_to(comp, "component");
    ck.expect(iso(sub, target, ck.workers), "component not isomorphic to weave(3,single-line)");
  }
}

void check_poly_classification(Check& ck) {
  std::vector<std::pair<std::string, std::array<int, 3>>> gammas = {
      {"id", {0, 1, 2}}, {"t1", {1, 2, 0}}, {"t2", {2, 0, 1}},
      {"s0", {0, 2, 1}}, {"s1", {1, 0, 2}}, {"s2", {2, 1, 0}}};
  std::map<std::string, IncidenceStructure> polys;
  for (auto& [n, g] : gammas) polys.emplace(n, poly_triangle(4, g));
  auto cls = [](const std::string& n) {
    if (n == "id") return 0;
    if (n == "t1" || n == "t2") return 1;
    return 2;
  };
  for (auto& [n1, g1] : gammas)
    for (auto& [n2, g2] : gammas) {
      if (n1 > n2) continue;
      bool same = iso(polys.at(n1), polys.at(n2), ck.workers);
      ck.expect(same == (cls(n1) == cls(n2)),
                "poly(4," + n1 + ") vs poly(4," + n2 + "): expected " +
                    (cls(n1) == cls(n2) ? "isomorphic" : "non-isomorphic"));
    }
  auto hits = find_subconfig(weave(4, pappus()), Pattern::poly(3, {0, 1, 2}), 1, ck.workers);
  ck.expect(!hits.empty(), "weave(4,pappus) contains no poly(3,id)");
}

const std::vector<std::pair<CheckEntry, void (*)(Check&)>>& registry() {
  static const std::vector<std::pair<CheckEntry, void (*)(Check&)>> table = {
      {{"pappus-identifications",
        "weave(3,single-line), poly(3,id), convolve(single-line,c3,0), slit(2) coincide"},
       check_pappus_identifications},
      {{"parameter-law", "weave gives (mv,3r,3mb), convolution gives (gv,gr,g^2 b)"},
       check_parameter_law},
      {{"triangle-taxonomy", "collinearity rule and the triangle type census"},
       check_triangle_taxonomy},
      {{"pasch-free-preservation", "weaving a pasch-free base stays pasch-free"},
       check_pasch_free_preservation},
      {{"absence-theorems", "no fano/desargues/miter/k4closure/ag(2)/mobius subconfigurations"},
       check_absence_theorems},
      {{"veblen-census", "every veblen hit matches the two-level template"}, check_veblen_census},
      {{"convolution-facts", "eps shifts, unit multipliers, and commutation laws"},
       check_convolution_facts},
      {{"hyperplane-theorems", "3-weave equals the c3 convolution given an anti-clique hyperplane"},
       check_hyperplane_theorems},
      {{"grassmannian-separation", "3-weave vs c3 convolution over the grassmannian differ"},
       check_grassmannian_separation},
      {{"automorphism-theorem", "Aut(weave(m,M)) = Aut(M) x C_m for m > 3"},
       check_automorphism_theorem},
      {{"m3-exception", "an automorphism of weave(3,veblen) that is not a product"},
       check_m3_exception},
      {{"quotient-and-completion", "fiber quotient, anti-clique fibers, linear completion"},
       check_quotient_and_completion},
      {{"bose-equivalence", "the bose construction equals the completed 3-weave"},
       check_bose_equivalence},
      {{"non-embeddability", "triangle closures separate the completion from AG(3,3)"},
       check_non_embeddability},
      {{"eps-weaving-components", "weave_eps(6,2) splits into two 3-weaves"},
       check_eps_weaving_components},
      {{"poly-classification", "the six poly(4,gamma) fall into three classes"},
       check_poly_classification},
  };
  return table;
}

}  // namespace

bool VerifyReport::all_passed() const {
  for (const auto& e : entries)
    if (e.status == "fail") return false;
  return true;
}

std::vector<CheckEntry> list_checks() {
  std::vector<CheckEntry> out;
  for (const auto& [entry, fn] : registry()) out.push_back(entry);
  return out;
}

VerifyReport run_paper_suite(const std::vector<std::string>& scope, int workers) {
  std::set<std::string> wanted(scope.begin(), scope.end());
  for (const auto& id : wanted) {
    bool known = false;
    for (const auto& [entry, fn] : registry())
      if (entry.id == id) known = true;
    if (!known) throw std::invalid_argument("unknown check id: " + id);
  }
  VerifyReport report;
  for (const auto& [entry, fn] : registry()) {
    if (!wanted.empty() && !wanted.count(entry.id)) continue;
    Check ck;
    ck.workers = workers;
    auto start = std::chrono::steady_clock::now();
    std::string status = "pass";
    try {
      fn(ck);
      if (!ck.ok) status = "fail";
    } catch (const std::exception& e) {
      status = "fail";
      ck.note(std::string("exception: ") + e.what());
    }
    auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
    report.entries.push_back({entry.id, status, ck.log.str(), elapsed.count()});
  }
  return report;
}

std::string render_report(const VerifyReport& report) {
  std::ostringstream out;
  for (const auto& e : report.entries) {
    out << (e.status == "pass" ? "PASS" : e.status == "skip" ? "SKIP" : "FAIL") << " " << e.id;
    if (!e.details.empty()) out << " (" << e.details << ")";
    out << "\n";
  }
  return out.str();
}

namespace {
std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}
}  // namespace

std::string junit_xml(const VerifyReport& report) {
  int failures = 0;
  double total = 0;
  for (const auto& e : report.entries) {
    if (e.status == "fail") ++failures;
    total += e.seconds;
  }
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<testsuite name=\"verify\" tests=\"" << report.entries.size() << "\" failures=\""
      << failures << "\" time=\"" << total << "\">\n";
  for (const auto& e : report.entries) {
    out << "  <testcase name=\"" << xml_escape(e.id) << "\" time=\"" << e.seconds << "\"";
    if (e.status == "pass") {
      out << "/>\n";
    } else if (e.status == "skip") {
      out << "><skipped/></testcase>\n";
    } else {
      out << "><failure message=\"" << xml_escape(e.details) << "\"/></testcase>\n";
    }
  }
  out << "</testsuite>\n";
  return out.str();
}

}  // namespace psts
