#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "psts/constructions.hpp"
#include "psts/morphisms.hpp"

using namespace psts;

TEST_CASE("catalog shapes") {
  struct Row {
    const char* name;
    int v, b;
    int r;  // -1 when not degree-regular
  };
  const Row rows[] = {
      {"single-line", 3, 1, 1},  {"veblen", 6, 4, 2},         {"pappus", 9, 9, 3},
      {"ag(2)", 9, 12, 4},       {"ag(3)", 27, 117, 13},      {"pg(2)", 7, 7, 3},
      {"pg(3)", 15, 35, 7},      {"fano", 7, 7, 3},           {"slit(2)", 9, 9, 3},
      {"grassmannian(5)", 10, 10, 3}, {"desargues", 10, 10, 3}, {"mobius-8_3", 8, 8, 3},
      {"miter", 7, 5, -1},       {"bose(2)", 27, 117, 13},
  };
  for (const Row& row : rows) {
    CAPTURE(row.name);
    auto s = catalog(row.name);
    CHECK(is_valid(s));
    auto p = params(s);
    CHECK(p.v == row.v);
    CHECK(p.b == row.b);
    if (row.r >= 0) {
      CHECK(p.regular);
      CHECK(p.r == row.r);
    } else {
      CHECK_FALSE(p.regular);
    }
  }
  CHECK_THROWS(catalog("heptagon"));
  CHECK_THROWS(catalog("ag"));
}

TEST_CASE("weave parameters and collinearity") {
  auto w = weave(3, ag(2));
  auto p = params(w);
  CHECK(p.v == 27);
  CHECK(p.b == 108);
  CHECK(p.regular);
  CHECK(p.r == 12);
  CHECK(is_valid(w));
  CHECK(w.label_kind() == LabelKind::Product);

  SUBCASE("degree of every fiber point is three times the base degree") {
    auto base = veblen();
    auto wv = weave(4, base);
    ProductView view(wv);
    for (Point q = 0; q < wv.v(); ++q)
      CHECK(wv.degree(q) == 3 * base.degree(view.base_of(q)));
  }

  SUBCASE("collinearity: base-collinear and cyclically adjacent levels") {
    auto wv = weave(5, single_line());
    ProductView view(wv);
    for (Point x = 0; x < wv.v(); ++x)
      for (Point y = x + 1; y < wv.v(); ++y) {
        int a = view.base_of(x), b = view.base_of(y);
        int d = (view.cyclic_weight_of(x) - view.cyclic_weight_of(y) + 5) % 5;
        bool expect = a != b && (d == 0 || d == 1 || d == 4);
        CHECK(wv.collinear(x, y) == expect);
      }
  }

  CHECK_THROWS(weave(2, single_line()));
}

TEST_CASE("weave_eps") {
  CHECK(labeled_equal(weave_eps(4, 1, veblen()), weave(4, veblen())));
  CHECK_THROWS(weave_eps(4, 2, single_line()));  // order 2
  CHECK_THROWS(weave_eps(6, 3, single_line()));  // order 2
  CHECK_THROWS(weave_eps(5, 0, single_line()));  // order 1

  SUBCASE("weight of order m/gcd splits into gcd components") {
    auto w = weave_eps(6, 2, single_line());
    auto comps = connected_components(w);
    REQUIRE(comps.size() == 2);
    auto model = weave(3, single_line()).relabeled_plain();
    for (const auto& c : comps) {
      auto sub = w.restricted_to(c, "component").relabeled_plain();
      CHECK(isomorphism(sub, model).has_value());
    }
  }
}

TEST_CASE("convolution parameters") {
  auto c = convolve(single_line(), AbelianGroup::cyclic(4), GroupElem{{0}});
  auto p = params(c);
  CHECK(p.v == 12);
  CHECK(p.b == 16);
  CHECK(p.regular);
  CHECK(p.r == 4);
  CHECK(is_valid(c));

  auto c2 = convolve(ag(2), AbelianGroup::parse("c2^2"), GroupElem{{1, 0}});
  auto p2 = params(c2);
  CHECK(p2.v == 36);
  CHECK(p2.b == 16 * 12);
  CHECK(p2.r == 4 * 4);

  SUBCASE("line weights sum to epsilon") {
    auto g = AbelianGroup::cyclic(4);
    ProductView view(c);
    for (const Line& l : c.lines()) {
      GroupElem sum = g.zero();
      for (Point q : l) sum = g.add(sum, view.weight_of(q));
      CHECK(sum == g.zero());
    }
  }

  SUBCASE("trivial group leaves the base unchanged") {
    auto t = convolve(veblen(), AbelianGroup::trivial(), GroupElem{{0}});
    CHECK(isomorphism(t.relabeled_plain(), veblen().relabeled_plain()).has_value());
  }

  CHECK_THROWS(convolve(single_line(), AbelianGroup::cyclic(3), GroupElem{{5}}));
}

TEST_CASE("weaving by three is convolution by C_3 with unit weight") {
  for (const char* name : {"single-line", "veblen", "ag(2)"}) {
    CAPTURE(name);
    auto base = catalog(name);
    auto w = weave(3, base);
    CHECK(labeled_equal(w, convolve(base, AbelianGroup::cyclic(3), GroupElem{{1}})));
    // Weight 2 is the mirror image: isomorphic, but not the same labeled lines.
    auto mirror = convolve(base, AbelianGroup::cyclic(3), GroupElem{{2}});
    CHECK_FALSE(labeled_equal(w, mirror));
    CHECK(isomorphism(w.relabeled_plain(), mirror.relabeled_plain()).has_value());
    CHECK_FALSE(labeled_equal(w, convolve(base, AbelianGroup::cyclic(3), GroupElem{{0}})));
  }
}

TEST_CASE("poly triangles") {
  CHECK(parse_gamma("t2") == std::array<int, 3>{2, 0, 1});
  CHECK(gamma_name({0, 2, 1}) == "s0");
  CHECK_THROWS(parse_gamma("r7"));
  for (const char* g : {"id", "t1", "t2", "s0", "s1", "s2"})
    CHECK(gamma_name(parse_gamma(g)) == g);

  auto p4 = poly_triangle(4, parse_gamma("t1"));
  auto pp = params(p4);
  CHECK(pp.v == 12);
  CHECK(pp.b == 12);
  CHECK(pp.regular);
  CHECK(pp.r == 3);
  CHECK(is_valid(p4));

  CHECK(isomorphism(poly_triangle(3, parse_gamma("id")).relabeled_plain(),
                    weave(3, single_line()).relabeled_plain())
            .has_value());
  CHECK(labeled_equal(pappus(), poly_triangle(3, parse_gamma("id")).renamed("pappus")));
  CHECK_FALSE(isomorphism(poly_triangle(3, parse_gamma("t1")),
                          poly_triangle(3, parse_gamma("s0")))
                  .has_value());
  CHECK_THROWS(poly_triangle(2, parse_gamma("id")));
  CHECK_THROWS(poly_triangle(4, {0, 0, 1}));
}

TEST_CASE("quotient by the fiber congruence") {
  CHECK(labeled_equal(quotient_by_base(weave(4, veblen())), veblen()));
  CHECK(labeled_equal(quotient_by_base(weave(5, pg(3))), pg(3)));
  CHECK(labeled_equal(
      quotient_by_base(convolve(ag(2), AbelianGroup::cyclic(3), GroupElem{{1}})), ag(2)));
  CHECK_THROWS(quotient_by_base(pappus()));  // not product-labeled
}

TEST_CASE("linear completion") {
  auto w = weave(3, ag(2));
  auto comp = linear_completion(w);
  CHECK(is_linear_space(comp));
  CHECK(comp.v() == 27);
  CHECK(comp.b() == 117);
  auto p = params(comp);
  CHECK(p.regular);
  CHECK(p.r == 13);

  SUBCASE("added lines are exactly the fibers") {
    ProductView view(w);
    std::set<Line> extra;
    for (const Line& l : comp.lines())
      if (!w.has_line(l)) extra.insert(l);
    CHECK(extra.size() == 9);
    for (const Line& l : extra) {
      CHECK(view.base_of(l[0]) == view.base_of(l[1]));
      CHECK(view.base_of(l[1]) == view.base_of(l[2]));
    }
  }

  CHECK_THROWS(linear_completion(weave(4, ag(2))));  // classes of size 4
  CHECK_THROWS(linear_completion(weave(3, veblen())));  // base pair p,q noncollinear
}

TEST_CASE("bose construction") {
  CHECK(labeled_equal(bose(2), linear_completion(weave(3, ag(2)))));
  CHECK(isomorphism(bose(1).relabeled_plain(), ag(2).relabeled_plain()).has_value());
  auto p = params(bose(1));
  CHECK(p.v == 9);
  CHECK(p.b == 12);
  CHECK(is_linear_space(bose(1)));
}

TEST_CASE("slit planes are pappus-like") {
  CHECK(isomorphism(slit(2).relabeled_plain(), pappus().relabeled_plain()).has_value());
  auto s3 = slit(3);
  auto p = params(s3);
  CHECK(p.v == 27);
  CHECK(p.b == 117 - 9 * 4);  // four deleted parallel classes of nine lines each
}

TEST_CASE("labeled equality") {
  CHECK(labeled_equal(veblen(), veblen().renamed("other")));
  CHECK_FALSE(labeled_equal(veblen(), pappus()));
  // Point order is irrelevant; labels and label triples decide.
  IncidenceStructure shuffled("v2", {"q", "p", "d", "c", "b", "a"},
                              {{5, 4, 1}, {3, 2, 1}, {5, 3, 0}, {4, 2, 0}}, LabelKind::Plain);
  CHECK(labeled_equal(veblen(), shuffled));
}
