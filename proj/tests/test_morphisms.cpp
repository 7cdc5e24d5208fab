#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "psts/constructions.hpp"
#include "psts/morphisms.hpp"

using namespace psts;

namespace {

// Exhaustive permutation scan; independent of the backtracking engine.
long brute_force_aut_order(const IncidenceStructure& s) {
  PointMap f(s.v());
  std::iota(f.begin(), f.end(), 0);
  long count = 0;
  do {
    bool ok = true;
    for (const Line& l : s.lines()) {
      Line img{f[l[0]], f[l[1]], f[l[2]]};
      std::sort(img.begin(), img.end());
      if (!s.has_line(img)) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  } while (std::next_permutation(f.begin(), f.end()));
  return count;
}

// The other (9_3) configuration: cyclic blocks {i, i+1, i+3} mod 9.
IncidenceStructure cyclic_9_3() {
  std::vector<Line> lines;
  for (int i = 0; i < 9; ++i) {
    Line l{i, (i + 1) % 9, (i + 3) % 9};
    std::sort(l.begin(), l.end());
    lines.push_back(l);
  }
  std::vector<std::string> labels;
  for (int i = 0; i < 9; ++i) labels.push_back(std::to_string(i));
  return IncidenceStructure("cyclic-9_3", std::move(labels), std::move(lines),
                            LabelKind::Plain);
}

}  // namespace

TEST_CASE("map algebra") {
  auto s = veblen();
  PointMap swap_ad_bc{3, 2, 1, 0, 4, 5};  // a<->d, b<->c fixes all four lines
  CHECK(is_automorphism(s, swap_ad_bc));
  CHECK(is_morphism(s, s, swap_ad_bc));
  CHECK(compose(swap_ad_bc, swap_ad_bc) == identity_map(6));
  CHECK(inverse(swap_ad_bc) == swap_ad_bc);
  PointMap collapse{0, 0, 1, 2, 3, 4};
  CHECK_FALSE(is_automorphism(s, collapse));

  auto g = automorphism_group(s);
  for (const auto& f : {g.elements[1], g.elements.back()}) {
    CHECK(compose(f, inverse(f)) == identity_map(6));
    CHECK(compose(inverse(f), f) == identity_map(6));
  }
}

TEST_CASE("automorphism group orders") {
  struct Row {
    const char* name;
    long order;
  };
  // The six points around the miter's degree-3 point form a 3x2 grid whose
  // rows and columns are the remaining lines, so its group is S_3 x S_2.
  for (const Row& row : {Row{"single-line", 6}, Row{"veblen", 24}, Row{"miter", 12},
                         Row{"fano", 168}, Row{"grassmannian(5)", 120}, Row{"desargues", 120}}) {
    CAPTURE(row.name);
    auto s = catalog(row.name);
    auto g = automorphism_group(s);
    CHECK(g.order == row.order);
    CHECK(g.order == static_cast<long>(g.elements.size()));
    CHECK(std::is_sorted(g.elements.begin(), g.elements.end()));
    if (s.v() <= 8) CHECK(g.order == brute_force_aut_order(s));
  }
  CHECK(automorphism_group(pappus()).order == 108);

  SUBCASE("generators generate the whole group") {
    auto g = automorphism_group(veblen());
    std::set<PointMap> span{identity_map(6)};
    for (;;) {
      std::set<PointMap> next = span;
      for (const auto& a : span)
        for (const auto& b : g.generators) next.insert(compose(a, b));
      if (next == span) break;
      span = std::move(next);
    }
    CHECK(std::vector<PointMap>(span.begin(), span.end()) == g.elements);
  }
}

TEST_CASE("isomorphism decision") {
  SUBCASE("relabeled copies are isomorphic") {
    auto a = pappus();
    auto b = slit(2);
    auto f = isomorphism(a, b);
    REQUIRE(f.has_value());
    CHECK(is_morphism(a, b, *f));
    CHECK(is_morphism(b, a, inverse(*f)));
  }
  SUBCASE("the two 9_3 configurations are distinct") {
    auto c = cyclic_9_3();
    CHECK(is_valid(c));
    CHECK(params(c).r == 3);
    CHECK_FALSE(isomorphism(pappus(), c).has_value());
  }
  SUBCASE("size mismatch") {
    CHECK_FALSE(isomorphism(veblen(), fano()).has_value());
  }
}

TEST_CASE("embedding decision") {
  auto f = embedding(veblen(), pg(3));
  REQUIRE(f.has_value());
  CHECK(is_morphism(veblen(), pg(3), *f));
  CHECK(embedding(pappus(), ag(2)).has_value());   // the slit plane sits inside
  CHECK(embedding(fano(), pg(3)).has_value());
  CHECK_FALSE(embedding(veblen(), ag(2)).has_value());  // pasch-free host
  CHECK_FALSE(embedding(fano(), veblen()).has_value());
}

TEST_CASE("product automorphisms and decomposition") {
  auto base = veblen();
  auto w = weave(4, base);
  ProductView view(w);
  auto baseg = automorphism_group(base);
  for (const auto& f : {baseg.elements.front(), baseg.elements[5], baseg.elements.back()})
    for (int u : {0, 1, 3}) {
      auto F = product_automorphism(view, f, u);
      CHECK(is_automorphism(w, F));
      auto dec = decompose_automorphism(view, F);
      REQUIRE(std::holds_alternative<ProductDecomposition>(dec));
      const auto& d = std::get<ProductDecomposition>(dec);
      CHECK(d.base_map == f);
      CHECK(d.shift == u);
    }

  SUBCASE("every automorphism of this weave is a product") {
    auto g = automorphism_group(w);
    CHECK(g.order == 4 * 24);
    for (const auto& F : g.elements)
      CHECK(std::holds_alternative<ProductDecomposition>(decompose_automorphism(view, F)));
  }
}
