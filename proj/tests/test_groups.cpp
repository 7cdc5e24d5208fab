#include <doctest.h>

#include <algorithm>
#include <vector>

#include "psts/groups.hpp"

using namespace psts;

TEST_CASE("cyclic arithmetic") {
  auto g = AbelianGroup::cyclic(3);
  CHECK(g.order() == 3);
  CHECK(g.add(GroupElem{{2}}, GroupElem{{2}}) == GroupElem{{1}});
  CHECK(g.neg(GroupElem{{1}}) == GroupElem{{2}});
  CHECK(g.add(GroupElem{{1}}, g.neg(GroupElem{{1}})) == g.zero());
  CHECK(g.scalar_mul(5, GroupElem{{2}}) == GroupElem{{1}});
}

TEST_CASE("product group arithmetic") {
  auto g = AbelianGroup::parse("c3^2");
  CHECK(g.order() == 9);
  CHECK(g.add(GroupElem{{1, 2}}, GroupElem{{2, 2}}) == GroupElem{{0, 1}});
  CHECK(g.reduce({4, -1}) == GroupElem{{1, 2}});
}

TEST_CASE("group spec parsing") {
  CHECK(AbelianGroup::parse("c3") == AbelianGroup::cyclic(3));
  CHECK(AbelianGroup::parse("C4").order() == 4);
  CHECK(AbelianGroup::parse("c3xc4").moduli() == std::vector<int>{3, 4});
  CHECK(AbelianGroup::parse("c2^3").order() == 8);
  CHECK_THROWS(AbelianGroup::parse("d4"));
  CHECK_THROWS(AbelianGroup::parse("c0"));
}

TEST_CASE("element order") {
  CHECK(AbelianGroup::cyclic(6).element_order(GroupElem{{2}}) == 3);
  CHECK(AbelianGroup::cyclic(6).element_order(GroupElem{{0}}) == 1);
  CHECK(AbelianGroup::parse("c3^2").element_order(GroupElem{{1, 0}}) == 3);
  CHECK(AbelianGroup::parse("c3^2").element_order(GroupElem{{0, 0}}) == 1);
  SUBCASE("divides the group order") {
    auto g = AbelianGroup::parse("c2xc6");
    for (const auto& a : g.elements()) CHECK(g.order() % g.element_order(a) == 0);
  }
}

TEST_CASE("cyclic units") {
  CHECK(cyclic_units(3) == std::vector<int>{1, 2});
  CHECK(cyclic_units(4) == std::vector<int>{1, 3});
  CHECK(cyclic_units(9) == std::vector<int>{1, 2, 4, 5, 7, 8});
  CHECK(cyclic_units(1) == std::vector<int>{0});
  SUBCASE("each unit is a bijection fixing 0") {
    for (int m : {3, 4, 6, 9})
      for (int u : cyclic_units(m)) {
        std::vector<char> seen(m, 0);
        for (int x = 0; x < m; ++x) seen[(u * x) % m] = 1;
        for (int x = 0; x < m; ++x) CHECK(seen[x] == 1);
        CHECK((u * 0) % m == 0);
      }
  }
}

TEST_CASE("element rendering round trip") {
  auto g3 = AbelianGroup::cyclic(3);
  CHECK(g3.render(GroupElem{{2}}) == "2");
  CHECK(g3.parse_elem("2") == GroupElem{{2}});
  auto g = AbelianGroup::parse("c3xc4");
  CHECK(g.render(GroupElem{{1, 2}}) == "(1,2)");
  CHECK(g.parse_elem("(1,2)") == GroupElem{{1, 2}});
  for (const auto& a : g.elements()) CHECK(g.parse_elem(g.render(a)) == a);
}

TEST_CASE("elements enumeration is lexicographic and complete") {
  auto g = AbelianGroup::parse("c2xc3");
  auto all = g.elements();
  CHECK(all.size() == 6);
  CHECK(all.front() == g.zero());
  CHECK(std::is_sorted(all.begin(), all.end()));
}
