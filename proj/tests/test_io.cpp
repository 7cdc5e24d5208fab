#include <doctest.h>

#include <cstdio>
#include <string>

#include "psts/constructions.hpp"
#include "psts/io.hpp"

using namespace psts;

TEST_CASE("json round trip") {
  for (const char* name :
       {"single-line", "veblen", "pappus", "ag(2)", "miter", "desargues", "bose(1)"}) {
    CAPTURE(name);
    auto s = catalog(name);
    auto back = from_json(to_json(s));
    CHECK(labeled_equal(s, back));
    CHECK(back.name() == s.name());
    CHECK(back.label_kind() == s.label_kind());
  }
  auto w = weave(4, veblen());
  auto back = from_json(to_json(w));
  CHECK(labeled_equal(w, back));
  CHECK(back.label_kind() == LabelKind::Product);
}

TEST_CASE("text round trip") {
  for (const char* name : {"veblen", "pappus", "mobius-8_3", "miter"}) {
    CAPTURE(name);
    auto s = catalog(name);
    CHECK(labeled_equal(s, from_text(to_text(s))));
  }
  auto w = weave(3, ag(2));
  auto back = from_text(to_text(w));
  CHECK(labeled_equal(w, back));
  CHECK(back.label_kind() == LabelKind::Product);  // sniffed from base|weight labels
}

TEST_CASE("text format details") {
  auto s = from_text("a b c\n");
  CHECK(s.v() == 3);
  CHECK(s.b() == 1);
  CHECK(s.labels() == std::vector<std::string>{"a", "b", "c"});

  auto t = from_text("# header comment\n\n x y z # trailing\nx u w\n", "two");
  CHECK(t.name() == "two");
  CHECK(t.v() == 5);
  CHECK(t.b() == 2);
  CHECK(t.label(0) == "x");  // first-appearance order

  CHECK_THROWS_AS(from_text("a b\n"), ParseError);
  CHECK_THROWS_WITH_AS(from_text("a b c d\n"), doctest::Contains("line 1"), ParseError);
  CHECK_THROWS_WITH_AS(from_text("a b a\n"), doctest::Contains("degenerate"), ParseError);
  // A repeated pair of points violates the linearity condition.
  CHECK_THROWS_WITH_AS(from_text("a b c\na b d\n"),
                       doctest::Contains("not a partial Steiner triple system"), ParseError);
}

TEST_CASE("json diagnostics") {
  CHECK_THROWS_WITH_AS(from_json("{ nope"), doctest::Contains("line 1, column"), ParseError);
  CHECK_THROWS_WITH_AS(from_json("[1,2,3]"), doctest::Contains("\"name\""), ParseError);
  CHECK_THROWS_AS(from_json(R"({"name":"x","points":["a","b","c"],"lines":[[0,1]]})"),
                  ParseError);
  CHECK_THROWS_AS(from_json(R"({"name":"x","points":["a","b","c"],"lines":[[0,1,"z"]]})"),
                  ParseError);
  CHECK_THROWS_WITH_AS(from_json(R"({"name":"x","points":["a","b","c"],"lines":[[0,1,5]]})"),
                       doctest::Contains("out of range"), ParseError);
  CHECK_THROWS_WITH_AS(from_json(R"({"name":"x","points":["a","a","c"],"lines":[[0,1,2]]})"),
                       doctest::Contains("duplicate point label"), ParseError);
  auto s = from_json(R"({"name":"prod","points":["a|0","a|1","b|0"],"lines":[[0,1,2]]})");
  CHECK(s.label_kind() == LabelKind::Product);
}

TEST_CASE("dot export") {
  auto s = veblen();
  auto cliques = to_dot(s, DotStyle::Cliques);
  CHECK(cliques.find("graph \"veblen\"") != std::string::npos);
  CHECK(cliques.find("p0 -- p1") != std::string::npos);
  CHECK(cliques.find("[shape=point]") == std::string::npos);
  auto bipartite = to_dot(s, DotStyle::LineNodes);
  CHECK(bipartite.find("l0 [shape=point]") != std::string::npos);
  CHECK(bipartite.find("l3 -- p") != std::string::npos);
  // Deterministic output.
  CHECK(cliques == to_dot(veblen(), DotStyle::Cliques));
}

TEST_CASE("file round trip with format sniffing") {
  const std::string jpath = "io_test_tmp.json";
  const std::string tpath = "io_test_tmp.txt";
  auto s = pappus();
  save_text(jpath, to_json(s));
  save_text(tpath, to_text(s));
  CHECK(labeled_equal(load_structure(jpath), s));
  CHECK(labeled_equal(load_structure(tpath), s));
  CHECK_THROWS_AS(load_structure("no_such_file.txt"), ParseError);
  std::remove(jpath.c_str());
  std::remove(tpath.c_str());
}
