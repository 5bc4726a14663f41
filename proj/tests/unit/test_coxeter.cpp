#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "artk/coxeter.hpp"
#include "artk/finite_shadow.hpp"
#include "support.hpp"

using namespace artk;

namespace {

LabeledGraph graph_of(const std::string &text) { return parse_graph(text); }

// Canonical forms must be the oracle's ShortLex-least reduced words, and the
// element count must match.
void check_against_oracle(const LabeledGraph &g, std::optional<std::size_t> radius)
{
  CoxeterGroup group(g, Caps{100000, 100000});
  oracle::ReflectionGroup model(presentation_of(g), radius);
  auto ball = cayley_ball(group, radius, 100000);
  REQUIRE(ball.elements.size() == model.order());
  CHECK(ball.exhausted == model.complete());
  for (std::size_t i = 0; i < model.order(); ++i) {
    auto e = group.reduce(from_oracle(model.word(i)));
    CHECK(e.word() == from_oracle(model.word(i)));
  }
  // Every listed element is a distinct canonical word.
  std::set<Word> words;
  for (auto const &e : ball.elements)
    words.insert(e.word());
  CHECK(words.size() == ball.elements.size());
}

} // namespace

TEST_CASE("dihedral groups have order 2m and a unique longest element")
{
  for (unsigned m = 2; m <= 8; ++m) {
    CAPTURE(m);
    CoxeterGroup group(graph_of("vertices: v w\nedge: v w " + std::to_string(m) + "\n"));
    auto ball = cayley_ball(group, std::nullopt, 1000);
    CHECK(ball.elements.size() == 2 * m);
    CHECK(ball.layer_sizes.size() == m + 1);
    CHECK(ball.layer_sizes.back() == 1);
    check_against_oracle(group.graph(), std::nullopt);
  }
}

TEST_CASE("finite groups of rank three match the oracle")
{
  // A3, B3, H3 and A1 x A1 x A1.
  for (auto text : {"vertices: a b c\nedge: a b 3\nedge: b c 3\nedge: a c 2\n",
                    "vertices: a b c\nedge: a b 4\nedge: b c 3\nedge: a c 2\n",
                    "vertices: a b c\nedge: a b 5\nedge: b c 3\nedge: a c 2\n",
                    "vertices: a b c\nedge: a b 2\nedge: b c 2\nedge: a c 2\n"}) {
    CAPTURE(text);
    check_against_oracle(graph_of(text), std::nullopt);
  }
  CoxeterGroup h3(graph_of("vertices: a b c\nedge: a b 5\nedge: b c 3\nedge: a c 2\n"));
  CHECK(cayley_ball(h3, std::nullopt, 1000).elements.size() == 120);
}

TEST_CASE("balls in infinite groups match the oracle")
{
  check_against_oracle(load_graph(fixture("path-abc-22.graph")), 6);
  check_against_oracle(load_graph(fixture("square-2345.graph")), 5);
  check_against_oracle(load_graph(fixture("two-isolated.graph")), 7);
  // Affine A2: a triangle of 3s.
  check_against_oracle(graph_of("vertices: a b c\nedge: a b 3\nedge: b c 3\nedge: a c 3\n"), 6);
}

TEST_CASE("finiteness test")
{
  CHECK(is_finite(CoxeterGroup(load_graph(fixture("a3.graph"))), VertexSet::first_n(3)));
  CoxeterGroup path(load_graph(fixture("path-abc-22.graph")));
  CHECK_FALSE(is_finite(path, path.graph().all()));
  CHECK(is_finite(path, parse_subset(path.graph(), "{a,b}")));
  CHECK_FALSE(is_finite(CoxeterGroup(graph_of("vertices: a b c\nedge: a b 3\nedge: b c 3\nedge: a c 3\n")),
                        VertexSet::first_n(3)));
  CHECK(is_finite(CoxeterGroup(graph_of("vertices: a b c d\nedge: a b 3\nedge: b c 3\nedge: c d 4\n"
                                        "edge: a c 2\nedge: a d 2\nedge: b d 2\n")),
                  VertexSet::first_n(4)));  // B4
  CHECK_THROWS_AS(cayley_ball(path, std::nullopt, 100), CapExceeded);
}

TEST_CASE("multiplication agrees with the oracle on random pairs")
{
  auto g = graph_of("vertices: a b c\nedge: a b 4\nedge: b c 3\nedge: a c 2\n");
  CoxeterGroup group(g);
  oracle::ReflectionGroup model(presentation_of(g));
  std::mt19937_64 rng(11);
  for (int k = 0; k < 500; ++k) {
    auto i = rng() % model.order(), j = rng() % model.order();
    auto a = group.reduce(from_oracle(model.word(i)));
    auto b = group.reduce(from_oracle(model.word(j)));
    auto expect = *model.product(i, j);
    CHECK(multiply(a, b).word() == from_oracle(model.word(expect)));
    CHECK(multiply(a, invert(a)).is_identity());
  }
}

TEST_CASE("reduce is idempotent and constant on braid classes")
{
  auto g = load_graph(fixture("square-2345.graph"));
  CoxeterGroup group(g);
  oracle::ReflectionGroup model(presentation_of(g), 8);
  std::mt19937_64 rng(3);
  for (int k = 0; k < 300; ++k) {
    Word w(rng() % 9);
    for (auto &x : w)
      x = static_cast<Vertex>(rng() % 4);
    auto e = group.reduce(w);
    CHECK(group.reduce(e.word()) == e);
    for (auto const &member : group.braid_class(e.word()))
      CHECK(group.reduce(member) == e);
    // The oracle agrees on the element (it lies in the radius-8 ball).
    auto idx = model.find(to_oracle(w));
    REQUIRE(idx);
    CHECK(e.word() == from_oracle(model.word(*idx)));
  }
}

TEST_CASE("words, parsing and formatting")
{
  CoxeterGroup group(load_graph(fixture("a3.graph")));
  CHECK(group.element("a b a").to_string() == "a b a");
  CHECK(group.element("b a b").to_string() == "a b a");
  CHECK(group.element("a a").to_string() == "e");
  CHECK(group.element("e").is_identity());
  CHECK(group.element("c a").to_string() == "a c");
  CHECK_THROWS_AS(group.element("a q"), Error);
  CoxeterGroup other(load_graph(fixture("a3.graph")));
  CHECK_THROWS_AS(multiply(group.element("a"), other.element("a")), Error);
  CHECK(support(group.element("a b a")) == parse_subset(group.graph(), "{a,b}"));
}

TEST_CASE("braid class cap is enforced")
{
  // The longest element of A3 has 16 reduced words.
  CoxeterGroup group(load_graph(fixture("a3.graph")));
  auto w0 = group.element("a b a c b a");
  CHECK(group.braid_class(w0.word()).size() == 16);
  CHECK_THROWS_AS(group.braid_class(w0.word(), 10), CapExceeded);
  CoxeterGroup tight(load_graph(fixture("a3.graph")), Caps{4, 100});
  CHECK_THROWS_AS(tight.element("a b a c b a"), CapExceeded);
}

TEST_CASE("minimal coset representatives")
{
  CoxeterGroup group(load_graph(fixture("i2-3.graph")));
  auto g = group.element("v w v");
  auto x = parse_subset(group.graph(), "{w}");
  CHECK(min_coset_rep(g, x, Side::Right).to_string() == "w v");
  CHECK(min_coset_rep(g, x, Side::Left).to_string() == "v w");
}

TEST_CASE("min_coset_rep is the shortest coset element (oracle)")
{
  auto g = load_graph(fixture("a3.graph"));
  CoxeterGroup group(g);
  oracle::ReflectionGroup model(presentation_of(g));
  for (std::uint64_t xb = 0; xb < 8; ++xb) {
    VertexSet x(xb);
    auto sub = model.standard_subgroup(xb);
    for (std::size_t i = 0; i < model.order(); ++i) {
      // Shortest element of g W_X by scanning the coset.
      std::size_t best = i;
      for (auto h : sub) {
        auto j = *model.product(i, h);
        if (model.length(j) < model.length(best))
          best = j;
      }
      auto e = group.reduce(from_oracle(model.word(i)));
      CHECK(min_coset_rep(e, x, Side::Right).word() == from_oracle(model.word(best)));
    }
  }
}

TEST_CASE("double coset decomposition on a small example")
{
  CoxeterGroup group(load_graph(fixture("i2-3.graph")));
  auto g = group.element("v w v");
  auto d = min_double_coset(g, parse_subset(group.graph(), "{v}"), parse_subset(group.graph(), "{w}"));
  CHECK(d.g0.is_identity() == false);
  CHECK(multiply(multiply(d.h1, d.g0), d.h2) == g);
  CHECK(d.h1.length() + d.g0.length() + d.h2.length() == g.length());
}

TEST_CASE("finite shadow tables")
{
  CoxeterGroup group(load_graph(fixture("a3.graph")));
  FiniteShadow shadow(group);
  REQUIRE(shadow.order() == 24);
  for (std::size_t i = 0; i < shadow.order(); ++i) {
    CHECK(shadow.multiply(i, shadow.inverse(i)) == 0);
    for (Vertex s = 0; s < 3; ++s) {
      CHECK(shadow.right(shadow.right(i, s), s) == i);
      CHECK(shadow.element(shadow.left(s, i)) == left_multiply(s, shadow.element(i)));
    }
  }
  auto ab = shadow.standard_subgroup(parse_subset(group.graph(), "{a,b}"));
  CHECK(shadow.members(ab).size() == 6);
  CoxeterGroup path(load_graph(fixture("path-abc-22.graph")));
  CHECK_THROWS_AS(FiniteShadow{path}, CapExceeded);
  FiniteShadow part(path, parse_subset(path.graph(), "{a,b}"), 100);
  CHECK(part.order() == 4);
}

TEST_CASE("Cayley ball at a radius")
{
  CoxeterGroup path(load_graph(fixture("path-abc-22.graph")));
  auto ball = cayley_ball(path, 2, 1000);
  CHECK_FALSE(ball.exhausted);
  CHECK(ball.layer_sizes == std::vector<std::size_t>{1, 3, 4});
  CHECK_THROWS_AS(cayley_ball(path, 20, 10), CapExceeded);
}
