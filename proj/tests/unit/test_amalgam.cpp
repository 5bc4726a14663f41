#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <json.hpp>

#include "artk/amalgam.hpp"
#include "support.hpp"

using namespace artk;

namespace {

void check_node(const LabeledGraph &g, const DecompositionNode &node)
{
  if (node.leaf()) {
    CHECK(is_free_of_infinity(g, node.set));
    return;
  }
  CHECK((node.left->set | node.right->set) == node.set);
  CHECK((node.left->set & node.right->set) == node.over);
  CHECK_FALSE(g.adjacent(node.pivot.first, node.pivot.second));
  check_node(g, *node.left);
  check_node(g, *node.right);
}

std::size_t oracle_order(const LabeledGraph &g, VertexSet subset)
{
  return oracle::ReflectionGroup(presentation_of(induced_subgraph(g, subset))).order();
}

// Vertex count of a ball whose First vertices have degree p and Second
// vertices degree q.
std::size_t expected_vertices(std::size_t p, std::size_t q, std::size_t radius)
{
  std::size_t total = 2, first = 1, second = 1;  // vertices at the current depth
  for (std::size_t d = 1; d <= radius; ++d) {
    auto new_second = first * (p - 1);
    auto new_first = second * (q - 1);
    first = new_first;
    second = new_second;
    total += first + second;
  }
  return total;
}

FiniteGroup bad_table()
{
  auto g = FiniteGroup::cyclic(3, "a");
  g.table[1][1] = 1;  // a*a = a breaks the Latin property
  g.table[1][2] = 2;
  return g;
}

} // namespace

TEST_CASE("star-link decomposition of the 4-cycle")
{
  auto g = load_graph(fixture("square-2345.graph"));
  auto tree = decompose(g, SplitStrategy::StarLink);
  CHECK(render(g, tree) == "(<v,w> *_<v> <v,y>) *_<w,y> (<w,x> *_<x> <x,y>)");
  check_node(g, *tree);
  VertexSet all;
  for (auto leaf : leaves(tree))
    all = all | leaf;
  CHECK(all == g.all());
  auto j = nlohmann::json::parse(decomposition_json(g, tree));
  CHECK(j["over"] == nlohmann::json::array({"w", "y"}));
  CHECK(j["left"]["left"]["set"] == nlohmann::json::array({"v", "w"}));
}

TEST_CASE("two-deletion and degenerate decompositions")
{
  auto g = load_graph(fixture("square-2345.graph"));
  auto tree = decompose(g, SplitStrategy::TwoDeletion);
  check_node(g, *tree);
  CHECK(render(g, tree) == "(<x,y> *_<x> <w,x>) *_<w,y> (<v,y> *_<v> <v,w>)");

  auto tri = load_graph(fixture("triangle-222.graph"));
  CHECK(decompose(tri, SplitStrategy::StarLink)->leaf());
  auto two = load_graph(fixture("two-isolated.graph"));
  CHECK(render(two, decompose(two, SplitStrategy::StarLink)) == "<v> * <w>");
  CHECK(parse_strategy("star-link") == SplitStrategy::StarLink);
  CHECK_FALSE(parse_strategy("split"));
}

TEST_CASE("random graphs decompose into complete leaves")
{
  std::mt19937_64 rng(5);
  for (int round = 0; round < 40; ++round) {
    int n = 1 + static_cast<int>(rng() % 6);
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i)
      names.push_back("v" + std::to_string(i));
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 3)
          edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j), 2 + static_cast<unsigned>(rng() % 3)});
    LabeledGraph g(names, edges);
    for (auto s : {SplitStrategy::StarLink, SplitStrategy::TwoDeletion}) {
      auto tree = decompose(g, s);
      check_node(g, *tree);
      VertexSet all;
      for (auto leaf : leaves(tree))
        all = all | leaf;
      CHECK(all == g.all());
    }
  }
}

TEST_CASE("Z/4 * Z/6 ball")
{
  auto ball = finite_amalgam_ball(FiniteGroup::cyclic(4, "a"), FiniteGroup::cyclic(6, "b"),
                                  CommonSubgroup::trivial(), 2);
  CHECK(ball.label(0) == "1<a>");
  CHECK(ball.label(1) == "1<b>");
  CHECK(ball.degree(0) == 4);
  CHECK(ball.degree(1) == 6);
  CHECK(ball.vertices().size() == expected_vertices(4, 6, 2));
  CHECK(ball.vertices().size() == 40);
  CHECK(ball.edges().size() == ball.vertices().size() - 1);
  CHECK(ball.is_tree());
  // 1<a> is adjacent to 1<b>, a<b>, a^2<b>, a^3<b>.
  std::set<std::string> around;
  for (auto const &e : ball.edges())
    if (e.first == 0)
      around.insert(ball.label(e.second));
  CHECK(around == std::set<std::string>{"1<b>", "a<b>", "a^2<b>", "a^3<b>"});
}

TEST_CASE("amalgamated and degenerate finite balls")
{
  CommonSubgroup c2;
  c2.group = FiniteGroup::cyclic(2, "c");
  c2.into_first = {0, 2};
  c2.into_second = {0, 3};
  auto ball = finite_amalgam_ball(FiniteGroup::cyclic(4, "a"), FiniteGroup::cyclic(6, "b"), c2, 2);
  CHECK(ball.degree(0) == 2);
  CHECK(ball.degree(1) == 3);
  CHECK(ball.vertices().size() == expected_vertices(2, 3, 2));
  CHECK(ball.is_tree());

  CommonSubgroup c3;
  c3.group = FiniteGroup::cyclic(3, "c");
  c3.into_first = {0, 1, 2};
  c3.into_second = {0, 1, 2};
  auto single = finite_amalgam_ball(FiniteGroup::cyclic(3, "a"), FiniteGroup::cyclic(3, "b"), c3, 3);
  CHECK(single.vertices().size() == 2);
  CHECK(single.edges().size() == 1);
}

TEST_CASE("normal forms multiply associatively")
{
  CommonSubgroup c2;
  c2.group = FiniteGroup::cyclic(2, "c");
  c2.into_first = {0, 2};
  c2.into_second = {0, 3};
  auto action = finite_amalgam_action(FiniteGroup::cyclic(4, "a"), FiniteGroup::cyclic(6, "b"), c2);
  std::vector<std::string> atoms{"a", "a^2", "a^3", "b", "b^2", "b^3", "b^5"};
  std::mt19937_64 rng(9);
  auto random_element = [&] {
    std::string text;
    for (int k = 0, n = static_cast<int>(rng() % 6); k < n; ++k)
      text += atoms[rng() % atoms.size()] + " ";
    return action->parse(text);
  };
  for (int k = 0; k < 200; ++k) {
    auto x = random_element(), y = random_element(), z = random_element();
    CHECK(action->multiply(action->multiply(x, y), z) == action->multiply(x, action->multiply(y, z)));
  }
  CHECK(action->parse("a a^3") == action->identity());
  CHECK(action->parse("a^2 b^3") == action->identity());  // both are the central involution c
  CHECK(action->format(action->parse("a^2")) == action->format(action->parse("b^3")));
  CHECK_THROWS_AS(action->parse("q"), Error);
}

TEST_CASE("inconsistent tables are refused")
{
  auto code = [](auto &&f) {
    try {
      f();
    } catch (const Error &e) {
      return e.code();
    }
    return ErrorCode::Syntax;
  };
  auto z4 = FiniteGroup::cyclic(4, "a");
  auto z6 = FiniteGroup::cyclic(6, "b");
  CHECK(code([&] { finite_amalgam_action(bad_table(), z6, CommonSubgroup::trivial()); }) ==
        ErrorCode::InconsistentTables);
  CommonSubgroup c2;
  c2.group = FiniteGroup::cyclic(2, "c");
  c2.into_first = {0, 1};  // 1 -> a is not a homomorphism from Z/2
  c2.into_second = {0, 3};
  CHECK(code([&] { finite_amalgam_action(z4, z6, c2); }) == ErrorCode::InconsistentTables);
  c2.into_first = {0, 0};
  CHECK(code([&] { finite_amalgam_action(z4, z6, c2); }) == ErrorCode::InconsistentTables);
  CHECK(code([&] { finite_amalgam_action(z4, FiniteGroup::cyclic(6, "a"), CommonSubgroup::trivial()); }) ==
        ErrorCode::InconsistentTables);
}

TEST_CASE("shadow balls: degrees are coset indices (oracle)")
{
  // a-b 3, b-c 4, a and c not joined.
  auto g = parse_graph("vertices: a b c\nedge: a b 3\nedge: b c 4\n");
  CoxeterGroup group(g);
  auto a = g.vertex("a"), c = g.vertex("c");
  auto i = g.all().without(a), j = g.all().without(c), k = g.all().without(a).without(c);
  auto p = oracle_order(g, i) / oracle_order(g, k);
  auto q = oracle_order(g, j) / oracle_order(g, k);
  CHECK(p == 4);
  CHECK(q == 3);
  for (std::size_t r = 0; r <= 3; ++r) {
    auto ball = bass_serre_ball(group, a, c, r, 100000);
    CHECK(ball.vertices().size() == expected_vertices(p, q, r));
    CHECK(ball.is_tree());
    for (std::size_t v = 0; v < ball.vertices().size(); ++v)
      if (ball.vertices()[v].depth < r)
        CHECK(ball.degree(v) == (ball.vertices()[v].side == TreeSide::First ? p : q));
  }
}

TEST_CASE("path graph pivot: tree, stabilizers, fixed subtrees")
{
  auto g = load_graph(fixture("path-abc-22.graph"));
  CoxeterGroup group(g);
  auto a = g.vertex("a"), b = g.vertex("b"), c = g.vertex("c");
  for (std::size_t r = 0; r <= 4; ++r) {
    auto ball = bass_serre_ball(group, c, a, r, 10000);
    CHECK(ball.is_tree());
    CHECK(ball.vertices().size() == 2 + 2 * r);
    auto const &action = ball.action();
    for (std::size_t v = 0; v < ball.vertices().size(); ++v) {
      auto handle = *action.stabilizer(ball.vertices()[v]);
      for (auto const &h : cayley_ball(group, 3, 1000).elements) {
        auto fixed = fixed_set_in_ball(ball, GroupWord(h.word().begin(), h.word().end()));
        bool fixes = std::find(fixed.vertices.begin(), fixed.vertices.end(), v) != fixed.vertices.end();
        CHECK(fixes == contains_element(handle, h));
        if (!fixed.vertices.empty())
          CHECK(fixed.connected);
        CHECK(fixed.inversions == 0);
      }
    }
  }
  auto ball = bass_serre_ball(group, c, a, 3, 10000);
  auto fa = fixed_set_in_ball(ball, {static_cast<int>(a)});
  CHECK(std::find(fa.vertices.begin(), fa.vertices.end(), 0) != fa.vertices.end());
  CHECK(std::find(fa.vertices.begin(), fa.vertices.end(), 1) == fa.vertices.end());
  CHECK(fa.connected);
  auto fb = fixed_set_in_ball(ball, {static_cast<int>(b)});
  CHECK(fb.vertices.size() == ball.vertices().size());
  auto all = fixed_set_in_ball(ball, {});
  CHECK(all.edges.size() == ball.edges().size());

  auto common = common_fixed_vertex(ball, {{static_cast<int>(a)}, {static_cast<int>(c)}});
  CHECK_FALSE(common.vertex);
  CHECK_FALSE(common.pairwise_intersect[0][1]);
  auto base = common_fixed_vertex(ball, {{static_cast<int>(b)}, {static_cast<int>(a)}});
  CHECK(base.vertex == std::optional<std::size_t>{0});
}

TEST_CASE("4-cycle pivot needs a branch bound")
{
  auto g = load_graph(fixture("square-2345.graph"));
  CoxeterGroup group(g);
  auto v = g.vertex("v"), x = g.vertex("x");
  CHECK_THROWS_AS(bass_serre_ball(group, v, x, 2, 500), CapExceeded);
  auto ball = bass_serre_ball(group, v, x, 2, 10000, 3);
  CHECK_FALSE(ball.complete_neighborhoods());
  CHECK(ball.is_tree());
  for (std::size_t i = 0; i < ball.vertices().size(); ++i) {
    auto handle = *ball.action().stabilizer(ball.vertices()[i]);
    // The conjugated generators of the stabilizer fix the vertex.
    for (auto const &gen : generators(handle)) {
      auto fs = fixed_set_in_ball(ball, GroupWord(gen.word().begin(), gen.word().end()));
      CHECK(std::find(fs.vertices.begin(), fs.vertices.end(), i) != fs.vertices.end());
      CHECK(fs.connected);
    }
  }
  auto common = common_fixed_vertex(ball, {{g.vertex("w")}, {g.vertex("y")}});
  REQUIRE(common.vertex);
  CHECK(*common.vertex <= 1);
}

TEST_CASE("pivot must be a non-edge")
{
  CoxeterGroup group(load_graph(fixture("path-abc-22.graph")));
  auto code = [&](Vertex s, Vertex t) {
    try {
      bass_serre_ball(group, s, t, 1, 100);
    } catch (const Error &e) {
      return e.code();
    }
    return ErrorCode::Syntax;
  };
  CHECK(code(0, 1) == ErrorCode::NotANonEdge);
  CHECK(code(0, 0) == ErrorCode::NotANonEdge);
}

TEST_CASE("exports")
{
  auto ball = finite_amalgam_ball(FiniteGroup::cyclic(4, "a"), FiniteGroup::cyclic(6, "b"),
                                  CommonSubgroup::trivial(), 1);
  auto j = nlohmann::json::parse(ball.to_json());
  CHECK(j["backend"] == "finite-table");
  CHECK(j["radius"] == 1);
  CHECK(j["vertices"].size() == ball.vertices().size());
  CHECK(j["edges"].size() == ball.edges().size());
  auto dot = ball.to_dot({0});
  CHECK(dot.find("penwidth=3") != std::string::npos);
  CHECK(dot.find("fillcolor") != std::string::npos);
  CHECK_THROWS_AS(finite_amalgam_ball(FiniteGroup::cyclic(4, "a"), FiniteGroup::cyclic(6, "b"),
                                      CommonSubgroup::trivial(), 4, 50),
                  CapExceeded);
}
