#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "artk/cube.hpp"
#include "oracle/coset_model.hpp"
#include "support.hpp"

using namespace artk;

namespace {

std::vector<std::size_t> fv(std::initializer_list<std::size_t> xs) { return xs; }

} // namespace

TEST_CASE("fundamental domains")
{
  CoxeterGroup path(load_graph(fixture("path-abc-22.graph")));
  auto k = fundamental_domain(path);
  CHECK(k.f_vector() == fv({6, 7, 2}));
  std::set<std::string> labels;
  for (std::size_t i = 0; i < k.vertices().size(); ++i) {
    labels.insert(k.label(i));
    CHECK(k.vertices()[i].rep.is_identity());
  }
  CHECK(labels == std::set<std::string>{"A_{}", "A_{a}", "A_{b}", "A_{c}", "A_{a,b}", "A_{b,c}"});

  CHECK(fundamental_domain(CoxeterGroup(load_graph(fixture("single-vertex.graph")))).f_vector() == fv({2, 1}));
  CHECK(fundamental_domain(CoxeterGroup(load_graph(fixture("triangle-222.graph")))).f_vector() ==
        fv({8, 12, 6, 1}));
  CHECK(fundamental_domain(CoxeterGroup(load_graph(fixture("two-isolated.graph")))).f_vector() == fv({3, 2}));
}

TEST_CASE("radius zero shadow ball is the fundamental domain")
{
  for (auto name : {"path-abc-22.graph", "square-2345.graph", "a3.graph"}) {
    CoxeterGroup group(load_graph(fixture(name)));
    CHECK(shadow_ball(group, 0, 1000).f_vector() == fundamental_domain(group).f_vector());
  }
}

TEST_CASE("shadow complexes of finite groups match coset enumeration")
{
  for (auto name : {"i2-2.graph", "i2-3.graph", "i2-4.graph", "i2-6.graph", "a3.graph", "triangle-222.graph"}) {
    CAPTURE(name);
    auto g = load_graph(fixture(name));
    CoxeterGroup group(g);
    oracle::CosetModel model(presentation_of(g), std::nullopt);
    auto ball = shadow_ball(group, 100, 100000);
    CHECK(ball.exhausted());
    CHECK(ball.f_vector() == model.f_vector());
  }
  CoxeterGroup i23(load_graph(fixture("i2-3.graph")));
  CHECK(shadow_ball(i23, 3, 1000).f_vector() == fv({13, 18, 6}));
  CoxeterGroup i26(load_graph(fixture("i2-6.graph")));
  CHECK(shadow_ball(i26, 6, 1000).f_vector() == fv({25, 36, 12}));
}

TEST_CASE("shadow balls of infinite groups match coset enumeration")
{
  for (auto name : {"path-abc-22.graph", "square-2345.graph", "two-isolated.graph"}) {
    auto g = load_graph(fixture(name));
    CoxeterGroup group(g);
    for (std::size_t r = 0; r <= 3; ++r) {
      CAPTURE(name);
      CAPTURE(r);
      oracle::CosetModel model(presentation_of(g), r, 5);
      auto ball = shadow_ball(group, r, 100000);
      CHECK_FALSE(ball.exhausted());
      CHECK(ball.f_vector() == model.f_vector());
    }
  }
}

TEST_CASE("cube faces are present and counted")
{
  CoxeterGroup group(load_graph(fixture("a3.graph")));
  auto ball = shadow_ball(group, 3, 100000);
  std::size_t max_dim = 0;
  for (auto const &c : ball.cubes()) {
    auto faces = ball.faces(c);
    CHECK(faces.size() == 2 * c.dimension);
    CHECK(ball.cube_vertices(c).size() == (std::size_t{1} << c.dimension));
    max_dim = std::max(max_dim, c.dimension);
  }
  CHECK(max_dim == 3);  // the largest clique
}

TEST_CASE("stabilizers are the brute-force stabilizers (I2(3))")
{
  auto g = load_graph(fixture("i2-3.graph"));
  CoxeterGroup group(g);
  oracle::CosetModel model(presentation_of(g), std::nullopt);
  auto ball = shadow_ball(group, 3, 1000);
  auto const &rg = model.group();
  for (std::size_t i = 0; i < ball.vertices().size(); ++i) {
    auto handle = stabilizer(ball, i);
    auto const &v = ball.vertices()[i];
    oracle::CosetVertex ov{rg.at(to_oracle(v.rep.word())), v.clique.bits()};
    for (std::size_t u = 0; u < rg.order(); ++u) {
      auto w = group.reduce(from_oracle(rg.word(u)));
      CHECK(contains_element(handle, w) == model.fixes(rg.word(u), ov));
    }
  }
  CHECK(stabilizer(fundamental_domain(group), 0).to_string() == "(e | {})");
}

TEST_CASE("Fix(b) in the path complex")
{
  auto g = load_graph(fixture("path-abc-22.graph"));
  CoxeterGroup group(g);
  auto k = fundamental_domain(group);
  auto fs = fixed_set(k, group.element("b"));
  std::set<std::string> labels;
  for (auto v : fs.vertices)
    labels.insert(k.label(v));
  CHECK(labels == std::set<std::string>{"A_{b}", "A_{a,b}", "A_{b,c}"});
  CHECK(fs.cubes.size() == 2);
  for (auto c : fs.cubes)
    CHECK(k.cubes()[c].dimension == 1);

  auto growth = fixed_set_growth(group, group.element("b"), {1, 2, 3, 4}, 100000);
  for (std::size_t r = 1; r <= 4; ++r) {
    oracle::CosetModel model(presentation_of(g), r, 2);
    CHECK(growth[r - 1] == model.fixed_count({g.vertex("b")}));
  }
  CHECK(std::is_sorted(growth.begin(), growth.end(), std::less_equal<>()));
  CHECK(std::adjacent_find(growth.begin(), growth.end()) == growth.end());

  auto all = fixed_set(k, group.identity());
  CHECK(all.vertices.size() == 6);
  CHECK(all.cubes.size() == 9);
}

TEST_CASE("flag links")
{
  for (auto name : {"single-vertex.graph", "triangle-222.graph", "path-abc-22.graph", "square-2345.graph",
                    "a3.graph", "i2-3.graph"}) {
    CAPTURE(name);
    CoxeterGroup group(load_graph(fixture(name)));
    auto domain = flag_link_check(fundamental_domain(group), 1000);
    CHECK(domain.verdict() == Verdict::Pass);
    CHECK(domain.vertices_checked == fundamental_domain(group).vertices().size());
    auto ball = flag_link_check(shadow_ball(group, 3, 100000), 1000);
    CHECK(ball.verdict() == Verdict::Pass);
  }
  CoxeterGroup i23(load_graph(fixture("i2-3.graph")));
  auto full = flag_link_check(shadow_ball(i23, 3, 1000), 1000);
  CHECK(full.vertices_checked == 13);
  CHECK(full.vertices_skipped == 0);
  CoxeterGroup path(load_graph(fixture("path-abc-22.graph")));
  auto partial = flag_link_check(shadow_ball(path, 2, 1000), 1000);
  CHECK(partial.vertices_skipped > 0);
  CHECK(partial.vertices_checked > 0);
}

TEST_CASE("closure fixes the same vertices as the set")
{
  CoxeterGroup i23(load_graph(fixture("i2-3.graph")));
  auto ball = shadow_ball(i23, 3, 1000);
  for (auto const &w : cayley_ball(i23, std::nullopt, 100).elements) {
    auto r = closure_fix_identity_check(ball, {w}, 1000);
    CHECK(r.holds());
  }
  CoxeterGroup path(load_graph(fixture("path-abc-22.graph")));
  for (std::size_t radius = 0; radius <= 3; ++radius) {
    auto r = closure_fix_identity_check(shadow_ball(path, radius, 1000), {path.element("b")}, 1000);
    CHECK(r.closure.to_string() == "(e | {b})");
    CHECK(r.holds());
  }
  auto id = closure_fix_identity_check(ball, {i23.identity()}, 1000);
  CHECK(id.fixed_by_set.size() == ball.vertices().size());
}

TEST_CASE("elliptic probe")
{
  CoxeterGroup path(load_graph(fixture("path-abc-22.graph")));
  auto ball = shadow_ball(path, 2, 1000);
  auto probe = locally_elliptic_probe(ball, {path.element("a"), path.element("b")});
  REQUIRE(probe.common_vertex);
  CHECK(ball.label(*probe.common_vertex) == "W_{a,b}");
  auto apart = locally_elliptic_probe(ball, {path.element("a"), path.element("c")});
  CHECK_FALSE(apart.common_vertex);
}

TEST_CASE("exports and caps")
{
  CoxeterGroup path(load_graph(fixture("path-abc-22.graph")));
  auto k = fundamental_domain(path);
  auto j = nlohmann::json::parse(k.to_json());
  CHECK(j["f_vector"] == nlohmann::json::array({6, 7, 2}));
  CHECK(j["vertices"].size() == 6);
  CHECK(j["cubes"].size() == 9);
  CHECK(j["shadow"] == false);
  auto dot = k.to_dot({2});
  CHECK(std::count(dot.begin(), dot.end(), '\n') == 1 + 6 + 7 + 1);
  CHECK_THROWS_AS(shadow_ball(path, 10, 50), CapExceeded);
}
