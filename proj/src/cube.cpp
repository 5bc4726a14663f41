#include "artk/cube.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include <json.hpp>

namespace artk {

namespace {

std::vector<VertexSet> submasks_shortlex(VertexSet s)
{
  std::vector<VertexSet> out;
  auto bits = s.bits();
  for (std::uint64_t m = bits;; m = (m - 1) & bits) {
    out.emplace_back(m);
    if (m == 0)
      break;
  }
  std::sort(out.begin(), out.end(), VertexSet::shortlex_less);
  return out;
}

} // namespace

void CubeComplexBall::add_vertex(CoxeterElement rep, VertexSet clique)
{
  _index.emplace(std::pair{rep.word(), clique.bits()}, _vertices.size());
  _vertices.push_back({std::move(rep), clique});
}

void CubeComplexBall::add_cubes(const std::vector<VertexSet> &cliques)
{
  for (std::size_t i = 0; i < _vertices.size(); ++i) {
    auto bottom = _vertices[i].clique;
    for (auto top : cliques)
      if (bottom.subset_of(top) && !(bottom == top))
        _cubes.push_back({i, top, top.size() - bottom.size()});
  }
  std::stable_sort(_cubes.begin(), _cubes.end(),
                   [](const Cube &a, const Cube &b) { return a.dimension < b.dimension; });
}

std::optional<std::size_t> CubeComplexBall::find(const CoxeterElement &rep, VertexSet clique) const
{
  auto it = _index.find({rep.word(), clique.bits()});
  if (it == _index.end())
    return std::nullopt;
  return it->second;
}

std::vector<std::size_t> CubeComplexBall::cube_vertices(const Cube &cube) const
{
  auto const &bottom = _vertices.at(cube.bottom);
  std::vector<std::size_t> out;
  for (auto extra : submasks_shortlex(cube.top - bottom.clique)) {
    auto lambda = bottom.clique | extra;
    auto found = find(min_coset_rep(bottom.rep, lambda, Side::Right), lambda);
    if (!found)
      throw Error(ErrorCode::CapExceeded, "cube vertex outside the ball");
    out.push_back(*found);
  }
  return out;
}

std::vector<Cube> CubeComplexBall::faces(const Cube &cube) const
{
  auto const &bottom = _vertices.at(cube.bottom);
  std::vector<Cube> out;
  for (auto y : (cube.top - bottom.clique).members()) {
    out.push_back({cube.bottom, cube.top.without(y), cube.dimension - 1});
    auto up = bottom.clique.with(y);
    auto found = find(min_coset_rep(bottom.rep, up, Side::Right), up);
    if (!found)
      throw Error(ErrorCode::CapExceeded, "cube face outside the ball");
    out.push_back({*found, cube.top, cube.dimension - 1});
  }
  return out;
}

std::vector<std::size_t> CubeComplexBall::f_vector() const
{
  std::vector<std::size_t> f{_vertices.size()};
  for (auto const &c : _cubes) {
    if (f.size() <= c.dimension)
      f.resize(c.dimension + 1, 0);
    ++f[c.dimension];
  }
  return f;
}

std::string CubeComplexBall::label(std::size_t vertex) const
{
  auto const &v = _vertices.at(vertex);
  auto clique = "_" + format_subset(_group->graph(), v.clique);
  if (!_shadow)
    return "A" + clique;
  if (v.rep.is_identity())
    return "W" + clique;
  return v.rep.to_string() + " W" + clique;
}

namespace {

nlohmann::ordered_json names_json(const LabeledGraph &g, VertexSet set)
{
  auto out = nlohmann::ordered_json::array();
  for (auto v : set.members())
    out.push_back(g.name(v));
  return out;
}

} // namespace

std::string CubeComplexBall::to_json() const
{
  auto const &g = _group->graph();
  nlohmann::ordered_json j;
  j["radius"] = _radius;
  j["shadow"] = _shadow;
  j["admission"] = "representative length <= radius";
  j["exhausted"] = _exhausted;
  j["f_vector"] = f_vector();
  auto vs = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < _vertices.size(); ++i)
    vs.push_back({{"rep", _vertices[i].rep.to_string()},
                  {"clique", names_json(g, _vertices[i].clique)},
                  {"label", label(i)}});
  j["vertices"] = vs;
  auto cs = nlohmann::ordered_json::array();
  for (auto const &c : _cubes)
    cs.push_back({{"bottom", c.bottom}, {"top", names_json(g, c.top)}, {"dimension", c.dimension}});
  j["cubes"] = cs;
  return j.dump(2);
}

std::string CubeComplexBall::to_dot(const std::vector<std::size_t> &highlight) const
{
  std::ostringstream out;
  out << "graph cubes {\n";
  for (std::size_t i = 0; i < _vertices.size(); ++i) {
    out << "  v" << i << " [label=\"" << label(i) << "\"";
    if (std::find(highlight.begin(), highlight.end(), i) != highlight.end())
      out << ", style=filled, fillcolor=lightblue";
    out << "];\n";
  }
  for (auto const &c : _cubes) {
    if (c.dimension != 1)
      continue;
    auto vs = cube_vertices(c);
    out << "  v" << vs[0] << " -- v" << vs[1] << ";\n";
  }
  out << "}\n";
  return out.str();
}

CubeComplexBall fundamental_domain(const CoxeterGroup &group)
{
  CubeComplexBall ball;
  ball._group = &group;
  auto cliques = enumerate_cliques(group.graph());
  for (auto c : cliques)
    ball.add_vertex(group.identity(), c);
  ball.add_cubes(cliques);
  return ball;
}

CubeComplexBall shadow_ball(const CoxeterGroup &group, std::size_t radius, std::size_t cap)
{
  CubeComplexBall ball;
  ball._group = &group;
  ball._radius = radius;
  ball._shadow = true;
  auto elements = cayley_ball(group, radius, cap);
  ball._exhausted = elements.exhausted;
  auto cliques = enumerate_cliques(group.graph());
  for (auto const &u : elements.elements)
    for (auto c : cliques)
      if (min_coset_rep(u, c, Side::Right) == u) {
        if (ball._vertices.size() >= cap)
          throw CapExceeded("cube complex vertices", cap);
        ball.add_vertex(u, c);
      }
  ball.add_cubes(cliques);
  return ball;
}

ParabolicHandle stabilizer(const CubeComplexBall &ball, std::size_t vertex)
{
  auto const &v = ball.vertices().at(vertex);
  return ParabolicHandle(v.rep, v.clique);
}

namespace {

std::vector<bool> fixed_mask(const CubeComplexBall &ball, const CoxeterElement &w)
{
  std::vector<bool> mask(ball.vertices().size());
  for (std::size_t i = 0; i < mask.size(); ++i)
    mask[i] = contains_element(stabilizer(ball, i), w);
  return mask;
}

} // namespace

CubeFixedSet fixed_set(const CubeComplexBall &ball, const CoxeterElement &w)
{
  auto mask = fixed_mask(ball, w);
  CubeFixedSet out;
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask[i])
      out.vertices.push_back(i);
  for (std::size_t k = 0; k < ball.cubes().size(); ++k) {
    auto vs = ball.cube_vertices(ball.cubes()[k]);
    if (std::all_of(vs.begin(), vs.end(), [&](std::size_t v) { return mask[v]; }))
      out.cubes.push_back(k);
  }
  return out;
}

std::vector<std::size_t> fixed_set_growth(const CoxeterGroup &group, const CoxeterElement &w,
                                          const std::vector<std::size_t> &radii, std::size_t cap)
{
  std::vector<std::size_t> out;
  for (auto r : radii) {
    auto ball = shadow_ball(group, r, cap);
    auto mask = fixed_mask(ball, w);
    out.push_back(static_cast<std::size_t>(std::count(mask.begin(), mask.end(), true)));
  }
  return out;
}

FlagLinkReport flag_link_check(const CubeComplexBall &ball, std::size_t cap)
{
  FlagLinkReport report;
  auto const &cubes = ball.cubes();
  std::vector<std::vector<std::size_t>> verts(cubes.size());
  std::vector<std::vector<std::size_t>> containing(ball.vertices().size());
  for (std::size_t k = 0; k < cubes.size(); ++k) {
    verts[k] = ball.cube_vertices(cubes[k]);
    std::sort(verts[k].begin(), verts[k].end());
    for (auto v : verts[k])
      containing[v].push_back(k);
  }

  // Length of the longest element of W_Δ, when W_Δ is finite within the cap.
  std::map<std::uint64_t, std::optional<std::size_t>> longest;
  auto longest_of = [&](VertexSet clique) {
    auto it = longest.find(clique.bits());
    if (it != longest.end())
      return it->second;
    std::optional<std::size_t> value;
    try {
      auto b = cayley_ball(ball.group(), std::nullopt, cap, clique);
      value = b.layer_sizes.size() - 1;
    } catch (const CapExceeded &) {
      // Treated as infinite: the link is never complete inside the ball.
    }
    longest.emplace(clique.bits(), value);
    return value;
  };

  bool whole = !ball.shadow() || ball.exhausted();
  for (std::size_t x = 0; x < ball.vertices().size(); ++x) {
    auto const &vx = ball.vertices()[x];
    if (!whole) {
      auto top = longest_of(vx.clique);
      if (!top || vx.rep.length() + *top > ball.radius()) {
        ++report.vertices_skipped;
        continue;
      }
    }
    ++report.vertices_checked;

    std::vector<std::size_t> link_vertices;  // edges at x
    for (auto k : containing[x])
      if (cubes[k].dimension == 1)
        link_vertices.push_back(k);

    std::set<std::vector<std::size_t>> simplices;
    auto fail = [&](const std::string &why) {
      report.violations.push_back(ball.label(x) + ": " + why);
    };
    bool simplicial = true;
    for (auto k : containing[x]) {
      if (cubes[k].dimension < 1)
        continue;
      std::vector<std::size_t> simplex;
      for (std::size_t i = 0; i < link_vertices.size(); ++i) {
        auto const &e = verts[link_vertices[i]];
        if (std::includes(verts[k].begin(), verts[k].end(), e.begin(), e.end()))
          simplex.push_back(i);
      }
      if (simplex.size() != cubes[k].dimension || !simplices.insert(simplex).second) {
        fail("link is not a simplicial complex");
        simplicial = false;
        break;
      }
    }
    if (!simplicial)
      continue;

    auto n = link_vertices.size();
    std::vector<std::vector<bool>> adjacent(n, std::vector<bool>(n, false));
    for (auto const &s : simplices)
      if (s.size() == 2)
        adjacent[s[0]][s[1]] = adjacent[s[1]][s[0]] = true;

    // Grow cliques of the link 1-skeleton; each one must be a simplex.
    std::vector<std::size_t> clique;
    std::function<void(std::size_t)> grow = [&](std::size_t from) {
      for (std::size_t v = from; v < n; ++v) {
        bool ok = std::all_of(clique.begin(), clique.end(),
                              [&](std::size_t u) { return adjacent[u][v]; });
        if (!ok)
          continue;
        clique.push_back(v);
        if (clique.size() >= 3 && !simplices.count(clique)) {
          fail("pairwise adjacent link vertices span no simplex");
        } else {
          grow(v + 1);
        }
        clique.pop_back();
      }
    };
    grow(0);
  }
  return report;
}

EllipticProbe locally_elliptic_probe(const CubeComplexBall &ball,
                                     const std::vector<CoxeterElement> &elements)
{
  EllipticProbe probe;
  std::vector<bool> common(ball.vertices().size(), true);
  for (auto const &w : elements) {
    auto mask = fixed_mask(ball, w);
    probe.fixed_counts.push_back(static_cast<std::size_t>(std::count(mask.begin(), mask.end(), true)));
    for (std::size_t i = 0; i < mask.size(); ++i)
      common[i] = common[i] && mask[i];
  }
  for (std::size_t i = 0; i < common.size(); ++i)
    if (common[i]) {
      probe.common_vertex = i;
      break;
    }
  return probe;
}

namespace {

std::vector<std::size_t> fixed_by_all(const CubeComplexBall &ball,
                                      const std::vector<CoxeterElement> &elements)
{
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ball.vertices().size(); ++i) {
    auto handle = stabilizer(ball, i);
    if (std::all_of(elements.begin(), elements.end(),
                    [&](const CoxeterElement &w) { return contains_element(handle, w); }))
      out.push_back(i);
  }
  return out;
}

} // namespace

ClosureFixReport closure_fix_identity_check(const CubeComplexBall &ball,
                                            const std::vector<CoxeterElement> &elements,
                                            std::size_t cap)
{
  auto trace = parabolic_closure(ball.group(), elements, cap);
  return {trace.result, fixed_by_all(ball, elements), fixed_by_all(ball, generators(trace.result))};
}

} // namespace artk
