#include "artk/amalgam.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include <json.hpp>

namespace artk {

std::optional<SplitStrategy> parse_strategy(std::string_view text)
{
  if (text == "star-link")
    return SplitStrategy::StarLink;
  if (text == "two-deletion")
    return SplitStrategy::TwoDeletion;
  return std::nullopt;
}

namespace {

std::optional<std::pair<Vertex, Vertex>> first_nonedge(const LabeledGraph &g, VertexSet set)
{
  auto members = set.members();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (!g.adjacent(members[i], members[j]))
        return std::pair{members[i], members[j]};
  return std::nullopt;
}

DecompositionTree split(const LabeledGraph &g, VertexSet set, SplitStrategy strategy)
{
  auto node = std::make_shared<DecompositionNode>();
  node->set = set;
  auto pivot = first_nonedge(g, set);
  if (!pivot)
    return node;
  auto [s, t] = *pivot;
  node->pivot = *pivot;
  VertexSet left, right;
  if (strategy == SplitStrategy::StarLink) {
    left = (g.neighbors(s) & set).with(s);
    right = set.without(s);
  } else {
    left = set.without(s);
    right = set.without(t);
  }
  node->over = left & right;
  node->left = split(g, left, strategy);
  node->right = split(g, right, strategy);
  return node;
}

std::string angle(const LabeledGraph &g, VertexSet set)
{
  std::string out = "<";
  bool first = true;
  for (auto v : set.members()) {
    if (!first)
      out += ",";
    out += g.name(v);
    first = false;
  }
  return out + ">";
}

std::string render_node(const LabeledGraph &g, const DecompositionNode &node, bool nested)
{
  if (node.leaf())
    return angle(g, node.set);
  std::string op = node.over.empty() ? " * " : " *_" + angle(g, node.over) + " ";
  std::string body = render_node(g, *node.left, true) + op + render_node(g, *node.right, true);
  return nested ? "(" + body + ")" : body;
}

nlohmann::ordered_json names_json(const LabeledGraph &g, VertexSet set)
{
  auto out = nlohmann::ordered_json::array();
  for (auto v : set.members())
    out.push_back(g.name(v));
  return out;
}

nlohmann::ordered_json node_json(const LabeledGraph &g, const DecompositionNode &node)
{
  nlohmann::ordered_json j;
  j["set"] = names_json(g, node.set);
  if (node.leaf()) {
    j["leaf"] = true;
    return j;
  }
  j["leaf"] = false;
  j["pivot"] = {g.name(node.pivot.first), g.name(node.pivot.second)};
  j["over"] = names_json(g, node.over);
  j["left"] = node_json(g, *node.left);
  j["right"] = node_json(g, *node.right);
  return j;
}

void collect_leaves(const DecompositionNode &node, std::vector<VertexSet> &out)
{
  if (node.leaf()) {
    out.push_back(node.set);
    return;
  }
  collect_leaves(*node.left, out);
  collect_leaves(*node.right, out);
}

} // namespace

DecompositionTree decompose(const LabeledGraph &g, SplitStrategy strategy)
{
  return split(g, g.all(), strategy);
}

std::string render(const LabeledGraph &g, const DecompositionTree &tree)
{
  return render_node(g, *tree, false);
}

std::string decomposition_json(const LabeledGraph &g, const DecompositionTree &tree)
{
  return node_json(g, *tree).dump(2);
}

std::vector<VertexSet> leaves(const DecompositionTree &tree)
{
  std::vector<VertexSet> out;
  collect_leaves(*tree, out);
  return out;
}

// ---------------------------------------------------------------------------

TreeBall::TreeBall(std::shared_ptr<const AmalgamAction> action, std::size_t radius)
: _action(std::move(action)), _radius(radius)
{}

std::optional<std::size_t> TreeBall::find_vertex(const GroupWord &rep, TreeSide side) const
{
  auto it = _vertex_index.find({rep, side});
  if (it == _vertex_index.end())
    return std::nullopt;
  return it->second;
}

std::optional<std::size_t> TreeBall::find_edge(const GroupWord &rep) const
{
  auto it = _edge_index.find(rep);
  if (it == _edge_index.end())
    return std::nullopt;
  return it->second;
}

std::size_t TreeBall::degree(std::size_t vertex) const
{
  std::size_t d = 0;
  for (auto const &e : _edges)
    d += (e.first == vertex) + (e.second == vertex);
  return d;
}

bool TreeBall::is_tree() const
{
  if (_vertices.empty() || _edges.size() + 1 != _vertices.size())
    return false;
  std::vector<std::vector<std::size_t>> adj(_vertices.size());
  for (auto const &e : _edges) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  std::vector<bool> seen(_vertices.size(), false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (auto u : adj[v])
      if (!seen[u]) {
        seen[u] = true;
        ++reached;
        queue.push_back(u);
      }
  }
  return reached == _vertices.size();
}

std::string TreeBall::label(std::size_t vertex) const
{
  auto const &v = _vertices.at(vertex);
  return _action->format(v.rep) + _action->side_label(v.side);
}

std::string TreeBall::to_json() const
{
  nlohmann::ordered_json j;
  j["backend"] = _action->backend() == TreeBackend::CoxeterShadow ? "coxeter-shadow" : "finite-table";
  j["radius"] = _radius;
  j["complete_neighborhoods"] = _complete;
  auto vs = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < _vertices.size(); ++i) {
    auto const &v = _vertices[i];
    vs.push_back({{"rep", _action->format(v.rep)},
                  {"side", v.side == TreeSide::First ? "first" : "second"},
                  {"depth", v.depth},
                  {"label", label(i)}});
  }
  j["vertices"] = vs;
  auto es = nlohmann::ordered_json::array();
  for (auto const &e : _edges)
    es.push_back({{"rep", _action->format(e.rep)}, {"endpoints", {e.first, e.second}}});
  j["edges"] = es;
  return j.dump(2);
}

namespace {

std::string dot_escape(const std::string &s)
{
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\')
      out += '\\';
    out += c;
  }
  return out;
}

} // namespace

std::string TreeBall::to_dot(const std::vector<std::size_t> &highlight) const
{
  std::ostringstream out;
  out << "graph tree {\n";
  for (std::size_t i = 0; i < _vertices.size(); ++i) {
    out << "  v" << i << " [label=\"" << dot_escape(label(i)) << "\"";
    if (std::find(highlight.begin(), highlight.end(), i) != highlight.end())
      out << ", style=filled, fillcolor=lightblue";
    out << "];\n";
  }
  for (std::size_t k = 0; k < _edges.size(); ++k) {
    out << "  v" << _edges[k].first << " -- v" << _edges[k].second;
    if (k == 0)
      out << " [penwidth=3]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

TreeBall build_tree_ball(std::shared_ptr<const AmalgamAction> action, std::size_t radius,
                         std::size_t cap)
{
  TreeBall ball(action, radius);
  bool complete = true;
  std::vector<GroupWord> transversals[2] = {action->transversal(TreeSide::First, complete),
                                            action->transversal(TreeSide::Second, complete)};
  ball._complete = complete;

  auto add_vertex = [&](GroupWord rep, TreeSide side, std::size_t depth) {
    if (ball._vertices.size() >= cap)
      throw CapExceeded("tree ball vertices", cap);
    ball._vertex_index.emplace(std::pair{rep, side}, ball._vertices.size());
    ball._vertices.push_back({std::move(rep), side, depth});
    return ball._vertices.size() - 1;
  };
  auto add_edge = [&](GroupWord rep, std::size_t a, std::size_t b) {
    if (ball._vertices[a].side == TreeSide::Second)
      std::swap(a, b);
    ball._edge_index.emplace(rep, ball._edges.size());
    ball._edges.push_back({std::move(rep), a, b});
  };

  auto one = action->identity();
  auto v0 = add_vertex(action->vertex_rep(one, TreeSide::First), TreeSide::First, 0);
  auto v1 = add_vertex(action->vertex_rep(one, TreeSide::Second), TreeSide::Second, 0);
  add_edge(action->edge_rep(one), v0, v1);

  std::deque<std::size_t> queue{v0, v1};
  while (!queue.empty()) {
    auto current = queue.front();
    queue.pop_front();
    if (ball._vertices[current].depth >= radius)
      continue;
    auto rep = ball._vertices[current].rep;
    auto side = ball._vertices[current].side;
    auto depth = ball._vertices[current].depth;
    for (auto const &t : transversals[side == TreeSide::First ? 0 : 1]) {
      auto g = action->multiply(rep, t);
      auto e = action->edge_rep(g);
      if (ball._edge_index.count(e))
        continue;
      auto w = action->vertex_rep(g, other(side));
      std::size_t target;
      if (auto found = ball.find_vertex(w, other(side))) {
        target = *found;  // would close a cycle; is_tree() reports it
      } else {
        target = add_vertex(w, other(side), depth + 1);
        queue.push_back(target);
      }
      add_edge(e, current, target);
    }
  }
  return ball;
}

// ---------------------------------------------------------------------------
// Coxeter shadow backend.

namespace {

GroupWord encode(const CoxeterElement &e)
{
  return GroupWord(e.word().begin(), e.word().end());
}

class CoxeterShadowAction final : public AmalgamAction {
public:
  CoxeterShadowAction(const CoxeterGroup &group, Vertex s, Vertex t, std::size_t cap,
                      std::optional<std::size_t> branch_length)
  : _group(&group), _cap(cap), _branch(branch_length)
  {
    auto all = group.graph().all();
    _bases[0] = all.without(s);
    _bases[1] = all.without(t);
    _k = all.without(s).without(t);
  }

  TreeBackend backend() const override { return TreeBackend::CoxeterShadow; }
  GroupWord identity() const override { return {}; }

  GroupWord multiply(const GroupWord &a, const GroupWord &b) const override
  {
    Word w(a.begin(), a.end());
    w.insert(w.end(), b.begin(), b.end());
    return encode(_group->reduce(w));
  }

  GroupWord vertex_rep(const GroupWord &g, TreeSide side) const override
  {
    return encode(min_coset_rep(decode(g), base(side), Side::Right));
  }

  GroupWord edge_rep(const GroupWord &g) const override
  {
    return encode(min_coset_rep(decode(g), _k, Side::Right));
  }

  std::vector<GroupWord> transversal(TreeSide side, bool &complete) const override
  {
    // Shortest representatives of W_X / W_K. Deleting the first letter of one
    // gives another, so growing on the left by single letters reaches them all.
    auto x = base(side);
    std::vector<CoxeterElement> layer{_group->identity()};
    std::vector<GroupWord> out{GroupWord{}};
    for (std::size_t len = 1; !layer.empty(); ++len) {
      std::set<Word, decltype(&shortlex_less)> next(&shortlex_less);
      for (auto const &r : layer)
        for (auto v : x.members()) {
          auto n = left_multiply(v, r);
          if (n.length() == len && min_coset_rep(n, _k, Side::Right) == n)
            next.insert(n.word());
        }
      if (next.empty())
        break;
      if (_branch && len > *_branch) {
        complete = false;
        break;
      }
      layer.clear();
      for (auto const &w : next) {
        if (out.size() >= _cap)
          throw CapExceeded("coset transversal of W_" + format_subset(_group->graph(), _k), _cap);
        layer.push_back(_group->reduce(w));
        out.push_back(GroupWord(w.begin(), w.end()));
      }
    }
    return out;
  }

  std::string format(const GroupWord &g) const override
  {
    return _group->format(Word(g.begin(), g.end()));
  }

  GroupWord parse(std::string_view text) const override
  {
    return encode(_group->element(text));
  }

  std::string side_label(TreeSide side) const override
  {
    return " W_" + format_subset(_group->graph(), base(side));
  }

  std::optional<ParabolicHandle> stabilizer(const TreeVertex &v) const override
  {
    return ParabolicHandle(decode(v.rep), base(v.side));
  }

private:
  VertexSet base(TreeSide side) const { return _bases[side == TreeSide::First ? 0 : 1]; }
  CoxeterElement decode(const GroupWord &g) const
  {
    return _group->reduce(Word(g.begin(), g.end()));
  }

  const CoxeterGroup *_group;
  std::size_t _cap;
  std::optional<std::size_t> _branch;
  VertexSet _bases[2];
  VertexSet _k;
};

} // namespace

std::shared_ptr<const AmalgamAction>
coxeter_shadow_action(const CoxeterGroup &group, Vertex s, Vertex t, std::size_t cap,
                      std::optional<std::size_t> branch_length)
{
  auto const &g = group.graph();
  if (s >= g.size() || t >= g.size())
    throw Error(ErrorCode::UnknownVertex, "pivot vertex out of range");
  if (s == t || g.adjacent(s, t))
    throw Error(ErrorCode::NotANonEdge,
                "pivot {" + g.name(s) + "," + g.name(t) + "} is not a non-edge");
  return std::make_shared<CoxeterShadowAction>(group, s, t, cap, branch_length);
}

TreeBall bass_serre_ball(const CoxeterGroup &group, Vertex s, Vertex t, std::size_t radius,
                         std::size_t cap, std::optional<std::size_t> branch_length)
{
  return build_tree_ball(coxeter_shadow_action(group, s, t, cap, branch_length), radius, cap);
}

// ---------------------------------------------------------------------------
// Finite multiplication tables.

FiniteGroup FiniteGroup::cyclic(std::size_t n, const std::string &generator)
{
  FiniteGroup g;
  g.name = generator;
  for (std::size_t i = 0; i < n; ++i)
    g.element_names.push_back(i == 0 ? "1" : i == 1 ? generator : generator + "^" + std::to_string(i));
  g.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      g.table[i][j] = (i + j) % n;
  return g;
}

CommonSubgroup CommonSubgroup::trivial()
{
  CommonSubgroup c;
  c.group.name = "1";
  c.group.element_names = {"1"};
  c.group.table = {{0}};
  c.into_first = {0};
  c.into_second = {0};
  return c;
}

namespace {

[[noreturn]] void inconsistent(const std::string &what)
{
  throw Error(ErrorCode::InconsistentTables, what);
}

void validate(const FiniteGroup &g, const std::string &label)
{
  auto n = g.order();
  if (n == 0 || g.table.size() != n)
    inconsistent(label + ": table size does not match element count");
  for (auto const &row : g.table) {
    if (row.size() != n)
      inconsistent(label + ": table is not square");
    std::vector<bool> seen(n, false);
    for (auto x : row) {
      if (x >= n || seen[x])
        inconsistent(label + ": row is not a permutation");
      seen[x] = true;
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    if (g.table[0][x] != x || g.table[x][0] != x)
      inconsistent(label + ": element 0 is not the identity");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (g.table[g.table[a][b]][c] != g.table[a][g.table[b][c]])
          inconsistent(label + ": table is not associative");
  std::set<std::string> names(g.element_names.begin(), g.element_names.end());
  if (names.size() != n)
    inconsistent(label + ": duplicate element names");
}

void validate_embedding(const FiniteGroup &c, const FiniteGroup &g,
                        const std::vector<std::size_t> &into, const std::string &label)
{
  if (into.size() != c.order())
    inconsistent(label + ": embedding size mismatch");
  std::set<std::size_t> image;
  for (auto x : into) {
    if (x >= g.order())
      inconsistent(label + ": embedding out of range");
    image.insert(x);
  }
  if (image.size() != into.size())
    inconsistent(label + ": embedding is not injective");
  for (std::size_t a = 0; a < c.order(); ++a)
    for (std::size_t b = 0; b < c.order(); ++b)
      if (into[c.table[a][b]] != g.table[into[a]][into[b]])
        inconsistent(label + ": embedding is not a homomorphism");
}

struct Factor {
  FiniteGroup group;
  std::vector<std::size_t> into;              // C -> factor
  std::vector<std::optional<std::size_t>> in_c;  // factor -> C
  std::vector<std::size_t> inverse;
  std::vector<std::size_t> coset_rep;         // x -> rep of xC
  std::vector<std::size_t> coset_c;           // x = rep(x) * into(coset_c(x))
  std::vector<std::size_t> transversal;       // identity first

  std::size_t mul(std::size_t a, std::size_t b) const { return group.table[a][b]; }

  void prepare(std::size_t c_order)
  {
    auto n = group.order();
    in_c.assign(n, std::nullopt);
    for (std::size_t c = 0; c < c_order; ++c)
      in_c[into[c]] = c;
    inverse.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (mul(a, b) == 0)
          inverse[a] = b;
    coset_rep.assign(n, n);
    coset_c.assign(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      if (coset_rep[x] != n)
        continue;
      transversal.push_back(x);
      for (std::size_t c = 0; c < c_order; ++c) {
        auto y = mul(x, into[c]);
        coset_rep[y] = x;
        coset_c[y] = c;
      }
    }
  }
};

class FiniteTableAction final : public AmalgamAction {
  struct Letter {
    int side;
    std::size_t x;
  };

public:
  FiniteTableAction(FiniteGroup first, FiniteGroup second, CommonSubgroup common)
  : _c(std::move(common.group))
  {
    validate(first, "first factor");
    validate(second, "second factor");
    validate(_c, "common subgroup");
    validate_embedding(_c, first, common.into_first, "first embedding");
    validate_embedding(_c, second, common.into_second, "second embedding");
    for (std::size_t i = 1; i < first.order(); ++i)
      for (std::size_t j = 1; j < second.order(); ++j)
        if (first.element_names[i] == second.element_names[j])
          inconsistent("element name " + first.element_names[i] + " occurs in both factors");
    _f[0].group = std::move(first);
    _f[0].into = std::move(common.into_first);
    _f[1].group = std::move(second);
    _f[1].into = std::move(common.into_second);
    for (auto &f : _f)
      f.prepare(_c.order());
  }

  TreeBackend backend() const override { return TreeBackend::FiniteTable; }
  GroupWord identity() const override { return {0}; }

  GroupWord multiply(const GroupWord &a, const GroupWord &b) const override
  {
    auto letters = decode(a);
    auto more = decode(b);
    letters.insert(letters.end(), more.begin(), more.end());
    return normalize(letters);
  }

  GroupWord vertex_rep(const GroupWord &g, TreeSide side) const override
  {
    GroupWord out(g.begin(), g.end() - 1);
    int s = side == TreeSide::First ? 0 : 1;
    if (out.size() >= 2 && out[out.size() - 2] == s)
      out.resize(out.size() - 2);
    out.push_back(0);
    return out;
  }

  GroupWord edge_rep(const GroupWord &g) const override
  {
    GroupWord out(g.begin(), g.end() - 1);
    out.push_back(0);
    return out;
  }

  std::vector<GroupWord> transversal(TreeSide side, bool &) const override
  {
    int s = side == TreeSide::First ? 0 : 1;
    std::vector<GroupWord> out;
    for (auto t : _f[s].transversal)
      out.push_back(t == 0 ? GroupWord{0} : GroupWord{s, static_cast<int>(t), 0});
    return out;
  }

  std::string format(const GroupWord &g) const override
  {
    std::string out;
    for (std::size_t i = 0; i + 1 < g.size(); i += 2) {
      if (!out.empty())
        out += " ";
      out += _f[g[i]].group.element_names[static_cast<std::size_t>(g[i + 1])];
    }
    if (g.back() != 0) {
      if (!out.empty())
        out += " ";
      out += _f[0].group.element_names[_f[0].into[static_cast<std::size_t>(g.back())]];
    }
    return out.empty() ? "1" : out;
  }

  GroupWord parse(std::string_view text) const override
  {
    std::vector<Letter> letters;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
      if (token == "1" || token == "e")
        continue;
      bool found = false;
      for (int s = 0; s < 2 && !found; ++s) {
        auto const &names = _f[s].group.element_names;
        auto it = std::find(names.begin(), names.end(), token);
        if (it != names.end()) {
          letters.push_back({s, static_cast<std::size_t>(it - names.begin())});
          found = true;
        }
      }
      if (!found)
        throw Error(ErrorCode::NotInGroup, "unknown element '" + token + "'");
    }
    return normalize(letters);
  }

  std::string side_label(TreeSide side) const override
  {
    return "<" + _f[side == TreeSide::First ? 0 : 1].group.name + ">";
  }

private:
  std::vector<Letter> decode(const GroupWord &g) const
  {
    std::vector<Letter> out;
    for (std::size_t i = 0; i + 1 < g.size(); i += 2)
      out.push_back({g[i], static_cast<std::size_t>(g[i + 1])});
    out.push_back({0, _f[0].into[static_cast<std::size_t>(g.back())]});
    return out;
  }

  GroupWord normalize(const std::vector<Letter> &letters) const
  {
    // Merge into an alternating product with no factor in C (a lone element
    // of C may remain).
    std::vector<Letter> out;
    auto fold = [&] {
      while (out.size() >= 2 && _f[out.back().side].in_c[out.back().x]) {
        auto c = *_f[out.back().side].in_c[out.back().x];
        out.pop_back();
        auto &prev = out.back();
        prev.x = _f[prev.side].mul(prev.x, _f[prev.side].into[c]);
        if (prev.x == 0)
          out.pop_back();
      }
    };
    for (auto [side, x] : letters) {
      if (x == 0)
        continue;
      if (out.empty()) {
        out.push_back({side, x});
        continue;
      }
      auto &b = out.back();
      if (b.side == side) {
        b.x = _f[side].mul(b.x, x);
      } else if (auto c = _f[side].in_c[x]) {
        b.x = _f[b.side].mul(b.x, _f[b.side].into[*c]);
      } else if (auto lone = _f[b.side].in_c[b.x]) {
        out.pop_back();
        out.push_back({side, _f[side].mul(_f[side].into[*lone], x)});
        continue;
      } else {
        out.push_back({side, x});
        continue;
      }
      if (out.back().x == 0)
        out.pop_back();
      else
        fold();
    }

    GroupWord result;
    std::size_t carry = 0;
    for (auto [side, x] : out) {
      auto const &f = _f[side];
      auto y = f.mul(f.into[carry], x);
      if (auto c = f.in_c[y]) {
        carry = *c;
        continue;
      }
      result.push_back(side);
      result.push_back(static_cast<int>(f.coset_rep[y]));
      carry = f.coset_c[y];
    }
    result.push_back(static_cast<int>(carry));
    return result;
  }

  FiniteGroup _c;
  Factor _f[2];
};

} // namespace

std::shared_ptr<const AmalgamAction>
finite_amalgam_action(FiniteGroup first, FiniteGroup second, CommonSubgroup common)
{
  return std::make_shared<FiniteTableAction>(std::move(first), std::move(second),
                                             std::move(common));
}

TreeBall finite_amalgam_ball(FiniteGroup first, FiniteGroup second, CommonSubgroup common,
                             std::size_t radius, std::size_t cap)
{
  return build_tree_ball(
      finite_amalgam_action(std::move(first), std::move(second), std::move(common)), radius, cap);
}

// ---------------------------------------------------------------------------

TreeFixedSet fixed_set_in_ball(const TreeBall &ball, const GroupWord &w)
{
  auto const &action = ball.action();
  TreeFixedSet out;
  std::vector<bool> fixed(ball.vertices().size(), false);
  for (std::size_t i = 0; i < ball.vertices().size(); ++i) {
    auto const &v = ball.vertices()[i];
    if (action.vertex_rep(action.multiply(w, v.rep), v.side) == v.rep) {
      fixed[i] = true;
      out.vertices.push_back(i);
    }
  }
  std::vector<std::vector<std::size_t>> adj(ball.vertices().size());
  for (std::size_t k = 0; k < ball.edges().size(); ++k) {
    auto const &e = ball.edges()[k];
    if (action.edge_rep(action.multiply(w, e.rep)) != e.rep)
      continue;
    if (!fixed[e.first] || !fixed[e.second]) {
      ++out.inversions;
      continue;
    }
    out.edges.push_back(k);
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  if (!out.vertices.empty()) {
    std::vector<bool> seen(ball.vertices().size(), false);
    std::deque<std::size_t> queue{out.vertices.front()};
    seen[out.vertices.front()] = true;
    std::size_t reached = 1;
    while (!queue.empty()) {
      auto v = queue.front();
      queue.pop_front();
      for (auto u : adj[v])
        if (!seen[u]) {
          seen[u] = true;
          ++reached;
          queue.push_back(u);
        }
    }
    out.connected = reached == out.vertices.size();
  }
  return out;
}

CommonFixedReport common_fixed_vertex(const TreeBall &ball, const std::vector<GroupWord> &elements)
{
  CommonFixedReport report;
  std::vector<std::vector<bool>> masks;
  for (auto const &w : elements) {
    auto fs = fixed_set_in_ball(ball, w);
    std::vector<bool> mask(ball.vertices().size(), false);
    for (auto v : fs.vertices)
      mask[v] = true;
    report.fixed_counts.push_back(fs.vertices.size());
    masks.push_back(std::move(mask));
  }
  auto n = elements.size();
  report.pairwise_intersect.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t v = 0; v < ball.vertices().size(); ++v)
        if (masks[i][v] && masks[j][v]) {
          report.pairwise_intersect[i][j] = true;
          break;
        }
  for (std::size_t v = 0; v < ball.vertices().size(); ++v) {
    bool all = true;
    for (auto const &m : masks)
      all = all && m[v];
    if (all) {
      report.vertex = v;
      break;
    }
  }
  return report;
}

} // namespace artk
