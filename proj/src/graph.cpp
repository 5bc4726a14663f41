#include "artk/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <tuple>

#include "artk/error.hpp"

namespace artk {

namespace {

std::string_view trim(std::string_view s)
{
  auto const ws = " \t\r\n";
  auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos)
    return {};
  auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_tokens(std::string_view s, std::string_view delims)
{
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && delims.find(s[i]) != std::string_view::npos)
      ++i;
    std::size_t j = i;
    while (j < s.size() && delims.find(s[j]) == std::string_view::npos)
      ++j;
    if (j > i)
      out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool valid_name(const std::string &name)
{
  if (name.empty() || name == "e")
    return false;
  return name.find_first_of(" \t\r\n,#{}^:") == std::string::npos;
}

unsigned parse_label(const std::string &tok, std::size_t line_no)
{
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(tok, &used);
  } catch (std::exception const &) {
    used = 0;
  }
  if (used != tok.size())
    throw Error(ErrorCode::Syntax,
                "line " + std::to_string(line_no) + ": bad edge label '" + tok + "'");
  if (value < 2)
    throw Error(ErrorCode::InvalidLabel,
                "line " + std::to_string(line_no) + ": edge label " + tok + " < 2");
  return static_cast<unsigned>(value);
}

} // namespace

std::vector<Vertex> VertexSet::members() const
{
  std::vector<Vertex> out;
  for (std::uint64_t b = _bits; b != 0; b &= b - 1)
    out.push_back(static_cast<Vertex>(std::countr_zero(b)));
  return out;
}

bool VertexSet::shortlex_less(VertexSet a, VertexSet b)
{
  if (a.size() != b.size())
    return a.size() < b.size();
  auto ma = a.members();
  auto mb = b.members();
  return ma < mb;
}

LabeledGraph::LabeledGraph(std::vector<std::string> names, std::vector<Edge> edges)
: _names(std::move(names))
{
  if (_names.size() > max_vertices)
    throw Error(ErrorCode::Syntax, "at most 64 vertices are supported");

  for (std::size_t i = 0; i < _names.size(); ++i) {
    if (!valid_name(_names[i]))
      throw Error(ErrorCode::InvalidName, "invalid vertex name '" + _names[i] + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (_names[i] == _names[j])
        throw Error(ErrorCode::DuplicateVertex, "duplicate vertex '" + _names[i] + "'");
  }

  auto n = _names.size();
  _labels.assign(n * n, 0);
  _neighbors.assign(n, VertexSet{});
  for (auto e : edges) {
    if (e.a >= n || e.b >= n)
      throw Error(ErrorCode::UnknownVertex, "edge endpoint out of range");
    if (e.a == e.b)
      throw Error(ErrorCode::LoopEdge, "loop at '" + _names[e.a] + "'");
    if (e.label < 2)
      throw Error(ErrorCode::InvalidLabel, "edge label < 2");
    if (_labels[e.a * n + e.b] != 0)
      throw Error(ErrorCode::DuplicateEdge,
                  "duplicate edge " + _names[e.a] + " " + _names[e.b]);
    _labels[e.a * n + e.b] = e.label;
    _labels[e.b * n + e.a] = e.label;
    _neighbors[e.a] = _neighbors[e.a].with(e.b);
    _neighbors[e.b] = _neighbors[e.b].with(e.a);
    if (e.a > e.b)
      std::swap(e.a, e.b);
    _edges.push_back(e);
  }
  std::sort(_edges.begin(), _edges.end(), [](Edge const &x, Edge const &y) {
    return std::pair(x.a, x.b) < std::pair(y.a, y.b);
  });
}

std::optional<Vertex> LabeledGraph::find(std::string_view name) const
{
  for (std::size_t i = 0; i < _names.size(); ++i)
    if (_names[i] == name)
      return static_cast<Vertex>(i);
  return std::nullopt;
}

Vertex LabeledGraph::vertex(std::string_view name) const
{
  if (auto v = find(name))
    return *v;
  throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + std::string(name) + "'");
}

std::string LabeledGraph::to_text() const
{
  std::ostringstream os;
  os << "vertices:";
  for (auto const &n : _names)
    os << ' ' << n;
  os << '\n';
  for (auto const &e : _edges)
    os << "edge: " << _names[e.a] << ' ' << _names[e.b] << ' ' << e.label << '\n';
  return os.str();
}

std::string LabeledGraph::hash() const
{
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : to_text()) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

LabeledGraph parse_graph(std::string_view text)
{
  std::vector<std::string> names;
  bool have_vertices = false;
  std::vector<std::tuple<std::string, std::string, std::string, std::size_t>> raw_edges;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty())
      continue;

    auto colon = line.find(':');
    if (colon == std::string_view::npos)
      throw Error(ErrorCode::Syntax, "line " + std::to_string(line_no) + ": missing ':'");
    auto key = trim(line.substr(0, colon));
    auto body = trim(line.substr(colon + 1));

    if (key == "vertices") {
      if (have_vertices)
        throw Error(ErrorCode::Syntax,
                    "line " + std::to_string(line_no) + ": repeated 'vertices:' line");
      have_vertices = true;
      names = split_tokens(body, " \t");
    } else if (key == "edge" || key == "edges") {
      for (auto const &item : split_tokens(body, ",")) {
        auto toks = split_tokens(item, " \t");
        if (toks.size() != 3)
          throw Error(ErrorCode::Syntax,
                      "line " + std::to_string(line_no) + ": expected 'a b m'");
        raw_edges.emplace_back(toks[0], toks[1], toks[2], line_no);
      }
    } else {
      throw Error(ErrorCode::Syntax,
                  "line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
    }
  }
  if (!have_vertices)
    throw Error(ErrorCode::Syntax, "missing 'vertices:' line");

  // Validate names first so duplicate vertices are reported before edges.
  LabeledGraph vertices_only(names, {});

  std::vector<Edge> edges;
  for (auto const &[a, b, m, ln] : raw_edges) {
    auto va = vertices_only.find(a);
    auto vb = vertices_only.find(b);
    if (!va || !vb)
      throw Error(ErrorCode::UnknownVertex, "line " + std::to_string(ln) +
                  ": unknown endpoint '" + (va ? b : a) + "'");
    if (*va == *vb)
      throw Error(ErrorCode::LoopEdge, "line " + std::to_string(ln) + ": loop at '" + a + "'");
    edges.push_back(Edge{*va, *vb, parse_label(m, ln)});
  }
  return LabeledGraph(std::move(names), std::move(edges));
}

LabeledGraph load_graph(const std::string &path)
{
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::Syntax, "cannot read graph file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str());
}

VertexSet star(const LabeledGraph &g, Vertex v)
{
  if (v >= g.size())
    throw Error(ErrorCode::UnknownVertex, "vertex index out of range");
  return g.neighbors(v).with(v);
}

VertexSet link(const LabeledGraph &g, Vertex v)
{
  return star(g, v).without(v);
}

LabeledGraph induced_subgraph(const LabeledGraph &g, VertexSet subset)
{
  auto members = subset.members();
  std::vector<std::string> names;
  std::vector<Vertex> index(g.size(), 0);
  for (auto v : members) {
    if (v >= g.size())
      throw Error(ErrorCode::UnknownVertex, "subset is not contained in the graph");
    index[v] = static_cast<Vertex>(names.size());
    names.push_back(g.name(v));
  }
  std::vector<Edge> edges;
  for (auto const &e : g.edges())
    if (subset.contains(e.a) && subset.contains(e.b))
      edges.push_back(Edge{index[e.a], index[e.b], e.label});
  return LabeledGraph(std::move(names), std::move(edges));
}

std::vector<VertexSet> enumerate_cliques(const LabeledGraph &g)
{
  // Grow cliques vertex by vertex; every clique extends a smaller one by a
  // vertex larger than all its members.
  std::vector<VertexSet> out{VertexSet{}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    auto c = out[i];
    auto members = c.members();
    Vertex start = members.empty() ? 0 : static_cast<Vertex>(members.back() + 1);
    for (Vertex v = start; v < g.size(); ++v)
      if (c.subset_of(g.neighbors(v)))
        out.push_back(c.with(v));
  }
  std::sort(out.begin(), out.end(), VertexSet::shortlex_less);
  return out;
}

bool is_free_of_infinity(const LabeledGraph &g, VertexSet subset)
{
  for (auto v : subset.members())
    if (!subset.without(v).subset_of(g.neighbors(v)))
      return false;
  return true;
}

std::vector<std::pair<Vertex, Vertex>> nonedge_pairs(const LabeledGraph &g)
{
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex a = 0; a < g.size(); ++a)
    for (Vertex b = a + 1; b < g.size(); ++b)
      if (!g.adjacent(a, b))
        out.emplace_back(a, b);
  return out;
}

VertexSet parse_subset(const LabeledGraph &g, std::string_view text)
{
  VertexSet out;
  for (auto const &tok : split_tokens(text, " \t,{}"))
    out = out.with(g.vertex(tok));
  return out;
}

std::string format_subset(const LabeledGraph &g, VertexSet subset)
{
  std::string out = "{";
  bool first = true;
  for (auto v : subset.members()) {
    if (!first)
      out += ',';
    out += g.name(v);
    first = false;
  }
  return out + "}";
}

} // namespace artk
