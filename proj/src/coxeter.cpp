#include "artk/coxeter.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string_view>
#include <unordered_set>

#include "artk/error.hpp"

namespace artk {

namespace {

// Word with consecutive equal letters cancelled (ss = 1).
Word cancel_squares(const Word &w)
{
  Word out;
  out.reserve(w.size());
  for (auto s : w) {
    if (!out.empty() && out.back() == s)
      out.pop_back();
    else
      out.push_back(s);
  }
  return out;
}

std::optional<std::size_t> adjacent_pair(const Word &w)
{
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == w[i + 1])
      return i;
  return std::nullopt;
}

// Calls f(word) for every word obtained from w by one braid move.
template<typename F>
void for_each_braid_move(const LabeledGraph &g, const Word &w, F &&f)
{
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    auto s = w[i];
    auto t = w[i + 1];
    if (s == t)
      continue;
    auto m = g.label(s, t);
    if (m == 0 || i + m > w.size())
      continue;
    bool alternating = true;
    for (std::size_t k = 2; k < m && alternating; ++k)
      alternating = w[i + k] == (k % 2 == 0 ? s : t);
    if (!alternating)
      continue;
    Word v = w;
    for (std::size_t k = 0; k < m; ++k)
      v[i + k] = (k % 2 == 0 ? t : s);
    f(std::move(v));
  }
}

} // namespace

std::size_t WordHash::operator()(const Word &w) const noexcept
{
  std::string_view bytes(reinterpret_cast<const char *>(w.data()), w.size());
  return std::hash<std::string_view>{}(bytes);
}

bool shortlex_less(const Word &a, const Word &b)
{
  if (a.size() != b.size())
    return a.size() < b.size();
  return a < b;
}

CoxeterGroup::CoxeterGroup(LabeledGraph graph, Caps caps)
: _graph(std::move(graph)), _caps(caps)
{
  if (_caps.braid == 0 || _caps.enumeration == 0)
    throw Error(ErrorCode::Syntax, "caps must be positive");
}

std::vector<Word> CoxeterGroup::braid_class(const Word &w, std::size_t cap) const
{
  std::vector<Word> queue{w};
  std::unordered_set<Word, WordHash> seen{w};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Word current = queue[i];
    for_each_braid_move(_graph, current, [&](Word v) {
      if (seen.insert(v).second) {
        if (queue.size() >= cap)
          throw CapExceeded("braid class", cap);
        queue.push_back(std::move(v));
      }
    });
  }
  return queue;
}

Word CoxeterGroup::canonical_form(const Word &w) const
{
  {
    std::lock_guard lock(_cache_mutex);
    if (auto it = _cache.find(w); it != _cache.end())
      return it->second;
  }

  Word current = cancel_squares(w);
  for (;;) {
    std::vector<Word> queue{current};
    std::unordered_set<Word, WordHash> seen{current};
    std::optional<Word> shorter;

    for (std::size_t i = 0; i < queue.size() && !shorter; ++i) {
      Word u = queue[i];
      if (auto p = adjacent_pair(u)) {
        u.erase(u.begin() + static_cast<std::ptrdiff_t>(*p),
                u.begin() + static_cast<std::ptrdiff_t>(*p) + 2);
        shorter = cancel_squares(u);
        break;
      }
      for_each_braid_move(_graph, u, [&](Word v) {
        if (seen.insert(v).second) {
          if (queue.size() >= _caps.braid)
            throw CapExceeded("braid class", _caps.braid);
          queue.push_back(std::move(v));
        }
      });
    }

    if (shorter) {
      current = std::move(*shorter);
      continue;
    }

    // No member has a deletable pair: the word is reduced and the queue holds
    // its whole braid class.
    Word canonical = *std::min_element(queue.begin(), queue.end(), shortlex_less);
    std::lock_guard lock(_cache_mutex);
    _cache.emplace(w, canonical);
    _cache.emplace(canonical, canonical);
    return canonical;
  }
}

CoxeterElement CoxeterGroup::reduce(const Word &w) const
{
  for (auto s : w)
    if (s >= rank())
      throw Error(ErrorCode::UnknownVertex, "letter outside the graph");
  return CoxeterElement(this, canonical_form(w));
}

CoxeterElement CoxeterGroup::identity() const
{
  return CoxeterElement(this, {});
}

CoxeterElement CoxeterGroup::generator(Vertex v) const
{
  if (v >= rank())
    throw Error(ErrorCode::UnknownVertex, "generator index out of range");
  return CoxeterElement(this, {v});
}

Word CoxeterGroup::parse_word(std::string_view text) const
{
  Word out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n'))
      ++i;
    auto j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != '\n')
      ++j;
    if (j > i) {
      auto tok = text.substr(i, j - i);
      if (tok != "e")
        out.push_back(_graph.vertex(tok));
    }
    i = j;
  }
  return out;
}

std::string CoxeterGroup::format(const Word &w) const
{
  if (w.empty())
    return "e";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i)
      out += ' ';
    out += _graph.name(w[i]);
  }
  return out;
}

CoxeterElement CoxeterGroup::element(std::string_view text) const
{
  return reduce(parse_word(text));
}

bool equal(const CoxeterGroup &group, const Word &a, const Word &b)
{
  return group.reduce(a) == group.reduce(b);
}

std::size_t length(const CoxeterGroup &group, const Word &w)
{
  return group.reduce(w).length();
}

namespace {

void require_same_group(const CoxeterElement &a, const CoxeterElement &b)
{
  if (&a.group() != &b.group())
    throw Error(ErrorCode::GraphMismatch, "elements belong to different groups");
}

} // namespace

CoxeterElement multiply(const CoxeterElement &a, const CoxeterElement &b)
{
  require_same_group(a, b);
  Word w = a.word();
  w.insert(w.end(), b.word().begin(), b.word().end());
  return a.group().reduce(w);
}

CoxeterElement invert(const CoxeterElement &a)
{
  Word w(a.word().rbegin(), a.word().rend());
  return a.group().reduce(w);
}

CoxeterElement conjugate(const CoxeterElement &g, const CoxeterElement &x)
{
  require_same_group(g, x);
  Word w = g.word();
  w.insert(w.end(), x.word().begin(), x.word().end());
  w.insert(w.end(), g.word().rbegin(), g.word().rend());
  return g.group().reduce(w);
}

CoxeterElement right_multiply(const CoxeterElement &g, Vertex s)
{
  Word w = g.word();
  w.push_back(s);
  return g.group().reduce(w);
}

CoxeterElement left_multiply(Vertex s, const CoxeterElement &g)
{
  Word w;
  w.reserve(g.length() + 1);
  w.push_back(s);
  w.insert(w.end(), g.word().begin(), g.word().end());
  return g.group().reduce(w);
}

VertexSet support(const CoxeterElement &w)
{
  VertexSet out;
  for (auto s : w.word())
    out = out.with(s);
  return out;
}

bool in_standard_parabolic(const CoxeterElement &w, VertexSet subset)
{
  return support(w).subset_of(subset);
}

CoxeterElement min_coset_rep(const CoxeterElement &g, VertexSet subset, Side side)
{
  auto current = g;
  auto letters = subset.members();
  for (bool descended = true; descended;) {
    descended = false;
    for (auto s : letters) {
      auto next = side == Side::Right ? right_multiply(current, s) : left_multiply(s, current);
      if (next.length() < current.length()) {
        current = std::move(next);
        descended = true;
        break;
      }
    }
  }
  return current;
}

DoubleCosetDecomposition min_double_coset(const CoxeterElement &g, VertexSet left_subset,
                                          VertexSet right_subset)
{
  // Every step removes one letter, so g = (s_1..s_k) g0 (t_m..t_1) with
  // l(g) = k + l(g0) + m, which forces the factor lengths to add up.
  auto const &group = g.group();
  auto current = g;
  Word left_word;
  Word right_word;
  auto left_letters = left_subset.members();
  auto right_letters = right_subset.members();

  for (bool descended = true; descended;) {
    descended = false;
    for (auto s : left_letters) {
      auto next = left_multiply(s, current);
      if (next.length() < current.length()) {
        current = std::move(next);
        left_word.push_back(s);
        descended = true;
      }
    }
    for (auto t : right_letters) {
      auto next = right_multiply(current, t);
      if (next.length() < current.length()) {
        current = std::move(next);
        right_word.insert(right_word.begin(), t);
        descended = true;
      }
    }
  }
  return DoubleCosetDecomposition{current, group.reduce(left_word), group.reduce(right_word)};
}

bool is_finite(const CoxeterGroup &group, VertexSet subset)
{
  // Sylvester's criterion by Gaussian elimination: all pivots positive.
  auto vs = subset.members();
  auto n = vs.size();
  std::vector<std::vector<long double>> b(n, std::vector<long double>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        b[i][j] = 1;
        continue;
      }
      auto m = group.graph().label(vs[i], vs[j]);
      b[i][j] = m == 0 ? -1.0L : -std::cos(std::numbers::pi_v<long double> / m);
    }
  for (std::size_t k = 0; k < n; ++k) {
    if (b[k][k] <= 1e-12L)
      return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      auto f = b[i][k] / b[k][k];
      for (std::size_t j = k; j < n; ++j)
        b[i][j] -= f * b[k][j];
    }
  }
  return true;
}

CayleyBall cayley_ball(const CoxeterGroup &group, std::optional<std::size_t> radius,
                       std::size_t cap, std::optional<VertexSet> generators)
{
  auto subset = generators.value_or(group.graph().all());
  auto letters = subset.members();
  if (!radius && !is_finite(group, subset))
    throw CapExceeded("enumeration of the infinite group W_" + format_subset(group.graph(), subset), cap);

  CayleyBall ball;
  ball.elements.push_back(group.identity());
  ball.layer_sizes.push_back(1);
  std::unordered_set<Word, WordHash> seen{Word{}};

  std::size_t layer_begin = 0;
  for (std::size_t r = 0;; ++r) {
    std::size_t layer_end = ball.elements.size();
    std::vector<CoxeterElement> next;
    bool at_radius = radius && r == *radius;

    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (auto s : letters) {
        auto h = right_multiply(ball.elements[i], s);
        if (h.length() != r + 1 || seen.count(h.word()))
          continue;
        if (at_radius) {
          // Only needed to decide exhaustion.
          return ball;
        }
        seen.insert(h.word());
        next.push_back(std::move(h));
        if (ball.elements.size() + next.size() > cap)
          throw CapExceeded("Cayley ball enumeration", cap);
      }
    }
    if (next.empty()) {
      ball.exhausted = true;
      return ball;
    }
    std::sort(next.begin(), next.end());
    ball.layer_sizes.push_back(next.size());
    layer_begin = layer_end;
    for (auto &e : next)
      ball.elements.push_back(std::move(e));
  }
}

} // namespace artk
