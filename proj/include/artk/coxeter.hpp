#ifndef ARTK_COXETER_HPP
#define ARTK_COXETER_HPP

#include <cstddef>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "artk/graph.hpp"

namespace artk {

using Word = std::vector<Vertex>;

struct WordHash {
  std::size_t operator()(const Word &w) const noexcept;
};

/// ShortLex order: shorter words first, then lexicographic on vertex indices
/// (i.e. on declaration order of the graph).
bool shortlex_less(const Word &a, const Word &b);

/// Enumeration bounds. Hitting any of them raises CapExceeded.
struct Caps {
  std::size_t braid = 100000;       // members of one braid class
  std::size_t enumeration = 10000;  // group elements in one enumeration
};

class CoxeterElement;

/// The Coxeter group W of a labeled graph, with an exact word problem.
///
/// Elements are represented by their canonical form: the ShortLex minimum
/// of the braid class of a reduced expression. Reduction follows Tits:
/// repeatedly search the braid class of the current word for a member with
/// two equal adjacent letters, delete that pair, and stop once no braid class
/// member has such a pair.
///
/// CoxeterElement values refer back to their group, so a group must outlive
/// every element it produced. Reduction results are memoized; the cache is
/// guarded by a mutex and all queries are safe to call concurrently.
class CoxeterGroup {
public:
  explicit CoxeterGroup(LabeledGraph graph, Caps caps = {});

  CoxeterGroup(const CoxeterGroup &) = delete;
  CoxeterGroup &operator=(const CoxeterGroup &) = delete;

  const LabeledGraph &graph() const { return _graph; }
  const Caps &caps() const { return _caps; }
  std::size_t rank() const { return _graph.size(); }

  /// Every word reachable from `w` by braid moves, in breadth-first order.
  std::vector<Word> braid_class(const Word &w, std::size_t cap) const;
  std::vector<Word> braid_class(const Word &w) const
  { return braid_class(w, _caps.braid); }

  CoxeterElement reduce(const Word &w) const;

  CoxeterElement identity() const;
  CoxeterElement generator(Vertex v) const;

  /// Whitespace separated vertex names; `e` (or nothing) is the empty word.
  Word parse_word(std::string_view text) const;
  std::string format(const Word &w) const;

  CoxeterElement element(std::string_view text) const;

private:
  Word canonical_form(const Word &w) const;

  LabeledGraph _graph;
  Caps _caps;
  mutable std::mutex _cache_mutex;
  mutable std::unordered_map<Word, Word, WordHash> _cache;
};

class CoxeterElement {
public:
  const CoxeterGroup &group() const { return *_group; }
  const Word &word() const { return _word; }
  std::size_t length() const { return _word.size(); }
  bool is_identity() const { return _word.empty(); }
  std::string to_string() const { return _group->format(_word); }

  friend bool operator==(const CoxeterElement &a, const CoxeterElement &b)
  { return a._group == b._group && a._word == b._word; }

  /// ShortLex on canonical words.
  friend bool operator<(const CoxeterElement &a, const CoxeterElement &b)
  { return shortlex_less(a._word, b._word); }

private:
  friend class CoxeterGroup;

  CoxeterElement(const CoxeterGroup *group, Word word)
  : _group(group), _word(std::move(word))
  {}

  const CoxeterGroup *_group;
  Word _word;
};

struct CoxeterElementHash {
  std::size_t operator()(const CoxeterElement &e) const noexcept
  { return WordHash{}(e.word()); }
};

bool equal(const CoxeterGroup &group, const Word &a, const Word &b);
std::size_t length(const CoxeterGroup &group, const Word &w);

CoxeterElement multiply(const CoxeterElement &a, const CoxeterElement &b);
CoxeterElement invert(const CoxeterElement &a);
CoxeterElement conjugate(const CoxeterElement &g, const CoxeterElement &x);  // g x g^-1

CoxeterElement right_multiply(const CoxeterElement &g, Vertex s);
CoxeterElement left_multiply(Vertex s, const CoxeterElement &g);

/// Letters of the canonical word. Every reduced expression of an element
/// uses the same letters, so this is the support of the element.
VertexSet support(const CoxeterElement &w);
bool in_standard_parabolic(const CoxeterElement &w, VertexSet subset);

enum class Side { Left, Right };

/// Shortest element of g W_X (Side::Right) or W_X g (Side::Left), found by
/// greedy descent through X.
CoxeterElement min_coset_rep(const CoxeterElement &g, VertexSet subset, Side side);

/// g = h1 * g0 * h2 with h1 in W_X, h2 in W_Y, g0 the unique shortest
/// element of W_X g W_Y and lengths adding up.
struct DoubleCosetDecomposition {
  CoxeterElement g0;
  CoxeterElement h1;
  CoxeterElement h2;
};

DoubleCosetDecomposition min_double_coset(const CoxeterElement &g, VertexSet left_subset,
                                          VertexSet right_subset);

/// W_X is finite iff its Tits form B(e_s, e_t) = -cos(pi / m(s,t)) is
/// positive definite (m = infinity gives -1).
bool is_finite(const CoxeterGroup &group, VertexSet subset);

struct CayleyBall {
  std::vector<CoxeterElement> elements;   // by length, ShortLex inside a layer
  std::vector<std::size_t> layer_sizes;   // layer_sizes[r] = #elements of length r
  bool exhausted = false;                 // no element beyond the last layer
};

/// Breadth-first enumeration of the subgroup generated by `generators`
/// (default: all of W), up to `radius` if given. Throws CapExceeded when more
/// than `cap` elements would be produced, and immediately when no radius is
/// given and the subgroup is infinite.
CayleyBall cayley_ball(const CoxeterGroup &group, std::optional<std::size_t> radius,
                       std::size_t cap, std::optional<VertexSet> generators = std::nullopt);

} // namespace artk

#endif // ARTK_COXETER_HPP
