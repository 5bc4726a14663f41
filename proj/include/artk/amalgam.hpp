#ifndef ARTK_AMALGAM_HPP
#define ARTK_AMALGAM_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "artk/parabolic.hpp"

namespace artk {

// ---------------------------------------------------------------------------
// Splittings of A_Γ along non-edges.

enum class SplitStrategy {
  StarLink,     // A_U = A_st(s) *_{A_lk(s)} A_{U-s}
  TwoDeletion,  // A_U = A_{U-s} *_{A_{U-s-t}} A_{U-t}
};

std::optional<SplitStrategy> parse_strategy(std::string_view text);

struct DecompositionNode {
  VertexSet set;
  // Amalgam nodes only; leaves have null children.
  std::shared_ptr<const DecompositionNode> left;
  std::shared_ptr<const DecompositionNode> right;
  VertexSet over;
  std::pair<Vertex, Vertex> pivot{0, 0};

  bool leaf() const { return !left; }
};

using DecompositionTree = std::shared_ptr<const DecompositionNode>;

/// Splits at the ShortLex-first non-edge pair of each node until every leaf
/// is free of infinity.
DecompositionTree decompose(const LabeledGraph &g, SplitStrategy strategy);

/// Nested amalgam, e.g. `(<v,w> *_<v> <v,y>) *_<w,y> (<w,x> *_<x> <x,y>)`.
std::string render(const LabeledGraph &g, const DecompositionTree &tree);
std::string decomposition_json(const LabeledGraph &g, const DecompositionTree &tree);
std::vector<VertexSet> leaves(const DecompositionTree &tree);

// ---------------------------------------------------------------------------
// Bass-Serre trees of amalgams G = G1 *_C G2.

enum class TreeBackend { CoxeterShadow, FiniteTable };
enum class TreeSide { First, Second };

inline TreeSide other(TreeSide side)
{ return side == TreeSide::First ? TreeSide::Second : TreeSide::First; }

/// Opaque encoding of an element of the acting group; its meaning is fixed by
/// the AmalgamAction that produced it.
using GroupWord = std::vector<int>;

struct TreeVertex {
  GroupWord rep;   // canonical representative of the coset rep * G_side
  TreeSide side;
  std::size_t depth;  // tree distance to the base edge
};

struct TreeEdge {
  GroupWord rep;        // canonical representative of rep * C
  std::size_t first;    // endpoint on the First side
  std::size_t second;   // endpoint on the Second side
};

/// An amalgam acting on its Bass-Serre tree: vertices are cosets gG1 and
/// gG2, edges are cosets gC joining gG1 and gG2.
class AmalgamAction {
public:
  virtual ~AmalgamAction() = default;

  virtual TreeBackend backend() const = 0;
  virtual GroupWord identity() const = 0;
  virtual GroupWord multiply(const GroupWord &a, const GroupWord &b) const = 0;
  virtual GroupWord vertex_rep(const GroupWord &g, TreeSide side) const = 0;
  virtual GroupWord edge_rep(const GroupWord &g) const = 0;

  /// Representatives of the cosets G_side / C. `complete` is cleared when a
  /// length bound cut the enumeration short.
  virtual std::vector<GroupWord> transversal(TreeSide side, bool &complete) const = 0;

  virtual std::string format(const GroupWord &g) const = 0;
  virtual GroupWord parse(std::string_view text) const = 0;
  virtual std::string side_label(TreeSide side) const = 0;

  /// Vertex stabilizer rep * G_side * rep^-1 as a parabolic handle; only the
  /// Coxeter-shadow backend has one.
  virtual std::optional<ParabolicHandle> stabilizer(const TreeVertex &v) const
  {
    (void)v;
    return std::nullopt;
  }
};

/// Truncated Bass-Serre tree: all vertices within tree distance `radius` of
/// the base edge e(1), which joins 1*G1 and 1*G2.
class TreeBall {
public:
  TreeBall(std::shared_ptr<const AmalgamAction> action, std::size_t radius);

  const AmalgamAction &action() const { return *_action; }
  std::size_t radius() const { return _radius; }
  const std::vector<TreeVertex> &vertices() const { return _vertices; }
  const std::vector<TreeEdge> &edges() const { return _edges; }
  bool complete_neighborhoods() const { return _complete; }

  std::optional<std::size_t> find_vertex(const GroupWord &rep, TreeSide side) const;
  std::optional<std::size_t> find_edge(const GroupWord &rep) const;
  std::size_t degree(std::size_t vertex) const;

  /// |E| = |V| - 1 and connected.
  bool is_tree() const;

  std::string label(std::size_t vertex) const;
  std::string to_json() const;
  /// Base edge drawn bold; vertices in `highlight` filled.
  std::string to_dot(const std::vector<std::size_t> &highlight = {}) const;

private:
  friend TreeBall build_tree_ball(std::shared_ptr<const AmalgamAction> action, std::size_t radius,
                                  std::size_t cap);

  std::shared_ptr<const AmalgamAction> _action;
  std::size_t _radius;
  bool _complete = true;
  std::vector<TreeVertex> _vertices;
  std::vector<TreeEdge> _edges;
  std::map<std::pair<GroupWord, TreeSide>, std::size_t> _vertex_index;
  std::map<GroupWord, std::size_t> _edge_index;
};

/// Breadth-first growth from the base edge. Throws CapExceeded when the ball
/// would hold more than `cap` vertices.
TreeBall build_tree_ball(std::shared_ptr<const AmalgamAction> action, std::size_t radius,
                         std::size_t cap);

/// W_Γ = W_I *_{W_K} W_J with I = V-{s}, J = V-{t}, K = V-{s,t} for a
/// non-edge {s,t}. Coset representatives are shortest coset elements. When
/// an index [W_I : W_K] is infinite, `branch_length` bounds the length of the
/// transversal elements used at each vertex (the ball then reports
/// incomplete neighborhoods); without it such a ball throws CapExceeded.
std::shared_ptr<const AmalgamAction>
coxeter_shadow_action(const CoxeterGroup &group, Vertex s, Vertex t, std::size_t cap,
                      std::optional<std::size_t> branch_length = std::nullopt);

TreeBall bass_serre_ball(const CoxeterGroup &group, Vertex s, Vertex t, std::size_t radius,
                         std::size_t cap, std::optional<std::size_t> branch_length = std::nullopt);

/// A finite group given by its multiplication table. Element 0 is the
/// identity.
struct FiniteGroup {
  std::string name;                          // used in vertex labels, e.g. "a"
  std::vector<std::string> element_names;
  std::vector<std::vector<std::size_t>> table;

  std::size_t order() const { return element_names.size(); }

  /// Z/n with elements 1, a, a^2, ... for generator name "a".
  static FiniteGroup cyclic(std::size_t n, const std::string &generator);
};

/// Embedding of C into both factors.
struct CommonSubgroup {
  FiniteGroup group;
  std::vector<std::size_t> into_first;
  std::vector<std::size_t> into_second;

  static CommonSubgroup trivial();
};

/// Amalgam of finite groups with elements in normal form t_1 ... t_k c over
/// fixed left transversals of C. Throws Error(InconsistentTables) when the
/// tables are not groups or the embeddings are not injective homomorphisms.
std::shared_ptr<const AmalgamAction>
finite_amalgam_action(FiniteGroup first, FiniteGroup second, CommonSubgroup common);

TreeBall finite_amalgam_ball(FiniteGroup first, FiniteGroup second, CommonSubgroup common,
                             std::size_t radius, std::size_t cap = 100000);

struct TreeFixedSet {
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> edges;
  bool connected = true;      // fixed vertices and edges form one subtree
  std::size_t inversions = 0; // edges mapped to themselves with swapped ends
};

TreeFixedSet fixed_set_in_ball(const TreeBall &ball, const GroupWord &w);

struct CommonFixedReport {
  std::optional<std::size_t> vertex;                  // first common fixed vertex
  std::vector<std::size_t> fixed_counts;              // per element
  std::vector<std::vector<bool>> pairwise_intersect;  // fixed sets meet in the ball
};

CommonFixedReport common_fixed_vertex(const TreeBall &ball, const std::vector<GroupWord> &elements);

} // namespace artk

#endif // ARTK_AMALGAM_HPP
