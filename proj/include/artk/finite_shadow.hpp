#ifndef ARTK_FINITE_SHADOW_HPP
#define ARTK_FINITE_SHADOW_HPP

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "artk/coxeter.hpp"

namespace artk {

/// Membership bitmap over the elements of a FiniteShadow.
using ElementSet = std::vector<bool>;

/// A finite standard parabolic subgroup W_S, fully enumerated and indexed,
/// with multiplication tables by the generators. Elements are indexed in
/// Cayley-ball order (length, then ShortLex), so index 0 is the identity.
///
/// Construction throws CapExceeded when W_S has more than `cap` elements.
class FiniteShadow {
public:
  FiniteShadow(const CoxeterGroup &group, VertexSet generators, std::size_t cap);
  explicit FiniteShadow(const CoxeterGroup &group)
  : FiniteShadow(group, group.graph().all(), group.caps().enumeration)
  {}

  const CoxeterGroup &group() const { return *_group; }
  VertexSet generators() const { return _generators; }
  std::size_t order() const { return _elements.size(); }

  const CoxeterElement &element(std::size_t i) const { return _elements[i]; }
  const std::vector<CoxeterElement> &elements() const { return _elements; }

  std::optional<std::size_t> find(const CoxeterElement &e) const;
  std::size_t index_of(const CoxeterElement &e) const;

  std::size_t right(std::size_t i, Vertex s) const { return _right[i * _rank + s]; }
  std::size_t left(Vertex s, std::size_t i) const { return _left[i * _rank + s]; }
  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const { return _inverse[a]; }
  std::size_t length(std::size_t i) const { return _elements[i].length(); }

  ElementSet empty_set() const { return ElementSet(order(), false); }
  ElementSet standard_subgroup(VertexSet subset) const;
  /// g S g^-1
  ElementSet conjugate(std::size_t g, const ElementSet &set) const;
  std::vector<std::size_t> members(const ElementSet &set) const;

private:
  const CoxeterGroup *_group;
  VertexSet _generators;
  std::size_t _rank;
  std::vector<CoxeterElement> _elements;
  std::unordered_map<Word, std::size_t, WordHash> _index;
  std::vector<std::size_t> _right;
  std::vector<std::size_t> _left;
  std::vector<std::size_t> _inverse;
};

} // namespace artk

#endif // ARTK_FINITE_SHADOW_HPP
