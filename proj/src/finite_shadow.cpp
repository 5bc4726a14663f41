#include "artk/finite_shadow.hpp"

#include "artk/error.hpp"

namespace artk {

namespace {

constexpr std::size_t none = static_cast<std::size_t>(-1);

} // namespace

FiniteShadow::FiniteShadow(const CoxeterGroup &group, VertexSet generators, std::size_t cap)
: _group(&group), _generators(generators), _rank(group.rank())
{
  auto ball = cayley_ball(group, std::nullopt, cap, generators);
  _elements = std::move(ball.elements);
  for (std::size_t i = 0; i < _elements.size(); ++i)
    _index.emplace(_elements[i].word(), i);

  _right.assign(_elements.size() * _rank, none);
  _left.assign(_elements.size() * _rank, none);
  for (std::size_t i = 0; i < _elements.size(); ++i) {
    for (auto s : generators.members()) {
      _right[i * _rank + s] = index_of(right_multiply(_elements[i], s));
      _left[i * _rank + s] = index_of(left_multiply(s, _elements[i]));
    }
  }
  _inverse.resize(_elements.size());
  for (std::size_t i = 0; i < _elements.size(); ++i) {
    std::size_t j = 0;
    for (auto it = _elements[i].word().rbegin(); it != _elements[i].word().rend(); ++it)
      j = right(j, *it);
    _inverse[i] = j;
  }
}

std::optional<std::size_t> FiniteShadow::find(const CoxeterElement &e) const
{
  if (&e.group() != _group)
    return std::nullopt;
  auto it = _index.find(e.word());
  if (it == _index.end())
    return std::nullopt;
  return it->second;
}

std::size_t FiniteShadow::index_of(const CoxeterElement &e) const
{
  if (auto i = find(e))
    return *i;
  throw Error(ErrorCode::NotInGroup, "element " + e.to_string() + " is not in the enumerated group");
}

std::size_t FiniteShadow::multiply(std::size_t a, std::size_t b) const
{
  for (auto s : _elements[b].word())
    a = right(a, s);
  return a;
}

ElementSet FiniteShadow::standard_subgroup(VertexSet subset) const
{
  ElementSet out = empty_set();
  std::vector<std::size_t> queue{0};
  out[0] = true;
  auto letters = (subset & _generators).members();
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (auto s : letters) {
      auto j = right(queue[i], s);
      if (!out[j]) {
        out[j] = true;
        queue.push_back(j);
      }
    }
  return out;
}

ElementSet FiniteShadow::conjugate(std::size_t g, const ElementSet &set) const
{
  ElementSet out = empty_set();
  auto g_inv = inverse(g);
  for (std::size_t i = 0; i < set.size(); ++i)
    if (set[i])
      out[multiply(multiply(g, i), g_inv)] = true;
  return out;
}

std::vector<std::size_t> FiniteShadow::members(const ElementSet &set) const
{
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < set.size(); ++i)
    if (set[i])
      out.push_back(i);
  return out;
}

} // namespace artk
