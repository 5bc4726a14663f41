// Test-only oracle: cosets u W_Δ of cliques Δ in the reflection model, for
// counting vertices and cubes of the clique-cube shadow.
#ifndef ARTK_TESTS_COSET_MODEL_HPP
#define ARTK_TESTS_COSET_MODEL_HPP

#include "oracle/reflection_model.hpp"

namespace oracle {

inline std::vector<std::uint64_t> cliques(const Presentation &p)
{
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << p.n); ++m) {
    bool ok = true;
    for (int i = 0; i < p.n; ++i)
      for (int j = i + 1; j < p.n; ++j)
        if ((m >> i & 1) && (m >> j & 1) && p.m[i][j] == 0)
          ok = false;
    if (ok)
      out.push_back(m);
  }
  return out;
}

struct CosetVertex {
  std::size_t rep;
  std::uint64_t clique;
};

/// All cosets u W_Δ whose shortest element has length <= radius (every
/// coset when radius is unset and W is finite). `slack` must bound the
/// length of the longest element of every finite W_Δ.
class CosetModel {
public:
  CosetModel(const Presentation &p, std::optional<std::size_t> radius, std::size_t slack = 8)
  : _group(p, radius ? std::optional<std::size_t>(*radius + slack) : std::nullopt), _radius(radius)
  {
    _cliques = cliques(p);
    for (auto c : _cliques) {
      auto sub = _group.standard_subgroup(c);
      for (std::size_t x = 0; x < _group.order(); ++x) {
        if (radius && _group.length(x) > *radius)
          continue;
        bool minimal = true;
        for (auto h : sub) {
          auto y = _group.product(x, h);
          if (!y)
            throw std::runtime_error("coset oracle: slack too small");
          if (_group.length(*y) < _group.length(x))
            minimal = false;
        }
        if (minimal)
          _vertices.push_back({x, c});
      }
    }
  }

  const ReflectionGroup &group() const { return _group; }
  const std::vector<CosetVertex> &vertices() const { return _vertices; }

  std::vector<std::size_t> f_vector() const
  {
    std::vector<std::size_t> f{_vertices.size()};
    for (auto const &v : _vertices)
      for (auto top : _cliques)
        if ((top & v.clique) == v.clique && top != v.clique) {
          auto n = static_cast<std::size_t>(__builtin_popcountll(top & ~v.clique));
          if (f.size() <= n)
            f.resize(n + 1, 0);
          ++f[n];
        }
    return f;
  }

  /// u^-1 w u ∈ W_Δ, decided on matrices.
  bool fixes(const Word &w, const CosetVertex &v) const
  {
    auto u = _group.word(v.rep);
    auto conj = ReflectionGroup::concat(ReflectionGroup::concat(ReflectionGroup::inverse(u), w), u);
    auto m = _group.matrix_of(conj);
    auto idx = _group.find_matrix(m);
    if (!idx)
      return false;  // too long to lie in a finite W_Δ of this ball
    auto const &word = _group.word(*idx);
    return std::all_of(word.begin(), word.end(), [&](int s) { return (v.clique >> s) & 1u; });
  }

  std::size_t fixed_count(const Word &w) const
  {
    std::size_t n = 0;
    for (auto const &v : _vertices)
      n += fixes(w, v);
    return n;
  }

private:
  ReflectionGroup _group;
  std::optional<std::size_t> _radius;
  std::vector<std::uint64_t> _cliques;
  std::vector<CosetVertex> _vertices;
};

} // namespace oracle

#endif
