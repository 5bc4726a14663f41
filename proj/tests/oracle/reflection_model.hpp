// Test-only oracle: Coxeter groups through the Tits reflection
// representation. Shares no code with the library; elements are real
// matrices compared entrywise after rounding.
#ifndef ARTK_TESTS_REFLECTION_MODEL_HPP
#define ARTK_TESTS_REFLECTION_MODEL_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

using Word = std::vector<int>;
using Matrix = std::vector<long double>;  // row-major n x n

struct Presentation {
  int n = 0;
  std::vector<std::vector<int>> m;  // m[i][j]: 0 = infinity, m[i][i] = 1

  static Presentation make(int n, const std::vector<std::tuple<int, int, int>> &labels)
  {
    Presentation p;
    p.n = n;
    p.m.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
      p.m[i][i] = 1;
    for (auto [a, b, l] : labels)
      p.m[a][b] = p.m[b][a] = l;
    return p;
  }
  static Presentation dihedral(int m) { return make(2, {{0, 1, m}}); }
};

/// The elements of W of length <= radius (all of W when radius is unset and
/// W is finite), each with its ShortLex-least reduced word.
class ReflectionGroup {
public:
  ReflectionGroup(Presentation p, std::optional<std::size_t> radius = std::nullopt,
                  std::size_t cap = 200000)
  : _p(std::move(p))
  {
    int n = _p.n;
    for (int s = 0; s < n; ++s) {
      Matrix g = identity_matrix();
      // sigma_s(v) = v - 2 B(e_s, v) e_s
      for (int j = 0; j < n; ++j)
        g[s * n + j] -= 2 * form(s, j);
      _gens.push_back(g);
    }
    add(identity_matrix(), {});
    std::size_t begin = 0;
    for (std::size_t len = 0; !radius || len < *radius; ++len) {
      std::size_t end = _words.size();
      for (std::size_t i = begin; i < end; ++i)
        for (int s = 0; s < n; ++s) {
          auto m = mul(_mats[i], _gens[s]);
          if (_index.count(key(m)))
            continue;
          auto w = _words[i];
          w.push_back(s);
          add(m, w);
          if (_words.size() > cap)
            throw std::runtime_error("oracle cap");
        }
      if (_words.size() == end) {
        _complete = true;
        break;
      }
      // Keep each layer in ShortLex order so that first discovery is least.
      std::vector<std::size_t> order(_words.size() - end);
      for (std::size_t k = 0; k < order.size(); ++k)
        order[k] = end + k;
      std::sort(order.begin(), order.end(),
                [&](std::size_t a, std::size_t b) { return _words[a] < _words[b]; });
      std::vector<Word> words;
      std::vector<Matrix> mats;
      for (auto k : order) {
        words.push_back(_words[k]);
        mats.push_back(_mats[k]);
      }
      for (std::size_t k = 0; k < order.size(); ++k) {
        _words[end + k] = words[k];
        _mats[end + k] = mats[k];
        _index[key(mats[k])] = end + k;
      }
      begin = end;
    }
  }

  bool complete() const { return _complete; }
  std::size_t order() const { return _words.size(); }
  const Word &word(std::size_t i) const { return _words[i]; }
  std::size_t length(std::size_t i) const { return _words[i].size(); }

  std::optional<std::size_t> find_matrix(const Matrix &m) const
  {
    auto it = _index.find(key(m));
    if (it == _index.end())
      return std::nullopt;
    return it->second;
  }

  Matrix matrix_of(const Word &w) const
  {
    Matrix m = identity_matrix();
    for (int s : w)
      m = mul(m, _gens.at(s));
    return m;
  }
  const Matrix &matrix(std::size_t i) const { return _mats[i]; }

  /// Index of the element spelled by w, if it lies in the enumerated ball.
  std::optional<std::size_t> find(const Word &w) const { return find_matrix(matrix_of(w)); }

  std::size_t at(const Word &w) const
  {
    auto i = find(w);
    if (!i)
      throw std::runtime_error("oracle: element outside the enumerated ball");
    return *i;
  }

  std::optional<std::size_t> product(std::size_t a, std::size_t b) const
  {
    return find_matrix(mul(_mats[a], _mats[b]));
  }

  /// Word of the inverse element (letters reversed).
  static Word inverse(Word w)
  {
    std::reverse(w.begin(), w.end());
    return w;
  }

  /// Elements of the standard parabolic W_X that lie in the ball.
  std::set<std::size_t> standard_subgroup(std::uint64_t x) const
  {
    std::set<std::size_t> out;
    for (std::size_t i = 0; i < order(); ++i)
      if (std::all_of(_words[i].begin(), _words[i].end(),
                      [&](int s) { return (x >> s) & 1u; }))
        out.insert(i);
    return out;
  }

  static Word concat(Word a, const Word &b)
  {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }

private:
  long double form(int s, int t) const
  {
    if (s == t)
      return 1;
    int m = _p.m[s][t];
    if (m == 0)
      return -1;
    return -std::cos(std::numbers::pi_v<long double> / m);
  }

  Matrix identity_matrix() const
  {
    Matrix m(static_cast<std::size_t>(_p.n * _p.n), 0);
    for (int i = 0; i < _p.n; ++i)
      m[i * _p.n + i] = 1;
    return m;
  }

  Matrix mul(const Matrix &a, const Matrix &b) const
  {
    int n = _p.n;
    Matrix c(static_cast<std::size_t>(n * n), 0);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        auto x = a[i * n + k];
        if (x == 0)
          continue;
        for (int j = 0; j < n; ++j)
          c[i * n + j] += x * b[k * n + j];
      }
    return c;
  }

  static std::vector<std::int64_t> key(const Matrix &m)
  {
    std::vector<std::int64_t> k;
    for (auto x : m)
      k.push_back(std::llround(x * 1e6L));
    return k;
  }

  void add(const Matrix &m, const Word &w)
  {
    _index[key(m)] = _words.size();
    _words.push_back(w);
    _mats.push_back(m);
  }

  Presentation _p;
  std::vector<Matrix> _gens;
  std::vector<Word> _words;
  std::vector<Matrix> _mats;
  std::map<std::vector<std::int64_t>, std::size_t> _index;
  bool _complete = false;
};

} // namespace oracle

#endif
