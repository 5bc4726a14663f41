#ifndef ARTK_TESTS_SUPPORT_HPP
#define ARTK_TESTS_SUPPORT_HPP

#include <string>

#include "artk/graph.hpp"
#include "oracle/reflection_model.hpp"

#ifndef ARTK_FIXTURES
#define ARTK_FIXTURES "fixtures"
#endif

inline std::string fixture(const std::string &name)
{
  return std::string(ARTK_FIXTURES) + "/" + name;
}

inline oracle::Presentation presentation_of(const artk::LabeledGraph &g)
{
  std::vector<std::tuple<int, int, int>> labels;
  for (auto const &e : g.edges())
    labels.emplace_back(e.a, e.b, static_cast<int>(e.label));
  return oracle::Presentation::make(static_cast<int>(g.size()), labels);
}

inline oracle::Word to_oracle(const std::vector<artk::Vertex> &w)
{
  return oracle::Word(w.begin(), w.end());
}

inline std::vector<artk::Vertex> from_oracle(const oracle::Word &w)
{
  return std::vector<artk::Vertex>(w.begin(), w.end());
}

#endif
