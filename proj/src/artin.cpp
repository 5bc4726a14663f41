#include "artk/artin.hpp"

#include <unordered_map>

#include <json.hpp>

#include "artk/error.hpp"

namespace artk {

ArtinWord parse_artin_word(const LabeledGraph &g, std::string_view text)
{
  ArtinWord out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n'))
      ++i;
    auto j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != '\n')
      ++j;
    if (j > i) {
      auto tok = text.substr(i, j - i);
      int sign = 1;
      if (auto caret = tok.find('^'); caret != std::string_view::npos) {
        auto exponent = tok.substr(caret + 1);
        if (exponent == "-1")
          sign = -1;
        else if (exponent != "1")
          throw Error(ErrorCode::Syntax, "bad exponent in '" + std::string(tok) + "'");
        tok = tok.substr(0, caret);
      }
      if (tok != "e" || sign != 1)
        out.push_back(Syllable{g.vertex(tok), sign});
    }
    i = j;
  }
  return out;
}

std::string format_artin_word(const LabeledGraph &g, const ArtinWord &w)
{
  if (w.empty())
    return "e";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i)
      out += ' ';
    out += g.name(w[i].vertex);
    if (w[i].sign < 0)
      out += "^-1";
  }
  return out;
}

ArtinWord positive_word(const Word &letters)
{
  ArtinWord out;
  out.reserve(letters.size());
  for (auto v : letters)
    out.push_back(Syllable{v, 1});
  return out;
}

bool is_positive(const ArtinWord &w)
{
  for (auto const &s : w)
    if (s.sign < 0)
      return false;
  return true;
}

Word letters(const ArtinWord &w)
{
  Word out;
  out.reserve(w.size());
  for (auto const &s : w)
    out.push_back(s.vertex);
  return out;
}

ArtinWord free_reduce(const ArtinWord &w)
{
  ArtinWord out;
  for (auto const &s : w) {
    if (!out.empty() && out.back().vertex == s.vertex && out.back().sign == -s.sign)
      out.pop_back();
    else
      out.push_back(s);
  }
  return out;
}

CoxeterElement theta(const CoxeterGroup &group, const ArtinWord &w)
{
  return group.reduce(letters(w));
}

ArtinWord iota(const CoxeterElement &g)
{
  return positive_word(g.word());
}

namespace {

bool move_applies(const LabeledGraph &g, const Word &w, const BraidMove &move)
{
  if (move.from == move.to || move.from >= g.size() || move.to >= g.size())
    return false;
  auto m = g.label(move.from, move.to);
  if (m == 0 || move.position + m > w.size())
    return false;
  for (std::size_t k = 0; k < m; ++k)
    if (w[move.position + k] != (k % 2 == 0 ? move.from : move.to))
      return false;
  return true;
}

void apply_move(const LabeledGraph &g, Word &w, const BraidMove &move)
{
  auto m = g.label(move.from, move.to);
  for (std::size_t k = 0; k < m; ++k)
    w[move.position + k] = (k % 2 == 0 ? move.to : move.from);
}

} // namespace

Word replay(const LabeledGraph &g, const Word &source, const BraidCertificate &certificate)
{
  Word w = source;
  for (auto const &move : certificate.moves) {
    if (!move_applies(g, w, move))
      throw Error(ErrorCode::Syntax,
                  "illegal braid move at position " + std::to_string(move.position));
    apply_move(g, w, move);
  }
  return w;
}

std::string certificate_json(const LabeledGraph &g, const BraidCertificate &certificate)
{
  auto arr = nlohmann::json::array();
  for (auto const &m : certificate.moves)
    arr.push_back({{"position", m.position}, {"edge", {g.name(m.from), g.name(m.to)}}});
  return arr.dump();
}

BraidCertificate parse_certificate_json(const LabeledGraph &g, std::string_view json)
{
  BraidCertificate out;
  try {
    for (auto const &rec : nlohmann::json::parse(json)) {
      auto edge = rec.at("edge");
      out.moves.push_back(BraidMove{rec.at("position").get<std::size_t>(),
                                    g.vertex(edge.at(0).get<std::string>()),
                                    g.vertex(edge.at(1).get<std::string>())});
    }
  } catch (nlohmann::json::exception const &e) {
    throw Error(ErrorCode::Syntax, std::string("bad certificate: ") + e.what());
  }
  return out;
}

std::string_view to_string(BraidVerdict verdict)
{
  switch (verdict) {
    case BraidVerdict::Equal: return "equal";
    case BraidVerdict::NotEqual: return "not-equal";
    case BraidVerdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

BraidComparison positive_braid_equal(const CoxeterGroup &group, const ArtinWord &p,
                                     const ArtinWord &q, std::size_t cap)
{
  if (!is_positive(p) || !is_positive(q))
    throw Error(ErrorCode::Syntax, "positive_braid_equal needs positive words");
  auto const &g = group.graph();
  auto source = letters(p);
  auto target = letters(q);

  if (source == target)
    return {BraidVerdict::Equal, BraidCertificate{}};
  // Braid relations preserve length, and so does the homomorphism to Z.
  if (source.size() != target.size())
    return {BraidVerdict::NotEqual, std::nullopt};

  struct Node {
    Word word;
    std::size_t parent;
    BraidMove move;
  };
  std::vector<Node> nodes{{source, 0, {}}};
  std::unordered_map<Word, std::size_t, WordHash> seen{{source, 0}};

  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t pos = 0; pos + 1 < nodes[i].word.size(); ++pos) {
      BraidMove move{pos, nodes[i].word[pos], nodes[i].word[pos + 1]};
      if (!move_applies(g, nodes[i].word, move))
        continue;
      Word next = nodes[i].word;
      apply_move(g, next, move);
      if (seen.count(next))
        continue;
      if (nodes.size() >= cap)
        throw CapExceeded("positive braid search", cap);
      seen.emplace(next, nodes.size());
      bool found = next == target;
      nodes.push_back(Node{std::move(next), i, move});
      if (found) {
        BraidCertificate cert;
        for (auto k = nodes.size() - 1; k != 0; k = nodes[k].parent)
          cert.moves.insert(cert.moves.begin(), nodes[k].move);
        return {BraidVerdict::Equal, std::move(cert)};
      }
    }
  }

  if (group.reduce(source).length() == source.size())
    return {BraidVerdict::NotEqual, std::nullopt};
  return {BraidVerdict::Inconclusive, std::nullopt};
}

LiftResult lift_conjugator(const CoxeterElement &g, VertexSet x, VertexSet y, std::size_t cap)
{
  auto const &group = g.group();
  auto const &graph = group.graph();

  LiftResult result{iota(g), {}, min_double_coset(g, y, x), {}, {}, false};
  auto const &g0 = result.decomposition.g0;
  result.reduced_conjugator = iota(g0);

  VertexSet image;
  for (auto v : x.members()) {
    auto f = conjugate(g0, group.generator(v));
    if (f.length() != 1 || !y.contains(f.word()[0]))
      throw Error(ErrorCode::NotConjugatedInto,
                  "g0 " + graph.name(v) + " g0^-1 = " + f.to_string() + " is not a letter of " +
                      format_subset(graph, y));
    auto fv = f.word()[0];
    image = image.with(fv);
    result.generator_map.emplace_back(v, fv);

    Word lhs = g0.word();
    lhs.push_back(v);
    Word rhs{fv};
    rhs.insert(rhs.end(), g0.word().begin(), g0.word().end());
    auto cmp = positive_braid_equal(group, positive_word(lhs), positive_word(rhs), cap);
    if (cmp.verdict != BraidVerdict::Equal)
      throw Error(ErrorCode::NotConjugatedInto,
                  "no braid certificate for " + group.format(lhs) + " = " + group.format(rhs));
    result.certificates.push_back(std::move(*cmp.certificate));
  }
  result.bijective = x.size() == y.size() && image.size() == x.size();
  return result;
}

} // namespace artk
