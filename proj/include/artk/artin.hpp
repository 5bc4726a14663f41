#ifndef ARTK_ARTIN_HPP
#define ARTK_ARTIN_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "artk/coxeter.hpp"

namespace artk {

struct Syllable {
  Vertex vertex;
  int sign;  // +1 or -1

  friend bool operator==(const Syllable &, const Syllable &) = default;
};

/// A signed word over the vertices, representing an element of the Artin
/// group. Only free reduction is performed on these; the general Artin word
/// problem is not attempted.
using ArtinWord = std::vector<Syllable>;

/// Tokens `v` and `v^-1`; `e` or an empty string is the empty word.
ArtinWord parse_artin_word(const LabeledGraph &g, std::string_view text);
std::string format_artin_word(const LabeledGraph &g, const ArtinWord &w);

ArtinWord positive_word(const Word &letters);
bool is_positive(const ArtinWord &w);
Word letters(const ArtinWord &w);

ArtinWord free_reduce(const ArtinWord &w);

/// Natural projection to the Coxeter group: v^-1 maps to v.
CoxeterElement theta(const CoxeterGroup &group, const ArtinWord &w);

/// The positive word spelled by the canonical reduced expression of g.
ArtinWord iota(const CoxeterElement &g);

/// At `position`, the alternating word of length m({from,to}) starting with
/// `from` is replaced by the one starting with `to`.
struct BraidMove {
  std::size_t position;
  Vertex from;
  Vertex to;

  friend bool operator==(const BraidMove &, const BraidMove &) = default;
};

struct BraidCertificate {
  std::vector<BraidMove> moves;
};

/// Applies the moves one by one, checking that each is a legal braid move.
/// Throws Error(Syntax) on an illegal move.
Word replay(const LabeledGraph &g, const Word &source, const BraidCertificate &certificate);

/// JSON array of {"position": i, "edge": [from, to]} records, vertex names.
std::string certificate_json(const LabeledGraph &g, const BraidCertificate &certificate);
BraidCertificate parse_certificate_json(const LabeledGraph &g, std::string_view json);

enum class BraidVerdict { Equal, NotEqual, Inconclusive };

std::string_view to_string(BraidVerdict verdict);

struct BraidComparison {
  BraidVerdict verdict;
  std::optional<BraidCertificate> certificate;  // present iff Equal
};

/// Breadth-first search over braid moves from p. NotEqual is only reported
/// when the lengths differ or p spells a reduced Coxeter expression (Tits'
/// theorem makes the braid class complete there); an exhausted search over a
/// non-reduced positive word is Inconclusive. Throws CapExceeded when the
/// class of p has more than `cap` members.
BraidComparison positive_braid_equal(const CoxeterGroup &group, const ArtinWord &p,
                                     const ArtinWord &q, std::size_t cap);

struct LiftResult {
  ArtinWord conjugator_word;      // iota(g)
  ArtinWord reduced_conjugator;   // iota(g0)
  DoubleCosetDecomposition decomposition;  // g = h1 g0 h2, h1 in W_Y, h2 in W_X
  std::vector<std::pair<Vertex, Vertex>> generator_map;  // v -> f_v
  std::vector<BraidCertificate> certificates;  // iota(g0) v  ->  f_v iota(g0)
  bool bijective = false;
};

/// Lifts gW_Xg^-1 ⊆ W_Y to the Artin group. g0 is the shortest element of
/// W_Y g W_X; for each v in X, f_v = g0 v g0^-1 must be a single letter of Y,
/// and the positive words iota(g0) v and f_v iota(g0) are certified equal by
/// braid moves. Throws Error(NotConjugatedInto) when some f_v is not a letter
/// of Y, i.e. exactly when gW_Xg^-1 is not contained in W_Y.
LiftResult lift_conjugator(const CoxeterElement &g, VertexSet x, VertexSet y, std::size_t cap);

} // namespace artk

#endif // ARTK_ARTIN_HPP
