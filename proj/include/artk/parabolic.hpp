#ifndef ARTK_PARABOLIC_HPP
#define ARTK_PARABOLIC_HPP

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "artk/error.hpp"
#include "artk/finite_shadow.hpp"

namespace artk {

/// The parabolic subgroup g W_X g^-1. The conjugator is normalized to the
/// shortest element of g W_X, which does not change the subgroup.
class ParabolicHandle {
public:
  ParabolicHandle(const CoxeterElement &conjugator, VertexSet base);

  static ParabolicHandle standard(const CoxeterGroup &group, VertexSet base)
  { return ParabolicHandle(group.identity(), base); }

  const CoxeterElement &conjugator() const { return _conjugator; }
  VertexSet base() const { return _base; }
  const CoxeterGroup &group() const { return _conjugator.group(); }

  /// `(g | {X})`
  std::string to_string() const;

  /// Equality of representations, not of subgroups.
  friend bool operator==(const ParabolicHandle &a, const ParabolicHandle &b)
  { return a._conjugator == b._conjugator && a._base == b._base; }

private:
  CoxeterElement _conjugator;
  VertexSet _base;
};

/// w ∈ gW_Xg^-1  ⟺  support(g^-1 w g) ⊆ X.
bool contains_element(const ParabolicHandle &p, const CoxeterElement &w);

/// P1 ⊆ P2  ⟺  g1 v g1^-1 ∈ P2 for every v in the base of P1.
bool subset(const ParabolicHandle &p1, const ParabolicHandle &p2);

/// The conjugated generators g v g^-1, v in the base.
std::vector<CoxeterElement> generators(const ParabolicHandle &p);

/// Every normalized handle (h, Z) with h in a finite W_S and Z ⊆ S, with its
/// element set. Ordered by |Z|, then Z in ShortLex, then h in ShortLex.
class ParabolicCatalog {
public:
  struct Entry {
    ParabolicHandle handle;
    ElementSet elements;
  };

  explicit ParabolicCatalog(const FiniteShadow &shadow);

  const FiniteShadow &shadow() const { return *_shadow; }
  const std::vector<Entry> &entries() const { return _entries; }

  /// Element set of an arbitrary handle whose conjugator and base lie in the
  /// ambient W_S.
  ElementSet elements(const ParabolicHandle &p) const;

  /// The handle with exactly this element set and the shortest conjugator
  /// (first in catalog order among those).
  std::optional<ParabolicHandle> find(const ElementSet &set) const;

private:
  const FiniteShadow *_shadow;
  std::vector<Entry> _entries;
  std::unordered_map<ElementSet, std::size_t> _by_set;
};

struct NotParabolicWitness {
  std::vector<CoxeterElement> elements;
};

using Intersection = std::variant<ParabolicHandle, NotParabolicWitness>;

/// P1 ∩ P2 as an element set, matched against every handle of the ambient
/// group; a failed match is returned as data.
Intersection intersect(const ParabolicCatalog &catalog, const ParabolicHandle &p1,
                       const ParabolicHandle &p2);

/// Convenience overload enumerating all of W (throws CapExceeded when W is
/// larger than `cap`).
Intersection intersect(const ParabolicHandle &p1, const ParabolicHandle &p2, std::size_t cap);

struct ClosureTrace {
  std::vector<ParabolicHandle> chain;  // starts at the ambient W_S
  ParabolicHandle result;
};

/// Parabolic closure by the intersection chain: start from the ambient
/// group and intersect with every catalog handle containing B, recording each
/// proper step. Throws Error(NotParabolic) if an intersection has no handle.
ClosureTrace parabolic_closure(const ParabolicCatalog &ambient,
                               const std::vector<CoxeterElement> &elements);

/// Closure inside W_S where S is the union of the supports of B. Every
/// parabolic subgroup of W contained in W_S is a parabolic subgroup of W_S,
/// so only W_S has to be finite (within `cap`), not W.
ClosureTrace parabolic_closure(const CoxeterGroup &group,
                               const std::vector<CoxeterElement> &elements, std::size_t cap);

/// PC(B1) ⊆ PC(B2), for B1 ⊆ B2.
bool closure_monotone_check(const CoxeterGroup &group, const std::vector<CoxeterElement> &b1,
                            const std::vector<CoxeterElement> &b2, std::size_t cap);

struct CardinalityReport {
  std::size_t handles = 0;
  std::size_t pairs_checked = 0;
  std::size_t nested_pairs = 0;
  std::vector<std::string> counterexamples;

  Verdict verdict() const { return counterexamples.empty() ? Verdict::Pass : Verdict::Fail; }
};

/// Over all pairs of handles of a finite W with P1 ⊆ P2: |base(P1)| <=
/// |base(P2)|, with equal element sets when the cardinalities tie. Also
/// reports any pair where the subset criterion disagrees with element sets.
CardinalityReport verify_cardinality_lemma(const CoxeterGroup &group, std::size_t cap);

enum class Property { Int, IntPlus, IntPlusMinus, IntPlusPlus };

std::string_view to_string(Property property);
std::optional<Property> parse_property(std::string_view text);

struct PropertyReport {
  Property property;
  std::string graph_hash;
  std::size_t pairs_checked = 0;
  Verdict verdict = Verdict::Pass;
  std::optional<std::string> counterexample;

  std::string to_json() const;
};

/// Brute-force check of an intersection property on the Coxeter shadow.
/// (Int) enumerates W_Y for every free-of-infinity Y; the other properties
/// enumerate W. Throws CapExceeded when a required group is too large.
PropertyReport check_property(const CoxeterGroup &group, Property property, std::size_t cap);

} // namespace artk

#endif // ARTK_PARABOLIC_HPP
