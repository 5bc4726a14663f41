#include "artk/parabolic.hpp"

#include <algorithm>
#include <unordered_set>

#include <json.hpp>

namespace artk {

ParabolicHandle::ParabolicHandle(const CoxeterElement &conjugator, VertexSet base)
: _conjugator(min_coset_rep(conjugator, base, Side::Right)), _base(base)
{
  if (!base.subset_of(conjugator.group().graph().all()))
    throw Error(ErrorCode::UnknownVertex, "handle base is not a vertex subset");
}

std::string ParabolicHandle::to_string() const
{
  return "(" + _conjugator.to_string() + " | " + format_subset(group().graph(), _base) + ")";
}

bool contains_element(const ParabolicHandle &p, const CoxeterElement &w)
{
  auto const &g = p.conjugator();
  return in_standard_parabolic(multiply(multiply(invert(g), w), g), p.base());
}

bool subset(const ParabolicHandle &p1, const ParabolicHandle &p2)
{
  for (auto const &x : generators(p1))
    if (!contains_element(p2, x))
      return false;
  return true;
}

std::vector<CoxeterElement> generators(const ParabolicHandle &p)
{
  std::vector<CoxeterElement> out;
  for (auto v : p.base().members())
    out.push_back(conjugate(p.conjugator(), p.group().generator(v)));
  return out;
}

namespace {

std::vector<VertexSet> subsets_shortlex(VertexSet s)
{
  std::vector<VertexSet> out;
  // Enumerate submasks of s.
  auto bits = s.bits();
  for (std::uint64_t m = bits;; m = (m - 1) & bits) {
    out.emplace_back(m);
    if (m == 0)
      break;
  }
  std::sort(out.begin(), out.end(), VertexSet::shortlex_less);
  return out;
}

std::string format_elements(const FiniteShadow &shadow, const ElementSet &set)
{
  std::string out = "{";
  bool first = true;
  for (auto i : shadow.members(set)) {
    if (!first)
      out += ", ";
    out += shadow.element(i).to_string();
    first = false;
  }
  return out + "}";
}

bool is_subset(const ElementSet &a, const ElementSet &b)
{
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i])
      return false;
  return true;
}

ElementSet intersection(const ElementSet &a, const ElementSet &b)
{
  ElementSet out(a.size(), false);
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = a[i] && b[i];
  return out;
}

} // namespace

ParabolicCatalog::ParabolicCatalog(const FiniteShadow &shadow) : _shadow(&shadow)
{
  for (auto z : subsets_shortlex(shadow.generators())) {
    auto standard = shadow.standard_subgroup(z);
    std::unordered_set<std::size_t> reps;
    std::vector<std::size_t> ordered;
    for (std::size_t h = 0; h < shadow.order(); ++h) {
      auto rep = shadow.index_of(min_coset_rep(shadow.element(h), z, Side::Right));
      if (reps.insert(rep).second)
        ordered.push_back(rep);
    }
    // Shadow indices are already in ShortLex order.
    std::sort(ordered.begin(), ordered.end());
    for (auto rep : ordered) {
      _entries.push_back(Entry{ParabolicHandle(shadow.element(rep), z),
                               shadow.conjugate(rep, standard)});
      auto [it, fresh] = _by_set.emplace(_entries.back().elements, _entries.size() - 1);
      if (!fresh && _entries[it->second].handle.conjugator().length() > shadow.length(rep))
        it->second = _entries.size() - 1;
    }
  }
}

ElementSet ParabolicCatalog::elements(const ParabolicHandle &p) const
{
  if (!p.base().subset_of(_shadow->generators()))
    throw Error(ErrorCode::NotInGroup, "handle base lies outside the ambient group");
  return _shadow->conjugate(_shadow->index_of(p.conjugator()),
                            _shadow->standard_subgroup(p.base()));
}

std::optional<ParabolicHandle> ParabolicCatalog::find(const ElementSet &set) const
{
  auto it = _by_set.find(set);
  if (it == _by_set.end())
    return std::nullopt;
  return _entries[it->second].handle;
}

Intersection intersect(const ParabolicCatalog &catalog, const ParabolicHandle &p1,
                       const ParabolicHandle &p2)
{
  auto set = intersection(catalog.elements(p1), catalog.elements(p2));
  if (auto h = catalog.find(set))
    return *h;
  NotParabolicWitness witness;
  for (auto i : catalog.shadow().members(set))
    witness.elements.push_back(catalog.shadow().element(i));
  return witness;
}

Intersection intersect(const ParabolicHandle &p1, const ParabolicHandle &p2, std::size_t cap)
{
  FiniteShadow shadow(p1.group(), p1.group().graph().all(), cap);
  ParabolicCatalog catalog(shadow);
  return intersect(catalog, p1, p2);
}

ClosureTrace parabolic_closure(const ParabolicCatalog &ambient,
                               const std::vector<CoxeterElement> &elements)
{
  auto const &shadow = ambient.shadow();
  std::vector<std::size_t> indices;
  for (auto const &b : elements)
    indices.push_back(shadow.index_of(b));

  auto current = ParabolicHandle::standard(shadow.group(), shadow.generators());
  auto current_set = ambient.elements(current);
  ClosureTrace trace{{current}, current};

  for (auto const &entry : ambient.entries()) {
    bool contains_all = std::all_of(indices.begin(), indices.end(),
                                    [&](std::size_t i) { return entry.elements[i]; });
    if (!contains_all)
      continue;
    auto next_set = intersection(current_set, entry.elements);
    if (next_set == current_set)
      continue;
    auto next = ambient.find(next_set);
    if (!next)
      throw Error(ErrorCode::NotParabolic,
                  "intersection " + format_elements(shadow, next_set) + " is not parabolic");
    current = *next;
    current_set = std::move(next_set);
    trace.chain.push_back(current);
  }
  trace.result = current;
  return trace;
}

ClosureTrace parabolic_closure(const CoxeterGroup &group,
                               const std::vector<CoxeterElement> &elements, std::size_t cap)
{
  VertexSet joint;
  for (auto const &b : elements)
    joint = joint | support(b);
  FiniteShadow shadow(group, joint, cap);
  ParabolicCatalog catalog(shadow);
  return parabolic_closure(catalog, elements);
}

bool closure_monotone_check(const CoxeterGroup &group, const std::vector<CoxeterElement> &b1,
                            const std::vector<CoxeterElement> &b2, std::size_t cap)
{
  auto c1 = parabolic_closure(group, b1, cap);
  auto c2 = parabolic_closure(group, b2, cap);
  return subset(c1.result, c2.result);
}

CardinalityReport verify_cardinality_lemma(const CoxeterGroup &group, std::size_t cap)
{
  FiniteShadow shadow(group, group.graph().all(), cap);
  ParabolicCatalog catalog(shadow);
  auto const &entries = catalog.entries();

  CardinalityReport report;
  report.handles = entries.size();
  for (auto const &p1 : entries) {
    for (auto const &p2 : entries) {
      ++report.pairs_checked;
      bool nested = subset(p1.handle, p2.handle);
      bool nested_sets = is_subset(p1.elements, p2.elements);
      if (nested != nested_sets) {
        report.counterexamples.push_back("subset criterion disagrees with element sets for " +
                                         p1.handle.to_string() + " and " + p2.handle.to_string());
        continue;
      }
      if (!nested)
        continue;
      ++report.nested_pairs;
      auto n1 = p1.handle.base().size();
      auto n2 = p2.handle.base().size();
      if (n1 > n2)
        report.counterexamples.push_back(p1.handle.to_string() + " ⊆ " + p2.handle.to_string() +
                                         " but the base shrinks");
      else if (n1 == n2 && p1.elements != p2.elements)
        report.counterexamples.push_back(p1.handle.to_string() + " ⊊ " + p2.handle.to_string() +
                                         " with equal base cardinality");
    }
  }
  return report;
}

std::string_view to_string(Property property)
{
  switch (property) {
    case Property::Int: return "int";
    case Property::IntPlus: return "int+";
    case Property::IntPlusMinus: return "int+-";
    case Property::IntPlusPlus: return "int++";
  }
  return "unknown";
}

std::optional<Property> parse_property(std::string_view text)
{
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "int")
    return Property::Int;
  if (lower == "int+")
    return Property::IntPlus;
  if (lower == "int+-" || lower == "int+--")
    return Property::IntPlusMinus;
  if (lower == "int++")
    return Property::IntPlusPlus;
  return std::nullopt;
}

std::string PropertyReport::to_json() const
{
  nlohmann::ordered_json j;
  j["property"] = std::string(artk::to_string(property));
  j["graph_hash"] = graph_hash;
  j["pairs_checked"] = pairs_checked;
  j["verdict"] = std::string(artk::to_string(verdict));
  if (counterexample)
    j["counterexample"] = *counterexample;
  j["level"] = "coxeter-shadow";
  return j.dump();
}

namespace {

// Scans all handle pairs of one catalog, with each side optionally restricted
// to free-of-infinity bases. Returns false on the first non-parabolic
// intersection.
bool scan_pairs(const ParabolicCatalog &catalog, bool complete_first, bool complete_second,
                PropertyReport &report)
{
  auto const &graph = catalog.shadow().group().graph();
  auto const &entries = catalog.entries();
  for (auto const &p1 : entries) {
    if (complete_first && !is_free_of_infinity(graph, p1.handle.base()))
      continue;
    for (auto const &p2 : entries) {
      if (complete_second && !is_free_of_infinity(graph, p2.handle.base()))
        continue;
      ++report.pairs_checked;
      auto set = intersection(p1.elements, p2.elements);
      if (!catalog.find(set)) {
        report.verdict = Verdict::Fail;
        report.counterexample = p1.handle.to_string() + " ∩ " + p2.handle.to_string() + " = " +
                                format_elements(catalog.shadow(), set) + " is not parabolic";
        return false;
      }
    }
  }
  return true;
}

} // namespace

PropertyReport check_property(const CoxeterGroup &group, Property property, std::size_t cap)
{
  PropertyReport report{property, group.graph().hash(), 0, Verdict::Pass, std::nullopt};

  if (property == Property::Int) {
    for (auto y : enumerate_cliques(group.graph())) {
      FiniteShadow shadow(group, y, cap);
      ParabolicCatalog catalog(shadow);
      if (!scan_pairs(catalog, false, false, report))
        return report;
    }
    return report;
  }

  FiniteShadow shadow(group, group.graph().all(), cap);
  ParabolicCatalog catalog(shadow);
  switch (property) {
    case Property::IntPlus: scan_pairs(catalog, true, true, report); break;
    case Property::IntPlusMinus: scan_pairs(catalog, true, false, report); break;
    default: scan_pairs(catalog, false, false, report); break;
  }
  return report;
}

} // namespace artk
