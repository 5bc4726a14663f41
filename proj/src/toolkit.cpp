#include "artk/toolkit.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <memory>
#include <random>
#include <sstream>

#include <json.hpp>

#include "artk/amalgam.hpp"
#include "artk/artin.hpp"
#include "artk/cube.hpp"
#include "artk/parabolic.hpp"

namespace artk {

using json = nlohmann::ordered_json;

std::optional<OutputFormat> parse_format(std::string_view text)
{
  if (text == "text")
    return OutputFormat::Text;
  if (text == "json")
    return OutputFormat::Json;
  if (text == "dot")
    return OutputFormat::Dot;
  return std::nullopt;
}

std::string RunConfig::option(const std::string &key, const std::string &fallback) const
{
  auto it = options.find(key);
  return it == options.end() ? fallback : it->second;
}

int VerdictReport::exit_code() const
{
  switch (verdict) {
  case Verdict::Pass: return 0;
  case Verdict::Fail: return 1;
  case Verdict::Inconclusive: return 2;
  }
  return 1;
}

std::string VerdictReport::render(OutputFormat format, std::uint64_t seed) const
{
  if (format == OutputFormat::Dot)
    return output;
  if (format == OutputFormat::Json) {
    json j;
    j["command"] = command;
    j["verdict"] = std::string(to_string(verdict));
    j["seed"] = seed;
    j["counterexamples"] = counterexamples;
    j["notes"] = notes;
    auto parsed = json::parse(output, nullptr, false);
    j["result"] = parsed.is_discarded() ? json(output) : parsed;
    if (seconds)
      j["seconds"] = *seconds;
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << output;
  if (!output.empty() && output.back() != '\n')
    out << '\n';
  bool verbose = command.rfind("verify", 0) == 0 || verdict != Verdict::Pass;
  if (verbose) {
    out << "verdict: " << to_string(verdict) << '\n';
    out << "seed: " << seed << '\n';
    for (auto const &c : counterexamples)
      out << "counterexample: " << c << '\n';
    for (auto const &n : notes)
      out << "note: " << n << '\n';
  }
  if (seconds)
    out << "seconds: " << *seconds << '\n';
  return out.str();
}

namespace {

std::vector<VertexSet> all_subsets(VertexSet s)
{
  std::vector<VertexSet> out;
  auto bits = s.bits();
  for (std::uint64_t m = bits;; m = (m - 1) & bits) {
    out.emplace_back(m);
    if (m == 0)
      break;
  }
  std::sort(out.begin(), out.end(), VertexSet::shortlex_less);
  return out;
}

std::string triple(const CoxeterElement &g, const LabeledGraph &graph, VertexSet x, VertexSet y)
{
  return "g=" + g.to_string() + " X=" + format_subset(graph, x) + " Y=" + format_subset(graph, y);
}

// Suite bodies fill counterexamples and notes; CapExceeded propagates.
struct SuiteResult {
  std::vector<std::string> counterexamples;
  std::vector<std::string> notes;
};

/// One braid move at a random applicable position, or nullopt.
std::optional<Word> random_braid_move(const LabeledGraph &g, const Word &w, std::mt19937_64 &rng)
{
  std::vector<std::pair<std::size_t, std::pair<Vertex, Vertex>>> sites;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    auto a = w[i], b = w[i + 1];
    if (a == b)
      continue;
    auto m = g.label(a, b);
    if (m == 0 || i + m > w.size())
      continue;
    bool alternating = true;
    for (std::size_t k = 0; k < m; ++k)
      alternating = alternating && w[i + k] == (k % 2 == 0 ? a : b);
    if (alternating)
      sites.push_back({i, {a, b}});
  }
  if (sites.empty())
    return std::nullopt;
  auto [i, ab] = sites[std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(rng)];
  Word out = w;
  auto m = g.label(ab.first, ab.second);
  for (std::size_t k = 0; k < m; ++k)
    out[i + k] = k % 2 == 0 ? ab.second : ab.first;
  return out;
}

SuiteResult suite_word_problem(const CoxeterGroup &group, const RunConfig &config)
{
  SuiteResult r;
  auto const &graph = group.graph();
  std::mt19937_64 rng(config.seed);
  std::size_t samples = std::stoul(config.option("samples", "10000"));
  std::size_t max_len = std::stoul(config.option("word-length", "12"));
  if (graph.size() > 0) {
    std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
    std::uniform_int_distribution<int> letter_dist(0, static_cast<int>(graph.size()) - 1);
    for (std::size_t n = 0; n < samples && r.counterexamples.size() < 10; ++n) {
      Word w(len_dist(rng));
      for (auto &x : w)
        x = static_cast<Vertex>(letter_dist(rng));
      auto e = group.reduce(w);
      if (group.reduce(e.word()) != e)
        r.counterexamples.push_back("reduce not idempotent on " + group.format(w));
      // Braid moves and inserted squares leave the element unchanged.
      Word moved = w;
      for (int k = 0; k < 3; ++k)
        if (auto next = random_braid_move(graph, moved, rng))
          moved = *next;
      auto pos = std::uniform_int_distribution<std::size_t>(0, moved.size())(rng);
      auto s = static_cast<Vertex>(letter_dist(rng));
      moved.insert(moved.begin() + static_cast<std::ptrdiff_t>(pos), {s, s});
      if (group.reduce(moved) != e)
        r.counterexamples.push_back("reduce differs on braid-equivalent words " + group.format(w) +
                                    " and " + group.format(moved));
    }
  }

  if (!is_finite(group, graph.all())) {
    r.notes.push_back("W is infinite: " + std::to_string(samples) +
                      " sampled words, no element enumeration");
    return r;
  }
  FiniteShadow shadow(group);
  std::size_t top = 0, count_top = 0;
  for (auto const &e : shadow.elements()) {
    if (group.reduce(e.word()) != e)
      r.counterexamples.push_back("canonical form not fixed by reduce: " + e.to_string());
    if (e.length() > top) {
      top = e.length();
      count_top = 0;
    }
    if (e.length() == top)
      ++count_top;
  }
  if (count_top != 1)
    r.counterexamples.push_back("longest element is not unique (" + std::to_string(count_top) +
                                " of length " + std::to_string(top) + ")");
  r.notes.push_back("order " + std::to_string(shadow.order()) + ", longest length " +
                    std::to_string(top) + ", " + std::to_string(samples) + " sampled words");
  return r;
}

ElementSet double_coset(const FiniteShadow &shadow, std::size_t g, VertexSet x, VertexSet y)
{
  auto set = shadow.empty_set();
  std::vector<std::size_t> stack{g};
  set[g] = true;
  while (!stack.empty()) {
    auto i = stack.back();
    stack.pop_back();
    for (auto s : x.members())
      if (auto j = shadow.left(s, i); !set[j]) {
        set[j] = true;
        stack.push_back(j);
      }
    for (auto s : y.members())
      if (auto j = shadow.right(i, s); !set[j]) {
        set[j] = true;
        stack.push_back(j);
      }
  }
  return set;
}

SuiteResult suite_double_coset(const CoxeterGroup &group, const RunConfig &)
{
  SuiteResult r;
  FiniteShadow shadow(group);
  auto subsets = all_subsets(group.graph().all());
  std::size_t checked = 0;
  for (std::size_t gi = 0; gi < shadow.order(); ++gi)
    for (auto x : subsets)
      for (auto y : subsets) {
        ++checked;
        auto const &g = shadow.element(gi);
        auto members = shadow.members(double_coset(shadow, gi, x, y));
        std::size_t best = shadow.length(members.front());
        for (auto i : members)
          best = std::min(best, shadow.length(i));
        std::size_t at_best = 0, minimum = 0;
        for (auto i : members)
          if (shadow.length(i) == best) {
            ++at_best;
            minimum = i;
          }
        auto d = min_double_coset(g, x, y);
        std::string where = triple(g, group.graph(), x, y);
        if (at_best != 1)
          r.counterexamples.push_back("double coset minimum not unique: " + where);
        if (d.g0 != shadow.element(minimum))
          r.counterexamples.push_back("wrong minimum " + d.g0.to_string() + ": " + where);
        if (!in_standard_parabolic(d.h1, x) || !in_standard_parabolic(d.h2, y) ||
            multiply(multiply(d.h1, d.g0), d.h2) != g)
          r.counterexamples.push_back("bad factorization: " + where);
        if (d.h1.length() + d.g0.length() + d.h2.length() != g.length())
          r.counterexamples.push_back("lengths not additive: " + where);
      }
  r.notes.push_back(std::to_string(checked) + " triples (g, X, Y)");
  return r;
}

SuiteResult suite_lift(const CoxeterGroup &group, const RunConfig &config)
{
  SuiteResult r;
  auto const &graph = group.graph();
  FiniteShadow shadow(group);
  auto subsets = all_subsets(graph.all());
  std::vector<ElementSet> standard;
  for (auto s : subsets)
    standard.push_back(shadow.standard_subgroup(s));
  std::size_t contained_count = 0, checked = 0;
  for (std::size_t gi = 0; gi < shadow.order(); ++gi)
    for (std::size_t xi = 0; xi < subsets.size(); ++xi)
      for (std::size_t yi = 0; yi < subsets.size(); ++yi) {
        ++checked;
        auto const &g = shadow.element(gi);
        auto x = subsets[xi], y = subsets[yi];
        auto image = shadow.conjugate(gi, standard[xi]);
        bool contained = true;
        for (std::size_t i = 0; i < image.size(); ++i)
          contained = contained && (!image[i] || standard[yi][i]);
        std::string where = triple(g, graph, x, y);
        std::optional<LiftResult> lift;
        try {
          lift = lift_conjugator(g, x, y, config.caps.braid);
        } catch (const CapExceeded &) {
          throw;
        } catch (const Error &e) {
          if (e.code() != ErrorCode::NotConjugatedInto)
            throw;
        }
        if (!contained) {
          if (lift)
            r.counterexamples.push_back("lift succeeded although not conjugated into: " + where);
          continue;
        }
        ++contained_count;
        if (!lift) {
          r.counterexamples.push_back("lift failed although conjugated into: " + where);
          continue;
        }
        if (theta(group, lift->conjugator_word) != g)
          r.counterexamples.push_back("theta(iota(g)) != g: " + where);
        auto g0 = letters(lift->reduced_conjugator);
        if (lift->generator_map.size() != x.size() || lift->certificates.size() != x.size())
          r.counterexamples.push_back("generator map not total: " + where);
        for (std::size_t k = 0; k < lift->generator_map.size() && k < lift->certificates.size(); ++k) {
          auto [v, fv] = lift->generator_map[k];
          if (!x.contains(v) || !y.contains(fv)) {
            r.counterexamples.push_back("f_v outside Y: " + where);
            continue;
          }
          Word source = g0;
          source.push_back(v);
          Word target{fv};
          target.insert(target.end(), g0.begin(), g0.end());
          try {
            if (replay(graph, source, lift->certificates[k]) != target)
              r.counterexamples.push_back("certificate ends elsewhere: " + where);
          } catch (const Error &) {
            r.counterexamples.push_back("certificate does not replay: " + where);
          }
        }
        if (lift->bijective != (x.size() == y.size()))
          r.counterexamples.push_back("bijective flag wrong: " + where);
      }
  r.notes.push_back(std::to_string(checked) + " triples, " + std::to_string(contained_count) +
                    " with gW_Xg^-1 in W_Y");
  return r;
}

SuiteResult suite_cardinality(const CoxeterGroup &group, const RunConfig &config)
{
  auto report = verify_cardinality_lemma(group, config.caps.enumeration);
  SuiteResult r{report.counterexamples, {}};
  r.notes.push_back(std::to_string(report.handles) + " handles, " +
                    std::to_string(report.nested_pairs) + " nested pairs");
  return r;
}

bool subset_of(const ElementSet &a, const ElementSet &b)
{
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i])
      return false;
  return true;
}

SuiteResult suite_closure(const CoxeterGroup &group, const RunConfig &config)
{
  SuiteResult r;
  FiniteShadow shadow(group);
  ParabolicCatalog catalog(shadow);
  auto n = shadow.order();
  std::vector<std::vector<std::size_t>> sets{{}};
  for (std::size_t i = 0; i < n; ++i)
    sets.push_back({i});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      sets.push_back({i, j});

  for (auto const &b : sets) {
    std::vector<CoxeterElement> elems;
    std::string where = "B={";
    for (auto i : b) {
      elems.push_back(shadow.element(i));
      where += (where.size() > 3 ? "," : "") + shadow.element(i).to_string();
    }
    where += "}";

    // Brute force: the containing handle whose element set lies in all others.
    std::vector<const ElementSet *> containing;
    for (auto const &entry : catalog.entries())
      if (std::all_of(b.begin(), b.end(), [&](std::size_t i) { return entry.elements[i]; }))
        containing.push_back(&entry.elements);
    const ElementSet *minimum = nullptr;
    for (auto const *c : containing)
      if (std::all_of(containing.begin(), containing.end(),
                      [&](const ElementSet *o) { return subset_of(*c, *o); })) {
        minimum = c;
        break;
      }
    if (!minimum) {
      r.counterexamples.push_back("no minimal parabolic subgroup contains " + where);
      continue;
    }

    auto trace = parabolic_closure(catalog, elems);
    if (catalog.elements(trace.result) != *minimum)
      r.counterexamples.push_back("closure " + trace.result.to_string() + " is not minimal for " + where);
    for (std::size_t k = 1; k < trace.chain.size(); ++k) {
      auto prev = catalog.elements(trace.chain[k - 1]);
      auto next = catalog.elements(trace.chain[k]);
      if (!subset_of(next, prev) || next == prev)
        r.counterexamples.push_back("chain not strictly descending for " + where);
    }
    auto ambient = parabolic_closure(group, elems, config.caps.enumeration);
    if (catalog.elements(ambient.result) != *minimum)
      r.counterexamples.push_back("closure inside the support disagrees for " + where);

    if (b.size() == 2)
      for (auto i : b)
        if (!closure_monotone_check(group, {shadow.element(i)}, elems, config.caps.enumeration))
          r.counterexamples.push_back("closure not monotone for {" + shadow.element(i).to_string() +
                                      "} in " + where);
  }
  r.notes.push_back(std::to_string(sets.size()) + " sets B with |B| <= 2");
  return r;
}

SuiteResult suite_intersection(const CoxeterGroup &group, const RunConfig &config)
{
  SuiteResult r;
  std::vector<Property> properties;
  if (auto p = config.option("property"); !p.empty()) {
    auto parsed = parse_property(p);
    if (!parsed)
      throw UsageError("unknown property '" + p + "'");
    properties.push_back(*parsed);
  } else {
    properties.push_back(Property::Int);
    bool finite = true;
    try {
      cayley_ball(group, std::nullopt, config.caps.enumeration);
    } catch (const CapExceeded &) {
      finite = false;
    }
    if (finite)
      properties.push_back(Property::IntPlusPlus);
    else
      r.notes.push_back("int++ not run: W exceeds the enumeration cap");
  }
  for (auto p : properties) {
    auto report = check_property(group, p, config.caps.enumeration);
    if (report.verdict == Verdict::Fail)
      r.counterexamples.push_back(std::string(to_string(p)) + ": " +
                                  report.counterexample.value_or("unspecified"));
    r.notes.push_back(std::string(to_string(p)) + ": " + std::to_string(report.pairs_checked) +
                      " pairs");
  }
  return r;
}

SuiteResult suite_flag_links(const CoxeterGroup &group, const RunConfig &config)
{
  SuiteResult r;
  auto domain = flag_link_check(fundamental_domain(group), config.caps.enumeration);
  for (auto const &v : domain.violations)
    r.counterexamples.push_back("domain " + v);
  auto radius = config.radius.value_or(2);
  auto ball = flag_link_check(shadow_ball(group, radius, config.caps.enumeration),
                              config.caps.enumeration);
  for (auto const &v : ball.violations)
    r.counterexamples.push_back("ball " + v);
  r.notes.push_back("domain: " + std::to_string(domain.vertices_checked) + " vertices; ball radius " +
                    std::to_string(radius) + ": " + std::to_string(ball.vertices_checked) +
                    " checked, " + std::to_string(ball.vertices_skipped) + " with partial links");
  return r;
}

using SuiteFn = SuiteResult (*)(const CoxeterGroup &, const RunConfig &);

const std::vector<std::pair<std::string, SuiteFn>> &suites()
{
  static const std::vector<std::pair<std::string, SuiteFn>> table{
      {"word-problem", suite_word_problem}, {"double-coset", suite_double_coset},
      {"lift", suite_lift},                 {"cardinality", suite_cardinality},
      {"closure", suite_closure},           {"intersection", suite_intersection},
      {"flag-links", suite_flag_links},
  };
  return table;
}

} // namespace

std::vector<std::string> suite_names()
{
  std::vector<std::string> out;
  for (auto const &[name, fn] : suites())
    out.push_back(name);
  out.push_back("all");
  return out;
}

VerdictReport verify_suite(const CoxeterGroup &group, std::string_view suite, const RunConfig &config)
{
  VerdictReport report;
  report.command = "verify --suite=" + std::string(suite);
  bool any = false, inconclusive = false;
  json summary = json::object();
  for (auto const &[name, fn] : suites()) {
    if (suite != "all" && suite != name)
      continue;
    any = true;
    std::string status;
    try {
      auto r = fn(group, config);
      for (auto const &c : r.counterexamples)
        report.counterexamples.push_back(name + ": " + c);
      for (auto const &n : r.notes)
        report.notes.push_back(name + ": " + n);
      status = r.counterexamples.empty() ? "pass" : "fail";
    } catch (const CapExceeded &e) {
      inconclusive = true;
      report.notes.push_back(name + ": " + e.what());
      status = "inconclusive";
    }
    summary[name] = status;
  }
  if (!any)
    throw UsageError("unknown suite '" + std::string(suite) + "'");
  report.verdict = !report.counterexamples.empty() ? Verdict::Fail
                   : inconclusive                  ? Verdict::Inconclusive
                                                   : Verdict::Pass;
  if (config.format == OutputFormat::Json) {
    report.output = summary.dump(2);
  } else {
    std::ostringstream out;
    for (auto const &[name, status] : summary.items())
      out << name << ": " << status.get<std::string>() << '\n';
    report.output = out.str();
  }
  return report;
}

// ---------------------------------------------------------------------------
// Command dispatch.

namespace {

const std::string &arg(const RunConfig &config, std::size_t i, const char *what)
{
  if (i >= config.arguments.size())
    throw UsageError(std::string("missing argument: ") + what);
  return config.arguments[i];
}

std::string trim(std::string s)
{
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

/// `g|X`, e.g. `a b|{a,c}`.
ParabolicHandle parse_handle(const CoxeterGroup &group, const std::string &text)
{
  auto bar = text.find('|');
  if (bar == std::string::npos)
    throw UsageError("handle '" + text + "' must look like 'g|{X}'");
  return ParabolicHandle(group.element(trim(text.substr(0, bar))),
                         parse_subset(group.graph(), text.substr(bar + 1)));
}

VertexSet subset_option(const RunConfig &config, const CoxeterGroup &group, const std::string &key)
{
  auto it = config.options.find(key);
  if (it == config.options.end())
    throw UsageError("missing option --" + key);
  return parse_subset(group.graph(), it->second);
}

/// `--pivot s,t` keeps the order: I = V - {s}, J = V - {t}.
std::pair<Vertex, Vertex> pivot_option(const RunConfig &config, const CoxeterGroup &group)
{
  auto text = config.option("pivot");
  std::vector<Vertex> vs;
  std::string token;
  for (char c : text + ",") {
    if (c == ',' || c == ' ' || c == '{' || c == '}') {
      if (!token.empty())
        vs.push_back(group.graph().vertex(token));
      token.clear();
    } else {
      token += c;
    }
  }
  if (vs.size() != 2 || vs[0] == vs[1])
    throw UsageError("--pivot needs two distinct vertices s,t");
  return {vs[0], vs[1]};
}

json names(const LabeledGraph &g, VertexSet set)
{
  auto out = json::array();
  for (auto v : set.members())
    out.push_back(g.name(v));
  return out;
}

std::string graph_json(const LabeledGraph &g)
{
  json j;
  j["vertices"] = g.names();
  auto es = json::array();
  for (auto const &e : g.edges())
    es.push_back({g.name(e.a), g.name(e.b), e.label});
  j["edges"] = es;
  j["hash"] = g.hash();
  return j.dump(2);
}

std::string lines(const std::vector<std::string> &items)
{
  std::string out;
  for (auto const &s : items)
    out += s + "\n";
  return out;
}

void run_graph(const RunConfig &config, const CoxeterGroup &group, VerdictReport &report)
{
  auto const &g = group.graph();
  auto sub = config.subcommand.empty() ? std::string("show") : config.subcommand;
  bool js = config.format == OutputFormat::Json;
  if (sub == "show") {
    report.output = js ? graph_json(g) : g.to_text();
  } else if (sub == "hash") {
    report.output = js ? json{{"hash", g.hash()}}.dump(2) : g.hash();
  } else if (sub == "cliques") {
    std::vector<std::string> out;
    for (auto c : enumerate_cliques(g))
      out.push_back(format_subset(g, c));
    report.output = js ? json(out).dump(2) : lines(out);
  } else if (sub == "star" || sub == "link") {
    auto v = g.vertex(arg(config, 0, "vertex"));
    auto set = sub == "star" ? star(g, v) : link(g, v);
    report.output = js ? names(g, set).dump(2) : format_subset(g, set);
  } else if (sub == "subgraph") {
    auto sg = induced_subgraph(g, parse_subset(g, arg(config, 0, "vertex subset")));
    report.output = js ? graph_json(sg) : sg.to_text();
  } else if (sub == "nonedges") {
    std::vector<std::string> out;
    for (auto [a, b] : nonedge_pairs(g))
      out.push_back("{" + g.name(a) + "," + g.name(b) + "}");
    report.output = js ? json(out).dump(2) : lines(out);
  } else if (sub == "free-of-infinity") {
    auto set = config.arguments.empty() ? g.all() : parse_subset(g, config.arguments[0]);
    bool free = is_free_of_infinity(g, set);
    report.output = js ? json{{"free_of_infinity", free}}.dump(2) : (free ? "true" : "false");
  } else {
    throw UsageError("unknown graph subcommand '" + sub + "'");
  }
}

void run_coxeter(const RunConfig &config, const CoxeterGroup &group, VerdictReport &report)
{
  auto const &sub = config.subcommand;
  bool js = config.format == OutputFormat::Json;
  if (sub == "reduce" || sub == "length") {
    auto e = group.element(arg(config, 0, "word"));
    if (sub == "reduce")
      report.output = js ? json{{"canonical", e.to_string()}, {"length", e.length()}}.dump(2)
                         : e.to_string();
    else
      report.output = js ? json{{"length", e.length()}}.dump(2) : std::to_string(e.length());
  } else if (sub == "equal") {
    bool same = group.element(arg(config, 0, "word")) == group.element(arg(config, 1, "word"));
    report.output = js ? json{{"equal", same}}.dump(2) : (same ? "true" : "false");
  } else if (sub == "coset") {
    auto e = group.element(arg(config, 0, "word"));
    auto side = config.option("side", "right") == "left" ? Side::Left : Side::Right;
    auto rep = min_coset_rep(e, subset_option(config, group, "subset"), side);
    report.output = js ? json{{"rep", rep.to_string()}, {"length", rep.length()}}.dump(2)
                       : rep.to_string();
  } else if (sub == "double-coset") {
    auto e = group.element(arg(config, 0, "word"));
    auto d = min_double_coset(e, subset_option(config, group, "left"),
                              subset_option(config, group, "right"));
    if (js)
      report.output = json{{"g0", d.g0.to_string()}, {"h1", d.h1.to_string()},
                           {"h2", d.h2.to_string()}}.dump(2);
    else
      report.output = "g0: " + d.g0.to_string() + "\nh1: " + d.h1.to_string() +
                      "\nh2: " + d.h2.to_string() + "\n";
  } else if (sub == "enumerate") {
    std::optional<VertexSet> gens;
    if (config.options.count("subset"))
      gens = subset_option(config, group, "subset");
    auto ball = cayley_ball(group, config.radius, config.caps.enumeration, gens);
    std::vector<std::string> out;
    for (auto const &e : ball.elements)
      out.push_back(e.to_string());
    if (js)
      report.output = json{{"order", ball.elements.size()}, {"exhausted", ball.exhausted},
                           {"layer_sizes", ball.layer_sizes}, {"elements", out}}.dump(2);
    else
      report.output = "order: " + std::to_string(out.size()) +
                      (ball.exhausted ? "" : " (truncated at radius)") + "\n" + lines(out);
  } else {
    throw UsageError("unknown coxeter subcommand '" + sub + "'");
  }
}

void run_artin(const RunConfig &config, const CoxeterGroup &group, VerdictReport &report)
{
  auto const &g = group.graph();
  auto const &sub = config.subcommand;
  bool js = config.format == OutputFormat::Json;
  if (sub == "project") {
    auto e = theta(group, parse_artin_word(g, arg(config, 0, "word")));
    report.output = js ? json{{"theta", e.to_string()}}.dump(2) : e.to_string();
  } else if (sub == "section") {
    auto w = format_artin_word(g, iota(group.element(arg(config, 0, "word"))));
    report.output = js ? json{{"iota", w}}.dump(2) : w;
  } else if (sub == "equal") {
    auto p = parse_artin_word(g, arg(config, 0, "word"));
    auto q = parse_artin_word(g, arg(config, 1, "word"));
    if (!is_positive(p) || !is_positive(q))
      throw UsageError("artin equal compares positive words only");
    auto cmp = positive_braid_equal(group, p, q, config.caps.braid);
    report.verdict = cmp.verdict == BraidVerdict::Equal      ? Verdict::Pass
                     : cmp.verdict == BraidVerdict::NotEqual ? Verdict::Fail
                                                             : Verdict::Inconclusive;
    if (cmp.verdict == BraidVerdict::NotEqual)
      report.counterexamples.push_back("no braid path between the words");
    if (cmp.verdict == BraidVerdict::Inconclusive)
      report.notes.push_back("braid class exhausted on a non-reduced positive word");
    json j{{"verdict", std::string(to_string(cmp.verdict))}};
    if (cmp.certificate)
      j["certificate"] = json::parse(certificate_json(g, *cmp.certificate));
    report.output = js ? j.dump(2)
                       : std::string(to_string(cmp.verdict)) +
                             (cmp.certificate ? "\n" + certificate_json(g, *cmp.certificate) : "");
  } else if (sub == "replay") {
    auto word = letters(parse_artin_word(g, arg(config, 0, "word")));
    std::ifstream in(arg(config, 1, "certificate file"));
    if (!in)
      throw UsageError("cannot read certificate file");
    std::stringstream buffer;
    buffer << in.rdbuf();
    auto end = replay(g, word, parse_certificate_json(g, buffer.str()));
    auto text = format_artin_word(g, positive_word(end));
    report.output = js ? json{{"result", text}}.dump(2) : text;
  } else if (sub == "lift") {
    auto e = group.element(arg(config, 0, "conjugator"));
    auto x = subset_option(config, group, "x");
    auto y = subset_option(config, group, "y");
    try {
      auto lift = lift_conjugator(e, x, y, config.caps.braid);
      json j;
      j["iota_g"] = format_artin_word(g, lift.conjugator_word);
      j["iota_g0"] = format_artin_word(g, lift.reduced_conjugator);
      j["h1"] = lift.decomposition.h1.to_string();
      j["h2"] = lift.decomposition.h2.to_string();
      auto map = json::array();
      for (std::size_t k = 0; k < lift.generator_map.size(); ++k)
        map.push_back({{"v", g.name(lift.generator_map[k].first)},
                       {"f_v", g.name(lift.generator_map[k].second)},
                       {"certificate", json::parse(certificate_json(g, lift.certificates[k]))}});
      j["generator_map"] = map;
      j["bijective"] = lift.bijective;
      if (js) {
        report.output = j.dump(2);
      } else {
        std::ostringstream out;
        out << "iota(g0): " << j["iota_g0"].get<std::string>() << '\n';
        for (auto const &[v, f] : lift.generator_map)
          out << g.name(v) << " -> " << g.name(f) << '\n';
        out << "bijective: " << (lift.bijective ? "true" : "false") << '\n';
        report.output = out.str();
      }
    } catch (const Error &err) {
      if (err.code() != ErrorCode::NotConjugatedInto)
        throw;
      report.verdict = Verdict::Fail;
      report.counterexamples.push_back(err.what());
    }
  } else {
    throw UsageError("unknown artin subcommand '" + sub + "'");
  }
}

void run_parabolic(const RunConfig &config, const CoxeterGroup &group, VerdictReport &report)
{
  auto const &sub = config.subcommand;
  bool js = config.format == OutputFormat::Json;
  auto cap = config.caps.enumeration;
  auto boolean = [&](const char *key, bool value) {
    report.output = js ? json{{key, value}}.dump(2) : (value ? "true" : "false");
  };
  if (sub == "contains") {
    boolean("contains", contains_element(parse_handle(group, arg(config, 0, "handle")),
                                         group.element(arg(config, 1, "element"))));
  } else if (sub == "subset") {
    boolean("subset", subset(parse_handle(group, arg(config, 0, "handle")),
                             parse_handle(group, arg(config, 1, "handle"))));
  } else if (sub == "intersect") {
    auto result = intersect(parse_handle(group, arg(config, 0, "handle")),
                            parse_handle(group, arg(config, 1, "handle")), cap);
    if (auto *h = std::get_if<ParabolicHandle>(&result)) {
      report.output = js ? json{{"handle", h->to_string()}}.dump(2) : h->to_string();
    } else {
      auto const &w = std::get<NotParabolicWitness>(result);
      std::vector<std::string> elems;
      for (auto const &e : w.elements)
        elems.push_back(e.to_string());
      report.verdict = Verdict::Fail;
      report.counterexamples.push_back("intersection {" + [&] {
        std::string s;
        for (auto const &e : elems)
          s += (s.empty() ? "" : ",") + e;
        return s;
      }() + "} is not parabolic");
      report.output = js ? json{{"not_parabolic", elems}}.dump(2) : "not parabolic";
    }
  } else if (sub == "closure") {
    std::vector<CoxeterElement> elems;
    for (auto const &a : config.arguments)
      elems.push_back(group.element(a));
    auto trace = parabolic_closure(group, elems, cap);
    std::vector<std::string> chain;
    for (auto const &h : trace.chain)
      chain.push_back(h.to_string());
    report.output = js ? json{{"closure", trace.result.to_string()}, {"chain", chain}}.dump(2)
                       : "closure: " + trace.result.to_string() + "\n" + lines(chain);
  } else if (sub == "property") {
    auto p = parse_property(config.option("property", "int"));
    if (!p)
      throw UsageError("unknown property '" + config.option("property") + "'");
    auto r = check_property(group, *p, cap);
    report.verdict = r.verdict;
    if (r.counterexample)
      report.counterexamples.push_back(*r.counterexample);
    report.output = js ? r.to_json()
                       : std::string(to_string(*p)) + ": " + std::string(to_string(r.verdict)) +
                             " (" + std::to_string(r.pairs_checked) + " pairs)";
  } else if (sub == "cardinality") {
    auto r = verify_cardinality_lemma(group, cap);
    report.verdict = r.verdict();
    report.counterexamples = r.counterexamples;
    report.output = js ? json{{"handles", r.handles}, {"pairs_checked", r.pairs_checked},
                              {"nested_pairs", r.nested_pairs}}.dump(2)
                       : std::to_string(r.handles) + " handles, " +
                             std::to_string(r.nested_pairs) + " nested pairs";
  } else if (sub == "catalog") {
    FiniteShadow shadow(group, group.graph().all(), cap);
    ParabolicCatalog catalog(shadow);
    std::vector<std::string> out;
    for (auto const &e : catalog.entries())
      out.push_back(e.handle.to_string());
    report.output = js ? json(out).dump(2) : lines(out);
  } else {
    throw UsageError("unknown parabolic subcommand '" + sub + "'");
  }
}

std::string tree_summary(const TreeBall &ball)
{
  std::ostringstream out;
  out << "vertices: " << ball.vertices().size() << "\nedges: " << ball.edges().size()
      << "\ntree: " << (ball.is_tree() ? "yes" : "no")
      << "\ncomplete neighborhoods: " << (ball.complete_neighborhoods() ? "yes" : "no") << '\n';
  for (std::size_t i = 0; i < ball.vertices().size(); ++i)
    out << ball.label(i) << "  depth " << ball.vertices()[i].depth << "  degree "
        << ball.degree(i) << '\n';
  return out.str();
}

std::string render_decomposition(const RunConfig &config, const LabeledGraph &g)
{
  auto name = config.option("strategy", "star-link");
  auto strategy = parse_strategy(name);
  if (!strategy)
    throw UsageError("unknown strategy '" + name + "'");
  auto tree = decompose(g, *strategy);
  return config.format == OutputFormat::Json ? decomposition_json(g, tree) : render(g, tree) + "\n";
}

void tree_output(const RunConfig &config, const TreeBall &ball, VerdictReport &report,
                 const std::vector<std::size_t> &highlight, const std::string &text)
{
  if (config.format == OutputFormat::Dot)
    report.output = ball.to_dot(highlight);
  else if (config.format == OutputFormat::Json)
    report.output = ball.to_json();
  else
    report.output = text;
  if (!ball.is_tree()) {
    report.verdict = Verdict::Fail;
    report.counterexamples.push_back("ball is not a tree");
  }
  if (!ball.complete_neighborhoods())
    report.notes.push_back("vertex neighborhoods truncated by --branch");
}

std::optional<std::size_t> optional_size(const RunConfig &config, const std::string &key)
{
  auto v = config.option(key);
  if (v.empty())
    return std::nullopt;
  return std::stoul(v);
}

void run_cyclic_tree(const RunConfig &config, VerdictReport &report)
{
  auto orders = config.option("orders", "4,6");
  auto comma = orders.find(',');
  if (comma == std::string::npos)
    throw UsageError("--orders needs two orders, e.g. 4,6");
  std::size_t p = std::stoul(orders.substr(0, comma));
  std::size_t q = std::stoul(orders.substr(comma + 1));
  std::size_t k = std::stoul(config.option("common", "1"));
  if (p == 0 || q == 0 || k == 0 || p % k != 0 || q % k != 0)
    throw UsageError("--common must divide both orders");
  auto common = CommonSubgroup::trivial();
  if (k > 1) {
    common.group = FiniteGroup::cyclic(k, "c");
    common.into_first.clear();
    common.into_second.clear();
    for (std::size_t i = 0; i < k; ++i) {
      common.into_first.push_back(i * (p / k));
      common.into_second.push_back(i * (q / k));
    }
  }
  auto ball = finite_amalgam_ball(FiniteGroup::cyclic(p, "a"), FiniteGroup::cyclic(q, "b"), common,
                                  config.radius.value_or(2), config.caps.enumeration);
  tree_output(config, ball, report, {}, tree_summary(ball));
}

void run_tree(const RunConfig &config, const CoxeterGroup *group, VerdictReport &report)
{
  auto const &sub = config.subcommand;
  if (sub == "cyclic")
    return run_cyclic_tree(config, report);
  if (!group)
    throw UsageError("tree " + sub + " needs a graph file");
  if (sub == "decompose") {
    report.output = render_decomposition(config, group->graph());
    return;
  }
  auto [s, t] = pivot_option(config, *group);
  auto ball = bass_serre_ball(*group, s, t, config.radius.value_or(2), config.caps.enumeration,
                              optional_size(config, "branch"));
  if (sub == "ball") {
    tree_output(config, ball, report, {}, tree_summary(ball));
  } else if (sub == "fix") {
    auto w = ball.action().parse(arg(config, 0, "element"));
    auto fs = fixed_set_in_ball(ball, w);
    std::ostringstream out;
    out << "fixed vertices: " << fs.vertices.size() << "\nfixed edges: " << fs.edges.size()
        << "\nconnected: " << (fs.connected ? "yes" : "no") << '\n';
    for (auto v : fs.vertices)
      out << ball.label(v) << '\n';
    if (config.format == OutputFormat::Json) {
      json j;
      std::vector<std::string> labels;
      for (auto v : fs.vertices)
        labels.push_back(ball.label(v));
      j["fixed_vertices"] = labels;
      j["fixed_edges"] = fs.edges.size();
      j["connected"] = fs.connected;
      j["inversions"] = fs.inversions;
      report.output = j.dump(2);
    } else {
      tree_output(config, ball, report, fs.vertices, out.str());
    }
    if (!fs.connected || fs.inversions) {
      report.verdict = Verdict::Fail;
      report.counterexamples.push_back("fixed set is not a subtree without inversions");
    }
  } else if (sub == "common") {
    std::vector<GroupWord> elems;
    for (auto const &a : config.arguments)
      elems.push_back(ball.action().parse(a));
    auto r = common_fixed_vertex(ball, elems);
    json j;
    j["common_vertex"] = r.vertex ? json(ball.label(*r.vertex)) : json(nullptr);
    j["fixed_counts"] = r.fixed_counts;
    j["pairwise_intersect"] = r.pairwise_intersect;
    report.output = config.format == OutputFormat::Json
                        ? j.dump(2)
                        : "common fixed vertex: " + (r.vertex ? ball.label(*r.vertex) : "none in ball");
  } else {
    throw UsageError("unknown tree subcommand '" + sub + "'");
  }
}

void cube_output(const RunConfig &config, const CubeComplexBall &ball, VerdictReport &report,
                 const std::vector<std::size_t> &highlight)
{
  if (config.format == OutputFormat::Dot) {
    report.output = ball.to_dot(highlight);
  } else if (config.format == OutputFormat::Json) {
    report.output = ball.to_json();
  } else {
    std::ostringstream out;
    out << "f-vector:";
    for (auto f : ball.f_vector())
      out << ' ' << f;
    out << '\n';
    for (std::size_t i = 0; i < ball.vertices().size(); ++i)
      out << ball.label(i) << '\n';
    report.output = out.str();
  }
}

void run_cube(const RunConfig &config, const CoxeterGroup &group, VerdictReport &report)
{
  auto const &sub = config.subcommand;
  auto cap = config.caps.enumeration;
  auto ball_for = [&] {
    return config.radius ? shadow_ball(group, *config.radius, cap) : fundamental_domain(group);
  };
  if (sub == "domain") {
    cube_output(config, fundamental_domain(group), report, {});
  } else if (sub == "ball") {
    cube_output(config, shadow_ball(group, config.radius.value_or(2), cap), report, {});
  } else if (sub == "fix") {
    auto w = group.element(arg(config, 0, "element"));
    auto ball = ball_for();
    auto fs = fixed_set(ball, w);
    if (config.format == OutputFormat::Dot) {
      report.output = ball.to_dot(fs.vertices);
      return;
    }
    std::vector<std::string> labels;
    for (auto v : fs.vertices)
      labels.push_back(ball.label(v));
    std::vector<std::size_t> radii;
    for (std::size_t r = 0; r <= config.radius.value_or(0); ++r)
      radii.push_back(r);
    auto growth = fixed_set_growth(group, w, radii, cap);
    if (config.format == OutputFormat::Json) {
      report.output = json{{"fixed_vertices", labels}, {"fixed_cubes", fs.cubes.size()},
                           {"growth", growth}}.dump(2);
    } else {
      std::ostringstream out;
      out << "fixed vertices: " << labels.size() << "\nfixed cubes: " << fs.cubes.size()
          << "\ngrowth:";
      for (auto g : growth)
        out << ' ' << g;
      out << '\n' << lines(labels);
      report.output = out.str();
    }
  } else if (sub == "flagcheck") {
    auto ball = ball_for();
    auto r = flag_link_check(ball, cap);
    report.verdict = r.verdict();
    report.counterexamples = r.violations;
    report.output = config.format == OutputFormat::Json
                        ? json{{"checked", r.vertices_checked}, {"skipped", r.vertices_skipped},
                               {"violations", r.violations}}.dump(2)
                        : "checked " + std::to_string(r.vertices_checked) + " vertices, skipped " +
                              std::to_string(r.vertices_skipped) + " with partial links";
  } else {
    throw UsageError("unknown cube subcommand '" + sub + "'");
  }
}

} // namespace

VerdictReport run(const RunConfig &config)
{
  auto start = std::chrono::steady_clock::now();
  VerdictReport report;
  report.command = config.command + (config.subcommand.empty() ? "" : " " + config.subcommand);

  std::unique_ptr<CoxeterGroup> group;
  if (!config.graph_path.empty())
    group = std::make_unique<CoxeterGroup>(load_graph(config.graph_path), config.caps);
  bool needs_graph = !(config.command == "tree" && config.subcommand == "cyclic");
  if (needs_graph && !group)
    throw UsageError("missing graph file");

  try {
    if (config.command == "graph")
      run_graph(config, *group, report);
    else if (config.command == "coxeter")
      run_coxeter(config, *group, report);
    else if (config.command == "artin")
      run_artin(config, *group, report);
    else if (config.command == "parabolic")
      run_parabolic(config, *group, report);
    else if (config.command == "tree")
      run_tree(config, group.get(), report);
    else if (config.command == "cube")
      run_cube(config, *group, report);
    else if (config.command == "decompose")
      report.output = render_decomposition(config, group->graph());
    else if (config.command == "verify") {
      report = verify_suite(*group, config.option("suite", "all"), config);
    } else
      throw UsageError("unknown command '" + config.command + "'");
  } catch (const CapExceeded &e) {
    report.verdict = Verdict::Inconclusive;
    report.notes.push_back(e.what());
  }
  if (config.timing)
    report.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

} // namespace artk
