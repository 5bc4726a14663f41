#ifndef ARTK_TOOLKIT_HPP
#define ARTK_TOOLKIT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "artk/coxeter.hpp"
#include "artk/error.hpp"

namespace artk {

enum class OutputFormat { Text, Json, Dot };

std::optional<OutputFormat> parse_format(std::string_view text);

struct RunConfig {
  std::string command;                  // graph, coxeter, artin, ...
  std::string subcommand;               // may be empty
  std::string graph_path;               // may be empty for `tree cyclic`
  std::vector<std::string> arguments;   // words, elements, handles
  std::map<std::string, std::string> options;  // --strategy, --pivot, --suite, ...
  Caps caps;
  std::optional<std::size_t> radius;   // per-command default when unset
  OutputFormat format = OutputFormat::Text;
  std::uint64_t seed = 1;
  bool timing = false;

  std::string option(const std::string &key, const std::string &fallback = {}) const;
};

struct VerdictReport {
  std::string command;                   // echo of the invocation
  Verdict verdict = Verdict::Pass;
  std::vector<std::string> counterexamples;
  std::vector<std::string> notes;        // e.g. which cap was hit
  std::string output;                    // primary artifact in the requested format
  std::optional<double> seconds;         // only filled with RunConfig::timing

  int exit_code() const;

  /// The verdict block printed after the artifact (text) or the whole
  /// report (json).
  std::string render(OutputFormat format, std::uint64_t seed) const;
};

/// Usage errors (unknown subcommand, malformed argument) are thrown as
/// UsageError; CapExceeded becomes an inconclusive report.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

VerdictReport run(const RunConfig &config);

/// Suites: word-problem, double-coset, lift, cardinality, closure,
/// intersection, flag-links, all.
VerdictReport verify_suite(const CoxeterGroup &group, std::string_view suite,
                           const RunConfig &config);

std::vector<std::string> suite_names();

} // namespace artk

#endif // ARTK_TOOLKIT_HPP
