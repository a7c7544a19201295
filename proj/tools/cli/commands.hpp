#ifndef LANTERN_TOOLS_COMMANDS_HPP
#define LANTERN_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace lantern::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

inline constexpr std::uint64_t kDefaultSeed = 0x1a27e2d5eedULL;

struct VerifyOptions {
  std::string identity;  // lantern | eq1 | eq2 | lemma-inverse | completed
  std::optional<int> n;
  std::optional<int> m;
  std::string order = "lex";
  int cap = 4;
  int samples = 500;
  std::optional<std::string> a;
  std::optional<std::string> b;
  std::uint64_t seed = kDefaultSeed;
};

struct ExpandOptions {
  std::string word;
  int degree = 2;
  std::optional<int> rank;
  std::optional<int> n;
};

struct InvariantsOptions {
  int genus = 1;
  int power = 1;
  std::string group = "torus";
  bool table = false;
  std::uint64_t term_cap = 0;  // 0: LANTERN_TERM_CAP or the library default
};

struct CongruenceOptions {
  std::string lhs;
  std::string rhs;
  int m = 2;
  int cap = 0;
};

struct CommandResult {
  int exit_code = kExitOk;
  nlohmann::json report;
  std::string text;
};

// Thrown for invalid parameters; maps to kExitUsage.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

CommandResult cmd_verify(const VerifyOptions& opt);
CommandResult cmd_expand(const ExpandOptions& opt);
CommandResult cmd_invariants(const InvariantsOptions& opt);
CommandResult cmd_congruence(const CongruenceOptions& opt);

std::uint64_t resolve_term_cap(std::uint64_t flag_value);

/// Full command line entry point; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lantern::cli

#endif  // LANTERN_TOOLS_COMMANDS_HPP
