#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "lantern/braid.hpp"
#include "lantern/errors.hpp"
#include "lantern/free_group.hpp"
#include "lantern/invariant_theory.hpp"
#include "lantern/series.hpp"
#include "lantern/word_expr.hpp"

namespace lantern::cli {

using nlohmann::json;

namespace {

constexpr int kMaxStrands = 12;
constexpr int kWarnDegree = 8;

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

json degree_json(int d) { return d == kInfiniteDegree ? json(nullptr) : json(d); }

json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

json series_terms_json(const NcSeries& s) {
  json terms = json::array();
  for (const auto& [m, c] : s.terms()) {
    terms.push_back({s.monomial_names(m), integer_json(numerator(c)),
                     integer_json(denominator(c))});
  }
  return terms;
}

std::string render_value(const json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

// Text mode: one "key: value" line per report entry, nested objects
// flattened with dotted keys.
void render_lines(const json& obj, const std::string& prefix, std::string& out) {
  for (const auto& [k, v] : obj.items()) {
    const std::string key = prefix.empty() ? k : prefix + "." + k;
    if (v.is_object() && !v.empty()) {
      render_lines(v, key, out);
    } else {
      out += key + ": " + render_value(v) + "\n";
    }
  }
}

CommandResult finish_report(std::string identity, json params, bool holds, json diagnostics,
                            const Stopwatch& clock) {
  CommandResult r;
  r.exit_code = holds ? kExitOk : kExitFailed;
  r.report = {{"identity", std::move(identity)},
              {"params", std::move(params)},
              {"holds", holds},
              {"diagnostics", std::move(diagnostics)},
              {"elapsed_ms", clock.elapsed_ms()}};
  render_lines(r.report, "", r.text);
  return r;
}

PairOrder parse_order(const std::string& s) {
  if (s == "lex") return PairOrder::kLexicographic;
  if (s == "revlex") return PairOrder::kReverseLexicographic;
  throw UsageError("unknown pair order '" + s + "' (expected lex or revlex)");
}

int strand_param(const std::optional<int>& n, int fallback, int min) {
  const int v = n.value_or(fallback);
  if (v < min || v > kMaxStrands) {
    throw UsageError("--n must be in " + std::to_string(min) + ".." + std::to_string(kMaxStrands));
  }
  return v;
}

Word random_word(std::mt19937_64& rng, int rank, int max_length) {
  std::uniform_int_distribution<int> len(0, max_length);
  std::uniform_int_distribution<int> gen(1, rank);
  std::bernoulli_distribution sign(0.5);
  std::vector<Letter> raw;
  for (int k = len(rng); k > 0; --k) raw.push_back(gen(rng) * (sign(rng) ? 1 : -1));
  return Word::reduce(rank, raw);
}

// --- verify ---------------------------------------------------------------

CommandResult verify_lantern_cmd(const VerifyOptions& opt) {
  const Stopwatch clock;
  const int n = strand_param(opt.n, 3, 2);
  const PairOrder order = parse_order(opt.order);
  const PairOrder other = order == PairOrder::kLexicographic ? PairOrder::kReverseLexicographic
                                                             : PairOrder::kLexicographic;
  const LanternReport chosen = verify_lantern(n, order);
  // The other ordering is diagnostic only; null when its words outgrow the cap.
  json other_holds = nullptr;
  try {
    other_holds = verify_lantern(n, other).holds;
  } catch (const WordLengthError&) {
  }

  std::string lhs = "T[";
  for (int i = 1; i <= n; ++i) lhs += std::to_string(i) + (i < n ? "," : "]");
  for (int i = 1; i <= n && n > 2; ++i) {
    lhs += "*t[" + std::to_string(i) + "]";
    if (n > 3) lhs += "^" + std::to_string(n - 2);
  }
  std::string rhs;
  std::vector<std::string> pairs;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) pairs.push_back("T[" + std::to_string(i) + "," + std::to_string(j) + "]");
  }
  if (order == PairOrder::kReverseLexicographic) std::reverse(pairs.begin(), pairs.end());
  for (std::size_t k = 0; k < pairs.size(); ++k) rhs += (k ? "*" : "") + pairs[k];

  json diag = {
      {"lhs", lhs},
      {"rhs", rhs},
      {"convention", "s[k]: x[k] -> x[k]*x[k+1]*x[k]^-1, x[k+1] -> x[k]; left-to-right"},
      {"framing_lhs", chosen.framing_lhs},
      {"framing_rhs", chosen.framing_rhs},
      {"automorphisms_equal", chosen.automorphisms_equal},
      {"lowest_discrepancy",
       chosen.lowest_discrepancy ? json(*chosen.lowest_discrepancy) : json(nullptr)},
      {"image_length", chosen.lhs_image_length},
      {"orderings", {{to_string(order), chosen.holds}, {to_string(other), other_holds}}},
  };
  return finish_report("lantern", {{"n", n}, {"order", opt.order}}, chosen.holds, diag, clock);
}

CommandResult verify_eq1_cmd(const VerifyOptions& opt) {
  const Stopwatch clock;
  const int m = opt.m.value_or(2);
  if (m < 1) throw UsageError("--m must be >= 1");
  if (opt.samples < 0) throw UsageError("--samples must be >= 0");
  const int cap = std::max(opt.cap, m);

  std::vector<std::pair<Word, Word>> pairs;
  json params = {{"m", m}, {"cap", cap}};
  if (opt.a || opt.b) {
    if (!opt.a || !opt.b) throw UsageError("--a and --b must be given together");
    const WordExpr ea = parse_word(*opt.a);
    const WordExpr eb = parse_word(*opt.b);
    if (alphabet_of(ea) != ExprAlphabet::kFree || alphabet_of(eb) != ExprAlphabet::kFree) {
      throw UsageError("eq1 takes free-group words");
    }
    const int rank = std::max({2, max_index(ea), max_index(eb)});
    pairs.emplace_back(to_word(ea, rank), to_word(eb, rank));
    params["a"] = *opt.a;
    params["b"] = *opt.b;
  } else {
    pairs.emplace_back(Word::reduce(2, std::vector<Letter>{1, 2}),
                       Word::reduce(2, std::vector<Letter>{-2, 1}));
    std::mt19937_64 rng(opt.seed);
    for (int k = 0; k < opt.samples; ++k) {
      Word a = random_word(rng, 2, 8);
      Word b = random_word(rng, 2, 8);
      pairs.emplace_back(std::move(a), std::move(b));
    }
    params["samples"] = opt.samples;
    params["seed"] = opt.seed;
  }

  int failures = 0;
  int min_degree = kInfiniteDegree;
  json first_failure = nullptr;
  for (const auto& [a, b] : pairs) {
    const auto [lhs, rhs] = obar_product_sides(a, b);
    const CongruenceReport r = check_congruence(lhs, rhs, m, cap);
    if (r.lowest_discrepancy_degree != kInfiniteDegree &&
        (min_degree == kInfiniteDegree || r.lowest_discrepancy_degree < min_degree)) {
      min_degree = r.lowest_discrepancy_degree;
    }
    if (!r.holds) {
      if (failures == 0) first_failure = {{"a", a.to_string()}, {"b", b.to_string()}};
      ++failures;
    }
  }
  json diag = {{"pairs_checked", pairs.size()},
               {"failures", failures},
               {"lowest_discrepancy_degree", degree_json(min_degree)},
               {"first_failure", first_failure}};
  return finish_report("eq1", params, failures == 0, diag, clock);
}

CommandResult verify_eq2_cmd(const VerifyOptions& opt) {
  const Stopwatch clock;
  const int m = opt.m.value_or(2);
  if (m < 1) throw UsageError("--m must be >= 1");
  const int cap = std::max(opt.cap, m);
  const auto [lhs, rhs] = band_congruence_sides();
  const CongruenceReport r = check_congruence(lhs, rhs, m, cap);
  const NcSeries degree2 = r.difference.homogeneous_part(2);
  json diag = {{"lhs", lhs.to_string()},
               {"rhs", rhs.to_string()},
               {"examined_cap", r.examined_cap},
               {"lowest_discrepancy_degree", degree_json(r.lowest_discrepancy_degree)},
               {"degree2_part", degree2.to_string()},
               {"degree2_terms", series_terms_json(degree2)}};
  return finish_report("eq2", {{"m", m}, {"cap", cap}}, r.holds, diag, clock);
}

CommandResult verify_lemma_inverse_cmd(const VerifyOptions& opt) {
  const Stopwatch clock;
  const int m = opt.m.value_or(8);
  if (m < 0) throw UsageError("--m must be >= 0");
  bool holds = true;
  json per_cap = json::object();
  std::string top;
  for (int cap = 0; cap <= m; ++cap) {
    const InverseIdentityReport r = verify_lemma_inverse(cap);
    per_cap[std::to_string(cap)] = r.holds;
    holds = holds && r.holds;
    if (cap == m) top = r.lhs.to_string();
  }
  json diag = {{"caps_checked", per_cap}, {"expansion_at_max_cap", top}};
  return finish_report("lemma-inverse", {{"m", m}}, holds, diag, clock);
}

CommandResult verify_completed_cmd(const VerifyOptions& opt) {
  const Stopwatch clock;
  const int n = strand_param(opt.n, 3, 3);
  if (opt.cap < 0) throw UsageError("--cap must be >= 0");
  const CompletedIdentityReport r = verify_completed_identity(n, opt.cap);
  json diag = {{"frame_twists_central", r.frame_twists_central},
               {"group_route", r.group_route},
               {"series_route", r.series_route ? json(*r.series_route) : json(nullptr)},
               {"series_cap", r.series_route ? json(r.series_cap) : json(nullptr)},
               {"routes_agree", !r.series_route || *r.series_route == r.group_route},
               {"framing_lhs", r.lantern.framing_lhs},
               {"framing_rhs", r.lantern.framing_rhs}};
  return finish_report("completed", {{"n", n}, {"cap", opt.cap}}, r.holds, diag, clock);
}

}  // namespace

CommandResult cmd_verify(const VerifyOptions& opt) {
  if (opt.identity == "lantern") return verify_lantern_cmd(opt);
  if (opt.identity == "eq1") return verify_eq1_cmd(opt);
  if (opt.identity == "eq2") return verify_eq2_cmd(opt);
  if (opt.identity == "lemma-inverse") return verify_lemma_inverse_cmd(opt);
  if (opt.identity == "completed") return verify_completed_cmd(opt);
  throw UsageError("unknown identity '" + opt.identity + "'");
}

// --- expand ---------------------------------------------------------------

CommandResult cmd_expand(const ExpandOptions& opt) {
  const Stopwatch clock;
  if (opt.degree < 0) throw UsageError("--degree must be >= 0");
  ParseContext ctx;
  ctx.free_rank = opt.rank.value_or(0);
  ctx.strands = opt.n.value_or(3);
  const WordExpr e = parse_word(opt.word, ctx);

  NcSeries s;
  std::string alphabet;
  if (alphabet_of(e) == ExprAlphabet::kFree) {
    const int rank = opt.rank.value_or(std::max(1, max_index(e)));
    s = magnus_free(to_word(e, rank), opt.degree);
    alphabet = "free";
  } else {
    if (ctx.strands != 3) {
      throw UnsupportedError("series expansion supports braid words on 3 strands only");
    }
    s = magnus_p3(to_braid_word(e), opt.degree);
    alphabet = "framed-p3";
  }

  CommandResult r;
  json vars = json::array();
  for (std::size_t i = 0; i < s.context().size(); ++i) vars.push_back(s.context().name(i));
  r.report = {{"word", print(e)},
              {"alphabet", alphabet},
              {"degree", opt.degree},
              {"variables", vars},
              {"terms", series_terms_json(s)},
              {"text", s.to_string()},
              {"elapsed_ms", clock.elapsed_ms()}};
  r.text = s.to_string() + "\n";
  return r;
}

// --- invariants -------------------------------------------------------------

std::uint64_t resolve_term_cap(std::uint64_t flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("LANTERN_TERM_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    throw UsageError("LANTERN_TERM_CAP must be a positive integer");
  }
  return kDefaultTermCap;
}

CommandResult cmd_invariants(const InvariantsOptions& opt) {
  const Stopwatch clock;
  if (opt.genus < 1) throw UsageError("--genus must be >= 1");
  if (opt.power < 0) throw UsageError("--power must be >= 0");
  if (opt.group != "torus" && opt.group != "gl") {
    throw UsageError("--group must be torus or gl");
  }
  const std::uint64_t cap = resolve_term_cap(opt.term_cap);
  const InvariantGroup group = opt.group == "gl" ? InvariantGroup::kGL : InvariantGroup::kTorus;

  std::vector<InvariantCell> cells;
  std::optional<bool> stabilized;
  if (!opt.table) {
    cells.push_back({opt.genus, opt.power,
                     lambda3_power_invariants(opt.genus, opt.power, group, cap)});
  } else if (group == InvariantGroup::kTorus) {
    cells = parity_table(opt.genus, opt.power, cap);
  } else {
    const StabilityReport s = stability_probe(opt.power, 1, opt.genus, cap);
    cells = s.rows;
    stabilized = s.stabilized;
  }

  bool odd_vanish = true;
  json jcells = json::array();
  std::ostringstream table;
  table << std::setw(6) << "genus" << std::setw(7) << "power" << std::setw(14) << "dimension"
        << "\n";
  for (const InvariantCell& c : cells) {
    if (c.power % 2 == 1 && c.dimension != 0) odd_vanish = false;
    jcells.push_back({{"genus", c.genus}, {"power", c.power}, {"dimension", c.dimension}});
    table << std::setw(6) << c.genus << std::setw(7) << c.power << std::setw(14) << c.dimension
          << "\n";
  }

  CommandResult r;
  r.report = {{"group", opt.group},
              {"genus", opt.genus},
              {"power", opt.power},
              {"table", opt.table},
              {"term_cap", cap},
              {"cells", jcells},
              {"odd_powers_vanish", odd_vanish},
              {"stabilized", stabilized ? json(*stabilized) : json(nullptr)},
              {"elapsed_ms", clock.elapsed_ms()}};
  if (opt.table) {
    r.text = table.str();
    if (stabilized) r.text += std::string("stabilized: ") + (*stabilized ? "true" : "false") + "\n";
  } else {
    r.text = std::to_string(cells.front().dimension) + "\n";
  }
  return r;
}

// --- congruence -------------------------------------------------------------

CommandResult cmd_congruence(const CongruenceOptions& opt) {
  const Stopwatch clock;
  if (opt.m < 1) throw UsageError("--m must be >= 1");
  if (opt.cap < 0) throw UsageError("--cap must be >= 0");
  ParseContext ctx;
  ctx.strands = 3;
  GroupRingExpr lhs = parse_group_ring(opt.lhs, ctx);
  GroupRingExpr rhs = parse_group_ring(opt.rhs, ctx);
  // Bring free-group sides to a common rank.
  if (lhs.alphabet == Alphabet::kFree && rhs.alphabet == Alphabet::kFree &&
      lhs.free_rank != rhs.free_rank) {
    ctx.free_rank = std::max(lhs.free_rank, rhs.free_rank);
    lhs = parse_group_ring(opt.lhs, ctx);
    rhs = parse_group_ring(opt.rhs, ctx);
  }
  const CongruenceReport r = check_congruence(lhs, rhs, opt.m, opt.cap);
  json diag = {{"lhs", lhs.to_string()},
               {"rhs", rhs.to_string()},
               {"alphabet", lhs.alphabet == Alphabet::kFree ? "free" : "framed-p3"},
               {"examined_cap", r.examined_cap},
               {"lowest_discrepancy_degree", degree_json(r.lowest_discrepancy_degree)},
               {"difference", r.difference.to_string()}};
  return finish_report("congruence", {{"m", opt.m}, {"cap", opt.cap}}, r.holds, diag, clock);
}

// --- entry point ------------------------------------------------------------

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verification toolkit for lantern-identity computations"};
  app.name("lantern");
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = false;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t term_cap = 0;
  app.add_flag("--json", as_json, "Emit a JSON report");
  app.add_option("--seed", seed, "Seed for randomized checks");
  app.add_option("--term-cap", term_cap, "Monomial guard for character computations");

  VerifyOptions vopt;
  int vn = 0;
  int vm = 0;
  std::string va;
  std::string vb;
  auto* verify = app.add_subcommand("verify", "Verify one identity");
  verify->add_option("identity", vopt.identity, "lantern | eq1 | eq2 | lemma-inverse | completed")
      ->required()
      ->check(CLI::IsMember({"lantern", "eq1", "eq2", "lemma-inverse", "completed"}));
  auto* n_opt = verify->add_option("--n", vn, "Strand count");
  auto* m_opt = verify->add_option("--m", vm, "Power of the augmentation ideal (cap for lemma-inverse)");
  verify->add_option("--order", vopt.order, "Pair ordering: lex | revlex");
  verify->add_option("--cap", vopt.cap, "Expansion degree for diagnostics");
  verify->add_option("--samples", vopt.samples, "Random pairs for eq1");
  auto* a_opt = verify->add_option("--a", va, "First word for eq1");
  auto* b_opt = verify->add_option("--b", vb, "Second word for eq1");

  ExpandOptions eopt;
  int en = 0;
  int erank = 0;
  auto* expand = app.add_subcommand("expand", "Print the Magnus expansion of a word");
  expand->add_option("word", eopt.word, "Word expression")->required();
  expand->add_option("--degree", eopt.degree, "Truncation degree");
  auto* en_opt = expand->add_option("--n", en, "Strand count for braid words");
  auto* rank_opt = expand->add_option("--rank", erank, "Free group rank");

  InvariantsOptions iopt;
  auto* inv = app.add_subcommand("invariants", "Invariant dimensions of tensor powers of Lambda^3 H");
  inv->add_option("--genus", iopt.genus, "Genus g")->required();
  inv->add_option("--power", iopt.power, "Tensor power m")->required();
  inv->add_option("--group", iopt.group, "torus | gl");
  inv->add_flag("--table", iopt.table, "Emit all cells up to the given genus and power");

  CongruenceOptions copt;
  auto* cong = app.add_subcommand("congruence", "Check a congruence modulo I^m");
  cong->add_option("--lhs", copt.lhs, "Group ring expression")->required();
  cong->add_option("--rhs", copt.rhs, "Group ring expression")->required();
  cong->add_option("--m", copt.m, "Power of the augmentation ideal");
  cong->add_option("--cap", copt.cap, "Expansion degree for diagnostics");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    CommandResult r;
    if (verify->parsed()) {
      if (*n_opt) vopt.n = vn;
      if (*m_opt) vopt.m = vm;
      if (*a_opt) vopt.a = va;
      if (*b_opt) vopt.b = vb;
      vopt.seed = seed;
      r = cmd_verify(vopt);
    } else if (expand->parsed()) {
      if (*en_opt) eopt.n = en;
      if (*rank_opt) eopt.rank = erank;
      if (eopt.degree > kWarnDegree) {
        err << "warning: degree " << eopt.degree
            << " above 8; term counts grow as (variables)^degree\n";
      }
      r = cmd_expand(eopt);
    } else if (inv->parsed()) {
      iopt.term_cap = term_cap;
      r = cmd_invariants(iopt);
    } else {
      r = cmd_congruence(copt);
    }
    out << (as_json ? r.report.dump(2) + "\n" : r.text);
    return r.exit_code;
  } catch (const ParseError& e) {
    err << "parse error at offset " << e.offset() << ": " << e.detail() << "\n";
    return kExitUsage;
  } catch (const ResourceCapExceeded& e) {
    err << "resource guard: " << e.what() << "\n";
    return kExitResource;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {  // IndexError is out_of_range, below
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const WordLengthError& e) {
    err << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::overflow_error& e) {
    err << "resource guard: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    // a certificate or divisibility check failed inside the library
    err << "check failed: " << e.what() << "\n";
    return kExitFailed;
  }
}

}  // namespace lantern::cli
