#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>

#include "mawkit/mawkit.hpp"

namespace mawkit::cli {
namespace {

struct Config {
  std::string alphabet;  // empty: infer from the input
  std::string format;    // empty: the command's default
  std::size_t max_n = 8;
  std::uint64_t budget = SearchOptions{}.budget;
  unsigned jobs = 0;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

Alphabet resolve_alphabet(const Config& cfg, std::string_view input) {
  return cfg.alphabet.empty() ? Alphabet::infer(input) : Alphabet::from_string(cfg.alphabet);
}

std::string resolve_format(const Config& cfg, std::string_view fallback,
                           std::initializer_list<std::string_view> allowed) {
  const std::string format = cfg.format.empty() ? std::string(fallback) : cfg.format;
  if (std::find(allowed.begin(), allowed.end(), format) == allowed.end()) {
    throw UsageError("--format " + format + " is not supported by this command");
  }
  return format;
}

int cmd_maw(const std::string& word, const Config& cfg, std::ostream& out) {
  const std::string format = resolve_format(cfg, "table", {"table", "tsv", "json"});
  const PeriodicWord w = canonicalize(word, resolve_alphabet(cfg, word));
  const ForbiddenSystem reduced = minimal_forbidden_words(w);

  if (format == "json") {
    nlohmann::json j = nlohmann::json::parse(to_json(reduced));
    j["period"] = w.str();
    j["codelength"] = reduced.size();
    out << j.dump(2) << "\n";
  } else if (format == "tsv") {
    out << to_text(reduced);
  } else {
    const auto words = reduced.rendered();
    for (std::size_t i = 0; i < words.size(); ++i) out << (i ? " " : "") << words[i];
    out << "\n" << "k=" << reduced.size() << "\n";
  }
  return kOk;
}

int cmd_defines(std::vector<std::string> forbids, const Config& cfg, std::istream& in,
                std::ostream& out) {
  const std::string format = resolve_format(cfg, "table", {"table", "json"});
  if (forbids.empty() || (forbids.size() == 1 && forbids.front() == "-")) {
    forbids.clear();
    std::string line;
    while (std::getline(in, line)) {
      line.erase(0, line.find_first_not_of(" \t\r"));
      line.erase(line.find_last_not_of(" \t\r") + 1);
      if (!line.empty()) forbids.push_back(line);
    }
  }
  std::string all;
  for (const auto& f : forbids) all += f;
  if (cfg.alphabet.empty() && all.empty()) {
    throw UsageError("an empty forbidden system needs --alphabet");
  }
  const ForbiddenSystem system = ForbiddenSystem::parse(resolve_alphabet(cfg, all), forbids);
  const DefinednessVerdict verdict = classify(system);

  if (format == "json") {
    out << to_json(verdict) << "\n";
  } else {
    switch (verdict.tag) {
      case Verdict::None:
        out << "NONE\n";
        break;
      case Verdict::Unique:
        out << "UNIQUE " << verdict.word->str() << "\n";
        break;
      case Verdict::Multiple:
        out << "MULTIPLE\n";
        break;
    }
  }
  switch (verdict.tag) {
    case Verdict::Unique:
      return kOk;
    case Verdict::None:
      return kNone;
    case Verdict::Multiple:
      break;
  }
  return kMultiple;
}

int cmd_evolve(const std::string& word, const Config& cfg, std::ostream& out) {
  const std::string format = resolve_format(cfg, "table", {"table", "json"});
  const PeriodicWord w = canonicalize(word, resolve_alphabet(cfg, word));
  const IdentityReport report = verify_identities(w);
  out << (format == "json" ? to_json(report) + "\n" : to_table(report));
  return report.all_passed() ? kOk : kCheckFailed;
}

int cmd_rauzy(const std::string& word, std::size_t level, const Config& cfg, std::ostream& out) {
  const std::string format = resolve_format(cfg, "dot", {"dot", "json"});
  const PeriodicWord w = canonicalize(word, resolve_alphabet(cfg, word));
  const RauzyGraph g = rauzy_graph(w, level);
  out << (format == "json" ? to_json(g) + "\n" : to_dot(g));
  return kOk;
}

int cmd_fib(unsigned k, const Config& cfg, std::ostream& out) {
  const std::string format = resolve_format(cfg, "table", {"table", "json"});
  if (k > kMaxFibonacciIndex) throw UsageError("fib index must be at most 90");
  const std::uint64_t period = fibonacci_number(k);
  // Reduced-system computation is quadratic in the period.
  if (period > cfg.budget / period) {
    throw Error(ErrorKind::BudgetExceeded, "l_" + std::to_string(k) + " has period " +
                                               std::to_string(period) + "; raise --budget");
  }
  const Word raw = fibonacci_string(k);
  const PeriodicWord w = canonicalize(raw, Alphabet::binary());
  const std::size_t code = codelength(w);
  const bool holds = fibonacci_bound_holds(w.length(), code);
  const bool tight = code <= kMaxFibonacciIndex && w.length() == fibonacci_number(static_cast<unsigned>(code));
  const std::string verdict = !holds ? "VIOLATED" : (tight ? "TIGHT" : "OK");

  if (format == "json") {
    nlohmann::json j{{"k", k},
                     {"word", w.alphabet().render(raw)},
                     {"canonical", w.str()},
                     {"period", w.length()},
                     {"codelength", code},
                     {"bound", verdict}};
    if (code <= kMaxFibonacciIndex) j["phi"] = fibonacci_number(static_cast<unsigned>(code));
    out << j.dump(2) << "\n";
  } else {
    out << "word: " << w.alphabet().render(raw) << "\n"
        << "canonical: " << w.str() << "\n"
        << "period: " << w.length() << "\n"
        << "codelength: " << code << "\n"
        << "bound: " << w.length() << " <= phi_" << code;
    if (code <= kMaxFibonacciIndex) out << " = " << fibonacci_number(static_cast<unsigned>(code));
    out << " " << verdict << "\n";
  }
  return holds ? kOk : kCheckFailed;
}

int cmd_search(const Config& cfg, std::ostream& out) {
  const std::string format = resolve_format(cfg, "table", {"table", "tsv", "json"});
  const Alphabet alphabet = Alphabet::from_string(cfg.alphabet.empty() ? "ab" : cfg.alphabet);
  const auto rows = codelength_table(alphabet, cfg.max_n, SearchOptions{cfg.budget, cfg.jobs});
  if (format == "json") {
    out << to_json(rows) << "\n";
  } else if (format == "tsv") {
    out << to_tsv(rows);
  } else {
    out << to_table(rows);
  }
  const bool ok = std::all_of(rows.begin(), rows.end(), [](const BoundRow& r) { return r.fib_bound_ok; });
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Minimal forbidden words, Rauzy graphs and codelength of periodic words", "mawkit"};
  app.require_subcommand(1);

  Config cfg;
  app.add_option("--alphabet", cfg.alphabet, "Alphabet symbols in order (default: inferred)");
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "tsv", "dot"}));
  app.add_option("--max-n", cfg.max_n, "Largest period for `search`")->check(CLI::PositiveNumber);
  app.add_option("--budget", cfg.budget, "Cap on exhaustive-search cost")->check(CLI::PositiveNumber);
  app.add_option("--jobs", cfg.jobs, "Worker threads (0 = all cores)");

  std::string word;
  std::vector<std::string> forbids;
  std::size_t level = 0;
  unsigned fib_index = 0;

  auto* maw = app.add_subcommand("maw", "Reduced forbidden system (minimal absent words) of a periodic word");
  maw->add_option("word", word, "Period of the word")->required();
  auto* defines = app.add_subcommand("defines", "Does a forbidden system define a unique word?");
  defines->add_option("forbids", forbids, "Forbidden words (read from stdin when omitted)");
  auto* evolve = app.add_subcommand("evolve", "Per-level Rauzy statistics and counting identities");
  evolve->add_option("word", word, "Period of the word")->required();
  auto* rauzy = app.add_subcommand("rauzy", "Rauzy graph of a word at one level");
  rauzy->add_option("word", word, "Period of the word")->required();
  rauzy->add_option("level", level, "Level k (vertices are k-factors)")->required();
  auto* fib = app.add_subcommand("fib", "Fibonacci word l_k, its codelength and the bound n <= phi_k");
  fib->add_option("k", fib_index, "Index k")->required();
  auto* search = app.add_subcommand("search", "Minimum codelength per period by exhaustive search");

  for (auto* sub : {maw, defines, evolve, rauzy, fib, search}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*maw) return cmd_maw(word, cfg, out);
    if (*defines) return cmd_defines(forbids, cfg, in, out);
    if (*evolve) return cmd_evolve(word, cfg, out);
    if (*rauzy) return cmd_rauzy(word, level, cfg, out);
    if (*fib) return cmd_fib(fib_index, cfg, out);
    if (*search) return cmd_search(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::InvalidInput ? kUsage : kRuntime;
  }
  return kUsage;
}

}  // namespace mawkit::cli
