#include "mawkit/serialize.hpp"

#include <iomanip>
#include <nlohmann/json.hpp>
#include <sstream>

#include "mawkit/error.hpp"

namespace mawkit {
namespace {

using nlohmann::json;

std::string dump(const json& j) { return j.dump(2); }

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

json words_json(const PeriodicWord& w) { return w.str(); }

json level_json(const LevelStats& s) {
  return json{{"level", s.level},         {"vertices", s.vertices},
              {"edges", s.edges},         {"in_forks", s.in_forks},
              {"out_forks", s.out_forks}, {"crossroads", s.crossroads},
              {"inc", s.in_branching},    {"two_paths", s.two_paths},
              {"maw_count", s.maw_count}};
}

const IdentityCheck* find_check(const IdentityReport& r, std::string_view name, std::size_t level) {
  for (const auto& c : r.checks) {
    if (c.name == name && c.level == level) return &c;
  }
  return nullptr;
}

const IdentityCheck* find_check(const IdentityReport& r, std::string_view name) {
  for (const auto& c : r.checks) {
    if (c.name == name && !c.level) return &c;
  }
  return nullptr;
}

std::string mark(const IdentityCheck* c) {
  if (c == nullptr) return "-";
  switch (c->status) {
    case CheckStatus::Pass:
      return "ok";
    case CheckStatus::Fail:
      return "FAIL";
    case CheckStatus::NotApplicable:
      return "n/a";
  }
  return "-";
}

std::string summary_status(const IdentityCheck* c) {
  if (c == nullptr || c->status == CheckStatus::NotApplicable) return "N/A";
  return c->status == CheckStatus::Pass ? "PASS" : "FAIL";
}

}  // namespace

std::string to_text(const ForbiddenSystem& system) {
  std::string out;
  for (const auto& s : system.rendered()) {
    out += s;
    out += '\n';
  }
  return out;
}

ForbiddenSystem forbidden_system_from_text(std::string_view text, const Alphabet& alphabet) {
  std::vector<Word> words;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const auto line = trim(text.substr(pos, end - pos));
    if (!line.empty()) words.push_back(alphabet.parse(line));
    pos = end + 1;
  }
  return ForbiddenSystem(alphabet, std::move(words));
}

std::string to_json(const ForbiddenSystem& system) {
  return dump(json{{"alphabet", system.alphabet().to_string()}, {"words", system.rendered()}});
}

ForbiddenSystem forbidden_system_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    const Alphabet alphabet = Alphabet::from_string(j.at("alphabet").get<std::string>());
    const auto words = j.at("words").get<std::vector<std::string>>();
    return ForbiddenSystem::parse(alphabet, words);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("bad forbidden-system JSON: ") + e.what());
  }
}

std::string to_json(const DefinednessVerdict& verdict) {
  json j{{"verdict", std::string(to_string(verdict.tag))}};
  if (verdict.word) {
    j["word"] = words_json(*verdict.word);
    j["alphabet"] = verdict.word->alphabet().to_string();
  }
  if (verdict.witness) {
    j["witness"] = json::array({words_json(verdict.witness->first), words_json(verdict.witness->second)});
  }
  return dump(j);
}

std::string to_json(const RauzyGraph& graph) {
  const Alphabet& a = graph.alphabet();
  json vertices = json::array();
  for (const Word& v : graph.vertices()) vertices.push_back(a.render(v));
  json edges = json::array();
  for (const auto& e : graph.edges()) {
    edges.push_back(json{{"label", a.render(e.label)},
                         {"from", a.render(graph.vertices()[e.from])},
                         {"to", a.render(graph.vertices()[e.to])}});
  }
  return dump(json{{"alphabet", a.to_string()},
                   {"level", graph.level()},
                   {"vertices", std::move(vertices)},
                   {"edges", std::move(edges)}});
}

std::string to_json(const IdentityReport& report) {
  json levels = json::array();
  for (const auto& s : report.levels) levels.push_back(level_json(s));
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back(json{{"name", c.name},
                          {"level", c.level ? json(*c.level) : json(nullptr)},
                          {"lhs", c.lhs},
                          {"rhs", c.rhs},
                          {"status", std::string(to_string(c.status))}});
  }
  return dump(json{{"word", report.word.str()},
                   {"alphabet", report.word.alphabet().to_string()},
                   {"period", report.word.length()},
                   {"binary", report.binary},
                   {"forbid_count", report.forbid_count},
                   {"crossroad_sum", report.crossroad_sum()},
                   {"fork_sum", report.fork_sum()},
                   {"all_passed", report.all_passed()},
                   {"levels", std::move(levels)},
                   {"checks", std::move(checks)}});
}

std::string to_table(const IdentityReport& report) {
  const std::size_t n = report.word.length();
  std::ostringstream out;
  out << "word " << report.word.str() << "  period " << n << "  alphabet "
      << report.word.alphabet().to_string() << "\n";
  out << std::setw(5) << "k" << std::setw(6) << "|V|" << std::setw(6) << "|E|" << std::setw(5)
      << "i" << std::setw(5) << "o" << std::setw(5) << "c" << std::setw(5) << "inc" << std::setw(8)
      << "m(k+2)" << std::setw(7) << "edge" << std::setw(6) << "inc" << std::setw(6) << "gen"
      << "\n";
  for (std::size_t k = 0; k <= n; ++k) {
    const LevelStats& s = report.levels[k];
    out << std::setw(5) << k << std::setw(6) << s.vertices << std::setw(6) << s.edges
        << std::setw(5) << s.in_forks << std::setw(5) << s.out_forks << std::setw(5)
        << s.crossroads << std::setw(5) << s.in_branching << std::setw(8) << s.maw_count
        << std::setw(7) << mark(find_check(report, identity::kEdgeRecurrence, k)) << std::setw(6)
        << mark(find_check(report, identity::kIncRecurrence, k)) << std::setw(6)
        << mark(find_check(report, identity::kGeneralRecurrence, k)) << "\n";
  }

  const IdentityCheck* forbid = find_check(report, identity::kForbidCount);
  const IdentityCheck* period = find_check(report, identity::kPeriodSum);
  out << "|S̃| = 1 + Σc: " << summary_status(forbid);
  if (report.binary) out << " (" << report.forbid_count << " = 1 + " << report.crossroad_sum() << ")";
  out << "\n";
  out << "n = 1 + Σ(c+i): " << summary_status(period);
  if (report.binary) out << " (" << n << " = 1 + " << report.fork_sum() << ")";
  out << "\n";

  bool terminal_ok = true;
  for (const auto& c : report.checks) {
    const bool terminal = c.name == identity::kTerminalEdges || c.name == identity::kTerminalForks ||
                          c.name == identity::kTerminalInc;
    if (terminal && c.status == CheckStatus::Fail) terminal_ok = false;
  }
  out << "terminal cycle |E(G_k)| = n, k >= n: " << (terminal_ok ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string to_json(std::span<const BoundRow> rows) {
  json out = json::array();
  for (const auto& row : rows) {
    json words = json::array();
    for (const auto& w : row.extremal_words) words.push_back(words_json(w));
    out.push_back(json{{"period", row.period},
                       {"min_codelength", row.min_codelength},
                       {"extremal_words", std::move(words)},
                       {"fib_bound_ok", row.fib_bound_ok}});
  }
  return dump(out);
}

std::string to_tsv(std::span<const BoundRow> rows) {
  std::ostringstream out;
  out << "n\tmin_k\tcount_of_minimizers\tsample_word\tfib_bound_ok\n";
  for (const auto& row : rows) {
    out << row.period << '\t' << row.min_codelength << '\t' << row.extremal_words.size() << '\t'
        << (row.extremal_words.empty() ? std::string("-") : row.extremal_words.front().str())
        << '\t' << (row.fib_bound_ok ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string to_table(std::span<const BoundRow> rows) {
  std::ostringstream out;
  out << std::setw(4) << "n" << std::setw(7) << "min_k" << std::setw(12) << "minimizers"
      << "  " << std::left << std::setw(20) << "sample" << std::right << std::setw(10)
      << "n<=phi_k" << "\n";
  for (const auto& row : rows) {
    out << std::setw(4) << row.period << std::setw(7) << row.min_codelength << std::setw(12)
        << row.extremal_words.size() << "  " << std::left << std::setw(20)
        << (row.extremal_words.empty() ? std::string("-") : row.extremal_words.front().str())
        << std::right << std::setw(10) << (row.fib_bound_ok ? "ok" : "VIOLATED") << "\n";
  }
  return out.str();
}

std::string to_json(std::span<const TightnessRow> rows) {
  json out = json::array();
  for (const auto& row : rows) {
    out.push_back(json{{"k", row.k},
                       {"expected_period", row.expected_period},
                       {"period", row.period},
                       {"codelength", row.codelength},
                       {"ok", row.ok}});
  }
  return dump(out);
}

std::string canonical_json(std::string_view text) {
  try {
    return dump(json::parse(text));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("bad JSON: ") + e.what());
  }
}

}  // namespace mawkit
