#include "mawkit/rauzy.hpp"

#include <algorithm>
#include <sstream>

#include "mawkit/error.hpp"

namespace mawkit {
namespace {

std::int64_t as_signed(std::size_t v) { return static_cast<std::int64_t>(v); }

IdentityCheck make_check(const char* name, std::optional<std::size_t> level, std::int64_t lhs,
                         std::int64_t rhs, bool applicable) {
  const CheckStatus status =
      !applicable ? CheckStatus::NotApplicable : (lhs == rhs ? CheckStatus::Pass : CheckStatus::Fail);
  return IdentityCheck{name, level, lhs, rhs, status};
}

std::string dot_quote(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

RauzyGraph::RauzyGraph(Alphabet alphabet, std::size_t level, std::vector<Word> vertices,
                       std::vector<Word> edge_labels)
    : alphabet_(std::move(alphabet)), level_(level), vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  std::sort(edge_labels.begin(), edge_labels.end());
  edge_labels.erase(std::unique(edge_labels.begin(), edge_labels.end()), edge_labels.end());

  in_degree_.assign(vertices_.size(), 0);
  out_degree_.assign(vertices_.size(), 0);
  edges_.reserve(edge_labels.size());
  for (Word& label : edge_labels) {
    if (label.size() != level_ + 1) {
      throw Error(ErrorKind::InvalidInput, "Rauzy edge has the wrong length for its level");
    }
    const auto from = find_vertex(label.prefix(level_));
    const auto to = find_vertex(label.suffix(level_));
    if (!from || !to) {
      throw Error(ErrorKind::InvalidInput, "Rauzy edge endpoint is not a vertex");
    }
    ++out_degree_[*from];
    ++in_degree_[*to];
    edges_.push_back(Edge{std::move(label), *from, *to});
  }
}

std::optional<std::size_t> RauzyGraph::find_vertex(const Word& label) const {
  const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), label);
  if (it == vertices_.end() || !(*it == label)) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::vector<Word> RauzyGraph::edge_labels() const {
  std::vector<Word> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.push_back(e.label);
  return out;
}

RauzyGraph rauzy_graph(const PeriodicWord& w, std::size_t level) {
  const auto vertices = factors(w, level);
  const auto edges = factors(w, level + 1);
  return RauzyGraph(w.alphabet(), level, {vertices.begin(), vertices.end()},
                    {edges.begin(), edges.end()});
}

LevelStats level_stats(const RauzyGraph& g, const ForbiddenSystem& reduced) {
  LevelStats s;
  s.level = g.level();
  s.vertices = g.vertices().size();
  s.edges = g.edges().size();
  for (std::size_t v = 0; v < s.vertices; ++v) {
    const std::size_t in = g.in_degree(v);
    const std::size_t out = g.out_degree(v);
    if (in >= 2 && out >= 2) {
      ++s.crossroads;
    } else if (in >= 2) {
      ++s.in_forks;
    } else if (out >= 2) {
      ++s.out_forks;
    }
    s.two_paths += in * out;
  }
  s.in_branching = s.in_forks + s.crossroads;
  s.maw_count = reduced.count_of_length(g.level() + 2);
  return s;
}

LevelStats level_stats(const RauzyGraph& g, const PeriodicWord& w) {
  return level_stats(g, minimal_forbidden_words(w));
}

Evolution evolve(const RauzyGraph& g, const PeriodicWord& w) {
  const auto present = factors(w, g.level() + 2);
  const std::size_t vcount = g.vertices().size();
  std::vector<std::vector<std::size_t>> incoming(vcount), outgoing(vcount);
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    incoming[g.edges()[e].to].push_back(e);
    outgoing[g.edges()[e].from].push_back(e);
  }

  // Each vertex sits in the middle of in(v)·out(v) two-edge paths.
  std::vector<Word> kept, removed;
  for (std::size_t v = 0; v < vcount; ++v) {
    for (std::size_t ein : incoming[v]) {
      for (std::size_t eout : outgoing[v]) {
        Word spelled = g.edges()[ein].label + g.edges()[eout].label.back();
        (present.contains(spelled) ? kept : removed).push_back(std::move(spelled));
      }
    }
  }
  std::sort(removed.begin(), removed.end());
  return Evolution{RauzyGraph(g.alphabet(), g.level() + 1, g.edge_labels(), std::move(kept)),
                   std::move(removed)};
}

std::string_view to_string(CheckStatus status) noexcept {
  switch (status) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::NotApplicable:
      return "n/a";
  }
  return "n/a";
}

bool IdentityReport::all_passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const IdentityCheck& c) { return c.status == CheckStatus::Fail; });
}

std::vector<IdentityCheck> IdentityReport::failures() const {
  std::vector<IdentityCheck> out;
  std::copy_if(checks.begin(), checks.end(), std::back_inserter(out),
               [](const IdentityCheck& c) { return c.status == CheckStatus::Fail; });
  return out;
}

std::int64_t IdentityReport::crossroad_sum() const {
  std::int64_t sum = 0;
  for (std::size_t k = 0; k < word.length(); ++k) sum += as_signed(levels[k].crossroads);
  return sum;
}

std::int64_t IdentityReport::fork_sum() const {
  std::int64_t sum = 0;
  for (std::size_t k = 0; k < word.length(); ++k) {
    sum += as_signed(levels[k].crossroads + levels[k].in_forks);
  }
  return sum;
}

IdentityReport verify_identities(const PeriodicWord& w) {
  const std::size_t n = w.length();
  const ForbiddenSystem reduced = minimal_forbidden_words(w);
  IdentityReport report{w, w.alphabet().size() == 2, reduced.size(), {}, {}};

  for (std::size_t k = 0; k <= n + 1; ++k) {
    report.levels.push_back(level_stats(rauzy_graph(w, k), reduced));
  }

  const bool binary = report.binary;
  for (std::size_t k = 0; k < n; ++k) {
    const LevelStats& cur = report.levels[k];
    const LevelStats& next = report.levels[k + 1];
    const auto m = as_signed(cur.maw_count);
    report.checks.push_back(make_check(
        identity::kEdgeRecurrence, k, as_signed(next.edges),
        as_signed(cur.edges) + 2 * as_signed(cur.crossroads) + as_signed(cur.in_forks) - m, binary));
    report.checks.push_back(make_check(identity::kIncRecurrence, k,
                                       as_signed(next.in_branching) - as_signed(cur.in_branching),
                                       as_signed(cur.crossroads) - m, binary));
  }
  // The general recurrence holds past the plateau too; check it through level n.
  for (std::size_t k = 0; k <= n; ++k) {
    const LevelStats& cur = report.levels[k];
    report.checks.push_back(make_check(identity::kGeneralRecurrence, k,
                                       as_signed(report.levels[k + 1].edges),
                                       as_signed(cur.two_paths) - as_signed(cur.maw_count), true));
  }

  report.checks.push_back(make_check(identity::kForbidCount, std::nullopt,
                                     as_signed(reduced.size()), 1 + report.crossroad_sum(), binary));
  report.checks.push_back(
      make_check(identity::kPeriodSum, std::nullopt, as_signed(n), 1 + report.fork_sum(), binary));

  for (std::size_t k = n; k <= n + 1; ++k) {
    const LevelStats& s = report.levels[k];
    report.checks.push_back(
        make_check(identity::kTerminalEdges, k, as_signed(s.edges), as_signed(n), true));
    report.checks.push_back(make_check(identity::kTerminalForks, k,
                                       as_signed(s.in_forks + s.out_forks + s.crossroads), 0, true));
    report.checks.push_back(
        make_check(identity::kTerminalInc, k, as_signed(s.in_branching), 0, true));
  }
  return report;
}

std::string to_dot(const RauzyGraph& g) {
  const Alphabet& alphabet = g.alphabet();
  auto name = [&](const Word& w) { return w.empty() ? std::string("ε") : alphabet.render(w); };

  std::ostringstream out;
  out << "digraph rauzy_" << g.level() << " {\n";
  out << "  rankdir=LR;\n";
  for (const Word& v : g.vertices()) out << "  " << dot_quote(name(v)) << ";\n";
  for (const auto& e : g.edges()) {
    out << "  " << dot_quote(name(g.vertices()[e.from])) << " -> "
        << dot_quote(name(g.vertices()[e.to])) << " [label=" << dot_quote(alphabet.render(e.label))
        << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace mawkit
