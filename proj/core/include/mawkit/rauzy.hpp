#pragma once

// Rauzy graphs of a periodic word and the counting identities that tie
// their forks and crossroads to the reduced system and the period.
//
// Level k has the length-k factors as vertices and the length-(k+1) factors
// as edges, so level 0 is the single vertex ε with one loop per occurring
// letter.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mawkit/antidictionary.hpp"
#include "mawkit/words.hpp"

namespace mawkit {

class RauzyGraph {
 public:
  struct Edge {
    Word label;        // the (k+1)-factor
    std::size_t from;  // index of its k-prefix in vertices()
    std::size_t to;    // index of its k-suffix
  };

  /// Builds the graph on the given vertex and edge words. Every edge's
  /// prefix and suffix must be a vertex.
  RauzyGraph(Alphabet alphabet, std::size_t level, std::vector<Word> vertices,
             std::vector<Word> edge_labels);

  [[nodiscard]] const Alphabet& alphabet() const noexcept { return alphabet_; }
  [[nodiscard]] std::size_t level() const noexcept { return level_; }
  /// Sorted.
  [[nodiscard]] const std::vector<Word>& vertices() const noexcept { return vertices_; }
  /// Sorted by label.
  [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }
  [[nodiscard]] std::size_t in_degree(std::size_t v) const { return in_degree_.at(v); }
  [[nodiscard]] std::size_t out_degree(std::size_t v) const { return out_degree_.at(v); }
  [[nodiscard]] std::optional<std::size_t> find_vertex(const Word& label) const;

  friend bool operator==(const RauzyGraph& a, const RauzyGraph& b) {
    return a.alphabet_ == b.alphabet_ && a.level_ == b.level_ && a.vertices_ == b.vertices_ &&
           a.edge_labels() == b.edge_labels();
  }

  [[nodiscard]] std::vector<Word> edge_labels() const;

 private:
  Alphabet alphabet_;
  std::size_t level_;
  std::vector<Word> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> in_degree_;
  std::vector<std::size_t> out_degree_;
};

RauzyGraph rauzy_graph(const PeriodicWord& w, std::size_t level);

/// Per-level counts. Forks and crossroads are classified by degree:
/// in-fork = in >= 2 and out == 1, out-fork = in == 1 and out >= 2,
/// crossroad = in >= 2 and out >= 2. Over two letters these are exactly the
/// (2,1), (1,2) and (2,2) vertex types.
struct LevelStats {
  std::size_t level = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t in_forks = 0;
  std::size_t out_forks = 0;
  std::size_t crossroads = 0;
  std::size_t in_branching = 0;  // in_forks + crossroads
  std::size_t two_paths = 0;     // Σ_v in(v)·out(v)
  std::size_t maw_count = 0;     // minimal absent words of length level + 2

  friend bool operator==(const LevelStats&, const LevelStats&) = default;
};

LevelStats level_stats(const RauzyGraph& g, const PeriodicWord& w);
/// Same, reusing an already computed reduced system of w.
LevelStats level_stats(const RauzyGraph& g, const ForbiddenSystem& reduced);

struct Evolution {
  RauzyGraph next;
  std::vector<Word> removed;  // words of 2-edge paths that are not factors, sorted
};

/// One step G_k -> G_{k+1}: every 2-edge path spells a (k+2)-word, which is
/// either an edge of the next level or a removed (forbidden) word.
Evolution evolve(const RauzyGraph& g, const PeriodicWord& w);

enum class CheckStatus { Pass, Fail, NotApplicable };

std::string_view to_string(CheckStatus status) noexcept;

struct IdentityCheck {
  std::string name;
  std::optional<std::size_t> level;  // empty for whole-word checks
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  CheckStatus status = CheckStatus::NotApplicable;
};

/// Names used in IdentityCheck::name.
namespace identity {
inline constexpr const char* kEdgeRecurrence = "edge_recurrence";            // |E_{k+1}| = |E_k| + 2c_k + i_k - m_{k+2}
inline constexpr const char* kIncRecurrence = "inc_recurrence";              // inc_{k+1} - inc_k = c_k - m_{k+2}
inline constexpr const char* kGeneralRecurrence = "generalized_recurrence";  // |E_{k+1}| = Σ in·out - m_{k+2}
inline constexpr const char* kForbidCount = "forbid_count";                  // |S̃| = 1 + Σ_{k<n} c_k
inline constexpr const char* kPeriodSum = "period_sum";                      // n = 1 + Σ_{k<n} (c_k + i_k)
inline constexpr const char* kTerminalEdges = "terminal_edges";              // |E(G_k)| = n, k >= n
inline constexpr const char* kTerminalForks = "terminal_forks";              // i_k + o_k + c_k = 0, k >= n
inline constexpr const char* kTerminalInc = "terminal_inc";                  // inc_k = 0, k >= n
}  // namespace identity

struct IdentityReport {
  PeriodicWord word;
  bool binary = false;
  std::size_t forbid_count = 0;      // |S̃|
  std::vector<LevelStats> levels;    // k = 0 .. n+1
  std::vector<IdentityCheck> checks;

  [[nodiscard]] bool all_passed() const;
  [[nodiscard]] std::vector<IdentityCheck> failures() const;
  [[nodiscard]] std::int64_t crossroad_sum() const;  // Σ_{k<n} c_k
  [[nodiscard]] std::int64_t fork_sum() const;       // Σ_{k<n} (c_k + i_k)
};

/// Checks the two-letter recurrences for k = 0 .. n-1, the general
/// recurrence for k = 0 .. n, the two summed identities, and the terminal
/// shape at levels n and n+1. The two-letter identities are NotApplicable
/// unless the alphabet has exactly two symbols.
IdentityReport verify_identities(const PeriodicWord& w);

/// Graphviz DOT text; vertices and edges are labelled by their factors, with
/// ε for the empty vertex.
std::string to_dot(const RauzyGraph& g);

}  // namespace mawkit
