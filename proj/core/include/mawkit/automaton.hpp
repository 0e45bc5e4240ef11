#pragma once

// Deciding whether a forbidden system defines a word.
//
// The patterns are compiled into a complete Aho-Corasick automaton. Reading
// a bi-infinite word drives the automaton along a bi-infinite path, and
// because the state is a function of the last max|s| letters read, avoiding
// words and bi-infinite paths through non-terminal states are in bijection.
// Trimming states that cannot sit on such a path leaves the recurrent core;
// its shape gives the verdict.

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "mawkit/antidictionary.hpp"
#include "mawkit/words.hpp"

namespace mawkit {

class PatternAutomaton {
 public:
  struct State {
    Word label;                     // the prefix of some pattern this state stands for
    bool terminal = false;          // some pattern is a suffix of label
    std::vector<std::size_t> next;  // one successor per alphabet symbol
  };

  static constexpr std::size_t kRoot = 0;

  [[nodiscard]] const Alphabet& alphabet() const noexcept { return alphabet_; }
  [[nodiscard]] std::size_t state_count() const noexcept { return states_.size(); }
  [[nodiscard]] const State& state(std::size_t id) const { return states_.at(id); }
  [[nodiscard]] std::size_t step(std::size_t from, Symbol s) const { return states_[from].next[s]; }
  /// State reached from the root after reading `input`.
  [[nodiscard]] std::size_t run(const Word& input) const;

 private:
  friend PatternAutomaton build_automaton(const ForbiddenSystem& system);
  explicit PatternAutomaton(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

  Alphabet alphabet_;
  std::vector<State> states_;
};

/// At most 1 + Σ|s| states; every transition is defined.
PatternAutomaton build_automaton(const ForbiddenSystem& system);

/// alive[q] is true iff q is non-terminal and lies on some bi-infinite path
/// through non-terminal states.
std::vector<bool> recurrent_core(const PatternAutomaton& automaton);

enum class Verdict { None, Unique, Multiple };

std::string_view to_string(Verdict verdict) noexcept;

struct DefinednessVerdict {
  Verdict tag = Verdict::None;
  std::optional<PeriodicWord> word;  // set iff tag == Unique
  // Two distinct avoiding words, set when tag == Multiple.
  std::optional<std::pair<PeriodicWord, PeriodicWord>> witness;
};

DefinednessVerdict classify(const ForbiddenSystem& system);

/// The word `system` defines. Throws ErrorKind::NoWord or
/// ErrorKind::MultipleWords otherwise.
PeriodicWord defined_word(const ForbiddenSystem& system);

/// True iff no element of `system` is a factor of w^∞.
bool avoids(const PeriodicWord& w, const ForbiddenSystem& system);

}  // namespace mawkit
