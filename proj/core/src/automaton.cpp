#include "mawkit/automaton.hpp"

#include <deque>
#include <limits>

#include "mawkit/error.hpp"

namespace mawkit {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Labels of a shortest path from `from` to `to` inside the core, or nullopt.
std::optional<Word> shortest_path(const PatternAutomaton& a, const std::vector<bool>& alive,
                                  std::size_t from, std::size_t to) {
  const std::size_t m = a.alphabet().size();
  std::vector<std::size_t> parent(a.state_count(), kNone);
  std::vector<Symbol> via(a.state_count(), 0);
  std::deque<std::size_t> queue{from};
  parent[from] = from;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    if (u == to) break;
    for (std::size_t s = 0; s < m; ++s) {
      const std::size_t v = a.step(u, static_cast<Symbol>(s));
      if (!alive[v] || parent[v] != kNone) continue;
      parent[v] = u;
      via[v] = static_cast<Symbol>(s);
      queue.push_back(v);
    }
  }
  if (parent[to] == kNone) return std::nullopt;
  Word reversed;
  for (std::size_t v = to; v != from; v = parent[v]) reversed.push_back(via[v]);
  Word path;
  for (std::size_t i = reversed.size(); i-- > 0;) path.push_back(reversed[i]);
  return path;
}

// Two distinct cycles of the core. Each transition that lies on a cycle is
// closed into one by a shortest return path; distinct simple cycles spell
// distinct shift-classes because the state is a function of the past.
std::optional<std::pair<PeriodicWord, PeriodicWord>> find_witness(
    const PatternAutomaton& a, const std::vector<bool>& alive) {
  const std::size_t m = a.alphabet().size();
  std::optional<PeriodicWord> first;
  for (std::size_t q = 0; q < a.state_count(); ++q) {
    if (!alive[q]) continue;
    for (std::size_t s = 0; s < m; ++s) {
      const std::size_t t = a.step(q, static_cast<Symbol>(s));
      if (!alive[t]) continue;
      const auto back = shortest_path(a, alive, t, q);
      if (!back) continue;
      PeriodicWord cycle = canonicalize(Word(1, static_cast<Symbol>(s)) + *back, a.alphabet());
      if (!first) {
        first = std::move(cycle);
      } else if (!(cycle == *first)) {
        return std::make_pair(std::move(*first), std::move(cycle));
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::size_t PatternAutomaton::run(const Word& input) const {
  std::size_t q = kRoot;
  for (std::size_t i = 0; i < input.size(); ++i) q = step(q, input[i]);
  return q;
}

PatternAutomaton build_automaton(const ForbiddenSystem& system) {
  const std::size_t m = system.alphabet().size();
  PatternAutomaton a(system.alphabet());
  auto& states = a.states_;
  states.push_back({Word{}, false, std::vector<std::size_t>(m, kNone)});

  for (const Word& pattern : system.words()) {
    std::size_t q = PatternAutomaton::kRoot;
    for (std::size_t i = 0; i < pattern.size(); ++i) {
      const Symbol s = pattern[i];
      if (states[q].next[s] == kNone) {
        states[q].next[s] = states.size();
        states.push_back({states[q].label + s, false, std::vector<std::size_t>(m, kNone)});
      }
      q = states[q].next[s];
    }
    states[q].terminal = true;
  }

  // Breadth-first failure links; missing transitions borrow from the failure
  // state, which is shallower and therefore already complete.
  std::vector<std::size_t> fail(states.size(), PatternAutomaton::kRoot);
  std::deque<std::size_t> queue;
  for (std::size_t s = 0; s < m; ++s) {
    std::size_t& child = states[PatternAutomaton::kRoot].next[s];
    if (child == kNone) {
      child = PatternAutomaton::kRoot;
    } else {
      queue.push_back(child);
    }
  }
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    if (states[fail[u]].terminal) states[u].terminal = true;
    for (std::size_t s = 0; s < m; ++s) {
      const std::size_t fallback = states[fail[u]].next[s];
      std::size_t& child = states[u].next[s];
      if (child == kNone) {
        child = fallback;
      } else {
        fail[child] = fallback;
        queue.push_back(child);
      }
    }
  }
  return a;
}

std::vector<bool> recurrent_core(const PatternAutomaton& a) {
  const std::size_t count = a.state_count();
  const std::size_t m = a.alphabet().size();
  std::vector<bool> alive(count);
  for (std::size_t q = 0; q < count; ++q) alive[q] = !a.state(q).terminal;

  // Degrees count labelled transitions, so two symbols into the same state
  // are two edges.
  std::vector<std::size_t> in(count, 0), out(count, 0);
  std::vector<std::vector<std::size_t>> predecessors(count);
  for (std::size_t q = 0; q < count; ++q) {
    if (!alive[q]) continue;
    for (std::size_t s = 0; s < m; ++s) {
      const std::size_t t = a.step(q, static_cast<Symbol>(s));
      if (!alive[t]) continue;
      ++out[q];
      ++in[t];
      predecessors[t].push_back(q);
    }
  }

  std::deque<std::size_t> doomed;
  for (std::size_t q = 0; q < count; ++q) {
    if (alive[q] && (in[q] == 0 || out[q] == 0)) doomed.push_back(q);
  }
  while (!doomed.empty()) {
    const std::size_t q = doomed.front();
    doomed.pop_front();
    if (!alive[q]) continue;
    alive[q] = false;
    for (std::size_t s = 0; s < m; ++s) {
      const std::size_t t = a.step(q, static_cast<Symbol>(s));
      if (alive[t] && --in[t] == 0) doomed.push_back(t);
    }
    for (std::size_t p : predecessors[q]) {
      if (alive[p] && --out[p] == 0) doomed.push_back(p);
    }
  }
  return alive;
}

std::string_view to_string(Verdict verdict) noexcept {
  switch (verdict) {
    case Verdict::None:
      return "none";
    case Verdict::Unique:
      return "unique";
    case Verdict::Multiple:
      return "multiple";
  }
  return "none";
}

DefinednessVerdict classify(const ForbiddenSystem& system) {
  const PatternAutomaton a = build_automaton(system);
  const std::vector<bool> alive = recurrent_core(a);
  const std::size_t m = a.alphabet().size();

  std::size_t core_size = 0;
  std::size_t start = kNone;
  std::vector<std::size_t> in(a.state_count(), 0), out(a.state_count(), 0);
  for (std::size_t q = 0; q < a.state_count(); ++q) {
    if (!alive[q]) continue;
    ++core_size;
    if (start == kNone) start = q;
    for (std::size_t s = 0; s < m; ++s) {
      const std::size_t t = a.step(q, static_cast<Symbol>(s));
      if (alive[t]) {
        ++out[q];
        ++in[t];
      }
    }
  }
  if (core_size == 0) return {Verdict::None, std::nullopt, std::nullopt};

  bool simple = true;
  for (std::size_t q = 0; q < a.state_count(); ++q) {
    if (alive[q] && (in[q] != 1 || out[q] != 1)) simple = false;
  }
  if (simple) {
    Word labels;
    std::size_t q = start;
    do {
      for (std::size_t s = 0; s < m; ++s) {
        const std::size_t t = a.step(q, static_cast<Symbol>(s));
        if (alive[t]) {
          labels.push_back(static_cast<Symbol>(s));
          q = t;
          break;
        }
      }
    } while (q != start);
    // A cycle shorter than the core means several disjoint cycles.
    if (labels.size() == core_size) {
      return {Verdict::Unique, canonicalize(labels, a.alphabet()), std::nullopt};
    }
  }
  return {Verdict::Multiple, std::nullopt, find_witness(a, alive)};
}

PeriodicWord defined_word(const ForbiddenSystem& system) {
  DefinednessVerdict verdict = classify(system);
  switch (verdict.tag) {
    case Verdict::Unique:
      return std::move(*verdict.word);
    case Verdict::None:
      throw Error(ErrorKind::NoWord, "no bi-infinite word avoids the forbidden system");
    case Verdict::Multiple:
      break;
  }
  throw Error(ErrorKind::MultipleWords, "more than one bi-infinite word avoids the forbidden system");
}

bool avoids(const PeriodicWord& w, const ForbiddenSystem& system) {
  if (!(system.alphabet() == w.alphabet())) {
    throw Error(ErrorKind::AlphabetMismatch, "forbidden system and word use different alphabets");
  }
  for (const Word& s : system.words()) {
    if (is_factor(w, s)) return false;
  }
  return true;
}

}  // namespace mawkit
