#include <doctest.h>

#include <algorithm>

#include "mawkit/antidictionary.hpp"
#include "mawkit/automaton.hpp"
#include "mawkit/error.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace mawkit;
using test_support::periodic;
using test_support::forbid;
using Words = std::vector<std::string>;

namespace {

Words non_terminal_labels(const PatternAutomaton& a) {
  Words out;
  for (std::size_t q = 0; q < a.state_count(); ++q) {
    if (!a.state(q).terminal) out.push_back(a.alphabet().render(a.state(q).label));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("automaton construction") {
  const PatternAutomaton a = build_automaton(forbid({"aa", "bb"}));
  CHECK(non_terminal_labels(a) == Words{"", "a", "b"});
  CHECK(a.state_count() <= 1 + 4);

  const PatternAutomaton empty = build_automaton(forbid({}, "a"));
  CHECK(empty.state_count() == 1);
  CHECK_FALSE(empty.state(PatternAutomaton::kRoot).terminal);

  const PatternAutomaton aba = build_automaton(forbid({"aba"}));
  CHECK(non_terminal_labels(aba) == Words{"", "a", "ab"});
}

TEST_CASE("automaton tracks the longest pattern-prefix suffix") {
  const ForbiddenSystem s = forbid({"aab", "abab", "bba"});
  const PatternAutomaton a = build_automaton(s);
  const Alphabet& ab = a.alphabet();
  const Words patterns = s.rendered();
  for (std::size_t len = 0; len <= 8; ++len) {
    for (const auto& input : oracle::all_words("ab", len)) {
      const std::size_t q = a.run(ab.parse(input));
      // Longest suffix of input that is a prefix of some pattern.
      std::string expected;
      for (std::size_t l = std::min<std::size_t>(input.size(), 4); l > 0 && expected.empty(); --l) {
        const std::string tail = input.substr(input.size() - l);
        for (const auto& p : patterns) {
          if (p.compare(0, l, tail) == 0 && p.size() >= l) {
            expected = tail;
            break;
          }
        }
      }
      CHECK(ab.render(a.state(q).label) == expected);
      const bool has_forbidden_suffix = std::any_of(patterns.begin(), patterns.end(), [&](const auto& p) {
        return expected.size() >= p.size() && expected.compare(expected.size() - p.size(), p.size(), p) == 0;
      });
      CHECK(a.state(q).terminal == has_forbidden_suffix);
    }
  }
}

TEST_CASE("classify the worked examples") {
  const DefinednessVerdict ab = classify(forbid({"aa", "bb"}));
  REQUIRE(ab.tag == Verdict::Unique);
  CHECK(ab.word->str() == "ab");

  const DefinednessVerdict multiple = classify(forbid({"aa"}));
  CHECK(multiple.tag == Verdict::Multiple);
  REQUIRE(multiple.witness);
  CHECK_FALSE(multiple.witness->first == multiple.witness->second);
  CHECK(avoids(multiple.witness->first, forbid({"aa"})));
  CHECK(avoids(multiple.witness->second, forbid({"aa"})));

  CHECK(classify(forbid({"a", "b"})).tag == Verdict::None);

  const DefinednessVerdict five = classify(forbid({"bb", "aaa", "aabaa", "babab"}));
  REQUIRE(five.tag == Verdict::Unique);
  CHECK(five.word->str() == "aabab");
}

TEST_CASE("empty systems") {
  CHECK(classify(forbid({}, "a")).tag == Verdict::Unique);
  CHECK(classify(forbid({}, "a")).word->str() == "a");
  CHECK(classify(forbid({}, "ab")).tag == Verdict::Multiple);
  CHECK(classify(forbid({"a"}, "a")).tag == Verdict::None);
}

TEST_CASE("defined_word") {
  CHECK(defined_word(forbid({"aa", "bb"})).str() == "ab");
  CHECK(defined_word(forbid({"b"})).str() == "a");
  CHECK(defined_word(forbid({"aaaa", "bb", "bab", "baab"})).str() == "aaab");
  try {
    defined_word(forbid({"a", "b"}));
    FAIL("expected NoWord");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoWord);
  }
  try {
    defined_word(forbid({"aa"}));
    FAIL("expected MultipleWords");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MultipleWords);
  }
}

TEST_CASE("avoids") {
  CHECK(avoids(periodic("ab"), forbid({"aa", "bb"})));
  CHECK_FALSE(avoids(periodic("ab"), forbid({"ab"})));
  CHECK(avoids(periodic("aabab"), forbid({"aaa"})));
  CHECK_THROWS_AS(avoids(periodic("ab"), forbid({"aa"}, "abc")), Error);
}

TEST_CASE("property: verdicts agree with brute force (total length <= 10, periods <= 12)") {
  const auto classes = oracle::primitive_classes_upto("ab", 12);
  std::size_t checked = 0;
  for (const auto& forbids : oracle::all_systems("ab", 10)) {
    const ForbiddenSystem s = forbid(forbids);
    const DefinednessVerdict v = classify(s);
    const Words found = oracle::avoiders_among(forbids, classes);
    switch (v.tag) {
      case Verdict::None:
        CHECK(found.empty());
        break;
      case Verdict::Unique:
        CHECK(avoids(*v.word, s));
        // A unique avoider has a simple-cycle period bounded by the state count.
        CHECK(found == Words{v.word->str()});
        break;
      case Verdict::Multiple:
        CHECK(found.size() >= 2);
        REQUIRE(v.witness);
        CHECK(avoids(v.witness->first, s));
        CHECK(avoids(v.witness->second, s));
        break;
    }
    ++checked;
  }
  CHECK(checked == 22832);
}

TEST_CASE("property: round trip through the reduced system") {
  for (std::size_t n = 1; n <= 12; ++n) {
    for (const auto& period : oracle::primitive_classes("ab", n)) {
      const PeriodicWord w = periodic(period);
      const DefinednessVerdict v = classify(minimal_forbidden_words(w));
      REQUIRE(v.tag == Verdict::Unique);
      CHECK(*v.word == w);
    }
  }
}

TEST_CASE("property: the recurrent core is trimmed and stable") {
  for (const auto& forbids : oracle::all_systems("ab", 7)) {
    const PatternAutomaton a = build_automaton(forbid(forbids));
    const std::vector<bool> alive = recurrent_core(a);
    for (std::size_t q = 0; q < a.state_count(); ++q) {
      if (!alive[q]) continue;
      CHECK_FALSE(a.state(q).terminal);
      std::size_t out = 0, in = 0;
      for (Symbol s = 0; s < 2; ++s) out += alive[a.step(q, s)] ? 1 : 0;
      for (std::size_t p = 0; p < a.state_count(); ++p) {
        if (!alive[p]) continue;
        for (Symbol s = 0; s < 2; ++s) in += a.step(p, s) == q ? 1 : 0;
      }
      CHECK(in >= 1);
      CHECK(out >= 1);
    }
  }
}

TEST_CASE("property: adding a forbidden word never revives an empty system") {
  const auto all = oracle::all_systems("ab", 6);
  const auto extras = oracle::all_words("ab", 3);
  for (const auto& forbids : all) {
    const ForbiddenSystem s = forbid(forbids);
    if (classify(s).tag != Verdict::None) continue;
    for (const auto& extra : extras) {
      CHECK(classify(s.with(s.alphabet().parse(extra))).tag == Verdict::None);
    }
  }
}
