#include <doctest.h>

#include <random>

#include "mawkit/words.hpp"
#include "mawkit/error.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace mawkit;
using test_support::periodic;

TEST_CASE("canonicalize takes the primitive root in least-rotation form") {
  const Alphabet ab = Alphabet::binary();
  CHECK(canonicalize("abab", ab).str() == "ab");
  CHECK(canonicalize("ba", ab).str() == "ab");
  // Least of the five rotations babba, abbab, bbaba, babab, ababb.
  CHECK(oracle::canonical("babba") == "ababb");
  CHECK(canonicalize("babba", ab).str() == "ababb");
  CHECK(canonicalize("bbbb", ab).str() == "b");
  CHECK(canonicalize("bb", ab).length() == 1);
}

TEST_CASE("canonicalize rejects bad input") {
  const Alphabet ab = Alphabet::binary();
  CHECK_THROWS_AS(canonicalize("", ab), Error);
  try {
    canonicalize("abc", ab);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidInput);
  }
}

TEST_CASE("alphabet construction") {
  CHECK(Alphabet::from_string("ba").to_string() == "ba");
  CHECK(Alphabet::infer("babbc").to_string() == "abc");
  CHECK_THROWS_AS(Alphabet::from_string("aba"), Error);
  CHECK_THROWS_AS(Alphabet::from_string(""), Error);
  CHECK_THROWS_AS(Alphabet::from_string("\xff"), Error);
  CHECK_THROWS_AS(Alphabet::from_string("a\xc3"), Error);

  SUBCASE("multi-byte symbols are single symbols") {
    const Alphabet greek = Alphabet::from_string("αβ");
    CHECK(greek.size() == 2);
    const PeriodicWord w = canonicalize("βαβ", greek);
    CHECK(w.length() == 3);
    CHECK(w.str() == "αββ");
  }

  SUBCASE("explicit order drives comparison") {
    const Alphabet ba = Alphabet::from_string("ba");
    CHECK(canonicalize("ab", ba).str() == "ba");
  }
}

TEST_CASE("factors of a periodic word") {
  const auto text = [](const PeriodicWord& w, std::size_t j) {
    return test_support::render_all(w.alphabet(), factors(w, j));
  };
  CHECK(text(periodic("ab"), 1) == std::vector<std::string>{"a", "b"});
  CHECK(text(periodic("aabab"), 2) == std::vector<std::string>{"aa", "ab", "ba"});
  CHECK(text(periodic("a"), 5) == std::vector<std::string>{"aaaaa"});
  CHECK(text(periodic("aabab"), 0) == std::vector<std::string>{""});
}

TEST_CASE("is_factor") {
  const PeriodicWord w = periodic("aabab");
  const Alphabet& ab = w.alphabet();
  CHECK_FALSE(is_factor(w, ab.parse("babab")));
  CHECK(is_factor(w, ab.parse("abaab")));
  CHECK(is_factor(w, Word{}));
  CHECK(is_factor(w, ab.parse("aababaababaab")));
}

TEST_CASE("fibonacci numbers and words") {
  CHECK(fibonacci_number(0) == 1);
  CHECK(fibonacci_number(1) == 1);
  CHECK(fibonacci_number(4) == 5);
  CHECK(fibonacci_number(7) == 21);
  CHECK(fibonacci_number(18) == 4181);
  CHECK(fibonacci_number(90) == 4660046610375530309ULL);
  CHECK_THROWS_AS(fibonacci_number(91), Error);

  const Alphabet ab = Alphabet::binary();
  CHECK(ab.render(fibonacci_string(2)) == "ba");
  CHECK(ab.render(fibonacci_string(3)) == "bab");
  CHECK(ab.render(fibonacci_string(5)) == "babbabab");
  CHECK(fibonacci_word(2) == canonicalize("ba", ab));
  CHECK(fibonacci_word(3) == canonicalize("bab", ab));
  CHECK(fibonacci_word(5).length() == 8);
  CHECK(fibonacci_word(5).str() == oracle::canonical("babbabab"));
}

TEST_CASE("property: canonicalize agrees with brute force and is rotation invariant") {
  const Alphabet ab = Alphabet::binary();
  for (std::size_t n = 1; n <= 10; ++n) {
    for (const auto& raw : oracle::all_words("ab", n)) {
      const PeriodicWord c = canonicalize(raw, ab);
      REQUIRE(c.str() == oracle::canonical(raw));
      CHECK(canonicalize(c.period(), ab) == c);
      const std::string rotated = raw.substr(1) + raw.substr(0, 1);
      CHECK(canonicalize(rotated, ab) == c);
    }
  }

  std::mt19937 rng(7);
  const Alphabet abc = Alphabet::from_string("abc");
  for (int trial = 0; trial < 300; ++trial) {
    std::string raw(1 + rng() % 30, 'a');
    for (char& ch : raw) ch = static_cast<char>('a' + rng() % 3);
    const std::size_t shift = rng() % raw.size();
    const std::string rotated = raw.substr(shift) + raw.substr(0, shift);
    CHECK(canonicalize(raw, abc).str() == oracle::canonical(raw));
    CHECK(canonicalize(rotated, abc) == canonicalize(raw, abc));
  }
}

TEST_CASE("property: factor sets project and plateau at n") {
  for (std::size_t n = 1; n <= 9; ++n) {
    for (const auto& period : oracle::primitive_classes("ab", n)) {
      const PeriodicWord w = periodic(period);
      std::size_t previous = 1;
      for (std::size_t j = 0; j <= n + 2; ++j) {
        const auto cur = factors(w, j);
        const auto next = factors(w, j + 1);
        for (const Word& f : next) {
          CHECK(cur.contains(f.prefix(j)));
          CHECK(cur.contains(f.suffix(j)));
        }
        CHECK(cur.size() >= previous);
        CHECK(cur.size() <= n);
        if (j >= n) CHECK(cur.size() == n);
        CHECK(test_support::render_all(w.alphabet(), cur).size() == oracle::factors(period, j).size());
        previous = cur.size();
      }
    }
  }
}

TEST_CASE("property: |l_k| = phi_k") {
  for (unsigned k = 0; k <= 25; ++k) {
    CHECK(fibonacci_string(k).size() == fibonacci_number(k));
    CHECK(fibonacci_word(k).length() == fibonacci_number(k));
  }
}
