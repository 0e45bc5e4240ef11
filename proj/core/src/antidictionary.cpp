#include "mawkit/antidictionary.hpp"

#include <algorithm>
#include <cstdint>

#include "mawkit/automaton.hpp"
#include "mawkit/error.hpp"

namespace mawkit {
namespace {

constexpr std::uint32_t kUnset = UINT32_MAX;

// Positions 0..n-1 of a periodic word grouped by their length-L factor.
// Two positions share a class iff w^∞ agrees on [i, i+L) and [j, j+L).
struct FactorClasses {
  std::size_t length = 0;
  std::vector<std::uint32_t> of_position;
  std::vector<std::uint32_t> representative;  // first position of each class

  [[nodiscard]] std::size_t count() const { return representative.size(); }
};

FactorClasses empty_factor_classes(std::size_t n) {
  return FactorClasses{0, std::vector<std::uint32_t>(n, 0), {0}};
}

// Length L+1 classes: the length-L class of i paired with the symbol at i+L.
FactorClasses extend(const FactorClasses& cur, const PeriodicWord& w,
                     std::vector<std::uint32_t>& scratch) {
  const std::size_t n = w.length();
  const std::size_t m = w.alphabet().size();
  scratch.assign(cur.count() * m, kUnset);

  FactorClasses next;
  next.length = cur.length + 1;
  next.of_position.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto& slot = scratch[cur.of_position[i] * m + w.at(i + cur.length)];
    if (slot == kUnset) {
      slot = static_cast<std::uint32_t>(next.representative.size());
      next.representative.push_back(static_cast<std::uint32_t>(i));
    }
    next.of_position[i] = slot;
  }
  return next;
}

// present[c * m + a] is set iff (factor of class c)·a is a factor.
void mark_extensions(const FactorClasses& classes, const PeriodicWord& w,
                     std::vector<char>& present) {
  const std::size_t m = w.alphabet().size();
  present.assign(classes.count() * m, 0);
  for (std::size_t i = 0; i < w.length(); ++i) {
    present[classes.of_position[i] * m + w.at(i + classes.length)] = 1;
  }
}

}  // namespace

ForbiddenSystem::ForbiddenSystem(Alphabet alphabet, std::vector<Word> words)
    : alphabet_(std::move(alphabet)), words_(std::move(words)) {
  for (const Word& s : words_) {
    if (s.empty()) throw Error(ErrorKind::InvalidInput, "forbidden words must be nonempty");
    if (!alphabet_.admits(s)) {
      throw Error(ErrorKind::InvalidInput, "forbidden word uses a symbol outside the alphabet");
    }
  }
  std::sort(words_.begin(), words_.end(), ShortLex{});
}

ForbiddenSystem ForbiddenSystem::parse(const Alphabet& alphabet,
                                       std::span<const std::string> words) {
  std::vector<Word> parsed;
  parsed.reserve(words.size());
  for (const auto& text : words) parsed.push_back(alphabet.parse(text));
  return ForbiddenSystem(alphabet, std::move(parsed));
}

ForbiddenSystem ForbiddenSystem::parse(std::span<const std::string> words) {
  std::string all;
  for (const auto& text : words) all += text;
  return parse(Alphabet::infer(all), words);
}

bool ForbiddenSystem::has_duplicates() const noexcept {
  return std::adjacent_find(words_.begin(), words_.end()) != words_.end();
}

std::size_t ForbiddenSystem::max_length() const noexcept {
  return words_.empty() ? 0 : words_.back().size();
}

std::size_t ForbiddenSystem::total_length() const noexcept {
  std::size_t total = 0;
  for (const Word& s : words_) total += s.size();
  return total;
}

std::size_t ForbiddenSystem::count_of_length(std::size_t length) const noexcept {
  return static_cast<std::size_t>(std::count_if(
      words_.begin(), words_.end(), [&](const Word& s) { return s.size() == length; }));
}

ForbiddenSystem ForbiddenSystem::without(std::size_t index) const {
  std::vector<Word> rest = words_;
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(index));
  return ForbiddenSystem(alphabet_, std::move(rest));
}

ForbiddenSystem ForbiddenSystem::with(Word word) const {
  std::vector<Word> more = words_;
  more.push_back(std::move(word));
  return ForbiddenSystem(alphabet_, std::move(more));
}

std::vector<std::string> ForbiddenSystem::rendered() const {
  std::vector<std::string> out;
  out.reserve(words_.size());
  for (const Word& s : words_) out.push_back(alphabet_.render(s));
  return out;
}

ForbiddenSystem minimal_forbidden_words(const PeriodicWord& w) {
  const std::size_t n = w.length();
  const std::size_t m = w.alphabet().size();
  std::vector<Word> found;

  // Length 1: letters of the alphabet that never occur. Their only proper
  // factor is ε.
  std::vector<char> occurs(m, 0);
  for (std::size_t i = 0; i < n; ++i) occurs[w.at(i)] = 1;
  for (std::size_t a = 0; a < m; ++a) {
    if (!occurs[a]) found.emplace_back(1, static_cast<Symbol>(a));
  }

  // Length j >= 2: s = x·a with x a (j-1)-factor, s absent, and the suffix
  // y·a present, where y is x without its first letter. Classes of the
  // (j-2)- and (j-1)-factors are carried from level to level.
  std::vector<std::uint32_t> scratch;
  std::vector<char> shorter_ext, longer_ext;
  FactorClasses shorter = empty_factor_classes(n);
  FactorClasses longer = extend(shorter, w, scratch);

  for (std::size_t j = 2; j <= n + 1; ++j) {
    // Once all n positions are distinct at length j-2 the Rauzy graph is a
    // single cycle and no absent word of length >= j is minimal.
    if (shorter.count() == n) break;

    mark_extensions(shorter, w, shorter_ext);
    mark_extensions(longer, w, longer_ext);
    for (std::size_t x = 0; x < longer.count(); ++x) {
      const std::size_t p = longer.representative[x];
      const std::size_t y = shorter.of_position[(p + 1) % n];
      for (std::size_t a = 0; a < m; ++a) {
        if (shorter_ext[y * m + a] && !longer_ext[x * m + a]) {
          found.push_back(w.window(p, j - 1) + static_cast<Symbol>(a));
        }
      }
    }
    shorter = std::move(longer);
    longer = extend(shorter, w, scratch);
  }
  return ForbiddenSystem(w.alphabet(), std::move(found));
}

std::size_t codelength(const PeriodicWord& w) { return minimal_forbidden_words(w).size(); }

bool is_reduced(const ForbiddenSystem& system, const PeriodicWord& w) {
  if (!(system.alphabet() == w.alphabet())) {
    throw Error(ErrorKind::AlphabetMismatch, "forbidden system and word use different alphabets");
  }
  if (system.has_duplicates()) return false;
  for (const Word& s : system.words()) {
    if (is_factor(w, s)) return false;
    // Factors of w^∞ are closed under taking factors, so the two maximal
    // proper factors decide all of them.
    if (s.size() > 1 &&
        (!is_factor(w, s.prefix(s.size() - 1)) || !is_factor(w, s.suffix(s.size() - 1)))) {
      return false;
    }
  }
  return true;
}

ForbiddenSystem reduce(const ForbiddenSystem& system) {
  return minimal_forbidden_words(defined_word(system));
}

}  // namespace mawkit
