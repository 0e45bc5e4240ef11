#pragma once

// Forbidden systems and the reduced system of a periodic word: the set of
// its minimal absent words.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mawkit/words.hpp"

namespace mawkit {

/// A finite collection of nonempty forbidden words, kept in ShortLex order.
///
/// Duplicates are kept rather than merged so that is_reduced() can see them.
class ForbiddenSystem {
 public:
  explicit ForbiddenSystem(Alphabet alphabet, std::vector<Word> words = {});

  /// Parses each entry with `alphabet`. Throws ErrorKind::InvalidInput on
  /// empty entries or unknown symbols.
  static ForbiddenSystem parse(const Alphabet& alphabet, std::span<const std::string> words);
  /// Same, with the alphabet inferred from the symbols used.
  static ForbiddenSystem parse(std::span<const std::string> words);

  [[nodiscard]] const Alphabet& alphabet() const noexcept { return alphabet_; }
  [[nodiscard]] std::span<const Word> words() const noexcept { return words_; }
  [[nodiscard]] std::size_t size() const noexcept { return words_.size(); }
  [[nodiscard]] bool empty() const noexcept { return words_.empty(); }
  [[nodiscard]] bool has_duplicates() const noexcept;
  [[nodiscard]] std::size_t max_length() const noexcept;
  [[nodiscard]] std::size_t total_length() const noexcept;
  [[nodiscard]] std::size_t count_of_length(std::size_t length) const noexcept;

  /// Copy with the word at `index` removed.
  [[nodiscard]] ForbiddenSystem without(std::size_t index) const;
  /// Copy with `word` added.
  [[nodiscard]] ForbiddenSystem with(Word word) const;

  [[nodiscard]] std::vector<std::string> rendered() const;

  friend bool operator==(const ForbiddenSystem&, const ForbiddenSystem&) = default;

 private:
  Alphabet alphabet_;
  std::vector<Word> words_;
};

/// All minimal absent words of w^∞ over w's alphabet. Their lengths are at
/// most n + 1.
ForbiddenSystem minimal_forbidden_words(const PeriodicWord& w);

/// Size of the reduced system, i.e. the least number of forbidden words that
/// define w.
std::size_t codelength(const PeriodicWord& w);

/// True iff S has no duplicates, no element of S is a factor of w, and every
/// proper factor of every element is. Does not check that S defines w.
/// Throws ErrorKind::AlphabetMismatch when the alphabets differ.
bool is_reduced(const ForbiddenSystem& system, const PeriodicWord& w);

/// The reduced system equivalent to `system`. Throws ErrorKind::NoWord or
/// ErrorKind::MultipleWords when `system` does not define a single word.
ForbiddenSystem reduce(const ForbiddenSystem& system);

}  // namespace mawkit
