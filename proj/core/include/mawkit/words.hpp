#pragma once

// Alphabets, finite words, and canonical periodic (bi-infinite) words.
//
// Words are stored as strings of symbol codes: code i stands for the i-th
// symbol of the alphabet, so plain lexicographic comparison of the codes is
// the order the alphabet prescribes. Text enters and leaves through
// Alphabet::parse() and Alphabet::render(), one Unicode code point per symbol.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace mawkit {

using Symbol = unsigned char;

/// A finite word over some alphabet, held as symbol codes.
class Word {
 public:
  static constexpr std::size_t npos = std::string::npos;

  Word() = default;
  explicit Word(std::string codes) : codes_(std::move(codes)) {}
  Word(std::size_t count, Symbol s) : codes_(count, static_cast<char>(s)) {}

  [[nodiscard]] std::size_t size() const noexcept { return codes_.size(); }
  [[nodiscard]] bool empty() const noexcept { return codes_.empty(); }
  [[nodiscard]] Symbol operator[](std::size_t i) const {
    return static_cast<Symbol>(codes_[i]);
  }
  [[nodiscard]] Symbol front() const { return static_cast<Symbol>(codes_.front()); }
  [[nodiscard]] Symbol back() const { return static_cast<Symbol>(codes_.back()); }

  [[nodiscard]] Word substr(std::size_t pos, std::size_t len = npos) const {
    return Word(codes_.substr(pos, len));
  }
  [[nodiscard]] Word prefix(std::size_t len) const { return substr(0, len); }
  [[nodiscard]] Word suffix(std::size_t len) const {
    return substr(size() - len, len);
  }
  [[nodiscard]] bool contains(const Word& other) const {
    return codes_.find(other.codes_) != std::string::npos;
  }

  void push_back(Symbol s) { codes_.push_back(static_cast<char>(s)); }
  Word& operator+=(const Word& other) {
    codes_ += other.codes_;
    return *this;
  }
  friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }
  friend Word operator+(Word lhs, Symbol s) {
    lhs.push_back(s);
    return lhs;
  }

  [[nodiscard]] std::string_view codes() const noexcept { return codes_; }

  friend bool operator==(const Word&, const Word&) = default;
  // std::string compares characters as unsigned char, i.e. by code.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return a.codes_.compare(b.codes_) <=> 0;
  }

 private:
  std::string codes_;
};

/// Length first, then lexicographic. The order forbidden systems are kept in.
struct ShortLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Ordered set of distinct symbols, each a single Unicode code point.
class Alphabet {
 public:
  static constexpr std::size_t kMaxSize = 255;

  Alphabet() = default;

  /// Symbols in the order given. Throws on duplicates, empty input or bad UTF-8.
  static Alphabet from_string(std::string_view utf8);
  /// Sorted set of the code points that occur in `utf8`.
  static Alphabet infer(std::string_view utf8);
  static Alphabet binary() { return from_string("ab"); }

  [[nodiscard]] std::size_t size() const noexcept { return symbols_.size(); }
  [[nodiscard]] char32_t symbol(Symbol code) const { return symbols_.at(code); }
  [[nodiscard]] std::optional<Symbol> code(char32_t symbol) const;

  /// Text to codes. Throws ErrorKind::InvalidInput for symbols outside the alphabet.
  [[nodiscard]] Word parse(std::string_view utf8) const;
  [[nodiscard]] std::string render(const Word& word) const;
  [[nodiscard]] std::string to_string() const;
  /// True when every code of `word` is below size().
  [[nodiscard]] bool admits(const Word& word) const noexcept;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  explicit Alphabet(std::u32string symbols) : symbols_(std::move(symbols)) {}
  std::u32string symbols_;
};

/// The shift-class of a periodic bi-infinite word u^∞, represented by the
/// least rotation of its primitive root. Build one with canonicalize().
class PeriodicWord {
 public:
  [[nodiscard]] const Alphabet& alphabet() const noexcept { return alphabet_; }
  [[nodiscard]] const Word& period() const noexcept { return period_; }
  /// Least period n.
  [[nodiscard]] std::size_t length() const noexcept { return period_.size(); }
  /// Symbol at position i of the bi-infinite word (positions taken mod n).
  [[nodiscard]] Symbol at(std::size_t i) const { return period_[i % period_.size()]; }
  /// Factor of length `len` starting at position `pos`.
  [[nodiscard]] Word window(std::size_t pos, std::size_t len) const;
  [[nodiscard]] std::string str() const { return alphabet_.render(period_); }

  friend bool operator==(const PeriodicWord&, const PeriodicWord&) = default;

 private:
  friend PeriodicWord canonicalize(const Word& raw, const Alphabet& alphabet);
  PeriodicWord(Alphabet alphabet, Word period)
      : alphabet_(std::move(alphabet)), period_(std::move(period)) {}

  Alphabet alphabet_;
  Word period_;
};

/// Primitive root of `raw` in least-rotation form.
/// Throws ErrorKind::InvalidInput on empty input or codes outside the alphabet.
PeriodicWord canonicalize(const Word& raw, const Alphabet& alphabet);
PeriodicWord canonicalize(std::string_view raw_utf8, const Alphabet& alphabet);

/// Shortest u with raw = u^t.
Word primitive_root(const Word& raw);
/// Lexicographically least rotation.
Word least_rotation(const Word& raw);

/// Distinct factors of length `length` of w^∞. {ε} for length 0.
std::set<Word> factors(const PeriodicWord& w, std::size_t length);
bool is_factor(const PeriodicWord& w, const Word& s);

/// φ_0 = φ_1 = 1, φ_k = φ_{k-1} + φ_{k-2}. Exact for k <= kMaxFibonacciIndex.
inline constexpr unsigned kMaxFibonacciIndex = 90;
std::uint64_t fibonacci_number(unsigned k);

/// l_0 = a, l_1 = b, l_{k+1} = l_k l_{k-1}, over the alphabet {a, b}.
Word fibonacci_string(unsigned k);
PeriodicWord fibonacci_word(unsigned k);

}  // namespace mawkit

template <>
struct std::hash<mawkit::Word> {
  std::size_t operator()(const mawkit::Word& w) const noexcept {
    return std::hash<std::string_view>{}(w.codes());
  }
};
