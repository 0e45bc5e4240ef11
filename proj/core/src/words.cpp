#include "mawkit/words.hpp"

#include <algorithm>
#include <vector>

#include "mawkit/error.hpp"

namespace mawkit {
namespace {

std::u32string decode_utf8(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const auto lead = static_cast<unsigned char>(text[i]);
    std::size_t extra = 0;
    char32_t cp = 0;
    if (lead < 0x80) {
      cp = lead;
    } else if ((lead & 0xE0) == 0xC0) {
      extra = 1;
      cp = lead & 0x1F;
    } else if ((lead & 0xF0) == 0xE0) {
      extra = 2;
      cp = lead & 0x0F;
    } else if ((lead & 0xF8) == 0xF0) {
      extra = 3;
      cp = lead & 0x07;
    } else {
      throw Error(ErrorKind::InvalidInput, "invalid UTF-8 lead byte");
    }
    if (i + extra >= text.size()) {
      throw Error(ErrorKind::InvalidInput, "truncated UTF-8 sequence");
    }
    for (std::size_t k = 1; k <= extra; ++k) {
      const auto cont = static_cast<unsigned char>(text[i + k]);
      if ((cont & 0xC0) != 0x80) {
        throw Error(ErrorKind::InvalidInput, "invalid UTF-8 continuation byte");
      }
      cp = (cp << 6) | (cont & 0x3F);
    }
    static constexpr char32_t kMinForLength[] = {0, 0x80, 0x800, 0x10000};
    if (cp < kMinForLength[extra] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      throw Error(ErrorKind::InvalidInput, "invalid UTF-8 code point");
    }
    out.push_back(cp);
    i += extra + 1;
  }
  return out;
}

void encode_utf8(char32_t cp, std::string& out) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

// Length of the longest proper border of s, i.e. the KMP failure value at |s|.
std::size_t longest_border(std::string_view s) {
  std::vector<std::size_t> fail(s.size() + 1, 0);
  std::size_t k = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    while (k > 0 && s[i] != s[k]) k = fail[k];
    if (s[i] == s[k]) ++k;
    fail[i + 1] = k;
  }
  return s.empty() ? 0 : fail[s.size()];
}

}  // namespace

Alphabet Alphabet::from_string(std::string_view utf8) {
  std::u32string symbols = decode_utf8(utf8);
  if (symbols.empty()) {
    throw Error(ErrorKind::InvalidInput, "alphabet must contain at least one symbol");
  }
  if (symbols.size() > kMaxSize) {
    throw Error(ErrorKind::InvalidInput, "alphabet has more than 255 symbols");
  }
  std::u32string sorted = symbols;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorKind::InvalidInput, "alphabet contains a duplicate symbol");
  }
  return Alphabet(std::move(symbols));
}

Alphabet Alphabet::infer(std::string_view utf8) {
  std::u32string symbols = decode_utf8(utf8);
  std::sort(symbols.begin(), symbols.end());
  symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
  if (symbols.empty()) {
    throw Error(ErrorKind::InvalidInput, "cannot infer an alphabet from empty input");
  }
  if (symbols.size() > kMaxSize) {
    throw Error(ErrorKind::InvalidInput, "alphabet has more than 255 symbols");
  }
  return Alphabet(std::move(symbols));
}

std::optional<Symbol> Alphabet::code(char32_t symbol) const {
  const auto pos = symbols_.find(symbol);
  if (pos == std::u32string::npos) return std::nullopt;
  return static_cast<Symbol>(pos);
}

Word Alphabet::parse(std::string_view utf8) const {
  Word word;
  for (char32_t cp : decode_utf8(utf8)) {
    const auto c = code(cp);
    if (!c) {
      std::string sym;
      encode_utf8(cp, sym);
      throw Error(ErrorKind::InvalidInput,
                  "symbol '" + sym + "' is not in alphabet '" + to_string() + "'");
    }
    word.push_back(*c);
  }
  return word;
}

std::string Alphabet::render(const Word& word) const {
  std::string out;
  out.reserve(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) encode_utf8(symbols_.at(word[i]), out);
  return out;
}

std::string Alphabet::to_string() const {
  std::string out;
  for (char32_t cp : symbols_) encode_utf8(cp, out);
  return out;
}

bool Alphabet::admits(const Word& word) const noexcept {
  return std::all_of(word.codes().begin(), word.codes().end(),
                     [&](char c) { return static_cast<Symbol>(c) < symbols_.size(); });
}

Word PeriodicWord::window(std::size_t pos, std::size_t len) const {
  Word out;
  for (std::size_t i = 0; i < len; ++i) out.push_back(at(pos + i));
  return out;
}

Word primitive_root(const Word& raw) {
  const std::size_t n = raw.size();
  const std::size_t p = n - longest_border(raw.codes());
  return (p < n && n % p == 0) ? raw.prefix(p) : raw;
}

Word least_rotation(const Word& raw) {
  // Two-candidate scan over the doubled word; O(n).
  const std::size_t n = raw.size();
  if (n <= 1) return raw;
  const std::string doubled = std::string(raw.codes()) + std::string(raw.codes());
  auto sym = [&](std::size_t i) { return static_cast<unsigned char>(doubled[i]); };
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const auto a = sym(i + k), b = sym(j + k);
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return Word(doubled.substr(std::min(i, j), n));
}

PeriodicWord canonicalize(const Word& raw, const Alphabet& alphabet) {
  if (raw.empty()) throw Error(ErrorKind::InvalidInput, "periodic word needs a nonempty period");
  if (!alphabet.admits(raw)) {
    throw Error(ErrorKind::InvalidInput, "word uses a symbol outside the alphabet");
  }
  return PeriodicWord(alphabet, least_rotation(primitive_root(raw)));
}

PeriodicWord canonicalize(std::string_view raw_utf8, const Alphabet& alphabet) {
  return canonicalize(alphabet.parse(raw_utf8), alphabet);
}

std::set<Word> factors(const PeriodicWord& w, std::size_t length) {
  const std::size_t n = w.length();
  const std::size_t copies = (length + n - 1) / n + 1;
  std::string text;
  text.reserve(copies * n);
  for (std::size_t c = 0; c < copies; ++c) text += w.period().codes();

  std::set<Word> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace(text.substr(i, length));
  return out;
}

bool is_factor(const PeriodicWord& w, const Word& s) {
  if (s.empty()) return true;
  const std::size_t n = w.length();
  // Every occurrence in w^∞ starts at some i < n and ends before i + |s|.
  const std::size_t copies = (s.size() + n - 1) / n + 1;
  std::string text;
  text.reserve(copies * n);
  for (std::size_t c = 0; c < copies; ++c) text += w.period().codes();
  return text.find(s.codes()) != std::string::npos;
}

std::uint64_t fibonacci_number(unsigned k) {
  if (k > kMaxFibonacciIndex) {
    throw Error(ErrorKind::Overflow, "fibonacci index " + std::to_string(k) +
                                         " exceeds " + std::to_string(kMaxFibonacciIndex));
  }
  std::uint64_t prev = 1, cur = 1;
  for (unsigned i = 2; i <= k; ++i) {
    const std::uint64_t next = prev + cur;
    prev = cur;
    cur = next;
  }
  return cur;
}

Word fibonacci_string(unsigned k) {
  constexpr std::uint64_t kMaxLength = std::uint64_t{1} << 28;
  if (k > kMaxFibonacciIndex || fibonacci_number(k) > kMaxLength) {
    throw Error(ErrorKind::Overflow, "fibonacci word l_" + std::to_string(k) + " is too long");
  }
  Word older(1, 0), newer(1, 1);  // l_0 = a, l_1 = b
  if (k == 0) return older;
  for (unsigned i = 2; i <= k; ++i) {
    Word next = newer + older;
    older = std::move(newer);
    newer = std::move(next);
  }
  return newer;
}

PeriodicWord fibonacci_word(unsigned k) {
  return canonicalize(fibonacci_string(k), Alphabet::binary());
}

}  // namespace mawkit
