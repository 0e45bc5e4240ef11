#pragma once

#include <string>
#include <vector>

#include "mawkit/mawkit.hpp"

namespace test_support {

inline mawkit::PeriodicWord periodic(const std::string& raw, const std::string& alphabet = "ab") {
  return mawkit::canonicalize(raw, mawkit::Alphabet::from_string(alphabet));
}

inline mawkit::ForbiddenSystem forbid(const std::vector<std::string>& words,
                                      const std::string& alphabet = "ab") {
  return mawkit::ForbiddenSystem::parse(mawkit::Alphabet::from_string(alphabet), words);
}

inline std::vector<std::string> strings(const mawkit::ForbiddenSystem& s) { return s.rendered(); }

template <typename Container>
std::vector<std::string> render_all(const mawkit::Alphabet& a, const Container& words) {
  std::vector<std::string> out;
  for (const auto& w : words) out.push_back(a.render(w));
  return out;
}

}  // namespace test_support
