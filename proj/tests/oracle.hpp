#pragma once

// Brute-force reference implementations used only by the tests. Everything
// here works on plain std::string over single-byte symbols and goes straight
// from the definitions, sharing no code with the library. Alphabets are
// assumed to be listed in ascending character order ("ab", "abc").

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace oracle {

bool is_primitive(const std::string& w);
/// Minimum over all rotations of the primitive root.
std::string canonical(const std::string& w);

/// Length-`len` factors of period^∞, read symbol by symbol modulo n.
std::set<std::string> factors(const std::string& period, std::size_t len);
bool occurs(const std::string& period, const std::string& s);

/// All m^len words over `alphabet`, in lexicographic order of alphabet positions.
std::vector<std::string> all_words(const std::string& alphabet, std::size_t len);

/// Every word of length 1..n+1 that is absent while all of its proper
/// factors are present. Sorted by length, then by alphabet position.
std::vector<std::string> minimal_absent_words(const std::string& period,
                                              const std::string& alphabet);

/// One canonical representative per primitive shift-class of period n,
/// found by generating all m^n words.
std::vector<std::string> primitive_classes(const std::string& alphabet, std::size_t n);

/// Number of aperiodic necklaces (1/n) Σ_{d|n} μ(d) m^{n/d}.
std::uint64_t aperiodic_necklace_count(std::uint64_t m, std::uint64_t n);

/// primitive_classes for n = 1..max_period, concatenated.
std::vector<std::string> primitive_classes_upto(const std::string& alphabet,
                                                std::size_t max_period);
/// The members of `classes` that contain no element of `forbids`.
std::vector<std::string> avoiders_among(const std::vector<std::string>& forbids,
                                        const std::vector<std::string>& classes);

/// Canonical periods <= max_period of the periodic words avoiding `forbids`.
std::vector<std::string> avoiders(const std::vector<std::string>& forbids,
                                  const std::string& alphabet, std::size_t max_period);

/// Every set of distinct nonempty words over `alphabet` with total length
/// at most `max_total`, including the empty set.
std::vector<std::vector<std::string>> all_systems(const std::string& alphabet,
                                                  std::size_t max_total);

/// Symbol positions in `alphabet` for ordering comparisons.
bool shortlex_less(const std::string& a, const std::string& b, const std::string& alphabet);

}  // namespace oracle
