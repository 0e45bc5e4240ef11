#pragma once

// Exhaustive search for the shortest reduced systems among all primitive
// periods, and the Fibonacci bound on the period in terms of codelength.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mawkit/words.hpp"

namespace mawkit {

/// The Lyndon words of length n over `alphabet` in lexicographic order: one
/// canonical representative per shift-class of primitive period-n words.
/// Generated with the Fredricksen-Kessler-Maiorana algorithm.
std::vector<PeriodicWord> enumerate_primitive_words(const Alphabet& alphabet, std::size_t n);

struct SearchOptions {
  /// Upper bound on Σ_{n <= n_max} m^n, the raw size of the search space.
  std::uint64_t budget = std::uint64_t{1} << 26;
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned jobs = 0;
};

/// Σ_{n=1}^{n_max} m^n, saturating at UINT64_MAX.
std::uint64_t search_cost(std::size_t alphabet_size, std::size_t n_max);

/// n <= φ_k. Codelengths beyond the exact Fibonacci range always satisfy it.
bool fibonacci_bound_holds(std::uint64_t period, std::size_t codelength);

struct BoundRow {
  std::size_t period = 0;
  std::size_t min_codelength = 0;
  std::vector<PeriodicWord> extremal_words;  // every minimiser, sorted
  bool fib_bound_ok = false;
};

/// One row per n = 1 .. n_max. Rows do not depend on opts.jobs.
/// Throws ErrorKind::BudgetExceeded when search_cost exceeds opts.budget.
std::vector<BoundRow> codelength_table(const Alphabet& alphabet, std::size_t n_max,
                                       const SearchOptions& opts = {});

/// Largest n <= n_cap with a primitive period-n word of codelength <= k.
/// Throws ErrorKind::Inconclusive when n_cap < φ_k, and BudgetExceeded as above.
std::size_t max_period_for_codelength(const Alphabet& alphabet, std::size_t k, std::size_t n_cap,
                                      const SearchOptions& opts = {});

struct TightnessRow {
  unsigned k = 0;
  std::uint64_t expected_period = 0;  // φ_k
  std::size_t period = 0;
  std::size_t codelength = 0;
  bool ok = false;
};

/// Fibonacci words l_2 .. l_{k_max}: period φ_k and codelength k.
std::vector<TightnessRow> verify_tightness(unsigned k_max);

}  // namespace mawkit
