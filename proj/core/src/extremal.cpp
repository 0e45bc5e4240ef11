#include "mawkit/extremal.hpp"

#include <algorithm>
#include <limits>
#include <thread>

#include "mawkit/antidictionary.hpp"
#include "mawkit/error.hpp"

namespace mawkit {
namespace {

unsigned resolve_jobs(unsigned jobs) {
  if (jobs != 0) return jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Codelength of every word; workers take interleaved indices and write to
// their own slots, so the result is independent of the worker count.
std::vector<std::size_t> codelengths(const std::vector<PeriodicWord>& words, unsigned jobs) {
  std::vector<std::size_t> out(words.size());
  const std::size_t workers = std::min<std::size_t>(resolve_jobs(jobs), words.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < words.size(); ++i) out[i] = codelength(words[i]);
    return out;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < words.size(); i += workers) out[i] = codelength(words[i]);
    });
  }
  for (auto& th : pool) th.join();
  return out;
}

void check_budget(std::size_t alphabet_size, std::size_t n_max, const SearchOptions& opts) {
  const std::uint64_t cost = search_cost(alphabet_size, n_max);
  if (cost > opts.budget) {
    throw Error(ErrorKind::BudgetExceeded,
                "exhaustive search over " + std::to_string(alphabet_size) + " symbols up to n=" +
                    std::to_string(n_max) + " costs " + std::to_string(cost) +
                    " words, budget is " + std::to_string(opts.budget));
  }
}

}  // namespace

std::vector<PeriodicWord> enumerate_primitive_words(const Alphabet& alphabet, std::size_t n) {
  std::vector<PeriodicWord> out;
  if (n == 0) return out;
  const auto m = static_cast<int>(alphabet.size());

  // Lyndon words of length <= n in lexicographic order; keep those of length n.
  std::vector<int> w{-1};
  while (!w.empty()) {
    ++w.back();
    if (w.size() == n) {
      Word word;
      for (int s : w) word.push_back(static_cast<Symbol>(s));
      out.push_back(canonicalize(word, alphabet));
    }
    const std::size_t lyndon_length = w.size();
    while (w.size() < n) w.push_back(w[w.size() - lyndon_length]);
    while (!w.empty() && w.back() == m - 1) w.pop_back();
  }
  return out;
}

std::uint64_t search_cost(std::size_t alphabet_size, std::size_t n_max) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0, power = 1;
  for (std::size_t n = 1; n <= n_max; ++n) {
    if (alphabet_size != 0 && power > kMax / alphabet_size) return kMax;
    power *= alphabet_size;
    if (total > kMax - power) return kMax;
    total += power;
  }
  return total;
}

bool fibonacci_bound_holds(std::uint64_t period, std::size_t codelength) {
  if (codelength > kMaxFibonacciIndex) return true;
  return period <= fibonacci_number(static_cast<unsigned>(codelength));
}

std::vector<BoundRow> codelength_table(const Alphabet& alphabet, std::size_t n_max,
                                       const SearchOptions& opts) {
  check_budget(alphabet.size(), n_max, opts);
  std::vector<BoundRow> rows;
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::vector<PeriodicWord> words = enumerate_primitive_words(alphabet, n);
    const std::vector<std::size_t> lengths = codelengths(words, opts.jobs);

    BoundRow row;
    row.period = n;
    if (words.empty()) {  // unary alphabet, n >= 2
      row.fib_bound_ok = true;
      rows.push_back(std::move(row));
      continue;
    }
    row.min_codelength = *std::min_element(lengths.begin(), lengths.end());
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (lengths[i] == row.min_codelength) row.extremal_words.push_back(std::move(words[i]));
    }
    row.fib_bound_ok = std::all_of(lengths.begin(), lengths.end(), [&](std::size_t k) {
      return fibonacci_bound_holds(n, k);
    });
    rows.push_back(std::move(row));
  }
  return rows;
}

std::size_t max_period_for_codelength(const Alphabet& alphabet, std::size_t k, std::size_t n_cap,
                                      const SearchOptions& opts) {
  if (k > kMaxFibonacciIndex || n_cap < fibonacci_number(static_cast<unsigned>(k))) {
    throw Error(ErrorKind::Inconclusive, "search cap " + std::to_string(n_cap) +
                                             " is below phi_" + std::to_string(k));
  }
  check_budget(alphabet.size(), n_cap, opts);
  for (std::size_t n = n_cap; n >= 1; --n) {
    const auto lengths = codelengths(enumerate_primitive_words(alphabet, n), opts.jobs);
    if (std::any_of(lengths.begin(), lengths.end(), [&](std::size_t c) { return c <= k; })) {
      return n;
    }
  }
  return 0;
}

std::vector<TightnessRow> verify_tightness(unsigned k_max) {
  std::vector<TightnessRow> rows;
  for (unsigned k = 2; k <= k_max; ++k) {
    const PeriodicWord w = fibonacci_word(k);
    TightnessRow row;
    row.k = k;
    row.expected_period = fibonacci_number(k);
    row.period = w.length();
    row.codelength = codelength(w);
    row.ok = row.period == row.expected_period && row.codelength == k;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace mawkit
