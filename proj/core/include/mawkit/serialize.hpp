#pragma once

// Text and JSON encodings of the library's results. JSON objects are
// emitted with sorted keys and two-space indentation, so parsing an output
// and dumping it again reproduces it byte for byte.

#include <span>
#include <string>
#include <string_view>

#include "mawkit/antidictionary.hpp"
#include "mawkit/automaton.hpp"
#include "mawkit/extremal.hpp"
#include "mawkit/rauzy.hpp"

namespace mawkit {

/// One word per line.
std::string to_text(const ForbiddenSystem& system);
/// Inverse of to_text(); blank lines and surrounding whitespace are ignored.
ForbiddenSystem forbidden_system_from_text(std::string_view text, const Alphabet& alphabet);

/// {"alphabet": "...", "words": [...]}
std::string to_json(const ForbiddenSystem& system);
ForbiddenSystem forbidden_system_from_json(std::string_view json);

std::string to_json(const DefinednessVerdict& verdict);
std::string to_json(const RauzyGraph& graph);

/// Per-level rows plus the list of checks.
std::string to_json(const IdentityReport& report);
/// Fixed-width per-level table followed by summary lines.
std::string to_table(const IdentityReport& report);

std::string to_json(std::span<const BoundRow> rows);
/// Columns: n, min_k, count_of_minimizers, sample_word, fib_bound_ok.
std::string to_tsv(std::span<const BoundRow> rows);
std::string to_table(std::span<const BoundRow> rows);

std::string to_json(std::span<const TightnessRow> rows);

/// Parses and re-dumps JSON in the canonical layout used above.
std::string canonical_json(std::string_view json);

}  // namespace mawkit
