#pragma once

/**
 * @file serialize.hpp
 * @brief Stable machine-readable encodings of the library's result types.
 *
 * JSON field names and orderings here are a compatibility contract; the
 * golden-file tests pin them byte for byte. Integers above 2^53 are
 * emitted as decimal strings so double-based JSON parsers cannot corrupt
 * them.
 */

#include <optional>
#include <string>

#include <json.hpp>

#include "sextic/exclusion.hpp"
#include "sextic/mod_closed_form.hpp"
#include "sextic/sieve.hpp"
#include "sextic/verify.hpp"

namespace sextic {

using ordered_json = nlohmann::ordered_json;

/// Largest integer every double-based parser keeps exact.
inline constexpr u64 json_exact_max = u64(1) << 53;

/// v as a JSON number, or as a decimal string above 2^53.
ordered_json json_u64(u64 v);

const char* outcome_name(Outcome outcome);       // "prime" / "composite"
const char* engine_name(Engine engine);          // "sound" / "paper-literal"
const char* algorithm_name(SieveAlgorithm algo); // "wheel6" / "eratosthenes"

ordered_json witness_json(const ExclusionWitness& w);

/// Verdict plus the oracle's answer when one was consulted.
ordered_json verdict_json(const Verdict& v, std::optional<Outcome> oracle);

ordered_json disagreement_json(const Disagreement& d);

ordered_json excluded_entry_json(u64 m, const ExcludedEntry& entry);

ordered_json family_json(const LinearFamily& fam, u64 member_count);

inline constexpr const char* stats_csv_header = "algorithm,lo,hi,candidates,marks,primes";

std::string stats_csv_row(const SieveStats& stats, SieveRange range);

} // namespace sextic
