#pragma once

#include <optional>
#include <string>

#include "srg/report.hpp"
#include "srg/solver.hpp"

namespace srg {

// Cache directory resolution: an explicit value wins, otherwise the
// SRGSEP_CACHE_DIR environment variable, otherwise empty (caching disabled).
std::string resolve_cache_dir(const std::string& flag_value);

// Stable key for a classification run: canonical spec text, parameters and
// the tool's major version (so a version bump invalidates old entries).
// File-input runs are never cached: parameters do not determine the graph.
std::string cache_key(const std::string& spec_text, const SrgParams& params);

// Returns the stored record when it may be served.  Decided verdicts and
// parameter-only open problems are final and served regardless of budget;
// budget-exhausted records are served only for the same budget and seed, so
// a larger budget re-runs the search.  Corrupt entries are ignored with a
// CorruptCacheEntry warning on stderr, never an error.
std::optional<RunRecord> cache_get(const std::string& dir, const std::string& key,
                                   const Budget& budget, uint64_t seed);

// Stores the record under the key, creating the directory if needed.
// Errors: IoError (directory or file cannot be written).
void cache_put(const std::string& dir, const std::string& key, const RunRecord& rec);

}  // namespace srg
