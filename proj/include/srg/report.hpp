#pragma once

#include <cstdint>
#include <string>

#include "srg/classify.hpp"
#include "srg/graph.hpp"

namespace srg {

// Version of the emitted JSON documents and of the tool itself.  The major
// version participates in cache keys, so bumping it invalidates the cache.
inline constexpr const char* kSchemaVersion = "srg-separator/1";
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kToolMajor = 1;

// One classification run as an archivable document: what was asked, the
// exact bound arithmetic, the verdict, and how the run was configured.
struct RunRecord {
    std::string command;       // "classify"
    std::string spec;          // canonical family spec text, empty for file input
    std::string input;         // input file path, empty for family specs
    SrgParams params;
    std::string s, r;          // exact eigenvalue strings
    std::string delsarte, hoffman;
    int64_t omega_target = 0;
    int64_t alpha_target = 0;
    Verdict verdict;
    uint64_t seed = 0;
    int64_t budget_nodes = 0;
    double budget_seconds = 0.0;
    int threads = 1;
    double elapsed_seconds = 0.0;
    std::string timestamp;     // ISO-8601 UTC, may be empty

    bool operator==(const RunRecord& o) const = default;
};

// Serializes to a schema-versioned JSON document with a fixed field order,
// so equal records produce byte-identical text.
std::string record_to_json(const RunRecord& rec);

// Parses a document produced by record_to_json.
// Errors: ParseError (malformed JSON, wrong schema, unknown enum name).
RunRecord record_from_json(const std::string& text);

// Human-readable multi-line rendering of the same record.
std::string record_to_text(const RunRecord& rec);

// Table reports, in the same two forms.
std::string table_to_json(const TableReport& rep);
std::string table_to_text(const TableReport& rep);

// Current time as ISO-8601 UTC ("2026-01-02T03:04:05Z").
std::string iso_timestamp_now();

}  // namespace srg
