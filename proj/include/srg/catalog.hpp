#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "srg/families.hpp"
#include "srg/graph.hpp"

namespace srg {

// Where a stored clique/coclique number comes from.
enum class Provenance { PaperTable, PaperProse, SolverDerived };

struct KnownValue {
    int64_t value = 0;
    Provenance provenance = Provenance::PaperTable;
};

// Shading class of a stored table row: Light marks a fractional ratio bound,
// Dark marks integral bounds with at least one recorded value below its
// bound, None means both bounds are attained.
enum class GreyClass { None, Light, Dark };

struct CatalogEntry {
    FamilySpec spec;
    std::string name;
    std::string source;  // literature citation for the row
    SrgParams params;
    int64_t s = 0;  // stored eigenvalues (all stored rows have integer spectrum)
    int64_t r = 0;
    std::string delsarte;  // stored bound strings, lowest terms
    std::string hoffman;
    std::optional<KnownValue> omega;
    std::optional<KnownValue> alpha;
    GreyClass grey = GreyClass::None;
};

// Exact parameters for any family spec (including parameter-only families).
// Errors: InvalidParams, UnknownFamily, TooLarge.
SrgParams params_for(const FamilySpec& spec);

// Known clique/coclique numbers with provenance, when the literature or a
// frozen solver run pins them; nullopt otherwise.
std::optional<KnownValue> known_omega(const FamilySpec& spec);
std::optional<KnownValue> known_alpha(const FamilySpec& spec);

// The 53 stored non-family rows.  Every stored eigenvalue and bound column is
// recomputed from (nu,k,lambda,mu) at load; any mismatch throws
// Error("CorruptTableData").  Result is cached after the first load.
const std::vector<CatalogEntry>& table2_rows();

// Ids of the rows recorded as separating (the stored separating sublist).
const std::vector<int>& table1_rows();

struct Table6Row {
    int id = 0;
    SrgParams params;
    int64_t omega = 0;
    int64_t alpha = 0;
};
// The six rows with search-determined values.
const std::vector<Table6Row>& table6_rows();

const CatalogEntry& table2_row(int id);  // Errors: IndexOutOfRange

// Directory holding the catalog data file.  Resolution order: explicit
// set_data_dir override, SRGSEP_DATA_DIR environment variable, compiled-in
// repo path.  set_data_dir is meant for process start-up (CLI flag); it is
// not synchronized against concurrent table readers.
std::string data_dir();
void set_data_dir(const std::string& dir);

}  // namespace srg
