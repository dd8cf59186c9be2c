#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "srg/graph.hpp"

namespace srg {

// Graph family identifiers.  CatalogRow addresses one of the 53 stored
// non-family rows; DualPolarHalf5, E6 and Alternating are parameter-only
// (no explicit generator).
enum class Family {
    Triangular,
    Grid,
    Paley,
    Peisert,
    VanLintSchrijver,
    Grassmann,
    BilinearForms,
    PolarCollinearity,
    NO,
    NU,
    VOplus,
    VOminus,
    VSz,
    BvLS,
    HoffmanSingleton,
    Gewirtz,
    M22_77,
    HigmanSims,
    DualPolarHalf5,
    E6,
    Alternating,
    CatalogRow,
};

// Classical polar space types for collinearity graphs.  HDual is the dual of
// the four-dimensional Hermitian space (a generalized quadrangle of order
// (q^3, q^2)), listed separately because its collinearity graph is not a
// point graph of the other five shapes.
enum class PolarType { W, Q, Qplus, Qminus, H, HDual };

struct FamilySpec {
    Family family = Family::Triangular;
    int64_t n = 0;      // Triangular/Grid size; Grassmann ambient dimension
    int64_t q = 0;      // field order (base field where applicable)
    int64_t p = 0;      // characteristic (Peisert, vLS)
    int64_t e = 0;      // vLS exponent (odd prime)
    int64_t t = 0;      // tower exponent (vLS, Peisert)
    int64_t m = 0;      // tower index (BilinearForms, NO odd-dim, NU, VO, Alternating)
    int epsilon = 0;    // +1 / -1 for NO
    PolarType polar = PolarType::W;
    int64_t dim = 0;    // projective dimension for PolarCollinearity and NO
    int table_row = 0;  // CatalogRow id, 1..53

    bool operator==(const FamilySpec& o) const = default;

    // Canonical CLI string, e.g. "family=vls p=2 e=3 t=3".
    std::string to_string() const;
    // Parses the canonical format. Errors: ParseError, UnknownFamily.
    static FamilySpec parse(const std::string& text);
};

// Witness structures known from the construction itself.
struct WitnessHint {
    std::vector<int> clique;    // empty = none known
    std::vector<int> coclique;  // empty = none known
    std::string provenance;
};

struct Generated {
    DenseGraph graph;
    WitnessHint hint;
};

// True when the family has an explicit generator and the spec's vertex count
// is within the cap.
bool constructible(const FamilySpec& spec, int64_t nu_cap = 20000);

// Builds the graph and validated witness hints.  The result always satisfies
// verify_srg(graph) == catalog params for the spec.
// Errors: InvalidParams, NotConstructible, TooLarge.
Generated generate(const FamilySpec& spec, int64_t nu_cap = 20000);

// The configured construction sweep: every constructible spec with nu <= cap.
std::vector<FamilySpec> sweep_specs(int64_t nu_cap = 2000);

// Validates family-specific parameter constraints (shared by catalog and
// generators).  Errors: InvalidParams, UnknownFamily.
void validate_spec(const FamilySpec& spec);

std::string family_name(Family f);
std::string polar_name(PolarType t);

}  // namespace srg
