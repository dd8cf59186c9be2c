#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "srg/bounds.hpp"
#include "srg/families.hpp"
#include "srg/graph.hpp"
#include "srg/solver.hpp"

namespace srg {

enum class SepStatus { Separating, NonSeparating, Unresolved };

enum class SepReason {
    FractionalDelsarte,   // clique ratio bound is a non-integer rational
    FractionalHoffman,    // coclique ratio bound is a non-integer rational
    IrrationalBounds,     // conference-style irrational bound pair
    CliqueBelowBound,     // omega proven below the clique ratio bound
    CocliqueBelowBound,   // alpha proven below the coclique ratio bound
    BothBoundsAttained,   // omega and alpha both meet their bounds
    OvoidExists,          // polar space has an ovoid
    NoOvoid,              // polar space has no ovoid
    OvoidUnknown,         // ovoid existence is open
    OpenProblem,          // the deciding value is a recorded open problem
    BudgetExhausted,      // search budget ran out before a decision
};

std::string sep_status_name(SepStatus s);
std::string sep_reason_name(SepReason r);

// Inclusive range of candidate values for a clique or coclique number.
struct ValueRange {
    int64_t lo = 0;
    int64_t hi = 0;
    bool exact() const { return lo == hi; }
    bool operator==(const ValueRange& o) const = default;
};

// Outcome of a separation classification.
//
// A NonSeparating verdict always means omega * alpha = nu with both values
// equal to their ratio bounds.  Explicit witness sets are attached whenever
// the deciding argument produced them (search verdicts always have them;
// family verdicts have them when the graph was constructed).  Parameter-only
// family verdicts — members too large to build, or ovoid-existence
// conclusions — carry empty witness sets and record the argument in
// provenance instead.
struct Verdict {
    SepStatus status = SepStatus::Unresolved;
    SepReason reason = SepReason::BudgetExhausted;
    ValueRange omega;            // best-known clique-number range
    ValueRange alpha;            // best-known coclique-number range
    std::vector<int> clique;     // verified witness, empty when absent
    std::vector<int> coclique;   // verified witness, empty when absent
    std::string provenance;      // one-line human explanation

    bool decided() const { return status != SepStatus::Unresolved; }
    bool operator==(const Verdict& o) const = default;
};

// Classifies an explicit strongly regular graph by bound arithmetic plus
// search: fractional or irrational bounds decide immediately; otherwise a
// seed search tries to attain both integral targets and the exact solver
// settles whichever side remains open.  Deterministic for a fixed seed
// whenever the outcome is decided (budget-exhausted ranges can depend on the
// wall clock).  The optional hints are tried before any search.
// Errors: NotSrg (graph fails strong-regularity verification).
Verdict classify_graph(const DenseGraph& g, const Budget& budget = Budget{},
                       const WitnessHint& hints = WitnessHint{}, uint64_t seed = 0);

// Classifies a family member by the family-specific arguments first —
// parity branches, ovoid rules, stored clique/coclique numbers, tower and
// rank bounds — falling back to building and searching the graph only when
// parameters alone cannot decide and the member is constructible.
// Errors: InvalidParams, UnknownFamily.
Verdict classify_family(const FamilySpec& spec, const Budget& budget = Budget{},
                        uint64_t seed = 0);

// Ovoid existence for a classical polar space, by the stored rule tables
// plus the Blokhuis-Moorhouse inequality (evaluated in arbitrary-precision
// integers).  The rule set is pairwise consistency-checked over a parameter
// sweep on first use.  Unknown means no stored rule applies.
// Errors: NotPrimePower, InvalidParams (bad type/dimension combination).
enum class OvoidStatus { HasOvoid, NoOvoid, Unknown };
OvoidStatus ovoid_lookup(PolarType type, int64_t dim, int64_t q);
std::string ovoid_status_name(OvoidStatus s);

// Table reproduction ----------------------------------------------------

enum class WhichTable {
    Table1Membership = 1,  // separating sublist of the stored rows
    Table2 = 2,            // all 53 stored rows: bounds + grey coding
    Table5 = 5,            // polar-space ovoid/separation sweep
    Table6 = 6,            // search-determined clique/coclique rows
};

struct TableRowReport {
    int row_id = 0;            // stored row id, 0 for sweep-generated rows
    std::string name;
    SrgParams params;
    std::string s, r;          // exact eigenvalue strings
    std::string delsarte, hoffman;
    std::string omega, alpha;  // known or recomputed values, "?" if open
    SepStatus status = SepStatus::Unresolved;
    SepReason reason = SepReason::BudgetExhausted;
    bool match = true;         // recomputation agrees with the stored data
    std::string note;
};

struct TableReport {
    WhichTable which = WhichTable::Table2;
    std::string title;
    std::vector<TableRowReport> rows;
    std::vector<std::string> notes;  // report-level caveats
    bool all_match = true;
};

// Recomputes the requested table from first principles and diffs it against
// the stored constants.  Table 6 runs the solver on the four constructible
// rows within the budget; the two large rows are compared as stored values
// only.  Table 5 reports the ovoid rule engine over the standard sweep.
TableReport reproduce_table(WhichTable which, const Budget& budget = Budget{});

}  // namespace srg
