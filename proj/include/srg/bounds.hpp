#pragma once

#include <cstdint>
#include <utility>

#include "srg/exact.hpp"
#include "srg/graph.hpp"

namespace srg {

// Exact spectrum and ratio bounds of a strongly regular graph.
struct BoundReport {
    SrgParams params;
    ExactScalar r;         // positive non-principal eigenvalue
    ExactScalar s;         // negative eigenvalue
    ExactScalar delsarte;  // clique bound 1 - k/s
    ExactScalar hoffman;   // coclique bound nu*s/(s-k)
    bool delsarte_integral = false;
    bool hoffman_integral = false;
    int64_t omega_target = 0;  // floor(delsarte)
    int64_t alpha_target = 0;  // floor(hoffman)
};

// Eigenvalues (r, s) from the parameter quadruple, exact square roots
// extracted when the discriminant is a perfect square.
// Errors: InvalidParams when the quadruple is not a plausible SRG.
std::pair<ExactScalar, ExactScalar> eigenvalues(const SrgParams& p);

ExactScalar delsarte_bound(const SrgParams& p);
ExactScalar hoffman_bound(const SrgParams& p);
BoundReport bound_report(const SrgParams& p);

// Clique-coclique product check: Equal iff omega*alpha == nu.
// Errors: BoundViolated when omega*alpha > nu, InvalidParams on nonpositive input.
enum class CliqueCoclique { Strict, Equal };
CliqueCoclique clique_coclique_check(int64_t omega, int64_t alpha, int64_t nu);

// Fast separation verdict from bound integrality alone.
struct QuickVerdict {
    enum class Kind {
        FractionalDelsarte,  // clique bound is a non-integer rational
        FractionalHoffman,   // coclique bound is a non-integer rational
        IrrationalBounds,    // conference-style irrational pair
        NeedsSearch,         // both bounds integral; search must decide
    };
    Kind kind;
    int64_t omega_target = 0;
    int64_t alpha_target = 0;

    bool separating() const { return kind != Kind::NeedsSearch; }
};
QuickVerdict quick_verdict(const SrgParams& p);

// True iff the eigenvalue multiplicities from the trace conditions are
// nonnegative integers.  Never throws; malformed quadruples return false.
bool feasibility(const SrgParams& p);

}  // namespace srg
