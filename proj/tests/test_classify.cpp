#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"

#include "srg/bounds.hpp"
#include "srg/catalog.hpp"
#include "srg/classify.hpp"
#include "srg/error.hpp"
#include "srg/families.hpp"
#include "srg/graph.hpp"
#include "srg/solver.hpp"

using namespace srg;

namespace {

Verdict family(const std::string& text, const Budget& budget = Budget{}) {
    return classify_family(FamilySpec::parse(text), budget);
}

// Kneser graph K(5,2): 2-subsets of {0..4}, adjacent when disjoint.
DenseGraph petersen() {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) pairs.push_back({a, b});
    DenseGraph g(static_cast<int>(pairs.size()), "petersen");
    for (size_t i = 0; i < pairs.size(); ++i)
        for (size_t j = i + 1; j < pairs.size(); ++j) {
            auto [a, b] = pairs[i];
            auto [c, d] = pairs[j];
            if (a != c && a != d && b != c && b != d) g.add_edge((int64_t)i, (int64_t)j);
        }
    return g;
}

const TableRowReport* find_row(const TableReport& rep, const std::string& name) {
    for (const TableRowReport& r : rep.rows)
        if (r.name == name) return &r;
    return nullptr;
}

}  // namespace

TEST_CASE("ovoid rules: generalized quadrangles and their classical neighbours") {
    // Parabolic quadric in dimension 4 and the Hermitian surface always
    // have ovoids; the symplectic quadrangle only in even characteristic.
    for (int64_t q : {2, 3, 4, 5, 7, 8, 9}) {
        CHECK(ovoid_lookup(PolarType::Q, 4, q) == OvoidStatus::HasOvoid);
        CHECK(ovoid_lookup(PolarType::H, 3, q) == OvoidStatus::HasOvoid);
        CHECK(ovoid_lookup(PolarType::Qplus, 5, q) == OvoidStatus::HasOvoid);
    }
    for (int64_t q : {2, 4, 8}) CHECK(ovoid_lookup(PolarType::W, 3, q) == OvoidStatus::HasOvoid);
    for (int64_t q : {3, 5, 9, 27}) CHECK(ovoid_lookup(PolarType::W, 3, q) == OvoidStatus::NoOvoid);
}

TEST_CASE("ovoid rules: six-dimensional parabolic quadrics") {
    for (int64_t q : {3, 9, 27}) CHECK(ovoid_lookup(PolarType::Q, 6, q) == OvoidStatus::HasOvoid);
    for (int64_t q : {2, 4, 8, 16, 32}) CHECK(ovoid_lookup(PolarType::Q, 6, q) == OvoidStatus::NoOvoid);
    for (int64_t q : {5, 7, 11, 13}) CHECK(ovoid_lookup(PolarType::Q, 6, q) == OvoidStatus::NoOvoid);
    CHECK(ovoid_lookup(PolarType::Q, 6, 25) == OvoidStatus::Unknown);  // q = 5^2: no rule applies
}

TEST_CASE("ovoid rules: seven-dimensional hyperbolic quadrics") {
    // Characteristic 2 or 3, primes, and p = 2 mod 3 with an odd exponent
    // all carry ovoids; the first open orders are proper powers of 1-mod-3 primes.
    for (int64_t q : {2, 4, 8, 3, 9, 27, 5, 7, 11, 13})
        CHECK(ovoid_lookup(PolarType::Qplus, 7, q) == OvoidStatus::HasOvoid);
    CHECK(ovoid_lookup(PolarType::Qplus, 7, 32) == OvoidStatus::HasOvoid);  // 2^5
    CHECK(ovoid_lookup(PolarType::Qplus, 7, 25) == OvoidStatus::Unknown);   // 5^2, even exponent
    CHECK(ovoid_lookup(PolarType::Qplus, 7, 49) == OvoidStatus::Unknown);   // 7 = 1 mod 3
}

TEST_CASE("ovoid rules: counting exclusions in dimension nine and eleven") {
    for (int64_t q : {2, 4, 8, 3, 9}) CHECK(ovoid_lookup(PolarType::Qplus, 9, q) == OvoidStatus::NoOvoid);
    for (int64_t q : {5, 7, 25}) CHECK(ovoid_lookup(PolarType::Qplus, 9, q) == OvoidStatus::Unknown);
    for (int64_t q : {2, 3, 5, 7}) CHECK(ovoid_lookup(PolarType::Qplus, 11, q) == OvoidStatus::NoOvoid);
    for (int64_t q : {11, 13}) CHECK(ovoid_lookup(PolarType::Qplus, 11, q) == OvoidStatus::Unknown);
}

TEST_CASE("ovoid rules: higher-rank spaces without ovoids") {
    for (int64_t q : {2, 3, 4, 5}) {
        CHECK(ovoid_lookup(PolarType::W, 5, q) == OvoidStatus::NoOvoid);
        CHECK(ovoid_lookup(PolarType::Qminus, 5, q) == OvoidStatus::NoOvoid);
        CHECK(ovoid_lookup(PolarType::Qminus, 7, q) == OvoidStatus::NoOvoid);
        CHECK(ovoid_lookup(PolarType::H, 4, q) == OvoidStatus::NoOvoid);
        CHECK(ovoid_lookup(PolarType::H, 6, q) == OvoidStatus::NoOvoid);
        CHECK(ovoid_lookup(PolarType::Q, 8, q) == OvoidStatus::NoOvoid);
        CHECK(ovoid_lookup(PolarType::Q, 10, q) == OvoidStatus::NoOvoid);
    }
}

TEST_CASE("ovoid rules: Hermitian odd-dimensional cases") {
    CHECK(ovoid_lookup(PolarType::H, 5, 2) == OvoidStatus::NoOvoid);   // unconditional at q = 2
    CHECK(ovoid_lookup(PolarType::H, 5, 3) == OvoidStatus::Unknown);
    CHECK(ovoid_lookup(PolarType::H, 7, 2) == OvoidStatus::NoOvoid);   // counting bound fires
    CHECK(ovoid_lookup(PolarType::H, 7, 3) == OvoidStatus::NoOvoid);
    CHECK(ovoid_lookup(PolarType::H, 7, 5) == OvoidStatus::Unknown);
    CHECK(ovoid_lookup(PolarType::HDual, 4, 2) == OvoidStatus::NoOvoid);
    CHECK(ovoid_lookup(PolarType::HDual, 4, 3) == OvoidStatus::Unknown);
}

TEST_CASE("ovoid rules: parameter validation") {
    CHECK_THROWS_WITH_AS(ovoid_lookup(PolarType::W, 3, 6), doctest::Contains("prime power"), Error);
    CHECK_THROWS_AS(ovoid_lookup(PolarType::Q, 5, 3), Error);       // parabolic needs even dimension
    CHECK_THROWS_AS(ovoid_lookup(PolarType::W, 4, 3), Error);       // symplectic needs odd dimension
    CHECK_THROWS_AS(ovoid_lookup(PolarType::Qminus, 3, 3), Error);  // elliptic starts in dimension 5
    CHECK_THROWS_AS(ovoid_lookup(PolarType::HDual, 5, 2), Error);   // dual Hermitian is dim 4 only
}

TEST_CASE("graph classification settles the two triangular parities") {
    Generated even = generate(FamilySpec::parse("family=triangular n=6"));
    Verdict v = classify_graph(even.graph, Budget{}, even.hint);
    CHECK(v.status == SepStatus::NonSeparating);
    CHECK(v.reason == SepReason::BothBoundsAttained);
    CHECK(v.omega.lo == 5);
    CHECK(v.omega.hi == 5);
    CHECK(v.alpha.lo == 3);
    CHECK(v.alpha.hi == 3);
    REQUIRE(!v.clique.empty());
    REQUIRE(!v.coclique.empty());
    CHECK(verify_witness(even.graph, v.clique, SetMode::Clique));
    CHECK(verify_witness(even.graph, v.coclique, SetMode::Coclique));
    CHECK((int64_t)v.clique.size() == 5);
    CHECK((int64_t)v.coclique.size() == 3);

    Generated odd = generate(FamilySpec::parse("family=triangular n=7"));
    Verdict w = classify_graph(odd.graph);
    CHECK(w.status == SepStatus::Separating);
    CHECK(w.reason == SepReason::FractionalHoffman);
}

TEST_CASE("graph classification recognizes fractional and irrational bounds") {
    Verdict pet = classify_graph(petersen());
    CHECK(pet.status == SepStatus::Separating);
    CHECK(pet.reason == SepReason::FractionalDelsarte);  // clique bound 5/2

    Generated p13 = generate(FamilySpec::parse("family=paley q=13"));
    Verdict conf = classify_graph(p13.graph, Budget{}, p13.hint);
    CHECK(conf.status == SepStatus::Separating);
    CHECK(conf.reason == SepReason::IrrationalBounds);
}

TEST_CASE("graph classification finds both witnesses on the nine-point quadratic-residue graph") {
    Generated p9 = generate(FamilySpec::parse("family=paley q=9"));
    Verdict v = classify_graph(p9.graph, Budget{}, p9.hint);
    CHECK(v.status == SepStatus::NonSeparating);
    CHECK(v.omega.lo == 3);
    CHECK(v.alpha.lo == 3);
    CHECK(verify_witness(p9.graph, v.clique, SetMode::Clique));
    CHECK(verify_witness(p9.graph, v.coclique, SetMode::Coclique));
}

TEST_CASE("same parameters, different verdicts: the two (40,12,2,4) collinearity graphs") {
    // The symplectic space has no ovoid in odd characteristic: the coclique
    // number stays below the ratio bound 10.  The parabolic quadric has one.
    Generated w33 = generate(FamilySpec::parse("family=polar polar=w dim=3 q=3"));
    Verdict vw = classify_graph(w33.graph, Budget{}, w33.hint);
    CHECK(vw.status == SepStatus::Separating);
    CHECK(vw.reason == SepReason::CocliqueBelowBound);
    CHECK(vw.alpha.lo == 7);
    CHECK(vw.alpha.hi == 7);

    Generated q43 = generate(FamilySpec::parse("family=polar polar=q dim=4 q=3"));
    Verdict vq = classify_graph(q43.graph, Budget{}, q43.hint);
    CHECK(vq.status == SepStatus::NonSeparating);
    CHECK(vq.reason == SepReason::BothBoundsAttained);
    CHECK((int64_t)vq.coclique.size() == 10);
    CHECK(verify_witness(q43.graph, vq.coclique, SetMode::Coclique));
}

TEST_CASE("graph classification rejects graphs that are not strongly regular") {
    DenseGraph path(4, "path");
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    path.add_edge(2, 3);
    CHECK_THROWS_WITH_AS(classify_graph(path), doctest::Contains("NotSrg"), Error);
}

TEST_CASE("family verdicts: triangular parity across the small range") {
    for (int n = 4; n <= 12; ++n) {
        Verdict v = family("family=triangular n=" + std::to_string(n));
        if (n % 2 == 0) {
            CHECK(v.status == SepStatus::NonSeparating);
            CHECK(v.reason == SepReason::BothBoundsAttained);
        } else {
            CHECK(v.status == SepStatus::Separating);
            CHECK(v.reason == SepReason::FractionalHoffman);
        }
    }
}

TEST_CASE("family verdicts: cyclotomic tower parity") {
    Verdict even = family("family=vls p=2 e=3 t=2");
    CHECK(even.status == SepStatus::Separating);
    CHECK(even.reason == SepReason::FractionalDelsarte);

    Verdict odd = family("family=vls p=2 e=3 t=3");
    CHECK(odd.status == SepStatus::NonSeparating);
    CHECK(odd.reason == SepReason::BothBoundsAttained);
    // The subfield witness pair is attached by the construction.
    Generated g = generate(FamilySpec::parse("family=vls p=2 e=3 t=3"));
    REQUIRE(!odd.clique.empty());
    REQUIRE(!odd.coclique.empty());
    CHECK(verify_witness(g.graph, odd.clique, SetMode::Clique));
    CHECK(verify_witness(g.graph, odd.coclique, SetMode::Coclique));
}

TEST_CASE("family verdicts: quadratic-residue graphs split on square orders") {
    for (int64_t q : {9, 25, 49}) {
        Verdict v = family("family=paley q=" + std::to_string(q));
        CHECK(v.status == SepStatus::NonSeparating);
        CHECK(v.reason == SepReason::BothBoundsAttained);
    }
    for (int64_t q : {13, 17}) {
        Verdict v = family("family=paley q=" + std::to_string(q));
        CHECK(v.status == SepStatus::Separating);
        CHECK(v.reason == SepReason::IrrationalBounds);
    }
}

TEST_CASE("family verdicts: subspace graphs alternate with the ambient dimension") {
    for (int n : {4, 6}) {
        Verdict v = family("family=grassmann q=2 n=" + std::to_string(n));
        CHECK(v.status == SepStatus::NonSeparating);
        CHECK(v.reason == SepReason::BothBoundsAttained);
    }
    for (int n : {5, 7}) {
        Verdict v = family("family=grassmann q=2 n=" + std::to_string(n));
        CHECK(v.status == SepStatus::Separating);
        CHECK(v.reason == SepReason::FractionalHoffman);
    }
}

TEST_CASE("family verdicts: the self-complementary tower and its open even levels") {
    Verdict t1 = family("family=peisert p=3 t=1");
    CHECK(t1.status == SepStatus::NonSeparating);
    CHECK(t1.reason == SepReason::BothBoundsAttained);

    Verdict t2 = family("family=peisert p=3 t=2");
    CHECK(t2.status == SepStatus::Unresolved);
    CHECK(t2.reason == SepReason::OpenProblem);
    CHECK(t2.omega.hi == 9);
    CHECK(t2.alpha.hi == 9);
}

TEST_CASE("family verdicts: nonisotropic orthogonal branches over GF(2)") {
    Verdict smallest = family("family=no q=2 dim=6 epsilon=+1");
    CHECK(smallest.status == SepStatus::NonSeparating);  // 4 * 7 = 28
    CHECK(smallest.reason == SepReason::BothBoundsAttained);
    CHECK(!smallest.clique.empty());
    CHECK(!smallest.coclique.empty());

    for (int dim : {8, 10, 12}) {
        Verdict v = family("family=no q=2 dim=" + std::to_string(dim) + " epsilon=+1");
        CHECK(v.status == SepStatus::Separating);
        CHECK(v.reason == SepReason::CocliqueBelowBound);
    }
    // dim 12 has no recorded search value: the binary Gram-rank cap decides.
    Verdict big = family("family=no q=2 dim=12 epsilon=+1");
    CHECK(big.alpha.hi == 13);

    Verdict minus6 = family("family=no q=2 dim=6 epsilon=-1");
    CHECK(minus6.status == SepStatus::Separating);
    CHECK(minus6.reason == SepReason::CliqueBelowBound);  // 4 < 6

    Verdict minus8 = family("family=no q=2 dim=8 epsilon=-1");
    CHECK(minus8.status == SepStatus::Separating);
    CHECK(minus8.reason == SepReason::FractionalDelsarte);
}

TEST_CASE("family verdicts: nonisotropic orthogonal branches over GF(3)") {
    Verdict plus6 = family("family=no q=3 dim=6 epsilon=+1");
    CHECK(plus6.status == SepStatus::Separating);
    CHECK(plus6.reason == SepReason::CliqueBelowBound);  // independence cap 6 < 13
    CHECK(plus6.omega.hi == 6);

    Verdict minus6 = family("family=no q=3 dim=6 epsilon=-1");
    CHECK(minus6.status == SepStatus::Separating);
    CHECK(minus6.reason == SepReason::CocliqueBelowBound);  // 15 < 21
    CHECK(minus6.alpha.lo == 15);
    CHECK(minus6.alpha.hi == 15);

    Verdict minus8 = family("family=no q=3 dim=8 epsilon=-1");
    CHECK(minus8.status == SepStatus::Separating);
    CHECK(minus8.reason == SepReason::FractionalHoffman);

    // Odd projective dimension: the five-dimensional member attains both
    // bounds (9 * 5 = 45); the larger ones have short cocliques.
    Verdict odd5 = family("family=no q=3 dim=5 epsilon=+1");
    CHECK(odd5.status == SepStatus::NonSeparating);
    CHECK(odd5.reason == SepReason::BothBoundsAttained);
    Verdict odd7 = family("family=no q=3 dim=7 epsilon=+1");
    CHECK(odd7.status == SepStatus::Separating);
    CHECK(odd7.reason == SepReason::CocliqueBelowBound);
}

TEST_CASE("family verdicts: unitary graphs decide by search at rank four") {
    // No stored value decides rank 4: the coclique number m equals its ratio
    // bound there, and the clique side needs the exact solver (omega = 7,
    // strictly below the bound 10).
    Verdict v = family("family=nu q=2 m=4");
    CHECK(v.status == SepStatus::Separating);
    CHECK(v.reason == SepReason::CliqueBelowBound);
    CHECK(v.omega.lo == 7);
    CHECK(v.omega.hi == 7);

    Verdict w = family("family=nu q=2 m=5");
    CHECK(w.status == SepStatus::Separating);
    CHECK(w.reason == SepReason::CocliqueBelowBound);  // 5 < 11
    CHECK(w.alpha.hi == 5);
}

TEST_CASE("family verdicts: affine hyperbolic graphs follow the ovoid rule upstairs") {
    Verdict small = family("family=voplus q=2 m=2");
    CHECK(small.status == SepStatus::NonSeparating);
    CHECK(small.reason == SepReason::OvoidExists);
    CHECK(!small.clique.empty());   // 16 vertices: witnesses attach
    CHECK(!small.coclique.empty());

    Verdict big = family("family=voplus q=5 m=3");
    CHECK(big.status == SepStatus::NonSeparating);
    CHECK(big.reason == SepReason::OvoidExists);
    CHECK(big.clique.empty());      // 15625 vertices: parameter-only verdict
    CHECK(big.coclique.empty());
    CHECK(!big.provenance.empty());

    Verdict none = family("family=voplus q=2 m=4");
    CHECK(none.status == SepStatus::Separating);
    CHECK(none.reason == SepReason::NoOvoid);  // counting exclusion upstairs
}

TEST_CASE("family verdicts: affine elliptic and Suzuki-Tits members separate on fractional bounds") {
    Verdict vominus = family("family=vominus q=2 m=2");
    CHECK(vominus.status == SepStatus::Separating);
    CHECK(vominus.reason == SepReason::FractionalDelsarte);  // 8/3 on 16 vertices

    Verdict vsz = family("family=vsz q=8");
    CHECK(vsz.status == SepStatus::Separating);
    Verdict half = family("family=dualpolarhalf5 q=2");
    CHECK(half.status == SepStatus::Separating);
    CHECK((half.reason == SepReason::FractionalDelsarte || half.reason == SepReason::FractionalHoffman));
}

TEST_CASE("family verdicts: sporadic graphs with fractional clique bounds") {
    struct Row {
        const char* text;
        int64_t omega, alpha;
    };
    const Row rows[] = {
        {"family=bvls", 3, 45},
        {"family=hoffman-singleton", 2, 15},
        {"family=gewirtz", 2, 16},
        {"family=m22", 2, 21},
        {"family=higman-sims", 2, 22},
    };
    for (const Row& r : rows) {
        Verdict v = family(r.text);
        CHECK(v.status == SepStatus::Separating);
        CHECK(v.reason == SepReason::FractionalDelsarte);
        CHECK(v.omega.lo == r.omega);
        CHECK(v.omega.hi == r.omega);
        CHECK(v.alpha.lo == r.alpha);
        CHECK(v.alpha.hi == r.alpha);
    }
}

TEST_CASE("family verdicts: exceptional-geometry and alternating-forms members") {
    Verdict e6 = family("family=e6 q=2");
    CHECK(e6.status == SepStatus::Separating);
    CHECK(e6.reason == SepReason::CliqueBelowBound);
    CHECK(e6.omega.lo == 63);  // points of a maximal singular subspace
    CHECK(e6.omega.hi == 63);

    Verdict alt = family("family=alternating q=2");
    CHECK(alt.status == SepStatus::Separating);
}

TEST_CASE("family verdicts: stored rows with explicit generators") {
    Verdict r12 = family("family=row row=12");
    CHECK(r12.status == SepStatus::Separating);
    CHECK(r12.reason == SepReason::FractionalDelsarte);
    CHECK(r12.omega.lo == 3);
    CHECK(r12.alpha.lo == 45);

    Verdict r13 = family("family=row row=13");
    CHECK(r13.status == SepStatus::Separating);
    CHECK(r13.reason == SepReason::FractionalDelsarte);

    Verdict r15 = family("family=row row=15");
    CHECK(r15.status == SepStatus::Separating);
    CHECK(r15.reason == SepReason::CliqueBelowBound);  // 10 < 16
    CHECK(r15.omega.lo == 10);

    Verdict r16 = family("family=row row=16");
    CHECK(r16.status == SepStatus::NonSeparating);
    CHECK(r16.reason == SepReason::BothBoundsAttained);  // 16 * 16 = 256
    CHECK(!r16.clique.empty());
    CHECK(!r16.coclique.empty());
}

TEST_CASE("family verdicts: stored rows at group-theoretic scale stay parameter-only") {
    Verdict r48 = family("family=row row=48");
    CHECK(r48.status == SepStatus::Separating);
    CHECK(r48.reason == SepReason::CliqueBelowBound);  // 64 < 352
    CHECK(r48.clique.empty());

    Verdict r50 = family("family=row row=50");
    CHECK(r50.status == SepStatus::Separating);
    CHECK(r50.reason == SepReason::CliqueBelowBound);  // 23 < 391
}

TEST_CASE("every stored row classifies without search and matches its shading") {
    for (const CatalogEntry& e : table2_rows()) {
        FamilySpec sp;
        sp.family = Family::CatalogRow;
        sp.table_row = e.spec.table_row;
        const Verdict v = classify_family(sp);
        switch (e.grey) {
            case GreyClass::Light:
            case GreyClass::Dark: CHECK(v.status == SepStatus::Separating); break;
            case GreyClass::None:
                CHECK(v.status == SepStatus::NonSeparating);
                CHECK(v.reason == SepReason::BothBoundsAttained);
                break;
        }
    }
}

TEST_CASE("family and graph classification agree on every member that fits in memory") {
    Budget quick;
    quick.max_nodes = 1'000'000;
    quick.max_seconds = 8.0;
    for (const FamilySpec& sp : sweep_specs(128)) {
        INFO("spec ", sp.to_string());
        const Verdict vf = classify_family(sp, quick);
        Generated gen = generate(sp);
        const Verdict vg = classify_graph(gen.graph, quick, gen.hint);
        // A decided status may degrade to Unresolved under a small budget,
        // but two opposite decisions would mean a real bug.
        const bool contradiction = (vf.status == SepStatus::Separating &&
                                    vg.status == SepStatus::NonSeparating) ||
                                   (vf.status == SepStatus::NonSeparating &&
                                    vg.status == SepStatus::Separating);
        REQUIRE(!contradiction);
        // Range consistency: the family argument and the search must overlap.
        CHECK(std::max(vf.omega.lo, vg.omega.lo) <= std::min(vf.omega.hi, vg.omega.hi));
        CHECK(std::max(vf.alpha.lo, vg.alpha.lo) <= std::min(vf.alpha.hi, vg.alpha.hi));
    }
}

TEST_CASE("stored-row reproduction: spectra, bounds and shading all match") {
    const TableReport rep = reproduce_table(WhichTable::Table2);
    CHECK(rep.rows.size() == 53);
    for (const TableRowReport& r : rep.rows) {
        INFO("row ", r.row_id, " ", r.name, ": ", r.note);
        CHECK(r.match);
    }
    CHECK(rep.all_match);
}

TEST_CASE("separating-sublist reproduction matches the stored membership") {
    const TableReport rep = reproduce_table(WhichTable::Table1Membership);
    CHECK(rep.rows.size() == 53);
    for (const TableRowReport& r : rep.rows) {
        INFO("row ", r.row_id, " ", r.name, ": ", r.note);
        CHECK(r.match);
    }
    CHECK(rep.all_match);
}

TEST_CASE("polar sweep report covers the rule engine and carries its caveats") {
    const TableReport rep = reproduce_table(WhichTable::Table5);
    CHECK(rep.notes.size() == 3);
    CHECK(rep.all_match);

    const TableRowReport* w34 = find_row(rep, "W(3, q=4)");
    REQUIRE(w34 != nullptr);
    CHECK(w34->status == SepStatus::NonSeparating);
    CHECK(w34->reason == SepReason::OvoidExists);

    const TableRowReport* w53 = find_row(rep, "W(5, q=3)");
    REQUIRE(w53 != nullptr);
    CHECK(w53->status == SepStatus::Separating);
    CHECK(w53->reason == SepReason::NoOvoid);

    const TableRowReport* qp92 = find_row(rep, "Q+(9, q=2)");
    REQUIRE(qp92 != nullptr);
    CHECK(qp92->status == SepStatus::Separating);

    const TableRowReport* qp925 = find_row(rep, "Q+(9, q=25)");
    REQUIRE(qp925 != nullptr);
    CHECK(qp925->status == SepStatus::Unresolved);
    CHECK(qp925->reason == SepReason::OvoidUnknown);
}

TEST_CASE("search-determined rows reproduce or verify within bounds") {
    const TableReport rep = reproduce_table(WhichTable::Table6);
    CHECK(rep.rows.size() == 6);
    for (const TableRowReport& r : rep.rows) {
        INFO("row ", r.row_id, " ", r.name, ": ", r.note);
        CHECK(r.match);
    }
    CHECK(rep.all_match);
}

TEST_CASE("classification is deterministic for a fixed seed") {
    const FamilySpec sp = FamilySpec::parse("family=vls p=2 e=3 t=3");
    const Verdict a = classify_family(sp, Budget{}, 0);
    const Verdict b = classify_family(sp, Budget{}, 0);
    CHECK(a.status == b.status);
    CHECK(a.clique == b.clique);
    CHECK(a.coclique == b.coclique);

    Generated t6 = generate(FamilySpec::parse("family=triangular n=6"));
    const Verdict c = classify_graph(t6.graph, Budget{}, t6.hint, 0);
    const Verdict d = classify_graph(t6.graph, Budget{}, t6.hint, 0);
    CHECK(c.clique == d.clique);
    CHECK(c.coclique == d.coclique);

    Budget threaded;
    threaded.threads = 4;
    const Verdict e = classify_graph(t6.graph, threaded, t6.hint, 0);
    CHECK(e.status == c.status);
    CHECK(e.omega.lo == c.omega.lo);
    CHECK(e.alpha.lo == c.alpha.lo);
}

TEST_CASE("verdict names render for reports") {
    CHECK(sep_status_name(SepStatus::Separating) == "Separating");
    CHECK(sep_status_name(SepStatus::NonSeparating) == "NonSeparating");
    CHECK(sep_status_name(SepStatus::Unresolved) == "Unresolved");
    CHECK(sep_reason_name(SepReason::OvoidUnknown) == "OvoidUnknown");
    CHECK(ovoid_status_name(OvoidStatus::HasOvoid) == "HasOvoid");
    CHECK(ValueRange{3, 3}.exact());
    CHECK(!ValueRange{1, 3}.exact());
}
