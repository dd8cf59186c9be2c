#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"

#include "srg/catalog.hpp"
#include "srg/error.hpp"
#include "srg/families.hpp"
#include "srg/graph.hpp"
#include "srg/solver.hpp"

using namespace srg;

namespace {

FamilySpec tri(int64_t n) {
    FamilySpec s;
    s.family = Family::Triangular;
    s.n = n;
    return s;
}
FamilySpec grid(int64_t n) {
    FamilySpec s;
    s.family = Family::Grid;
    s.n = n;
    return s;
}
FamilySpec paley(int64_t q) {
    FamilySpec s;
    s.family = Family::Paley;
    s.q = q;
    return s;
}
FamilySpec peisert(int64_t p, int64_t t) {
    FamilySpec s;
    s.family = Family::Peisert;
    s.p = p;
    s.t = t;
    return s;
}
FamilySpec vls(int64_t p, int64_t e, int64_t t) {
    FamilySpec s;
    s.family = Family::VanLintSchrijver;
    s.p = p;
    s.e = e;
    s.t = t;
    return s;
}
FamilySpec grassmann(int64_t n, int64_t q) {
    FamilySpec s;
    s.family = Family::Grassmann;
    s.n = n;
    s.q = q;
    return s;
}
FamilySpec bilinear(int64_t q, int64_t m) {
    FamilySpec s;
    s.family = Family::BilinearForms;
    s.q = q;
    s.m = m;
    return s;
}
FamilySpec polar(PolarType pt, int64_t q, int64_t dim) {
    FamilySpec s;
    s.family = Family::PolarCollinearity;
    s.polar = pt;
    s.q = q;
    s.dim = dim;
    return s;
}
FamilySpec no_spec(int64_t dim, int64_t q, int eps) {
    FamilySpec s;
    s.family = Family::NO;
    s.dim = dim;
    s.q = q;
    s.epsilon = eps;
    return s;
}
FamilySpec nu_spec(int64_t m) {
    FamilySpec s;
    s.family = Family::NU;
    s.q = 2;
    s.m = m;
    return s;
}
FamilySpec vo(Family f, int64_t q, int64_t m) {
    FamilySpec s;
    s.family = f;
    s.q = q;
    s.m = m;
    return s;
}
FamilySpec named(Family f) {
    FamilySpec s;
    s.family = f;
    return s;
}
FamilySpec row(int id) {
    FamilySpec s;
    s.family = Family::CatalogRow;
    s.table_row = id;
    return s;
}

SrgParams quad(int64_t nu, int64_t k, int64_t lambda, int64_t mu) {
    SrgParams p;
    p.nu = nu;
    p.k = k;
    p.lambda = lambda;
    p.mu = mu;
    return p;
}

// Generates, re-verifies strong regularity, and compares with the stored
// parameter formulas.
SrgParams checked(const FamilySpec& sp, int64_t cap = 20000) {
    Generated gen = generate(sp, cap);
    SrgParams got = verify_srg(gen.graph);
    CHECK(got == params_for(sp));
    return got;
}

}  // namespace

TEST_CASE("spec text round-trips for every family shape") {
    std::vector<FamilySpec> specs = {
        tri(7),
        grid(4),
        paley(13),
        peisert(3, 2),
        vls(2, 3, 3),
        grassmann(5, 2),
        bilinear(3, 2),
        polar(PolarType::Qminus, 2, 5),
        polar(PolarType::H, 3, 4),
        no_spec(6, 2, 1),
        no_spec(5, 4, -1),
        nu_spec(5),
        vo(Family::VOplus, 2, 3),
        vo(Family::VOminus, 3, 2),
        named(Family::VSz),
        named(Family::BvLS),
        named(Family::HoffmanSingleton),
        named(Family::Gewirtz),
        named(Family::M22_77),
        named(Family::HigmanSims),
        named(Family::DualPolarHalf5),
        named(Family::E6),
        named(Family::Alternating),
        row(15),
    };
    specs[14].q = 8;                      // VSz
    specs[20].q = 2;                      // DualPolarHalf5
    specs[21].q = 2;                      // E6
    specs[22].q = 3;                      // Alternating
    for (const FamilySpec& sp : specs) {
        CAPTURE(sp.to_string());
        FamilySpec back = FamilySpec::parse(sp.to_string());
        CHECK(back == sp);
    }
    CHECK(tri(7).to_string() == "family=triangular n=7");
    CHECK(vls(2, 3, 3).to_string() == "family=vls p=2 e=3 t=3");
    CHECK(no_spec(6, 2, 1).to_string() == "family=no q=2 epsilon=+1 dim=6");
    CHECK(no_spec(5, 4, -1).to_string() == "family=no q=4 epsilon=-1 dim=5");
    CHECK(polar(PolarType::Qplus, 3, 5).to_string() == "family=polar q=3 polar=Q+ dim=5");
    CHECK(row(12).to_string() == "family=row row=12");
}

TEST_CASE("spec parsing accepts variants and rejects malformed input") {
    CHECK(FamilySpec::parse("family=no q=2 epsilon=1 dim=6") == no_spec(6, 2, 1));
    CHECK(FamilySpec::parse("family=polar q=3 polar=q+ dim=5") == polar(PolarType::Qplus, 3, 5));
    CHECK(FamilySpec::parse("  family=grid   n=4 ") == grid(4));

    auto code_of = [](const std::string& text) {
        try {
            FamilySpec::parse(text);
        } catch (const Error& e) {
            return e.code();
        }
        return std::string("no error");
    };
    CHECK(code_of("n=4") == "ParseError");                        // missing family
    CHECK(code_of("family=nosuch n=4") == "UnknownFamily");
    CHECK(code_of("family=grid n=4 n=5") == "ParseError");        // duplicate key
    CHECK(code_of("family=grid size=4") == "ParseError");         // unknown key
    CHECK(code_of("family=grid n=four") == "ParseError");         // not an integer
    CHECK(code_of("family=grid n=4x") == "ParseError");           // trailing junk
    CHECK(code_of("family=no q=2 epsilon=2 dim=6") == "ParseError");
    CHECK(code_of("family=polar q=2 polar=X dim=5") == "ParseError");
    CHECK(code_of("family=grid n") == "ParseError");              // no '='
}

TEST_CASE("small members match their stored parameters") {
    CHECK(checked(tri(5)) == quad(10, 6, 3, 4));
    CHECK(checked(tri(8)) == quad(28, 12, 6, 4));
    CHECK(checked(grid(4)) == quad(16, 6, 2, 2));
    CHECK(checked(paley(9)) == quad(9, 4, 1, 2));
    CHECK(checked(paley(13)) == quad(13, 6, 2, 3));
    CHECK(checked(paley(25)) == quad(25, 12, 5, 6));
    CHECK(checked(peisert(3, 1)) == quad(9, 4, 1, 2));
    CHECK(checked(peisert(7, 1)) == quad(49, 24, 11, 12));
    CHECK(checked(vls(2, 3, 2)) == quad(16, 5, 0, 2));
    CHECK(checked(vls(2, 3, 3)) == quad(64, 21, 8, 6));
    CHECK(checked(grassmann(4, 2)) == quad(35, 18, 9, 9));
    CHECK(checked(bilinear(2, 3)) == quad(64, 21, 8, 6));
    CHECK(checked(polar(PolarType::W, 2, 3)) == quad(15, 6, 1, 3));
    CHECK(checked(polar(PolarType::Q, 3, 4)) == quad(40, 12, 2, 4));
    CHECK(checked(polar(PolarType::Qplus, 2, 5)) == quad(35, 18, 9, 9));
    CHECK(checked(polar(PolarType::Qminus, 2, 5)) == quad(27, 10, 1, 5));
    CHECK(checked(polar(PolarType::H, 2, 3)) == quad(45, 12, 3, 3));
    CHECK(checked(no_spec(6, 2, 1)) == quad(28, 15, 6, 10));
    CHECK(checked(no_spec(6, 2, -1)) == quad(36, 15, 6, 6));
    CHECK(checked(no_spec(6, 3, -1)) == quad(126, 45, 12, 18));
    CHECK(checked(no_spec(5, 3, 1)) == quad(45, 32, 22, 24));
    CHECK(checked(nu_spec(4)) == quad(40, 27, 18, 18));
    CHECK(checked(vo(Family::VOplus, 2, 2)) == quad(16, 9, 4, 6));
    CHECK(checked(vo(Family::VOminus, 2, 2)) == quad(16, 5, 0, 2));
    CHECK(checked(named(Family::HoffmanSingleton)) == quad(50, 7, 0, 1));
    CHECK(checked(named(Family::Gewirtz)) == quad(56, 10, 0, 2));
    CHECK(checked(named(Family::M22_77)) == quad(77, 16, 0, 4));
    CHECK(checked(named(Family::HigmanSims)) == quad(100, 22, 0, 6));
    CHECK(checked(named(Family::BvLS)) == quad(243, 22, 1, 2));
    CHECK(checked(row(13)) == quad(243, 110, 37, 60));
    CHECK(checked(row(15)) == quad(256, 45, 16, 6));
    CHECK(checked(row(16)) == quad(256, 45, 16, 6));
}

TEST_CASE("generated adjacency is deterministic") {
    struct Golden {
        const char* text;
        uint64_t digest;
    };
    const Golden table[] = {
        {"family=triangular n=5", 0xc2722621a5e48fe8ULL},
        {"family=paley q=9", 0x2107169cd3abd542ULL},
        {"family=vls p=2 e=3 t=2", 0x0bc5901121006e3dULL},
        {"family=no q=3 epsilon=-1 dim=6", 0xd68808bbccbdd92dULL},
        {"family=bvls", 0x20c6bada6d1637a4ULL},
        {"family=row row=15", 0xaa799f1a6366f788ULL},
    };
    for (const Golden& g : table) {
        CAPTURE(g.text);
        CHECK(generate(FamilySpec::parse(g.text)).graph.checksum() == g.digest);
    }
}

TEST_CASE("construction hints are verified witnesses of the advertised sizes") {
    struct Expect {
        FamilySpec sp;
        size_t clique;
        size_t coclique;
    };
    std::vector<Expect> table = {
        {tri(7), 6, 3},                          // point pencil; matching
        {grid(5), 5, 5},                         // row; diagonal
        {paley(9), 3, 3},                        // subfield and a coset
        {paley(25), 5, 5},
        {peisert(3, 1), 3, 3},
        {vls(2, 3, 3), 8, 8},                    // 8 * 8 = 64 vertices
        {grassmann(4, 2), 7, 0},                 // pencil through a point
        {bilinear(3, 2), 9, 9},                  // zero row plane; spread graph
        {bilinear(2, 4), 16, 16},
        {polar(PolarType::W, 3, 3), 4, 0},       // line of a generator
        {polar(PolarType::Qminus, 2, 5), 3, 0},
        {polar(PolarType::H, 2, 3), 5, 0},
        {no_spec(6, 2, 1), 4, 0},                // odd sums of unit pairs
        {no_spec(6, 2, -1), 4, 0},
        {no_spec(8, 2, 1), 8, 0},
        {nu_spec(4), 0, 4},                      // orthonormal basis
        {nu_spec(5), 0, 5},
        {vo(Family::VOplus, 2, 2), 4, 0},        // totally singular subspace
        {vo(Family::VOminus, 3, 2), 3, 0},
        {row(15), 10, 0},
        {row(16), 16, 16},
    };
    for (const Expect& ex : table) {
        CAPTURE(ex.sp.to_string());
        Generated gen = generate(ex.sp);
        CHECK(gen.hint.clique.size() == ex.clique);
        CHECK(gen.hint.coclique.size() == ex.coclique);
        if (!gen.hint.clique.empty()) {
            CHECK(is_clique(gen.graph, gen.hint.clique));
            CHECK(!gen.hint.provenance.empty());
        }
        if (!gen.hint.coclique.empty()) CHECK(is_coclique(gen.graph, gen.hint.coclique));
    }

    // Square Paley and odd-exponent clique hints reach the ratio-bound size,
    // so the hinted sets are maximum, not just maximal.
    Generated p25 = generate(paley(25));
    CHECK((int64_t)p25.hint.clique.size() * (int64_t)p25.hint.coclique.size() == 25);
    Generated lint = generate(vls(2, 3, 3));
    CHECK((int64_t)lint.hint.clique.size() * (int64_t)lint.hint.coclique.size() == 64);
}

TEST_CASE("even-exponent cyclotomic members carry no subfield hint") {
    // The square-root subfield is not a clique when the tower exponent is
    // even, so the generator must not advertise one.
    Generated pe = generate(peisert(3, 2));
    CHECK(pe.hint.clique.empty());
    CHECK(pe.hint.coclique.empty());
    Generated lint = generate(vls(2, 3, 2));
    CHECK(lint.hint.clique.empty());
    CHECK(lint.hint.coclique.empty());
}

TEST_CASE("catalog-only families and oversized requests are rejected") {
    auto code_of = [](const FamilySpec& sp, int64_t cap) {
        try {
            generate(sp, cap);
        } catch (const Error& e) {
            return e.code();
        }
        return std::string("no error");
    };
    FamilySpec dual5 = named(Family::DualPolarHalf5);
    dual5.q = 2;
    FamilySpec e6 = named(Family::E6);
    e6.q = 2;
    FamilySpec alt = named(Family::Alternating);
    alt.q = 3;
    CHECK(code_of(dual5, 20000) == "NotConstructible");
    CHECK(code_of(e6, 20000) == "NotConstructible");
    CHECK(code_of(alt, 20000) == "NotConstructible");
    CHECK(code_of(row(48), 20000) == "NotConstructible");
    CHECK(code_of(polar(PolarType::HDual, 2, 4), 20000) == "NotConstructible");
    CHECK(code_of(paley(1009), 500) == "TooLarge");
    CHECK(code_of(tri(300), 20000) == "TooLarge");
    CHECK(code_of(no_spec(5, 3, -1), 20000) == "InvalidParams");
    CHECK(code_of(paley(12), 20000) == "InvalidParams");

    CHECK(!constructible(dual5));
    CHECK(!constructible(row(48)));
    CHECK(constructible(row(15)));
    CHECK(constructible(paley(1009)));
    CHECK(!constructible(paley(1009), 500));
}

TEST_CASE("construction sweep generates verified strongly regular graphs") {
    auto specs = sweep_specs(600);
    std::set<std::string> texts;
    for (const FamilySpec& sp : specs) {
        CAPTURE(sp.to_string());
        CHECK(texts.insert(sp.to_string()).second);  // no duplicates
        CHECK(constructible(sp, 600));
        SrgParams want = params_for(sp);
        CHECK(want.nu <= 600);
        Generated gen = generate(sp, 600);
        CHECK(verify_srg(gen.graph) == want);
    }
    // Spot members that must be present.
    for (const char* txt :
         {"family=triangular n=5", "family=grid n=24", "family=paley q=577",
          "family=peisert p=3 t=2", "family=vls p=2 e=3 t=4", "family=vls p=5 e=3 t=1",
          "family=grassmann n=5 q=2", "family=bilinear q=2 m=4",
          "family=polar q=2 polar=W dim=7", "family=polar q=4 polar=Q- dim=5",
          "family=no q=2 epsilon=+1 dim=8", "family=no q=3 epsilon=+1 dim=7",
          "family=nu q=2 m=5", "family=voplus q=2 m=4", "family=vominus q=4 m=2",
          "family=vsz q=2", "family=bvls", "family=higman-sims", "family=row row=16"})
        CHECK(texts.count(txt) == 1);
    // Excluded: over the cap, no generator, or parameter constraints fail.
    for (const char* txt : {"family=e6 q=2", "family=row row=48", "family=paley q=601",
                            "family=no q=8 epsilon=-1 dim=5", "family=nu q=2 m=9"})
        CHECK(texts.count(txt) == 0);
    CHECK(specs.size() == 219);
}

TEST_CASE("sweep respects the vertex cap exactly") {
    auto tight = sweep_specs(243);
    bool has_bvls = false, has_larger = false;
    for (const FamilySpec& sp : tight) {
        if (sp.family == Family::BvLS) has_bvls = true;
        if (params_for(sp).nu > 243) has_larger = true;
    }
    CHECK(has_bvls);       // 243 vertices sits exactly at the cap
    CHECK(!has_larger);
    CHECK(sweep_specs(2000).size() == 416);
}

TEST_CASE("stored search values recompute from the generators") {
    // Nonsingular-point graphs over GF(2): the stored clique and coclique
    // numbers came from this solver; recompute them from scratch.
    Budget b;
    b.max_seconds = 120;
    {
        Generated gen = generate(no_spec(6, 2, 1));
        SolveResult w = max_clique(gen.graph, std::nullopt, b);
        SolveResult a = max_coclique(gen.graph, std::nullopt, b);
        CHECK(w.status == SolveStatus::Exact);
        CHECK(w.value == 4);
        CHECK(a.status == SolveStatus::Exact);
        CHECK(a.value == 7);
        CHECK(known_omega(no_spec(6, 2, 1)).value().value == 4);
        CHECK(known_alpha(no_spec(6, 2, 1)).value().value == 7);
    }
    {
        Generated gen = generate(no_spec(8, 2, 1));
        SolveResult a = max_coclique(gen.graph, std::nullopt, b);
        CHECK(a.status == SolveStatus::Exact);
        CHECK(a.value == 8);
        CHECK(known_alpha(no_spec(8, 2, 1)).value().value == 8);
    }
    {
        Generated gen = generate(no_spec(10, 2, 1));
        SolveResult a = max_coclique(gen.graph, std::nullopt, b);
        CHECK(a.status == SolveStatus::Exact);
        CHECK(a.value == 9);
        CHECK(known_alpha(no_spec(10, 2, 1)).value().value == 9);
    }
    // The nonisotropic unitary coclique number equals the witness-hint size.
    {
        Generated gen = generate(nu_spec(4));
        SolveResult a = max_coclique(gen.graph, std::nullopt, b);
        CHECK(a.status == SolveStatus::Exact);
        CHECK(a.value == 4);
        CHECK(known_alpha(nu_spec(4)).value().value == 4);
    }
}

TEST_CASE("ternary coset graph reaches its stored independence number") {
    Generated gen = generate(named(Family::BvLS));
    Budget b;
    b.max_nodes = 2'000'000;
    b.max_seconds = 60;
    auto coclique = seed_search(gen.graph, 45, SetMode::Coclique, gen.hint, b, 0);
    REQUIRE(coclique.has_value());
    CHECK(coclique->size() == 45);
    CHECK(verify_witness(gen.graph, *coclique, SetMode::Coclique));

    SolveResult w = max_clique(gen.graph, std::nullopt, b);
    CHECK(w.status == SolveStatus::Exact);
    CHECK(w.value == 3);
}

TEST_CASE("self-test pins the nonisotropic adjacency rules") {
    // Generating any member re-runs the two-candidate rule selection at the
    // smallest admissible parameters; these cover all four rule groups.
    CHECK(checked(no_spec(8, 2, -1)) == quad(136, 63, 30, 28));
    CHECK(checked(no_spec(7, 3, 1)) == quad(378, 260, 178, 180));
    CHECK(checked(no_spec(5, 4, 1)) == quad(136, 75, 42, 40));
    CHECK(checked(nu_spec(5)) == quad(176, 135, 102, 108));
}
