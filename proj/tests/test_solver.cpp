#include <algorithm>
#include <array>
#include <bit>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"

#include "srg/error.hpp"
#include "srg/graph.hpp"
#include "srg/solver.hpp"

using namespace srg;

namespace {

DenseGraph cycle(int n) {
    DenseGraph g(n, "cycle");
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

// 2-subsets of {0..n-1}, adjacent when they share an element.
DenseGraph triangular_graph(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) pairs.push_back({a, b});
    DenseGraph g(static_cast<int>(pairs.size()), "triangular");
    for (size_t i = 0; i < pairs.size(); ++i)
        for (size_t j = i + 1; j < pairs.size(); ++j) {
            auto [a, b] = pairs[i];
            auto [c, d] = pairs[j];
            if (a == c || a == d || b == c || b == d) g.add_edge(int(i), int(j));
        }
    return g;
}

DenseGraph rook(int n) {
    DenseGraph g(n * n, "rook");
    for (int i = 0; i < n * n; ++i)
        for (int j = i + 1; j < n * n; ++j)
            if (i / n == j / n || i % n == j % n) g.add_edge(i, j);
    return g;
}

// Quadratic-residue adjacency; q an odd prime with q = 1 mod 4.
DenseGraph paley_graph(int q) {
    std::vector<char> qr(q, 0);
    for (int x = 1; x < q; ++x) qr[int(int64_t(x) * x % q)] = 1;
    DenseGraph g(q, "paley");
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j)
            if (qr[(j - i) % q]) g.add_edge(i, j);
    return g;
}

// Folded 5-cube on F_2^4: adjacent when the difference has weight 1 or is 1111.
DenseGraph clebsch() {
    DenseGraph g(16, "clebsch");
    for (int u = 0; u < 16; ++u)
        for (int v = u + 1; v < 16; ++v) {
            int w = std::popcount(unsigned(u ^ v));
            if (w == 1 || (u ^ v) == 15) g.add_edge(u, v);
        }
    return g;
}

// Lines of PG(3,2) (triples {a, b, a^b} of nonzero vectors of F_2^4),
// adjacent when they share a point.
struct LineGraph {
    DenseGraph g;
    std::vector<std::array<int, 3>> lines;
};
LineGraph pg32_lines() {
    std::set<std::array<int, 3>> seen;
    std::vector<std::array<int, 3>> lines;
    for (int a = 1; a < 16; ++a)
        for (int b = a + 1; b < 16; ++b) {
            std::array<int, 3> t{a, b, a ^ b};
            std::sort(t.begin(), t.end());
            if (seen.insert(t).second) lines.push_back(t);
        }
    DenseGraph g(static_cast<int>(lines.size()), "pg32-lines");
    for (size_t i = 0; i < lines.size(); ++i)
        for (size_t j = i + 1; j < lines.size(); ++j) {
            bool meet = false;
            for (int x : lines[i])
                for (int y : lines[j]) meet = meet || x == y;
            if (meet) g.add_edge(int(i), int(j));
        }
    return {std::move(g), std::move(lines)};
}

DenseGraph random_graph(int n, double p, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    DenseGraph g(n, "random");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) g.add_edge(i, j);
    return g;
}

// Independent oracle: plain depth-first extension in index order, no
// colouring, only the trivial size prune.
void brute_rec(const DenseGraph& g, std::vector<int>& cur, std::vector<int>& cand, int64_t& best) {
    best = std::max(best, static_cast<int64_t>(cur.size()));
    for (size_t i = 0; i < cand.size(); ++i) {
        if (static_cast<int64_t>(cur.size() + cand.size() - i) <= best) return;
        int v = cand[i];
        std::vector<int> next;
        for (size_t j = i + 1; j < cand.size(); ++j)
            if (g.adjacent(v, cand[j])) next.push_back(cand[j]);
        cur.push_back(v);
        brute_rec(g, cur, next, best);
        cur.pop_back();
    }
}
int64_t brute_max_clique(const DenseGraph& g) {
    std::vector<int> cur, cand(g.nu());
    for (int i = 0; i < g.nu(); ++i) cand[i] = i;
    int64_t best = 0;
    brute_rec(g, cur, cand, best);
    return best;
}

Budget quick(int64_t nodes = 50'000'000, double secs = 120.0, int threads = 1) {
    Budget b;
    b.max_nodes = nodes;
    b.max_seconds = secs;
    b.threads = threads;
    return b;
}

}  // namespace

TEST_CASE("known clique and coclique numbers") {
    auto c5 = cycle(5);
    auto r1 = max_clique(c5, std::nullopt, quick());
    CHECK(r1.value == 2);
    CHECK(r1.status == SolveStatus::Exact);
    CHECK(verify_witness(c5, r1.witness, SetMode::Clique));
    auto r2 = max_coclique(c5, std::nullopt, quick());
    CHECK(r2.value == 2);
    CHECK(verify_witness(c5, r2.witness, SetMode::Coclique));

    auto p13 = paley_graph(13);
    auto r3 = max_clique(p13, std::nullopt, quick());
    CHECK(r3.value == 3);
    CHECK(r3.status == SolveStatus::Exact);
    CHECK(max_coclique(p13, std::nullopt, quick()).value == 3);

    auto t5 = triangular_graph(5);
    CHECK(max_clique(t5, std::nullopt, quick()).value == 4);
    CHECK(max_coclique(t5, std::nullopt, quick()).value == 2);

    auto t8 = triangular_graph(8);
    CHECK(max_clique(t8, std::nullopt, quick()).value == 7);
    CHECK(max_coclique(t8, std::nullopt, quick()).value == 4);

    auto r6 = rook(6);
    CHECK(max_clique(r6, std::nullopt, quick()).value == 6);
    CHECK(max_coclique(r6, std::nullopt, quick()).value == 6);

    auto cl = clebsch();
    CHECK(max_clique(cl, std::nullopt, quick()).value == 2);
    CHECK(max_coclique(cl, std::nullopt, quick()).value == 5);

    DenseGraph edgeless(10, "edgeless");
    CHECK(max_clique(edgeless, std::nullopt, quick()).value == 1);
    CHECK(max_coclique(edgeless, std::nullopt, quick()).value == 10);
}

TEST_CASE("oracle equivalence on small instances") {
    std::vector<DenseGraph> graphs;
    graphs.push_back(cycle(5));
    graphs.push_back(cycle(9));
    graphs.push_back(triangular_graph(5));
    graphs.push_back(triangular_graph(7));
    graphs.push_back(rook(4));
    graphs.push_back(paley_graph(13));
    graphs.push_back(paley_graph(17));
    graphs.push_back(paley_graph(29));
    graphs.push_back(paley_graph(37));
    graphs.push_back(clebsch());
    for (uint64_t s = 0; s < 6; ++s) graphs.push_back(random_graph(24, 0.5, s));
    graphs.push_back(random_graph(30, 0.3, 99));
    graphs.push_back(random_graph(30, 0.7, 100));
    graphs.push_back(random_graph(40, 0.5, 101));
    for (const auto& g : graphs) {
        CAPTURE(g.label());
        CAPTURE(g.nu());
        auto r = max_clique(g, std::nullopt, quick());
        CHECK(r.status == SolveStatus::Exact);
        CHECK(r.value == brute_max_clique(g));
        CHECK(verify_witness(g, r.witness, SetMode::Clique));
        CHECK(static_cast<int64_t>(r.witness.size()) == r.value);
    }
}

TEST_CASE("clique equals complement coclique") {
    std::vector<DenseGraph> graphs;
    graphs.push_back(triangular_graph(10));
    graphs.push_back(rook(7));
    graphs.push_back(paley_graph(61));
    graphs.push_back(random_graph(60, 0.4, 7));
    for (const auto& g : graphs) {
        CAPTURE(g.label());
        auto a = max_clique(g, std::nullopt, quick());
        auto b = max_coclique(complement(g), std::nullopt, quick());
        CHECK(a.value == b.value);
        CHECK(a.status == SolveStatus::Exact);
        CHECK(b.status == SolveStatus::Exact);
    }
}

TEST_CASE("spectral cap certification") {
    // Line graph of PG(3,2): ratio clique bound 7, met by a point pencil;
    // ratio coclique bound 5, met by a line spread.
    auto lg = pg32_lines();
    auto rc = max_clique(lg.g, 7, quick());
    CHECK(rc.value == 7);
    CHECK(rc.status == SolveStatus::BoundCertified);
    CHECK(verify_witness(lg.g, rc.witness, SetMode::Clique));
    CHECK(rc.witness.size() == 7);
    auto ra = max_coclique(lg.g, 5, quick());
    CHECK(ra.value == 5);
    CHECK(ra.status == SolveStatus::BoundCertified);
    CHECK(verify_witness(lg.g, ra.witness, SetMode::Coclique));

    // Without the cap the same values must come back Exact.
    auto re = max_clique(lg.g, std::nullopt, quick());
    CHECK(re.value == 7);
    CHECK(re.status == SolveStatus::Exact);

    auto t8 = triangular_graph(8);
    auto r8 = max_clique(t8, 7, quick());
    CHECK(r8.value == 7);
    CHECK(r8.status == SolveStatus::BoundCertified);

    // A cap that is not attained: the search exhausts and reports Exact
    // strictly below the cap.
    auto cl = clebsch();
    auto r6 = max_coclique(cl, 6, quick());
    CHECK(r6.value == 5);
    CHECK(r6.status == SolveStatus::Exact);
}

TEST_CASE("budget exhaustion yields a usable lower bound") {
    auto p61 = paley_graph(61);
    auto rn = max_clique(p61, std::nullopt, quick(64, 120.0));
    CHECK(rn.status == SolveStatus::LowerBoundOnly);
    CHECK(rn.value >= 2);
    CHECK(verify_witness(p61, rn.witness, SetMode::Clique));
    CHECK(rn.nodes_explored <= 64 + 64);  // one polling interval of slack

    auto rt = max_clique(p61, std::nullopt, quick(50'000'000, 1e-9));
    CHECK(rt.status == SolveStatus::LowerBoundOnly);
    CHECK(rt.value >= 2);
}

TEST_CASE("deterministic across runs and thread counts") {
    auto p61 = paley_graph(61);
    auto a = max_clique(p61, std::nullopt, quick());
    auto b = max_clique(p61, std::nullopt, quick());
    CHECK(a.value == b.value);
    CHECK(a.status == b.status);
    CHECK(a.witness == b.witness);

    auto c = max_clique(p61, std::nullopt, quick(50'000'000, 120.0, 4));
    CHECK(c.value == a.value);
    CHECK(c.status == a.status);
    CHECK(verify_witness(p61, c.witness, SetMode::Clique));

    auto t12 = triangular_graph(12);
    auto d1 = max_clique(t12, std::nullopt, quick());
    auto d4 = max_clique(t12, std::nullopt, quick(50'000'000, 120.0, 4));
    CHECK(d1.value == 11);
    CHECK(d4.value == 11);
    CHECK(d1.status == SolveStatus::Exact);
    CHECK(d4.status == SolveStatus::Exact);
}

TEST_CASE("seed search finds target sets") {
    auto lg = pg32_lines();
    // Hint path: the pencil of lines through the point 1 is a 7-clique; with
    // a one-iteration budget only the hint can succeed.
    WitnessHint hint;
    for (size_t i = 0; i < lg.lines.size(); ++i)
        if (lg.lines[i][0] == 1) hint.clique.push_back(int(i));
    REQUIRE(hint.clique.size() == 7);
    auto via_hint = seed_search(lg.g, 7, SetMode::Clique, hint, quick(1, 120.0), 0);
    REQUIRE(via_hint.has_value());
    CHECK(via_hint->size() == 7);
    CHECK(verify_witness(lg.g, *via_hint, SetMode::Clique));

    // Greedy path: a rook row.
    auto r6 = rook(6);
    auto row6 = seed_search(r6, 6, SetMode::Clique, {}, quick(1000, 120.0), 0);
    REQUIRE(row6.has_value());
    CHECK(verify_witness(r6, *row6, SetMode::Clique));
    CHECK(row6->size() == 6);

    // Tabu path: a 5-coclique of the folded 5-cube.
    auto cl = clebsch();
    auto cocl = seed_search(cl, 5, SetMode::Coclique, {}, quick(200'000, 120.0), 0);
    REQUIRE(cocl.has_value());
    CHECK(cocl->size() == 5);
    CHECK(verify_witness(cl, *cocl, SetMode::Coclique));

    // A coclique of the line graph meeting the ratio bound (a spread).
    auto spread = seed_search(lg.g, 5, SetMode::Coclique, {}, quick(500'000, 120.0), 0);
    REQUIRE(spread.has_value());
    CHECK(verify_witness(lg.g, *spread, SetMode::Coclique));

    // Single-vertex target always succeeds.
    auto one = seed_search(cl, 1, SetMode::Clique, {}, quick(10, 120.0), 0);
    REQUIRE(one.has_value());
    CHECK(one->size() == 1);

    // Unattainable targets come back empty.
    CHECK_FALSE(seed_search(cycle(5), 3, SetMode::Clique, {}, quick(5000, 120.0), 0).has_value());
    CHECK_FALSE(seed_search(cl, 17, SetMode::Clique, {}, quick(10, 120.0), 0).has_value());

    // Deterministic for a fixed seed.
    auto s1 = seed_search(cl, 5, SetMode::Coclique, {}, quick(200'000, 120.0), 42);
    auto s2 = seed_search(cl, 5, SetMode::Coclique, {}, quick(200'000, 120.0), 42);
    REQUIRE(s1.has_value());
    REQUIRE(s2.has_value());
    CHECK(*s1 == *s2);
}

TEST_CASE("witness verification") {
    auto t5 = triangular_graph(5);  // vertices: pairs 01,02,03,04,12,13,14,23,24,34
    CHECK(verify_witness(t5, {0, 1, 2, 3}, SetMode::Clique));   // pairs containing 0
    CHECK_FALSE(verify_witness(t5, {0, 9}, SetMode::Clique));   // 01 vs 34 disjoint
    CHECK(verify_witness(t5, {0, 9}, SetMode::Coclique));
    CHECK_FALSE(verify_witness(t5, {0, 0}, SetMode::Clique));   // duplicates fail
    CHECK_FALSE(verify_witness(t5, {0, 0}, SetMode::Coclique));
    CHECK(verify_witness(t5, {}, SetMode::Clique));
    CHECK(verify_witness(t5, {3}, SetMode::Coclique));
    CHECK_THROWS_WITH_AS(verify_witness(t5, {0, 10}, SetMode::Clique),
                         doctest::Contains("IndexOutOfRange"), Error);
    CHECK_THROWS_AS(verify_witness(t5, {-1}, SetMode::Coclique), Error);
}

TEST_CASE("input validation") {
    // The graph type itself refuses zero vertices, so the solver never sees
    // an empty instance.
    CHECK_THROWS_AS(DenseGraph(0, "empty"), Error);
    auto c5 = cycle(5);
    Budget bad = quick();
    bad.max_nodes = 0;
    CHECK_THROWS_WITH_AS(max_clique(c5, std::nullopt, bad), doctest::Contains("InvalidParams"),
                         Error);
    bad = quick();
    bad.max_seconds = 0.0;
    CHECK_THROWS_AS(max_clique(c5, std::nullopt, bad), Error);
    CHECK_THROWS_AS(max_clique(c5, 0, quick()), Error);
    CHECK_THROWS_AS(seed_search(c5, 0, SetMode::Clique, {}, quick(), 0), Error);
}
