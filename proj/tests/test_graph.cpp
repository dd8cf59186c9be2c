#include <vector>

#include "doctest.h"
#include "srg/dimacs.hpp"
#include "srg/error.hpp"
#include "srg/graph.hpp"

using srg::DenseGraph;
using srg::SrgParams;

namespace {

DenseGraph cycle(int n) {
    DenseGraph g(n, "C" + std::to_string(n));
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

DenseGraph petersen() {
    // Kneser graph on 2-subsets of {0..4}, adjacent iff disjoint.
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) pairs.emplace_back(a, b);
    DenseGraph g(10, "petersen");
    for (int i = 0; i < 10; ++i)
        for (int j = i + 1; j < 10; ++j) {
            auto [a, b] = pairs[i];
            auto [c, d] = pairs[j];
            if (a != c && a != d && b != c && b != d) g.add_edge(i, j);
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

}  // namespace

TEST_CASE("pentagon is the smallest conference graph") {
    auto p = verify_srg(cycle(5));
    CHECK(p == SrgParams{5, 2, 0, 1});
    CHECK(p.identity_holds());
}

TEST_CASE("Petersen and its complement") {
    auto g = petersen();
    CHECK(verify_srg(g) == SrgParams{10, 3, 0, 1});
    auto t5 = complement(g);
    CHECK(verify_srg(t5) == SrgParams{10, 6, 3, 4});
    CHECK(verify_srg(t5) == verify_srg(g).complement());
    // Involution: complementing twice restores the adjacency matrix.
    auto back = complement(t5);
    for (int u = 0; u < 10; ++u)
        for (int v = 0; v < 10; ++v) CHECK(back.adjacent(u, v) == g.adjacent(u, v));
}

TEST_CASE("verify_srg rejects degenerate inputs") {
    SUBCASE("disconnected") {
        DenseGraph g(4);
        g.add_edge(0, 1);
        g.add_edge(2, 3);
        CHECK_THROWS_WITH_AS(verify_srg(g), doctest::Contains("Disconnected"), srg::Error);
    }
    SUBCASE("complete") {
        DenseGraph g(4);
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) g.add_edge(i, j);
        CHECK_THROWS_WITH_AS(verify_srg(g), doctest::Contains("CompleteGraph"), srg::Error);
    }
    SUBCASE("irregular") {
        DenseGraph g(3);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        CHECK_THROWS_WITH_AS(verify_srg(g), doctest::Contains("NotRegular"), srg::Error);
    }
    SUBCASE("regular but not strongly regular") {
        CHECK_THROWS_WITH_AS(verify_srg(cycle(6)), doctest::Contains("NotStronglyRegular"),
                             srg::Error);
    }
}

TEST_CASE("rook graph structure") {
    auto g = rook(4);
    CHECK(verify_srg(g) == SrgParams{16, 6, 2, 2});
    // A row is a 4-clique; the diagonal is a 4-coclique.
    CHECK(is_clique(g, {0, 1, 2, 3}));
    CHECK_FALSE(is_coclique(g, {0, 1, 2, 3}));
    CHECK(is_coclique(g, {0, 5, 10, 15}));
    CHECK(is_clique(g, {7}));   // singletons are both
    CHECK(is_coclique(g, {7}));
    auto sub = induced_subgraph(g, {0, 1, 2, 3});
    CHECK(sub.nu() == 4);
    CHECK(sub.edge_count() == 6);
    CHECK_THROWS_WITH_AS(induced_subgraph(g, {0, 16}), doctest::Contains("IndexOutOfRange"),
                         srg::Error);
    CHECK_THROWS_AS(is_clique(g, {-1}), srg::Error);
}

TEST_CASE("graph basics and guards") {
    DenseGraph g(3);
    CHECK_THROWS_WITH_AS(g.add_edge(0, 0), doctest::Contains("InvalidParams"), srg::Error);
    CHECK_THROWS_AS(g.add_edge(0, 3), srg::Error);
    g.add_edge(0, 1);
    g.add_edge(0, 1);  // re-adding is a no-op
    CHECK(g.edge_count() == 1);
    CHECK(g.degree(0) == 1);
    CHECK(g.degree(2) == 0);
}

TEST_CASE("checksum is canonical for the labeled adjacency matrix") {
    auto a = rook(4);
    DenseGraph b(16, "different-label-same-edges");
    // Insert the same edges in reverse order.
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < 16; ++u)
        for (int v = u + 1; v < 16; ++v)
            if (a.adjacent(u, v)) edges.emplace_back(u, v);
    for (auto it = edges.rbegin(); it != edges.rend(); ++it) b.add_edge(it->second, it->first);
    CHECK(a.checksum() == b.checksum());
    CHECK(a.checksum() != petersen().checksum());
    CHECK(a.checksum() != complement(a).checksum());
}

TEST_CASE("dimacs round trip") {
    auto g = petersen();
    std::string text = srg::to_dimacs(g);
    CHECK(text.find("p edge 10 15") != std::string::npos);
    auto h = srg::parse_dimacs(text, "reparsed");
    CHECK(h.nu() == 10);
    CHECK(h.checksum() == g.checksum());
    for (int u = 0; u < 10; ++u)
        for (int v = 0; v < 10; ++v) CHECK(h.adjacent(u, v) == g.adjacent(u, v));
}

TEST_CASE("dimacs parser guards") {
    CHECK_THROWS_WITH_AS(srg::parse_dimacs("e 1 2\n"), doctest::Contains("ParseError"), srg::Error);
    CHECK_THROWS_WITH_AS(srg::parse_dimacs("p edge 2 1\ne 1 3\n"),
                         doctest::Contains("IndexOutOfRange"), srg::Error);
    CHECK_THROWS_WITH_AS(srg::parse_dimacs("p edge 2 2\ne 1 2\n"), doctest::Contains("ParseError"),
                         srg::Error);
    CHECK_THROWS_WITH_AS(srg::parse_dimacs("p edge 2 1\ne 1 1\n"), doctest::Contains("ParseError"),
                         srg::Error);
    CHECK_THROWS_WITH_AS(srg::parse_dimacs("p edge 2 1\nq 1 2\n"), doctest::Contains("ParseError"),
                         srg::Error);
    CHECK_THROWS_WITH_AS(srg::parse_dimacs(""), doctest::Contains("ParseError"), srg::Error);
    // Comments and blank lines are fine.
    auto g = srg::parse_dimacs("c hello\n\np edge 3 2\ne 1 2\ne 2 3\nc bye\n");
    CHECK(g.nu() == 3);
    CHECK(g.edge_count() == 2);
}
