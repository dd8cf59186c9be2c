#include <bit>
#include <set>
#include <vector>

#include "doctest.h"
#include "srg/designs.hpp"
#include "srg/error.hpp"
#include "srg/graph.hpp"

using srg::LinearCode;

TEST_CASE("extended binary code is doubly even and self-orthogonal") {
    LinearCode c = srg::golay_binary_extended();
    CHECK(c.n == 24);
    CHECK(c.k == 12);
    // Structural oracle independent of weight enumeration: every generator
    // row has weight divisible by 4 and all pairwise dot products are even.
    for (int i = 0; i < 12; ++i) {
        int wt = 0;
        for (int j = 0; j < 24; ++j) wt += static_cast<int>(c.gen[i][j]);
        CHECK(wt % 4 == 0);
        for (int j2 = 0; j2 < 12; ++j2) {
            int dot = 0;
            for (int j = 0; j < 24; ++j) dot += static_cast<int>(c.gen[i][j] * c.gen[j2][j]);
            CHECK(dot % 2 == 0);
        }
    }
    auto dist = c.weight_distribution();
    CHECK(dist[8] == 759);
    CHECK(dist[12] == 2576);
    CHECK(dist[16] == 759);
    CHECK(c.min_distance() == 8);
    CHECK(c.all_words().size() == 4096);
}

TEST_CASE("perfect ternary code") {
    LinearCode c = srg::golay_ternary();
    CHECK(c.n == 11);
    CHECK(c.k == 6);
    CHECK(c.all_words().size() == 729);
    CHECK(c.min_distance() == 5);
    // Independent re-enumeration of minimum distance, separate code path.
    int best = 99;
    for (int msg = 1; msg < 729; ++msg) {
        int m = msg, wt = 0;
        int64_t word[11] = {0};
        for (int i = 0; i < 6; ++i) {
            int coef = m % 3;
            m /= 3;
            for (int j = 0; j < 11; ++j) word[j] = (word[j] + coef * c.gen[i][j]) % 3;
        }
        for (int64_t x : word) wt += (x != 0);
        best = std::min(best, wt);
    }
    CHECK(best == 5);
    // Sphere packing: radius-2 balls around codewords tile the space.
    CHECK(729 * (1 + 2 * 11 + 4 * 55) == 177147);
}

TEST_CASE("Witt 3-design on 22 points") {
    auto d = srg::witt_s_3_6_22();
    CHECK(d.v == 22);
    CHECK(d.blocksize == 6);
    REQUIRE(d.blocks.size() == 77);
    for (uint32_t b : d.blocks) CHECK(std::popcount(b) == 6);
    // Every point lies in 21 blocks; every pair in 5 blocks.
    for (int p = 0; p < 22; ++p) {
        int cnt = 0;
        for (uint32_t b : d.blocks) cnt += (b >> p) & 1;
        CHECK(cnt == 21);
    }
    for (int p = 0; p < 22; ++p)
        for (int q = p + 1; q < 22; ++q) {
            uint32_t m = (uint32_t(1) << p) | (uint32_t(1) << q);
            int cnt = 0;
            for (uint32_t b : d.blocks) cnt += ((b & m) == m);
            CHECK(cnt == 5);
        }
    // Distinct hexads meet in 0 or 2 points.
    for (size_t i = 0; i < d.blocks.size(); ++i)
        for (size_t j = i + 1; j < d.blocks.size(); ++j) {
            int inter = std::popcount(d.blocks[i] & d.blocks[j]);
            CHECK((inter == 0 || inter == 2));
        }
}

TEST_CASE("coset graph of the ternary code") {
    LinearCode c = srg::golay_ternary();
    auto gens = srg::weight_one_vectors(c);
    REQUIRE(gens.size() == 22);
    auto g = srg::coset_graph(c, gens);
    CHECK(g.nu() == 243);
    CHECK(verify_srg(g) == srg::SrgParams{243, 22, 1, 2});
    // The zero coset sees exactly the 22 weight-1 cosets, all distinct.
    CHECK(g.degree(0) == 22);

    CHECK_THROWS_WITH_AS(srg::coset_graph(srg::golay_binary_extended(), gens),
                         doctest::Contains("WrongCode"), srg::Error);
    std::vector<int64_t> bad(11, 0);
    bad[0] = 1;
    bad[1] = 2;
    CHECK_THROWS_WITH_AS(srg::coset_graph(c, {bad}), doctest::Contains("InvalidParams"),
                         srg::Error);
}
