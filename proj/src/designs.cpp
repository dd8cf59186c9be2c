#include "srg/designs.hpp"

#include <array>
#include <bit>
#include <set>

#include "srg/error.hpp"

namespace srg {

std::vector<std::vector<int64_t>> LinearCode::all_words() const {
    int64_t p = field.p();
    int64_t total = 1;
    for (int i = 0; i < k; ++i) total *= p;
    std::vector<std::vector<int64_t>> words;
    words.reserve(total);
    for (int64_t msg = 0; msg < total; ++msg) {
        std::vector<int64_t> w(n, 0);
        int64_t m = msg;
        for (int i = 0; i < k; ++i) {
            int64_t c = m % p;
            m /= p;
            if (c)
                for (int j = 0; j < n; ++j) w[j] = (w[j] + c * gen[i][j]) % p;
        }
        words.push_back(std::move(w));
    }
    return words;
}

std::vector<int64_t> LinearCode::weight_distribution() const {
    std::vector<int64_t> dist(n + 1, 0);
    for (const auto& w : all_words()) {
        int wt = 0;
        for (int64_t c : w) wt += (c != 0);
        ++dist[wt];
    }
    return dist;
}

int LinearCode::min_distance() const {
    auto dist = weight_distribution();
    for (int w = 1; w <= n; ++w)
        if (dist[w] > 0) return w;
    fail("InternalError", "zero code has no minimum distance");
}

LinearCode golay_binary_extended() {
    // Rows are cyclic shifts of the degree-11 quadratic-residue generator
    // polynomial over GF(2) (coefficients at exponents 0,1,5,6,7,9,11),
    // extended by an overall parity bit.  Bit j of each constant is
    // coordinate j.
    static constexpr std::array<uint32_t, 12> kRows = {
        0x800ae3, 0x8015c6, 0x802b8c, 0x805718, 0x80ae30, 0x815c60,
        0x82b8c0, 0x857180, 0x8ae300, 0x95c600, 0xab8c00, 0xd71800,
    };
    LinearCode code{Field(2, 1), 24, 12, {}};
    for (uint32_t bits : kRows) {
        std::vector<int64_t> row(24);
        for (int j = 0; j < 24; ++j) row[j] = (bits >> j) & 1;
        code.gen.push_back(std::move(row));
    }
    auto dist = code.weight_distribution();
    bool ok = dist[0] == 1 && dist[8] == 759 && dist[12] == 2576 && dist[16] == 759 &&
              dist[24] == 1;
    for (int w = 1; w <= 7; ++w) ok = ok && dist[w] == 0;
    require(ok, "InternalError", "stored binary code constants failed weight revalidation");
    return code;
}

LinearCode golay_ternary() {
    // Bordered-circulant generator of the [12,6,6] extended ternary code with
    // the last coordinate punctured; systematic [I6 | B] with B's last column
    // removed.
    static constexpr std::array<std::array<int64_t, 11>, 6> kRows = {{
        {1, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1},
        {0, 1, 0, 0, 0, 0, 1, 0, 1, 2, 2},
        {0, 0, 1, 0, 0, 0, 1, 1, 0, 1, 2},
        {0, 0, 0, 1, 0, 0, 1, 2, 1, 0, 1},
        {0, 0, 0, 0, 1, 0, 1, 2, 2, 1, 0},
        {0, 0, 0, 0, 0, 1, 1, 1, 2, 2, 1},
    }};
    LinearCode code{Field(3, 1), 11, 6, {}};
    for (const auto& r : kRows) code.gen.emplace_back(r.begin(), r.end());
    auto dist = code.weight_distribution();
    bool ok = dist[0] == 1 && dist[5] == 132 && dist[6] == 132 && dist[8] == 330 &&
              dist[9] == 110 && dist[11] == 24;
    for (int w = 1; w <= 4; ++w) ok = ok && dist[w] == 0;
    // Perfect code: radius-2 spheres tile GF(3)^11: 729*(1 + 22 + 220) = 3^11.
    ok = ok && 729 * (1 + 22 + 220) == 177147;
    require(ok, "InternalError", "stored ternary code constants failed weight revalidation");
    return code;
}

BlockDesign witt_s_3_6_22() {
    LinearCode golay = golay_binary_extended();
    BlockDesign d{22, 6, {}};
    for (const auto& w : golay.all_words()) {
        int wt = 0;
        for (int64_t c : w) wt += (c != 0);
        if (wt == 8 && w[22] == 1 && w[23] == 1) {
            uint32_t mask = 0;
            for (int j = 0; j < 22; ++j)
                if (w[j]) mask |= uint32_t(1) << j;
            d.blocks.push_back(mask);
        }
    }
    require(d.blocks.size() == 77, "InternalError", "wrong hexad count in 3-design");
    // Every 3-subset of points lies in exactly one block.
    for (int a = 0; a < 22; ++a)
        for (int b = a + 1; b < 22; ++b)
            for (int c = b + 1; c < 22; ++c) {
                uint32_t t = (uint32_t(1) << a) | (uint32_t(1) << b) | (uint32_t(1) << c);
                int count = 0;
                for (uint32_t blk : d.blocks) count += ((blk & t) == t);
                require(count == 1, "InternalError", "triple coverage defect in 3-design");
            }
    return d;
}

std::vector<std::vector<int64_t>> weight_one_vectors(const LinearCode& code) {
    std::vector<std::vector<int64_t>> out;
    for (int j = 0; j < code.n; ++j)
        for (int64_t c = 1; c < code.field.p(); ++c) {
            std::vector<int64_t> v(code.n, 0);
            v[j] = c;
            out.push_back(std::move(v));
        }
    return out;
}

DenseGraph coset_graph(const LinearCode& code,
                       const std::vector<std::vector<int64_t>>& generators) {
    if (code.field.p() != 3 || code.n != 11 || code.k != 6 || code.min_distance() != 5)
        fail("WrongCode", "coset graph is defined for the perfect [11,6,5] ternary code");
    const int64_t p = 3;
    const int rcols = code.n - code.k;  // 5 syndrome digits
    // Systematic generator [I_k | A] expected; verify and read off A.
    for (int i = 0; i < code.k; ++i)
        for (int j = 0; j < code.k; ++j)
            require(code.gen[i][j] == (i == j ? 1 : 0), "WrongCode",
                    "generator matrix is not systematic");
    // Parity check H = [-A^T | I_{n-k}]; syndrome(v) = H v.
    auto syndrome = [&](const std::vector<int64_t>& v) {
        std::vector<int64_t> s(rcols, 0);
        for (int r = 0; r < rcols; ++r) {
            int64_t acc = 0;
            for (int i = 0; i < code.k; ++i) acc += (p - code.gen[i][code.k + r]) % p * v[i];
            acc += v[code.k + r];
            s[r] = acc % p;
        }
        return s;
    };
    auto encode = [&](const std::vector<int64_t>& s) {
        int64_t v = 0;
        for (int i = rcols - 1; i >= 0; --i) v = v * p + s[i];
        return static_cast<int>(v);
    };

    std::set<int> diffs;
    for (const auto& gvec : generators) {
        require(static_cast<int>(gvec.size()) == code.n, "InvalidParams",
                "generator vector length mismatch");
        int wt = 0;
        for (int64_t c : gvec) {
            require(c >= 0 && c < p, "InvalidParams", "generator entry out of range");
            wt += (c != 0);
        }
        require(wt == 1, "InvalidParams", "coset generators must have weight 1");
        int d = encode(syndrome(gvec));
        require(d != 0, "WrongCode", "weight-1 vector lies in the code");
        diffs.insert(d);
    }
    require(diffs.size() == generators.size(), "WrongCode",
            "coset generators are not in distinct cosets");

    int nu = 243;
    DenseGraph g(nu, "coset-graph-243");
    auto add_trits = [&](int a, int b) {
        int v = 0, mulp = 1;
        for (int i = 0; i < rcols; ++i) {
            v += mulp * static_cast<int>((a % 3 + b % 3) % 3);
            a /= 3;
            b /= 3;
            mulp *= 3;
        }
        return v;
    };
    for (int v = 0; v < nu; ++v)
        for (int d : diffs) {
            int u = add_trits(v, d);
            if (u != v) g.add_edge(v, u);
        }
    return g;
}

}  // namespace srg
