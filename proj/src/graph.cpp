#include "srg/graph.hpp"

#include <bit>
#include <set>
#include <sstream>

#include "srg/error.hpp"

namespace srg {

bool SrgParams::identity_holds() const {
    if (!(0 <= lambda && 0 <= mu && lambda <= k && mu <= k && k < nu)) return false;
    return static_cast<__int128>(k) * (k - lambda - 1) ==
           static_cast<__int128>(nu - k - 1) * mu;
}

SrgParams SrgParams::complement() const {
    return {nu, nu - k - 1, nu - 2 - 2 * k + mu, nu - 2 * k + lambda};
}

std::string SrgParams::to_string() const {
    std::ostringstream os;
    os << "(" << nu << ", " << k << ", " << lambda << ", " << mu << ")";
    return os.str();
}

DenseGraph::DenseGraph(int nu, std::string label)
    : nu_(nu), words_((nu + 63) / 64), label_(std::move(label)) {
    require(nu >= 1, "InvalidParams", "graph needs at least one vertex");
    bits_.assign(static_cast<size_t>(nu_) * words_, 0);
}

void DenseGraph::check(int v) const {
    if (v < 0 || v >= nu_)
        fail("IndexOutOfRange",
             "vertex " + std::to_string(v) + " outside [0, " + std::to_string(nu_) + ")");
}

void DenseGraph::add_edge(int u, int v) {
    check(u);
    check(v);
    require(u != v, "InvalidParams", "loops are not allowed");
    bits_[static_cast<size_t>(u) * words_ + (v >> 6)] |= uint64_t(1) << (v & 63);
    bits_[static_cast<size_t>(v) * words_ + (u >> 6)] |= uint64_t(1) << (u & 63);
}

int DenseGraph::degree(int u) const {
    check(u);
    const uint64_t* r = row(u);
    int d = 0;
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
}

int64_t DenseGraph::edge_count() const {
    int64_t twice = 0;
    for (int u = 0; u < nu_; ++u) twice += degree(u);
    return twice / 2;
}

uint64_t DenseGraph::checksum() const {
    // FNV-1a over (row index, word index, word) triples of nonzero words.
    uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xff;
            h *= 1099511628211ULL;
        }
    };
    mix(static_cast<uint64_t>(nu_));
    for (int u = 0; u < nu_; ++u) {
        const uint64_t* r = row(u);
        for (int w = 0; w < words_; ++w) {
            if (r[w]) {
                mix(static_cast<uint64_t>(u));
                mix(static_cast<uint64_t>(w));
                mix(r[w]);
            }
        }
    }
    return h;
}

bool is_connected(const DenseGraph& g) {
    int n = g.nu();
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        const uint64_t* r = g.row(u);
        for (int w = 0; w < g.words(); ++w) {
            uint64_t bits = r[w];
            while (bits) {
                int v = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                if (!seen[v]) {
                    seen[v] = 1;
                    ++count;
                    stack.push_back(v);
                }
            }
        }
    }
    return count == n;
}

namespace {
int common_neighbours(const DenseGraph& g, int u, int v) {
    const uint64_t* a = g.row(u);
    const uint64_t* b = g.row(v);
    int c = 0;
    for (int w = 0; w < g.words(); ++w) c += std::popcount(a[w] & b[w]);
    return c;
}
}  // namespace

SrgParams verify_srg(const DenseGraph& g) {
    int n = g.nu();
    require(is_connected(g), "Disconnected", "graph is not connected");
    int k = g.degree(0);
    require(k < n - 1 || n == 1, "CompleteGraph", "complete graphs have no third eigenvalue");
    require(n > 1, "CompleteGraph", "single vertex");
    for (int u = 1; u < n; ++u)
        if (g.degree(u) != k)
            fail("NotRegular", "vertex 0 has degree " + std::to_string(k) + " but vertex " +
                                   std::to_string(u) + " has degree " + std::to_string(g.degree(u)));
    int64_t lambda = -1, mu = -1;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            int c = common_neighbours(g, u, v);
            if (g.adjacent(u, v)) {
                if (lambda < 0) lambda = c;
                if (c != lambda)
                    fail("NotStronglyRegular", "adjacent pair (" + std::to_string(u) + ", " +
                                                   std::to_string(v) + ") has " + std::to_string(c) +
                                                   " common neighbours, expected " +
                                                   std::to_string(lambda));
            } else {
                if (mu < 0) mu = c;
                if (c != mu)
                    fail("NotStronglyRegular", "non-adjacent pair (" + std::to_string(u) + ", " +
                                                   std::to_string(v) + ") has " + std::to_string(c) +
                                                   " common neighbours, expected " +
                                                   std::to_string(mu));
            }
        }
    }
    // Connected and not complete: both kinds of pairs exist.
    require(lambda >= 0 && mu >= 0, "InternalError", "pair classification defect");
    SrgParams p{n, k, lambda, mu};
    require(p.identity_holds(), "InternalError", "counting identity defect in verified graph");
    return p;
}

DenseGraph complement(const DenseGraph& g) {
    int n = g.nu();
    DenseGraph c(n, g.label().empty() ? "" : g.label() + "-complement");
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) c.add_edge(u, v);
    return c;
}

DenseGraph induced_subgraph(const DenseGraph& g, const std::vector<int>& vertices) {
    for (int v : vertices)
        if (v < 0 || v >= g.nu())
            fail("IndexOutOfRange", "vertex " + std::to_string(v) + " outside graph");
    DenseGraph h(static_cast<int>(vertices.size()), g.label().empty() ? "" : g.label() + "-induced");
    for (size_t i = 0; i < vertices.size(); ++i)
        for (size_t j = i + 1; j < vertices.size(); ++j)
            if (g.adjacent(vertices[i], vertices[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

namespace {
std::vector<int> unique_checked(const DenseGraph& g, const std::vector<int>& vs) {
    std::set<int> s;
    for (int v : vs) {
        if (v < 0 || v >= g.nu())
            fail("IndexOutOfRange", "vertex " + std::to_string(v) + " outside graph");
        s.insert(v);
    }
    return {s.begin(), s.end()};
}
}  // namespace

bool is_clique(const DenseGraph& g, const std::vector<int>& vertices) {
    auto vs = unique_checked(g, vertices);
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (!g.adjacent(vs[i], vs[j])) return false;
    return true;
}

bool is_coclique(const DenseGraph& g, const std::vector<int>& vertices) {
    auto vs = unique_checked(g, vertices);
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (g.adjacent(vs[i], vs[j])) return false;
    return true;
}

}  // namespace srg
