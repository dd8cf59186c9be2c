#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace srg {

// Parameter quadruple of a strongly regular graph.
struct SrgParams {
    int64_t nu = 0;
    int64_t k = 0;
    int64_t lambda = 0;
    int64_t mu = 0;

    bool operator==(const SrgParams& o) const = default;
    // Standard counting identity k(k-λ-1) = (ν-k-1)μ plus range sanity.
    bool identity_holds() const;
    SrgParams complement() const;  // (ν, ν-k-1, ν-2-2k+μ, ν-2k+λ)
    std::string to_string() const;
};

// Dense undirected graph on vertices 0..nu-1 with bitset adjacency rows.
// Mutable only through add_edge during construction; treat as immutable
// afterwards (all readers are const and thread-safe).
class DenseGraph {
public:
    explicit DenseGraph(int nu, std::string label = "");

    int nu() const { return nu_; }
    int words() const { return words_; }
    const std::string& label() const { return label_; }
    void set_label(std::string l) { label_ = std::move(l); }

    void add_edge(int u, int v);
    bool adjacent(int u, int v) const {
        check(u);
        check(v);
        return (bits_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1;
    }
    const uint64_t* row(int u) const { return &bits_[static_cast<size_t>(u) * words_]; }
    int degree(int u) const;
    int64_t edge_count() const;

    // Order-independent 64-bit digest of the labeled adjacency matrix,
    // stable across platforms and runs.
    uint64_t checksum() const;

private:
    int nu_;
    int words_;
    std::vector<uint64_t> bits_;
    std::string label_;

    void check(int v) const;
};

// Exact strong-regularity verification by bitset popcounts; equivalent to
// checking A^2 = kI + λA + μ(J - I - A).
// Errors: Disconnected, CompleteGraph, NotRegular, NotStronglyRegular.
SrgParams verify_srg(const DenseGraph& g);

DenseGraph complement(const DenseGraph& g);
bool is_connected(const DenseGraph& g);
DenseGraph induced_subgraph(const DenseGraph& g, const std::vector<int>& vertices);
bool is_clique(const DenseGraph& g, const std::vector<int>& vertices);
bool is_coclique(const DenseGraph& g, const std::vector<int>& vertices);

}  // namespace srg
