#pragma once

#include <cstdint>
#include <vector>

#include "srg/gf.hpp"
#include "srg/graph.hpp"

namespace srg {

// Linear code over a prime field, given by a generator matrix.  Small enough
// that exhaustive codeword enumeration (q^k words) is the validation tool.
struct LinearCode {
    Field field;
    int n = 0;  // length
    int k = 0;  // dimension
    std::vector<std::vector<int64_t>> gen;  // k rows of n entries in [0, p)

    // All q^k codewords, message-index order (message digits base p, low first).
    std::vector<std::vector<int64_t>> all_words() const;
    // weight_distribution()[w] = number of codewords of Hamming weight w.
    std::vector<int64_t> weight_distribution() const;
    int min_distance() const;  // minimum nonzero weight
};

// The [24,12,8] extended binary code: cyclic quadratic-residue rows plus a
// parity coordinate, stored as canonical constants and revalidated by full
// weight enumeration on every construction.
LinearCode golay_binary_extended();

// The perfect [11,6,5] ternary code: bordered-circulant construction
// punctured in its last coordinate; revalidated exhaustively.
LinearCode golay_ternary();

// 3-design on v points with fixed block size; blocks as point bitmasks.
struct BlockDesign {
    int v = 0;
    int blocksize = 0;
    std::vector<uint32_t> blocks;
};

// S(3,6,22): the 77 hexads obtained from weight-8 words of the extended
// binary code through the last two coordinates; every 3-subset of the 22
// points lies in exactly one block (checked).
BlockDesign witt_s_3_6_22();

// All 2n signed unit vectors of the code's ambient space (weight-1 coset
// generators), deterministic order: coordinate ascending, then scalar.
std::vector<std::vector<int64_t>> weight_one_vectors(const LinearCode& code);

// Coset graph of the perfect ternary code: vertices are the 3^5 syndromes,
// two cosets adjacent iff their difference contains a generator vector.
// Vertex v encodes syndrome digits s_i as v = sum s_i 3^i.
// Errors: WrongCode (not the [11,6,5] ternary code), InvalidParams (bad
// generator vectors).
DenseGraph coset_graph(const LinearCode& code, const std::vector<std::vector<int64_t>>& generators);

}  // namespace srg
