#include "srg/families.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "srg/catalog.hpp"
#include "srg/designs.hpp"
#include "srg/error.hpp"
#include "srg/gf.hpp"

namespace srg {

namespace {

using Elt = Field::Elt;
using Vec = std::vector<Elt>;

// ---------------------------------------------------------------------------
// Coordinate-vector plumbing.
//
// Vectors over GF(q) are ordered field-lexicographically: coordinate 0 is the
// most significant position and elements compare by their field index.  The
// integer key of a vector is its rank in that order.
// ---------------------------------------------------------------------------

int64_t vec_key(const Vec& v, int64_t q) {
    int64_t key = 0;
    for (Elt c : v) key = key * q + (int64_t)c;
    return key;
}

// Enumerates all q^d vectors in field-lex order.
std::vector<Vec> all_vectors(const Field& F, int d) {
    int64_t q = F.q();
    std::vector<Vec> out;
    Vec v((size_t)d, 0);
    for (;;) {
        out.push_back(v);
        int i = d - 1;
        while (i >= 0) {
            v[(size_t)i] = (Elt)(((int64_t)v[(size_t)i] + 1) % q);
            if (v[(size_t)i] != 0) break;
            --i;
        }
        if (i < 0) break;
    }
    return out;
}

// Projective representatives: first nonzero coordinate equals 1, in
// field-lex order.
std::vector<Vec> projective_points(const Field& F, int d) {
    std::vector<Vec> out;
    for (auto& v : all_vectors(F, d)) {
        int fz = -1;
        for (int i = 0; i < d; ++i)
            if (v[(size_t)i] != 0) { fz = i; break; }
        if (fz >= 0 && v[(size_t)fz] == 1) out.push_back(v);
    }
    return out;
}

Vec vec_add(const Field& F, const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = F.add(a[i], b[i]);
    return r;
}

Vec vec_sub(const Field& F, const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = F.sub(a[i], b[i]);
    return r;
}

Vec vec_scale(const Field& F, Elt c, const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = F.mul(c, a[i]);
    return r;
}

// Scales a nonzero vector so its first nonzero coordinate is 1.
Vec normalize_ray(const Field& F, const Vec& v) {
    for (Elt c : v)
        if (c != 0) return vec_scale(F, F.inv(c), v);
    fail("InternalError", "cannot normalize the zero vector");
}

// Index lookup for a fixed vertex list of vectors.
struct VertexIndex {
    std::map<Vec, int> at;
    explicit VertexIndex(const std::vector<Vec>& verts) {
        for (size_t i = 0; i < verts.size(); ++i) at.emplace(verts[i], (int)i);
    }
    int operator()(const Vec& v) const {
        auto it = at.find(v);
        require(it != at.end(), "InternalError", "witness vector is not a vertex");
        return it->second;
    }
};

// ---------------------------------------------------------------------------
// Quadratic, bilinear and Hermitian forms.
// ---------------------------------------------------------------------------

// Sum of terms c * x_i * x_j with i <= j.
struct QuadForm {
    const Field* F = nullptr;
    struct Term { int i, j; Elt c; };
    std::vector<Term> terms;

    Elt eval(const Vec& x) const {
        Elt acc = 0;
        for (const Term& t : terms)
            acc = F->add(acc, F->mul(t.c, F->mul(x[(size_t)t.i], x[(size_t)t.j])));
        return acc;
    }
    // Polarization B(x,y) = Q(x+y) - Q(x) - Q(y).
    Elt bilin(const Vec& x, const Vec& y) const {
        Elt acc = 0;
        for (const Term& t : terms) {
            if (t.i == t.j) {
                Elt z = F->mul(t.c, F->mul(x[(size_t)t.i], y[(size_t)t.i]));
                acc = F->add(acc, F->add(z, z));
            } else {
                Elt z = F->add(F->mul(x[(size_t)t.i], y[(size_t)t.j]),
                               F->mul(x[(size_t)t.j], y[(size_t)t.i]));
                acc = F->add(acc, F->mul(t.c, z));
            }
        }
        return acc;
    }
};

// First (c, d) in field-index scan order with x^2 + c x + d root-free, making
// x^2 + c x y + d y^2 an irreducible binary norm form.
std::pair<Elt, Elt> irreducible_quadratic(const Field& F) {
    int64_t q = F.q();
    for (int64_t c = 0; c < q; ++c)
        for (int64_t d = 0; d < q; ++d) {
            bool rootfree = true;
            for (int64_t x = 0; x < q && rootfree; ++x) {
                Elt v = F.add(F.mul((Elt)x, (Elt)x), F.add(F.mul((Elt)c, (Elt)x), (Elt)d));
                if (v == 0) rootfree = false;
            }
            if (rootfree) return {(Elt)c, (Elt)d};
        }
    fail("InternalError", "no irreducible quadratic found");
}

// Hyperbolic sum on 2m coordinates: x_0 x_1 + x_2 x_3 + ...
QuadForm plus_form(const Field& F, int m) {
    QuadForm Q;
    Q.F = &F;
    for (int i = 0; i < m; ++i) Q.terms.push_back({2 * i, 2 * i + 1, 1});
    return Q;
}

// Hyperbolic sum with the last pair replaced by an irreducible norm form.
QuadForm minus_form(const Field& F, int m) {
    QuadForm Q;
    Q.F = &F;
    for (int i = 0; i + 1 < m; ++i) Q.terms.push_back({2 * i, 2 * i + 1, 1});
    auto [c, d] = irreducible_quadratic(F);
    Q.terms.push_back({2 * m - 2, 2 * m - 2, 1});
    if (c != 0) Q.terms.push_back({2 * m - 2, 2 * m - 1, c});
    Q.terms.push_back({2 * m - 1, 2 * m - 1, d});
    return Q;
}

// x_0^2 + x_1 x_2 + x_3 x_4 + ... on 2m+1 coordinates.
QuadForm parabolic_form(const Field& F, int m) {
    QuadForm Q;
    Q.F = &F;
    Q.terms.push_back({0, 0, 1});
    for (int i = 0; i < m; ++i) Q.terms.push_back({2 * i + 1, 2 * i + 2, 1});
    return Q;
}

// Hermitian form over GF(q^2) (conjugation x -> x^(q), i.e. Frobenius^a with
// q = p^a): sum over hyperbolic pairs plus optional diagonal slots.
struct HermForm {
    const Field* F = nullptr;
    int a = 0;  // conjugation = frobenius(x, a)
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> diag;

    Elt conj(Elt x) const { return F->frobenius(x, a); }
    Elt eval(const Vec& x, const Vec& y) const {
        Elt acc = 0;
        for (auto [i, j] : pairs) {
            acc = F->add(acc, F->mul(x[(size_t)i], conj(y[(size_t)j])));
            acc = F->add(acc, F->mul(x[(size_t)j], conj(y[(size_t)i])));
        }
        for (int i : diag) acc = F->add(acc, F->mul(x[(size_t)i], conj(y[(size_t)i])));
        return acc;
    }
};

// ---------------------------------------------------------------------------
// Shared graph-filling helpers.
// ---------------------------------------------------------------------------

DenseGraph fill_pairwise(const std::vector<Vec>& verts, const std::string& label,
                         const std::function<bool(const Vec&, const Vec&)>& adjacent) {
    DenseGraph g((int64_t)verts.size(), label);
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (adjacent(verts[i], verts[j])) g.add_edge((int64_t)i, (int64_t)j);
    return g;
}

// Cayley graph on the full vector group GF(q)^d: vertex order is field-lex,
// the connection set is given as vector keys.
DenseGraph cayley_graph(const Field& F, int d, const std::vector<bool>& connected,
                        const std::string& label) {
    auto vecs = all_vectors(F, d);
    int64_t q = F.q();
    DenseGraph g((int64_t)vecs.size(), label);
    for (size_t i = 0; i < vecs.size(); ++i)
        for (size_t j = i + 1; j < vecs.size(); ++j)
            if (connected[(size_t)vec_key(vec_sub(F, vecs[j], vecs[i]), q)])
                g.add_edge((int64_t)i, (int64_t)j);
    return g;
}

// ---------------------------------------------------------------------------
// Triangular, Grid
// ---------------------------------------------------------------------------

Generated build_triangular(const FamilySpec& sp) {
    int n = (int)sp.n;
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    DenseGraph g((int64_t)pairs.size(), sp.to_string());
    for (size_t i = 0; i < pairs.size(); ++i)
        for (size_t j = i + 1; j < pairs.size(); ++j) {
            auto [a, b] = pairs[i];
            auto [c, d] = pairs[j];
            if (a == c || a == d || b == c || b == d) g.add_edge((int64_t)i, (int64_t)j);
        }
    WitnessHint hint;
    for (size_t i = 0; i < pairs.size(); ++i) {
        if (pairs[i].first == 0) hint.clique.push_back((int)i);
        if (pairs[i].second == pairs[i].first + 1 && pairs[i].first % 2 == 0)
            hint.coclique.push_back((int)i);
    }
    hint.provenance = "pairs through a fixed point; a perfect matching";
    return {std::move(g), std::move(hint)};
}

Generated build_grid(const FamilySpec& sp) {
    int n = (int)sp.n;
    DenseGraph g((int64_t)n * n, sp.to_string());
    for (int i = 0; i < n * n; ++i)
        for (int j = i + 1; j < n * n; ++j)
            if (i / n == j / n || i % n == j % n) g.add_edge(i, j);
    WitnessHint hint;
    for (int j = 0; j < n; ++j) hint.clique.push_back(j);          // row 0
    for (int i = 0; i < n; ++i) hint.coclique.push_back(n * i + i);  // diagonal
    hint.provenance = "a row; the main diagonal";
    return {std::move(g), std::move(hint)};
}

// ---------------------------------------------------------------------------
// Cyclotomic Cayley graphs on a field: Paley, Peisert, van Lint-Schrijver
// ---------------------------------------------------------------------------

Generated build_paley(const FamilySpec& sp) {
    auto [p, k] = prime_power_decomposition(sp.q);
    Field F(p, k);
    auto classes = F.power_classes(2);
    std::vector<bool> conn((size_t)sp.q, false);
    for (Elt x : classes[0]) conn[x] = true;
    DenseGraph g = cayley_graph(F, 1, conn, sp.to_string());
    WitnessHint hint;
    if (k % 2 == 0) {
        Elt gen = F.primitive();
        for (Elt x : F.subfield_elements(k / 2)) {
            hint.clique.push_back((int)x);
            hint.coclique.push_back((int)F.mul(gen, x));
        }
        std::sort(hint.clique.begin(), hint.clique.end());
        std::sort(hint.coclique.begin(), hint.coclique.end());
        hint.provenance = "square-root subfield; a primitive multiple of it";
    }
    return {std::move(g), std::move(hint)};
}

Generated build_peisert(const FamilySpec& sp) {
    Field F(sp.p, (int)(2 * sp.t));
    auto classes = F.power_classes(4);
    std::vector<bool> conn((size_t)F.q(), false);
    for (int m : {0, 1})
        for (Elt x : classes[(size_t)m]) conn[x] = true;
    DenseGraph g = cayley_graph(F, 1, conn, sp.to_string());
    WitnessHint hint;
    if (sp.t % 2 == 1) {
        Elt gen = F.primitive();
        Elt g2 = F.mul(gen, gen);
        for (Elt x : F.subfield_elements((int)sp.t)) {
            hint.clique.push_back((int)x);
            hint.coclique.push_back((int)F.mul(g2, x));
        }
        std::sort(hint.clique.begin(), hint.clique.end());
        std::sort(hint.coclique.begin(), hint.coclique.end());
        hint.provenance = "square-root subfield; its translate by a square non-quartic";
    }
    return {std::move(g), std::move(hint)};
}

Generated build_vls(const FamilySpec& sp) {
    Field F(sp.p, (int)((sp.e - 1) * sp.t));
    auto classes = F.power_classes(sp.e);
    std::vector<bool> conn((size_t)F.q(), false);
    for (Elt x : classes[0]) conn[x] = true;
    DenseGraph g = cayley_graph(F, 1, conn, sp.to_string());
    WitnessHint hint;
    if (sp.t % 2 == 1) {
        Elt gen = F.primitive();
        for (Elt x : F.subfield_elements((int)((sp.e - 1) * sp.t / 2))) {
            hint.clique.push_back((int)x);
            hint.coclique.push_back((int)F.mul(gen, x));
        }
        std::sort(hint.clique.begin(), hint.clique.end());
        std::sort(hint.coclique.begin(), hint.coclique.end());
        hint.provenance = "square-root subfield; a non-power multiple of it";
    }
    return {std::move(g), std::move(hint)};
}

// ---------------------------------------------------------------------------
// Grassmann J_q(n, 2)
// ---------------------------------------------------------------------------

Generated build_grassmann(const FamilySpec& sp) {
    auto [p, k] = prime_power_decomposition(sp.q);
    Field F(p, k);
    int n = (int)sp.n;
    int64_t q = F.q();

    auto points = projective_points(F, n);
    std::map<Vec, int> point_id;
    for (size_t i = 0; i < points.size(); ++i) point_id.emplace(points[i], (int)i);
    size_t words = (points.size() + 63) / 64;

    // Reduced-echelon bases of all 2-spaces: pivots i < j, row0 = e_i + free
    // entries on the non-pivot columns right of i, row1 = e_j + free entries
    // right of j.
    struct Plane {
        Vec flat;                    // row0 then row1, the sort key
        std::vector<uint64_t> mask;  // projective points as a bitset
    };
    std::vector<Plane> planes;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<int> free0, free1;
            for (int c = i + 1; c < n; ++c)
                if (c != j) free0.push_back(c);
            for (int c = j + 1; c < n; ++c) free1.push_back(c);
            int64_t count0 = 1, count1 = 1;
            for (size_t t = 0; t < free0.size(); ++t) count0 *= q;
            for (size_t t = 0; t < free1.size(); ++t) count1 *= q;
            for (int64_t a = 0; a < count0; ++a)
                for (int64_t b = 0; b < count1; ++b) {
                    Vec r0((size_t)n, 0), r1((size_t)n, 0);
                    r0[(size_t)i] = 1;
                    r1[(size_t)j] = 1;
                    int64_t av = a;
                    for (size_t t = free0.size(); t-- > 0;) {
                        r0[(size_t)free0[t]] = (Elt)(av % q);
                        av /= q;
                    }
                    int64_t bv = b;
                    for (size_t t = free1.size(); t-- > 0;) {
                        r1[(size_t)free1[t]] = (Elt)(bv % q);
                        bv /= q;
                    }
                    Plane pl;
                    pl.flat = r0;
                    pl.flat.insert(pl.flat.end(), r1.begin(), r1.end());
                    pl.mask.assign(words, 0);
                    for (int64_t al = 0; al < q; ++al)
                        for (int64_t be = 0; be < q; ++be) {
                            if (al == 0 && be == 0) continue;
                            Vec v = vec_add(F, vec_scale(F, (Elt)al, r0), vec_scale(F, (Elt)be, r1));
                            int id = point_id.at(normalize_ray(F, v));
                            pl.mask[(size_t)id / 64] |= (uint64_t)1 << (id % 64);
                        }
                    planes.push_back(std::move(pl));
                }
        }
    std::sort(planes.begin(), planes.end(),
              [](const Plane& a, const Plane& b) { return a.flat < b.flat; });

    DenseGraph g((int64_t)planes.size(), sp.to_string());
    for (size_t i = 0; i < planes.size(); ++i)
        for (size_t j = i + 1; j < planes.size(); ++j) {
            bool meet = false;
            for (size_t w = 0; w < words && !meet; ++w)
                if (planes[i].mask[w] & planes[j].mask[w]) meet = true;
            if (meet) g.add_edge((int64_t)i, (int64_t)j);
        }

    WitnessHint hint;
    int e0 = point_id.at([&] {
        Vec v((size_t)n, 0);
        v[0] = 1;
        return v;
    }());
    for (size_t i = 0; i < planes.size(); ++i)
        if (planes[i].mask[(size_t)e0 / 64] >> (e0 % 64) & 1) hint.clique.push_back((int)i);
    hint.provenance = "the pencil of planes through a fixed projective point";
    return {std::move(g), std::move(hint)};
}

// ---------------------------------------------------------------------------
// Bilinear forms H_q(2, m): pairs of row vectors, rank-1 difference adjacency
// ---------------------------------------------------------------------------

Generated build_bilinear(const FamilySpec& sp) {
    auto [p, k] = prime_power_decomposition(sp.q);
    Field F(p, k);
    int m = (int)sp.m;
    int64_t q = F.q();
    int d = 2 * m;  // vertex vector = row0 || row1

    // Connection set: nonzero (r0, r1) with proportional rows.
    auto rows = all_vectors(F, m);
    std::vector<bool> conn((size_t)1, false);
    {
        int64_t total = 1;
        for (int t = 0; t < d; ++t) total *= q;
        conn.assign((size_t)total, false);
        for (auto& r : rows) {
            bool zero = true;
            for (Elt c : r) zero = zero && c == 0;
            if (zero) continue;
            // (r, c*r) and (0, r) and (r, 0) span all rank-one differences
            for (int64_t c = 0; c < q; ++c) {
                Vec v = r;
                Vec second = vec_scale(F, (Elt)c, r);
                v.insert(v.end(), second.begin(), second.end());
                conn[(size_t)vec_key(v, q)] = true;
            }
            Vec v((size_t)m, 0);
            v.insert(v.end(), r.begin(), r.end());
            conn[(size_t)vec_key(v, q)] = true;
        }
    }
    DenseGraph g = cayley_graph(F, d, conn, sp.to_string());

    // Companion matrix of the first root-free monic degree-m polynomial:
    // multiplying by it has no eigenvector, so {(x, Mx)} is a coclique.
    std::vector<Vec> comp;  // columns of M
    {
        Vec coeff;  // c_0 .. c_{m-1} of x^m + c_{m-1} x^{m-1} + ... + c_0
        auto tuples = all_vectors(F, m);
        bool found = false;
        for (auto& t : tuples) {
            bool rootfree = true;
            for (int64_t x = 0; x < q && rootfree; ++x) {
                Elt acc = 1;  // x^m accumulated by Horner from the top
                for (int i = m - 1; i >= 0; --i)
                    acc = F.add(F.mul(acc, (Elt)x), t[(size_t)i]);
                if (acc == 0) rootfree = false;
            }
            if (rootfree) {
                coeff = t;
                found = true;
                break;
            }
        }
        require(found, "InternalError", "no root-free polynomial found");
        comp.assign((size_t)m, Vec((size_t)m, 0));
        for (int i = 0; i + 1 < m; ++i) comp[(size_t)i][(size_t)(i + 1)] = 1;  // column i
        for (int i = 0; i < m; ++i) comp[(size_t)(m - 1)][(size_t)i] = F.neg(coeff[(size_t)i]);
        // comp[j] holds column j as a vector; M x = sum_j x_j * column_j.
    }
    auto mulM = [&](const Vec& x) {
        Vec y((size_t)m, 0);
        for (int jc = 0; jc < m; ++jc)
            for (int i = 0; i < m; ++i)
                y[(size_t)i] = F.add(y[(size_t)i], F.mul(comp[(size_t)jc][(size_t)i], x[(size_t)jc]));
        return y;
    };

    WitnessHint hint;
    for (auto& x : rows) {
        Vec vclique = x;
        Vec zeros((size_t)m, 0);
        vclique.insert(vclique.end(), zeros.begin(), zeros.end());
        hint.clique.push_back((int)vec_key(vclique, q));
        Vec vco = x;
        Vec mx = mulM(x);
        vco.insert(vco.end(), mx.begin(), mx.end());
        hint.coclique.push_back((int)vec_key(vco, q));
    }
    std::sort(hint.clique.begin(), hint.clique.end());
    std::sort(hint.coclique.begin(), hint.coclique.end());
    hint.provenance = "matrices with zero second row; graphs of an eigenvalue-free map";
    return {std::move(g), std::move(hint)};
}

// Column-vector convention note: comp[j][i] above stores entry (i, j); the
// companion's last ROW carries the negated coefficients.  mulM applies it as
// y_i = sum_j M[i][j] x_j with M[i][j] = comp[j][i].

// ---------------------------------------------------------------------------
// Polar space collinearity graphs
// ---------------------------------------------------------------------------

Generated build_polar(const FamilySpec& sp) {
    auto [p, a] = prime_power_decomposition(sp.q);
    int d = (int)sp.dim;       // projective dimension
    int nvec = d + 1;          // vector-space dimension
    bool hermitian = sp.polar == PolarType::H;
    Field F = hermitian ? Field(p, 2 * a) : Field(p, a);

    std::vector<Vec> verts;
    std::function<bool(const Vec&, const Vec&)> perp;
    HermForm H;
    QuadForm Q;
    std::vector<std::pair<int, int>> sympairs;
    int rank = 0;

    if (sp.polar == PolarType::W) {
        rank = nvec / 2;
        for (int i = 0; i < rank; ++i) sympairs.emplace_back(2 * i, 2 * i + 1);
        verts = projective_points(F, nvec);
        perp = [&F, sympairs](const Vec& x, const Vec& y) {
            Elt acc = 0;
            for (auto [i, j] : sympairs) {
                acc = F.add(acc, F.mul(x[(size_t)i], y[(size_t)j]));
                acc = F.sub(acc, F.mul(x[(size_t)j], y[(size_t)i]));
            }
            return acc == 0;
        };
    } else if (hermitian) {
        H.F = &F;
        H.a = a;
        rank = nvec / 2;
        for (int i = 0; i < rank; ++i) H.pairs.emplace_back(2 * i, 2 * i + 1);
        if (nvec % 2 == 1) H.diag.push_back(nvec - 1);
        for (auto& v : projective_points(F, nvec))
            if (H.eval(v, v) == 0) verts.push_back(v);
        perp = [&H](const Vec& x, const Vec& y) { return H.eval(x, y) == 0; };
    } else {
        if (sp.polar == PolarType::Q) {
            rank = d / 2;
            Q = parabolic_form(F, rank);
        } else if (sp.polar == PolarType::Qplus) {
            rank = (d + 1) / 2;
            Q = plus_form(F, rank);
        } else {
            rank = (d - 1) / 2;
            Q = minus_form(F, rank + 1);
        }
        for (auto& v : projective_points(F, nvec))
            if (Q.eval(v) == 0) verts.push_back(v);
        perp = [&Q](const Vec& x, const Vec& y) { return Q.bilin(x, y) == 0; };
    }

    DenseGraph g = fill_pairwise(verts, sp.to_string(), perp);

    // Clique hint: the projective points of a maximal totally isotropic
    // subspace spanned by the first member of every hyperbolic pair.
    WitnessHint hint;
    {
        VertexIndex index(verts);
        std::vector<Vec> basis;
        for (int i = 0; i < rank; ++i) {
            Vec v((size_t)nvec, 0);
            int slot = sp.polar == PolarType::Q ? 2 * i + 1 : 2 * i;
            v[(size_t)slot] = 1;
            basis.push_back(v);
        }
        for (auto& coefs : all_vectors(F, rank)) {
            Vec v((size_t)nvec, 0);
            bool zero = true;
            for (int i = 0; i < rank; ++i)
                if (coefs[(size_t)i] != 0) {
                    zero = false;
                    v = vec_add(F, v, vec_scale(F, coefs[(size_t)i], basis[(size_t)i]));
                }
            if (zero) continue;
            Vec n = normalize_ray(F, v);
            if (n == v) hint.clique.push_back(index(n));
        }
        std::sort(hint.clique.begin(), hint.clique.end());
        hint.provenance = "points of a maximal totally isotropic subspace";
    }
    return {std::move(g), std::move(hint)};
}

// ---------------------------------------------------------------------------
// Nonsingular-point graphs NO^eps and nonisotropic unitary graphs NU.
//
// Adjacency rules are fixed by the two-candidate selection protocol (see
// rule_selftest below): even dimension over GF(2)/GF(3) join perpendicular
// points; odd dimension over GF(3) and the unitary family join
// NON-perpendicular points; odd dimension over even fields uses hyperplane
// sections of the parabolic quadric, joined when the common section is
// degenerate (points cannot work there: the count q^(2m) includes the
// nucleus, which is perpendicular to everything).
// ---------------------------------------------------------------------------

enum class PairRule { Perp, NonPerp, Degenerate, NonDegenerate };

DenseGraph build_no_graph(const FamilySpec& sp, PairRule rule) {
    auto [p, a] = prime_power_decomposition(sp.q);
    Field F(p, a);
    int d = (int)sp.dim;
    SrgParams want = params_for(sp);

    if (d % 2 == 0) {
        // q in {2, 3}: one square class of nonsingular points, perpendicular
        // adjacency.
        int m = d / 2;
        QuadForm Q = sp.epsilon == 1 ? plus_form(F, m) : minus_form(F, m);
        std::vector<Vec> verts;
        if (sp.q == 2) {
            for (auto& v : all_vectors(F, d))
                if (Q.eval(v) == 1) verts.push_back(v);
        } else {
            for (auto& v : projective_points(F, d))
                if (Q.eval(v) == 1) verts.push_back(v);
        }
        require((int64_t)verts.size() == want.nu, "InternalError",
                "nonsingular class size does not match the expected vertex count");
        return fill_pairwise(verts, sp.to_string(), [&Q, rule](const Vec& x, const Vec& y) {
            return (Q.bilin(x, y) == 0) == (rule == PairRule::Perp);
        });
    }
    int m = (d - 1) / 2;
    if (sp.q == 3) {
        // Square class selected by size; non-perpendicular adjacency.
        QuadForm Q = parabolic_form(F, m);
        std::vector<Vec> verts;
        for (int cls = 1; cls <= 2 && (int64_t)verts.size() != want.nu; ++cls) {
            verts.clear();
            for (auto& v : projective_points(F, d))
                if ((int)Q.eval(v) == cls) verts.push_back(v);
        }
        require((int64_t)verts.size() == want.nu, "InternalError",
                "no square class matches the expected vertex count");
        return fill_pairwise(verts, sp.to_string(), [&Q, rule](const Vec& x, const Vec& y) {
            return (Q.bilin(x, y) == 0) == (rule == PairRule::Perp);
        });
    }
    // Even field: vertices are hyperplanes avoiding the nucleus, encoded by
    // the dual vector a' with functional x_0 + sum a'_i x_(i+1); the section
    // type is the trace of the dual hyperbolic form.
    QuadForm Qs = plus_form(F, m);
    auto trace = [&](Elt x) {
        Elt s = x, pw = x;
        for (int i = 1; i < a; ++i) {
            pw = F.mul(pw, pw);
            s = F.add(s, pw);
        }
        return s;
    };
    std::vector<Vec> verts;
    for (auto& v : all_vectors(F, 2 * m))
        if ((trace(Qs.eval(v)) == 0) == (sp.epsilon == 1)) verts.push_back(v);
    require((int64_t)verts.size() == want.nu, "InternalError",
            "hyperplane class size does not match the expected vertex count");
    return fill_pairwise(verts, sp.to_string(), [&F, &Qs, rule](const Vec& x, const Vec& y) {
        Elt b = Qs.bilin(x, y);
        bool degen = Qs.eval(vec_add(F, x, y)) == F.mul(b, b);
        return degen == (rule == PairRule::Degenerate);
    });
}

DenseGraph build_nu_graph(const FamilySpec& sp, PairRule rule) {
    Field F(2, 2);
    int m = (int)sp.m;
    HermForm H;
    H.F = &F;
    H.a = 1;
    for (int i = 0; i < m; ++i) H.diag.push_back(i);
    std::vector<Vec> verts;
    for (auto& v : projective_points(F, m))
        if (H.eval(v, v) != 0) verts.push_back(v);
    return fill_pairwise(verts, sp.to_string(), [&H, rule](const Vec& x, const Vec& y) {
        return (H.eval(x, y) == 0) == (rule == PairRule::Perp);
    });
}

PairRule selected_rule(const FamilySpec& sp) {
    if (sp.family == Family::NU) return PairRule::NonPerp;
    if (sp.dim % 2 == 0) return PairRule::Perp;
    if (sp.q == 3) return PairRule::NonPerp;
    return PairRule::Degenerate;
}

// Re-runs the two-candidate rule selection at the smallest admissible
// parameters for the requested (family, field, parity) and checks that
// exactly the hard-coded rule reproduces the catalog parameters.  Memoized
// per process.
void rule_selftest(const FamilySpec& sp) {
    struct Key {
        Family fam;
        int64_t q;
        int parity;
        bool operator<(const Key& o) const {
            return std::tie(fam, q, parity) < std::tie(o.fam, o.q, o.parity);
        }
    };
    static std::mutex mu;
    static std::set<Key> done;
    Key key{sp.family, sp.q, (int)(sp.dim % 2)};
    {
        std::lock_guard<std::mutex> lock(mu);
        if (done.count(key)) return;
    }

    FamilySpec smallest = sp;
    if (sp.family == Family::NU) {
        smallest.m = 4;
    } else if (sp.dim % 2 == 0) {
        smallest.dim = 6;
        smallest.epsilon = 1;
    } else {
        smallest.dim = 5;
        smallest.epsilon = sp.q == 3 ? 1 : -1;
    }
    SrgParams want = params_for(smallest);
    PairRule pick = selected_rule(smallest);
    PairRule other;
    switch (pick) {
        case PairRule::Perp: other = PairRule::NonPerp; break;
        case PairRule::NonPerp: other = PairRule::Perp; break;
        case PairRule::Degenerate: other = PairRule::NonDegenerate; break;
        default: other = PairRule::Degenerate; break;
    }
    auto matches = [&](PairRule rule) {
        DenseGraph g = sp.family == Family::NU ? build_nu_graph(smallest, rule)
                                               : build_no_graph(smallest, rule);
        try {
            SrgParams got = verify_srg(g);
            return got.nu == want.nu && got.k == want.k && got.lambda == want.lambda &&
                   got.mu == want.mu;
        } catch (const Error&) {
            return false;
        }
    };
    require(matches(pick), "InternalError",
            "adjacency-rule self-test failed: the selected rule does not reproduce "
            "the catalog parameters");
    require(!matches(other), "InternalError",
            "adjacency-rule self-test failed: the rule selection is ambiguous");
    std::lock_guard<std::mutex> lock(mu);
    done.insert(key);
}

Generated build_no(const FamilySpec& sp) {
    rule_selftest(sp);
    DenseGraph g = build_no_graph(sp, selected_rule(sp));
    WitnessHint hint;
    if (sp.q == 2) {
        // Pair sums e_{2i} + e_{2i+1} are pairwise perpendicular with unit
        // form value; odd-size subsets of them give 2^(m-1) vertices whose
        // pairwise perpendicularity and form value 1 survive addition.
        int m = (int)sp.dim / 2;
        Field F(2, 1);
        QuadForm Q = sp.epsilon == 1 ? plus_form(F, m) : minus_form(F, m);
        std::vector<Vec> verts;
        for (auto& v : all_vectors(F, (int)sp.dim))
            if (Q.eval(v) == 1) verts.push_back(v);
        VertexIndex index(verts);
        for (int64_t subset = 1; subset < (1 << m); ++subset) {
            int bits = 0;
            for (int i = 0; i < m; ++i) bits += (int)(subset >> i & 1);
            if (bits % 2 == 0) continue;
            Vec v((size_t)sp.dim, 0);
            for (int i = 0; i < m; ++i)
                if (subset >> i & 1) {
                    v[(size_t)(2 * i)] = 1;
                    v[(size_t)(2 * i + 1)] = 1;
                }
            hint.clique.push_back(index(v));
        }
        std::sort(hint.clique.begin(), hint.clique.end());
        hint.provenance = "odd sums of perpendicular unit pair-vectors";
    }
    return {std::move(g), std::move(hint)};
}

Generated build_nu(const FamilySpec& sp) {
    rule_selftest(sp);
    DenseGraph g = build_nu_graph(sp, selected_rule(sp));
    WitnessHint hint;
    // The standard basis is orthonormal for the diagonal Hermitian form, so
    // it is pairwise perpendicular: a coclique under the non-perpendicular
    // adjacency.
    Field F(2, 2);
    std::vector<Vec> verts;
    HermForm H;
    H.F = &F;
    H.a = 1;
    for (int i = 0; i < (int)sp.m; ++i) H.diag.push_back(i);
    for (auto& v : projective_points(F, (int)sp.m))
        if (H.eval(v, v) != 0) verts.push_back(v);
    VertexIndex index(verts);
    for (int i = 0; i < (int)sp.m; ++i) {
        Vec v((size_t)sp.m, 0);
        v[(size_t)i] = 1;
        hint.coclique.push_back(index(v));
    }
    std::sort(hint.coclique.begin(), hint.coclique.end());
    hint.provenance = "an orthonormal basis";
    return {std::move(g), std::move(hint)};
}

// ---------------------------------------------------------------------------
// Affine polar graphs VO^eps_{2m}(q) and the Suzuki-Tits affine graph VSz(q)
// ---------------------------------------------------------------------------

Generated build_vo(const FamilySpec& sp) {
    auto [p, a] = prime_power_decomposition(sp.q);
    Field F(p, a);
    int m = (int)sp.m;
    int d = 2 * m;
    bool plus = sp.family == Family::VOplus;
    QuadForm Q = plus ? plus_form(F, m) : minus_form(F, m);
    int64_t q = F.q();

    int64_t total = 1;
    for (int t = 0; t < d; ++t) total *= q;
    std::vector<bool> conn((size_t)total, false);
    for (auto& v : all_vectors(F, d)) {
        bool zero = true;
        for (Elt c : v) zero = zero && c == 0;
        if (!zero && Q.eval(v) == 0) conn[(size_t)vec_key(v, q)] = true;
    }
    DenseGraph g = cayley_graph(F, d, conn, sp.to_string());

    // Clique hint: a maximal totally singular subspace (all q^w vectors,
    // differences stay inside, so all differences are singular).
    WitnessHint hint;
    int w = plus ? m : m - 1;
    for (auto& coefs : all_vectors(F, w)) {
        Vec v((size_t)d, 0);
        for (int i = 0; i < w; ++i) v[(size_t)(2 * i)] = coefs[(size_t)i];
        hint.clique.push_back((int)vec_key(v, q));
    }
    std::sort(hint.clique.begin(), hint.clique.end());
    hint.provenance = "a maximal totally singular subspace";
    return {std::move(g), std::move(hint)};
}

Generated build_vsz(const FamilySpec& sp) {
    auto [p, a] = prime_power_decomposition(sp.q);
    Field F(p, a);
    int64_t q = F.q();
    int64_t sigma = 1;
    {
        int e = (a - 1) / 2;  // q = 2^(2e+1)
        sigma = (int64_t)1 << (e + 1);
    }
    // Ovoid representatives (0,0,0,1) and (1, a, b, ab + a^(sigma+2) + b^sigma).
    std::vector<Vec> ovoid;
    ovoid.push_back({0, 0, 0, 1});
    for (int64_t av = 0; av < q; ++av)
        for (int64_t bv = 0; bv < q; ++bv) {
            Elt ae = (Elt)av, be = (Elt)bv;
            Elt last = F.add(F.mul(ae, be), F.add(F.pow(ae, sigma + 2), F.pow(be, sigma)));
            ovoid.push_back({1, ae, be, last});
        }
    int64_t total = q * q * q * q;
    std::vector<bool> conn((size_t)total, false);
    for (auto& o : ovoid)
        for (int64_t c = 1; c < q; ++c) conn[(size_t)vec_key(vec_scale(F, (Elt)c, o), q)] = true;
    DenseGraph g = cayley_graph(F, 4, conn, sp.to_string());
    return {std::move(g), WitnessHint{}};
}

// ---------------------------------------------------------------------------
// Design-based graphs: coset graph of the perfect ternary code, its dual
// Cayley graph, the binary even-weight quotient, and the Witt-design family
// ---------------------------------------------------------------------------

Generated build_bvls(const std::string& label) {
    LinearCode code = golay_ternary();
    DenseGraph g = coset_graph(code, weight_one_vectors(code));
    g.set_label(label);
    return {std::move(g), WitnessHint{}};
}

// Dual of the perfect ternary code as a Cayley graph with weight-9 connection.
Generated build_row13(const std::string& label) {
    LinearCode code = golay_ternary();
    int n = code.n;
    // Null space of the generator matrix over GF(3).
    std::vector<std::vector<int64_t>> rows = code.gen;
    int kdim = code.k;
    std::vector<int> pivot_col(kdim, -1);
    int rank = 0;
    for (int col = 0; col < n && rank < kdim; ++col) {
        int sel = -1;
        for (int r = rank; r < kdim; ++r)
            if (rows[(size_t)r][(size_t)col] % 3 != 0) { sel = r; break; }
        if (sel < 0) continue;
        std::swap(rows[(size_t)rank], rows[(size_t)sel]);
        int64_t invp = rows[(size_t)rank][(size_t)col] % 3 == 1 ? 1 : 2;
        for (int c = 0; c < n; ++c)
            rows[(size_t)rank][(size_t)c] = rows[(size_t)rank][(size_t)c] * invp % 3;
        for (int r = 0; r < kdim; ++r) {
            if (r == rank) continue;
            int64_t f = rows[(size_t)r][(size_t)col] % 3;
            if (!f) continue;
            for (int c = 0; c < n; ++c)
                rows[(size_t)r][(size_t)c] =
                    ((rows[(size_t)r][(size_t)c] - f * rows[(size_t)rank][(size_t)c]) % 3 + 3) % 3;
        }
        pivot_col[(size_t)rank] = col;
        ++rank;
    }
    require(rank == kdim, "InternalError", "code generator matrix is not full rank");
    std::vector<bool> is_pivot((size_t)n, false);
    for (int r = 0; r < kdim; ++r) is_pivot[(size_t)pivot_col[(size_t)r]] = true;
    LinearCode dual{code.field, n, n - kdim, {}};
    for (int col = 0; col < n; ++col) {
        if (is_pivot[(size_t)col]) continue;
        std::vector<int64_t> w((size_t)n, 0);
        w[(size_t)col] = 1;
        for (int r = 0; r < kdim; ++r)
            w[(size_t)pivot_col[(size_t)r]] = (3 - rows[(size_t)r][(size_t)col] % 3) % 3;
        dual.gen.push_back(std::move(w));
    }
    auto dist = dual.weight_distribution();
    require(dist[6] == 132 && dist[9] == 110, "InternalError",
            "dual code weight distribution is not 1 + 132 x^6 + 110 x^9");

    auto words = dual.all_words();
    std::sort(words.begin(), words.end());
    DenseGraph g((int64_t)words.size(), label);
    for (size_t i = 0; i < words.size(); ++i)
        for (size_t j = i + 1; j < words.size(); ++j) {
            int wt = 0;
            for (int c = 0; c < n; ++c)
                if (words[i][(size_t)c] != words[j][(size_t)c]) ++wt;
            if (wt == 9) g.add_edge((int64_t)i, (int64_t)j);
        }
    return {std::move(g), WitnessHint{}};
}

// Even-weight classes of F_2^10 modulo the all-ones vector; two classes are
// joined when they differ by a weight-2 (equivalently weight-8) vector.
Generated build_row15(const std::string& label) {
    const int n = 10;
    const uint32_t full = (1u << n) - 1;
    auto weight = [](uint32_t x) { return __builtin_popcount(x); };
    auto rep = [&](uint32_t x) { return std::min(x, full ^ x); };
    std::vector<uint32_t> verts;
    for (uint32_t x = 0; x <= full; ++x)
        if (weight(x) % 2 == 0 && rep(x) == x) verts.push_back(x);
    std::map<uint32_t, int> index;
    for (size_t i = 0; i < verts.size(); ++i) index.emplace(verts[i], (int)i);
    DenseGraph g((int64_t)verts.size(), label);
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j) {
            int w = weight(verts[i] ^ verts[j]);
            if (w == 2 || w == 8) g.add_edge((int64_t)i, (int64_t)j);
        }
    WitnessHint hint;
    hint.clique.push_back(index.at(0));
    for (int i = 1; i < n; ++i) hint.clique.push_back(index.at(rep(1u | (1u << i))));
    std::sort(hint.clique.begin(), hint.clique.end());
    hint.provenance = "zero and the ten-point star of weight-two classes";
    return {std::move(g), std::move(hint)};
}

DenseGraph blocks_disjoint_graph(const std::vector<uint32_t>& blocks, const std::string& label) {
    DenseGraph g((int64_t)blocks.size(), label);
    for (size_t i = 0; i < blocks.size(); ++i)
        for (size_t j = i + 1; j < blocks.size(); ++j)
            if ((blocks[i] & blocks[j]) == 0) g.add_edge((int64_t)i, (int64_t)j);
    return g;
}

Generated build_m22(const std::string& label) {
    BlockDesign d = witt_s_3_6_22();
    return {blocks_disjoint_graph(d.blocks, label), WitnessHint{}};
}

Generated build_gewirtz(const std::string& label) {
    BlockDesign d = witt_s_3_6_22();
    std::vector<uint32_t> keep;
    for (uint32_t b : d.blocks)
        if (!(b & 1u)) keep.push_back(b);  // blocks missing point 0
    return {blocks_disjoint_graph(keep, label), WitnessHint{}};
}

Generated build_higman_sims(const std::string& label) {
    BlockDesign d = witt_s_3_6_22();
    int64_t nu = 1 + d.v + (int64_t)d.blocks.size();
    DenseGraph g(nu, label);
    for (int pnt = 0; pnt < d.v; ++pnt) g.add_edge(0, 1 + pnt);
    for (size_t b = 0; b < d.blocks.size(); ++b) {
        for (int pnt = 0; pnt < d.v; ++pnt)
            if (d.blocks[b] >> pnt & 1) g.add_edge(1 + pnt, 1 + d.v + (int64_t)b);
        for (size_t c = b + 1; c < d.blocks.size(); ++c)
            if ((d.blocks[b] & d.blocks[c]) == 0)
                g.add_edge(1 + d.v + (int64_t)b, 1 + d.v + (int64_t)c);
    }
    return {std::move(g), WitnessHint{}};
}

Generated build_hoffman_singleton(const std::string& label) {
    // Pentagon-pentagram construction: pentagons P_i, pentagrams Q_k on
    // vertices 5i+j and 25+5k+l; P_{i,j} ~ Q_{k, ik+j mod 5}.
    DenseGraph g(50, label);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            g.add_edge(5 * i + j, 5 * i + (j + 1) % 5);
            g.add_edge(25 + 5 * i + j, 25 + 5 * i + (j + 2) % 5);
            for (int kk = 0; kk < 5; ++kk) g.add_edge(5 * i + j, 25 + 5 * kk + (i * kk + j) % 5);
        }
    return {std::move(g), WitnessHint{}};
}

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

bool has_generator(const FamilySpec& sp) {
    switch (sp.family) {
        case Family::DualPolarHalf5:
        case Family::E6:
        case Family::Alternating:
            return false;
        case Family::PolarCollinearity:
            return sp.polar != PolarType::HDual;
        case Family::CatalogRow:
            return sp.table_row == 12 || sp.table_row == 13 || sp.table_row == 15 ||
                   sp.table_row == 16;
        default:
            return true;
    }
}

Generated dispatch(const FamilySpec& sp) {
    switch (sp.family) {
        case Family::Triangular: return build_triangular(sp);
        case Family::Grid: return build_grid(sp);
        case Family::Paley: return build_paley(sp);
        case Family::Peisert: return build_peisert(sp);
        case Family::VanLintSchrijver: return build_vls(sp);
        case Family::Grassmann: return build_grassmann(sp);
        case Family::BilinearForms: return build_bilinear(sp);
        case Family::PolarCollinearity: return build_polar(sp);
        case Family::NO: return build_no(sp);
        case Family::NU: return build_nu(sp);
        case Family::VOplus:
        case Family::VOminus: return build_vo(sp);
        case Family::VSz: return build_vsz(sp);
        case Family::BvLS: return build_bvls(sp.to_string());
        case Family::HoffmanSingleton: return build_hoffman_singleton(sp.to_string());
        case Family::Gewirtz: return build_gewirtz(sp.to_string());
        case Family::M22_77: return build_m22(sp.to_string());
        case Family::HigmanSims: return build_higman_sims(sp.to_string());
        case Family::CatalogRow:
            switch (sp.table_row) {
                case 12: return build_bvls(sp.to_string());
                case 13: return build_row13(sp.to_string());
                case 15: return build_row15(sp.to_string());
                case 16: {
                    FamilySpec b;
                    b.family = Family::BilinearForms;
                    b.q = 2;
                    b.m = 4;
                    Generated out = build_bilinear(b);
                    out.graph.set_label(sp.to_string());
                    return out;
                }
                default: break;
            }
            fail("NotConstructible", "this stored table row has no explicit generator");
        default:
            fail("NotConstructible", "this family is catalog-only");
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// FamilySpec canonical text form
// ---------------------------------------------------------------------------

std::string FamilySpec::to_string() const {
    std::ostringstream os;
    os << "family=" << family_name(family);
    auto put = [&os](const char* key, int64_t v) { os << ' ' << key << '=' << v; };
    switch (family) {
        case Family::Triangular:
        case Family::Grid: put("n", n); break;
        case Family::Paley: put("q", q); break;
        case Family::Peisert:
            put("p", p);
            put("t", t);
            break;
        case Family::VanLintSchrijver:
            put("p", p);
            put("e", e);
            put("t", t);
            break;
        case Family::Grassmann:
            put("n", n);
            put("q", q);
            break;
        case Family::BilinearForms:
        case Family::NU:
        case Family::VOplus:
        case Family::VOminus:
            put("q", q);
            put("m", m);
            break;
        case Family::PolarCollinearity:
            os << " q=" << q << " polar=" << polar_name(polar) << " dim=" << dim;
            break;
        case Family::NO:
            os << " q=" << q << " epsilon=" << (epsilon >= 0 ? "+1" : "-1") << " dim=" << dim;
            break;
        case Family::VSz:
        case Family::DualPolarHalf5:
        case Family::E6: put("q", q); break;
        case Family::Alternating: put("q", q); break;
        case Family::BvLS:
        case Family::HoffmanSingleton:
        case Family::Gewirtz:
        case Family::M22_77:
        case Family::HigmanSims: break;
        case Family::CatalogRow: put("row", table_row); break;
    }
    return os.str();
}

FamilySpec FamilySpec::parse(const std::string& text) {
    std::istringstream is(text);
    std::string token;
    FamilySpec sp;
    bool have_family = false;
    std::set<std::string> seen;
    auto to_int = [](const std::string& key, const std::string& v) -> int64_t {
        try {
            size_t used = 0;
            int64_t out = std::stoll(v, &used);
            require(used == v.size(), "ParseError", "trailing characters in value for " + key);
            return out;
        } catch (const Error&) {
            throw;
        } catch (const std::exception&) {
            fail("ParseError", "value for " + key + " is not an integer: " + v);
        }
    };
    while (is >> token) {
        auto eq = token.find('=');
        require(eq != std::string::npos && eq > 0 && eq + 1 < token.size(), "ParseError",
                "expected key=value, got: " + token);
        std::string key = token.substr(0, eq);
        std::string value = token.substr(eq + 1);
        require(seen.insert(key).second, "ParseError", "duplicate key: " + key);
        if (key == "family") {
            static const Family kAll[] = {
                Family::Triangular, Family::Grid,         Family::Paley,
                Family::Peisert,    Family::VanLintSchrijver, Family::Grassmann,
                Family::BilinearForms, Family::PolarCollinearity, Family::NO,
                Family::NU,         Family::VOplus,       Family::VOminus,
                Family::VSz,        Family::BvLS,         Family::HoffmanSingleton,
                Family::Gewirtz,    Family::M22_77,       Family::HigmanSims,
                Family::DualPolarHalf5, Family::E6,       Family::Alternating,
                Family::CatalogRow,
            };
            bool found = false;
            for (Family f : kAll)
                if (family_name(f) == value) {
                    sp.family = f;
                    found = true;
                    break;
                }
            require(found, "UnknownFamily", "unknown family name: " + value);
            have_family = true;
        } else if (key == "n") {
            sp.n = to_int(key, value);
        } else if (key == "q") {
            sp.q = to_int(key, value);
        } else if (key == "p") {
            sp.p = to_int(key, value);
        } else if (key == "e") {
            sp.e = to_int(key, value);
        } else if (key == "t") {
            sp.t = to_int(key, value);
        } else if (key == "m") {
            sp.m = to_int(key, value);
        } else if (key == "row") {
            sp.table_row = (int)to_int(key, value);
        } else if (key == "dim") {
            sp.dim = to_int(key, value);
        } else if (key == "epsilon") {
            require(value == "+1" || value == "1" || value == "-1", "ParseError",
                    "epsilon must be +1 or -1");
            sp.epsilon = value == "-1" ? -1 : 1;
        } else if (key == "polar") {
            std::string lowered;
            for (char c : value) lowered += (char)std::tolower((unsigned char)c);
            static const PolarType kTypes[] = {PolarType::W,      PolarType::Q,
                                               PolarType::Qplus,  PolarType::Qminus,
                                               PolarType::H,      PolarType::HDual};
            bool found = false;
            for (PolarType pt : kTypes) {
                std::string name = polar_name(pt);
                std::string lname;
                for (char c : name) lname += (char)std::tolower((unsigned char)c);
                if (lname == lowered) {
                    sp.polar = pt;
                    found = true;
                    break;
                }
            }
            require(found, "ParseError", "unknown polar type: " + value);
        } else {
            fail("ParseError", "unknown key: " + key);
        }
    }
    require(have_family, "ParseError", "missing family=<name>");
    return sp;
}

// ---------------------------------------------------------------------------
// Public entry points
// ---------------------------------------------------------------------------

bool constructible(const FamilySpec& spec, int64_t nu_cap) {
    validate_spec(spec);
    if (!has_generator(spec)) return false;
    return params_for(spec).nu <= nu_cap;
}

Generated generate(const FamilySpec& spec, int64_t nu_cap) {
    validate_spec(spec);
    SrgParams want = params_for(spec);
    if (!has_generator(spec)) {
        if (spec.family == Family::CatalogRow)
            fail("NotConstructible", "this stored table row has no explicit generator");
        fail("NotConstructible", "this family is catalog-only");
    }
    require(want.nu <= nu_cap, "TooLarge",
            "vertex count " + std::to_string((long long)want.nu) + " exceeds the cap " +
                std::to_string((long long)nu_cap));
    Generated out = dispatch(spec);
    require(out.graph.nu() == want.nu, "InternalError", "vertex count mismatch");
    for (int64_t v = 0; v < out.graph.nu(); ++v)
        require(out.graph.degree(v) == want.k, "InternalError", "vertex degree mismatch");
    require(out.hint.clique.empty() || is_clique(out.graph, out.hint.clique), "InternalError",
            "clique hint failed validation");
    require(out.hint.coclique.empty() || is_coclique(out.graph, out.hint.coclique),
            "InternalError", "coclique hint failed validation");
    return out;
}

std::vector<FamilySpec> sweep_specs(int64_t nu_cap) {
    std::vector<FamilySpec> out;
    auto consider = [&](FamilySpec sp) {
        try {
            if (constructible(sp, nu_cap)) out.push_back(sp);
        } catch (const Error&) {
        }
    };
    auto prime_powers_upto = [](int64_t cap) {
        std::vector<int64_t> qs;
        for (int64_t q = 2; q <= cap; ++q)
            if (prime_power_decomposition(q).second != 0) qs.push_back(q);
        return qs;
    };

    for (int64_t n = 4; n * (n - 1) / 2 <= nu_cap; ++n) {
        FamilySpec sp;
        sp.family = Family::Triangular;
        sp.n = n;
        consider(sp);
    }
    for (int64_t n = 2; n * n <= nu_cap; ++n) {
        FamilySpec sp;
        sp.family = Family::Grid;
        sp.n = n;
        consider(sp);
    }
    for (int64_t q : prime_powers_upto(nu_cap))
        if (q % 4 == 1) {
            FamilySpec sp;
            sp.family = Family::Paley;
            sp.q = q;
            consider(sp);
        }
    for (int64_t p = 3; p * p <= nu_cap; p += 4)
        if (is_prime(p))
            for (int64_t t = 1, q = p * p; q <= nu_cap; ++t, q *= p * p) {
                FamilySpec sp;
                sp.family = Family::Peisert;
                sp.p = p;
                sp.t = t;
                consider(sp);
            }
    for (int64_t e : {3, 5, 7, 11, 13})
        for (int64_t p = 2; p <= nu_cap; ++p) {
            if (!is_prime(p)) continue;
            // q = p^((e-1)t) must fit under the cap for t = 1 at least
            double logq = (double)(e - 1) * std::log((double)p);
            if (logq > std::log((double)nu_cap) + 1e-9) break;
            for (int64_t t = 1;; ++t) {
                long double qval = powl((long double)p, (long double)((e - 1) * t));
                if (qval > (long double)nu_cap) break;
                FamilySpec sp;
                sp.family = Family::VanLintSchrijver;
                sp.p = p;
                sp.e = e;
                sp.t = t;
                consider(sp);
            }
        }
    for (int64_t q : prime_powers_upto(64))
        for (int64_t n = 4;; ++n) {
            FamilySpec sp;
            sp.family = Family::Grassmann;
            sp.n = n;
            sp.q = q;
            try {
                if (params_for(sp).nu > nu_cap) break;
            } catch (const Error&) {
                break;
            }
            consider(sp);
        }
    for (int64_t q : prime_powers_upto(200))
        for (int64_t m = 2; ; ++m) {
            long double nuval = powl((long double)q, (long double)(2 * m));
            if (nuval > (long double)nu_cap) break;
            FamilySpec sp;
            sp.family = Family::BilinearForms;
            sp.q = q;
            sp.m = m;
            consider(sp);
            sp.family = Family::VOplus;
            consider(sp);
            sp.family = Family::VOminus;
            consider(sp);
        }
    for (PolarType pt : {PolarType::W, PolarType::Q, PolarType::Qplus, PolarType::Qminus,
                         PolarType::H})
        for (int64_t q : prime_powers_upto(200))
            for (int64_t dim = 3; dim <= 12; ++dim) {
                FamilySpec sp;
                sp.family = Family::PolarCollinearity;
                sp.polar = pt;
                sp.q = q;
                sp.dim = dim;
                try {
                    validate_spec(sp);
                    if (params_for(sp).nu > nu_cap) break;
                } catch (const Error&) {
                    continue;
                }
                consider(sp);
            }
    for (int64_t q : {2, 3})
        for (int64_t dim = 6; dim <= 16; dim += 2)
            for (int eps : {+1, -1}) {
                FamilySpec sp;
                sp.family = Family::NO;
                sp.q = q;
                sp.dim = dim;
                sp.epsilon = eps;
                consider(sp);
            }
    for (int64_t q : {3, 4, 8})
        for (int64_t dim = 5; dim <= 13; dim += 2)
            for (int eps : {+1, -1}) {
                FamilySpec sp;
                sp.family = Family::NO;
                sp.q = q;
                sp.dim = dim;
                sp.epsilon = eps;
                consider(sp);
            }
    for (int64_t m = 4; m <= 16; ++m) {
        FamilySpec sp;
        sp.family = Family::NU;
        sp.q = 2;
        sp.m = m;
        consider(sp);
    }
    for (int64_t q = 2; q * q * q * q <= nu_cap; q *= 4) {
        FamilySpec sp;
        sp.family = Family::VSz;
        sp.q = q;
        consider(sp);
    }
    for (Family f : {Family::BvLS, Family::HoffmanSingleton, Family::Gewirtz, Family::M22_77,
                     Family::HigmanSims}) {
        FamilySpec sp;
        sp.family = f;
        consider(sp);
    }
    for (int row : {12, 13, 15, 16}) {
        FamilySpec sp;
        sp.family = Family::CatalogRow;
        sp.table_row = row;
        consider(sp);
    }
    return out;
}

}  // namespace srg
