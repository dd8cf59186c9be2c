#include "srg/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <deque>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>

#include "srg/error.hpp"

namespace srg {

namespace {

using Clock = std::chrono::steady_clock;

int resolve_threads(int t) {
    if (t > 0) return t;
    unsigned hw = std::thread::hardware_concurrency();
    return hw != 0 ? static_cast<int>(hw) : 1;
}

void check_budget(const Budget& b) {
    require(b.max_nodes >= 1, "InvalidParams", "budget node limit must be positive");
    require(b.max_seconds > 0.0, "InvalidParams", "budget time limit must be positive");
}

Clock::time_point deadline_for(Clock::time_point start, double seconds) {
    return start + std::chrono::duration_cast<Clock::duration>(
                       std::chrono::duration<double>(seconds));
}

// --- helpers on raw word arrays -------------------------------------------

int first_bit(const uint64_t* w, int words) {
    for (int i = 0; i < words; ++i)
        if (w[i] != 0) return i * 64 + std::countr_zero(w[i]);
    return -1;
}

inline void clear_bit(uint64_t* w, int v) { w[v >> 6] &= ~(uint64_t{1} << (v & 63)); }
inline void set_bit(uint64_t* w, int v) { w[v >> 6] |= uint64_t{1} << (v & 63); }
inline bool test_bit(const uint64_t* w, int v) { return (w[v >> 6] >> (v & 63)) & 1; }

// --- shared search state ----------------------------------------------------

struct Shared {
    Shared(const DenseGraph& graph, int64_t cap_in, int64_t nodes_in, Clock::time_point dl)
        : g(graph), words(graph.words()), cap(cap_in), max_nodes(nodes_in), deadline(dl) {}

    const DenseGraph& g;
    int words;
    int64_t cap;  // -1 when absent
    int64_t max_nodes;
    Clock::time_point deadline;

    std::atomic<int64_t> best{0};
    std::atomic<bool> cap_hit{false};
    std::atomic<bool> out_of_budget{false};
    std::atomic<int64_t> nodes{0};
    std::mutex mu;
    std::vector<int> best_witness;

    bool stopped() const {
        return cap_hit.load(std::memory_order_relaxed) ||
               out_of_budget.load(std::memory_order_relaxed);
    }

    void offer(const std::vector<int>& clique) {
        const auto sz = static_cast<int64_t>(clique.size());
        if (sz <= best.load(std::memory_order_relaxed)) return;
        std::lock_guard<std::mutex> lock(mu);
        if (sz <= best.load(std::memory_order_relaxed)) return;
        best_witness = clique;
        best.store(sz, std::memory_order_relaxed);
        if (cap >= 0 && sz >= cap) cap_hit.store(true, std::memory_order_relaxed);
    }
};

// Per-depth scratch; deque keeps references stable while deeper frames are
// created during recursion.
struct Frame {
    std::vector<uint64_t> cand, q, qc;
    std::vector<int> order, color;
};

struct Worker {
    explicit Worker(Shared& s) : sh(s) {}

    Shared& sh;
    std::deque<Frame> frames;
    std::vector<int> r;  // current clique
    int64_t local_nodes = 0;

    static constexpr int64_t kPoll = 64;

    Frame& frame(size_t depth) {
        while (frames.size() <= depth) {
            Frame f;
            f.cand.resize(sh.words);
            f.q.resize(sh.words);
            f.qc.resize(sh.words);
            frames.push_back(std::move(f));
        }
        return frames[depth];
    }

    void flush() {
        sh.nodes.fetch_add(local_nodes, std::memory_order_relaxed);
        local_nodes = 0;
    }

    // Counts a node; polls the budget periodically.  False means stop.
    bool tick() {
        if (++local_nodes >= kPoll) {
            const int64_t total = sh.nodes.fetch_add(local_nodes, std::memory_order_relaxed) +
                                  local_nodes;
            local_nodes = 0;
            if (total >= sh.max_nodes || Clock::now() >= sh.deadline)
                sh.out_of_budget.store(true, std::memory_order_relaxed);
        }
        return !sh.stopped();
    }

    // Greedy colouring of frame(depth).cand followed by reverse-order
    // branching; cand is consumed.
    void expand(size_t depth) {
        if (!tick()) return;
        Frame& f = frame(depth);
        std::copy(f.cand.begin(), f.cand.end(), f.q.begin());
        f.order.clear();
        f.color.clear();
        int color = 0;
        while (first_bit(f.q.data(), sh.words) >= 0) {
            ++color;
            std::copy(f.q.begin(), f.q.end(), f.qc.begin());
            int v;
            while ((v = first_bit(f.qc.data(), sh.words)) >= 0) {
                clear_bit(f.qc.data(), v);
                clear_bit(f.q.data(), v);
                const uint64_t* row = sh.g.row(v);
                for (int i = 0; i < sh.words; ++i) f.qc[i] &= ~row[i];
                f.order.push_back(v);
                f.color.push_back(color);
            }
        }
        for (int i = static_cast<int>(f.order.size()) - 1; i >= 0; --i) {
            if (sh.stopped()) return;
            const auto rsz = static_cast<int64_t>(r.size());
            if (rsz + f.color[i] <= sh.best.load(std::memory_order_relaxed)) return;
            const int v = f.order[i];
            r.push_back(v);
            sh.offer(r);
            if (sh.stopped()) {
                r.pop_back();
                return;
            }
            Frame& child = frame(depth + 1);
            const uint64_t* row = sh.g.row(v);
            bool nonempty = false;
            for (int w = 0; w < sh.words; ++w) {
                child.cand[w] = f.cand[w] & row[w];
                nonempty |= child.cand[w] != 0;
            }
            if (nonempty) expand(depth + 1);
            r.pop_back();
            clear_bit(f.cand.data(), v);
        }
    }
};

// Deterministic greedy clique: scan vertices by descending degree.
std::vector<int> greedy_clique(const DenseGraph& g) {
    const int n = g.nu();
    const int words = g.words();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<uint64_t> cand(words, 0);
    for (int v = 0; v < n; ++v) set_bit(cand.data(), v);
    std::vector<int> clique;
    for (int v : order) {
        if (!test_bit(cand.data(), v)) continue;
        clique.push_back(v);
        const uint64_t* row = g.row(v);
        for (int i = 0; i < words; ++i) cand[i] &= row[i];
    }
    return clique;
}

SolveResult finish(Shared& sh, Clock::time_point start) {
    SolveResult out;
    out.value = sh.best.load();
    out.witness = sh.best_witness;
    std::sort(out.witness.begin(), out.witness.end());
    if (sh.cap_hit.load())
        out.status = SolveStatus::BoundCertified;
    else if (sh.out_of_budget.load())
        out.status = SolveStatus::LowerBoundOnly;
    else
        out.status = SolveStatus::Exact;
    out.nodes_explored = sh.nodes.load();
    out.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    require(is_clique(sh.g, out.witness), "InternalError", "solver produced an invalid witness");
    return out;
}

}  // namespace

SolveResult max_clique(const DenseGraph& g, std::optional<int64_t> spectral_cap,
                       const Budget& budget) {
    require(g.nu() > 0, "EmptyGraph", "maximum clique of the empty graph is undefined");
    check_budget(budget);
    if (spectral_cap)
        require(*spectral_cap >= 1, "InvalidParams", "spectral cap must be positive");

    const auto start = Clock::now();
    const int n = g.nu();
    Shared sh(g, spectral_cap ? *spectral_cap : -1, budget.max_nodes,
              deadline_for(start, budget.max_seconds));

    sh.offer(greedy_clique(g));
    if (sh.cap_hit.load()) return finish(sh, start);

    // Root ordering: one greedy colouring over the whole vertex set, seeded by
    // descending degree.  Branch i's candidate set depends only on the prefix
    // order[0..i-1], so the root branches are independent work units.
    std::vector<int> root_order, root_color;
    {
        std::vector<int> by_degree(n);
        std::iota(by_degree.begin(), by_degree.end(), 0);
        std::stable_sort(by_degree.begin(), by_degree.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
        const int words = g.words();
        std::vector<uint64_t> q(words, 0), qc(words, 0);
        for (int v = 0; v < n; ++v) set_bit(q.data(), v);
        int color = 0;
        while (first_bit(q.data(), words) >= 0) {
            ++color;
            std::copy(q.begin(), q.end(), qc.begin());
            for (int v : by_degree) {
                if (!test_bit(qc.data(), v)) continue;
                clear_bit(qc.data(), v);
                clear_bit(q.data(), v);
                const uint64_t* row = g.row(v);
                for (int i = 0; i < words; ++i) qc[i] &= ~row[i];
                root_order.push_back(v);
                root_color.push_back(color);
            }
        }
    }

    std::atomic<int> next{static_cast<int>(root_order.size()) - 1};
    auto work = [&]() {
        Worker w(sh);
        std::vector<uint64_t> prefix(sh.words, 0);
        while (!sh.stopped()) {
            const int i = next.fetch_sub(1, std::memory_order_relaxed);
            if (i < 0) break;
            if (root_color[i] <= sh.best.load(std::memory_order_relaxed)) continue;
            const int v = root_order[i];
            std::fill(prefix.begin(), prefix.end(), 0);
            for (int j = 0; j < i; ++j) set_bit(prefix.data(), root_order[j]);
            Frame& f = w.frame(1);
            const uint64_t* row = g.row(v);
            bool nonempty = false;
            for (int k = 0; k < sh.words; ++k) {
                f.cand[k] = prefix[k] & row[k];
                nonempty |= f.cand[k] != 0;
            }
            w.r.assign(1, v);
            if (nonempty) w.expand(1);
        }
        w.flush();
    };

    const int nthreads = std::min<int>(resolve_threads(budget.threads),
                                       std::max<int>(1, static_cast<int>(root_order.size())));
    if (nthreads <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    return finish(sh, start);
}

SolveResult max_coclique(const DenseGraph& g, std::optional<int64_t> spectral_cap,
                         const Budget& budget) {
    require(g.nu() > 0, "EmptyGraph", "maximum coclique of the empty graph is undefined");
    SolveResult out = max_clique(complement(g), spectral_cap, budget);
    require(is_coclique(g, out.witness), "InternalError", "solver produced an invalid witness");
    return out;
}

std::optional<std::vector<int>> seed_search(const DenseGraph& g, int64_t target, SetMode mode,
                                            const WitnessHint& hints, const Budget& budget,
                                            uint64_t seed) {
    require(target >= 1, "InvalidParams", "seed search target must be >= 1");
    check_budget(budget);
    require(g.nu() > 0, "EmptyGraph", "seed search on the empty graph is undefined");

    const auto start = Clock::now();
    const auto deadline = deadline_for(start, budget.max_seconds);
    const int n = g.nu();
    if (target > n) return std::nullopt;

    // Hints first: a valid set of the requested kind that already meets the
    // target is returned as-is.
    const std::vector<int>& hint = (mode == SetMode::Clique) ? hints.clique : hints.coclique;
    std::vector<int> seed_set;
    {
        bool in_range = true;
        for (int v : hint) in_range = in_range && v >= 0 && v < n;
        if (!hint.empty() && in_range && verify_witness(g, hint, mode)) {
            if (static_cast<int64_t>(hint.size()) >= target) {
                std::vector<int> out = hint;
                std::sort(out.begin(), out.end());
                return out;
            }
            seed_set = hint;
        }
    }

    // Work in clique terms on h.
    const DenseGraph h = (mode == SetMode::Clique) ? g : complement(g);
    const int words = h.words();

    // Deterministic greedy extension of the seed.
    {
        std::vector<uint64_t> cand(words, 0);
        for (int v = 0; v < n; ++v) set_bit(cand.data(), v);
        std::vector<int> clique;
        for (int v : seed_set) {
            clique.push_back(v);
            const uint64_t* row = h.row(v);
            for (int i = 0; i < words; ++i) cand[i] &= row[i];
        }
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return h.degree(a) > h.degree(b); });
        for (int v : order) {
            if (!test_bit(cand.data(), v)) continue;
            clique.push_back(v);
            const uint64_t* row = h.row(v);
            for (int i = 0; i < words; ++i) cand[i] &= row[i];
        }
        if (static_cast<int64_t>(clique.size()) >= target) {
            clique.resize(static_cast<size_t>(target));
            std::sort(clique.begin(), clique.end());
            return clique;
        }
    }

    // Fixed-size tabu search: keep |S| = target, minimise the number of
    // non-adjacent pairs inside S, swap one vertex per step.
    std::mt19937_64 rng(seed);
    const int64_t max_iters = budget.max_nodes;
    std::vector<int> in_s(n, 0);
    std::vector<int> missing(n, 0);  // per vertex: members of S not adjacent to it
    std::vector<int64_t> tabu_until(n, -1);
    std::vector<int> s;
    const auto t = static_cast<int>(target);

    auto rebuild = [&]() {
        s.clear();
        std::fill(in_s.begin(), in_s.end(), 0);
        std::fill(missing.begin(), missing.end(), 0);
        std::fill(tabu_until.begin(), tabu_until.end(), -1);
        std::vector<int> pool(n);
        std::iota(pool.begin(), pool.end(), 0);
        std::shuffle(pool.begin(), pool.end(), rng);
        pool.resize(static_cast<size_t>(t));
        for (int v : pool) {
            s.push_back(v);
            in_s[v] = 1;
        }
        for (int v : s)
            for (int u : s)
                if (u != v && !h.adjacent(u, v)) ++missing[v];
        for (int v = 0; v < n; ++v) {
            if (in_s[v]) continue;
            for (int u : s)
                if (u != v && !h.adjacent(u, v)) ++missing[v];
        }
    };
    auto conflicts = [&]() {
        int64_t c = 0;
        for (int v : s) c += missing[v];
        return c / 2;
    };

    rebuild();
    int64_t best_conf = conflicts();
    int64_t since_improve = 0;
    for (int64_t iter = 0; iter < max_iters; ++iter) {
        if ((iter & 255) == 0 && Clock::now() >= deadline) break;
        const int64_t conf = conflicts();
        if (conf == 0) {
            std::sort(s.begin(), s.end());
            return s;
        }
        if (conf < best_conf) {
            best_conf = conf;
            since_improve = 0;
        } else if (++since_improve > 20000) {
            rebuild();
            best_conf = conflicts();
            since_improve = 0;
            continue;
        }
        // Leave: a member with the most conflicts (ties random).
        int worst = -1, nworst = 0;
        for (int v : s) {
            if (worst < 0 || missing[v] > missing[worst]) {
                worst = v;
                nworst = 1;
            } else if (missing[v] == missing[worst] && rng() % static_cast<uint64_t>(++nworst) == 0) {
                worst = v;
            }
        }
        // Enter: a non-member minimising conflicts after the swap (tabu
        // unless it reaches zero; ties random).
        int enter = -1, nenter = 0;
        int64_t enter_cost = 0;
        for (int v = 0; v < n; ++v) {
            if (in_s[v] || v == worst) continue;
            const int64_t cost = missing[v] - (h.adjacent(v, worst) || v == worst ? 0 : 1);
            const int64_t would = conf - missing[worst] + cost;
            if (tabu_until[v] > iter && would > 0) continue;
            if (enter < 0 || cost < enter_cost) {
                enter = v;
                enter_cost = cost;
                nenter = 1;
            } else if (cost == enter_cost && rng() % static_cast<uint64_t>(++nenter) == 0) {
                enter = v;
            }
        }
        if (enter < 0) {  // everything tabu: pick any non-member
            int free_count = n - t;
            if (free_count <= 0) break;
            int k = static_cast<int>(rng() % static_cast<uint64_t>(free_count));
            for (int v = 0; v < n && enter < 0; ++v)
                if (!in_s[v] && k-- == 0) enter = v;
        }
        // Swap worst out, enter in.
        in_s[worst] = 0;
        in_s[enter] = 1;
        *std::find(s.begin(), s.end(), worst) = enter;
        const uint64_t* row_w = h.row(worst);
        const uint64_t* row_e = h.row(enter);
        for (int v = 0; v < n; ++v) {
            if (v != worst && !test_bit(row_w, v)) --missing[v];
            if (v != enter && !test_bit(row_e, v)) ++missing[v];
        }
        missing[worst] = 0;
        missing[enter] = 0;
        for (int u : s) {
            if (u != worst && !h.adjacent(u, worst)) ++missing[worst];
            if (u != enter && !h.adjacent(u, enter)) ++missing[enter];
        }
        tabu_until[worst] = iter + 7 + static_cast<int64_t>(rng() % 8) + conf / 4;
    }
    return std::nullopt;
}

bool verify_witness(const DenseGraph& g, const std::vector<int>& set, SetMode mode) {
    for (int v : set)
        require(v >= 0 && v < g.nu(), "IndexOutOfRange", "witness vertex out of range");
    std::vector<int> sorted = set;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    return mode == SetMode::Clique ? is_clique(g, sorted) : is_coclique(g, sorted);
}

}  // namespace srg
