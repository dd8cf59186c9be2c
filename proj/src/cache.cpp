#include "srg/cache.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "srg/error.hpp"

namespace srg {

namespace {

namespace fs = std::filesystem;

// FNV-1a, 64-bit: stable across platforms and runs.
uint64_t fnv1a(const std::string& text) {
    uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

fs::path entry_path(const std::string& dir, const std::string& key) {
    return fs::path(dir) / (key + ".json");
}

// A record is final when re-running cannot change it: every decision, and
// the parameter-only open verdicts.  Only budget-exhausted searches are
// provisional.
bool is_final(const RunRecord& rec) {
    return rec.verdict.reason != SepReason::BudgetExhausted;
}

bool same_budget(const RunRecord& rec, const Budget& budget) {
    return rec.budget_nodes == budget.max_nodes &&
           std::abs(rec.budget_seconds - budget.max_seconds) < 1e-9 &&
           rec.threads == budget.threads;
}

}  // namespace

std::string resolve_cache_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("SRGSEP_CACHE_DIR")) return env;
    return "";
}

std::string cache_key(const std::string& spec_text, const SrgParams& params) {
    std::ostringstream material;
    material << "v" << kToolMajor << "|" << spec_text << "|" << params.nu << "," << params.k << ","
             << params.lambda << "," << params.mu;
    return hex64(fnv1a(material.str()));
}

std::optional<RunRecord> cache_get(const std::string& dir, const std::string& key,
                                   const Budget& budget, uint64_t seed) {
    if (dir.empty()) return std::nullopt;
    const fs::path path = entry_path(dir, key);
    std::error_code ec;
    if (!fs::exists(path, ec) || ec) return std::nullopt;
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::ostringstream text;
    text << in.rdbuf();
    RunRecord rec;
    try {
        rec = record_from_json(text.str());
    } catch (const Error& e) {
        std::cerr << "warning: CorruptCacheEntry: ignoring " << path.string() << " (" << e.what()
                  << ")\n";
        return std::nullopt;
    }
    if (is_final(rec)) return rec;
    // Provisional result: only the identical configuration may reuse it.
    if (same_budget(rec, budget) && rec.seed == seed) return rec;
    return std::nullopt;
}

void cache_put(const std::string& dir, const std::string& key, const RunRecord& rec) {
    if (dir.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    require(!ec, "IoError", "cannot create cache directory " + dir + ": " + ec.message());
    const fs::path path = entry_path(dir, key);
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp);
        require(static_cast<bool>(out), "IoError", "cannot write cache entry " + tmp.string());
        out << record_to_json(rec);
    }
    fs::rename(tmp, path, ec);
    require(!ec, "IoError", "cannot finalize cache entry " + path.string() + ": " + ec.message());
}

}  // namespace srg
