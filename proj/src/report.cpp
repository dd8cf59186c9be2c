#include "srg/report.hpp"

#include <algorithm>
#include <ctime>
#include <sstream>
#include <vector>

#include "json.hpp"

#include "srg/error.hpp"

namespace srg {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* kStatusNames[] = {"Separating", "NonSeparating", "Unresolved"};
const char* kReasonNames[] = {
    "FractionalDelsarte", "FractionalHoffman", "IrrationalBounds",  "CliqueBelowBound",
    "CocliqueBelowBound", "BothBoundsAttained", "OvoidExists",      "NoOvoid",
    "OvoidUnknown",       "OpenProblem",        "BudgetExhausted",
};

SepStatus status_from_name(const std::string& name) {
    for (size_t i = 0; i < std::size(kStatusNames); ++i)
        if (name == kStatusNames[i]) return static_cast<SepStatus>(i);
    fail("ParseError", "unknown verdict status name: " + name);
}

SepReason reason_from_name(const std::string& name) {
    for (size_t i = 0; i < std::size(kReasonNames); ++i)
        if (name == kReasonNames[i]) return static_cast<SepReason>(i);
    fail("ParseError", "unknown verdict reason name: " + name);
}

ordered_json params_json(const SrgParams& p) {
    return ordered_json{{"nu", p.nu}, {"k", p.k}, {"lambda", p.lambda}, {"mu", p.mu}};
}

SrgParams params_from(const ordered_json& j) {
    SrgParams p;
    p.nu = j.at("nu").get<int64_t>();
    p.k = j.at("k").get<int64_t>();
    p.lambda = j.at("lambda").get<int64_t>();
    p.mu = j.at("mu").get<int64_t>();
    return p;
}

ordered_json range_json(const ValueRange& r) {
    return ordered_json{{"lo", r.lo}, {"hi", r.hi}};
}

ordered_json verdict_json(const Verdict& v) {
    return ordered_json{
        {"status", sep_status_name(v.status)},
        {"reason", sep_reason_name(v.reason)},
        {"omega", range_json(v.omega)},
        {"alpha", range_json(v.alpha)},
        {"clique", v.clique},
        {"coclique", v.coclique},
        {"provenance", v.provenance},
    };
}

Verdict verdict_from(const ordered_json& j) {
    Verdict v;
    v.status = status_from_name(j.at("status").get<std::string>());
    v.reason = reason_from_name(j.at("reason").get<std::string>());
    v.omega = {j.at("omega").at("lo").get<int64_t>(), j.at("omega").at("hi").get<int64_t>()};
    v.alpha = {j.at("alpha").at("lo").get<int64_t>(), j.at("alpha").at("hi").get<int64_t>()};
    v.clique = j.at("clique").get<std::vector<int>>();
    v.coclique = j.at("coclique").get<std::vector<int>>();
    v.provenance = j.at("provenance").get<std::string>();
    return v;
}

std::string range_text(const ValueRange& r) {
    if (r.exact()) return std::to_string(r.lo);
    return "[" + std::to_string(r.lo) + ", " + std::to_string(r.hi) + "]";
}

// Pads to a column width; rendering only.
std::string pad(std::string text, size_t width) {
    if (text.size() < width) text.append(width - text.size(), ' ');
    return text;
}

}  // namespace

std::string record_to_json(const RunRecord& rec) {
    ordered_json j{
        {"schema", kSchemaVersion},
        {"tool_version", kToolVersion},
        {"command", rec.command},
        {"spec", rec.spec},
        {"input", rec.input},
        {"params", params_json(rec.params)},
        {"spectrum", ordered_json{{"r", rec.r}, {"s", rec.s}}},
        {"bounds",
         ordered_json{{"delsarte", rec.delsarte},
                      {"hoffman", rec.hoffman},
                      {"omega_target", rec.omega_target},
                      {"alpha_target", rec.alpha_target}}},
        {"verdict", verdict_json(rec.verdict)},
        {"run",
         ordered_json{{"seed", rec.seed},
                      {"budget_nodes", rec.budget_nodes},
                      {"budget_seconds", rec.budget_seconds},
                      {"threads", rec.threads},
                      {"elapsed_seconds", rec.elapsed_seconds},
                      {"timestamp", rec.timestamp}}},
    };
    return j.dump(2) + "\n";
}

RunRecord record_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        fail("ParseError", std::string("malformed JSON document: ") + e.what());
    }
    try {
        require(j.at("schema").get<std::string>() == kSchemaVersion, "ParseError",
                "unsupported document schema: " + j.at("schema").get<std::string>());
        RunRecord rec;
        rec.command = j.at("command").get<std::string>();
        rec.spec = j.at("spec").get<std::string>();
        rec.input = j.at("input").get<std::string>();
        rec.params = params_from(j.at("params"));
        rec.r = j.at("spectrum").at("r").get<std::string>();
        rec.s = j.at("spectrum").at("s").get<std::string>();
        rec.delsarte = j.at("bounds").at("delsarte").get<std::string>();
        rec.hoffman = j.at("bounds").at("hoffman").get<std::string>();
        rec.omega_target = j.at("bounds").at("omega_target").get<int64_t>();
        rec.alpha_target = j.at("bounds").at("alpha_target").get<int64_t>();
        rec.verdict = verdict_from(j.at("verdict"));
        rec.seed = j.at("run").at("seed").get<uint64_t>();
        rec.budget_nodes = j.at("run").at("budget_nodes").get<int64_t>();
        rec.budget_seconds = j.at("run").at("budget_seconds").get<double>();
        rec.threads = j.at("run").at("threads").get<int>();
        rec.elapsed_seconds = j.at("run").at("elapsed_seconds").get<double>();
        rec.timestamp = j.at("run").at("timestamp").get<std::string>();
        return rec;
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        fail("ParseError", std::string("document is missing required fields: ") + e.what());
    }
}

std::string record_to_text(const RunRecord& rec) {
    std::ostringstream out;
    const std::string subject = rec.spec.empty() ? rec.input : rec.spec;
    out << subject << "  " << rec.params.to_string() << "\n";
    out << "spectrum   r = " << rec.r << ", s = " << rec.s << "\n";
    out << "bounds     clique <= " << rec.delsarte << " (target " << rec.omega_target
        << "), coclique <= " << rec.hoffman << " (target " << rec.alpha_target << ")\n";
    out << "verdict    " << sep_status_name(rec.verdict.status) << " ("
        << sep_reason_name(rec.verdict.reason) << ")\n";
    out << "omega      " << range_text(rec.verdict.omega) << "\n";
    out << "alpha      " << range_text(rec.verdict.alpha) << "\n";
    if (!rec.verdict.clique.empty() || !rec.verdict.coclique.empty()) {
        out << "witnesses  clique " << rec.verdict.clique.size() << " vertices, coclique "
            << rec.verdict.coclique.size() << " vertices\n";
    }
    out << "because    " << rec.verdict.provenance << "\n";
    return out.str();
}

std::string table_to_json(const TableReport& rep) {
    ordered_json rows = ordered_json::array();
    for (const TableRowReport& r : rep.rows) {
        rows.push_back(ordered_json{
            {"id", r.row_id},
            {"name", r.name},
            {"params", params_json(r.params)},
            {"s", r.s},
            {"r", r.r},
            {"delsarte", r.delsarte},
            {"hoffman", r.hoffman},
            {"omega", r.omega},
            {"alpha", r.alpha},
            {"status", sep_status_name(r.status)},
            {"reason", sep_reason_name(r.reason)},
            {"match", r.match},
            {"note", r.note},
        });
    }
    ordered_json j{
        {"schema", kSchemaVersion}, {"tool_version", kToolVersion},
        {"command", "table"},       {"which", static_cast<int>(rep.which)},
        {"title", rep.title},       {"all_match", rep.all_match},
        {"notes", rep.notes},       {"rows", rows},
    };
    return j.dump(2) + "\n";
}

std::string table_to_text(const TableReport& rep) {
    struct Col {
        const char* header;
        size_t width;
    };
    std::vector<std::vector<std::string>> cells;
    for (const TableRowReport& r : rep.rows) {
        cells.push_back({r.row_id > 0 ? std::to_string(r.row_id) : "-", r.name,
                         r.params.nu > 0 ? r.params.to_string() : "-", r.s, r.r, r.delsarte,
                         r.hoffman, r.omega, r.alpha, sep_status_name(r.status),
                         sep_reason_name(r.reason), r.match ? "yes" : "NO", r.note});
    }
    std::vector<Col> cols = {{"id", 2},      {"name", 4},     {"params", 6}, {"s", 1},
                             {"r", 1},       {"delsarte", 8}, {"hoffman", 7}, {"omega", 5},
                             {"alpha", 5},   {"status", 6},   {"reason", 6}, {"match", 5},
                             {"note", 4}};
    for (const auto& row : cells)
        for (size_t c = 0; c < cols.size(); ++c) cols[c].width = std::max(cols[c].width, row[c].size());

    std::ostringstream out;
    out << rep.title << "\n";
    for (size_t c = 0; c < cols.size(); ++c)
        out << pad(cols[c].header, cols[c].width) << (c + 1 < cols.size() ? "  " : "");
    out << "\n";
    for (const auto& row : cells) {
        for (size_t c = 0; c < cols.size(); ++c)
            out << pad(row[c], cols[c].width) << (c + 1 < cols.size() ? "  " : "");
        out << "\n";
    }
    size_t mismatches = 0;
    for (const TableRowReport& r : rep.rows)
        if (!r.match) ++mismatches;
    out << rep.rows.size() << " rows, "
        << (mismatches == 0 ? std::string("all match") : std::to_string(mismatches) + " mismatches")
        << "\n";
    for (const std::string& n : rep.notes) out << "note: " << n << "\n";
    return out.str();
}

std::string iso_timestamp_now() {
    const std::time_t now = std::time(nullptr);
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

}  // namespace srg
