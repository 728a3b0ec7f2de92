#pragma once

#include <atomic>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "wirt/bounds.hpp"
#include "wirt/coloring.hpp"
#include "wirt/csv.hpp"
#include "wirt/diagram.hpp"
#include "wirt/errors.hpp"
#include "wirt/gauss_code.hpp"
#include "wirt/search.hpp"
#include "wirt/verify.hpp"

namespace wirt {

enum class RecordStatus { Match, UpperBoundOnly, Mismatch, Skipped };

inline std::string to_string(RecordStatus s) {
    switch (s) {
    case RecordStatus::Match: return "MATCH";
    case RecordStatus::UpperBoundOnly: return "UPPER_BOUND_ONLY";
    case RecordStatus::Mismatch: return "MISMATCH";
    case RecordStatus::Skipped: return "SKIPPED";
    }
    return "SKIPPED";
}

struct ChecksSummary {
    bool computed = false;
    bool cut_split = false;
    bool connectivity = false;
    bool unique_max = false;
    bool overstrand_checked = false;
    bool overstrand = false;
    int exceptions = 0;
    std::vector<std::string> violations;
    std::optional<int> maxima;
    bool maxima_match = false;

    bool all_ok() const {
        return computed && connectivity && unique_max && (!overstrand_checked || overstrand) &&
               maxima_match;
    }

    std::string brief() const {
        if (!computed)
            return "-";
        if (!all_ok())
            return "FAIL";
        std::string out = "ok";
        if (exceptions > 0)
            out += "+exc";
        if (cut_split)
            out += "(cut-split)";
        return out;
    }
};

struct TabulationRecord {
    std::string name;
    std::string gauss; // normalized when the code parses
    int crossings = 0;
    int components = 0;
    std::optional<int> omega;
    std::vector<std::string> witness;
    std::optional<int> twist_number;
    std::optional<int> bound_2t;
    ChecksSummary checks;
    double elapsed_ms = 0.0;
    std::optional<int> known_bridge;
    std::optional<double> known_volume;
    std::optional<bool> alternating;
    RecordStatus status = RecordStatus::Skipped;
    std::string diagnostic;
};

struct BatchOptions {
    int jobs = 1;
    std::optional<int> cutoff_k;
    std::optional<int> budget_ms;
    bool stable_timings = false; // write elapsed as 0 so reruns diff clean
};

struct RowInput {
    std::string name;
    std::string gauss;
    std::optional<int> known_bridge;
    std::optional<double> known_volume;
    std::optional<bool> alternating;
};

namespace detail {

inline std::string lower(std::string s) {
    for (char& ch : s)
        ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    return s;
}

inline RecordStatus status_against(std::optional<int> known, int omega, std::string& diagnostic) {
    if (!known)
        return RecordStatus::UpperBoundOnly;
    if (omega == *known)
        return RecordStatus::Match;
    if (omega < *known) {
        diagnostic = "omega " + std::to_string(omega) + " below known bridge number " +
                     std::to_string(*known) + "; bad input data or a bug";
        return RecordStatus::Mismatch;
    }
    diagnostic = "omega " + std::to_string(omega) + " exceeds known bridge number " +
                 std::to_string(*known) + "; this diagram does not realize it";
    return RecordStatus::UpperBoundOnly;
}

} // namespace detail

// Reads the batch input table: columns name, gauss, then optional
// known_bridge, known_volume, alternating in any order.
inline std::vector<RowInput> read_input_csv(const std::string& path) {
    const auto rows = csv::read_file(path);
    if (rows.empty())
        throw MalformedHeader("empty file");
    std::vector<std::string> header;
    for (const auto& cell : rows.front())
        header.push_back(detail::lower(csv::trim(cell)));
    int name_col = -1, gauss_col = -1, bridge_col = -1, volume_col = -1, alt_col = -1;
    for (size_t i = 0; i < header.size(); ++i) {
        if (header[i] == "name") name_col = static_cast<int>(i);
        else if (header[i] == "gauss") gauss_col = static_cast<int>(i);
        else if (header[i] == "known_bridge") bridge_col = static_cast<int>(i);
        else if (header[i] == "known_volume") volume_col = static_cast<int>(i);
        else if (header[i] == "alternating") alt_col = static_cast<int>(i);
        else throw MalformedHeader("unexpected column '" + header[i] + "'");
    }
    if (name_col < 0 || gauss_col < 0)
        throw MalformedHeader("columns 'name' and 'gauss' are required");

    std::vector<RowInput> out;
    for (size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        const auto cell = [&](int col) -> std::string {
            return col >= 0 && col < static_cast<int>(row.size()) ? csv::trim(row[static_cast<size_t>(col)])
                                                                  : std::string{};
        };
        RowInput in;
        in.name = cell(name_col);
        in.gauss = cell(gauss_col);
        if (auto s = cell(bridge_col); !s.empty())
            in.known_bridge = std::stoi(s);
        if (auto s = cell(volume_col); !s.empty())
            in.known_volume = std::stod(s);
        if (auto s = cell(alt_col); !s.empty())
            in.alternating = s == "1" || detail::lower(s) == "true" || detail::lower(s) == "yes";
        out.push_back(std::move(in));
    }
    return out;
}

inline TabulationRecord process_entry(const RowInput& in, const BatchOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    TabulationRecord rec;
    rec.name = in.name;
    rec.gauss = in.gauss;
    rec.known_bridge = in.known_bridge;
    rec.known_volume = in.known_volume;
    rec.alternating = in.alternating;
    try {
        const Diagram d = build_diagram(parse_gauss(in.gauss));
        rec.gauss = emit_gauss(d.code());
        rec.crossings = d.num_crossings();
        rec.components = d.num_components();
        if (d.num_crossings() > 0) {
            const auto regions = twist_regions(d);
            rec.twist_number = static_cast<int>(regions.size());
            rec.bound_2t = 2 * static_cast<int>(regions.size());
        }

        SearchOptions sopts;
        sopts.cutoff_k = opts.cutoff_k;
        if (opts.budget_ms)
            sopts.time_budget = std::chrono::milliseconds(*opts.budget_ms);
        const SearchOutcome outcome = wirtinger_number(d, sopts);
        if (const auto* bounded = std::get_if<BoundedResult>(&outcome)) {
            rec.status = RecordStatus::Skipped;
            rec.diagnostic = "unresolved: omega > " + std::to_string(bounded->omega_gt) +
                             (bounded->reason == BoundReason::Cutoff ? " (cutoff)" : " (time budget)");
        } else {
            const auto& result = std::get<WirtingerResult>(outcome);
            rec.omega = result.omega;
            for (int s : result.witness)
                rec.witness.push_back(d.name_of(s));

            const ColoringResult coloring = extend_to_fixpoint(d, result.witness);
            const PropertySummary summary = run_property_checks(d, coloring);
            rec.checks.computed = true;
            rec.checks.cut_split = summary.cut_split;
            rec.checks.connectivity = summary.report.connectivity_ok;
            rec.checks.unique_max = summary.report.unique_max_ok;
            rec.checks.overstrand_checked = summary.overstrand_checked;
            rec.checks.overstrand = summary.report.overstrand_height_ok;
            rec.checks.exceptions = static_cast<int>(summary.report.link_exception_crossings.size());
            rec.checks.violations = summary.report.violations;
            if (summary.passed()) {
                const MorseProfile profile = reconstruct_morse_profile(d, coloring);
                rec.checks.maxima = count_local_maxima(profile);
                rec.checks.maxima_match = *rec.checks.maxima == result.omega;
            }
            rec.status = detail::status_against(rec.known_bridge, result.omega, rec.diagnostic);
        }
    } catch (const Error& e) {
        rec.status = RecordStatus::Skipped;
        rec.diagnostic = e.what();
    } catch (const std::exception& e) {
        rec.status = RecordStatus::Skipped;
        rec.diagnostic = std::string("error: ") + e.what();
    }
    rec.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rec;
}

// One record per input row, in input order, independent of worker count.
inline std::vector<TabulationRecord> run_batch(const std::string& input_path,
                                               const BatchOptions& opts = {}) {
    const auto rows = read_input_csv(input_path);
    std::vector<TabulationRecord> records(rows.size());
    const int jobs = std::max(1, opts.jobs);
    if (jobs == 1 || rows.size() <= 1) {
        for (size_t i = 0; i < rows.size(); ++i)
            records[i] = process_entry(rows[i], opts);
        return records;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(jobs));
    for (int w = 0; w < jobs; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const size_t i = next.fetch_add(1);
                if (i >= rows.size())
                    return;
                records[i] = process_entry(rows[i], opts);
            }
        });
    }
    for (auto& th : pool)
        th.join();
    return records;
}

namespace detail {

inline std::string format_ms(double ms, bool stable) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", stable ? 0.0 : ms);
    return buf;
}

} // namespace detail

inline nlohmann::json record_to_json(const TabulationRecord& rec, bool stable_timings = false) {
    nlohmann::json j;
    j["name"] = rec.name;
    j["gauss"] = rec.gauss;
    j["crossings"] = rec.crossings;
    j["components"] = rec.components;
    j["omega"] = rec.omega ? nlohmann::json(*rec.omega) : nlohmann::json();
    j["witness"] = rec.witness;
    j["twist_number"] = rec.twist_number ? nlohmann::json(*rec.twist_number) : nlohmann::json();
    j["bound_2t"] = rec.bound_2t ? nlohmann::json(*rec.bound_2t) : nlohmann::json();
    nlohmann::json checks;
    checks["computed"] = rec.checks.computed;
    checks["cut_split"] = rec.checks.cut_split;
    checks["connectivity_ok"] = rec.checks.connectivity;
    checks["unique_max_ok"] = rec.checks.unique_max;
    checks["overstrand_checked"] = rec.checks.overstrand_checked;
    checks["overstrand_height_ok"] = rec.checks.overstrand;
    checks["link_exceptions"] = rec.checks.exceptions;
    checks["violations"] = rec.checks.violations;
    checks["profile_maxima"] = rec.checks.maxima ? nlohmann::json(*rec.checks.maxima) : nlohmann::json();
    checks["maxima_match"] = rec.checks.maxima_match;
    j["checks"] = checks;
    j["elapsed_ms"] = stable_timings ? 0.0 : rec.elapsed_ms;
    j["known_bridge"] = rec.known_bridge ? nlohmann::json(*rec.known_bridge) : nlohmann::json();
    j["known_volume"] = rec.known_volume ? nlohmann::json(*rec.known_volume) : nlohmann::json();
    j["alternating"] = rec.alternating ? nlohmann::json(*rec.alternating) : nlohmann::json();
    j["status"] = to_string(rec.status);
    j["diagnostic"] = rec.diagnostic;
    return j;
}

inline std::string records_to_json_text(const std::vector<TabulationRecord>& records,
                                        bool stable_timings = false) {
    nlohmann::json doc;
    doc["schema"] = 1;
    doc["records"] = nlohmann::json::array();
    for (const auto& rec : records)
        doc["records"].push_back(record_to_json(rec, stable_timings));
    return doc.dump(2) + "\n";
}

inline std::string records_to_csv_text(const std::vector<TabulationRecord>& records,
                                       bool stable_timings = false) {
    std::string out = "name,crossings,components,omega,witness,twist_number,bound_2t,checks,"
                      "status,elapsed_ms\n";
    for (const auto& rec : records) {
        std::string witness;
        for (size_t i = 0; i < rec.witness.size(); ++i) {
            if (i)
                witness += ' ';
            witness += rec.witness[i];
        }
        out += csv::join_row({rec.name,
                              std::to_string(rec.crossings),
                              std::to_string(rec.components),
                              rec.omega ? std::to_string(*rec.omega) : "",
                              witness,
                              rec.twist_number ? std::to_string(*rec.twist_number) : "",
                              rec.bound_2t ? std::to_string(*rec.bound_2t) : "",
                              rec.checks.brief(),
                              to_string(rec.status),
                              detail::format_ms(rec.elapsed_ms, stable_timings)});
    }
    return out;
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw UnreadableInput("cannot write " + path);
    out << text;
}

struct ComparisonReport {
    int match = 0;
    int upper_bound_only = 0;
    int mismatch = 0;
    int skipped = 0;
    std::vector<std::string> mismatches;

    bool failed() const { return mismatch > 0; }
};

// Recomputes every record's status against a name -> bridge-number table.
// Names absent from the table become UPPER_BOUND_ONLY.
inline ComparisonReport compare_known(std::vector<TabulationRecord>& records,
                                      const std::string& known_path) {
    const auto rows = csv::read_file(known_path);
    std::map<std::string, int> known;
    size_t start = 0;
    if (!rows.empty()) {
        const auto head = detail::lower(csv::trim(rows.front().empty() ? "" : rows.front().front()));
        if (head == "name")
            start = 1;
    }
    for (size_t r = start; r < rows.size(); ++r) {
        if (rows[r].size() < 2)
            continue;
        const auto name = csv::trim(rows[r][0]);
        const auto value = csv::trim(rows[r][1]);
        if (!name.empty() && !value.empty())
            known[name] = std::stoi(value);
    }
    ComparisonReport report;
    for (auto& rec : records) {
        if (rec.status == RecordStatus::Skipped || !rec.omega) {
            ++report.skipped;
            continue;
        }
        auto it = known.find(rec.name);
        rec.known_bridge = it == known.end() ? std::optional<int>{} : std::optional<int>{it->second};
        rec.status = detail::status_against(rec.known_bridge, *rec.omega, rec.diagnostic);
        switch (rec.status) {
        case RecordStatus::Match: ++report.match; break;
        case RecordStatus::UpperBoundOnly: ++report.upper_bound_only; break;
        case RecordStatus::Mismatch:
            ++report.mismatch;
            report.mismatches.push_back(rec.name);
            break;
        case RecordStatus::Skipped: ++report.skipped; break;
        }
    }
    return report;
}

// Loads a results CSV produced by records_to_csv_text, for `compare`.
inline std::vector<TabulationRecord> read_results_csv(const std::string& path) {
    const auto rows = csv::read_file(path);
    if (rows.empty())
        throw MalformedHeader("empty results file");
    int name_col = -1, omega_col = -1, status_col = -1;
    for (size_t i = 0; i < rows.front().size(); ++i) {
        const auto h = detail::lower(csv::trim(rows.front()[i]));
        if (h == "name") name_col = static_cast<int>(i);
        else if (h == "omega") omega_col = static_cast<int>(i);
        else if (h == "status") status_col = static_cast<int>(i);
    }
    if (name_col < 0 || omega_col < 0)
        throw MalformedHeader("columns 'name' and 'omega' are required");
    std::vector<TabulationRecord> records;
    for (size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        TabulationRecord rec;
        if (name_col < static_cast<int>(row.size()))
            rec.name = csv::trim(row[static_cast<size_t>(name_col)]);
        if (omega_col < static_cast<int>(row.size())) {
            const auto s = csv::trim(row[static_cast<size_t>(omega_col)]);
            if (!s.empty())
                rec.omega = std::stoi(s);
        }
        rec.status = rec.omega ? RecordStatus::UpperBoundOnly : RecordStatus::Skipped;
        if (status_col >= 0 && status_col < static_cast<int>(row.size()) &&
            csv::trim(row[static_cast<size_t>(status_col)]) == "SKIPPED")
            rec.status = RecordStatus::Skipped;
        records.push_back(std::move(rec));
    }
    return records;
}

} // namespace wirt
