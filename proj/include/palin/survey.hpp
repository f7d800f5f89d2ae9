#ifndef PALIN_SURVEY_HPP
#define PALIN_SURVEY_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "palin/graph.hpp"
#include "palin/poly.hpp"

namespace palin {

struct SurveyFilter {
    enum class Source { Builtin, Stream };
    int order = 0;
    bool connected_only = true;
    bool triangle_free = false;
    Source source = Source::Builtin;
};

struct ClassCounts {
    std::uint64_t palindromic = 0;
    std::uint64_t antipalindromic = 0;
    std::uint64_t abs_inclusive = 0; // absolutely palindromic, any kind
    std::uint64_t abs_exclusive = 0; // absolute but neither (anti)palindromic
};

struct SurveyReport {
    SurveyFilter filter;
    std::uint64_t total = 0;
    ClassCounts all;      // every surveyed graph
    ClassCounts hairings; // sub-counts over graphs recognized as 1-hairings
    ClassCounts trees;
    ClassCounts bald;
    std::vector<std::string> palindromic_witnesses;     // canonical graph6
    std::vector<std::string> antipalindromic_witnesses; // canonical graph6
    std::vector<std::string> violations;                // must stay empty
};

/// Classify a materialized stream of graphs. workers <= 1 runs the serial
/// reference; larger values use OpenMP with an identical, deterministic
/// result (commutative tally merge, sorted witnesses).
SurveyReport classify_survey(const std::vector<Graph>& graphs, const SurveyFilter& filter,
                             int workers = 1);

/// Full builtin-generator survey with optional chunked checkpointing.
SurveyReport run_survey(const SurveyFilter& filter, int workers = 1,
                        const std::string& checkpoint_path = "", bool resume = false);

/// Palindromic witnesses have order 0 mod 4, antipalindromic 2 mod 4.
bool conjecture_scan(const SurveyReport& report);

struct IngestResult {
    std::vector<Graph> graphs;
    std::vector<std::pair<std::size_t, std::string>> errors; // (line number, message)
};

/// Parse a graph6 stream, apply the filter, optionally deduplicate by
/// canonical form; per-line errors are collected and parsing continues.
IngestResult ingest_stream(std::istream& in, const SurveyFilter& filter, bool dedupe = true);

nlohmann::json report_json(const SurveyReport& r);
std::string report_text(const SurveyReport& r);
std::string report_csv(const SurveyReport& r);

// --- reconciliation against the published summary table ----------------

struct CellOutcome {
    std::string cell; // e.g. "P.(8)"
    long long paper = 0;
    long long derived_connected = 0;
    long long derived_all = 0;      // disconnected graphs included
    long long derived_connected_alt = -1; // exclusive reading where it differs
    long long derived_all_alt = -1;
    std::string status;          // MATCH / MISMATCH / AMBIGUOUS-SEMANTICS
    std::string matched_reading; // which population/reading agreed, if any
    std::vector<std::string> witnesses_connected;
    std::vector<std::string> witnesses_all; // component codes joined with '+'
};

struct Reconciliation {
    std::vector<CellOutcome> cells;
    std::vector<std::string> consistency_violations; // must be empty
    std::vector<std::string> notes;
};

/// Requires connected-only reports for orders 2, 4, 6, 8 at minimum.
Reconciliation reconcile_table2(const std::vector<SurveyReport>& connected_reports);

nlohmann::json reconcile_json(const Reconciliation& r);
std::string reconcile_text(const Reconciliation& r);

} // namespace palin

#endif
