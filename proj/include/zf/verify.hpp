#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "zf/bounds.hpp"
#include "zf/corpus.hpp"
#include "zf/forcing.hpp"
#include "zf/graph.hpp"

namespace zf {

enum class ZStatus { Solved, Timeout, Skipped };

/// Everything the verifier knows about one corpus graph: its invariants,
/// every bound report, the exact Z when computed, and which proven bounds
/// (if any) it violates.
struct VerificationRecord {
    std::size_t index = 0;
    std::string g6;
    int n = 0;
    int m = 0;
    int min_degree = 0;
    int max_degree = 0;
    Girth girth_value = Girth::infinite();

    ZStatus status = ZStatus::Skipped;
    int z = 0;                      // meaningful when Solved
    int z_lower = 0, z_upper = 0;   // proven bracket when Timeout
    ColorSet witness{0};            // meaningful when Solved

    std::vector<BoundReport> bounds;             // fixed key order
    std::vector<std::optional<bool>> satisfied;  // parallel to bounds; set
                                                 // only when z and the bound
                                                 // value both exist
    std::optional<bool> conj1_sharp;  // set when solved and conj_girth applies
    std::vector<std::string> violations;  // applicable proven bounds vs z
};

/// A corpus line that failed to parse; never aborts the run.
struct ParseFailure {
    std::size_t index = 0;
    std::string line;
    std::string error;
};

struct SummaryStats {
    std::size_t graphs_total = 0;  // parsed graphs
    std::size_t parse_errors = 0;
    std::size_t graphs_solved = 0;
    std::size_t skipped = 0;
    std::size_t timeouts = 0;
    std::size_t proven_bound_violations = 0;  // (graph, bound) pairs
    std::size_t conjecture1_checked = 0;
    std::size_t conjecture1_sharp_count = 0;
    std::size_t conjecture1_violations = 0;
    std::size_t conjecture2_checked = 0;
    std::size_t conjecture2_violations = 0;

    double sharp_fraction() const;  // sharp / checked, 0 when nothing checked
};

struct VerifyOptions {
    int max_n = 14;  // larger graphs are recorded but not solved
    std::optional<std::chrono::milliseconds> time_limit;  // per graph
    int jobs = 1;    // worker threads across graphs
    int k_max = 2;   // |K| cap for the vertex-deletion bound
};

struct VerifyRun {
    std::vector<VerificationRecord> records;  // input order
    std::vector<ParseFailure> failures;       // input order
    SummaryStats stats;
};

/// Invariants + bounds + exact Z (subject to max_n / time_limit) for one graph.
VerificationRecord verify_graph(const Graph& g, std::size_t index,
                                const std::string& g6,
                                const VerifyOptions& opts);

/// Full corpus run; records come back in input order regardless of jobs.
VerifyRun run_verification(const std::string& corpus_path,
                           const VerifyOptions& opts);
VerifyRun run_verification(std::vector<CorpusEntry> entries,
                           const VerifyOptions& opts);

/// CSV with one row per parsed graph:
/// index,n,m,delta,Delta,girth,z,witness,<bound keys...>,conj_sharp,violations
std::string to_csv(const VerifyRun& run);

/// Same data as the CSV plus the summary, under {"schema": 1, ...}.
std::string to_json(const VerifyRun& run);

std::string summary_text(const SummaryStats& stats);

}  // namespace zf
