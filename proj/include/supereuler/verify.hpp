#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace supereuler {

// Identifiers for the exhaustively checkable statements about spanning and
// dominating closed trails in connected simple graphs. Each one is verified
// over every connected graph (one representative per isomorphism class) whose
// order lies in the requested range and that satisfies the statement's
// hypothesis.
enum class TheoremId {
    T1,  // five-way classification of spanning (u,v)-trails under xi >= n
    T2,  // collapsibility trichotomy under xi >= n
    T5,  // hamiltonian line graph under xi >= n - 1 - p(n), n >= 6
    T6,  // collapsibility classification under xi >= n - 1 - p(n)
    T7,  // spanning closed trails through <= k prescribed edges, xi >= n + k
    T9,  // structural properties of reduced graphs
    L1,  // edge-degree bound survives deleting <= k edges
    L2,  // edge-degree bound survives reduction
    C8,  // k-hamiltonicity of the line graph under xi >= n + k
};

const char* theorem_name(TheoremId id);
std::optional<TheoremId> parse_theorem(const std::string& name);

struct CheckParams {
    int n_min = 4;
    int n_max = 7;
    // Values of k to sweep for the statements parameterized by k (T7, C8,
    // L1). Empty means the per-theorem default; ignored by the others.
    std::vector<int> k_values;
    // Optional file of graph6 lines to check instead of the internal
    // generator. Graphs outside [n_min, n_max] are skipped.
    std::optional<std::string> input_file;
    int workers = 1;
};

// One record per checked (graph, k) combination. `graph6` is the canonical
// graph6 code of the graph, so records are globally ordered and directly
// comparable across runs.
struct GraphRecord {
    std::string graph6;
    int n = 0;
    std::optional<int> k;
    std::string outcome;
    bool counterexample = false;
    std::string reason;
    nlohmann::json detail;
};

struct VerificationReport {
    TheoremId theorem;
    CheckParams params;
    std::vector<GraphRecord> records;
    std::map<std::string, long long> outcome_counts;
    long long graphs_checked = 0;
    long long counterexamples = 0;
    bool pass = false;
};

// Runs the exhaustive check. Throws std::invalid_argument on out-of-range
// parameters and std::runtime_error if the input file cannot be read.
VerificationReport check_theorem(TheoremId id, const CheckParams& params);

// Serializes a report. Format "records" emits one JSON object per line, keyed
// by canonical graph6 code; format "summary" emits a fixed-order text block
// ending in a counterexample count and a PASS/FAIL status line. Output is
// byte-identical across runs and worker counts. Throws std::invalid_argument
// on an unknown format name.
void emit_report(const VerificationReport& report, const std::string& format,
                 std::ostream& out);

}  // namespace supereuler
