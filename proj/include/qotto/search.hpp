// search.hpp — Exhaustive protocol optimization: scan every enumerated swap
// protocol, rank the engines by work or efficiency over their fixed-point
// polytopes, and census protocols by external-swap count.

#pragma once

#include <optional>
#include <vector>

#include "qotto/protocol.hpp"
#include "qotto/state.hpp"
#include "qotto/thermo.hpp"

namespace qotto {

enum class SearchObjective { MaxEfficiency, MaxWork };

struct SearchTask {
    int d = 1;
    EnumerationMode mode = EnumerationMode::Transpositions;
    SearchObjective objective = SearchObjective::MaxEfficiency;
    double min_work = 1e-12;  // qualifies a protocol as an engine
    ThermalQubit hot;
    ThermalQubit cold;
    int max_results = 10;
    bool override_cap = false;
    bool parallel = true;
};

struct SearchEntry {
    SwapProtocol protocol;
    CycleResult result;
};

// Ranked by the objective, ties broken by the other quantity, then by
// canonical protocol order, so the output is unique for given inputs.
struct SearchResult {
    std::vector<SearchEntry> entries;
    long long protocols_scanned = 0;
    long long engines_found = 0;
};

// Scans partitions of the enumeration (in parallel when task.parallel) and
// merges per-partition leaders in partition order; the result is identical
// for any thread count. Throws when the dimension cap is exceeded without
// task.override_cap.
SearchResult optimize(const SearchTask& task);

struct CensusRow {
    int external_swaps = 0;
    long long protocols = 0;
    long long engines = 0;        // protocols with some engine vertex
    double best_work = 0.0;       // over engine vertices
    double max_abs_work = 0.0;    // over every fixed-point vertex in the class
    std::optional<double> best_eta;
};

// Groups all transposition protocols by external-swap count; every vertex of
// every fixed-point polytope is evaluated, so max_abs_work bounds the work of
// the whole class.
std::vector<CensusRow> external_swap_census(int d, const ThermalQubit& hot,
                                            const ThermalQubit& cold,
                                            double min_work = 1e-12,
                                            bool parallel = true);

}  // namespace qotto
