// search.cpp

#include "qotto/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qotto/catalysis.hpp"

namespace qotto {

namespace {

double eta_or_lowest(const CycleResult& r) {
    return r.eta ? *r.eta : -std::numeric_limits<double>::infinity();
}

bool rank_before(const SearchEntry& x, const SearchEntry& y, SearchObjective obj) {
    if (obj == SearchObjective::MaxWork) {
        if (x.result.W != y.result.W) return x.result.W > y.result.W;
        const double ex = eta_or_lowest(x.result);
        const double ey = eta_or_lowest(y.result);
        if (ex != ey) return ex > ey;
    } else {
        const double ex = eta_or_lowest(x.result);
        const double ey = eta_or_lowest(y.result);
        if (ex != ey) return ex > ey;
        if (x.result.W != y.result.W) return x.result.W > y.result.W;
    }
    return canonical_less(x.protocol, y.protocol);
}

struct PartitionScan {
    std::vector<SearchEntry> top;
    long long scanned = 0;
    long long engines = 0;
};

PartitionScan scan_partition(const SearchTask& task, int partition) {
    PartitionScan out;
    const auto choice = task.objective == SearchObjective::MaxWork
                            ? FixedPointChoice::MaxWork
                            : FixedPointChoice::MaxEfficiency;
    enumerate_partition(task.d, task.mode, partition, [&](const SwapProtocol& proto) {
        ++out.scanned;
        CycleResult r = run_cycle(proto, task.hot, task.cold, choice);
        if (r.W > task.min_work) {
            ++out.engines;
            out.top.push_back({proto, std::move(r)});
        }
    });
    std::sort(out.top.begin(), out.top.end(),
              [&](const SearchEntry& a, const SearchEntry& b) {
                  return rank_before(a, b, task.objective);
              });
    if (static_cast<int>(out.top.size()) > task.max_results) {
        out.top.resize(task.max_results);
    }
    return out;
}

}  // namespace

SearchResult optimize(const SearchTask& task) {
    if (task.d < 1) {
        throw std::invalid_argument("optimize: d must be >= 1");
    }
    if (task.max_results < 0) {
        throw std::invalid_argument("optimize: max_results must be >= 0");
    }
    if (!enumeration_within_cap(task.d, task.mode) && !task.override_cap) {
        throw std::invalid_argument(
            "optimize: 4d exceeds the enumeration cap; set override_cap to force");
    }
    const int parts = enumerate_partition_count(task.d, task.mode);
    std::vector<PartitionScan> scans(parts);
    if (task.parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int p = 0; p < parts; ++p) {
            scans[p] = scan_partition(task, p);
        }
    } else {
        for (int p = 0; p < parts; ++p) {
            scans[p] = scan_partition(task, p);
        }
    }

    SearchResult result;
    std::vector<SearchEntry> pool;
    for (auto& scan : scans) {  // partition order keeps the merge deterministic
        result.protocols_scanned += scan.scanned;
        result.engines_found += scan.engines;
        for (auto& entry : scan.top) pool.push_back(std::move(entry));
    }
    std::sort(pool.begin(), pool.end(), [&](const SearchEntry& a, const SearchEntry& b) {
        return rank_before(a, b, task.objective);
    });
    if (static_cast<int>(pool.size()) > task.max_results) {
        pool.resize(task.max_results);
    }
    result.entries = std::move(pool);
    return result;
}

namespace {

void merge_census(std::vector<CensusRow>& into, const std::vector<CensusRow>& from) {
    for (size_t i = 0; i < into.size(); ++i) {
        into[i].protocols += from[i].protocols;
        into[i].engines += from[i].engines;
        into[i].best_work = std::max(into[i].best_work, from[i].best_work);
        into[i].max_abs_work = std::max(into[i].max_abs_work, from[i].max_abs_work);
        if (from[i].best_eta &&
            (!into[i].best_eta || *from[i].best_eta > *into[i].best_eta)) {
            into[i].best_eta = from[i].best_eta;
        }
    }
}

std::vector<CensusRow> census_partition(int d, const ThermalQubit& hot,
                                        const ThermalQubit& cold, double min_work,
                                        int partition) {
    std::vector<CensusRow> rows(2 * d + 1);
    for (int c = 0; c <= 2 * d; ++c) rows[c].external_swaps = c;
    enumerate_partition(d, EnumerationMode::Transpositions, partition,
                        [&](const SwapProtocol& proto) {
                            const auto report = validate_protocol(proto);
                            CensusRow& row = rows[report.external_swaps];
                            ++row.protocols;
                            const auto map = cycle_map(proto, hot, cold);
                            const auto fps = fixed_points(map);
                            bool engine = false;
                            for (const auto& v : fps.vertices) {
                                const auto before =
                                    composite_initial(hot, cold, Catalyst(d, v));
                                const auto after = apply_protocol(before, proto);
                                const auto [q_h, q_c] = heats(before, after);
                                const double w = q_h + q_c;
                                row.max_abs_work = std::max(row.max_abs_work, std::abs(w));
                                if (w > min_work) {
                                    engine = true;
                                    row.best_work = std::max(row.best_work, w);
                                    if (q_h > 0.0) {
                                        const double eta = w / q_h;
                                        if (!row.best_eta || eta > *row.best_eta) {
                                            row.best_eta = eta;
                                        }
                                    }
                                }
                            }
                            if (engine) ++row.engines;
                        });
    return rows;
}

}  // namespace

std::vector<CensusRow> external_swap_census(int d, const ThermalQubit& hot,
                                            const ThermalQubit& cold, double min_work,
                                            bool parallel) {
    if (d < 1) {
        throw std::invalid_argument("external_swap_census: d must be >= 1");
    }
    if (!enumeration_within_cap(d, EnumerationMode::Transpositions)) {
        throw std::invalid_argument("external_swap_census: 4d exceeds the enumeration cap");
    }
    const int parts = enumerate_partition_count(d, EnumerationMode::Transpositions);
    std::vector<std::vector<CensusRow>> partials(parts);
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int p = 0; p < parts; ++p) {
            partials[p] = census_partition(d, hot, cold, min_work, p);
        }
    } else {
        for (int p = 0; p < parts; ++p) {
            partials[p] = census_partition(d, hot, cold, min_work, p);
        }
    }
    std::vector<CensusRow> rows(2 * d + 1);
    for (int c = 0; c <= 2 * d; ++c) rows[c].external_swaps = c;
    for (const auto& part : partials) merge_census(rows, part);
    return rows;
}

}  // namespace qotto
