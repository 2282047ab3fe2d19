// check_suite.cpp

#include "qotto/check_suite.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <vector>

#include "qotto/catalysis.hpp"
#include "qotto/protocol.hpp"
#include "qotto/state.hpp"
#include "qotto/thermo.hpp"

namespace qotto {

namespace {

constexpr double kFirstLawTol = 1e-12;
constexpr double kClausiusTol = 1e-9;
constexpr double kCarnotTol = 1e-12;
constexpr double kEtaTol = 1e-12;
constexpr double kWorkRelTol = 1e-10;
constexpr double kIdentityTol = 1e-12;
constexpr double kSwapSumTol = 1e-13;
constexpr double kBoundaryMargin = 1e-9;
constexpr double kMinWork = 1e-12;

struct Params {
    double beta_h_omega_h;
    double beta_ratio;
    double omega_c;
};

std::string describe(const Params& p, int d) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "d=%d bh*wh=%.3g bc/bh=%.3g wc/wh=%.3g", d,
                  p.beta_h_omega_h, p.beta_ratio, p.omega_c);
    return buf;
}

struct UnitStat {
    long long cases = 0;
    double worst = -std::numeric_limits<double>::infinity();
    std::string detail;
    long long violations = 0;
};

void absorb(UnitStat& acc, double value, const std::string& detail, bool violated) {
    ++acc.cases;
    if (value > acc.worst) {
        acc.worst = value;
        acc.detail = detail;
    }
    if (violated) ++acc.violations;
}

// Units fold in index order and ties keep the earlier detail, so the merged
// stat is independent of scheduling.
UnitStat fold(const std::vector<UnitStat>& units) {
    UnitStat acc;
    for (const auto& u : units) {
        acc.cases += u.cases;
        acc.violations += u.violations;
        if (u.worst > acc.worst) {
            acc.worst = u.worst;
            acc.detail = u.detail;
        }
    }
    return acc;
}

CheckFamilyResult family_from(const char* name, const UnitStat& acc) {
    return {name, acc.violations == 0, acc.cases,
            std::isfinite(acc.worst) ? acc.worst : 0.0, acc.detail};
}

template <typename Fn>
std::vector<UnitStat> map_units(int count, bool parallel, Fn&& fn) {
    std::vector<UnitStat> units(count);
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < count; ++i) units[i] = fn(i);
    } else {
        for (int i = 0; i < count; ++i) units[i] = fn(i);
    }
    return units;
}

std::vector<Params> laws_params(CheckGrid grid) {
    const std::vector<double> bhs = grid == CheckGrid::Full
                                        ? std::vector<double>{0.1, 0.3, 0.7, 1.2, 2.0}
                                        : std::vector<double>{0.3, 1.2};
    const std::vector<double> ratios = grid == CheckGrid::Full
                                           ? std::vector<double>{1.5, 4.0}
                                           : std::vector<double>{4.0};
    const std::vector<double> omegas{0.45, 1.6};
    std::vector<Params> out;
    for (double bh : bhs) {
        for (double r : ratios) {
            for (double w : omegas) out.push_back({bh, r, w});
        }
    }
    return out;
}

// Shared sweep for the three law families: every transposition protocol at
// d = 1, 2, every fixed-point vertex, every parameter set.
struct LawsStats {
    UnitStat first_law;
    UnitStat clausius;
    UnitStat carnot;
};

LawsStats laws_sweep(CheckGrid grid, bool parallel) {
    const auto params = laws_params(grid);
    struct Unit {
        int d;
        int partition;
        Params params;
    };
    std::vector<Unit> units;
    for (int d : {1, 2}) {
        const int parts = enumerate_partition_count(d, EnumerationMode::Transpositions);
        for (const auto& p : params) {
            for (int part = 0; part < parts; ++part) units.push_back({d, part, p});
        }
    }
    const int count = static_cast<int>(units.size());
    std::vector<LawsStats> stats(count);
    const auto worker = [&](int i) {
        const auto& unit = units[i];
        const auto hot = thermal_qubit(unit.params.beta_h_omega_h, 1.0);
        const auto cold =
            thermal_qubit(unit.params.beta_ratio * hot.beta, unit.params.omega_c);
        const std::string where = describe(unit.params, unit.d);
        LawsStats s;
        enumerate_partition(
            unit.d, EnumerationMode::Transpositions, unit.partition,
            [&](const SwapProtocol& proto) {
                const auto map = cycle_map(proto, hot, cold);
                const auto fps = fixed_points(map);
                for (const auto& v : fps.vertices) {
                    const auto before = composite_initial(hot, cold, Catalyst(unit.d, v));
                    const auto after = apply_protocol(before, proto);
                    const auto [q_h, q_c] = heats(before, after);
                    const double w = q_h + q_c;
                    const double first_law = std::abs(w - q_h - q_c);
                    absorb(s.first_law, first_law, where, first_law > kFirstLawTol);
                    const double clausius = hot.beta * q_h + cold.beta * q_c;
                    absorb(s.clausius, clausius, where, clausius > kClausiusTol);
                    if (w > kMinWork && q_h > 0.0) {
                        const double eta = w / q_h;
                        const double carnot = 1.0 - hot.beta / cold.beta;
                        absorb(s.carnot, eta - carnot, where, eta > carnot + kCarnotTol);
                    }
                }
            });
        return s;
    };
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < count; ++i) stats[i] = worker(i);
    } else {
        for (int i = 0; i < count; ++i) stats[i] = worker(i);
    }
    std::vector<UnitStat> fl(count), cl(count), ca(count);
    for (int i = 0; i < count; ++i) {
        fl[i] = stats[i].first_law;
        cl[i] = stats[i].clausius;
        ca[i] = stats[i].carnot;
    }
    return {fold(fl), fold(cl), fold(ca)};
}

CheckFamilyResult formula_vs_simulation(CheckGrid grid, bool parallel) {
    const int n = grid == CheckGrid::Full ? 10 : 3;
    std::vector<int> dims;
    if (grid == CheckGrid::Full) {
        for (int d = 1; d <= 8; ++d) dims.push_back(d);
    } else {
        dims = {1, 2, 8};
    }
    struct Unit {
        int d;
        double bh;
    };
    std::vector<Unit> units;
    for (int d : dims) {
        // d beta_h omega_h stays <= 4 so delta_p never sinks into the
        // double-precision cancellation floor of the simulated flows.
        const double bh_max = std::min(2.0, 4.0 / d);
        for (int i = 0; i < n; ++i) {
            units.push_back({d, 0.01 + (bh_max - 0.01) * i / (n - 1)});
        }
    }
    const auto stats =
        map_units(static_cast<int>(units.size()), parallel, [&](int u) {
            UnitStat s;
            const int d = units[u].d;
            const double bh = units[u].bh;
            for (int j = 0; j < n; ++j) {
                const double ratio = 1.5 + (20.0 - 1.5) * j / (n - 1);
                for (int k = 0; k < n; ++k) {
                    const double t = 0.2 + 0.6 * k / (n - 1);
                    const double lo = 1.0 / ratio;
                    const double omega_c = d * (lo + t * (1.0 - lo));
                    const auto hot = thermal_qubit(bh, 1.0);
                    const auto cold = thermal_qubit(ratio * bh, omega_c);
                    const auto cf = closed_form(d, hot, cold);
                    const auto r = run_cycle(d_otto_protocol(d), hot, cold,
                                             FixedPointChoice::MaxWork);
                    const double eta_err = r.eta ? std::abs(*r.eta - cf.eta_d) : 1.0;
                    const double w_err = std::abs(r.W - cf.W_d) / std::abs(cf.W_d);
                    // scaled so 1.0 marks the tolerance for both quantities
                    const double score = std::max(eta_err / kEtaTol, w_err / kWorkRelTol);
                    absorb(s, score, describe({bh, ratio, omega_c}, d), score > 1.0);
                }
            }
            return s;
        });
    return family_from("formula-vs-simulation", fold(stats));
}

CheckFamilyResult regime_sign(CheckGrid grid, bool parallel) {
    const std::vector<double> bhs = grid == CheckGrid::Full
                                        ? std::vector<double>{0.1, 0.5, 1.5}
                                        : std::vector<double>{0.5};
    const std::vector<double> ratios = grid == CheckGrid::Full
                                           ? std::vector<double>{1.2, 3.0, 8.0}
                                           : std::vector<double>{3.0};
    const int d_max = grid == CheckGrid::Full ? 4 : 3;
    const int n = grid == CheckGrid::Full ? 10 : 5;
    struct Unit {
        int d;
        double bh;
        double ratio;
    };
    std::vector<Unit> units;
    for (int d = 1; d <= d_max; ++d) {
        for (double bh : bhs) {
            for (double ratio : ratios) units.push_back({d, bh, ratio});
        }
    }
    const auto stats =
        map_units(static_cast<int>(units.size()), parallel, [&](int u) {
            UnitStat s;
            const int d = units[u].d;
            const double bh = units[u].bh;
            const double ratio = units[u].ratio;
            for (int k = 0; k < n; ++k) {
                const double omega_c = 0.1 + (3.7 - 0.1) * k / (n - 1);
                const auto hot = thermal_qubit(bh, 1.0);
                const auto cold = thermal_qubit(ratio * bh, omega_c);
                // stay clear of the two zero-work boundaries
                if (std::abs(d * hot.beta * hot.omega - cold.beta * cold.omega) <=
                        kBoundaryMargin ||
                    std::abs(cold.omega - d * hot.omega) <= kBoundaryMargin) {
                    continue;
                }
                const auto cf = closed_form(d, hot, cold);
                const bool agree = (cf.W_d > 0.0) == cf.in_engine_regime;
                absorb(s, agree ? 0.0 : 1.0,
                       agree ? std::string() : describe({bh, ratio, omega_c}, d),
                       !agree);
            }
            return s;
        });
    return family_from("regime-sign", fold(stats));
}

CheckFamilyResult f2_identity(CheckGrid grid, bool parallel) {
    const std::vector<double> bh_list =
        grid == CheckGrid::Full
            ? std::vector<double>{1e-8, 1e-7, 5e-7, 1e-3, 0.1, 0.3, 1.0, 2.0}
            : std::vector<double>{1e-7, 0.3, 2.0};
    const std::vector<double> bc_list = grid == CheckGrid::Full
                                            ? std::vector<double>{0.05, 0.5, 1.0, 3.0}
                                            : std::vector<double>{0.5, 3.0};
    const auto stats =
        map_units(static_cast<int>(bh_list.size()), parallel, [&](int i) {
            UnitStat s;
            const double bhwh = bh_list[i];
            for (double bcwc : bc_list) {
                const double omega_c = 0.5;
                const auto hot = thermal_qubit(bhwh, 1.0);
                const auto cold = thermal_qubit(bcwc / omega_c, omega_c);
                const double a = std::exp(-bhwh);
                const double b = std::exp(-bcwc);
                const double f2 = 1.0 + b + 2.0 * a;
                const double dp1 = (a - b) / ((1.0 + a) * (1.0 + b));
                const double w1 = (hot.omega - cold.omega) * dp1;
                const double a2 = std::exp(-2.0 * bhwh);
                const double w2 = (2.0 * hot.omega - cold.omega) * (a2 - b) /
                                  ((1.0 + a) * (1.0 + b) * f2);
                const auto cf1 = closed_form(1, hot, cold);
                const auto cf2 = closed_form(2, hot, cold);
                const auto rel = [](double got, double ref) {
                    return std::abs(got - ref) / (1.0 + std::abs(ref));
                };
                const double err = std::max({rel(cf2.f_d, f2), rel(cf1.f_d, 1.0),
                                             rel(cf1.W_d, w1), rel(cf2.W_d, w2)});
                absorb(s, err, describe({bhwh, bcwc / bhwh, omega_c}, 2),
                       err > kIdentityTol);
            }
            return s;
        });
    return family_from("f2-identity", fold(stats));
}

CheckFamilyResult swap_sum_family(CheckGrid grid, bool parallel) {
    const std::vector<Params> params =
        grid == CheckGrid::Full
            ? std::vector<Params>{{0.3, 3.0, 0.5}, {1.1, 1.8, 1.4}}
            : std::vector<Params>{{0.3, 3.0, 0.5}};
    struct Unit {
        int d;
        int partition;
        Params params;
    };
    std::vector<Unit> units;
    for (int d : {1, 2}) {
        const int parts = enumerate_partition_count(d, EnumerationMode::Transpositions);
        for (const auto& p : params) {
            for (int part = 0; part < parts; ++part) units.push_back({d, part, p});
        }
    }
    const auto stats =
        map_units(static_cast<int>(units.size()), parallel, [&](int i) {
            UnitStat s;
            const auto& unit = units[i];
            const auto hot = thermal_qubit(unit.params.beta_h_omega_h, 1.0);
            const auto cold =
                thermal_qubit(unit.params.beta_ratio * hot.beta, unit.params.omega_c);
            const std::string where = describe(unit.params, unit.d);
            std::vector<Catalyst> cats;
            cats.push_back(Catalyst::uniform(unit.d));
            if (unit.d > 1) {
                std::vector<double> ramp(unit.d);
                double sum = 0.0;
                for (int k = 0; k < unit.d; ++k) sum += k + 1.0;
                for (int k = 0; k < unit.d; ++k) ramp[k] = (k + 1.0) / sum;
                cats.emplace_back(unit.d, ramp);
            }
            enumerate_partition(unit.d, EnumerationMode::Transpositions, unit.partition,
                                [&](const SwapProtocol& proto) {
                                    for (const auto& cat : cats) {
                                        const auto before =
                                            composite_initial(hot, cold, cat);
                                        const auto after = apply_protocol(before, proto);
                                        const auto [qh, qc] = heats(before, after);
                                        const auto [sh, sc] =
                                            swap_sum_heats(before, proto);
                                        const double err = std::max(std::abs(qh - sh),
                                                                    std::abs(qc - sc));
                                        absorb(s, err, where, err > kSwapSumTol);
                                    }
                                });
            return s;
        });
    return family_from("swap-sum-heats", fold(stats));
}

}  // namespace

std::vector<CheckFamilyResult> run_check_suite(CheckGrid grid, bool parallel) {
    std::vector<CheckFamilyResult> results;
    const auto laws = laws_sweep(grid, parallel);
    results.push_back(family_from("first-law", laws.first_law));
    results.push_back(family_from("clausius", laws.clausius));
    results.push_back(family_from("carnot", laws.carnot));
    results.push_back(formula_vs_simulation(grid, parallel));
    results.push_back(regime_sign(grid, parallel));
    results.push_back(f2_identity(grid, parallel));
    results.push_back(swap_sum_family(grid, parallel));
    return results;
}

bool all_passed(const std::vector<CheckFamilyResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckFamilyResult& r) { return r.passed; });
}

}  // namespace qotto
