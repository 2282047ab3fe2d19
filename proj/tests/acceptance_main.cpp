// acceptance_main.cpp — release gate for the engine library: nine criteria,
// one [PASS]/[FAIL] line each, exit code = number of failures.  Each criterion
// binds a closed-form claim, an exhaustive scan, or an end-to-end CLI contract
// to explicit tolerances.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "qotto/catalysis.hpp"
#include "qotto/protocol.hpp"
#include "qotto/search.hpp"
#include "qotto/state.hpp"
#include "qotto/thermo.hpp"

using namespace qotto;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    std::vector<std::string> notes;
};

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list args;
    va_start(args, f);
    std::vsnprintf(buf, sizeof buf, f, args);
    va_end(args);
    return buf;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int flat(int i, int j, int k, int d) { return (2 * i + j) * d + k; }

struct CliRun {
    int code = -1;
    std::string out;
};

CliRun run_cli(const std::string& args) {
    const std::string cmd = std::string(QOTTO_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    CliRun r;
    if (!pipe) return r;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// The shared grid: per dimension, d beta_h omega_h is capped at 4 so the
// simulated flows never sink into the double-precision cancellation floor,
// and t in [0.2, 0.8] keeps omega_c strictly inside (omega_h d / ratio, d).
template <typename Fn>
int regime_grid(int d, const Fn& visit) {
    const double bh_max = std::min(2.0, 4.0 / d);
    int points = 0;
    for (int i = 0; i < 5; ++i) {
        const double bh = 0.01 + (bh_max - 0.01) * i / 4;
        for (int j = 0; j < 5; ++j) {
            const double ratio = 1.5 + (20.0 - 1.5) * j / 4;
            for (int k = 0; k < 5; ++k) {
                const double t = 0.2 + 0.6 * k / 4;
                const auto hot = thermal_qubit(bh, 1.0);
                const double lo = 1.0 / ratio;
                const double wc = d * (lo + t * (1.0 - lo));
                const auto cold = thermal_qubit(ratio * bh, wc);
                if (!engine_regime(d, hot, cold)) continue;
                ++points;
                visit(hot, cold);
            }
        }
    }
    return points;
}

// 1. The simulated d-Otto cycle reproduces the closed form for d = 1..8.
Outcome criterion_formula_agreement() {
    const auto t0 = Clock::now();
    int points = 0;
    double worst_eta = 0.0, worst_w = 0.0;
    bool eta_defined = true;
    for (int d = 1; d <= 8; ++d) {
        const auto proto = d_otto_protocol(d);
        points += regime_grid(d, [&](const ThermalQubit& hot, const ThermalQubit& cold) {
            const auto cf = closed_form(d, hot, cold);
            const auto sim = run_cycle(proto, hot, cold, FixedPointChoice::MaxWork);
            if (!sim.eta) {
                eta_defined = false;
                return;
            }
            worst_eta = std::max(worst_eta, std::abs(*sim.eta - cf.eta_d));
            worst_w = std::max(worst_w, std::abs(sim.W - cf.W_d) / cf.W_d);
        });
    }
    const double secs = seconds_since(t0);
    Outcome o;
    o.ok = eta_defined && points >= 500 && worst_eta <= 1e-12 && worst_w <= 1e-10 &&
           secs < 5.0;
    o.detail = fmt(
        "d=1..8 over %d in-regime points: worst |eta-eta_d| %.2e (tol 1e-12), "
        "worst rel W gap %.2e (tol 1e-10), %.2f s (limit 5)",
        points, worst_eta, worst_w, secs);
    return o;
}

// 2. The d = 1 and d = 2 closed forms match their explicit specializations.
Outcome criterion_specializations() {
    double worst1 = 0.0, worst2 = 0.0;
    int n1 = 0, n2 = 0;
    n1 = regime_grid(1, [&](const ThermalQubit& hot, const ThermalQubit& cold) {
        const double a = std::exp(-hot.beta * hot.omega);
        const double b = std::exp(-cold.beta * cold.omega);
        const double w1 = (a - b) * (hot.omega - cold.omega) / ((1 + a) * (1 + b));
        const auto cf = closed_form(1, hot, cold);
        worst1 = std::max(worst1, std::abs(cf.W_d - w1) / w1);
    });
    n2 = regime_grid(2, [&](const ThermalQubit& hot, const ThermalQubit& cold) {
        const double a = std::exp(-hot.beta * hot.omega);
        const double b = std::exp(-cold.beta * cold.omega);
        const double f2 = 1 + b + 2 * a;
        const double w2 = (std::exp(-2 * hot.beta * hot.omega) - b) *
                          (2 * hot.omega - cold.omega) / ((1 + a) * (1 + b) * f2);
        const auto cf = closed_form(2, hot, cold);
        worst2 = std::max(worst2, std::abs(cf.W_d - w2) / w2);
    });
    Outcome o;
    o.ok = worst1 <= 1e-12 && worst2 <= 1e-12;
    o.detail = fmt(
        "explicit W_1 over %d points rel gap %.2e, explicit f_2 form over %d "
        "points rel gap %.2e (tol 1e-12)",
        n1, worst1, n2, worst2);
    return o;
}

// 3. sign(W_d) tracks the regime inequality and W_d crosses zero exactly on
//    both boundaries of the operating window.
Outcome criterion_regime_boundaries() {
    Outcome o;
    int sign_points = 0;
    bool signs_ok = true;
    for (int d : {1, 2, 3}) {
        for (double bh : {0.1, 0.5, 1.0}) {
            for (double wc_ratio : {0.5, 0.9, 1.1}) {
                for (double beta_ratio : {1.2, 3.0, 8.0}) {
                    const auto hot = thermal_qubit(bh, 1.0);
                    const auto cold = thermal_qubit(beta_ratio * bh, wc_ratio * d);
                    const bool regime = engine_regime(d, hot, cold);
                    const bool predicted = wc_ratio < 1.0 && beta_ratio * wc_ratio > 1.0;
                    const double w = closed_form(d, hot, cold).W_d;
                    ++sign_points;
                    if (regime != predicted) signs_ok = false;
                    if (regime ? w <= 0.0 : w > 0.0) signs_ok = false;
                }
            }
        }
    }

    // Frequency boundary omega_c = d omega_h: exact zero, sign flip at 1e-8.
    double worst_boundary = 0.0;
    bool flips_ok = true;
    for (int d : {1, 2, 3}) {
        const double bh = 0.3;
        const auto hot = thermal_qubit(bh, 1.0);
        const double bc = 2.0 * d * bh / d;  // beta_c omega_c = 2 d beta_h at wc = d
        const auto at = [&](double wc) {
            return closed_form(d, hot, thermal_qubit(bc, wc)).W_d;
        };
        worst_boundary = std::max(worst_boundary, std::abs(at(d)));
        if (!(at(d * (1.0 - 1e-8)) > 0.0 && at(d * (1.0 + 1e-8)) < 0.0)) flips_ok = false;
    }

    // Thermal boundary beta_c omega_c = d beta_h omega_h, exactly representable
    // points plus one generic quotient-rounded point.
    struct BoundaryPoint {
        double bh, wh, bc, wc;
        int d;
    };
    const std::array<BoundaryPoint, 3> beta_points = {{
        {0.25, 1.0, 2.5, 0.4, 4},
        {0.5, 1.0, 3.0, 0.5, 3},
        {0.3, 1.0, 2 * 0.3 / 0.7, 0.7, 2},
    }};
    for (const auto& p : beta_points) {
        const auto hot = thermal_qubit(p.bh, p.wh);
        worst_boundary = std::max(
            std::abs(closed_form(p.d, hot, thermal_qubit(p.bc, p.wc)).W_d), worst_boundary);
        const double above = closed_form(p.d, hot, thermal_qubit(p.bc * (1 + 1e-8), p.wc)).W_d;
        const double below = closed_form(p.d, hot, thermal_qubit(p.bc * (1 - 1e-8), p.wc)).W_d;
        if (!(above > 0.0 && below < 0.0)) flips_ok = false;
    }

    o.ok = signs_ok && flips_ok && worst_boundary <= 1e-10;
    o.detail = fmt(
        "sign agreement on %d points, |W_d| at 6 boundary points %.2e (tol "
        "1e-10), sign flips at margin 1e-8 %s",
        sign_points, worst_boundary, flips_ok ? "present" : "MISSING");
    return o;
}

// 4. First Law, Clausius, and the Carnot bound over the full transposition
//    enumeration at d = 1, 2, every fixed-point vertex, 20 parameter sets.
Outcome criterion_laws() {
    const auto t0 = Clock::now();
    long long cases = 0, engines = 0, protocols = 0;
    double worst_first = 0.0, worst_clausius = -1e300;
    bool carnot_ok = true;
    for (int d : {1, 2}) {
        enumerate_protocols(d, EnumerationMode::Transpositions, [&](const SwapProtocol& proto) {
            ++protocols;
            for (double bh : {0.1, 0.3, 0.7, 1.2, 2.0}) {
                for (double ratio : {1.5, 4.0}) {
                    for (double wc : {0.45, 1.6}) {
                        const auto hot = thermal_qubit(bh, 1.0);
                        const auto cold = thermal_qubit(ratio * bh, wc);
                        const auto fps = fixed_points(cycle_map(proto, hot, cold));
                        for (const auto& vertex : fps.vertices) {
                            const auto res =
                                run_cycle(proto, hot, cold, Catalyst(d, vertex));
                            const auto law = laws_check(res, hot, cold);
                            ++cases;
                            worst_first = std::max(worst_first, law.first_law_residual);
                            worst_clausius = std::max(worst_clausius, law.clausius);
                            if (res.W > 1e-12) {
                                ++engines;
                                if (!res.eta || !(*res.eta < res.eta_carnot))
                                    carnot_ok = false;
                            }
                        }
                    }
                }
            }
        });
    }
    const double secs = seconds_since(t0);
    Outcome o;
    o.ok = protocols == 9 + 763 && worst_first <= 1e-12 && worst_clausius <= 1e-9 &&
           carnot_ok && secs < 60.0;
    o.detail = fmt(
        "%lld protocols x 20 parameter sets, %lld vertex cases (%lld engines): "
        "first law %.2e (tol 1e-12), Clausius %.2e (tol 1e-9), eta < eta_Carnot "
        "%s, %.2f s (limit 60)",
        protocols, cases, engines, worst_first, worst_clausius,
        carnot_ok ? "everywhere" : "VIOLATED", secs);
    return o;
}

// 5. Optimality at desk scale: the plain Otto swap is the unique d = 1
//    efficiency maximizer, d = 2 tops out at the catalytic efficiency, and
//    single-external-swap processes are exactly workless at every fixed point
//    (their lone swap is pinned to zero flow by cyclicity, so the class offers
//    nothing beyond the plain Otto point).
Outcome criterion_optimality() {
    Outcome o;
    const auto hot = thermal_qubit(0.3, 1.0);
    const auto cold = thermal_qubit(3.0, 0.5);

    // Population inversion must hold for the uniqueness claim to be in scope.
    const bool inversion =
        std::exp(-hot.beta * hot.omega) > std::exp(-cold.beta * cold.omega) &&
        hot.omega > cold.omega;

    SearchTask perm_task;
    perm_task.d = 1;
    perm_task.mode = EnumerationMode::Permutations;
    perm_task.objective = SearchObjective::MaxEfficiency;
    perm_task.hot = hot;
    perm_task.cold = cold;
    perm_task.max_results = 23;
    const auto perm = optimize(perm_task);
    const double eta1 = 1.0 - cold.omega / hot.omega;
    bool unique_max = !perm.entries.empty() &&
                      perm.entries[0].protocol.kind == ProtocolKind::Permutation &&
                      perm.entries[0].protocol.image == std::vector<int>{0, 2, 1, 3} &&
                      perm.entries[0].result.eta &&
                      std::abs(*perm.entries[0].result.eta - eta1) <= 1e-12;
    int at_max = 0;
    for (const auto& e : perm.entries) {
        if (e.result.eta && *e.result.eta >= eta1 - 1e-12) ++at_max;
    }
    unique_max = unique_max && at_max == 1;

    SearchTask trans_task = perm_task;
    trans_task.d = 2;
    trans_task.mode = EnumerationMode::Transpositions;
    const auto trans = optimize(trans_task);
    const double eta2 = 1.0 - cold.omega / (2.0 * hot.omega);
    const bool eta2_max = !trans.entries.empty() && trans.entries[0].result.eta &&
                          std::abs(*trans.entries[0].result.eta - eta2) <= 1e-12;

    // Every protocol consisting of exactly one external swap: zero heat and
    // zero work at every fixed-point vertex, for several bath pairs.
    double worst_single = 0.0;
    int single_cases = 0;
    const std::array<std::pair<ThermalQubit, ThermalQubit>, 3> baths = {{
        {hot, cold},
        {thermal_qubit(0.7, 1.3), thermal_qubit(2.1, 0.8)},
        {thermal_qubit(0.05, 1.0), thermal_qubit(0.4, 0.9)},
    }};
    for (const auto& [h, c] : baths) {
        for (int a = 0; a < 4; ++a) {
            for (int b = 0; b < 4; ++b) {
                const auto proto = SwapProtocol::transposition_set(
                    2, {Transposition{flat(a >> 1, a & 1, 0, 2), flat(b >> 1, b & 1, 1, 2)}});
                const auto fps = fixed_points(cycle_map(proto, h, c));
                for (const auto& vertex : fps.vertices) {
                    const auto res = run_cycle(proto, h, c, Catalyst(2, vertex));
                    worst_single = std::max({worst_single, std::abs(res.W),
                                             std::abs(res.Q_h), std::abs(res.Q_c)});
                    ++single_cases;
                }
            }
        }
    }

    // The one-external-swap census class cannot beat the plain Otto point.
    const auto census = external_swap_census(2, hot, cold);
    const auto w1 = closed_form(1, hot, cold).W_d;
    const bool class1_trivial = census.size() == 5 && census[1].engines > 0 &&
                                census[1].best_work <= w1 + 1e-12 &&
                                census[1].best_eta &&
                                *census[1].best_eta <= eta1 + 1e-12;

    o.ok = inversion && unique_max && eta2_max && worst_single <= 1e-12 && class1_trivial;
    o.detail = fmt(
        "d=1 permutations: unique eta maximizer %s (eta_1 = %.2f); d=2 max eta "
        "= eta_2 %s; %d single-external-swap vertex cases max |W|,|Q| %.2e "
        "(tol 1e-12); class-1 census capped at the plain Otto point %s",
        unique_max ? "found" : "MISSING", eta1, eta2_max ? "confirmed" : "WRONG",
        single_cases, worst_single, class1_trivial ? "yes" : "NO");
    o.notes.push_back(
        "three-external-swap relays tie the d=2 efficiency maximum with more "
        "work than the two-swap wiring; the zero-work argument applies only to "
        "the single-external-swap class");
    return o;
}

// 6. Catalyst necessity: a bath pair where no d = 1 protocol is an engine but
//    the d = 2 Otto wiring is.
Outcome criterion_necessity() {
    const auto hot = thermal_qubit(0.3, 1.0);
    const auto cold = thermal_qubit(1.0, 1.4);  // omega_c > omega_h

    SearchTask task;
    task.d = 1;
    task.objective = SearchObjective::MaxWork;
    task.hot = hot;
    task.cold = cold;
    task.mode = EnumerationMode::Transpositions;
    const auto trans = optimize(task);
    task.mode = EnumerationMode::Permutations;
    const auto perm = optimize(task);

    const auto cf2 = closed_form(2, hot, cold);
    const auto sim2 = run_cycle(d_otto_protocol(2), hot, cold, FixedPointChoice::MaxWork);
    const auto dims = dimension_range(hot, cold);

    Outcome o;
    o.ok = trans.engines_found == 0 && perm.engines_found == 0 && cf2.W_d > 1e-12 &&
           sim2.W > 1e-12 && std::abs(sim2.W - cf2.W_d) <= 1e-10 * cf2.W_d &&
           dims == std::vector<int>{2, 3, 4};
    o.detail = fmt(
        "omega_c/omega_h = 1.4: d=1 engines in %lld transposition + %lld "
        "permutation protocols = 0 required; d=2 W = %.4g > 0; feasible "
        "dimensions {2,3,4} %s",
        trans.protocols_scanned, perm.protocols_scanned, cf2.W_d,
        dims == std::vector<int>{2, 3, 4} ? "confirmed" : "WRONG");
    return o;
}

// 7. Work-efficiency trade-off: a hot-regime point where the catalyst wins in
//    both work and efficiency, and a colder point where it trades work away.
Outcome criterion_tradeoff() {
    struct Found {
        bool hit = false;
        double wc = 0.0, ratio = 0.0;
    };
    const auto scan = [](double bh, bool want_w2_above) {
        Found f;
        for (double ratio : {5.0, 10.0, 20.0, 50.0, 100.0}) {
            for (int i = 1; i <= 9 && !f.hit; ++i) {
                const double wc = 0.05 + 0.1 * i;  // 0.15 .. 0.95
                const auto hot = thermal_qubit(bh, 1.0);
                const auto cold = thermal_qubit(ratio * bh, wc);
                if (!engine_regime(1, hot, cold) || !engine_regime(2, hot, cold)) continue;
                const double w1 = closed_form(1, hot, cold).W_d;
                const double w2 = closed_form(2, hot, cold).W_d;
                if (w1 <= 0 || w2 <= 0) continue;
                if (want_w2_above ? w2 > w1 : w1 > w2) {
                    // Confirm with the simulated cycles before accepting.
                    const auto s1 = run_cycle(d_otto_protocol(1), hot, cold,
                                              FixedPointChoice::MaxWork);
                    const auto s2 = run_cycle(d_otto_protocol(2), hot, cold,
                                              FixedPointChoice::MaxWork);
                    if (s1.eta && s2.eta && *s2.eta > *s1.eta &&
                        (want_w2_above ? s2.W > s1.W : s1.W > s2.W) && s1.W > 0 &&
                        s2.W > 0) {
                        f = {true, wc, ratio};
                    }
                }
            }
            if (f.hit) break;
        }
        return f;
    };

    const Found hot_point = scan(0.01, true);   // W_2 > W_1 and eta_2 > eta_1
    const Found cold_point = scan(0.3, false);  // W_1 > W_2 > 0, eta_2 > eta_1

    Outcome o;
    o.ok = hot_point.hit && cold_point.hit;
    o.detail = fmt(
        "beta_h omega_h = 0.01: W_2 > W_1 with eta_2 > eta_1 at omega_c = %.2f, "
        "beta ratio %.0f; beta_h omega_h = 0.3: W_1 > W_2 > 0 with eta_2 > "
        "eta_1 at omega_c = %.2f, beta ratio %.0f",
        hot_point.wc, hot_point.ratio, cold_point.wc, cold_point.ratio);
    return o;
}

// 8. Carnot approach: when beta_c omega_c / (beta_h omega_h) is the integer
//    d*, the d*-Otto engine idles exactly at the Carnot efficiency.
Outcome criterion_carnot_approach() {
    struct Point {
        double bh, wh, bc, wc;
        int d_star;
    };
    const std::array<Point, 2> points = {{
        {0.25, 1.0, 2.5, 0.4, 4},
        {0.5, 1.0, 3.0, 0.5, 3},
    }};
    double worst_w = 0.0, worst_eta = 0.0;
    for (const auto& p : points) {
        const auto hot = thermal_qubit(p.bh, p.wh);
        const auto cold = thermal_qubit(p.bc, p.wc);
        const auto cf = closed_form(p.d_star, hot, cold);
        const double carnot = 1.0 - p.bh / p.bc;
        worst_w = std::max(worst_w, std::abs(cf.W_d));
        worst_eta = std::max(worst_eta, std::abs(cf.eta_d - carnot));
    }
    Outcome o;
    o.ok = worst_w <= 1e-10 && worst_eta <= 1e-12;
    o.detail = fmt(
        "at integer d* = 4 and 3: |W_d*| = %.2e (tol 1e-10), |eta_d* - "
        "eta_Carnot| = %.2e (tol 1e-12)",
        worst_w, worst_eta);
    return o;
}

// 9. Byte-identical CLI outputs across repeat runs, thread counts, and the
//    serial reference path.
Outcome criterion_determinism() {
    const std::array<std::string, 3> commands = {
        "sweep --var omega-ratio --from 0.25 --to 0.95 --steps 60 --d 2 --beta-ratio 10",
        "search --d 2 --mode transpositions --objective efficiency --top 10",
        "regime-map --resolution 12 --d-max 3",
    };
    bool all_ok = true;
    int comparisons = 0;
    for (const auto& cmd : commands) {
        const auto base = run_cli(cmd);
        if (base.code != 0) all_ok = false;
        for (const std::string& variant :
             {cmd, "--threads 1 " + cmd, "--threads 4 " + cmd, cmd + " --serial"}) {
            const auto rerun = run_cli(variant);
            ++comparisons;
            if (rerun.code != 0 || rerun.out != base.out) all_ok = false;
        }
    }
    Outcome o;
    o.ok = all_ok;
    o.detail = fmt(
        "sweep, search, and regime-map reruns x {repeat, --threads 1, "
        "--threads 4, --serial}: %d byte comparisons %s",
        comparisons, all_ok ? "identical" : "DIVERGED");
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        Outcome (*run)();
    };
    const std::array<Criterion, 9> criteria = {{
        {"closed form matches simulation", criterion_formula_agreement},
        {"d=1 and d=2 specializations", criterion_specializations},
        {"regime sign and boundaries", criterion_regime_boundaries},
        {"thermodynamic laws, exhaustive", criterion_laws},
        {"optimality at desk scale", criterion_optimality},
        {"catalyst necessity", criterion_necessity},
        {"work-efficiency trade-off", criterion_tradeoff},
        {"Carnot approach at integer d*", criterion_carnot_approach},
        {"deterministic CLI output", criterion_determinism},
    }};

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        const auto outcome = criteria[i].run();
        if (!outcome.ok) ++failures;
        std::printf("[%s] criterion %zu: %s — %s\n", outcome.ok ? "PASS" : "FAIL", i + 1,
                    criteria[i].name, outcome.detail.c_str());
        for (const auto& note : outcome.notes) {
            std::printf("       note: %s\n", note.c_str());
        }
    }
    std::printf("%d/9 criteria passed\n", 9 - failures);
    return failures;
}
