// qotto_cli.cpp — experiment harness: single cycles, sweeps, regime maps,
// protocol search, and the invariant suite. JSON/CSV outputs are
// deterministic for identical flags, including under --threads > 1.

#include <omp.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qotto/catalysis.hpp"
#include "qotto/check_suite.hpp"
#include "qotto/protocol.hpp"
#include "qotto/search.hpp"
#include "qotto/state.hpp"
#include "qotto/svg.hpp"
#include "qotto/sweep.hpp"
#include "qotto/thermo.hpp"

namespace {

using nlohmann::ordered_json;

ordered_json cycle_record(const qotto::CycleResult& r, const qotto::LawsReport& laws) {
    ordered_json j;
    j["Q_h"] = r.Q_h;
    j["Q_c"] = r.Q_c;
    j["W"] = r.W;
    j["eta"] = r.eta ? ordered_json(*r.eta) : ordered_json(nullptr);
    j["eta_carnot"] = r.eta_carnot;
    j["delta_p"] = r.delta_p ? ordered_json(*r.delta_p) : ordered_json(nullptr);
    j["catalyst"] = r.catalyst;
    ordered_json res;
    res["first_law"] = laws.first_law_residual;
    res["clausius"] = laws.clausius;
    res["carnot_margin"] =
        laws.carnot_margin ? ordered_json(*laws.carnot_margin) : ordered_json(nullptr);
    j["residuals"] = res;
    return j;
}

std::vector<std::string> protocol_lines(const qotto::SwapProtocol& proto) {
    std::vector<std::string> lines;
    std::istringstream is(qotto::protocol_to_text(proto));
    std::string line;
    while (std::getline(is, line)) lines.push_back(line);
    return lines;
}

int emit(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    out << content;
    out.flush();
    if (!out) {
        std::cerr << "error: cannot write " << path << '\n';
        return 2;
    }
    return 0;
}

struct CycleArgs {
    int d = 1;
    double omega_c = 0.5;
    double beta_h = 0.3;
    double beta_c = 3.0;
    std::string protocol = "d-otto";
    std::string fixed_point = "max-work";
};

int cmd_cycle(const CycleArgs& a) {
    const auto hot = qotto::thermal_qubit(a.beta_h, 1.0);
    const auto cold = qotto::thermal_qubit(a.beta_c, a.omega_c);
    const auto proto = a.protocol == "d-otto"
                           ? qotto::d_otto_protocol(a.d)
                           : qotto::load_protocol_file(a.protocol, a.d);
    const auto choice = a.fixed_point == "max-eff" ? qotto::FixedPointChoice::MaxEfficiency
                                                   : qotto::FixedPointChoice::MaxWork;
    const auto result = qotto::run_cycle(proto, hot, cold, choice);
    const auto laws = qotto::laws_check(result, hot, cold);
    std::cout << cycle_record(result, laws).dump(2) << '\n';
    return 0;
}

struct SweepArgs {
    std::string var;
    double from = 0.0;
    double to = 0.0;
    int steps = 0;
    std::vector<int> d_list;
    int d = 1;
    double omega_ratio = 0.5;
    double beta_ratio = 3.0;
    double beta_h_omega_h = 0.3;
    std::string out = "-";
    std::string svg;
    bool serial = false;
};

int cmd_sweep(const SweepArgs& a) {
    qotto::SweepSpec spec;
    if (a.var == "d") {
        spec.variable = qotto::SweepSpec::Variable::D;
        if (!a.d_list.empty()) {
            spec.d_values = a.d_list;
        } else if (a.from >= 1 && a.to >= a.from) {
            for (int d = static_cast<int>(a.from); d <= static_cast<int>(a.to); ++d) {
                spec.d_values.push_back(d);
            }
        } else {
            std::cerr << "error: --var d needs --d-list or an integer --from/--to range\n";
            return 1;
        }
    } else if (a.var == "omega-ratio") {
        spec.variable = qotto::SweepSpec::Variable::OmegaRatio;
    } else if (a.var == "beta-ratio") {
        spec.variable = qotto::SweepSpec::Variable::BetaRatio;
    } else if (a.var == "beta-h-omega-h") {
        spec.variable = qotto::SweepSpec::Variable::BetaHOmegaH;
    } else {
        std::cerr << "error: unknown sweep variable '" << a.var << "'\n";
        return 1;
    }
    if (spec.variable != qotto::SweepSpec::Variable::D) {
        if (a.steps < 1) {
            std::cerr << "error: scalar sweeps need --steps >= 1\n";
            return 1;
        }
        spec.from = a.from;
        spec.to = a.to;
        spec.steps = a.steps;
    }
    spec.d = a.d;
    spec.omega_ratio = a.omega_ratio;
    spec.beta_ratio = a.beta_ratio;
    spec.beta_h_omega_h = a.beta_h_omega_h;

    const auto rows = qotto::run_sweep(spec, !a.serial);
    const int rc = emit(a.out, qotto::sweep_csv(rows));
    if (rc != 0) return rc;
    if (!a.svg.empty()) {
        qotto::svg::Series series;
        for (const auto& row : rows) {
            if (!row.eta) continue;
            series.x.push_back(row.W);
            series.y.push_back(*row.eta);
        }
        return emit(a.svg, qotto::svg::plot(series, "W", "eta"));
    }
    return 0;
}

struct RegimeArgs {
    int resolution = 50;
    int d_max = 3;
    double beta_cap = 10.0;
    std::string out = "-";
    bool serial = false;
};

int cmd_regime_map(const RegimeArgs& a) {
    qotto::RegimeMapSpec spec;
    spec.resolution = a.resolution;
    spec.d_max = a.d_max;
    spec.beta_ratio_cap = a.beta_cap;
    const auto cells = qotto::regime_map(spec, !a.serial);
    return emit(a.out, qotto::regime_map_csv(cells));
}

struct SearchArgs {
    int d = 1;
    std::string mode = "transpositions";
    std::string objective = "efficiency";
    int top = 10;
    double min_work = 1e-12;
    double omega_c = 0.5;
    double beta_h = 0.3;
    double beta_c = 3.0;
    bool force = false;
    bool serial = false;
};

int cmd_search(const SearchArgs& a) {
    qotto::SearchTask task;
    task.d = a.d;
    task.mode = a.mode == "permutations" ? qotto::EnumerationMode::Permutations
                                         : qotto::EnumerationMode::Transpositions;
    task.objective = a.objective == "work" ? qotto::SearchObjective::MaxWork
                                           : qotto::SearchObjective::MaxEfficiency;
    task.min_work = a.min_work;
    task.hot = qotto::thermal_qubit(a.beta_h, 1.0);
    task.cold = qotto::thermal_qubit(a.beta_c, a.omega_c);
    task.max_results = a.top;
    task.override_cap = a.force;
    task.parallel = !a.serial;
    if (!qotto::enumeration_within_cap(task.d, task.mode) && !task.override_cap) {
        std::cerr << "error: d=" << task.d << " exceeds the " << a.mode
                  << " enumeration cap; pass --force to scan anyway\n";
        return 1;
    }
    const auto result = qotto::optimize(task);

    ordered_json report;
    report["d"] = a.d;
    report["mode"] = a.mode;
    report["objective"] = a.objective;
    report["protocols_scanned"] = result.protocols_scanned;
    report["engines_found"] = result.engines_found;
    ordered_json entries = ordered_json::array();
    for (const auto& entry : result.entries) {
        ordered_json rec;
        rec["protocol"] = protocol_lines(entry.protocol);
        const auto laws = qotto::laws_check(entry.result, task.hot, task.cold);
        rec.update(cycle_record(entry.result, laws));
        entries.push_back(std::move(rec));
    }
    report["results"] = std::move(entries);
    std::cout << report.dump(2) << '\n';
    return 0;
}

struct CheckArgs {
    std::string grid = "full";
    bool serial = false;
};

int cmd_check(const CheckArgs& a) {
    const auto grid =
        a.grid == "small" ? qotto::CheckGrid::Small : qotto::CheckGrid::Full;
    const auto results = qotto::run_check_suite(grid, !a.serial);
    for (const auto& r : results) {
        std::printf("[%s] %-22s cases=%-7lld worst=%.3g\n", r.passed ? "PASS" : "FAIL",
                    r.name.c_str(), r.cases, r.worst);
        if (!r.passed && !r.detail.empty()) {
            std::printf("       worst at %s\n", r.detail.c_str());
        }
    }
    return qotto::all_passed(results) ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-stroke catalytic Otto engine toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "Read options from a key=value file");
    int threads = 0;
    app.add_option("--threads", threads, "OpenMP thread count (0 keeps the default)");

    CycleArgs cycle_args;
    auto* cycle = app.add_subcommand("cycle", "Run one cycle, print a JSON record");
    cycle->add_option("--d", cycle_args.d)->check(CLI::PositiveNumber);
    cycle->add_option("--omega-c", cycle_args.omega_c)->check(CLI::PositiveNumber);
    cycle->add_option("--beta-h", cycle_args.beta_h)->check(CLI::NonNegativeNumber);
    cycle->add_option("--beta-c", cycle_args.beta_c)->check(CLI::PositiveNumber);
    cycle->add_option("--protocol", cycle_args.protocol,
                      "\"d-otto\" or a protocol file path");
    cycle->add_option("--fixed-point", cycle_args.fixed_point)
        ->check(CLI::IsMember({"max-work", "max-eff"}));

    SweepArgs sweep_args;
    auto* sweep = app.add_subcommand("sweep", "Sweep one parameter, write CSV");
    sweep->add_option("--var", sweep_args.var,
                      "d | omega-ratio | beta-ratio | beta-h-omega-h")
        ->required();
    sweep->add_option("--from", sweep_args.from);
    sweep->add_option("--to", sweep_args.to);
    sweep->add_option("--steps", sweep_args.steps);
    sweep->add_option("--d-list", sweep_args.d_list)->delimiter(',');
    sweep->add_option("--d", sweep_args.d)->check(CLI::PositiveNumber);
    sweep->add_option("--omega-ratio", sweep_args.omega_ratio)
        ->check(CLI::PositiveNumber);
    sweep->add_option("--beta-ratio", sweep_args.beta_ratio)->check(CLI::PositiveNumber);
    sweep->add_option("--beta-h-omega-h", sweep_args.beta_h_omega_h)
        ->check(CLI::PositiveNumber);
    sweep->add_option("--out", sweep_args.out, "CSV path, '-' for stdout");
    sweep->add_option("--svg", sweep_args.svg, "also write a W-vs-eta SVG plot");
    sweep->add_flag("--serial", sweep_args.serial, "disable the parallel scan");

    RegimeArgs regime_args;
    auto* regime = app.add_subcommand("regime-map", "Engine-regime grid, write CSV");
    regime->add_option("--resolution", regime_args.resolution)
        ->check(CLI::Range(2, 100000));
    regime->add_option("--d-max", regime_args.d_max)->check(CLI::PositiveNumber);
    regime->add_option("--beta-cap", regime_args.beta_cap)->check(CLI::PositiveNumber);
    regime->add_option("--out", regime_args.out, "CSV path, '-' for stdout");
    regime->add_flag("--serial", regime_args.serial, "disable the parallel scan");

    SearchArgs search_args;
    auto* search = app.add_subcommand("search", "Exhaustive protocol search, JSON report");
    search->add_option("--d", search_args.d)->check(CLI::PositiveNumber);
    search->add_option("--mode", search_args.mode)
        ->check(CLI::IsMember({"transpositions", "permutations"}));
    search->add_option("--objective", search_args.objective)
        ->check(CLI::IsMember({"efficiency", "work"}));
    search->add_option("--top", search_args.top)->check(CLI::NonNegativeNumber);
    search->add_option("--min-work", search_args.min_work);
    search->add_option("--omega-c", search_args.omega_c)->check(CLI::PositiveNumber);
    search->add_option("--beta-h", search_args.beta_h)->check(CLI::NonNegativeNumber);
    search->add_option("--beta-c", search_args.beta_c)->check(CLI::PositiveNumber);
    search->add_flag("--force", search_args.force, "scan past the dimension cap");
    search->add_flag("--serial", search_args.serial, "disable the parallel scan");

    CheckArgs check_args;
    auto* check = app.add_subcommand("check", "Run the invariant suite");
    check->add_option("--grid", check_args.grid)->check(CLI::IsMember({"small", "full"}));
    check->add_flag("--serial", check_args.serial, "disable the parallel sweep");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }
    if (threads > 0) omp_set_num_threads(threads);

    try {
        if (*cycle) return cmd_cycle(cycle_args);
        if (*sweep) return cmd_sweep(sweep_args);
        if (*regime) return cmd_regime_map(regime_args);
        if (*search) return cmd_search(search_args);
        if (*check) return cmd_check(check_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}
