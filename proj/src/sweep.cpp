// sweep.cpp

#include "qotto/sweep.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "qotto/protocol.hpp"
#include "qotto/state.hpp"
#include "qotto/thermo.hpp"

namespace qotto {

namespace {

struct SweepPoint {
    int d;
    double omega_ratio;
    double beta_ratio;
    double beta_h_omega_h;
};

void require_positive(const char* name, double v) {
    if (!(v > 0.0)) {
        throw std::invalid_argument(std::string("run_sweep: ") + name +
                                    " must be positive");
    }
}

std::vector<SweepPoint> sweep_points(const SweepSpec& spec) {
    require_positive("omega_ratio", spec.omega_ratio);
    require_positive("beta_h_omega_h", spec.beta_h_omega_h);
    if (spec.variable != SweepSpec::Variable::BetaRatio && !(spec.beta_ratio > 1.0)) {
        throw std::invalid_argument("run_sweep: beta_ratio must exceed 1");
    }
    if (spec.variable != SweepSpec::Variable::D && spec.d < 1) {
        throw std::invalid_argument("run_sweep: d must be >= 1");
    }

    std::vector<SweepPoint> points;
    if (spec.variable == SweepSpec::Variable::D) {
        if (spec.d_values.empty()) {
            throw std::invalid_argument("run_sweep: d sweep needs a non-empty d list");
        }
        for (int d : spec.d_values) {
            if (d < 1) throw std::invalid_argument("run_sweep: swept d must be >= 1");
            points.push_back(
                {d, spec.omega_ratio, spec.beta_ratio, spec.beta_h_omega_h});
        }
        return points;
    }

    if (spec.steps < 1) {
        throw std::invalid_argument("run_sweep: steps must be >= 1");
    }
    for (int i = 0; i < spec.steps; ++i) {
        const double t = spec.steps == 1
                             ? 0.0
                             : static_cast<double>(i) / (spec.steps - 1);
        const double v = spec.from + (spec.to - spec.from) * t;
        SweepPoint pt{spec.d, spec.omega_ratio, spec.beta_ratio, spec.beta_h_omega_h};
        switch (spec.variable) {
            case SweepSpec::Variable::OmegaRatio:
                pt.omega_ratio = v;
                break;
            case SweepSpec::Variable::BetaRatio:
                pt.beta_ratio = v;
                break;
            case SweepSpec::Variable::BetaHOmegaH:
                pt.beta_h_omega_h = v;
                break;
            case SweepSpec::Variable::D:
                break;  // unreachable
        }
        if (!(pt.omega_ratio > 0.0) || !(pt.beta_h_omega_h > 0.0) ||
            !(pt.beta_ratio > 1.0)) {
            throw std::invalid_argument(
                "run_sweep: swept range leaves the valid parameter domain");
        }
        points.push_back(pt);
    }
    return points;
}

SweepRow evaluate_point(const SweepPoint& pt) {
    SweepRow row;
    row.d = pt.d;
    row.omega_h = 1.0;
    row.omega_c = pt.omega_ratio;
    row.beta_h = pt.beta_h_omega_h;
    row.beta_c = pt.beta_ratio * row.beta_h;
    const auto hot = thermal_qubit(row.beta_h, row.omega_h);
    const auto cold = thermal_qubit(row.beta_c, row.omega_c);
    const auto r =
        run_cycle(d_otto_protocol(pt.d), hot, cold, FixedPointChoice::MaxWork);
    row.Q_h = r.Q_h;
    row.Q_c = r.Q_c;
    row.W = r.W;
    row.eta = r.eta;
    row.eta_carnot = r.eta_carnot;
    row.engine_mode = engine_regime(pt.d, hot, cold);
    return row;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec, bool parallel) {
    const auto points = sweep_points(spec);
    const int n = static_cast<int>(points.size());
    std::vector<SweepRow> rows(n);
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < n; ++i) rows[i] = evaluate_point(points[i]);
    } else {
        for (int i = 0; i < n; ++i) rows[i] = evaluate_point(points[i]);
    }
    return rows;
}

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    os << "d,omega_h,omega_c,beta_h,beta_c,Q_h,Q_c,W,eta,eta_carnot,engine_mode\n";
    for (const auto& row : rows) {
        os << row.d << ',' << format_g17(row.omega_h) << ',' << format_g17(row.omega_c)
           << ',' << format_g17(row.beta_h) << ',' << format_g17(row.beta_c) << ','
           << format_g17(row.Q_h) << ',' << format_g17(row.Q_c) << ','
           << format_g17(row.W) << ',';
        if (row.eta) os << format_g17(*row.eta);
        os << ',' << format_g17(row.eta_carnot) << ',' << (row.engine_mode ? 1 : 0)
           << '\n';
    }
    return os.str();
}

std::vector<RegimeCell> regime_map(const RegimeMapSpec& spec, bool parallel) {
    if (spec.resolution < 2) {
        throw std::invalid_argument("regime_map: resolution must be >= 2");
    }
    if (spec.d_max < 1) {
        throw std::invalid_argument("regime_map: d_max must be >= 1");
    }
    if (!(spec.beta_ratio_cap >= 1.0)) {
        throw std::invalid_argument("regime_map: beta_ratio_cap must be >= 1");
    }
    const int n = spec.resolution;
    std::vector<RegimeCell> cells(static_cast<size_t>(n) * n);
    const auto fill_cell = [&](int idx) {
        const int i = idx / n;  // omega-major order
        const int j = idx % n;
        RegimeCell cell;
        cell.omega_ratio = spec.d_max * static_cast<double>(i + 1) / n;
        cell.beta_ratio =
            1.0 + (spec.beta_ratio_cap - 1.0) * static_cast<double>(j) / (n - 1);
        const auto hot = thermal_qubit(1.0, 1.0);
        const auto cold = thermal_qubit(cell.beta_ratio, cell.omega_ratio);
        for (int d = 1; d <= spec.d_max; ++d) {
            if (engine_regime(d, hot, cold)) cell.engine_dims.push_back(d);
        }
        cells[idx] = std::move(cell);
    };
    const int total = n * n;
    if (parallel) {
#pragma omp parallel for schedule(static)
        for (int idx = 0; idx < total; ++idx) fill_cell(idx);
    } else {
        for (int idx = 0; idx < total; ++idx) fill_cell(idx);
    }
    return cells;
}

std::string regime_map_csv(const std::vector<RegimeCell>& cells) {
    std::ostringstream os;
    os << "omega_ratio,beta_ratio,engine_dims\n";
    for (const auto& cell : cells) {
        os << format_g17(cell.omega_ratio) << ',' << format_g17(cell.beta_ratio) << ',';
        for (size_t i = 0; i < cell.engine_dims.size(); ++i) {
            if (i) os << ';';
            os << cell.engine_dims[i];
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace qotto
