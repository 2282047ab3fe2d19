// sweep.hpp — Parameter sweeps and regime maps over the d-Otto engine, with
// deterministic CSV serialization. omega_h == 1 is the energy unit, so points
// are specified by (d, omega_c/omega_h, beta_c/beta_h, beta_h omega_h).

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qotto {

struct SweepSpec {
    enum class Variable { D, OmegaRatio, BetaRatio, BetaHOmegaH };
    Variable variable = Variable::D;

    // Range for the swept scalar variable: steps points from `from` to `to`
    // inclusive (steps == 1 pins the point at `from`). Variable::D uses
    // d_values instead.
    double from = 0.0;
    double to = 0.0;
    int steps = 0;
    std::vector<int> d_values;

    // Fixed values of whichever parameters are not swept.
    int d = 1;
    double omega_ratio = 0.5;
    double beta_ratio = 3.0;
    double beta_h_omega_h = 0.3;
};

struct SweepRow {
    int d = 1;
    double omega_h = 1.0;
    double omega_c = 0.0;
    double beta_h = 0.0;
    double beta_c = 0.0;
    double Q_h = 0.0;
    double Q_c = 0.0;
    double W = 0.0;
    std::optional<double> eta;
    double eta_carnot = 0.0;
    bool engine_mode = false;
};

// One d-Otto cycle (max-work fixed point) per sweep point; engine_mode is the
// closed-form regime verdict. Rows come back in sweep order regardless of
// parallel scheduling.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, bool parallel = true);

// Header: d,omega_h,omega_c,beta_h,beta_c,Q_h,Q_c,W,eta,eta_carnot,engine_mode
// Doubles as %.17g, eta empty when undefined, \n line endings.
std::string sweep_csv(const std::vector<SweepRow>& rows);

struct RegimeMapSpec {
    int resolution = 50;         // grid points per axis, >= 2
    int d_max = 3;
    double beta_ratio_cap = 10.0;
};

struct RegimeCell {
    double omega_ratio = 0.0;
    double beta_ratio = 1.0;
    std::vector<int> engine_dims;  // all d in [1, d_max] with engine_regime true
};

// omega_c/omega_h spans (0, d_max], beta_c/beta_h spans [1, cap]; cells in
// omega-major order.
std::vector<RegimeCell> regime_map(const RegimeMapSpec& spec, bool parallel = true);

// Header: omega_ratio,beta_ratio,engine_dims with engine_dims ';'-joined.
std::string regime_map_csv(const std::vector<RegimeCell>& cells);

// Shortest-width %.17g rendering shared by the CSV emitters.
std::string format_g17(double v);

}  // namespace qotto
