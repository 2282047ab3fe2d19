// thermo.hpp — Heat, work, and efficiency accounting for one engine cycle,
// plus the closed-form d-Otto expressions used for cross-validation and the
// engine-regime predicates.

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qotto/catalysis.hpp"
#include "qotto/protocol.hpp"
#include "qotto/state.hpp"

namespace qotto {

// Sign convention: positive Q_k means the bath k must resupply energy after
// the work stroke, so W = Q_h + Q_c > 0 is extracted work.
struct CycleResult {
    double Q_h = 0.0;
    double Q_c = 0.0;
    double W = 0.0;
    std::optional<double> eta;      // defined only when Q_h > 0
    double eta_carnot = 0.0;
    std::optional<double> delta_p;  // single common swap flow, when one exists
    std::vector<double> catalyst;   // fixed point the cycle ran at
};

// Q_k = sum_l eps_k(l) (before[l] - after[l]).
std::pair<double, double> heats(const CompositeState& before,
                                const CompositeState& after);

// Equivalent swap-sum form for disjoint transpositions:
// Q_k = sum over swaps (eps_k(a) - eps_k(b)) (p_a - p_b).
std::pair<double, double> swap_sum_heats(const CompositeState& before,
                                         const SwapProtocol& proto);

// Common probability flow through the protocol's swaps, each oriented with the
// larger hot energy up (ties: larger cold energy, then smaller index). Defined
// when every swap carries the same flow within 1e-12; identity gives 0;
// permutation-kind protocols give nullopt.
std::optional<double> protocol_delta_p(const SwapProtocol& proto,
                                       const CompositeState& before);

enum class FixedPointChoice { MaxWork, MaxEfficiency };

// Both objectives are vertex-attained on the fixed-point polytope (linear and
// linear-fractional); MaxEfficiency skips vertices with Q_h <= 0 and falls
// back to MaxWork when none remain. Ties resolve to the lexicographically
// smallest vertex.
CycleResult run_cycle(const SwapProtocol& proto, const ThermalQubit& hot,
                      const ThermalQubit& cold, FixedPointChoice choice);

// Runs at the given catalyst state, which must pass check_cyclicity at 1e-9.
CycleResult run_cycle(const SwapProtocol& proto, const ThermalQubit& hot,
                      const ThermalQubit& cold, const Catalyst& fixed_point);

struct ClosedFormBreakdown {
    int d = 1;
    double eta_d = 0.0;
    double W_d = 0.0;
    double f_d = 0.0;
    double delta_p = 0.0;
    bool in_engine_regime = false;
};

// eta_d = 1 - omega_c / (d omega_h);
// delta_p = (e^{-d beta_h omega_h} - e^{-beta_c omega_c})
//           / [(1 + e^{-beta_h omega_h})(1 + e^{-beta_c omega_c}) f_d];
// W_d = (d omega_h - omega_c) delta_p. f_d is evaluated in a polynomial form
// algebraically equal to the usual quotient with a (1-a)^2 denominator but
// finite and cancellation-free as beta_h omega_h -> 0.
ClosedFormBreakdown closed_form(int d, const ThermalQubit& hot,
                                const ThermalQubit& cold);

// Strict double inequality beta_h/beta_c < omega_c/(d omega_h) < 1, evaluated
// in product form so exact boundary inputs land on false deterministically.
bool engine_regime(int d, const ThermalQubit& hot, const ThermalQubit& cold);

// All integer d with engine_regime true: the open interval
// (omega_c/omega_h, beta_c omega_c / (beta_h omega_h)). May be empty.
std::vector<int> dimension_range(const ThermalQubit& hot, const ThermalQubit& cold);

struct LawsReport {
    double first_law_residual = 0.0;  // |W - Q_h - Q_c|
    double clausius = 0.0;            // beta_h Q_h + beta_c Q_c, must be <= tol
    std::optional<double> carnot_margin;  // eta_carnot - eta when eta defined
    bool first_law_ok = false;
    bool clausius_ok = false;
    bool carnot_ok = false;

    bool ok() const { return first_law_ok && clausius_ok && carnot_ok; }
};

LawsReport laws_check(const CycleResult& result, const ThermalQubit& hot,
                      const ThermalQubit& cold);

}  // namespace qotto
