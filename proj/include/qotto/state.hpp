// state.hpp — Thermal two-level systems, diagonal catalyst, and the composite
// product state with per-level energy bookkeeping.

#pragma once

#include <vector>

namespace qotto {

// Two-level system in a Gibbs state at inverse temperature `beta` with level
// splitting `omega` (Hamiltonian omega |1><1|). Populations are
// p_ground = 1/Z and p_excited = e^{-beta omega}/Z with Z = 1 + e^{-beta omega}.
struct ThermalQubit {
    double beta = 0.0;
    double omega = 0.0;
    double p_ground = 0.5;
    double p_excited = 0.5;

    double population(int level) const { return level == 0 ? p_ground : p_excited; }
};

// Builds a thermal qubit. Rejects negative or non-finite beta/omega.
// beta = 0 (infinite temperature) is allowed and gives (1/2, 1/2).
ThermalQubit thermal_qubit(double beta, double omega);

// Diagonal d-dimensional catalyst. dim = 1 represents "no catalyst".
// Entries must be nonnegative and sum to 1 within 1e-12.
struct Catalyst {
    int dim = 1;
    std::vector<double> probs{1.0};

    Catalyst() = default;
    Catalyst(int dim, std::vector<double> probs);

    static Catalyst uniform(int dim);
    // All mass on level k.
    static Catalyst point(int dim, int k);
};

// Decoded level of the composite hot (x) cold (x) catalyst system.
struct LevelIndex {
    int hot = 0;   // 0 or 1
    int cold = 0;  // 0 or 1
    int cat = 0;   // 0 .. d-1
};

// Diagonal state of the 4d-level composite system. The flat index convention
// is hot-major: l = (2*hot + cold)*d + cat, a bijection between [0, 4d) and
// {0,1} x {0,1} x {0..d-1}. Per-level energies are derived from the index:
// energy_h(l) = hot * omega_h, energy_c(l) = cold * omega_c.
struct CompositeState {
    int d = 1;
    double omega_h = 0.0;
    double omega_c = 0.0;
    std::vector<double> probs{1.0, 0.0, 0.0, 0.0};

    CompositeState() = default;
    // Validates: probs has length 4d, entries >= 0, sum within 1e-12 of 1.
    CompositeState(int d, double omega_h, double omega_c, std::vector<double> probs);

    int levels() const { return 4 * d; }

    int flat_index(int hot, int cold, int cat) const { return (2 * hot + cold) * d + cat; }
    LevelIndex decode(int flat) const {
        const int block = flat / d;
        return LevelIndex{block >> 1, block & 1, flat % d};
    }

    double energy_h(int flat) const { return ((flat / d) >> 1) * omega_h; }
    double energy_c(int flat) const { return ((flat / d) & 1) * omega_c; }
};

// Product state tau_h (x) tau_c (x) catalyst:
// probs[l(i,j,k)] = tau_h(i) * tau_c(j) * p_k.
CompositeState composite_initial(const ThermalQubit& hot, const ThermalQubit& cold,
                                 const Catalyst& cat);

// Marginal distribution over the catalyst levels: entry k sums the four
// (hot, cold) blocks at catalyst index k.
std::vector<double> catalyst_marginal(const CompositeState& state);

}  // namespace qotto
