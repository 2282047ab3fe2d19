// state.cpp — construction and validation of thermal qubits, catalysts, and
// composite product states.

#include "qotto/state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qotto {

namespace {

void require_finite_nonnegative(double value, const char* fn, const char* name) {
    if (!std::isfinite(value)) {
        throw std::invalid_argument(std::string(fn) + ": " + name + " must be finite");
    }
    if (value < 0.0) {
        throw std::invalid_argument(std::string(fn) + ": " + name + " must be nonnegative");
    }
}

}  // namespace

ThermalQubit thermal_qubit(double beta, double omega) {
    require_finite_nonnegative(beta, "thermal_qubit", "beta");
    require_finite_nonnegative(omega, "thermal_qubit", "omega");
    const double boltzmann = std::exp(-beta * omega);
    const double z = 1.0 + boltzmann;
    ThermalQubit q;
    q.beta = beta;
    q.omega = omega;
    q.p_ground = 1.0 / z;
    q.p_excited = boltzmann / z;
    return q;
}

Catalyst::Catalyst(int dim_, std::vector<double> probs_) : dim(dim_), probs(std::move(probs_)) {
    if (dim < 1) {
        throw std::invalid_argument("Catalyst: dim must be >= 1");
    }
    if (static_cast<int>(probs.size()) != dim) {
        throw std::invalid_argument("Catalyst: probs length must equal dim");
    }
    double sum = 0.0;
    for (double p : probs) {
        if (!std::isfinite(p) || p < 0.0) {
            throw std::invalid_argument("Catalyst: entries must be finite and nonnegative");
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        throw std::invalid_argument("Catalyst: probabilities must sum to 1 within 1e-12");
    }
}

Catalyst Catalyst::uniform(int dim) {
    if (dim < 1) {
        throw std::invalid_argument("Catalyst::uniform: dim must be >= 1");
    }
    return Catalyst(dim, std::vector<double>(dim, 1.0 / dim));
}

Catalyst Catalyst::point(int dim, int k) {
    if (dim < 1 || k < 0 || k >= dim) {
        throw std::invalid_argument("Catalyst::point: index out of range");
    }
    std::vector<double> p(dim, 0.0);
    p[k] = 1.0;
    return Catalyst(dim, std::move(p));
}

CompositeState::CompositeState(int d_, double omega_h_, double omega_c_,
                               std::vector<double> probs_)
    : d(d_), omega_h(omega_h_), omega_c(omega_c_), probs(std::move(probs_)) {
    if (d < 1) {
        throw std::invalid_argument("CompositeState: d must be >= 1");
    }
    require_finite_nonnegative(omega_h, "CompositeState", "omega_h");
    require_finite_nonnegative(omega_c, "CompositeState", "omega_c");
    if (static_cast<int>(probs.size()) != 4 * d) {
        throw std::invalid_argument("CompositeState: probs length must equal 4d");
    }
    double sum = 0.0;
    for (double p : probs) {
        if (!std::isfinite(p) || p < 0.0) {
            throw std::invalid_argument("CompositeState: entries must be finite and nonnegative");
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        throw std::invalid_argument("CompositeState: probabilities must sum to 1 within 1e-12");
    }
}

CompositeState composite_initial(const ThermalQubit& hot, const ThermalQubit& cold,
                                 const Catalyst& cat) {
    std::vector<double> probs(static_cast<std::size_t>(4 * cat.dim));
    CompositeState state;
    state.d = cat.dim;
    state.omega_h = hot.omega;
    state.omega_c = cold.omega;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const double pij = hot.population(i) * cold.population(j);
            for (int k = 0; k < cat.dim; ++k) {
                probs[static_cast<std::size_t>((2 * i + j) * cat.dim + k)] = pij * cat.probs[k];
            }
        }
    }
    state.probs = std::move(probs);
    return state;
}

std::vector<double> catalyst_marginal(const CompositeState& state) {
    std::vector<double> marginal(static_cast<std::size_t>(state.d), 0.0);
    for (int block = 0; block < 4; ++block) {
        const double* base = state.probs.data() + static_cast<std::ptrdiff_t>(block) * state.d;
        for (int k = 0; k < state.d; ++k) {
            marginal[static_cast<std::size_t>(k)] += base[k];
        }
    }
    return marginal;
}

}  // namespace qotto
