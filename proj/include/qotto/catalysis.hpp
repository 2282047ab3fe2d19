// catalysis.hpp — Cyclicity constraint machinery: the column-stochastic map a
// protocol induces on the catalyst marginal, its fixed-point polytope, and a
// direct cyclicity check for a given catalyst state.

#pragma once

#include <vector>

#include <Eigen/Dense>

#include "qotto/protocol.hpp"
#include "qotto/state.hpp"

namespace qotto {

// Linear action of one cycle on the catalyst marginal: column k holds the
// catalyst distribution produced from the basis catalyst e_k, so for any p
// the post-cycle marginal is matrix * p. Columns sum to 1 within 1e-12.
struct CycleMap {
    int d = 1;
    Eigen::MatrixXd matrix;
};

CycleMap cycle_map(const SwapProtocol& proto, const ThermalQubit& hot,
                   const ThermalQubit& cold);

// Vertices of the feasible polytope {p >= 0, sum p = 1, M p = p}, sorted
// lexicographically. Never empty for a column-stochastic M. `degenerate` is
// set when the nullspace of M - I has dimension above one, in which case the
// polytope is a face of the simplex rather than a single point.
struct FixedPointSet {
    std::vector<std::vector<double>> vertices;
    bool degenerate = false;
};

FixedPointSet fixed_points(const CycleMap& map);

struct CyclicityReport {
    bool cyclic = false;
    double residual = 0.0;        // max-norm marginal drift over one cycle
    double swap_form_residual = 0.0;  // per-level swap-sum form vs marginal
                                      // difference; transposition sets only
};

// residual <= tol decides `cyclic`. For disjoint-transposition protocols the
// per-level sum over swaps must reproduce the marginal difference to 1e-13;
// the observed gap is reported as swap_form_residual.
CyclicityReport check_cyclicity(const SwapProtocol& proto, const ThermalQubit& hot,
                                const ThermalQubit& cold, const Catalyst& cat,
                                double tol = 1e-9);

}  // namespace qotto
