// catalysis.cpp

#include "qotto/catalysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qotto {

namespace {

constexpr double kStochasticTol = 1e-9;
constexpr double kRankTol = 1e-12;
constexpr double kFeasibilityTol = 1e-9;
constexpr double kDedupeTol = 1e-8;

// Clamps the rounding dust, renormalizes, and rejects anything that is not a
// genuine fixed point of M on the simplex.
bool sanitize_fixed_point(const Eigen::MatrixXd& M, Eigen::VectorXd& p) {
    const int d = static_cast<int>(p.size());
    double sum = 0.0;
    for (int i = 0; i < d; ++i) {
        if (p[i] < -kFeasibilityTol) return false;
        if (p[i] < 0.0) p[i] = 0.0;
        sum += p[i];
    }
    if (std::abs(sum - 1.0) > kFeasibilityTol) return false;
    p /= sum;
    return (M * p - p).cwiseAbs().maxCoeff() <= kFeasibilityTol;
}

}  // namespace

CycleMap cycle_map(const SwapProtocol& proto, const ThermalQubit& hot,
                   const ThermalQubit& cold) {
    const auto report = validate_protocol(proto);
    if (!report.ok()) {
        throw std::invalid_argument("cycle_map: invalid protocol: " +
                                    report.violations.front());
    }
    const int d = proto.d;
    CycleMap map;
    map.d = d;
    map.matrix.resize(d, d);
    for (int k = 0; k < d; ++k) {
        const auto before = composite_initial(hot, cold, Catalyst::point(d, k));
        const auto marginal = catalyst_marginal(apply_protocol(before, proto));
        for (int l = 0; l < d; ++l) map.matrix(l, k) = marginal[l];
    }
    return map;
}

FixedPointSet fixed_points(const CycleMap& map) {
    const int d = map.d;
    const Eigen::MatrixXd& M = map.matrix;
    if (M.rows() != d || M.cols() != d) {
        throw std::invalid_argument("fixed_points: matrix shape does not match d");
    }
    for (int k = 0; k < d; ++k) {
        if (std::abs(M.col(k).sum() - 1.0) > kStochasticTol ||
            M.col(k).minCoeff() < -kStochasticTol) {
            throw std::invalid_argument("fixed_points: matrix is not column-stochastic");
        }
    }

    Eigen::MatrixXd K = M - Eigen::MatrixXd::Identity(d, d);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(K);
    lu.setThreshold(kRankTol);
    const int nullity = d - static_cast<int>(lu.rank());

    FixedPointSet set;
    set.degenerate = nullity > 1;

    // Bordered system [K; 1^T] p = [0; 1]: square-rank path for the common
    // unique-fixed-point case.
    Eigen::MatrixXd A(d + 1, d);
    A.topRows(d) = K;
    A.row(d).setOnes();
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(d + 1);
    rhs[d] = 1.0;

    if (nullity <= 1) {
        Eigen::VectorXd p = A.colPivHouseholderQr().solve(rhs);
        if (sanitize_fixed_point(M, p)) {
            set.vertices.emplace_back(p.data(), p.data() + d);
            return set;
        }
        // fall through to subset enumeration if the solve degraded
    }

    // Vertex = basic feasible solution: support columns of [K; 1^T] linearly
    // independent, nonnegative solution on that support.
    for (unsigned mask = 1; mask < (1u << d); ++mask) {
        std::vector<int> support;
        for (int i = 0; i < d; ++i) {
            if (mask & (1u << i)) support.push_back(i);
        }
        const int s = static_cast<int>(support.size());
        Eigen::MatrixXd As(d + 1, s);
        for (int c = 0; c < s; ++c) As.col(c) = A.col(support[c]);
        Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(As);
        qr.setThreshold(kRankTol);
        if (static_cast<int>(qr.rank()) < s) continue;
        Eigen::VectorXd ps = qr.solve(rhs);
        if ((As * ps - rhs).cwiseAbs().maxCoeff() > kFeasibilityTol) continue;
        Eigen::VectorXd p = Eigen::VectorXd::Zero(d);
        for (int c = 0; c < s; ++c) p[support[c]] = ps[c];
        if (!sanitize_fixed_point(M, p)) continue;
        std::vector<double> v(p.data(), p.data() + d);
        const bool duplicate =
            std::any_of(set.vertices.begin(), set.vertices.end(), [&](const auto& w) {
                double dist = 0.0;
                for (int i = 0; i < d; ++i) dist = std::max(dist, std::abs(w[i] - v[i]));
                return dist <= kDedupeTol;
            });
        if (!duplicate) set.vertices.push_back(std::move(v));
    }
    std::sort(set.vertices.begin(), set.vertices.end());
    if (set.vertices.empty()) {
        throw std::logic_error("fixed_points: no feasible vertex found");
    }
    return set;
}

CyclicityReport check_cyclicity(const SwapProtocol& proto, const ThermalQubit& hot,
                                const ThermalQubit& cold, const Catalyst& cat,
                                double tol) {
    const auto before = composite_initial(hot, cold, cat);
    const auto after = apply_protocol(before, proto);
    const auto marg_before = catalyst_marginal(before);
    const auto marg_after = catalyst_marginal(after);

    CyclicityReport report;
    for (int k = 0; k < proto.d; ++k) {
        report.residual =
            std::max(report.residual, std::abs(marg_after[k] - cat.probs[k]));
    }
    report.cyclic = report.residual <= tol;

    if (proto.kind == ProtocolKind::TranspositionSet) {
        // Per-level sum over swaps: each swap moves p_a <-> p_b, shifting the
        // marginal of the two catalyst columns it touches by the difference.
        std::vector<double> swap_form(proto.d, 0.0);
        for (const auto& t : proto.swaps) {
            const int ka = t.a % proto.d;
            const int kb = t.b % proto.d;
            swap_form[ka] += before.probs[t.b] - before.probs[t.a];
            swap_form[kb] += before.probs[t.a] - before.probs[t.b];
        }
        for (int k = 0; k < proto.d; ++k) {
            const double marginal_diff = marg_after[k] - marg_before[k];
            report.swap_form_residual = std::max(
                report.swap_form_residual, std::abs(swap_form[k] - marginal_diff));
        }
    }
    return report;
}

}  // namespace qotto
