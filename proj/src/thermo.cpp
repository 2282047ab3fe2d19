// thermo.cpp

#include "qotto/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qotto {

namespace {

constexpr double kFirstLawTol = 1e-12;
constexpr double kClausiusTol = 1e-9;
constexpr double kCarnotTol = 1e-12;
constexpr double kFlowTol = 1e-12;

void require_compatible(const CompositeState& x, const CompositeState& y) {
    if (x.d != y.d || x.omega_h != y.omega_h || x.omega_c != y.omega_c) {
        throw std::invalid_argument("heats: states differ in dimension or frequencies");
    }
}

double carnot_efficiency(const ThermalQubit& hot, const ThermalQubit& cold) {
    return 1.0 - hot.beta / cold.beta;
}

}  // namespace

std::pair<double, double> heats(const CompositeState& before,
                                const CompositeState& after) {
    require_compatible(before, after);
    double q_h = 0.0;
    double q_c = 0.0;
    for (int l = 0; l < before.levels(); ++l) {
        const double diff = before.probs[l] - after.probs[l];
        q_h += before.energy_h(l) * diff;
        q_c += before.energy_c(l) * diff;
    }
    return {q_h, q_c};
}

std::pair<double, double> swap_sum_heats(const CompositeState& before,
                                         const SwapProtocol& proto) {
    if (proto.kind != ProtocolKind::TranspositionSet) {
        throw std::invalid_argument("swap_sum_heats: requires a transposition set");
    }
    if (proto.d != before.d) {
        throw std::invalid_argument("swap_sum_heats: protocol and state dimension differ");
    }
    double q_h = 0.0;
    double q_c = 0.0;
    for (const auto& t : proto.swaps) {
        const double flow = before.probs[t.a] - before.probs[t.b];
        q_h += (before.energy_h(t.a) - before.energy_h(t.b)) * flow;
        q_c += (before.energy_c(t.a) - before.energy_c(t.b)) * flow;
    }
    return {q_h, q_c};
}

std::optional<double> protocol_delta_p(const SwapProtocol& proto,
                                       const CompositeState& before) {
    if (proto.kind != ProtocolKind::TranspositionSet) return std::nullopt;
    if (proto.swaps.empty()) return 0.0;
    bool first = true;
    double flow = 0.0;
    for (const auto& t : proto.swaps) {
        int up = t.a;
        int down = t.b;
        const double ha = before.energy_h(t.a);
        const double hb = before.energy_h(t.b);
        if (hb > ha ||
            (hb == ha && before.energy_c(t.b) > before.energy_c(t.a))) {
            std::swap(up, down);
        }
        const double f = before.probs[up] - before.probs[down];
        if (first) {
            flow = f;
            first = false;
        } else if (std::abs(f - flow) > kFlowTol) {
            return std::nullopt;
        }
    }
    return flow;
}

namespace {

struct VertexEval {
    double q_h = 0.0;
    double q_c = 0.0;
    double w = 0.0;
    const std::vector<double>* vertex = nullptr;
};

VertexEval evaluate_vertex(const SwapProtocol& proto, const ThermalQubit& hot,
                           const ThermalQubit& cold, const std::vector<double>& vertex) {
    const auto before = composite_initial(hot, cold, Catalyst(proto.d, vertex));
    const auto after = apply_protocol(before, proto);
    VertexEval e;
    std::tie(e.q_h, e.q_c) = heats(before, after);
    e.w = e.q_h + e.q_c;
    e.vertex = &vertex;
    return e;
}

CycleResult result_at(const SwapProtocol& proto, const ThermalQubit& hot,
                      const ThermalQubit& cold, const VertexEval& e) {
    CycleResult r;
    r.Q_h = e.q_h;
    r.Q_c = e.q_c;
    r.W = e.w;
    if (r.Q_h > 0.0) r.eta = r.W / r.Q_h;
    r.eta_carnot = carnot_efficiency(hot, cold);
    r.catalyst = *e.vertex;
    r.delta_p =
        protocol_delta_p(proto, composite_initial(hot, cold, Catalyst(proto.d, *e.vertex)));
    return r;
}

}  // namespace

CycleResult run_cycle(const SwapProtocol& proto, const ThermalQubit& hot,
                      const ThermalQubit& cold, FixedPointChoice choice) {
    const auto map = cycle_map(proto, hot, cold);
    const auto fps = fixed_points(map);

    const VertexEval* best = nullptr;
    std::vector<VertexEval> evals;
    evals.reserve(fps.vertices.size());
    for (const auto& v : fps.vertices) {
        evals.push_back(evaluate_vertex(proto, hot, cold, v));
    }
    if (choice == FixedPointChoice::MaxEfficiency) {
        for (const auto& e : evals) {
            if (e.q_h <= 0.0) continue;
            if (!best || e.w / e.q_h > best->w / best->q_h ||
                (e.w / e.q_h == best->w / best->q_h && e.w > best->w)) {
                best = &e;
            }
        }
    }
    if (!best) {  // MaxWork, or no vertex with positive heat intake
        for (const auto& e : evals) {
            if (!best || e.w > best->w) best = &e;
        }
    }
    return result_at(proto, hot, cold, *best);
}

CycleResult run_cycle(const SwapProtocol& proto, const ThermalQubit& hot,
                      const ThermalQubit& cold, const Catalyst& fixed_point) {
    if (fixed_point.dim != proto.d) {
        throw std::invalid_argument("run_cycle: catalyst dimension differs from protocol");
    }
    const auto report = check_cyclicity(proto, hot, cold, fixed_point);
    if (!report.cyclic) {
        throw std::runtime_error("run_cycle: catalyst violates cyclicity, residual = " +
                                 std::to_string(report.residual));
    }
    const auto e = evaluate_vertex(proto, hot, cold, fixed_point.probs);
    return result_at(proto, hot, cold, e);
}

ClosedFormBreakdown closed_form(int d, const ThermalQubit& hot,
                                const ThermalQubit& cold) {
    if (d < 1) {
        throw std::invalid_argument("closed_form: d must be >= 1");
    }
    const double a = std::exp(-hot.beta * hot.omega);
    const double b = std::exp(-cold.beta * cold.omega);
    const double A = std::exp(-static_cast<double>(d) * hot.beta * hot.omega);

    ClosedFormBreakdown out;
    out.d = d;
    out.eta_d = 1.0 - cold.omega / (d * hot.omega);
    // Polynomial form g^2 - S (A - b) with g = sum_{j<d} a^j and
    // S = sum_{m<=d-2} (d-1-m) a^m.  Equals the quotient
    // [(A-1)(b-1) + d(A-b)(a-1)] / (1-a)^2 but has no cancellation: the
    // quotient loses ~1/(beta_h omega_h) digits as a -> 1, this form none.
    double g = 0.0;
    double s = 0.0;
    double pw = 1.0;
    for (int m = 0; m < d; ++m) {
        g += pw;
        if (m <= d - 2) s += (d - 1 - m) * pw;
        pw *= a;
    }
    out.f_d = g * g - s * (A - b);
    out.delta_p = (A - b) / ((1.0 + a) * (1.0 + b) * out.f_d);
    out.W_d = (d * hot.omega - cold.omega) * out.delta_p;
    out.in_engine_regime = engine_regime(d, hot, cold);
    return out;
}

bool engine_regime(int d, const ThermalQubit& hot, const ThermalQubit& cold) {
    if (d < 1) {
        throw std::invalid_argument("engine_regime: d must be >= 1");
    }
    // beta_h/beta_c < omega_c/(d omega_h) < 1, cross-multiplied.
    return d * hot.beta * hot.omega < cold.beta * cold.omega &&
           cold.omega < d * hot.omega;
}

std::vector<int> dimension_range(const ThermalQubit& hot, const ThermalQubit& cold) {
    const double hi = (cold.beta * cold.omega) / (hot.beta * hot.omega);
    std::vector<int> dims;
    if (!std::isfinite(hi) || hi > 1e7) {
        throw std::invalid_argument("dimension_range: interval bound too large to enumerate");
    }
    const int last = static_cast<int>(std::ceil(hi)) + 1;
    for (int d = 1; d <= last; ++d) {
        if (engine_regime(d, hot, cold)) dims.push_back(d);
    }
    return dims;
}

LawsReport laws_check(const CycleResult& result, const ThermalQubit& hot,
                      const ThermalQubit& cold) {
    LawsReport report;
    report.first_law_residual = std::abs(result.W - result.Q_h - result.Q_c);
    report.clausius = hot.beta * result.Q_h + cold.beta * result.Q_c;
    report.first_law_ok = report.first_law_residual <= kFirstLawTol;
    report.clausius_ok = report.clausius <= kClausiusTol;
    report.carnot_ok = true;
    if (result.eta) {
        const double carnot = carnot_efficiency(hot, cold);
        report.carnot_margin = carnot - *result.eta;
        report.carnot_ok = *result.eta <= carnot + kCarnotTol;
    }
    return report;
}

}  // namespace qotto
