#include "stirling/cycle.hpp"

#include <cmath>
#include <stdexcept>

namespace stirling {

void validate(const CycleParams& params) {
    if (!std::isfinite(params.lambda1) || !std::isfinite(params.lambda2) ||
        !std::isfinite(params.j))
        throw std::invalid_argument("cycle parameters must be finite");
    if (!std::isfinite(params.t_hot) || !std::isfinite(params.t_cold))
        throw std::invalid_argument("temperatures must be finite");
    if (!(params.t_cold > 0.0))
        throw std::invalid_argument("t_cold must be positive");
    if (!(params.t_hot > params.t_cold))
        throw std::invalid_argument("t_hot must exceed t_cold");
    if (params.cost_model.kind == CostModelKind::Fixed &&
        (!(params.cost_model.fixed_value >= 0.0) ||
         !std::isfinite(params.cost_model.fixed_value)))
        throw std::invalid_argument("fixed regeneration cost must be nonnegative and finite");
}

CyclePoints build_points(const CycleParams& params) {
    validate(params);
    const Spectrum spec1 = params.medium.spectrum({params.lambda1, params.j});
    const Spectrum spec2 = params.medium.spectrum({params.lambda2, params.j});
    const double beta_h = 1.0 / params.t_hot;
    const double beta_c = 1.0 / params.t_cold;
    return CyclePoints{
        ThermalState(spec1, beta_h),  // A
        ThermalState(spec2, beta_h),  // B
        ThermalState(spec2, beta_c),  // C
        ThermalState(spec1, beta_c),  // D
    };
}

Heats heats(const CyclePoints& points) {
    const double t_h = points.b.temperature();
    const double t_c = points.c.temperature();
    return Heats{
        t_h * (points.b.s() - points.a.s()),
        points.c.u() - points.b.u(),
        t_c * (points.d.s() - points.c.s()),
        points.a.u() - points.d.u(),
    };
}

RegenSplit regen_bookkeeping(const Heats& q) {
    const double delta_q = q.q2 + q.q4;
    return RegenSplit{
        delta_q,
        q.q1 + std::max(0.0, delta_q),
        q.q3 + std::min(0.0, delta_q),
    };
}

double min_carnot_cost(double q2, double t_hot, double t_cold) {
    return std::abs(q2) * (t_hot - t_cold) / t_cold;
}

double regeneration_cost(double q2, double t_hot, double t_cold, const CostModel& model) {
    switch (model.kind) {
        case CostModelKind::None:
            return 0.0;
        case CostModelKind::MinCarnot:
            return min_carnot_cost(q2, t_hot, t_cold);
        case CostModelKind::Fixed:
            if (!(model.fixed_value >= 0.0) || !std::isfinite(model.fixed_value))
                throw std::invalid_argument(
                    "fixed regeneration cost must be nonnegative and finite");
            return model.fixed_value;
    }
    throw std::invalid_argument("unknown cost model");
}

Efficiencies efficiencies(const Heats& q, const RegenSplit& split, double w_cost_applied,
                          double t_hot, double t_cold) {
    const double work = q.q1 + q.q2 + q.q3 + q.q4;
    Efficiencies eta;
    eta.carnot = 1.0 - t_cold / t_hot;
    if (work > 0.0) {
        if (split.q_h > 0.0) eta.regen_free = work / split.q_h;
        if (split.q_h + w_cost_applied > 0.0)
            eta.regen_cost = work / (split.q_h + w_cost_applied);
        if (q.q1 + q.q4 > 0.0) eta.conventional = work / (q.q1 + q.q4);
    }
    return eta;
}

double entropy_production(const CyclePoints& points) {
    // B -> C and D -> A thermalizations; each contributes the relative entropy
    // of the initial state with respect to the final one.
    return relative_entropy_gibbs(points.b.spectrum(), points.b.beta(), points.c.beta()) +
           relative_entropy_gibbs(points.d.spectrum(), points.d.beta(), points.a.beta());
}

std::optional<double> carnot_deficit_conventional(const CyclePoints& points, const Heats& q) {
    const double heat_in = q.q1 + q.q4;
    if (!(heat_in > 0.0)) return std::nullopt;
    return entropy_production(points) * points.c.temperature() / heat_in;
}

CostBounds cost_bounds(const Heats& q, double q_h, double sigma, double t_hot, double t_cold) {
    const double eta_carnot = 1.0 - t_cold / t_hot;
    const double sufficient = (q.q1 + q.q4 - q_h) - sigma * t_cold / eta_carnot;
    return CostBounds{sufficient, std::max(min_carnot_cost(q.q2, t_hot, t_cold), sufficient)};
}

namespace {

CycleMode classify(double work, double q_h) {
    if (std::abs(work) <= kDegenerateWorkFloor) return CycleMode::Degenerate;
    if (work > 0.0 && q_h > 0.0) return CycleMode::Engine;
    return CycleMode::NotEngine;
}

}  // namespace

CycleReport analyze(const CycleParams& params) {
    const CyclePoints points = build_points(params);
    const Heats q = heats(points);
    const RegenSplit split = regen_bookkeeping(q);

    CycleReport r;
    r.medium = params.medium.kind();
    r.lambda1 = params.lambda1;
    r.lambda2 = params.lambda2;
    r.j = params.j;
    r.t_hot = params.t_hot;
    r.t_cold = params.t_cold;

    r.q1 = q.q1;
    r.q2 = q.q2;
    r.q3 = q.q3;
    r.q4 = q.q4;
    r.delta_q = split.delta_q;
    r.q_h = split.q_h;
    r.q_c = split.q_c;
    r.work = q.q1 + q.q2 + q.q3 + q.q4;

    r.w_cost_min = min_carnot_cost(q.q2, params.t_hot, params.t_cold);
    r.w_cost_applied = regeneration_cost(q.q2, params.t_hot, params.t_cold, params.cost_model);
    r.sigma = entropy_production(points);

    const CostBounds bounds =
        cost_bounds(q, split.q_h, r.sigma, params.t_hot, params.t_cold);
    r.w_cost_sufficient = bounds.sufficient;
    r.w_cost_required = bounds.required;

    const Efficiencies eta =
        efficiencies(q, split, r.w_cost_applied, params.t_hot, params.t_cold);
    r.eta_regen_free = eta.regen_free;
    r.eta_regen_cost = eta.regen_cost;
    r.eta_conventional = eta.conventional;
    r.eta_carnot = eta.carnot;

    r.mode = classify(r.work, r.q_h);
    r.flag_cost_below_min =
        params.cost_model.kind == CostModelKind::Fixed && r.w_cost_applied < r.w_cost_min;
    r.flag_negative_coupling =
        params.medium.kind() == MediumKind::CoupledSpins && params.j < 0.0;
    return r;
}

std::string_view to_string(CycleMode mode) {
    switch (mode) {
        case CycleMode::Engine: return "engine";
        case CycleMode::NotEngine: return "not_engine";
        case CycleMode::Degenerate: return "degenerate";
    }
    return "unknown";
}

}  // namespace stirling
