#include "hvdc/pairwise_arbitrage.hpp"

#include <algorithm>
#include <cmath>

#include "hvdc/errors.hpp"

namespace hvdc {

namespace {

void check_loss(double r) {
    if (!(r >= 0.0 && r < 1.0)) throw DomainError("loss fraction must lie in [0, 1)");
}

void check_quantity(double x) {
    if (!(x >= 0.0)) throw DomainError("quantity must be >= 0");
}

void check_duration(double duration_h) {
    if (!(duration_h > 0.0)) throw DomainError("step duration must be > 0 hours");
}

// Margin earned per MWh sent from `from` toward `to`, with the loss charged
// on the destination price.
double directional_margin(double p_to, double p_from, double r) { return p_to - p_from - r * p_to; }

}  // namespace

std::string_view to_string(Direction d) noexcept {
    switch (d) {
        case Direction::AToB: return "A_to_B";
        case Direction::BToA: return "B_to_A";
        case Direction::Idle: return "Idle";
    }
    return "Idle";
}

void check_bias(const BiasPolicy& bias) {
    if (!(bias.r_b >= 0.0) || !std::isfinite(bias.r_b)) throw DomainError("bias r_b must be finite and >= 0");
}

bool flow_condition(double p_to, double p_from, double r) {
    check_loss(r);
    if (!(p_to > 0.0 && p_from > 0.0))
        throw DomainError("ratio flow condition needs positive prices; use marginal_value instead");
    // p_to / p_from > 1 / (1 - r), cleared of divisions
    return p_to * (1.0 - r) > p_from;
}

double marginal_value(double p_i, double p_j, double r) { return biased_marginal_value(p_i, p_j, r, 0.0); }

double biased_marginal_value(double p_i, double p_j, double r, double r_b) {
    check_loss(r);
    check_bias({r_b});
    return std::max({0.0, directional_margin(p_i, p_j, r) - r_b, directional_margin(p_j, p_i, r) - r_b});
}

double pairwise_profit(double p_i, double p_j, double r, double x, double duration_h) {
    return pairwise_profit_biased(p_i, p_j, r, x, 0.0, duration_h);
}

double pairwise_profit_biased(double p_i, double p_j, double r, double x, double r_b, double duration_h) {
    check_quantity(x);
    check_duration(duration_h);
    return x * biased_marginal_value(p_i, p_j, r, r_b) * duration_h;
}

FlowDecision optimal_flow(double p_a, double p_b, double r, double x_max, double r_b, double duration_h,
                          Timestep t) {
    check_loss(r);
    check_bias({r_b});
    check_quantity(x_max);
    check_duration(duration_h);

    const double toward_b = directional_margin(p_b, p_a, r) - r_b;
    const double toward_a = directional_margin(p_a, p_b, r) - r_b;

    FlowDecision d;
    d.timestep = t;
    d.marginal_value = std::max({0.0, toward_a, toward_b});
    if (d.marginal_value > 0.0 && x_max > 0.0) {
        d.direction = toward_b >= toward_a ? Direction::AToB : Direction::BToA;
        d.quantity_mw = x_max;
    }
    d.profit = d.quantity_mw * d.marginal_value * duration_h;
    return d;
}

}  // namespace hvdc
