#pragma once

#include <string_view>

#include "hvdc/types.hpp"

namespace hvdc {

// Endpoint-relative flow direction on a link declared as (endpoint_a, endpoint_b).
enum class Direction { AToB, BToA, Idle };

std::string_view to_string(Direction d) noexcept;

struct FlowDecision {
    Timestep timestep = 0;
    Direction direction = Direction::Idle;
    double quantity_mw = 0.0;     // injected at the sending end
    double marginal_value = 0.0;  // EUR/MWh, bias already deducted, >= 0
    double profit = 0.0;          // quantity_mw * marginal_value * duration_h

    bool operator==(const FlowDecision&) const = default;
};

// Minimum margin (EUR/MWh) a trade has to clear before the link is dispatched.
struct BiasPolicy {
    double r_b = 0.0;

    bool operator==(const BiasPolicy&) const = default;
};

void check_bias(const BiasPolicy& bias);

// Ratio test for sending power from the `p_from` side to the `p_to` side:
// p_to / p_from > 1 / (1 - r), evaluated as p_to (1 - r) > p_from. Defined
// for strictly positive prices only;
// throws DomainError otherwise (use marginal_value for general prices).
bool flow_condition(double p_to, double p_from, double r);

// Per-MWh margin of the better direction, floored at zero:
//   max(p_i - p_j - r p_i, p_j - p_i - r p_j, 0)
// The loss is charged on the destination price.
double marginal_value(double p_i, double p_j, double r);

// As marginal_value with `r_b` deducted from both directional margins.
double biased_marginal_value(double p_i, double p_j, double r, double r_b);

double pairwise_profit(double p_i, double p_j, double r, double x, double duration_h);

double pairwise_profit_biased(double p_i, double p_j, double r, double x, double r_b,
                              double duration_h);

/// Best dispatch of a single link for one timestep.
///
/// `p_a` and `p_b` are the prices at the link's A and B endpoints. Profit is
/// linear in the quantity, so the result is either full capacity toward the
/// endpoint whose directional margin is positive, or Idle. Exact threshold
/// equality is Idle. When both margins are positive (possible only with a
/// negative price sum) the larger one wins; ties go A to B.
FlowDecision optimal_flow(double p_a, double p_b, double r, double x_max, double r_b,
                          double duration_h, Timestep t);

}  // namespace hvdc
