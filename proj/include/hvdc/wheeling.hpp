#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "hvdc/market_model.hpp"

namespace hvdc {

// Power moved from one area to another through a transit area:
//   area1 --link12 (r1)--> area2 (transit loss c) --link23 (r2)--> area3
// and the reverse direction.
enum class WheelScenario { S123, S321 };

std::string_view to_string(WheelScenario s) noexcept;

// Left-hand sides of a scenario's two strict feasibility inequalities (EUR/MWh).
struct GatePair {
    double a = 0.0;
    double b = 0.0;

    bool feasible() const noexcept { return a > 0.0 && b > 0.0; }
    bool operator==(const GatePair&) const = default;
};

// a = p3 (1 - r2)(1 - c) - p2,  b = p2 (1 - r1) - p1
GatePair wheel_gates_123(double p1, double p2, double p3, double r1, double r2, double c);

// a = p1 (1 - r1)(1 - c) - p2,  b = p2 (1 - r2) - p3
GatePair wheel_gates_321(double p1, double p2, double p3, double r1, double r2, double c);

// (p3 (1 - r1)(1 - r2)(1 - c) - p1) x d. Negative when wheeling loses money.
double wheel_profit_123(double p1, double p3, double r1, double r2, double c, double x, double duration_h);

// (p1 (1 - r1)(1 - r2)(1 - c) - p3) x d.
double wheel_profit_321(double p1, double p3, double r1, double r2, double c, double x, double duration_h);

struct WheelingChain {
    std::string area1;
    std::string area2;
    std::string area3;
    Interconnector link12;
    Interconnector link23;
    double transit_loss_c = 0.0;

    bool operator==(const WheelingChain&) const = default;
};

struct WheelPrices {
    double p1 = 0.0;
    double p2 = 0.0;
    double p3 = 0.0;
};

struct WheelingResult {
    WheelScenario scenario = WheelScenario::S123;
    bool feasible = false;
    GatePair gates;
    double quantity_mw = 0.0;  // injected at the origin; 0 when infeasible
    double profit = 0.0;       // 0 when infeasible

    bool operator==(const WheelingResult&) const = default;
};

// Checks link endpoints and loss ranges; throws ValidationError.
void check_chain(const WheelingChain& chain);

// Builds a chain from ids, accepting links declared in either orientation.
// Throws ResolutionError when an area or link is unknown or does not join
// the expected pair of areas.
WheelingChain resolve_chain(const Network& network, const std::string& area1, const std::string& area2,
                            const std::string& area3, const std::string& link12, const std::string& link23,
                            double transit_loss_c);

/// Evaluates both wheeling directions for one timestep.
///
/// Capacity is checked leg by leg for each scenario: the first leg carries
/// the injected `x_request`, the second leg carries what is left after the
/// first link's loss and the transit loss. Throws CapacityError naming the
/// first link that cannot carry its share.
std::pair<WheelingResult, WheelingResult> evaluate_wheel(const WheelingChain& chain, const WheelPrices& prices,
                                                         double x_request, double duration_h = 1.0);

}  // namespace hvdc
