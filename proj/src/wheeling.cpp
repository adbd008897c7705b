#include "hvdc/wheeling.hpp"

#include "hvdc/errors.hpp"

namespace hvdc {

namespace {

void check_losses(double r1, double r2, double c) {
    for (double v : {r1, r2, c})
        if (!(v >= 0.0 && v < 1.0)) throw DomainError("wheeling losses must lie in [0, 1)");
}

void check_dispatch(double x, double duration_h) {
    if (!(x >= 0.0)) throw DomainError("quantity must be >= 0");
    if (!(duration_h > 0.0)) throw DomainError("step duration must be > 0 hours");
}

bool joins(const Interconnector& link, const std::string& u, const std::string& v) {
    return (link.endpoint_a == u && link.endpoint_b == v) || (link.endpoint_a == v && link.endpoint_b == u);
}

void check_leg(const Interconnector& link, double flow) {
    if (flow > link.capacity_mw)
        throw CapacityError("wheeling flow of " + std::to_string(flow) + " MW exceeds the " +
                                std::to_string(link.capacity_mw) + " MW rating of link " + link.id,
                            link.id);
}

}  // namespace

std::string_view to_string(WheelScenario s) noexcept { return s == WheelScenario::S123 ? "S123" : "S321"; }

GatePair wheel_gates_123(double p1, double p2, double p3, double r1, double r2, double c) {
    check_losses(r1, r2, c);
    return {p3 * (1.0 - r2) * (1.0 - c) - p2, p2 * (1.0 - r1) - p1};
}

GatePair wheel_gates_321(double p1, double p2, double p3, double r1, double r2, double c) {
    check_losses(r1, r2, c);
    return {p1 * (1.0 - r1) * (1.0 - c) - p2, p2 * (1.0 - r2) - p3};
}

double wheel_profit_123(double p1, double p3, double r1, double r2, double c, double x, double duration_h) {
    check_losses(r1, r2, c);
    check_dispatch(x, duration_h);
    return (p3 * (1.0 - r1) * (1.0 - r2) * (1.0 - c) - p1) * x * duration_h;
}

double wheel_profit_321(double p1, double p3, double r1, double r2, double c, double x, double duration_h) {
    check_losses(r1, r2, c);
    check_dispatch(x, duration_h);
    return (p1 * (1.0 - r1) * (1.0 - r2) * (1.0 - c) - p3) * x * duration_h;
}

void check_chain(const WheelingChain& chain) {
    if (!(chain.transit_loss_c >= 0.0 && chain.transit_loss_c < 1.0))
        throw ValidationError("transit loss c must lie in [0, 1)");
    if (!joins(chain.link12, chain.area1, chain.area2))
        throw ValidationError("link " + chain.link12.id + " does not join " + chain.area1 + " and " + chain.area2);
    if (!joins(chain.link23, chain.area2, chain.area3))
        throw ValidationError("link " + chain.link23.id + " does not join " + chain.area2 + " and " + chain.area3);
    if (chain.area1 == chain.area3) throw ValidationError("wheeling chain must end in a different area");
}

WheelingChain resolve_chain(const Network& network, const std::string& area1, const std::string& area2,
                            const std::string& area3, const std::string& link12, const std::string& link23,
                            double transit_loss_c) {
    for (const auto* a : {&area1, &area2, &area3})
        if (!network.find_region(*a)) throw ResolutionError("unknown region '" + *a + "'");
    const auto* l12 = network.find_interconnector(link12);
    const auto* l23 = network.find_interconnector(link23);
    if (!l12) throw ResolutionError("unknown link '" + link12 + "'");
    if (!l23) throw ResolutionError("unknown link '" + link23 + "'");
    WheelingChain chain{area1, area2, area3, *l12, *l23, transit_loss_c};
    try {
        check_chain(chain);
    } catch (const ValidationError& e) {
        throw ResolutionError(e.what());
    }
    return chain;
}

std::pair<WheelingResult, WheelingResult> evaluate_wheel(const WheelingChain& chain, const WheelPrices& prices,
                                                         double x_request, double duration_h) {
    check_chain(chain);
    check_dispatch(x_request, duration_h);
    const double r1 = chain.link12.loss_fraction;
    const double r2 = chain.link23.loss_fraction;
    const double c = chain.transit_loss_c;
    check_losses(r1, r2, c);

    check_leg(chain.link12, x_request);
    check_leg(chain.link23, x_request * (1.0 - r1) * (1.0 - c));
    check_leg(chain.link23, x_request);
    check_leg(chain.link12, x_request * (1.0 - r2) * (1.0 - c));

    WheelingResult forward{WheelScenario::S123, false, wheel_gates_123(prices.p1, prices.p2, prices.p3, r1, r2, c)};
    WheelingResult reverse{WheelScenario::S321, false, wheel_gates_321(prices.p1, prices.p2, prices.p3, r1, r2, c)};
    forward.feasible = forward.gates.feasible();
    reverse.feasible = reverse.gates.feasible();
    if (forward.feasible) {
        forward.quantity_mw = x_request;
        forward.profit = wheel_profit_123(prices.p1, prices.p3, r1, r2, c, x_request, duration_h);
    }
    if (reverse.feasible) {
        reverse.quantity_mw = x_request;
        reverse.profit = wheel_profit_321(prices.p1, prices.p3, r1, r2, c, x_request, duration_h);
    }
    return {forward, reverse};
}

}  // namespace hvdc
