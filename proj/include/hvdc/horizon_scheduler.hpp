#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hvdc/market_model.hpp"
#include "hvdc/pairwise_arbitrage.hpp"

namespace hvdc {

struct Schedule {
    std::string interconnector_id;
    std::vector<FlowDecision> decisions;  // one per timestep of the horizon, in order
    double total_profit = 0.0;

    bool operator==(const Schedule&) const = default;
};

struct PortfolioResult {
    std::vector<Schedule> schedules;  // ordered by interconnector id
    double grand_total = 0.0;
    double annualized = 0.0;  // mean hourly profit over the horizon, times 8760

    bool operator==(const PortfolioResult&) const = default;
};

struct ScheduleOptions {
    BiasPolicy bias;
    double duration_h = 1.0;
    // Defaults to the span of the A-side price series (portfolio: all linked series).
    std::optional<Horizon> horizon;
};

/// Dispatches one link over a horizon with time-varying capacity.
///
/// The horizon problem
///     max  sum_t x_t * lambda_t   s.t.  0 <= x_t <= X_max^t
/// with lambda_t pinned to its tightest epigraph bound
///     lambda_t = max(p_a - p_b - r p_a - r_b, p_b - p_a - r p_b - r_b, 0)
/// has no coupling across t, so each step is solved on its own by
/// optimal_flow and the result is optimal for the whole horizon.
///
/// `prices_a` / `prices_b` must belong to the link's A / B endpoints and,
/// together with `capacity`, cover every timestep of the horizon.
/// Throws AlignmentError listing missing timesteps, ResolutionError on
/// mismatched regions or link id.
Schedule schedule_link(const PriceSeries& prices_a, const PriceSeries& prices_b, const Interconnector& link,
                       const CapacityProfile& capacity, const ScheduleOptions& options = {});

// Schedules every link independently. Links without an entry in `capacities`
// use their constant rating. Errors are rethrown with the link id prefixed.
PortfolioResult schedule_portfolio(const Network& network, const std::map<std::string, CapacityProfile>& capacities,
                                   const ScheduleOptions& options = {});

// hourly_profit * 8760. Throws DomainError for a negative argument.
double extrapolate_annual(double hourly_profit);

// Test oracle for schedule_link. Enumerates, per step, every vertex of the
// epigraph LP (x_t in {0, X_max^t}, lambda_t on each active lower bound)
// and keeps the most profitable one. Same contract as schedule_link.
Schedule lp_oracle(const PriceSeries& prices_a, const PriceSeries& prices_b, const Interconnector& link,
                   const CapacityProfile& capacity, const ScheduleOptions& options = {});

}  // namespace hvdc
