#include "hvdc/horizon_scheduler.hpp"

#include <algorithm>
#include <array>
#include <future>

#include "hvdc/errors.hpp"

namespace hvdc {

namespace {

struct StepInputs {
    Timestep t;
    double p_a;
    double p_b;
    double x_max;
};

// Resolves the horizon and lines up prices and capacity for each of its steps.
std::vector<StepInputs> align(const PriceSeries& prices_a, const PriceSeries& prices_b, const Interconnector& link,
                              const CapacityProfile& capacity, const ScheduleOptions& options) {
    if (prices_a.region_id != link.endpoint_a || prices_b.region_id != link.endpoint_b)
        throw ResolutionError("link " + link.id + " joins " + link.endpoint_a + "-" + link.endpoint_b +
                              " but prices are for " + prices_a.region_id + "-" + prices_b.region_id);
    if (capacity.interconnector_id != link.id)
        throw ResolutionError("capacity profile for '" + capacity.interconnector_id + "' given for link " + link.id);

    const Horizon horizon = options.horizon.value_or(span_of(prices_a));
    std::vector<StepInputs> steps;
    std::vector<Timestep> missing;
    steps.reserve(horizon.size());
    for (Timestep t = horizon.first; t <= horizon.last; ++t) {
        auto pa = prices_a.price_at(t);
        auto pb = prices_b.price_at(t);
        auto cap = capacity.x_max_at(t);
        if (!pa || !pb || !cap) {
            missing.push_back(t);
            continue;
        }
        steps.push_back({t, *pa, *pb, *cap});
    }
    if (!missing.empty()) {
        std::string list;
        for (std::size_t k = 0; k < missing.size() && k < 20; ++k) list += (k ? "," : "") + std::to_string(missing[k]);
        if (missing.size() > 20) list += ",...";
        throw AlignmentError("link " + link.id + ": prices or capacity missing at timesteps " + list,
                             std::move(missing));
    }
    return steps;
}

double sum_profits(const std::vector<FlowDecision>& decisions) {
    double total = 0.0;
    for (const auto& d : decisions) total += d.profit;
    return total;
}

[[noreturn]] void rethrow_for_link(const std::string& link_id) {
    const std::string prefix = "link " + link_id + ": ";
    try {
        throw;
    } catch (const Error& e) {
        if (std::string_view(e.what()).starts_with(prefix)) throw;
        if (const auto* a = dynamic_cast<const AlignmentError*>(&e)) throw AlignmentError(prefix + e.what(), a->missing());
        if (dynamic_cast<const ResolutionError*>(&e)) throw ResolutionError(prefix + e.what());
        if (dynamic_cast<const DomainError*>(&e)) throw DomainError(prefix + e.what());
        if (dynamic_cast<const ValidationError*>(&e)) throw ValidationError(prefix + e.what());
        throw;
    }
}

}  // namespace

Schedule schedule_link(const PriceSeries& prices_a, const PriceSeries& prices_b, const Interconnector& link,
                       const CapacityProfile& capacity, const ScheduleOptions& options) {
    check_bias(options.bias);
    const auto steps = align(prices_a, prices_b, link, capacity, options);

    Schedule schedule{link.id, {}, 0.0};
    schedule.decisions.reserve(steps.size());
    for (const auto& s : steps)
        schedule.decisions.push_back(
            optimal_flow(s.p_a, s.p_b, link.loss_fraction, s.x_max, options.bias.r_b, options.duration_h, s.t));
    schedule.total_profit = sum_profits(schedule.decisions);
    return schedule;
}

Schedule lp_oracle(const PriceSeries& prices_a, const PriceSeries& prices_b, const Interconnector& link,
                   const CapacityProfile& capacity, const ScheduleOptions& options) {
    check_bias(options.bias);
    if (!(options.duration_h > 0.0)) throw DomainError("step duration must be > 0 hours");
    if (!(link.loss_fraction >= 0.0 && link.loss_fraction < 1.0)) throw DomainError("loss fraction must lie in [0, 1)");
    const auto steps = align(prices_a, prices_b, link, capacity, options);
    const double r = link.loss_fraction;
    const double r_b = options.bias.r_b;

    Schedule schedule{link.id, {}, 0.0};
    for (const auto& s : steps) {
        if (!(s.x_max >= 0.0)) throw DomainError("quantity must be >= 0");

        // Lower bounds on lambda_t, each tagged with the flow it prices.
        struct Row {
            double bound;
            Direction flow;
        };
        const std::array<Row, 3> rows{{
            {0.0, Direction::Idle},
            {s.p_a - s.p_b - r * s.p_a - r_b, Direction::BToA},
            {s.p_b - s.p_a - r * s.p_b - r_b, Direction::AToB},
        }};

        // Tight epigraph value: the largest lower bound. On ties the later
        // directional row wins, matching the A-to-B tie rule.
        std::size_t active = 0;
        for (std::size_t k = 1; k < rows.size(); ++k) {
            if (rows[k].bound > rows[active].bound || (active != 0 && rows[k].bound == rows[active].bound))
                active = k;
        }
        const double lambda = rows[active].bound;

        FlowDecision best{s.t, Direction::Idle, 0.0, lambda, 0.0};
        for (const double x : {0.0, s.x_max}) {
            const double objective = x * lambda * options.duration_h;
            if (objective > best.profit) {
                best.quantity_mw = x;
                best.profit = objective;
                best.direction = rows[active].flow;
            }
        }
        schedule.decisions.push_back(best);
    }
    schedule.total_profit = sum_profits(schedule.decisions);
    return schedule;
}

PortfolioResult schedule_portfolio(const Network& network, const std::map<std::string, CapacityProfile>& capacities,
                                   const ScheduleOptions& options) {
    check_bias(options.bias);

    ScheduleOptions resolved = options;
    if (!resolved.horizon) {
        Horizon h{};
        bool any = false;
        for (const auto& link : network.interconnectors) {
            for (const auto* end : {&link.endpoint_a, &link.endpoint_b}) {
                const auto* series = network.prices_for(*end);
                if (!series || series->steps.empty()) continue;
                const Horizon s = span_of(*series);
                h = any ? Horizon{std::min(h.first, s.first), std::max(h.last, s.last)} : s;
                any = true;
            }
        }
        resolved.horizon = h;
    }

    std::vector<const Interconnector*> links;
    for (const auto& link : network.interconnectors) links.push_back(&link);
    std::stable_sort(links.begin(), links.end(), [](auto* a, auto* b) { return a->id < b->id; });

    std::vector<std::future<Schedule>> pending;
    pending.reserve(links.size());
    for (const auto* link : links) {
        pending.push_back(std::async(std::launch::async, [&, link] {
            try {
                const auto* pa = network.prices_for(link->endpoint_a);
                const auto* pb = network.prices_for(link->endpoint_b);
                if (!pa || !pb) throw ResolutionError("missing price series for an endpoint");
                auto it = capacities.find(link->id);
                const CapacityProfile capacity =
                    it != capacities.end() ? it->second : constant_capacity(*link, *resolved.horizon);
                return schedule_link(*pa, *pb, *link, capacity, resolved);
            } catch (const Error&) {
                rethrow_for_link(link->id);
            }
        }));
    }

    PortfolioResult result;
    for (auto& f : pending) result.schedules.push_back(f.get());
    for (const auto& s : result.schedules) result.grand_total += s.total_profit;

    const double hours = static_cast<double>(resolved.horizon->size()) * resolved.duration_h;
    result.annualized = hours > 0.0 ? extrapolate_annual(result.grand_total / hours) : 0.0;
    return result;
}

double extrapolate_annual(double hourly_profit) {
    if (!(hourly_profit >= 0.0)) throw DomainError("hourly profit must be >= 0");
    return hourly_profit * kHoursPerYear;
}

}  // namespace hvdc
