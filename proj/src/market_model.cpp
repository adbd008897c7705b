#include "hvdc/market_model.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "hvdc/errors.hpp"

namespace hvdc {

namespace {

template <typename Point>
const Point* find_step(const std::vector<Point>& steps, Timestep t) {
    auto it = std::lower_bound(steps.begin(), steps.end(), t,
                               [](const Point& p, Timestep v) { return p.timestep < v; });
    if (it == steps.end() || it->timestep != t) return nullptr;
    return &*it;
}

}  // namespace

std::optional<double> PriceSeries::price_at(Timestep t) const {
    if (const auto* p = find_step(steps, t)) return p->price;
    return std::nullopt;
}

std::optional<double> CapacityProfile::x_max_at(Timestep t) const {
    if (const auto* p = find_step(steps, t)) return p->x_max;
    return std::nullopt;
}

const Region* Network::find_region(const std::string& id) const {
    auto it = std::find_if(regions.begin(), regions.end(), [&](const Region& r) { return r.id == id; });
    return it == regions.end() ? nullptr : &*it;
}

const Interconnector* Network::find_interconnector(const std::string& id) const {
    auto it = std::find_if(interconnectors.begin(), interconnectors.end(),
                           [&](const Interconnector& l) { return l.id == id; });
    return it == interconnectors.end() ? nullptr : &*it;
}

const PriceSeries* Network::prices_for(const std::string& region_id) const {
    auto it = price_series.find(region_id);
    return it == price_series.end() ? nullptr : &it->second;
}

std::string ValidationReport::to_string() const {
    std::ostringstream os;
    for (const auto& v : violations) os << v.entity_id << ": " << v.message << '\n';
    return os.str();
}

double loss_from_length(double length_km, double loss_rate_per_100km) {
    if (!(length_km >= 0.0) || !std::isfinite(length_km))
        throw DomainError("length_km must be a finite non-negative number");
    if (!(loss_rate_per_100km >= 0.0 && loss_rate_per_100km < 1.0))
        throw DomainError("loss_rate_per_100km must lie in [0, 1)");
    const double r = length_km * loss_rate_per_100km / 100.0;
    if (!(r < 1.0))
        throw DomainError("invalid loss: link of " + std::to_string(length_km) +
                          " km would dissipate all injected power");
    return r;
}

ValidationReport validate_price_series(const PriceSeries& series) {
    ValidationReport report;
    const std::string& id = series.region_id.empty() ? std::string("<price series>") : series.region_id;
    if (series.region_id.empty()) report.violations.push_back({id, "price series without region id"});
    for (std::size_t k = 0; k < series.steps.size(); ++k) {
        const auto& s = series.steps[k];
        if (s.timestep < 0)
            report.violations.push_back({id, "negative timestep " + std::to_string(s.timestep)});
        if (!std::isfinite(s.price))
            report.violations.push_back({id, "non-finite price at timestep " + std::to_string(s.timestep)});
        if (k > 0 && s.timestep <= series.steps[k - 1].timestep)
            report.violations.push_back({id, "timestep " + std::to_string(s.timestep) +
                                                 " not strictly increasing"});
    }
    return report;
}

ValidationReport validate_capacity_profile(const CapacityProfile& profile) {
    ValidationReport report;
    const std::string& id = profile.interconnector_id;
    for (std::size_t k = 0; k < profile.steps.size(); ++k) {
        const auto& s = profile.steps[k];
        if (s.timestep < 0)
            report.violations.push_back({id, "negative timestep " + std::to_string(s.timestep)});
        if (!(s.x_max >= 0.0) || !std::isfinite(s.x_max))
            report.violations.push_back({id, "x_max must be finite and >= 0 at timestep " +
                                                 std::to_string(s.timestep)});
        if (k > 0 && s.timestep <= profile.steps[k - 1].timestep)
            report.violations.push_back({id, "timestep " + std::to_string(s.timestep) +
                                                 " not strictly increasing"});
    }
    return report;
}

ValidationReport validate_network(const Network& network, std::optional<Horizon> horizon, bool require_prices) {
    ValidationReport report;
    auto add = [&](const std::string& id, std::string msg) {
        report.violations.push_back({id, std::move(msg)});
    };

    std::set<std::string> region_ids;
    for (const auto& r : network.regions) {
        if (r.id.empty()) add("<region>", "empty region id");
        else if (!region_ids.insert(r.id).second) add(r.id, "duplicate region id");
    }

    std::set<std::string> link_ids;
    std::set<std::string> linked_regions;
    for (const auto& l : network.interconnectors) {
        const std::string id = l.id.empty() ? std::string("<interconnector>") : l.id;
        if (l.id.empty()) add(id, "empty interconnector id");
        else if (!link_ids.insert(l.id).second) add(id, "duplicate interconnector id");
        if (!(l.capacity_mw >= 0.0) || !std::isfinite(l.capacity_mw))
            add(id, "capacity_mw must be finite and >= 0");
        if (!(l.loss_fraction >= 0.0 && l.loss_fraction < 1.0))
            add(id, "loss_fraction must lie in [0, 1)");
        if (l.length_km && !(*l.length_km >= 0.0 && std::isfinite(*l.length_km)))
            add(id, "length_km must be finite and >= 0");
        if (l.endpoint_a == l.endpoint_b) add(id, "endpoints must differ");
        for (const auto* end : {&l.endpoint_a, &l.endpoint_b}) {
            if (!region_ids.count(*end)) add(id, "unknown region '" + *end + "'");
            else linked_regions.insert(*end);
        }
    }

    for (const auto& [key, series] : network.price_series) {
        if (key != series.region_id)
            add(key, "price series keyed under '" + key + "' belongs to '" + series.region_id + "'");
        if (!region_ids.count(key)) add(key, "price series for undeclared region");
        auto sub = validate_price_series(series);
        report.violations.insert(report.violations.end(), sub.violations.begin(), sub.violations.end());
    }

    if (!require_prices) return report;
    for (const auto& rid : linked_regions) {
        const auto* series = network.prices_for(rid);
        if (!series || series->steps.empty()) {
            add(rid, "linked region has no price series");
            continue;
        }
        if (!horizon) continue;
        for (Timestep t = horizon->first; t <= horizon->last; ++t) {
            if (!series->price_at(t)) {
                add(rid, "no price at timestep " + std::to_string(t));
                break;
            }
        }
    }
    return report;
}

Horizon span_of(const PriceSeries& series) {
    if (series.steps.empty()) return {};
    return {series.steps.front().timestep, series.steps.back().timestep};
}

CapacityProfile constant_capacity(const Interconnector& link, Horizon horizon) {
    CapacityProfile profile{link.id, {}};
    profile.steps.reserve(horizon.size());
    for (Timestep t = horizon.first; t <= horizon.last; ++t) profile.steps.push_back({t, link.capacity_mw});
    return profile;
}

}  // namespace hvdc
