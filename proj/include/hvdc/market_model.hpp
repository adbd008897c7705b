#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hvdc/types.hpp"

namespace hvdc {

struct Region {
    std::string id;
    std::string name;

    bool operator==(const Region&) const = default;
};

struct PricePoint {
    Timestep timestep = 0;
    double price = 0.0;  // EUR/MWh, may be negative

    bool operator==(const PricePoint&) const = default;
};

struct PriceSeries {
    std::string region_id;
    std::vector<PricePoint> steps;  // strictly increasing timesteps

    // Binary search; assumes the ordering invariant holds.
    std::optional<double> price_at(Timestep t) const;

    bool operator==(const PriceSeries&) const = default;
};

/// Lossy bidirectional HVDC link between two market areas.
///
/// `loss_fraction` is the share of injected power dissipated on the way,
/// so the receiving end gets (1 - loss_fraction) of what is sent.
/// When the link was declared by length, `length_km` and
/// `loss_rate_per_100km` record how the fraction was derived.
struct Interconnector {
    std::string id;
    std::string endpoint_a;
    std::string endpoint_b;
    double capacity_mw = 0.0;
    double loss_fraction = 0.0;
    std::optional<double> length_km;
    std::optional<double> loss_rate_per_100km;

    bool operator==(const Interconnector&) const = default;
};

struct CapacityPoint {
    Timestep timestep = 0;
    double x_max = 0.0;  // MW

    bool operator==(const CapacityPoint&) const = default;
};

struct CapacityProfile {
    std::string interconnector_id;
    std::vector<CapacityPoint> steps;

    std::optional<double> x_max_at(Timestep t) const;

    bool operator==(const CapacityProfile&) const = default;
};

// Inclusive range of timesteps [first, last]. Empty when last < first.
struct Horizon {
    Timestep first = 0;
    Timestep last = -1;

    bool empty() const noexcept { return last < first; }
    std::size_t size() const noexcept { return empty() ? 0 : static_cast<std::size_t>(last - first + 1); }
    bool operator==(const Horizon&) const = default;
};

using PriceSet = std::map<std::string, PriceSeries>;

struct Network {
    std::vector<Region> regions;
    std::vector<Interconnector> interconnectors;
    PriceSet price_series;  // keyed by region id

    const Region* find_region(const std::string& id) const;
    const Interconnector* find_interconnector(const std::string& id) const;
    const PriceSeries* prices_for(const std::string& region_id) const;

    bool operator==(const Network&) const = default;
};

struct Violation {
    std::string entity_id;
    std::string message;

    bool operator==(const Violation&) const = default;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
    std::string to_string() const;
};

// Linear loss model: length_km * rate / 100. Throws DomainError on negative
// length, a rate outside [0, 1), or a result that would reach 1.
double loss_from_length(double length_km, double loss_rate_per_100km);

// Lists every broken invariant; never throws. When `horizon` is given every
// region touched by a link must have a price at each of its timesteps.
// `require_prices = false` skips price coverage (structure only).
ValidationReport validate_network(const Network& network,
                                  std::optional<Horizon> horizon = std::nullopt,
                                  bool require_prices = true);

ValidationReport validate_price_series(const PriceSeries& series);
ValidationReport validate_capacity_profile(const CapacityProfile& profile);

// Smallest horizon spanning all steps of the given series; empty if none.
Horizon span_of(const PriceSeries& series);

CapacityProfile constant_capacity(const Interconnector& link, Horizon horizon);

}  // namespace hvdc
