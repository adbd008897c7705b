#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hvdc/market_model.hpp"

namespace hvdc {

// Price CSV: header `timestep,region_id,price_eur_mwh`, one row per
// (timestep, region). Rows of a region must have increasing timesteps.
// Throws ParseError (with 1-based line) or DuplicateError.
PriceSet load_prices(std::istream& in);
PriceSet load_prices(const std::filesystem::path& path);

// Rows sorted by timestep, then region id. Numbers use the shortest
// representation that reads back to the same double.
void write_prices(std::ostream& out, const PriceSet& prices);

// Capacity CSV: header `timestep,link_id,x_max_mw`.
std::map<std::string, CapacityProfile> load_capacities(std::istream& in);
std::map<std::string, CapacityProfile> load_capacities(const std::filesystem::path& path);
void write_capacities(std::ostream& out, const std::map<std::string, CapacityProfile>& profiles);

/// Network configuration (JSON):
///
///     {
///       "regions": [ {"id": "IE", "name": "Ireland"}, ... ],
///       "links": [
///         {"id": "moyle", "from": "IE", "to": "SCT", "capacity_mw": 500,
///          "loss_fraction": 0.00635},
///         {"id": "celtic", "from": "IE", "to": "FR", "capacity_mw": 700,
///          "length_km": 575, "loss_rate_per_100km": 0.01}
///       ],
///       "prices": "prices.csv"
///     }
///
/// A link gives `loss_fraction`, or `length_km` with `loss_rate_per_100km`,
/// or all three when they agree (1e-12). `length_km` alone next to
/// `loss_fraction` is kept as metadata. The optional `prices` path is
/// resolved against `base_dir`. The result is validated; any violation
/// throws ValidationError.
Network load_network(std::istream& in, const std::filesystem::path& base_dir = {});
Network load_network(const std::filesystem::path& path);

// Writes regions and links. `prices_ref`, when given, is stored as the
// "prices" entry; the price data itself goes through write_prices.
void write_network(std::ostream& out, const Network& network,
                   const std::optional<std::string>& prices_ref = std::nullopt);

// A published figure next to the value this library recomputes for it.
struct ExpectedValue {
    std::string key;          // link id, "total" or "annualized"
    std::string description;
    std::optional<double> published_eur;
    double recomputed_eur = 0.0;
    std::string note;

    bool operator==(const ExpectedValue&) const = default;
};

// Bundled one-hour Irish interconnector study.
struct CaseStudyBundle {
    Network network;
    std::vector<ExpectedValue> expected;
    std::filesystem::path directory;

    const ExpectedValue* find_expected(const std::string& key) const;
};

std::vector<ExpectedValue> load_expected(std::istream& in);

// Reads network.json (with its prices) and expected.json from `directory`.
CaseStudyBundle load_case_study(const std::filesystem::path& directory);

}  // namespace hvdc
