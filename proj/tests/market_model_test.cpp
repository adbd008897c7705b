#include <gtest/gtest.h>

#include <random>

#include "hvdc/data_io.hpp"
#include "hvdc/errors.hpp"
#include "hvdc/market_model.hpp"

using namespace hvdc;

namespace {

Network small_network() {
    Network n;
    n.regions = {{"A", "Alpha"}, {"B", "Beta"}};
    n.interconnectors = {{"ab", "A", "B", 100.0, 0.05, std::nullopt, std::nullopt}};
    n.price_series["A"] = {"A", {{1, 10.0}, {2, 20.0}}};
    n.price_series["B"] = {"B", {{1, 15.0}, {2, 5.0}}};
    return n;
}

}  // namespace

TEST(LossFromLength, TableValues) {
    EXPECT_DOUBLE_EQ(loss_from_length(63.5, 0.01), 0.00635);
    EXPECT_DOUBLE_EQ(loss_from_length(575, 0.01), 0.0575);
    EXPECT_EQ(loss_from_length(0, 0.01), 0.0);
}

TEST(LossFromLength, RejectsTotalLoss) {
    EXPECT_THROW(loss_from_length(10000, 0.01), DomainError);
    EXPECT_THROW(loss_from_length(20000, 0.01), DomainError);
    EXPECT_THROW(loss_from_length(-1, 0.01), DomainError);
    EXPECT_THROW(loss_from_length(10, 1.0), DomainError);
    EXPECT_THROW(loss_from_length(10, -0.1), DomainError);
}

TEST(LossFromLength, IsLinearInLength) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> len(0.0, 4000.0), rate(0.0, 0.012);
    for (int k = 0; k < 10000; ++k) {
        const double a = len(rng), b = len(rng), rho = rate(rng);
        if (!((a + b) * rho / 100.0 < 0.99)) continue;
        EXPECT_NEAR(loss_from_length(a + b, rho), loss_from_length(a, rho) + loss_from_length(b, rho), 1e-12);
    }
}

TEST(ValidateNetwork, BundledIrishNetworkIsClean) {
    const Network n = load_network(std::filesystem::path(HVDC_TEST_DATA_DIR) / "ireland" / "network.json");
    const auto report = validate_network(n, Horizon{1, 1});
    EXPECT_TRUE(report.ok()) << report.to_string();
    EXPECT_EQ(n.regions.size(), 5u);
    EXPECT_EQ(n.interconnectors.size(), 4u);
}

TEST(ValidateNetwork, LossOfOneIsOneViolation) {
    auto n = small_network();
    n.interconnectors[0].loss_fraction = 1.0;
    const auto report = validate_network(n);
    ASSERT_EQ(report.violations.size(), 1u);
    EXPECT_EQ(report.violations[0].entity_id, "ab");
}

TEST(ValidateNetwork, UnknownRegionIsOneViolation) {
    auto n = small_network();
    n.interconnectors[0].endpoint_b = "ZZ";
    const auto report = validate_network(n);
    ASSERT_EQ(report.violations.size(), 1u);
    EXPECT_EQ(report.violations[0].entity_id, "ab");
}

TEST(ValidateNetwork, ReportsEachBrokenInvariant) {
    auto n = small_network();
    n.regions.push_back({"A", "dup"});
    n.interconnectors.push_back({"aa", "A", "A", -5.0, 0.1, std::nullopt, std::nullopt});
    n.price_series["B"].steps = {{2, 1.0}, {1, 2.0}};
    const auto report = validate_network(n);
    std::set<std::string> ids;
    for (const auto& v : report.violations) ids.insert(v.entity_id);
    EXPECT_EQ(report.violations.size(), 4u) << report.to_string();
    EXPECT_TRUE(ids.count("A") && ids.count("aa") && ids.count("B"));
}

TEST(ValidateNetwork, HorizonCoverage) {
    auto n = small_network();
    EXPECT_TRUE(validate_network(n, Horizon{1, 2}).ok());
    const auto report = validate_network(n, Horizon{1, 3});
    EXPECT_EQ(report.violations.size(), 2u);
    n.price_series.erase("B");
    EXPECT_FALSE(validate_network(n).ok());
}

TEST(ValidateNetwork, NegativePricesAreAdmitted) {
    auto n = small_network();
    n.price_series["A"].steps[0].price = -80.0;
    EXPECT_TRUE(validate_network(n).ok());
    n.price_series["A"].steps[0].price = std::numeric_limits<double>::quiet_NaN();
    EXPECT_FALSE(validate_network(n).ok());
}

TEST(PriceSeries, LookupByTimestep) {
    const PriceSeries s{"A", {{3, 1.5}, {7, -2.0}, {9, 4.0}}};
    EXPECT_EQ(s.price_at(7), -2.0);
    EXPECT_FALSE(s.price_at(8));
    EXPECT_EQ(span_of(s), (Horizon{3, 9}));
    EXPECT_TRUE(span_of(PriceSeries{"A", {}}).empty());
}

TEST(CapacityProfile, ConstantProfileCoversHorizon) {
    const Interconnector link{"l", "A", "B", 700.0, 0.0575, std::nullopt, std::nullopt};
    const auto p = constant_capacity(link, {4, 6});
    ASSERT_EQ(p.steps.size(), 3u);
    EXPECT_EQ(p.x_max_at(5), 700.0);
    EXPECT_TRUE(validate_capacity_profile(p).ok());
    EXPECT_FALSE(validate_capacity_profile({"l", {{1, -1.0}}}).ok());
}
