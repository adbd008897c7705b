#include "commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "hvdc/data_io.hpp"
#include "hvdc/errors.hpp"
#include "hvdc/format.hpp"
#include "hvdc/horizon_scheduler.hpp"
#include "hvdc/report.hpp"
#include "hvdc/wheeling.hpp"

#ifndef HVDC_DEFAULT_DATA_DIR
#define HVDC_DEFAULT_DATA_DIR "data"
#endif

namespace hvdc::cli {

std::filesystem::path data_directory() {
    if (const char* env = std::getenv("HVDC_DATA_DIR"); env && *env) return env;
    return HVDC_DEFAULT_DATA_DIR;
}

namespace {

constexpr const char* kCaseStudy = "ireland";

struct RunConfig {
    std::string network_path;
    std::string prices_path;
    std::string capacities_path;
    double bias = 0.0;
    double duration_h = 1.0;
    std::optional<Timestep> from;
    std::optional<Timestep> to;
    std::string out_path;
    std::string format = "csv";
};

struct Inputs {
    Network network;
    std::map<std::string, CapacityProfile> capacities;
    std::optional<CaseStudyBundle> bundle;  // set when running on the bundled case study unchanged
};

void add_common(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--network", cfg.network_path, "Network config (JSON); defaults to the bundled Irish case study");
    cmd->add_option("--prices", cfg.prices_path, "Price CSV (timestep,region_id,price_eur_mwh); overrides the config");
    cmd->add_option("--capacities", cfg.capacities_path,
                    "Dynamic capacity CSV (timestep,link_id,x_max_mw); links not listed use their rating");
    cmd->add_option("--bias", cfg.bias,
                    "Minimum margin R_b in EUR/MWh a trade must clear (default 0). Dispatch is linear in the "
                    "quantity, so without a bias the link swings between idle and full capacity on any "
                    "positive spread; a bias suppresses low-return trades")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--duration-hours", cfg.duration_h, "Length of one timestep in hours (default 1)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--from", cfg.from, "First timestep of the horizon");
    cmd->add_option("--to", cfg.to, "Last timestep of the horizon");
    cmd->add_option("--out", cfg.out_path, "Write the report to this file");
    cmd->add_option("--format", cfg.format, "Report format: csv or structured")
        ->check(CLI::IsMember({"csv", "structured"}));
}

Inputs load_inputs(const RunConfig& cfg) {
    Inputs in;
    const bool bundled = cfg.network_path.empty();
    if (bundled) {
        in.bundle = load_case_study(data_directory() / kCaseStudy);
        in.network = in.bundle->network;
    } else {
        in.network = load_network(std::filesystem::path(cfg.network_path));
    }
    if (!cfg.prices_path.empty()) {
        in.network.price_series = load_prices(std::filesystem::path(cfg.prices_path));
        auto report = validate_network(in.network);
        if (!report.ok()) throw ValidationError("invalid network:\n" + report.to_string());
    }
    if (!cfg.capacities_path.empty()) {
        in.capacities = load_capacities(std::filesystem::path(cfg.capacities_path));
        for (const auto& [id, profile] : in.capacities)
            if (!in.network.find_interconnector(id)) throw ResolutionError("capacity given for unknown link '" + id + "'");
    }
    if (!cfg.prices_path.empty() || !cfg.capacities_path.empty()) in.bundle.reset();
    return in;
}

Horizon full_span(const Network& network) {
    Horizon h;
    bool any = false;
    for (const auto& [id, series] : network.price_series) {
        if (series.steps.empty()) continue;
        const Horizon s = span_of(series);
        h = any ? Horizon{std::min(h.first, s.first), std::max(h.last, s.last)} : s;
        any = true;
    }
    return h;
}

Horizon resolve_horizon(const RunConfig& cfg, const Network& network) {
    Horizon h = full_span(network);
    if (cfg.from) h.first = *cfg.from;
    if (cfg.to) h.last = *cfg.to;
    return h;
}

ScheduleOptions options_for(const RunConfig& cfg, const Network& network) {
    return {BiasPolicy{cfg.bias}, cfg.duration_h, resolve_horizon(cfg, network)};
}

// Bundled figures are one-hour, unbiased, full-horizon values.
bool comparable_to_bundle(const Inputs& in, const RunConfig& cfg) {
    return in.bundle && cfg.bias == 0.0 && cfg.duration_h == 1.0 && !cfg.from && !cfg.to;
}

void emit(const RunConfig& cfg, std::ostream& out, const std::function<void(std::ostream&)>& write) {
    if (cfg.out_path.empty()) {
        write(out);
        return;
    }
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) throw ResolutionError("cannot open " + cfg.out_path + " for writing");
    write(file);
    if (!file) throw Error("failed writing " + cfg.out_path);
}

std::string flow_label(const Interconnector& link, Direction d) {
    switch (d) {
        case Direction::AToB: return link.endpoint_a + " -> " + link.endpoint_b;
        case Direction::BToA: return link.endpoint_b + " -> " + link.endpoint_a;
        case Direction::Idle: break;
    }
    return "idle";
}

int cmd_evaluate(const RunConfig& cfg, const std::string& link_id, std::optional<Timestep> timestep,
                 std::ostream& out) {
    const Inputs in = load_inputs(cfg);
    const auto* link = in.network.find_interconnector(link_id);
    if (!link) throw ResolutionError("unknown link '" + link_id + "'");
    const auto* pa = in.network.prices_for(link->endpoint_a);
    const auto* pb = in.network.prices_for(link->endpoint_b);
    const Timestep t = timestep.value_or(full_span(in.network).first);

    ScheduleOptions opts{BiasPolicy{cfg.bias}, cfg.duration_h, Horizon{t, t}};
    auto it = in.capacities.find(link->id);
    const CapacityProfile capacity = it != in.capacities.end() ? it->second : constant_capacity(*link, {t, t});
    const Schedule s = schedule_link(*pa, *pb, *link, capacity, opts);
    const FlowDecision& d = s.decisions.front();

    out << "link " << link->id << " (" << link->endpoint_a << " <-> " << link->endpoint_b << "), timestep " << t
        << '\n';
    out << "  direction       " << to_string(d.direction) << " (" << flow_label(*link, d.direction) << ")\n";
    out << "  quantity_mw     " << format_number(d.quantity_mw) << '\n';
    out << "  lambda_eur_mwh  " << format_number(d.marginal_value) << '\n';
    out << "  profit_eur      " << format_cents(d.profit) << '\n';
    return kOk;
}

int cmd_schedule(const RunConfig& cfg, const std::vector<std::string>& only_links, bool plot, std::ostream& out) {
    Inputs in = load_inputs(cfg);
    Network network = in.network;
    if (!only_links.empty()) {
        network.interconnectors.clear();
        for (const auto& id : only_links) {
            const auto* link = in.network.find_interconnector(id);
            if (!link) throw ResolutionError("unknown link '" + id + "'");
            network.interconnectors.push_back(*link);
        }
    }
    const PortfolioResult result = schedule_portfolio(network, in.capacities, options_for(cfg, network));

    if (plot) {
        emit(cfg, out, [&](std::ostream& os) { write_plot_data(os, result); });
        return kOk;
    }

    const auto format = parse_report_format(cfg.format);
    std::vector<ExpectedValue> expected;
    if (comparable_to_bundle(in, cfg) && only_links.empty()) expected = in.bundle->expected;
    if (!cfg.out_path.empty()) emit(cfg, out, [&](std::ostream& os) { write_report(os, result, format, expected); });

    for (const auto& s : result.schedules)
        out << std::left << std::setw(12) << s.interconnector_id << format_cents(s.total_profit) << " EUR\n";
    out << "grand total " << format_cents(result.grand_total) << " EUR\n";
    out << "annualized  " << format_cents(result.annualized) << " EUR (mean hourly profit x 8760)\n";

    if (comparable_to_bundle(in, cfg)) {
        for (const auto& s : result.schedules) {
            const auto* e = in.bundle->find_expected(s.interconnector_id);
            if (e && e->published_eur && *e->published_eur != s.total_profit)
                out << "note: " << s.interconnector_id << " computes to " << format_cents(s.total_profit)
                    << " EUR; published figure is " << format_cents(*e->published_eur) << " EUR (delta "
                    << format_cents(s.total_profit - *e->published_eur) << ")\n";
        }
    }
    return kOk;
}

struct WheelArgs {
    std::vector<std::string> areas;
    std::vector<std::string> links;
    double transit_loss = 0.0;
    std::optional<Timestep> timestep;
    double quantity = 0.0;
};

int cmd_wheel(const RunConfig& cfg, const WheelArgs& w, std::ostream& out) {
    const Inputs in = load_inputs(cfg);
    if (w.areas.size() != 3) throw ResolutionError("--areas needs exactly three region ids");
    if (w.links.size() != 2) throw ResolutionError("--links needs exactly two link ids");
    const WheelingChain chain =
        resolve_chain(in.network, w.areas[0], w.areas[1], w.areas[2], w.links[0], w.links[1], w.transit_loss);
    const Timestep t = w.timestep.value_or(full_span(in.network).first);

    WheelPrices prices;
    double* slots[] = {&prices.p1, &prices.p2, &prices.p3};
    for (std::size_t k = 0; k < 3; ++k) {
        const auto* series = in.network.prices_for(w.areas[k]);
        const auto p = series ? series->price_at(t) : std::nullopt;
        if (!p) throw AlignmentError("no price for " + w.areas[k] + " at timestep " + std::to_string(t), {t});
        *slots[k] = *p;
    }

    const auto [forward, reverse] = evaluate_wheel(chain, prices, w.quantity, cfg.duration_h);
    const std::vector<TimedWheelingResult> rows{{t, forward}, {t, reverse}};
    if (!cfg.out_path.empty())
        emit(cfg, out, [&](std::ostream& os) { write_report(os, std::span(rows), parse_report_format(cfg.format)); });

    out << "wheeling " << chain.area1 << " - " << chain.area2 << " - " << chain.area3 << " via " << chain.link12.id
        << " (r1=" << format_number(chain.link12.loss_fraction) << ") and " << chain.link23.id
        << " (r2=" << format_number(chain.link23.loss_fraction) << "), c=" << format_number(chain.transit_loss_c)
        << ", timestep " << t << ", x=" << format_number(w.quantity) << " MW\n";
    for (const auto& r : {forward, reverse}) {
        const bool fwd = r.scenario == WheelScenario::S123;
        out << "  " << to_string(r.scenario) << " (" << (fwd ? chain.area1 : chain.area3) << " -> " << chain.area2
            << " -> " << (fwd ? chain.area3 : chain.area1) << ")  gates (" << format_number(r.gates.a) << ", "
            << format_number(r.gates.b) << ")  " << (r.feasible ? "feasible" : "infeasible") << "  quantity "
            << format_number(r.quantity_mw) << " MW  profit " << format_cents(r.profit) << " EUR\n";
    }
    return kOk;
}

int cmd_case_ireland(const RunConfig& cfg, std::ostream& out) {
    const CaseStudyBundle bundle = load_case_study(data_directory() / kCaseStudy);
    const PortfolioResult result = schedule_portfolio(bundle.network, {}, {});

    if (!cfg.out_path.empty())
        emit(cfg, out, [&](std::ostream& os) {
            write_report(os, result, parse_report_format(cfg.format), bundle.expected);
        });

    auto row = [&](const std::string& key, double computed) {
        const auto* e = bundle.find_expected(key);
        const std::string published = e && e->published_eur ? format_cents(*e->published_eur) : "-";
        const std::string check = e ? format_cents(e->recomputed_eur) : "-";
        std::string status = "match";
        if (e && computed != e->recomputed_eur) status = "MISMATCH vs independent check";
        else if (!e || !e->published_eur) status = "no published figure";
        else if (computed != *e->published_eur)
            status = "differs from published by " + format_cents(computed - *e->published_eur);
        out << std::left << std::setw(12) << key << std::right << std::setw(16) << format_cents(computed)
            << std::setw(16) << published << std::setw(16) << check << "  " << status << '\n';
    };

    out << "Irish interconnector case study: one hour, prices IE 100 / SCT 120 / WLS 75 / FR 50 EUR/MWh\n";
    out << std::left << std::setw(12) << "link" << std::right << std::setw(16) << "computed" << std::setw(16)
        << "published" << std::setw(16) << "independent" << "  status\n";
    for (const auto& s : result.schedules) row(s.interconnector_id, s.total_profit);
    row("total", result.grand_total);
    row("annualized", result.annualized);
    for (const auto& e : bundle.expected)
        if (!e.note.empty()) out << "  [" << e.key << "] " << e.note << '\n';
    out << "annualized income " << (result.annualized > 525e6 ? "exceeds" : "does not exceed")
        << " 525 million EUR\n";
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Profit-maximizing dispatch of lossy HVDC interconnectors between market areas", "hvdc-arb"};
    app.require_subcommand(1);

    RunConfig cfg;

    auto* evaluate = app.add_subcommand("evaluate", "Best flow of one link at one timestep");
    add_common(evaluate, cfg);
    std::string link_id;
    std::optional<Timestep> timestep;
    evaluate->add_option("link", link_id, "Link id")->required();
    evaluate->add_option("--timestep,-t", timestep, "Timestep (default: first available)");

    auto* schedule = app.add_subcommand("schedule", "Dispatch every link over the horizon and total the profit");
    add_common(schedule, cfg);
    std::vector<std::string> only_links;
    schedule->add_option("--link", only_links, "Restrict to these link ids (repeatable)");

    auto* wheel = app.add_subcommand("wheel", "Evaluate 3-area wheeling in both directions");
    add_common(wheel, cfg);
    WheelArgs w;
    wheel->add_option("--areas", w.areas, "Three region ids: area1,area2,area3")->delimiter(',')->required();
    wheel->add_option("--links", w.links, "Two link ids: area1-area2,area2-area3")->delimiter(',')->required();
    wheel->add_option("--transit-loss,-c", w.transit_loss, "Transmission loss fraction inside area2")
        ->check(CLI::Range(0.0, 1.0));
    wheel->add_option("--timestep,-t", w.timestep, "Timestep (default: first available)");
    wheel->add_option("--quantity,-x", w.quantity, "MW injected at the origin")->required()->check(CLI::NonNegativeNumber);

    auto* case_ireland = app.add_subcommand("case-ireland", "Reproduce the bundled Irish case study");
    case_ireland->add_option("--out", cfg.out_path, "Also write a report to this file");
    case_ireland->add_option("--format", cfg.format, "Report format: csv or structured")
        ->check(CLI::IsMember({"csv", "structured"}));

    auto* plot_data = app.add_subcommand("plot-data", "Long-format CSV of lambda, dispatch and cumulative profit");
    add_common(plot_data, cfg);
    plot_data->add_option("--link", only_links, "Restrict to these link ids (repeatable)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*evaluate) return cmd_evaluate(cfg, link_id, timestep, out);
        if (*schedule) return cmd_schedule(cfg, only_links, false, out);
        if (*plot_data) return cmd_schedule(cfg, only_links, true, out);
        if (*wheel) return cmd_wheel(cfg, w, out);
        if (*case_ireland) return cmd_case_ireland(cfg, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const ValidationError& e) {
        err << "validation error: " << e.what() << '\n';
        return kValidation;
    } catch (const ResolutionError& e) {
        err << "resolution error: " << e.what() << '\n';
        return kResolution;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kDomain;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kDomain;
    }
    return kUsage;
}

}  // namespace hvdc::cli
