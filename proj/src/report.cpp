#include "hvdc/report.hpp"

#include <ostream>
#include <string>

#include <json.hpp>

#include "hvdc/errors.hpp"
#include "hvdc/format.hpp"

namespace hvdc {

using json = nlohmann::ordered_json;

namespace {

constexpr std::string_view kScheduleHeader = "timestep,link_id,direction,quantity_mw,lambda_eur_mwh,profit_eur";
constexpr std::string_view kWheelHeader =
    "timestep,scenario,feasible,gate_a_eur_mwh,gate_b_eur_mwh,quantity_mw,profit_eur";

void csv_rows(std::ostream& out, const Schedule& s) {
    for (const auto& d : s.decisions)
        out << d.timestep << ',' << s.interconnector_id << ',' << to_string(d.direction) << ','
            << format_number(d.quantity_mw) << ',' << format_number(d.marginal_value) << ','
            << format_number(d.profit) << '\n';
}

json to_json(const Schedule& s) {
    json j;
    j["link_id"] = s.interconnector_id;
    j["total_profit_eur"] = s.total_profit;
    j["decisions"] = json::array();
    for (const auto& d : s.decisions)
        j["decisions"].push_back({{"timestep", d.timestep},
                                  {"direction", to_string(d.direction)},
                                  {"quantity_mw", d.quantity_mw},
                                  {"lambda_eur_mwh", d.marginal_value},
                                  {"profit_eur", d.profit}});
    return j;
}

}  // namespace

ReportFormat parse_report_format(std::string_view text) {
    if (text == "csv") return ReportFormat::Csv;
    if (text == "structured") return ReportFormat::Structured;
    throw ParseError("unknown report format '" + std::string(text) + "' (expected csv or structured)", 0);
}

void write_report(std::ostream& out, const Schedule& schedule, ReportFormat format) {
    if (format == ReportFormat::Csv) {
        out << kScheduleHeader << '\n';
        csv_rows(out, schedule);
        return;
    }
    out << to_json(schedule).dump(2) << '\n';
}

void write_report(std::ostream& out, const PortfolioResult& result, ReportFormat format,
                  std::span<const ExpectedValue> expected) {
    if (format == ReportFormat::Csv) {
        out << kScheduleHeader << '\n';
        for (const auto& s : result.schedules) csv_rows(out, s);
        return;
    }
    json doc;
    doc["schedules"] = json::array();
    for (const auto& s : result.schedules) doc["schedules"].push_back(to_json(s));
    doc["grand_total_eur"] = result.grand_total;
    doc["annualized_eur"] = result.annualized;
    if (!expected.empty()) {
        doc["expected"] = json::array();
        for (const auto& e : expected) {
            json j;
            j["key"] = e.key;
            j["description"] = e.description;
            j["published_eur"] = e.published_eur ? json(*e.published_eur) : json(nullptr);
            j["recomputed_eur"] = e.recomputed_eur;
            if (!e.note.empty()) j["note"] = e.note;
            doc["expected"].push_back(std::move(j));
        }
    }
    out << doc.dump(2) << '\n';
}

void write_report(std::ostream& out, std::span<const TimedWheelingResult> results, ReportFormat format) {
    if (format == ReportFormat::Csv) {
        out << kWheelHeader << '\n';
        for (const auto& [t, r] : results)
            out << t << ',' << to_string(r.scenario) << ',' << (r.feasible ? "true" : "false") << ','
                << format_number(r.gates.a) << ',' << format_number(r.gates.b) << ',' << format_number(r.quantity_mw)
                << ',' << format_number(r.profit) << '\n';
        return;
    }
    json doc = json::array();
    for (const auto& [t, r] : results)
        doc.push_back({{"timestep", t},
                       {"scenario", to_string(r.scenario)},
                       {"feasible", r.feasible},
                       {"gates_eur_mwh", {r.gates.a, r.gates.b}},
                       {"quantity_mw", r.quantity_mw},
                       {"profit_eur", r.profit}});
    out << doc.dump(2) << '\n';
}

void write_plot_data(std::ostream& out, const PortfolioResult& result) {
    out << "link_id,timestep,lambda_eur_mwh,quantity_mw,cumulative_profit_eur\n";
    for (const auto& s : result.schedules) {
        double cumulative = 0.0;
        for (const auto& d : s.decisions) {
            cumulative += d.profit;
            out << s.interconnector_id << ',' << d.timestep << ',' << format_number(d.marginal_value) << ','
                << format_number(d.quantity_mw) << ',' << format_number(cumulative) << '\n';
        }
    }
}

}  // namespace hvdc
