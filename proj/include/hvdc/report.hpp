#pragma once

#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "hvdc/data_io.hpp"
#include "hvdc/horizon_scheduler.hpp"
#include "hvdc/wheeling.hpp"

namespace hvdc {

enum class ReportFormat { Csv, Structured };

// Accepts "csv" and "structured"; throws ParseError otherwise.
ReportFormat parse_report_format(std::string_view text);

// CSV columns: timestep,link_id,direction,quantity_mw,lambda_eur_mwh,profit_eur
// Structured: JSON document with per-link decision ledgers and totals.
// Both are byte-stable for equal inputs.
void write_report(std::ostream& out, const Schedule& schedule, ReportFormat format);
void write_report(std::ostream& out, const PortfolioResult& result, ReportFormat format,
                  std::span<const ExpectedValue> expected = {});

struct TimedWheelingResult {
    Timestep timestep = 0;
    WheelingResult result;
};

// CSV columns: timestep,scenario,feasible,gate_a_eur_mwh,gate_b_eur_mwh,quantity_mw,profit_eur
void write_report(std::ostream& out, std::span<const TimedWheelingResult> results, ReportFormat format);

// Long-format plot data, one row per (link, timestep):
// link_id,timestep,lambda_eur_mwh,quantity_mw,cumulative_profit_eur
void write_plot_data(std::ostream& out, const PortfolioResult& result);

}  // namespace hvdc
