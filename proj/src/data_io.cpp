#include "hvdc/data_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <string_view>
#include <tuple>

#include <json.hpp>

#include "hvdc/errors.hpp"
#include "hvdc/format.hpp"

namespace hvdc {

using json = nlohmann::ordered_json;

std::string format_number(double v) {
    if (v == 0.0) return "0";  // folds -0
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string format_cents(double v) {
    char buf[64];
    double rounded = std::round(v * 100.0) / 100.0;
    if (rounded == 0.0) rounded = 0.0;
    std::snprintf(buf, sizeof buf, "%.2f", rounded);
    return buf;
}

namespace {

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ResolutionError("cannot open " + path.string());
    return in;
}

std::vector<std::string_view> split_csv(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (;;) {
        auto comma = line.find(',', start);
        fields.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return fields;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

Timestep parse_timestep(std::string_view text, std::size_t line) {
    text = trim(text);
    Timestep t = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), t);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
        throw ParseError("invalid timestep '" + std::string(text) + "'", line);
    if (t < 0) throw ParseError("negative timestep " + std::to_string(t), line);
    return t;
}

double parse_finite(std::string_view text, std::size_t line, const char* what) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
        throw ParseError(std::string("invalid ") + what + " '" + std::string(text) + "'", line);
    if (!std::isfinite(v)) throw ParseError(std::string(what) + " must be finite", line);
    return v;
}

// Reads a three-column CSV with the given header and hands each data row
// (1-based line number, fields) to `on_row`. Blank lines are skipped.
template <typename OnRow>
void read_csv(std::istream& in, std::string_view header, OnRow on_row) {
    std::string line;
    std::size_t line_no = 0;
    bool seen_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view = line;
        if (line_no == 1 && view.substr(0, 3) == "\xEF\xBB\xBF") view.remove_prefix(3);
        if (trim(view).empty()) continue;
        if (!seen_header) {
            if (trim(view) != header) throw ParseError("expected header '" + std::string(header) + "'", line_no);
            seen_header = true;
            continue;
        }
        auto fields = split_csv(view);
        if (fields.size() != 3) throw ParseError("expected 3 fields, got " + std::to_string(fields.size()), line_no);
        on_row(line_no, fields);
    }
    if (!seen_header) throw ParseError("missing header '" + std::string(header) + "'", line_no);
}

constexpr std::string_view kPriceHeader = "timestep,region_id,price_eur_mwh";
constexpr std::string_view kCapacityHeader = "timestep,link_id,x_max_mw";

}  // namespace

PriceSet load_prices(std::istream& in) {
    PriceSet prices;
    read_csv(in, kPriceHeader, [&](std::size_t line, const std::vector<std::string_view>& f) {
        const Timestep t = parse_timestep(f[0], line);
        const std::string region(trim(f[1]));
        if (region.empty()) throw ParseError("empty region_id", line);
        const double price = parse_finite(f[2], line, "price");
        auto& series = prices[region];
        series.region_id = region;
        if (!series.steps.empty()) {
            const Timestep prev = series.steps.back().timestep;
            if (t == prev || series.price_at(t))
                throw DuplicateError("duplicate row for timestep " + std::to_string(t) + ", region " + region, line);
            if (t < prev)
                throw ParseError("timestep " + std::to_string(t) + " for region " + region + " is not increasing", line);
        }
        series.steps.push_back({t, price});
    });
    return prices;
}

PriceSet load_prices(const std::filesystem::path& path) {
    auto in = open_input(path);
    return load_prices(in);
}

void write_prices(std::ostream& out, const PriceSet& prices) {
    std::vector<std::tuple<Timestep, const std::string*, double>> rows;
    for (const auto& [id, series] : prices)
        for (const auto& s : series.steps) rows.emplace_back(s.timestep, &id, s.price);
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        return std::tie(std::get<0>(a), *std::get<1>(a)) < std::tie(std::get<0>(b), *std::get<1>(b));
    });
    out << kPriceHeader << '\n';
    for (const auto& [t, id, price] : rows) out << t << ',' << *id << ',' << format_number(price) << '\n';
}

std::map<std::string, CapacityProfile> load_capacities(std::istream& in) {
    std::map<std::string, CapacityProfile> profiles;
    read_csv(in, kCapacityHeader, [&](std::size_t line, const std::vector<std::string_view>& f) {
        const Timestep t = parse_timestep(f[0], line);
        const std::string link(trim(f[1]));
        if (link.empty()) throw ParseError("empty link_id", line);
        const double x_max = parse_finite(f[2], line, "x_max_mw");
        if (x_max < 0.0) throw ParseError("x_max_mw must be >= 0", line);
        auto& profile = profiles[link];
        profile.interconnector_id = link;
        if (!profile.steps.empty()) {
            const Timestep prev = profile.steps.back().timestep;
            if (t == prev || profile.x_max_at(t))
                throw DuplicateError("duplicate row for timestep " + std::to_string(t) + ", link " + link, line);
            if (t < prev)
                throw ParseError("timestep " + std::to_string(t) + " for link " + link + " is not increasing", line);
        }
        profile.steps.push_back({t, x_max});
    });
    return profiles;
}

std::map<std::string, CapacityProfile> load_capacities(const std::filesystem::path& path) {
    auto in = open_input(path);
    return load_capacities(in);
}

void write_capacities(std::ostream& out, const std::map<std::string, CapacityProfile>& profiles) {
    std::vector<std::tuple<Timestep, const std::string*, double>> rows;
    for (const auto& [id, profile] : profiles)
        for (const auto& s : profile.steps) rows.emplace_back(s.timestep, &id, s.x_max);
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        return std::tie(std::get<0>(a), *std::get<1>(a)) < std::tie(std::get<0>(b), *std::get<1>(b));
    });
    out << kCapacityHeader << '\n';
    for (const auto& [t, id, x] : rows) out << t << ',' << *id << ',' << format_number(x) << '\n';
}

namespace {

void require_keys(const json& obj, const std::string& where, std::initializer_list<std::string_view> allowed) {
    if (!obj.is_object()) throw ParseError(where + " must be an object", 0);
    for (const auto& [key, _] : obj.items()) {
        bool known = false;
        for (auto a : allowed) known = known || key == a;
        if (!known) throw ParseError(where + ": unknown key '" + key + "'", 0);
    }
}

std::string get_string(const json& obj, const std::string& key, const std::string& where, bool required = true) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        if (required) throw ParseError(where + ": missing '" + key + "'", 0);
        return {};
    }
    if (!it->is_string()) throw ParseError(where + ": '" + key + "' must be a string", 0);
    return it->get<std::string>();
}

std::optional<double> get_number(const json& obj, const std::string& key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) return std::nullopt;
    if (!it->is_number()) throw ParseError(where + ": '" + key + "' must be a number", 0);
    return it->get<double>();
}

Interconnector parse_link(const json& j, std::size_t index) {
    const std::string where = "links[" + std::to_string(index) + "]";
    require_keys(j, where, {"id", "from", "to", "capacity_mw", "loss_fraction", "length_km", "loss_rate_per_100km"});
    Interconnector link;
    link.id = get_string(j, "id", where);
    link.endpoint_a = get_string(j, "from", where);
    link.endpoint_b = get_string(j, "to", where);
    const auto capacity = get_number(j, "capacity_mw", where);
    if (!capacity) throw ParseError(where + ": missing 'capacity_mw'", 0);
    link.capacity_mw = *capacity;
    link.length_km = get_number(j, "length_km", where);
    link.loss_rate_per_100km = get_number(j, "loss_rate_per_100km", where);
    const auto loss = get_number(j, "loss_fraction", where);

    if (link.loss_rate_per_100km && !link.length_km)
        throw ParseError(where + ": 'loss_rate_per_100km' needs 'length_km'", 0);
    std::optional<double> derived;
    if (link.length_km && link.loss_rate_per_100km) {
        try {
            derived = loss_from_length(*link.length_km, *link.loss_rate_per_100km);
        } catch (const DomainError& e) {
            throw ValidationError("link " + link.id + ": " + e.what());
        }
    }
    if (loss && derived && std::abs(*loss - *derived) > 1e-12)
        throw ConfigConflictError("link " + link.id + ": loss_fraction " + format_number(*loss) +
                                  " disagrees with length-derived " + format_number(*derived));
    if (!loss && !derived) throw ParseError(where + ": give 'loss_fraction' or 'length_km' + 'loss_rate_per_100km'", 0);
    link.loss_fraction = loss ? *loss : *derived;
    return link;
}

}  // namespace

Network load_network(std::istream& in, const std::filesystem::path& base_dir) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("network config: ") + e.what(), 0);
    }
    require_keys(doc, "network config", {"regions", "links", "prices"});

    Network network;
    const auto regions = doc.find("regions");
    if (regions == doc.end() || !regions->is_array()) throw ParseError("network config: 'regions' must be a list", 0);
    for (std::size_t k = 0; k < regions->size(); ++k) {
        const auto& r = (*regions)[k];
        const std::string where = "regions[" + std::to_string(k) + "]";
        require_keys(r, where, {"id", "name"});
        network.regions.push_back({get_string(r, "id", where), get_string(r, "name", where, false)});
    }

    if (auto links = doc.find("links"); links != doc.end()) {
        if (!links->is_array()) throw ParseError("network config: 'links' must be a list", 0);
        for (std::size_t k = 0; k < links->size(); ++k) network.interconnectors.push_back(parse_link((*links)[k], k));
    }

    const auto prices = doc.find("prices");
    if (prices != doc.end()) {
        if (!prices->is_string()) throw ParseError("network config: 'prices' must be a path string", 0);
        network.price_series = load_prices(base_dir / prices->get<std::string>());
    }

    auto report = validate_network(network, std::nullopt, prices != doc.end());
    if (!report.ok()) throw ValidationError("invalid network:\n" + report.to_string());
    return network;
}

Network load_network(const std::filesystem::path& path) {
    auto in = open_input(path);
    return load_network(in, path.parent_path());
}

void write_network(std::ostream& out, const Network& network, const std::optional<std::string>& prices_ref) {
    json doc;
    doc["regions"] = json::array();
    for (const auto& r : network.regions) doc["regions"].push_back({{"id", r.id}, {"name", r.name}});
    doc["links"] = json::array();
    for (const auto& l : network.interconnectors) {
        json j;
        j["id"] = l.id;
        j["from"] = l.endpoint_a;
        j["to"] = l.endpoint_b;
        j["capacity_mw"] = l.capacity_mw;
        j["loss_fraction"] = l.loss_fraction;
        if (l.length_km) j["length_km"] = *l.length_km;
        if (l.loss_rate_per_100km) j["loss_rate_per_100km"] = *l.loss_rate_per_100km;
        doc["links"].push_back(std::move(j));
    }
    if (prices_ref) doc["prices"] = *prices_ref;
    out << doc.dump(2) << '\n';
}

std::vector<ExpectedValue> load_expected(std::istream& in) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("expected values: ") + e.what(), 0);
    }
    if (!doc.is_array()) throw ParseError("expected values must be a list", 0);
    std::vector<ExpectedValue> out;
    for (std::size_t k = 0; k < doc.size(); ++k) {
        const auto& e = doc[k];
        const std::string where = "expected[" + std::to_string(k) + "]";
        require_keys(e, where, {"key", "description", "published_eur", "recomputed_eur", "note"});
        ExpectedValue v;
        v.key = get_string(e, "key", where);
        v.description = get_string(e, "description", where, false);
        v.note = get_string(e, "note", where, false);
        if (auto it = e.find("published_eur"); it != e.end() && !it->is_null()) v.published_eur = get_number(e, "published_eur", where);
        const auto recomputed = get_number(e, "recomputed_eur", where);
        if (!recomputed) throw ParseError(where + ": missing 'recomputed_eur'", 0);
        v.recomputed_eur = *recomputed;
        out.push_back(std::move(v));
    }
    return out;
}

const ExpectedValue* CaseStudyBundle::find_expected(const std::string& key) const {
    for (const auto& e : expected)
        if (e.key == key) return &e;
    return nullptr;
}

CaseStudyBundle load_case_study(const std::filesystem::path& directory) {
    CaseStudyBundle bundle;
    bundle.directory = directory;
    bundle.network = load_network(directory / "network.json");
    auto in = open_input(directory / "expected.json");
    bundle.expected = load_expected(in);
    return bundle;
}

}  // namespace hvdc
