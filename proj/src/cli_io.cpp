#include "qloss/cli_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qloss {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

std::optional<double> to_double(std::string_view text) {
    const auto s = trim(text);
    if (s.empty()) return std::nullopt;
    const char* begin = s.data();
    if (*begin == '+') ++begin;
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(begin, s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        parts.emplace_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

std::vector<double> parse_numbers(const std::string& spec, std::string_view args, std::size_t expected) {
    const auto parts = split(args, ',');
    if (parts.size() != expected) {
        std::ostringstream msg;
        msg << "rate spec '" << spec << "': expected " << expected << " number(s), got " << parts.size();
        throw std::invalid_argument(msg.str());
    }
    std::vector<double> values;
    for (const auto& p : parts) {
        auto v = to_double(p);
        if (!v || !std::isfinite(*v)) throw std::invalid_argument("rate spec '" + spec + "': bad number '" + p + "'");
        values.push_back(*v);
    }
    return values;
}

RateFunction load_rate_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open rate table '" + path + "'");
    std::vector<std::pair<double, double>> samples;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto cols = split(line, ',');
        auto t = cols.size() == 2 ? to_double(cols[0]) : std::nullopt;
        auto g = cols.size() == 2 ? to_double(cols[1]) : std::nullopt;
        if (!t || !g) {
            if (samples.empty() && line_no == 1) continue;  // header
            std::ostringstream msg;
            msg << "rate table '" << path << "' line " << line_no << ": expected two numbers";
            throw std::invalid_argument(msg.str());
        }
        samples.emplace_back(*t, *g);
    }
    auto rate = RateFunction::tabulated(std::move(samples));
    rate.set_source(path);
    return rate;
}

}  // namespace

RateFunction parse_rate_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("rate spec '" + spec + "' has no kind prefix");
    const auto kind = trim(std::string_view(spec).substr(0, colon));
    const auto args = std::string_view(spec).substr(colon + 1);
    if (kind == "const") {
        const auto v = parse_numbers(spec, args, 1);
        return RateFunction::constant(v[0]);
    }
    if (kind == "sin") {
        const auto v = parse_numbers(spec, args, 2);
        return RateFunction::sinusoid(v[0], v[1]);
    }
    if (kind == "dcos") {
        const auto v = parse_numbers(spec, args, 3);
        return RateFunction::damped_cosine(v[0], v[1], v[2]);
    }
    if (kind == "table") return load_rate_table(trim(args));
    throw std::invalid_argument("rate spec '" + spec + "': unknown kind '" + kind + "'");
}

std::vector<std::string> split_rate_list(const std::string& list) {
    std::vector<std::string> specs;
    for (const auto& token : split(list, ',')) {
        const bool starts_spec = token.find(':') != std::string::npos;
        if (starts_spec || specs.empty())
            specs.push_back(trim(token));
        else
            specs.back() += "," + trim(token);
    }
    return specs;
}

void RunConfig::check() const {
    if (model == "dephasing") {
        if (rates.size() != 1) throw std::invalid_argument("dephasing needs exactly one --rate");
    } else if (model == "pauli") {
        if (rates.size() != 3) throw std::invalid_argument("pauli needs exactly three rates in --rates");
    } else if (model == "amplitude-damping") {
        if (!(lambda > 0.0) || !(gamma0 > 0.0))
            throw std::invalid_argument("amplitude-damping needs --lambda > 0 and --gamma0 > 0");
    } else {
        throw std::invalid_argument("unknown model '" + model + "' (dephasing, amplitude-damping, pauli)");
    }
    if (steps < 3) throw std::invalid_argument("--steps must be at least 3");
    if (t_max && !(*t_max > 0.0)) throw std::invalid_argument("--t-max must be positive");
    if (!(deriv_threshold > 0.0)) throw std::invalid_argument("--threshold must be positive");
}

ChannelModel build_channel(const RunConfig& config) {
    config.check();
    if (config.model == "dephasing") return ChannelModel::dephasing(parse_rate_spec(config.rates[0]));
    if (config.model == "pauli")
        return ChannelModel::pauli(parse_rate_spec(config.rates[0]), parse_rate_spec(config.rates[1]),
                                   parse_rate_spec(config.rates[2]));
    return ChannelModel::amplitude_damping({config.lambda, config.gamma0});
}

double default_t_max(const ChannelModel& channel) {
    const double rate = channel.max_rate();
    const double t = rate > 0.0 && std::isfinite(rate) ? 20.0 / rate : 20.0;
    return std::min(t, channel.horizon());
}

std::string format_number(double value) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 12);
    return std::string(buf, end);
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
    out << csv_header << '\n';
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        const auto& s = traj.snapshots[i];
        out << format_number(traj.times[i]) << ',' << format_number(s.quantum_loss) << ','
            << format_number(s.s_exchange) << ',' << format_number(s.coherent_info) << ','
            << format_number(s.mutual_info) << ',' << format_number(s.quantum_noise) << ','
            << format_number(traj.loss_derivative[i]) << '\n';
    }
}

CsvTable read_trajectory_csv(std::istream& in) {
    CsvTable table;
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("trajectory CSV is empty");
    if (trim(line) != csv_header) throw std::invalid_argument("trajectory CSV: unexpected header '" + trim(line) + "'");
    table.header = split(trim(line), ',');
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        std::vector<double> row;
        for (const auto& cell : split(trim(line), ',')) {
            auto v = to_double(cell);
            if (!v) {
                std::ostringstream msg;
                msg << "trajectory CSV line " << line_no << ": bad number '" << cell << "'";
                throw std::invalid_argument(msg.str());
            }
            row.push_back(*v);
        }
        if (row.size() != table.header.size()) {
            std::ostringstream msg;
            msg << "trajectory CSV line " << line_no << ": expected " << table.header.size() << " columns";
            throw std::invalid_argument(msg.str());
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

nlohmann::json channel_params(const ChannelModel& channel) {
    nlohmann::json params = nlohmann::json::object();
    switch (channel.family()) {
    case ChannelModel::Family::dephasing:
        params["rate"] = std::get<DephasingModel>(channel.model()).rate.describe();
        break;
    case ChannelModel::Family::amplitude_damping: {
        const auto& bath = std::get<AmplitudeDampingModel>(channel.model()).bath;
        params["lambda"] = bath.lambda;
        params["gamma0"] = bath.gamma0;
        break;
    }
    case ChannelModel::Family::pauli: {
        auto rates = nlohmann::json::array();
        for (const auto& r : std::get<PauliModel>(channel.model()).rates) rates.push_back(r.describe());
        params["rates"] = rates;
        break;
    }
    case ChannelModel::Family::generic: {
        auto rates = nlohmann::json::array();
        for (const auto& term : std::get<GenericModel>(channel.model()).terms) rates.push_back(term.rate.describe());
        params["rates"] = rates;
        break;
    }
    }
    return params;
}

nlohmann::json report_json(const ChannelModel& channel, double t_max, std::size_t steps,
                           const NonMarkovReport& report) {
    nlohmann::json doc;
    doc["model"] = channel.name();
    doc["params"] = channel_params(channel);
    doc["t_max"] = t_max;
    doc["steps"] = steps;
    doc["measure"] = report.measure;
    doc["magnitude"] = report.magnitude;
    doc["markovian"] = report.markovian;
    doc["analytic_verdict"] = to_string(report.analytic);
    auto intervals = nlohmann::json::array();
    for (const auto& iv : report.intervals)
        intervals.push_back({{"start", iv.start}, {"end", iv.end}, {"drop", iv.drop}});
    doc["intervals"] = intervals;
    return doc;
}

std::vector<std::string> report_schema_errors(const nlohmann::json& doc) {
    std::vector<std::string> errors;
    if (!doc.is_object()) return {"report is not an object"};
    auto need = [&](const char* key, auto predicate, const char* type) {
        if (!doc.contains(key))
            errors.push_back(std::string("missing '") + key + "'");
        else if (!predicate(doc.at(key)))
            errors.push_back(std::string("'") + key + "' is not " + type);
    };
    need("model", [](const auto& v) { return v.is_string(); }, "a string");
    need("params", [](const auto& v) { return v.is_object(); }, "an object");
    need("t_max", [](const auto& v) { return v.is_number(); }, "a number");
    need("steps", [](const auto& v) { return v.is_number_integer(); }, "an integer");
    need("measure", [](const auto& v) { return v.is_number(); }, "a number");
    need("magnitude", [](const auto& v) { return v.is_number(); }, "a number");
    need("markovian", [](const auto& v) { return v.is_boolean(); }, "a boolean");
    need("analytic_verdict", [](const auto& v) { return v.is_string(); }, "a string");
    need("intervals", [](const auto& v) { return v.is_array(); }, "an array");
    if (doc.contains("intervals") && doc.at("intervals").is_array()) {
        for (const auto& iv : doc.at("intervals")) {
            for (const char* key : {"start", "end", "drop"})
                if (!iv.is_object() || !iv.contains(key) || !iv.at(key).is_number())
                    errors.push_back(std::string("interval entry lacks numeric '") + key + "'");
        }
    }
    if (doc.size() != 9) errors.push_back("unexpected extra keys");
    return errors;
}

}  // namespace qloss
