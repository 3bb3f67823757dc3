// cli_io.hpp
// Run configuration, rate-spec parsing, CSV trajectory output and the JSON
// report used by the qloss command-line tool.

#pragma once

#include "qloss/witness.hpp"

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qloss {

/// Parses const:<a>, sin:<a>,<w>, dcos:<a>,<b>,<w> or table:<path>. A table
/// file holds two comma-separated columns (t, gamma); a non-numeric first line
/// is treated as a header. Throws std::invalid_argument on malformed input.
RateFunction parse_rate_spec(const std::string& spec);

/// Splits a comma-joined list of rate specs. A token with a "kind:" prefix
/// starts a new spec and bare numbers continue the previous one, so
/// "sin:1,2,const:3" yields two specs.
std::vector<std::string> split_rate_list(const std::string& list);

struct RunConfig {
    std::string model;                     // dephasing | amplitude-damping | pauli
    std::vector<std::string> rates;        // one for dephasing, three for pauli
    double lambda = 0.0;
    double gamma0 = 0.0;
    std::optional<double> t_max;           // default 20 / max rate
    std::size_t steps = 2001;
    double deriv_threshold = default_deriv_threshold;
    std::string out = "trajectory.csv";    // "-" for stdout
    std::string report = "report.json";    // "-" for stdout

    /// Throws std::invalid_argument when the config cannot describe a run.
    void check() const;
};

ChannelModel build_channel(const RunConfig& config);

/// 20 / max rate, or 20 for a rate-free channel.
double default_t_max(const ChannelModel& channel);

/// Locale-independent, 12 significant digits.
std::string format_number(double value);

inline constexpr const char* csv_header = "t,L_Q,S_e,I_c,I_mutual,N_Q,dLQ_dt";

void write_trajectory_csv(std::ostream& out, const Trajectory& traj);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

/// Reads a file written by write_trajectory_csv; throws std::invalid_argument
/// on a different header or malformed rows.
CsvTable read_trajectory_csv(std::istream& in);

nlohmann::json channel_params(const ChannelModel& channel);

nlohmann::json report_json(const ChannelModel& channel, double t_max, std::size_t steps,
                           const NonMarkovReport& report);

/// Empty when `doc` matches the report schema, otherwise a list of problems.
std::vector<std::string> report_schema_errors(const nlohmann::json& doc);

}  // namespace qloss
