#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nqs/channels.hpp"
#include "nqs/measures.hpp"
#include "nqs/protection.hpp"

namespace nqs {

// Two-qubit labels accepted by sweep, table, optimize and surface.
std::vector<std::string> two_qubit_labels();
// Additional single-qudit and reference labels accepted by dwf.
std::vector<std::string> dwf_labels();

// Throws std::invalid_argument listing the valid labels.
DensityMatrix initial_state(const std::string& label);

// Operating points reported for the Chapter 4 figures; empty for labels
// without one.
std::optional<FilterStrengths> paper_filter_point(const std::string& label);

struct SweepConfig {
    std::string state = "ns1";
    ChannelSpec channel = Identity{};
    double t_start = 0.0;
    double t_end = 10.0;
    int t_steps = 101;
    std::optional<FilterStrengths> strengths;
    bool auto_pq = false;              // optimize (p, q) at t = 0 first
    std::vector<std::string> measures;  // empty means every report column
    DiscordOptions discord;

    void validate() const;
};

struct SweepResult {
    std::vector<double> times;
    std::vector<CorrelationReport> reports;
    FilterStrengths strengths;  // what was applied (0, 0 when filters are off)
    std::vector<std::string> measures;
};

std::vector<double> time_points(double t_start, double t_end, int steps);

SweepResult run_sweep(const SweepConfig& config);
// Columns: t, the requested measures in report order, p_succ.
std::string sweep_csv(const SweepResult& result);

struct HierarchyEntry {
    std::string measure;
    bool ascending;  // fidelity deviation ranks low to high
    std::vector<std::string> order;  // state labels, best first
    std::vector<std::string> relations;  // between neighbours: ">", "<" or "≈"
    std::vector<std::optional<double>> values;  // indexed like hierarchy_states()
    std::string ordering() const;  // e.g. "ns3p>phi+≈ns1>ns2"
};

struct HierarchyTable {
    std::string channel;
    double reference_t;
    bool filters;
    std::vector<HierarchyEntry> entries;
};

// ns1, ns2, ns3p, phi+
std::vector<std::string> hierarchy_states();
std::vector<std::string> hierarchy_measures();
constexpr double kOrderingMargin = 1e-3;

HierarchyTable run_table(const ChannelSpec& channel, double reference_t, bool filters_on,
                         const DiscordOptions& discord = {});
std::string hierarchy_csv(const std::vector<HierarchyTable>& tables);

std::string run_surface(const std::string& state, const ChannelSpec& channel, double t, double step);

struct OptimizeRequest {
    std::vector<std::string> states;
    OptimizeOptions options;
};
std::string run_optimize(const OptimizeRequest& request);

struct DwfConfig {
    std::string state = "qubit-ns1";
    ChannelSpec channel = Identity{};
    double t_start = 0.0;
    double t_end = 0.0;
    int t_steps = 1;
    std::string net;  // empty picks the default net for the state dimension
};

// Columns t, w_<q>_<p> for every grid point (1-based), sum. A collapsed
// time range gives a single row.
std::string run_dwf(const DwfConfig& config);

}  // namespace nqs
