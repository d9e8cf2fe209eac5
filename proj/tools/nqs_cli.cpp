#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "nqs/csv.hpp"
#include "nqs/experiments.hpp"
#include "nqs/phase_space/wigner.hpp"

using nlohmann::json;
using namespace nqs;

namespace {

// Flags that were given on the command line win over the JSON config, which
// wins over the built-in defaults.
struct Inputs {
    json config = json::object();
    std::map<std::string, CLI::Option*> flags;  // keyed "scope.name"; scope "" is global
    std::string scope;

    CLI::Option*& at(CLI::App* cmd, const std::string& key) { return flags[cmd->get_name() + "." + key]; }

    bool given(const std::string& key) const
    {
        for (const auto& k : {scope + "." + key, "." + key}) {
            auto it = flags.find(k);
            if (it != flags.end() && it->second->count() > 0) return true;
        }
        return false;
    }
    bool has(const std::string& key) const { return given(key) || config.contains(key); }

    template <class T>
    T get(const std::string& key, const T& flag_value, const T& fallback) const
    {
        if (given(key)) return flag_value;
        if (config.contains(key)) return config.at(key).get<T>();
        return fallback;
    }
};

struct ChannelFlags {
    std::string type;
    double g = 0.01, gamma = 5.0;
    double b = 0.05, gamma_rtn = 0.001;
    double p_depol = 0.0;
};

void add_channel_flags(CLI::App* cmd, ChannelFlags& cf, Inputs& in)
{
    in.at(cmd, "channel") = cmd->add_option("--channel", cf.type, "none | ad | rtn | depolarizing")
                              ->check(CLI::IsMember({"none", "ad", "rtn", "depolarizing"}));
    in.at(cmd, "g") = cmd->add_option("--g", cf.g, "AD reservoir line width (default 0.01)");
    in.at(cmd, "gamma") = cmd->add_option("--gamma", cf.gamma, "AD coupling strength (default 5)");
    in.at(cmd, "b") = cmd->add_option("--b", cf.b, "RTN coupling strength (default 0.05)");
    in.at(cmd, "gamma_rtn") = cmd->add_option("--gamma-rtn", cf.gamma_rtn, "RTN fluctuation rate (default 0.001)");
    in.at(cmd, "p_depol") = cmd->add_option("--p-depol", cf.p_depol, "depolarizing probability");
}

// Channel parameters given as flags refine a channel given in the config.
std::optional<ChannelSpec> resolve_channel(const ChannelFlags& cf, const Inputs& in)
{
    json spec = in.config.contains("channel") ? in.config.at("channel") : json();
    if (in.given("channel")) spec = json{{"type", cf.type}};
    if (spec.is_null()) {
        for (const char* k : {"g", "gamma", "b", "gamma_rtn", "p_depol"})
            if (in.given(k)) throw std::invalid_argument(std::string("--") + k + " needs --channel");
        return std::nullopt;
    }
    const std::string type = spec.value("type", "");
    auto pick = [&](const char* key, double flag, double fallback) {
        if (in.given(key)) return flag;
        if (spec.contains(key)) return spec.at(key).get<double>();
        return fallback;
    };
    if (type == "ad") spec = {{"type", "ad"}, {"g", pick("g", cf.g, 0.01)}, {"gamma", pick("gamma", cf.gamma, 5.0)}};
    else if (type == "rtn")
        spec = {{"type", "rtn"}, {"b", pick("b", cf.b, 0.05)}, {"gamma_rtn", pick("gamma_rtn", cf.gamma_rtn, 0.001)}};
    else if (type == "depolarizing") {
        double p = in.given("p_depol") ? cf.p_depol : spec.value("p", spec.value("p_depol", 0.0));
        spec = {{"type", "depolarizing"}, {"p", p}};
    }
    return channel_from_json(spec);
}

std::vector<std::string> split_list(const std::string& s)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) out.push_back(item);
    return out;
}

json load_config(const std::string& path)
{
    if (path.empty()) return json::object();
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot read config '" + path + "'");
    json j = json::parse(f);
    if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
    return j;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Negative quantum states under noisy channels with weak-measurement protection"};
    app.require_subcommand(1);
    std::string config_path, out;
    app.add_option("--config", config_path, "JSON config file; command-line flags override it");

    Inputs in;
    in.flags[".out"] = app.add_option("--out", out, "output CSV path (stdout when absent)");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "time series of every correlation measure");
    std::string state = "ns1", measures;
    double p = 0.0, q = 0.0, t0 = 0.0, t1 = 10.0;
    int steps = 101, discord_grid = 64;
    bool auto_pq = false;
    ChannelFlags sweep_ch;
    in.at(sweep, "state") = sweep->add_option("--state", state, "ns1|ns2|ns3|ns3p|ns3pp|phi+|phi-|psi+|psi-");
    add_channel_flags(sweep, sweep_ch, in);
    in.at(sweep, "p") = sweep->add_option("--p", p, "weak measurement strength");
    in.at(sweep, "q") = sweep->add_option("--q", q, "reversal strength");
    in.at(sweep, "auto_pq") = sweep->add_flag("--auto-pq", auto_pq, "optimize p, q at t = 0 first");
    in.at(sweep, "t0") = sweep->add_option("--t0", t0, "first time point");
    in.at(sweep, "t1") = sweep->add_option("--t1", t1, "last time point");
    in.at(sweep, "steps") = sweep->add_option("--steps", steps, "number of time points (>= 2)");
    in.at(sweep, "measures") = sweep->add_option("--measures", measures, "comma-separated report columns");
    in.at(sweep, "discord_grid") = sweep->add_option("--discord-grid", discord_grid, "discord coarse grid size");

    // optimize
    auto* optimize = app.add_subcommand("optimize", "grid search for the filter strengths");
    std::vector<std::string> opt_states;
    double opt_step = 0.01, opt_t = 0.0;
    std::string objective = "concurrence";
    ChannelFlags opt_ch;
    in.at(optimize, "states") = optimize->add_option("--state", opt_states, "state label, repeatable (default ns1 ns2 ns3p phi+)");
    in.at(optimize, "step") = optimize->add_option("--step", opt_step, "grid resolution in (0, 0.1]");
    in.at(optimize, "objective") = optimize->add_option("--objective", objective, "concurrence | max-fidelity")
                                ->check(CLI::IsMember({"concurrence", "max-fidelity"}));
    in.at(optimize, "t") = optimize->add_option("--t", opt_t, "time at which the objective is evaluated");
    add_channel_flags(optimize, opt_ch, in);

    // table
    auto* table = app.add_subcommand("table", "state orderings per measure at a reference time");
    double t_ref = 10.0;
    std::string filters = "both";
    ChannelFlags table_ch;
    in.at(table, "t_ref") = table->add_option("--t-ref", t_ref, "reference time (default 10)");
    in.at(table, "filters") = table->add_option("--filters", filters, "on | off | both")
                              ->check(CLI::IsMember({"on", "off", "both"}));
    add_channel_flags(table, table_ch, in);

    // surface
    auto* surface = app.add_subcommand("surface", "success probability over the (p, q) grid");
    std::string surf_state = "phi+";
    double surf_t = 10.0, surf_step = 0.01;
    ChannelFlags surf_ch;
    surface->add_option("--state", surf_state, "two-qubit state label");
    surface->add_option("--t", surf_t, "time (default 10)");
    surface->add_option("--step", surf_step, "grid resolution in (0, 0.5]");
    add_channel_flags(surface, surf_ch, in);

    // dwf
    auto* dwfcmd = app.add_subcommand("dwf", "discrete Wigner function over time");
    std::string dwf_state = "qubit-ns1", net, format = "series";
    double d_t0 = 0.0, d_t1 = 0.0;
    int d_steps = 1;
    ChannelFlags dwf_ch;
    dwfcmd->add_option("--state", dwf_state, "any two-qubit label or qubit-ns1|qutrit-ns1|qutrit-ns2|mixed2|mixed3|mixed4");
    dwfcmd->add_option("--t0", d_t0, "first time point");
    dwfcmd->add_option("--t1", d_t1, "last time point (defaults to t0)");
    dwfcmd->add_option("--steps", d_steps, "number of time points");
    dwfcmd->add_option("--net", net, "qubit | qutrit | two-qubit | two-qubit-ns1");
    dwfcmd->add_option("--format", format, "series (one row per t) | grid (q,p,w at t0)")
        ->check(CLI::IsMember({"series", "grid"}));
    add_channel_flags(dwfcmd, dwf_ch, in);

    CLI11_PARSE(app, argc, argv);

    try {
        in.config = load_config(config_path);
        for (auto* cmd : app.get_subcommands()) in.scope = cmd->get_name();
        std::string text;

        if (sweep->parsed()) {
            SweepConfig cfg;
            cfg.state = in.get<std::string>("state", state, "ns1");
            cfg.channel = resolve_channel(sweep_ch, in).value_or(Identity{});
            cfg.t_start = in.get("t0", t0, 0.0);
            cfg.t_end = in.get("t1", t1, 10.0);
            cfg.t_steps = in.get("steps", steps, 101);
            cfg.auto_pq = in.get("auto_pq", auto_pq, false);
            if (in.has("p") || in.has("q")) cfg.strengths = FilterStrengths(in.get("p", p, 0.0), in.get("q", q, 0.0));
            if (in.given("measures")) cfg.measures = split_list(measures);
            else if (in.config.contains("measures")) cfg.measures = in.config.at("measures").get<std::vector<std::string>>();
            cfg.discord.grid_n = in.get("discord_grid", discord_grid, 64);
            text = sweep_csv(run_sweep(cfg));
        } else if (optimize->parsed()) {
            OptimizeRequest req;
            req.states = in.get<std::vector<std::string>>("states", opt_states, hierarchy_states());
            req.options.step = in.get("step", opt_step, 0.01);
            req.options.objective = in.get<std::string>("objective", objective, "concurrence") == "max-fidelity"
                                        ? Objective::MaxFidelity
                                        : Objective::Concurrence;
            req.options.t = in.get("t", opt_t, 0.0);
            req.options.channel = resolve_channel(opt_ch, in).value_or(Identity{});
            text = run_optimize(req);
        } else if (table->parsed()) {
            const double tr = in.get("t_ref", t_ref, 10.0);
            const std::string mode = in.get<std::string>("filters", filters, "both");
            std::vector<ChannelSpec> channels;
            if (auto ch = resolve_channel(table_ch, in)) channels.push_back(*ch);
            else channels = {AmplitudeDamping{AdParams(0.01, 5.0)}, TelegraphNoise{RtnParams(0.05, 0.001)}};
            std::vector<HierarchyTable> tables;
            for (const auto& ch : channels) {
                if (mode != "on") tables.push_back(run_table(ch, tr, false));
                if (mode != "off") tables.push_back(run_table(ch, tr, true));
            }
            text = hierarchy_csv(tables);
        } else if (surface->parsed()) {
            text = run_surface(surf_state, resolve_channel(surf_ch, in).value_or(Identity{}), surf_t, surf_step);
        } else if (dwfcmd->parsed()) {
            DwfConfig cfg;
            cfg.state = dwf_state;
            cfg.channel = resolve_channel(dwf_ch, in).value_or(Identity{});
            cfg.t_start = d_t0;
            cfg.t_end = dwfcmd->count("--t1") ? d_t1 : d_t0;
            cfg.t_steps = d_steps;
            cfg.net = net;
            if (format == "grid") {
                const DensityMatrix rho0 = initial_state(cfg.state);
                const QuantumNet& n = net.empty() ? default_net(rho0.dim()) : net_by_name(net);
                const bool two = rho0.dim() == 4;
                const KrausSet ks = kraus_set(cfg.channel, cfg.t_start, two ? 2 : int(rho0.dim()));
                text = dwf_csv(dwf(apply_channel(rho0, ks, two ? Locality::TwoLocal : Locality::Single), n));
            } else {
                text = run_dwf(cfg);
            }
        }

        write_text(in.get<std::string>("out", out, ""), text);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
