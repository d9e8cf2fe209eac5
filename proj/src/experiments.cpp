#include "nqs/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "nqs/csv.hpp"
#include "nqs/parallel.hpp"
#include "nqs/phase_space/wigner.hpp"
#include "nqs/states.hpp"

namespace nqs {

namespace {

std::string join(const std::vector<std::string>& items, const std::string& sep)
{
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
    return out;
}

[[noreturn]] void unknown_label(const std::string& what, const std::string& got, const std::vector<std::string>& valid)
{
    throw std::invalid_argument("unknown " + what + " '" + got + "' (valid: " + join(valid, ", ") + ")");
}

bool contains(const std::vector<std::string>& v, const std::string& s)
{
    return std::find(v.begin(), v.end(), s) != v.end();
}

std::optional<double> report_value(const CorrelationReport& r, const std::string& column)
{
    if (column == "concurrence") return r.concurrence;
    if (column == "coherence_l1") return r.coherence_l1;
    if (column == "discord") return r.discord;
    if (column == "steering_2") return r.steering_2;
    if (column == "steering_3") return r.steering_3;
    if (column == "max_fidelity") return r.max_fidelity;
    if (column == "fidelity_deviation") return r.fidelity_deviation;
    if (column == "tele_fidelity") return r.tele_fidelity;
    if (column == "s_max") return r.s_max;
    if (column == "p_succ") return r.p_succ;
    unknown_label("measure", column, report_columns());
}

std::vector<std::string> measure_columns()
{
    auto cols = report_columns();
    cols.pop_back();  // p_succ is always emitted last
    return cols;
}

}  // namespace

std::vector<std::string> two_qubit_labels()
{
    return {"ns1", "ns2", "ns3", "ns3p", "ns3pp", "phi+", "phi-", "psi+", "psi-"};
}

std::vector<std::string> dwf_labels()
{
    return {"qubit-ns1", "qutrit-ns1", "qutrit-ns2", "mixed2", "mixed3", "mixed4"};
}

DensityMatrix initial_state(const std::string& label)
{
    if (label == "ns1") return two_qubit_negative(NegativeState::NS1);
    if (label == "ns2") return two_qubit_negative(NegativeState::NS2);
    if (label == "ns3") return two_qubit_negative(NegativeState::NS3);
    if (label == "ns3p") return two_qubit_negative(NegativeState::NS3p);
    if (label == "ns3pp") return two_qubit_negative(NegativeState::NS3pp);
    if (label == "phi+") return bell(BellState::PhiPlus);
    if (label == "phi-") return bell(BellState::PhiMinus);
    if (label == "psi+") return bell(BellState::PsiPlus);
    if (label == "psi-") return bell(BellState::PsiMinus);
    if (label == "qubit-ns1") return negative_qubit();
    if (label == "qutrit-ns1") return negative_qutrit();
    // no vector is printed for this one; it is the eigenvector of the
    // golden-ratio negative eigenvalue at grid point (1,2)
    if (label == "qutrit-ns2") return ns_from_operator(phase_point_operator(qutrit_net(), {0, 1}), 1);
    if (label == "mixed2") return DensityMatrix::maximally_mixed(2);
    if (label == "mixed3") return DensityMatrix::maximally_mixed(3);
    if (label == "mixed4") return DensityMatrix::maximally_mixed(4);
    auto valid = two_qubit_labels();
    for (const auto& l : dwf_labels()) valid.push_back(l);
    unknown_label("state", label, valid);
}

std::optional<FilterStrengths> paper_filter_point(const std::string& label)
{
    if (label == "ns1") return FilterStrengths(0.17, 0.54);
    if (label == "ns2") return FilterStrengths(0.05, 0.74);
    if (label == "ns3p") return FilterStrengths(0.05, 0.05);
    if (label == "phi+") return FilterStrengths(0.01, 0.01);
    return std::nullopt;
}

void SweepConfig::validate() const
{
    if (!contains(two_qubit_labels(), state)) unknown_label("state", state, two_qubit_labels());
    if (!(t_start >= 0.0) || !(t_end > t_start)) throw std::invalid_argument("sweep needs 0 <= t0 < t1");
    if (t_steps < 2) throw std::invalid_argument("sweep needs at least 2 time steps");
    if (strengths && auto_pq) throw std::invalid_argument("give either explicit p/q or auto-pq, not both");
    const auto valid = measure_columns();
    for (const auto& m : measures)
        if (!contains(valid, m)) unknown_label("measure", m, valid);
}

std::vector<double> time_points(double t_start, double t_end, int steps)
{
    if (steps < 1) throw std::invalid_argument("time_points: need at least one step");
    if (steps == 1 || t_end == t_start) return {t_start};
    std::vector<double> t(static_cast<std::size_t>(steps));
    for (int k = 0; k < steps; ++k) t[k] = t_start + (t_end - t_start) * double(k) / double(steps - 1);
    t.back() = t_end;
    return t;
}

SweepResult run_sweep(const SweepConfig& config)
{
    config.validate();
    const DensityMatrix rho0 = initial_state(config.state);

    SweepResult res;
    if (config.auto_pq) res.strengths = optimize_pq(rho0).strengths;
    else if (config.strengths) res.strengths = *config.strengths;
    res.measures = config.measures.empty() ? measure_columns() : config.measures;
    res.times = time_points(config.t_start, config.t_end, config.t_steps);

    std::vector<std::optional<CorrelationReport>> slots(res.times.size());
    parallel_for(res.times.size(), [&](std::size_t k) {
        const auto out = protect_evolve(rho0, config.channel, res.times[k], res.strengths);
        slots[k] = report(out.state, out.success_probability, config.discord);
    });
    for (auto& s : slots) res.reports.push_back(*s);
    return res;
}

std::string sweep_csv(const SweepResult& result)
{
    std::vector<std::string> header{"t"};
    for (const auto& m : result.measures) header.push_back(m);
    header.push_back("p_succ");
    CsvWriter csv(header);
    for (std::size_t k = 0; k < result.times.size(); ++k) {
        std::vector<std::string> row{format_real(result.times[k])};
        for (const auto& m : result.measures) row.push_back(format_optional(report_value(result.reports[k], m)));
        row.push_back(format_real(result.reports[k].p_succ));
        csv.row(row);
    }
    return csv.str();
}

std::vector<std::string> hierarchy_states()
{
    return {"ns1", "ns2", "ns3p", "phi+"};
}

std::vector<std::string> hierarchy_measures()
{
    return {"concurrence", "discord", "steering_2", "steering_3", "max_fidelity", "fidelity_deviation"};
}

std::string HierarchyEntry::ordering() const
{
    std::string out;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i) out += relations[i - 1];
        out += order[i];
    }
    return out;
}

HierarchyTable run_table(const ChannelSpec& channel, double reference_t, bool filters_on,
                         const DiscordOptions& discord)
{
    if (!(reference_t > 0.0)) throw std::invalid_argument("run_table: reference time must be positive");
    const auto states = hierarchy_states();

    // the same sweep path the figures use, cut down to its last time point
    std::vector<CorrelationReport> at_ref;
    for (const auto& s : states) {
        SweepConfig cfg;
        cfg.state = s;
        cfg.channel = channel;
        cfg.t_start = 0.0;
        cfg.t_end = reference_t;
        cfg.t_steps = 2;
        cfg.discord = discord;
        if (filters_on) cfg.strengths = paper_filter_point(s);
        at_ref.push_back(run_sweep(cfg).reports.back());
    }

    HierarchyTable table{channel_name(channel), reference_t, filters_on, {}};
    for (const auto& m : hierarchy_measures()) {
        HierarchyEntry e;
        e.measure = m;
        e.ascending = m == "fidelity_deviation";
        std::vector<std::size_t> defined;
        for (std::size_t i = 0; i < states.size(); ++i) {
            e.values.push_back(report_value(at_ref[i], m));
            if (e.values.back()) defined.push_back(i);
        }
        std::stable_sort(defined.begin(), defined.end(), [&](std::size_t a, std::size_t b) {
            return e.ascending ? *e.values[a] < *e.values[b] : *e.values[a] > *e.values[b];
        });
        for (std::size_t k = 0; k < defined.size(); ++k) {
            e.order.push_back(states[defined[k]]);
            if (k == 0) continue;
            const double gap = std::abs(*e.values[defined[k]] - *e.values[defined[k - 1]]);
            e.relations.push_back(gap <= kOrderingMargin ? "≈" : (e.ascending ? "<" : ">"));
        }
        table.entries.push_back(std::move(e));
    }
    return table;
}

std::string hierarchy_csv(const std::vector<HierarchyTable>& tables)
{
    std::vector<std::string> header{"channel", "t", "filters", "measure", "ordering"};
    for (const auto& s : hierarchy_states()) header.push_back(s);
    CsvWriter csv(header);
    for (const auto& t : tables)
        for (const auto& e : t.entries) {
            std::vector<std::string> row{t.channel, format_real(t.reference_t), t.filters ? "on" : "off", e.measure,
                                         e.ordering()};
            for (const auto& v : e.values) row.push_back(format_optional(v));
            csv.row(row);
        }
    return csv.str();
}

std::string run_surface(const std::string& state, const ChannelSpec& channel, double t, double step)
{
    if (!contains(two_qubit_labels(), state)) unknown_label("state", state, two_qubit_labels());
    const SuccessSurface s = success_surface(initial_state(state), channel, t, step);
    CsvWriter csv({"p", "q", "p_succ"});
    for (std::size_t i = 0; i < s.axis.size(); ++i)
        for (std::size_t j = 0; j < s.axis.size(); ++j)
            csv.row({format_real(s.axis[i]), format_real(s.axis[j]), format_real(s.at(i, j))});
    return csv.str();
}

std::string run_optimize(const OptimizeRequest& request)
{
    CsvWriter csv({"state", "p", "q", "objective", "p_succ"});
    for (const auto& label : request.states) {
        if (!contains(two_qubit_labels(), label)) unknown_label("state", label, two_qubit_labels());
        const OptimumResult r = optimize_pq(initial_state(label), request.options);
        csv.row({label, format_real(r.strengths.p), format_real(r.strengths.q), format_real(r.objective),
                 format_real(r.success_probability)});
    }
    return csv.str();
}

std::string run_dwf(const DwfConfig& config)
{
    if (!(config.t_start >= 0.0) || config.t_end < config.t_start)
        throw std::invalid_argument("dwf needs 0 <= t0 <= t1");
    const DensityMatrix rho0 = initial_state(config.state);
    const QuantumNet& net = config.net.empty() ? default_net(rho0.dim()) : net_by_name(config.net);
    if (std::size_t(net.dim()) != rho0.dim())
        throw std::invalid_argument("state '" + config.state + "' has dimension " + std::to_string(rho0.dim()) +
                                    " but net '" + net.id() + "' has dimension " + std::to_string(net.dim()));

    const bool two_qubit = rho0.dim() == 4;
    const int kraus_dim = two_qubit ? 2 : int(rho0.dim());
    const Locality loc = two_qubit ? Locality::TwoLocal : Locality::Single;
    const auto times = time_points(config.t_start, config.t_end, config.t_steps);

    std::vector<std::string> header{"t"};
    for (int q = 0; q < net.dim(); ++q)
        for (int p = 0; p < net.dim(); ++p) header.push_back("w_" + std::to_string(q + 1) + "_" + std::to_string(p + 1));
    header.push_back("sum");

    std::vector<std::optional<DwfGrid>> grids(times.size());
    parallel_for(times.size(), [&](std::size_t k) {
        const DensityMatrix rho = apply_channel(rho0, kraus_set(config.channel, times[k], kraus_dim), loc);
        grids[k] = dwf(rho, net);
    });

    CsvWriter csv(header);
    for (std::size_t k = 0; k < times.size(); ++k) {
        std::vector<std::string> row{format_real(times[k])};
        for (double w : grids[k]->values()) row.push_back(format_real(w));
        row.push_back(format_real(grids[k]->sum()));
        csv.row(row);
    }
    return csv.str();
}

}  // namespace nqs
