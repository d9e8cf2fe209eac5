#include <doctest.h>

#include <atomic>
#include <sstream>

#include "nqs/csv.hpp"
#include "nqs/experiments.hpp"
#include "nqs/parallel.hpp"

using namespace nqs;

namespace {

std::vector<std::vector<std::string>> parse_csv(const std::string& text)
{
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        std::vector<std::string> fields;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) fields.push_back(cell);
        if (!line.empty() && line.back() == ',') fields.emplace_back();
        rows.push_back(fields);
    }
    return rows;
}

std::size_t column(const std::vector<std::string>& header, const std::string& name)
{
    return std::size_t(std::find(header.begin(), header.end(), name) - header.begin());
}

}  // namespace

TEST_CASE("csv formatting")
{
    CHECK(format_real(0.1) == "0.1");
    CHECK(format_real(-0.0) == "0");
    CHECK(format_real(1e-20) == "1e-20");
    CHECK(format_real(2.0) == "2");
    CHECK(format_optional(std::nullopt).empty());
    CsvWriter w({"a", "b"});
    w.row({"1", "x,y"});
    CHECK(w.str() == "a,b\n1,\"x,y\"\n");
    CHECK_THROWS_AS(w.row({"1"}), std::invalid_argument);
}

TEST_CASE("parallel_for")
{
    std::vector<int> out(1000, 0);
    parallel_for(out.size(), [&](std::size_t i) { out[i] = int(i * i % 97); });
    for (std::size_t i = 0; i < out.size(); ++i) CHECK(out[i] == int(i * i % 97));

    std::atomic<int> calls{0};
    parallel_for(8, [&](std::size_t) { parallel_for(8, [&](std::size_t) { ++calls; }); });
    CHECK(calls == 64);

    // the lowest failing index wins regardless of scheduling
    try {
        parallel_for(100, [](std::size_t i) {
            if (i % 10 == 3) throw std::runtime_error("fail " + std::to_string(i));
        });
        FAIL("expected a throw");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()) == "fail 3");
    }
    parallel_for(0, [](std::size_t) { FAIL("no calls expected"); });
}

TEST_CASE("labels and validation")
{
    for (const auto& l : two_qubit_labels()) CHECK(initial_state(l).dim() == 4);
    CHECK(initial_state("qutrit-ns2").dim() == 3);
    try {
        initial_state("ns4");
        FAIL("expected a throw");
    } catch (const std::invalid_argument& e) {
        const std::string msg = e.what();
        CHECK(msg.find("ns3pp") != std::string::npos);
        CHECK(msg.find("psi-") != std::string::npos);
    }
    SweepConfig bad;
    bad.t_steps = 1;
    CHECK_THROWS_AS(run_sweep(bad), std::invalid_argument);
    bad.t_steps = 3;
    bad.measures = {"entropy"};
    CHECK_THROWS_AS(run_sweep(bad), std::invalid_argument);
    bad.measures.clear();
    bad.state = "qubit-ns1";
    CHECK_THROWS_AS(run_sweep(bad), std::invalid_argument);

    const auto t = time_points(0.0, 1.0, 5);
    CHECK(t.size() == 5);
    CHECK(t[2] == 0.5);
    CHECK(time_points(2.0, 2.0, 7).size() == 1);
}

TEST_CASE("sweeps")
{
    SweepConfig cfg;
    cfg.state = "ns3p";
    cfg.channel = AmplitudeDamping{AdParams(0.01, 5.0)};
    cfg.t_steps = 2;
    cfg.measures = {"concurrence"};
    const auto res = run_sweep(cfg);
    CHECK(res.reports.size() == 2);
    auto rows = parse_csv(sweep_csv(res));
    CHECK(rows.size() == 3);
    CHECK(rows[0] == std::vector<std::string>{"t", "concurrence", "p_succ"});

    cfg.state = "phi+";
    const double bell0 = run_sweep(cfg).reports.front().concurrence;
    CHECK(std::abs(res.reports.front().concurrence - bell0) < 2e-2);

    // Bell under non-Markovian telegraph noise: the concurrence revives
    SweepConfig rtn;
    rtn.state = "phi+";
    rtn.channel = TelegraphNoise{RtnParams(0.05, 0.001)};
    rtn.t_end = 200.0;
    rtn.t_steps = 201;
    rtn.measures = {"concurrence"};
    const auto osc = run_sweep(rtn);
    int turns = 0;
    for (std::size_t k = 2; k < osc.reports.size(); ++k) {
        const double a = osc.reports[k - 2].concurrence, b = osc.reports[k - 1].concurrence,
                     c = osc.reports[k].concurrence;
        turns += (b < a && b < c) || (b > a && b > c);
    }
    CHECK(turns >= 2);

    SweepConfig filt = cfg;
    filt.state = "ns2";
    filt.auto_pq = true;
    filt.t_steps = 2;
    const auto a = run_sweep(filt);
    CHECK(a.strengths.q > 0.0);
    CHECK(a.reports.front().concurrence > 0.98);
    CHECK(a.reports.front().p_succ < 1.0);
}

TEST_CASE("table agrees with the sweep path")
{
    DiscordOptions quick;
    quick.grid_n = 16;
    const ChannelSpec ad = AmplitudeDamping{AdParams(0.01, 5.0)};
    const auto table = run_table(ad, 2.0, true, quick);
    CHECK(table.entries.size() == hierarchy_measures().size());
    const auto states = hierarchy_states();
    for (std::size_t i = 0; i < states.size(); ++i) {
        SweepConfig cfg;
        cfg.state = states[i];
        cfg.channel = ad;
        cfg.t_end = 2.0;
        cfg.t_steps = 2;
        cfg.strengths = paper_filter_point(states[i]);
        cfg.discord = quick;
        const auto last = run_sweep(cfg).reports.back();
        CHECK(*table.entries[0].values[i] == last.concurrence);
        CHECK(*table.entries[1].values[i] == last.discord);
    }
    for (const auto& e : table.entries) {
        CHECK(e.relations.size() + 1 == e.order.size());
        // the listed order is consistent with the stored values
        for (std::size_t k = 1; k < e.order.size(); ++k) {
            const auto va = *e.values[column(states, e.order[k - 1])], vb = *e.values[column(states, e.order[k])];
            CHECK((e.ascending ? va <= vb : va >= vb));
        }
    }
    CHECK_THROWS_AS(run_table(ad, 0.0, false), std::invalid_argument);

    const auto csv = parse_csv(hierarchy_csv({table}));
    CHECK(csv.front() == std::vector<std::string>{"channel", "t", "filters", "measure", "ordering", "ns1", "ns2", "ns3p", "phi+"});
    CHECK(csv.size() == 1 + hierarchy_measures().size());
}

TEST_CASE("surface, optimize and dwf outputs")
{
    const auto s = parse_csv(run_surface("phi+", Identity{}, 0.0, 0.5));
    CHECK(s.size() == 5);
    CHECK(s[1][0] == "0");
    CHECK(s[1][1] == "0");
    CHECK(std::stod(s[1][2]) == doctest::Approx(1.0).epsilon(1e-14));

    OptimizeRequest req;
    req.states = {"phi+"};
    req.options.step = 0.1;
    const auto o = parse_csv(run_optimize(req));
    CHECK(o[1][0] == "phi+");
    CHECK(o[1][1] == "0");

    DwfConfig d;
    d.state = "mixed4";
    d.channel = TelegraphNoise{RtnParams(0.05, 0.001)};
    d.t_end = 50.0;
    d.t_steps = 4;
    const auto rows = parse_csv(run_dwf(d));
    CHECK(rows.size() == 5);
    for (std::size_t r = 1; r < rows.size(); ++r) {
        for (std::size_t c = 1; c + 1 < rows[r].size(); ++c) CHECK(std::stod(rows[r][c]) == doctest::Approx(1.0 / 16).epsilon(1e-14));
        CHECK(std::abs(std::stod(rows[r].back()) - 1.0) < 1e-10);
    }

    d.state = "qubit-ns1";
    d.channel = AmplitudeDamping{AdParams(0.01, 5.0)};
    d.t_end = 0.0;
    d.t_steps = 10;
    const auto one = parse_csv(run_dwf(d));
    CHECK(one.size() == 2);
    bool negative = false;
    for (std::size_t c = 1; c + 1 < one[1].size(); ++c) negative |= std::stod(one[1][c]) < 0.0;
    CHECK(negative);

    d.net = "qutrit";
    CHECK_THROWS_AS(run_dwf(d), std::invalid_argument);
}
