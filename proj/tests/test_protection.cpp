#include <doctest.h>

#include "nqs/errors.hpp"
#include "nqs/measures.hpp"
#include "nqs/protection.hpp"
#include "nqs/states.hpp"
#include "support.hpp"

using namespace nqs;

namespace {

// At t = 0 with no channel the filters act as diag(sqrt((1-q)^{2-k} (1-p)^k))
// on a pure state, k the excitation number of the basis vector.
struct FilteredPure {
    double concurrence;
    double p_succ;
};

FilteredPure filtered_pure(const PureState& psi, double p, double q)
{
    const int exc[4] = {0, 1, 1, 2};
    Complex a[4];
    double norm2 = 0.0;
    for (int i = 0; i < 4; ++i) {
        a[i] = psi[i] * std::sqrt(std::pow(1 - q, 2 - exc[i]) * std::pow(1 - p, exc[i]));
        norm2 += std::norm(a[i]);
    }
    return {2.0 * std::abs(a[0] * a[3] - a[1] * a[2]) / norm2, norm2};
}

}  // namespace

TEST_CASE("filter operators")
{
    CHECK(max_abs_diff(wm_operator(0.0), ComplexMatrix::identity(4)) == 0.0);
    CHECK(max_abs_diff(qmr_operator(0.0), ComplexMatrix::identity(4)) == 0.0);
    CHECK(max_abs_diff(wm_operator(0.75), ComplexMatrix::diagonal({1.0, 0.5, 0.5, 0.25})) < 1e-15);
    CHECK(max_abs_diff(qmr_operator(0.75), ComplexMatrix::diagonal({0.25, 0.5, 0.5, 1.0})) < 1e-15);
    for (double p : {0.1, 0.5, 0.9}) CHECK(wm_operator(p)(0, 0) == Complex(1.0));
    CHECK_THROWS_AS(wm_operator(1.0), std::invalid_argument);
    CHECK_THROWS_AS(qmr_operator(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(FilterStrengths(0.2, 1.0), std::invalid_argument);
}

TEST_CASE("protected evolution")
{
    const DensityMatrix phi = bell(BellState::PhiPlus);
    const auto id = protect_evolve(phi, Identity{}, 0.0, {});
    CHECK(id.success_probability == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(max_abs_diff(id.state.matrix(), phi.matrix()) < 1e-14);

    // filters off reduces to the bare channel
    const ChannelSpec ad = AmplitudeDamping{AdParams(0.01, 5.0)};
    const auto rho = nqs::test::random_mixed(4);
    const auto bare = apply_channel(rho, kraus_set(ad, 3.0, 2), Locality::TwoLocal);
    CHECK(max_abs_diff(protect_evolve(rho, ad, 3.0, {}).state.matrix(), bare.matrix()) < 1e-14);

    // filtered pure states stay pure at t = 0 and match the closed form
    for (int trial = 0; trial < 20; ++trial) {
        const auto psi = nqs::test::random_pure(4);
        const double p = 0.1 + 0.04 * trial, q = 0.8 - 0.03 * trial;
        const auto out = protect_evolve(psi, Identity{}, 0.0, FilterStrengths(p, q));
        const auto want = filtered_pure(psi, p, q);
        CHECK(out.success_probability == doctest::Approx(want.p_succ).epsilon(1e-12));
        CHECK(concurrence(out.state) == doctest::Approx(want.concurrence).epsilon(1e-9));
        CHECK(herm_eigenvalues(out.state.matrix())[1] < 1e-9);
    }

    // order matters: reversal before the channel gives something else
    const FilterStrengths f(0.3, 0.6);
    const auto ks = kraus_set(ad, 2.0, 2);
    ComplexMatrix permuted = sandwich(wm_operator(f.p), sandwich(qmr_operator(f.q), rho.matrix()));
    ComplexMatrix channel_last(4, 4);
    for (const auto& a : ks.operators())
        for (const auto& b : ks.operators()) channel_last += sandwich(tensor(a, b), permuted);
    const auto proper = protect_evolve(rho, ad, 2.0, f).state;
    CHECK(max_abs_diff(DensityMatrix::normalized(channel_last).matrix(), proper.matrix()) > 1e-3);

    CHECK_THROWS_AS(protect_evolve(nqs::test::random_mixed(2), Identity{}, 0.0, {}), std::invalid_argument);
    // |11> is all but annihilated by a near-projective weak measurement
    const DensityMatrix one = PureState({0.0, 0.0, 0.0, 1.0});
    CHECK_NOTHROW(protect_evolve(one, Identity{}, 0.0, FilterStrengths(0.9999, 0.0)));
    CHECK_THROWS_AS(protect_evolve(one, Identity{}, 0.0, FilterStrengths(0.9999999, 0.0)), NumericalError);
}

TEST_CASE("grid search")
{
    const auto grid = filter_grid(0.01);
    CHECK(grid.size() == 100);
    CHECK(grid.back() == doctest::Approx(0.99));
    CHECK(filter_grid(0.5).size() == 2);
    CHECK_THROWS_AS(filter_grid(0.0), std::invalid_argument);

    // Bell: flat optimum, ties go to the origin
    const auto phi = optimize_pq(bell(BellState::PhiPlus));
    CHECK(phi.strengths.p == 0.0);
    CHECK(phi.strengths.q == 0.0);
    CHECK(phi.objective == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(phi.success_probability == doctest::Approx(1.0).epsilon(1e-12));

    // brute force over the same grid with the closed form
    const auto ns2 = two_qubit_negative(NegativeState::NS2);
    OptimizeOptions coarse;
    coarse.step = 0.05;
    const auto got = optimize_pq(ns2, coarse);
    double best = -1.0;
    for (double p : filter_grid(0.05))
        for (double q : filter_grid(0.05)) best = std::max(best, filtered_pure(ns2, p, q).concurrence);
    CHECK(got.objective == doctest::Approx(best).epsilon(1e-9));
    CHECK(got.objective > 0.98);
    CHECK_THROWS_AS(optimize_pq(ns2, OptimizeOptions{0.2}), std::invalid_argument);

    // a maximal-fidelity search skips cells where det T >= 0
    OptimizeOptions mf;
    mf.step = 0.1;
    mf.objective = Objective::MaxFidelity;
    const auto r = optimize_pq(two_qubit_negative(NegativeState::NS1), mf);
    CHECK(r.objective > 2.0 / 3.0);
    CHECK(r.objective <= 1.0 + 1e-12);
}

TEST_CASE("success surface")
{
    const DensityMatrix phi = bell(BellState::PhiPlus);
    const auto s0 = success_surface(phi, Identity{}, 0.0, 0.5);
    CHECK(s0.values.size() == 4);
    CHECK(s0.at(0, 0) == doctest::Approx(1.0).epsilon(1e-14));

    const ChannelSpec ad = AmplitudeDamping{AdParams(0.01, 5.0)};
    const auto s = success_surface(phi, ad, 10.0, 0.01);
    for (double v : s.values) {
        CHECK(v > 0.0);
        CHECK(v <= 1.0 + 1e-12);
    }
    // decreasing away from the origin along both axes
    CHECK(s.at(1, 0) < s.at(0, 0));
    CHECK(s.at(0, 1) < s.at(0, 0));
    CHECK(s.at(2, 0) < s.at(1, 0));
    CHECK(s.at(0, 2) < s.at(0, 1));

    // the price of protection
    const DensityMatrix ns2 = two_qubit_negative(NegativeState::NS2);
    CHECK(protect_evolve(ns2, ad, 0.0, FilterStrengths(0.05, 0.74)).success_probability < 1.0);
    CHECK_THROWS_AS(success_surface(phi, ad, 1.0, 0.6), std::invalid_argument);
}
