#include <doctest.h>

#include "nqs/errors.hpp"
#include "nqs/measures.hpp"
#include "nqs/states.hpp"
#include "support.hpp"

using namespace nqs;
using nqs::test::werner;

namespace {

double brute_force_min_entropy(const DensityMatrix& rho, int n)
{
    double best = 1e300;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            best = std::min(best, conditional_entropy(rho, {M_PI * i / (n - 1), 2 * M_PI * j / (n - 1)}));
    return best;
}

double brute_force_discord(const DensityMatrix& rho, int n)
{
    const auto rb = partial_trace(rho.matrix(), {2, 2}, {1});
    return std::max(0.0, von_neumann_entropy(rb) - von_neumann_entropy(rho.matrix()) + brute_force_min_entropy(rho, n));
}

DensityMatrix product(const DensityMatrix& a, const DensityMatrix& b)
{
    return DensityMatrix(tensor(a.matrix(), b.matrix()));
}

}  // namespace

TEST_CASE("concurrence")
{
    for (int trial = 0; trial < 200; ++trial) {
        const auto psi = nqs::test::random_pure(4);
        CHECK(std::abs(concurrence(psi) - 2.0 * std::abs(psi[0] * psi[3] - psi[1] * psi[2])) < 1e-10);
    }
    CHECK(concurrence(bell(BellState::PhiPlus)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(concurrence(DensityMatrix::maximally_mixed(4)) == 0.0);
    CHECK(concurrence(two_qubit_negative(NegativeState::NS3pp)) == doctest::Approx(1.0).epsilon(1e-12));
    // Werner states are entangled above w = 1/3 with C = (3w - 1)/2
    for (double w : {0.2, 0.5, 0.9}) CHECK(concurrence(werner(w)) == doctest::Approx(std::max(0.0, (3 * w - 1) / 2)));
    CHECK_THROWS_AS(concurrence(DensityMatrix::maximally_mixed(3)), std::invalid_argument);
}

TEST_CASE("coherence and entropy")
{
    CHECK(coherence_l1(DensityMatrix::maximally_mixed(4)) == 0.0);
    CHECK(coherence_l1(bell(BellState::PhiPlus)) == doctest::Approx(1.0));
    // with the printed vectors it is NS3' that starts with the most coherence;
    // the printed NS3 sits below NS1 and NS2
    const double c3p = coherence_l1(two_qubit_negative(NegativeState::NS3p));
    for (auto s : {NegativeState::NS1, NegativeState::NS2, NegativeState::NS3})
        CHECK(coherence_l1(two_qubit_negative(s)) < c3p);
    CHECK(coherence_l1(bell(BellState::PhiPlus)) < c3p);
    CHECK(coherence_l1(two_qubit_negative(NegativeState::NS3)) < coherence_l1(two_qubit_negative(NegativeState::NS1)));

    CHECK(von_neumann_entropy(ComplexMatrix::identity(4) * Complex(0.25)) == doctest::Approx(std::log(4.0)));
    CHECK(von_neumann_entropy(DensityMatrix(bell(BellState::PhiPlus)).matrix()) == doctest::Approx(0.0));
}

TEST_CASE("measurement angles")
{
    const auto a = canonical_angles(-0.5, 7.0);
    CHECK(a.theta == doctest::Approx(0.5));
    CHECK(a.phi >= 0.0);
    CHECK(a.phi < 2 * M_PI);
    // the two parameterizations describe the same measurement
    const auto rho = nqs::test::random_mixed(4);
    CHECK(conditional_entropy(rho, {-0.5, 7.0}) == doctest::Approx(conditional_entropy(rho, a)).epsilon(1e-12));
}

TEST_CASE("discord")
{
    CHECK(discord(bell(BellState::PhiPlus)) == doctest::Approx(std::log(2.0)).epsilon(1e-10));
    CHECK(std::abs(brute_force_discord(bell(BellState::PhiPlus), 200) - std::log(2.0)) < 1e-4);

    // classical-classical and product states
    ComplexMatrix cc(4, 4);
    cc(0, 0) = 0.3;
    cc(3, 3) = 0.7;
    CHECK(discord(DensityMatrix(cc)) <= 1e-6);
    CHECK(discord(product(nqs::test::random_mixed(2), nqs::test::random_mixed(2))) <= 1e-6);

    for (int trial = 0; trial < 200; ++trial) {
        const auto rho = nqs::test::random_mixed(4);
        const auto r = discord_detail(rho);
        CHECK(r.value >= -1e-8);
        CHECK(r.minimum <= r.coarse_minimum);
    }

    // the default grid plus refinement never loses to a dense brute-force scan
    for (int trial = 0; trial < 10; ++trial) {
        const auto rho = trial % 2 ? nqs::test::random_mixed(4) : DensityMatrix(nqs::test::random_pure(4));
        CHECK(discord(rho) <= brute_force_discord(rho, 512) + 1e-8);
        CHECK(discord(rho) >= brute_force_discord(rho, 512) - 1e-4);
    }

    // depolarizing a Bell state never increases discord
    double last = 1e9;
    for (int k = 0; k <= 10; ++k) {
        const double d = discord(werner(1.0 - 0.1 * k));
        CHECK(d <= last + 1e-9);
        last = d;
    }
    CHECK(last <= 1e-9);
}

TEST_CASE("steering")
{
    for (auto b : {BellState::PhiPlus, BellState::PhiMinus, BellState::PsiPlus, BellState::PsiMinus}) {
        CHECK(steering(bell(b), 2) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(steering(bell(b), 3) == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK(steering(DensityMatrix::maximally_mixed(4), 2) == 0.0);
    CHECK(steering(DensityMatrix::maximally_mixed(4), 3) == 0.0);
    for (int trial = 0; trial < 50; ++trial) {
        const auto rho = nqs::test::random_mixed(4);
        for (int n : {2, 3}) {
            const double s = steering(rho, n);
            CHECK(s >= 0.0);
            CHECK(s <= 1.0);
            CHECK(steering(product(DensityMatrix(nqs::test::random_pure(2)), DensityMatrix(nqs::test::random_pure(2))), n) ==
                  0.0);
        }
    }
    CHECK_THROWS_AS(steering(DensityMatrix::maximally_mixed(4), 4), std::invalid_argument);
}

TEST_CASE("teleportation quality")
{
    const DensityMatrix phi = bell(BellState::PhiPlus);
    CHECK(maximal_fidelity(phi) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fidelity_deviation(phi) == doctest::Approx(0.0));
    CHECK(teleportation_fidelity(phi) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(teleportation_fidelity(DensityMatrix::maximally_mixed(4)) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(teleportation_fidelity(werner(1.0 / 3.0)) - 2.0 / 3.0) < 1e-10);
    for (double w : {0.2, 0.5, 0.8}) CHECK(maximal_fidelity(werner(w)) == doctest::Approx((1 + w) / 2).epsilon(1e-12));

    try {
        maximal_fidelity(DensityMatrix::maximally_mixed(4));
        FAIL("expected an out-of-domain error");
    } catch (const OutOfDomain& e) {
        CHECK(e.value() == 0.0);
    }
    CHECK_THROWS_AS(fidelity_deviation(DensityMatrix::maximally_mixed(4)), OutOfDomain);

    // Bell-diagonal states: both fidelities coincide
    for (int trial = 0; trial < 20; ++trial) {
        std::uniform_real_distribution<double> u(0.0, 1.0);
        double w[4], s = 0.0;
        for (double& x : w) s += (x = u(nqs::test::rng()));
        ComplexMatrix m(4, 4);
        int k = 0;
        for (auto b : {BellState::PhiPlus, BellState::PhiMinus, BellState::PsiPlus, BellState::PsiMinus})
            m += DensityMatrix(bell(b)).matrix() * Complex(w[k++] / s);
        const DensityMatrix rho(m);
        if (det3(correlation_matrix(rho)) < 0.0)
            CHECK(std::abs(maximal_fidelity(rho) - teleportation_fidelity(rho)) < 1e-10);
    }

    const auto ns2 = uqt_check(two_qubit_negative(NegativeState::NS2));
    CHECK_FALSE(ns2.universal);
    CHECK(fidelity_deviation(two_qubit_negative(NegativeState::NS2)) > 0.0);
    CHECK(uqt_check(phi).universal);
    CHECK(uqt_check(phi).useful_qt);
    CHECK_FALSE(uqt_check(DensityMatrix::maximally_mixed(4)).useful_qt);
    for (auto s : {NegativeState::NS1, NegativeState::NS3p}) CHECK(fidelity_deviation(two_qubit_negative(s)) < 2e-2);
}

TEST_CASE("CHSH")
{
    CHECK(chsh_smax(bell(BellState::PhiPlus)) == doctest::Approx(2 * std::sqrt(2.0)).epsilon(1e-12));
    CHECK(chsh_smax(DensityMatrix::maximally_mixed(4)) == 0.0);
    for (double w : {0.3, 1 / std::sqrt(2.0), 0.9})
        CHECK(chsh_smax(werner(w)) == doctest::Approx(2 * std::sqrt(2.0) * w).epsilon(1e-12));
}

TEST_CASE("correlation matrix from the DWF")
{
    const auto& net = two_qubit_ns1_net();
    for (int trial = 0; trial < 50; ++trial) {
        const auto rho = nqs::test::random_mixed(4);
        const auto t1 = correlation_matrix_from_dwf(dwf(rho, net), net);
        const auto t2 = decompose_two_qubit(rho).T;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) CHECK(std::abs(t1[i][j] - t2[i][j]) < 1e-10);
    }
    const auto tb = correlation_matrix_from_dwf(dwf(bell(BellState::PhiPlus), net), net);
    CHECK(tb[0][0] == doctest::Approx(1.0));
    CHECK(tb[1][1] == doctest::Approx(-1.0));
    CHECK(tb[2][2] == doctest::Approx(1.0));
    const auto tm = correlation_matrix_from_dwf(dwf(DensityMatrix::maximally_mixed(4), net), net);
    for (const auto& row : tm)
        for (double x : row) CHECK(std::abs(x) < 1e-14);
}

TEST_CASE("report")
{
    const auto r = report(bell(BellState::PhiPlus), 1.0);
    CHECK(r.concurrence == doctest::Approx(1.0));
    CHECK(r.coherence_l1 == doctest::Approx(1.0));
    CHECK(r.discord == doctest::Approx(std::log(2.0)));
    CHECK(r.steering_2 == doctest::Approx(1.0));
    CHECK(r.steering_3 == doctest::Approx(1.0));
    REQUIRE(r.max_fidelity);
    CHECK(*r.max_fidelity == doctest::Approx(1.0));
    CHECK(*r.fidelity_deviation == doctest::Approx(0.0));
    CHECK(r.tele_fidelity == doctest::Approx(1.0));
    CHECK(r.s_max == doctest::Approx(2 * std::sqrt(2.0)));

    const auto m = report(DensityMatrix::maximally_mixed(4), 0.5);
    CHECK_FALSE(m.max_fidelity);
    CHECK_FALSE(m.fidelity_deviation);
    CHECK(m.tele_fidelity == doctest::Approx(0.5));
    const auto fields = report_fields(m);
    REQUIRE(fields.size() == report_columns().size());
    CHECK(fields[5].empty());
    CHECK(fields[6].empty());
    CHECK(fields.back() == "0.5");
    CHECK(report_columns().front() == "concurrence");
}
