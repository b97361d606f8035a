#include <doctest.h>

#include <random>

#include "sqed/propagator.hpp"

using namespace sqed;
using cd = std::complex<double>;

namespace {

constexpr cd kI{0.0, 1.0};

StateVector random_state(std::mt19937_64& rng, Eigen::Index n) {
    std::normal_distribution<double> normal;
    StateVector psi(n);
    for (auto& a : psi)
        a = {normal(rng), normal(rng)};
    return psi.normalized();
}

double energy(const Eigen::MatrixXd& h, const StateVector& psi) {
    return (psi.adjoint() * h.cast<cd>() * psi)(0).real();
}

}  // namespace

TEST_CASE("evolve_segment basics") {
    const Eigen::MatrixXd h = Eigen::Vector3d(0.5, -1.0, 2.0).asDiagonal();
    StateVector psi(3);
    psi << 1.0, 2.0, cd(0, 1);

    CHECK((evolve_segment(h, 0.0, psi) - psi).norm() < 1e-15);

    const StateVector out = evolve_segment(h, 0.8, psi);
    CHECK(std::abs(out(0) - std::exp(-kI * 0.4) * 1.0) < 1e-14);
    CHECK(std::abs(out(1) - std::exp(kI * 0.8) * 2.0) < 1e-14);
    CHECK(std::abs(out(2) - std::exp(-kI * 1.6) * cd(0, 1)) < 1e-14);

    CHECK_THROWS_AS(evolve_segment(h, -1.0, psi), std::invalid_argument);
    CHECK_THROWS_AS(evolve_segment(h, 1.0, StateVector::Zero(2)), std::invalid_argument);
    Eigen::MatrixXd asym = h;
    asym(0, 1) = 1.0;
    CHECK_THROWS_AS(evolve_segment(asym, 1.0, psi), std::invalid_argument);
}

TEST_CASE("Rabi oscillation of a two-level system") {
    const double g = 0.3;
    Eigen::Matrix2d h;
    h << 0.0, g, g, 0.0;
    StateVector psi(2);
    psi << 1.0, 0.0;
    for (double t : {0.1, 1.0, 5.0}) {
        const StateVector out = evolve_segment(h, t, psi);
        CHECK(std::norm(out(1)) == doctest::Approx(std::pow(std::sin(g * t), 2)).epsilon(1e-13));
    }
}

TEST_CASE("complex Hermitian input") {
    Eigen::Matrix2cd h;
    h << 1.0, cd(0, -0.5), cd(0, 0.5), -1.0;
    StateVector psi(2);
    psi << 1.0, 0.0;
    const StateVector out = evolve_segment(h, 0.7, psi);
    // exp(-i H t) = cos(|b| t) - i sin(|b| t) H / |b| for traceless H = b.sigma.
    const double b = std::sqrt(1.25);
    const StateVector expected =
        (std::cos(b * 0.7) * Eigen::Matrix2cd::Identity() - kI * std::sin(b * 0.7) / b * h) * psi;
    CHECK((out - expected).norm() < 1e-14);

    SegmentPropagator<Eigen::MatrixXcd> u(h);
    CHECK((u.apply(-0.7, u.apply(0.7, psi)) - psi).norm() < 1e-14);
}

TEST_CASE("unitarity over many segments") {
    const SystemParams p = reference_params(2, 2);
    const SegmentPropagator<Eigen::MatrixXd> on(hamiltonian_matrix(p, p.g_eff));
    const SegmentPropagator<Eigen::MatrixXd> off(hamiltonian_matrix(p, 0.0));
    std::mt19937_64 rng(1);
    StateVector psi = random_state(rng, p.space().dimension());
    const StateVector start = psi;
    const double dt = 0.0137;
    for (int k = 0; k < 10000; ++k)
        psi = (k % 2 == 0 ? on : off).apply(dt, psi);
    CHECK(std::abs(psi.norm() - 1.0) < 1e-10);
    for (int k = 9999; k >= 0; --k)
        psi = (k % 2 == 0 ? on : off).apply(-dt, psi);
    CHECK((psi - start).norm() < 1e-8);
}

TEST_CASE("zero coupling keeps |gg,0> in place") {
    SystemParams p = reference_params(2, 1);
    p.g_eff = 0.0;
    const Trajectory traj = propagate(p, CouplingSchedule(0.0, 0.5), 3.0, 0.1);
    for (const Sample& s : traj.samples) {
        CHECK(std::abs(s.state(0) - 1.0) < 1e-14);
        CHECK(s.state.tail(7).norm() < 1e-14);
    }
}

TEST_CASE("propagate samples and invariants") {
    const SystemParams p = reference_params(2, 2);
    const CouplingSchedule sch = CouplingSchedule::from_switching_frequency(p.g_eff, 5 * p.omega0);
    const Trajectory traj = propagate(p, sch, 5.0, 0.01);
    REQUIRE(traj.samples.size() == 501);
    CHECK(traj.samples.front().t == 0.0);
    CHECK(traj.samples.back().t == 5.0);
    CHECK(traj.sample_dt == 0.01);
    for (const Sample& s : traj.samples)
        CHECK(std::abs(s.state.norm() - 1.0) < 1e-12);

    SUBCASE("sampling grid does not change the result") {
        const Trajectory coarse = propagate(p, sch, 5.0, 0.5);
        for (const Sample& s : coarse.samples) {
            const auto k = std::size_t(std::llround(s.t / 0.01));
            CHECK((traj.samples[k].state - s.state).norm() < 1e-12);
        }
    }

    SUBCASE("energy is conserved within an on-segment") {
        const Eigen::MatrixXd h_on = hamiltonian_matrix(p, p.g_eff);
        const std::vector<double> times = {0.0, 0.2 * sch.half_period(), 0.6 * sch.half_period(),
                                           0.95 * sch.half_period()};
        const Trajectory t = propagate_at(p, sch, 1.0, times);
        const double e0 = energy(h_on, t.samples.front().state);
        for (const Sample& s : t.samples)
            CHECK(std::abs(energy(h_on, s.state) - e0) < 1e-10);
    }

    CHECK_THROWS_AS(propagate_at(p, sch, 1.0, {0.5, 0.2}), std::invalid_argument);
    CHECK_THROWS_AS(propagate_at(p, sch, 1.0, {2.0}), std::invalid_argument);
}

TEST_CASE("sample_times") {
    const auto t = sample_times(1.0, 0.25);
    CHECK(t == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
    const auto u = sample_times(1.0, 0.3);
    REQUIRE(u.size() == 5);
    CHECK(u.back() == 1.0);
    CHECK(sample_times(10.0, 0.01).size() == 1001);
    CHECK_THROWS_AS(sample_times(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("photon cutoff convergence") {
    const SystemParams p = reference_params(2, 2);
    const CouplingSchedule sch = CouplingSchedule::from_switching_frequency(p.g_eff, 20 * p.omega0);
    const ConvergenceReport r = convergence_check(p, sch, 10.0, 2);
    CHECK(r.n_max == 2);
    CHECK(r.converged);
    CHECK(r.sup_difference <= 1e-4);

    // With strong coupling one photon is not enough.
    SystemParams strong = p;
    strong.g_eff = 0.4 * p.omega_c;
    const ConvergenceReport s = convergence_check(
        strong, CouplingSchedule::from_switching_frequency(strong.g_eff, 3 * p.omega0), 5.0, 1);
    CHECK_FALSE(s.converged);

    CHECK_THROWS_AS(convergence_check(p, sch, 1.0, 0), std::invalid_argument);
}
