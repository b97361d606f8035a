#include <doctest.h>

#include <bit>
#include <random>

#include "sqed/model.hpp"

using namespace sqed;
using cd = std::complex<double>;

namespace {

// Partial sums of the step-function series of the square wave in the Laplace
// domain: g0/(2s) {1 + sum_k [e^{-k T s} - 2 e^{-(2k+1) T s / 2} + e^{-(k+1) T s}]}.
cd laplace_series(double g0, double period, cd s, int terms) {
    cd sum = 1.0;
    for (int k = 0; k < terms; ++k)
        sum += std::exp(-double(k) * period * s) - 2.0 * std::exp(-double(2 * k + 1) * 0.5 * period * s) +
               std::exp(-double(k + 1) * period * s);
    return g0 / (2.0 * s) * sum;
}

}  // namespace

TEST_CASE("coupling_at follows the square wave") {
    const CouplingSchedule sch(0.3, 2.0);
    CHECK(sch.coupling_at(0.0) == 0.3);
    CHECK(sch.coupling_at(0.75 * sch.period()) == 0.0);
    CHECK(sch.coupling_at(0.999) == 0.3);
    CHECK(sch.coupling_at(1.0) == 0.0);  // right-continuous at the switch-off instant
    CHECK(sch.coupling_at(2.0) == 0.3);  // and at the switch-on instant
    CHECK_THROWS_AS(sch.coupling_at(-1e-3), std::domain_error);

    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 50.0);
    for (int i = 0; i < 1000; ++i) {
        const double t = u(rng);
        // Avoid instants where t and t + T round to opposite sides of a switch.
        const double phase = std::fmod(t, 1.0);
        if (phase < 1e-9 || phase > 1.0 - 1e-9)
            continue;
        CHECK(sch.coupling_at(t + sch.period()) == sch.coupling_at(t));
    }

    CHECK(CouplingSchedule::from_switching_frequency(1.0, kTwoPi).period() == doctest::Approx(1.0));
    CHECK_THROWS_AS(CouplingSchedule(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("switching_segments alternate on/off and cover [0, t_final]") {
    const CouplingSchedule sch(0.5, 0.4);
    const auto segs = switching_segments(sch, 1.0);
    REQUIRE(segs.size() == 5);
    for (std::size_t k = 0; k < segs.size(); ++k) {
        CHECK(segs[k].begin == doctest::Approx(0.2 * double(k)));
        CHECK(segs[k].coupling == (k % 2 == 0 ? 0.5 : 0.0));
        if (k > 0)
            CHECK(segs[k].begin == segs[k - 1].end);
    }
    CHECK(segs.back().end == 1.0);
}

TEST_CASE("laplace_coupling at large real s") {
    const double g0 = 0.7, period = 1.3;
    for (double sigma_t : {60.0, 100.0, 500.0}) {
        const double sigma = sigma_t / period;
        const cd g = CouplingSchedule(g0, period).laplace_coupling(sigma);
        // The first half-period is on, so G(s) -> g0 / s for s T >> 1.
        CHECK(std::abs(g - g0 / sigma) <= 1e-6 * g0 / sigma);
        CHECK(g.real() == doctest::Approx(g0 / (sigma * (1.0 + std::exp(-0.5 * sigma_t)))).epsilon(1e-14));
    }
}

TEST_CASE("laplace_coupling poles") {
    const CouplingSchedule sch(1.0, 2.0);
    CHECK_THROWS_AS(sch.laplace_coupling(0.0), LaplacePoleError);
    CHECK_THROWS_AS(sch.laplace_coupling(cd(0.0, kTwoPi / sch.period())), LaplacePoleError);
    CHECK_THROWS_AS(sch.laplace_coupling(cd(0.0, 3.0 * kTwoPi / sch.period())), LaplacePoleError);
    CHECK_NOTHROW(sch.laplace_coupling(cd(0.0, 2.0 * kTwoPi / sch.period())));
}

TEST_CASE("laplace_coupling equals the limit of the step series") {
    const double g0 = 0.9, period = 0.7;
    const CouplingSchedule sch(g0, period);
    const cd s1 = cd(1.0, 1.0) / period;
    CHECK(std::abs(sch.laplace_coupling(s1) - laplace_series(g0, period, s1, 1000)) <= 1e-9);

    // 20-point grid with Re(s) T >= 0.2.
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 5; ++j) {
            const cd s = cd(0.2 + 0.6 * i, -9.0 + 4.5 * j) / period;
            const cd closed = sch.laplace_coupling(s);
            CHECK(std::abs(closed - laplace_series(g0, period, s, 10000)) <= 1e-9);
        }
}

TEST_CASE("hamiltonian_matrix entries") {
    SystemParams p = reference_params(2, 1);
    const HilbertSpace space = p.space();

    const Eigen::MatrixXd h0 = hamiltonian_matrix(p, 0.0);
    CHECK(h0.isDiagonal());
    const auto ge1 = space.index_of("ge", 1);
    CHECK(h0(ge1, ge1) == doctest::Approx(p.omega_c + p.omega0).epsilon(1e-15));
    CHECK(h0(space.index_of("ee", 1), space.index_of("ee", 1)) ==
          doctest::Approx(p.omega_c + 2 * p.omega0).epsilon(1e-15));

    const double g = 0.123;
    const Eigen::MatrixXd h = hamiltonian_matrix(p, g);
    CHECK(h(ge1, space.index_of("gg", 0)) == g);                           // sigma+ a^dagger
    CHECK(h(space.index_of("ge", 0), space.index_of("gg", 1)) == g);       // sigma+ a
    CHECK(h(space.index_of("gg", 0), space.index_of("ee", 0)) == 0.0);     // two flips
    CHECK_THROWS_AS(hamiltonian_matrix(p, -1.0), std::invalid_argument);

    p.n_max = 3;
    const Eigen::MatrixXd h3 = hamiltonian_matrix(p, g);
    const HilbertSpace s3 = p.space();
    CHECK(h3(s3.index_of("ge", 3), s3.index_of("gg", 2)) == doctest::Approx(g * std::sqrt(3.0)));
}

TEST_CASE("hamiltonian_matrix is symmetric and obeys the coupling selection rules") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.5, 10.0);
    for (int trial = 0; trial < 20; ++trial) {
        SystemParams p{u(rng), u(rng), 0.1 * u(rng) / 10.0, 1 + trial % 3, trial % 4};
        const Eigen::MatrixXd h = hamiltonian_matrix(p, p.g_eff);
        CHECK((h - h.transpose()).cwiseAbs().maxCoeff() == 0.0);

        const HilbertSpace space = p.space();
        for (Eigen::Index r = 0; r < h.rows(); ++r)
            for (Eigen::Index c = 0; c < h.cols(); ++c) {
                if (r == c || h(r, c) == 0.0)
                    continue;
                const int dx = space.excitation_count(space.state(r)) - space.excitation_count(space.state(c));
                const int dn = space.state(r).photons - space.state(c).photons;
                CHECK(std::abs(dx) == 1);
                CHECK(std::abs(dn) == 1);
                CHECK(std::popcount(space.state(r).bits ^ space.state(c).bits) == 1);
            }
    }
}

TEST_CASE("SystemParams validation") {
    SystemParams p = reference_params();
    CHECK_NOTHROW(p.validate());
    p.g_eff = p.omega_c * 1.01;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = reference_params();
    p.omega0 = 0.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}
