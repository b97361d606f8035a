#ifndef SQED_MODEL_HPP
#define SQED_MODEL_HPP

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "sqed/hilbert.hpp"

namespace sqed {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// GHz (ordinary frequency) to rad/ns.
constexpr double ghz_to_rad_per_ns(double ghz) { return kTwoPi * ghz; }

/// Physical parameters, all frequencies in rad/ns, hbar = 1.
///
/// Only the product of the expansion parameter and the coupling amplitude
/// enters the dynamics, so the coupling is carried as g_eff.
struct SystemParams {
    double omega0 = 0.0;   ///< qubit transition frequency
    double omega_c = 0.0;  ///< cavity frequency
    double g_eff = 0.0;    ///< coupling amplitude while switched on
    int n_qubits = 2;
    int n_max = 1;

    /// Throws std::invalid_argument naming the violated constraint.
    void validate() const;

    HilbertSpace space() const { return {n_qubits, n_max}; }
};

/// Reference values: omega0 = 2pi*5.439, omega_c = 2pi*4.343,
/// g_eff = 2pi*0.050 (rad/ns).
SystemParams reference_params(int n_qubits = 2, int n_max = 1);

/// Thrown when G(s) is evaluated on one of its poles.
class LaplacePoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Square-wave coupling: g0 on [k T, (k + 1/2) T), 0 on [(k + 1/2) T, (k + 1) T).
class CouplingSchedule {
public:
    CouplingSchedule(double g0, double period);

    static CouplingSchedule from_switching_frequency(double g0, double varpi_s);
    /// A schedule that stays on over [0, t_final]: period 2 * t_final.
    static CouplingSchedule constant_over(double g0, double t_final);

    double g0() const { return g0_; }
    double period() const { return period_; }
    double half_period() const { return 0.5 * period_; }
    double switching_frequency() const { return kTwoPi / period_; }

    bool is_on(double t) const;
    double coupling_at(double t) const;

    /// Laplace transform of the schedule, g0 / (s (1 + exp(-T s / 2))).
    std::complex<double> laplace_coupling(std::complex<double> s) const;

private:
    double g0_;
    double period_;
};

/// A half-period interval [begin, end) with constant coupling.
struct Segment {
    double begin = 0.0;
    double end = 0.0;
    double coupling = 0.0;
};

/// Splits [0, t_final] at every switching instant.
std::vector<Segment> switching_segments(const CouplingSchedule& schedule, double t_final);

/// omega_c * n + omega0 * (number of excited qubits).
double unperturbed_energy(const SystemParams& params, const HilbertSpace& space, const BasisState& state);

/// Interaction operator with unit coupling: sum over qubits of
/// sigma+ a + sigma- a^dagger + sigma+ a^dagger + sigma- a, truncated at n_max.
Eigen::MatrixXd interaction_matrix(const HilbertSpace& space);

/// H0 + coupling * V in the canonical basis of params.space(). Real symmetric.
Eigen::MatrixXd hamiltonian_matrix(const SystemParams& params, double coupling_value);

}  // namespace sqed

#endif  // SQED_MODEL_HPP
