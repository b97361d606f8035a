#ifndef SQED_CLOSEDFORM2Q_HPP
#define SQED_CLOSEDFORM2Q_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "sqed/hilbert.hpp"

namespace sqed {

/// Resonance family a vanishing denominator belongs to.
enum class Resonance {
    TwoOmega0,   ///< varpi_s -> 2 omega0 (and odd sub-harmonics)
    Sum,         ///< varpi_s -> omega0 + omega_c (and odd sub-harmonics)
    Difference,  ///< varpi_s -> |omega_c - omega0| (and odd sub-harmonics)
    Degenerate,  ///< omega0 == omega_c
};

std::string to_string(Resonance r);

/// Thrown instead of evaluating inside the guard band of a divergent denominator.
class ResonanceError : public std::domain_error {
public:
    ResonanceError(Resonance which, const std::string& what) : std::domain_error(what), which_(which) {}
    Resonance which() const { return which_; }

private:
    Resonance which_;
};

/// Two qubits, n in {0, 1}, rad/ns.
struct ClosedFormParams {
    double omega0 = 0.0;
    double omega_c = 0.0;
    double g_eff = 0.0;
    double period = 0.0;  ///< T_s = 2 pi / varpi_s
    double guard = 1e-6;  ///< minimum |denominator|, relative to its scale

    static ClosedFormParams from_switching_frequency(double omega0, double omega_c, double g_eff,
                                                     double varpi_s);

    double sum_frequency() const { return omega0 + omega_c; }
    double switching_frequency() const;
};

// Closed-form first- and second-order coefficients from |gg,0>. alpha1 is the
// same for |ge,1> and |eg,1>.
std::complex<double> alpha1_ge1(double t, const ClosedFormParams& p);
std::complex<double> alpha1_eg1(double t, const ClosedFormParams& p);
std::complex<double> alpha2_gg0(double t, const ClosedFormParams& p);
std::complex<double> alpha2_ee0(double t, const ClosedFormParams& p);

/// Unnormalized |gg,0> + alpha1 (|ge,1> + |eg,1>) + alpha2_gg0 |gg,0> + alpha2_ee0 |ee,0>
/// in the HilbertSpace(2, 1) basis.
StateVector closedform_state(double t, const ClosedFormParams& p);

struct DivergenceLocations {
    double two_omega0 = 0.0;
    double sum = 0.0;
    double difference = 0.0;  ///< |omega_c - omega0|
    bool difference_degenerate = false;

    std::vector<double> values() const { return {two_omega0, sum, difference}; }
};

DivergenceLocations divergence_locations(const ClosedFormParams& p);

/// The cosines under the tan/sec factors of the closed forms, as
/// functions of varpi_s: cos(T Omega / 4), cos(T omega0 / 2), cos(T (omega_c - omega0) / 4).
struct DenominatorSample {
    double sum_quarter = 0.0;
    double omega0_half = 0.0;
    double difference_quarter = 0.0;
};

DenominatorSample closedform_denominators(double omega0, double omega_c, double varpi_s);

struct DenominatorZero {
    double varpi_s = 0.0;
    Resonance family = Resonance::Sum;
};

/// Locates sign changes of each denominator on a uniform grid of `samples`
/// points over (lo, hi) and refines them by bisection to ~1e-14 relative.
std::vector<DenominatorZero> scan_denominator_zeros(double omega0, double omega_c, double lo, double hi,
                                                    int samples = 20000);

}  // namespace sqed

#endif  // SQED_CLOSEDFORM2Q_HPP
