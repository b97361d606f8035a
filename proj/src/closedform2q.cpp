#include "sqed/closedform2q.hpp"

#include <algorithm>
#include <cmath>

#include "sqed/model.hpp"

namespace sqed {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

void require(bool ok, Resonance which, const char* what) {
    if (!ok)
        throw ResonanceError(which, std::string("closed form: ") + what);
}

double checked_tan(double angle, double guard, Resonance which, const char* what) {
    const double c = std::cos(angle);
    require(std::abs(c) >= guard, which, what);
    return std::sin(angle) / c;
}

struct Trig {
    double tan_sum;         // tan(T Omega / 4)
    double sec2_sum;        // sec^2(T Omega / 4)
};

Trig sum_trig(const ClosedFormParams& p) {
    const double angle = 0.25 * p.period * p.sum_frequency();
    const double t = checked_tan(angle, p.guard, Resonance::Sum, "varpi_s within the omega0 + omega_c guard band");
    const double c = std::cos(angle);
    return {t, 1.0 / (c * c)};
}

}  // namespace

std::string to_string(Resonance r) {
    switch (r) {
    case Resonance::TwoOmega0:
        return "2*omega0";
    case Resonance::Sum:
        return "omega0+omega_c";
    case Resonance::Difference:
        return "|omega_c-omega0|";
    case Resonance::Degenerate:
        return "omega0==omega_c";
    }
    return "unknown";
}

ClosedFormParams ClosedFormParams::from_switching_frequency(double omega0, double omega_c, double g_eff,
                                                            double varpi_s) {
    return {omega0, omega_c, g_eff, kTwoPi / varpi_s};
}

double ClosedFormParams::switching_frequency() const { return kTwoPi / period; }

std::complex<double> alpha1_ge1(double t, const ClosedFormParams& p) {
    const double omega = p.sum_frequency();
    const std::complex<double> denom = 1.0 + std::exp(0.5 * kI * p.period * omega);
    require(std::abs(denom) >= 2.0 * p.guard, Resonance::Sum, "varpi_s within the omega0 + omega_c guard band");
    return p.g_eff / (2.0 * omega) * (-1.0 + 2.0 * std::exp(-kI * t * omega) / denom);
}

std::complex<double> alpha1_eg1(double t, const ClosedFormParams& p) { return alpha1_ge1(t, p); }

std::complex<double> alpha2_gg0(double t, const ClosedFormParams& p) {
    const double omega = p.sum_frequency();
    const Trig trig = sum_trig(p);
    const std::complex<double> phase = std::exp(-kI * t * omega);
    const std::complex<double> bracket = kI * (2.0 * t + p.period) * omega -
                                         2.0 * kI * (1.0 + phase) * trig.tan_sum + 2.0 * phase -
                                         2.0 * trig.sec2_sum;
    return p.g_eff * p.g_eff * bracket / (4.0 * omega * omega);
}

std::complex<double> alpha2_ee0(double t, const ClosedFormParams& p) {
    const double w0 = p.omega0;
    const double wc = p.omega_c;
    require(std::abs(w0 - wc) >= p.guard * w0, Resonance::Degenerate, "omega0 == omega_c");
    const Trig trig = sum_trig(p);
    const double tan_half = checked_tan(0.5 * p.period * w0, p.guard, Resonance::TwoOmega0,
                                        "varpi_s within the 2 omega0 guard band");
    const double tan_diff = checked_tan(0.25 * p.period * (wc - w0), p.guard, Resonance::Difference,
                                        "varpi_s within the |omega_c - omega0| guard band");

    const std::complex<double> sum_phase = std::exp(-kI * t * (w0 + wc));
    const std::complex<double> qubit_phase = std::exp(-2.0 * kI * t * w0);
    const std::complex<double> first = 2.0 * kI * sum_phase * (trig.tan_sum + kI) / (w0 * w0 - wc * wc);
    const std::complex<double> second =
        qubit_phase * (2.0 * w0 * tan_diff * (trig.tan_sum + kI) - 2.0 * kI * wc * tan_half + w0 + wc) /
        (w0 * (w0 - wc) * (w0 + wc));
    const double third = 1.0 / (w0 * w0 + w0 * wc);
    return 0.25 * p.g_eff * p.g_eff * (first + second + third);
}

StateVector closedform_state(double t, const ClosedFormParams& p) {
    const HilbertSpace space(2, 1);
    StateVector psi = StateVector::Zero(space.dimension());
    const std::complex<double> a1 = alpha1_ge1(t, p);
    psi(space.index_of("gg", 0)) = 1.0 + alpha2_gg0(t, p);
    psi(space.index_of("ge", 1)) = a1;
    psi(space.index_of("eg", 1)) = alpha1_eg1(t, p);
    psi(space.index_of("ee", 0)) = alpha2_ee0(t, p);
    return psi;
}

DivergenceLocations divergence_locations(const ClosedFormParams& p) {
    DivergenceLocations loc;
    loc.two_omega0 = 2.0 * p.omega0;
    loc.sum = p.omega0 + p.omega_c;
    loc.difference = std::abs(p.omega_c - p.omega0);
    loc.difference_degenerate = loc.difference <= p.guard * p.omega0;
    return loc;
}

DenominatorSample closedform_denominators(double omega0, double omega_c, double varpi_s) {
    const double period = kTwoPi / varpi_s;
    return {std::cos(0.25 * period * (omega0 + omega_c)), std::cos(0.5 * period * omega0),
            std::cos(0.25 * period * (omega_c - omega0))};
}

std::vector<DenominatorZero> scan_denominator_zeros(double omega0, double omega_c, double lo, double hi,
                                                    int samples) {
    if (!(lo > 0.0 && hi > lo) || samples < 2)
        throw std::invalid_argument("scan_denominator_zeros: need 0 < lo < hi and samples >= 2");

    using Member = double DenominatorSample::*;
    const std::pair<Member, Resonance> families[] = {
        {&DenominatorSample::omega0_half, Resonance::TwoOmega0},
        {&DenominatorSample::sum_quarter, Resonance::Sum},
        {&DenominatorSample::difference_quarter, Resonance::Difference},
    };

    std::vector<DenominatorZero> zeros;
    for (const auto& [member, family] : families) {
        auto f = [&, member = member](double w) { return closedform_denominators(omega0, omega_c, w).*member; };
        double prev_w = lo;
        double prev_f = f(lo);
        for (int i = 1; i < samples; ++i) {
            const double w = lo + (hi - lo) * double(i) / double(samples - 1);
            const double fw = f(w);
            if ((prev_f < 0.0) != (fw < 0.0)) {
                double a = prev_w, b = w, fa = prev_f;
                for (int it = 0; it < 200 && b - a > 1e-15 * b; ++it) {
                    const double m = 0.5 * (a + b);
                    const double fm = f(m);
                    if ((fa < 0.0) == (fm < 0.0)) {
                        a = m;
                        fa = fm;
                    } else {
                        b = m;
                    }
                }
                zeros.push_back({0.5 * (a + b), family});
            }
            prev_w = w;
            prev_f = fw;
        }
    }
    std::sort(zeros.begin(), zeros.end(),
              [](const DenominatorZero& x, const DenominatorZero& y) { return x.varpi_s < y.varpi_s; });
    return zeros;
}

}  // namespace sqed
