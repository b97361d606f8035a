#include "sqed/model.hpp"

#include <cmath>

namespace sqed {

void SystemParams::validate() const {
    auto fail = [](const std::string& what) { throw std::invalid_argument("SystemParams: " + what); };
    if (!(omega0 > 0.0) || !std::isfinite(omega0))
        fail("omega0 must be finite and > 0");
    if (!(omega_c > 0.0) || !std::isfinite(omega_c))
        fail("omega_c must be finite and > 0");
    if (!(g_eff >= 0.0) || !std::isfinite(g_eff))
        fail("g_eff must be finite and >= 0");
    if (g_eff >= omega0 || g_eff >= omega_c)
        fail("g_eff must be smaller than omega0 and omega_c");
    if (n_qubits < 1)
        fail("n_qubits must be >= 1");
    if (n_max < 0)
        fail("n_max must be >= 0");
}

SystemParams reference_params(int n_qubits, int n_max) {
    return {ghz_to_rad_per_ns(5.439), ghz_to_rad_per_ns(4.343), ghz_to_rad_per_ns(0.050), n_qubits,
            n_max};
}

CouplingSchedule::CouplingSchedule(double g0, double period) : g0_(g0), period_(period) {
    if (!(period > 0.0) || !std::isfinite(period))
        throw std::invalid_argument("CouplingSchedule: period must be finite and > 0");
    if (!std::isfinite(g0))
        throw std::invalid_argument("CouplingSchedule: g0 must be finite");
}

CouplingSchedule CouplingSchedule::from_switching_frequency(double g0, double varpi_s) {
    if (!(varpi_s > 0.0))
        throw std::invalid_argument("CouplingSchedule: switching frequency must be > 0");
    return {g0, kTwoPi / varpi_s};
}

CouplingSchedule CouplingSchedule::constant_over(double g0, double t_final) {
    return {g0, 2.0 * t_final};
}

bool CouplingSchedule::is_on(double t) const {
    if (t < 0.0)
        throw std::domain_error("coupling_at: negative time");
    const double h = half_period();
    // Switching instants are k * h; snap so that t == k * h lands in segment k.
    auto k = static_cast<long long>(std::floor(t / h));
    if (double(k + 1) * h <= t)
        ++k;
    else if (double(k) * h > t)
        --k;
    return k % 2 == 0;
}

double CouplingSchedule::coupling_at(double t) const { return is_on(t) ? g0_ : 0.0; }

std::complex<double> CouplingSchedule::laplace_coupling(std::complex<double> s) const {
    constexpr double tol = 1e-10;
    if (std::abs(s) * period_ < tol)
        throw LaplacePoleError("laplace_coupling: pole at s = 0");
    const std::complex<double> denom = 1.0 + std::exp(-0.5 * period_ * s);
    if (std::abs(denom) < tol)
        throw LaplacePoleError("laplace_coupling: pole of the switching family s = 2 pi i (2k+1) / T_s");
    return g0_ / (s * denom);
}

std::vector<Segment> switching_segments(const CouplingSchedule& schedule, double t_final) {
    if (!(t_final > 0.0) || !std::isfinite(t_final))
        throw std::invalid_argument("switching_segments: t_final must be finite and > 0");
    const double h = schedule.half_period();
    std::vector<Segment> out;
    for (long long k = 0;; ++k) {
        const double begin = double(k) * h;
        if (begin >= t_final)
            break;
        const double end = std::min(double(k + 1) * h, t_final);
        out.push_back({begin, end, k % 2 == 0 ? schedule.g0() : 0.0});
    }
    return out;
}

double unperturbed_energy(const SystemParams& params, const HilbertSpace& space, const BasisState& state) {
    return params.omega_c * state.photons + params.omega0 * space.excitation_count(state);
}

Eigen::MatrixXd interaction_matrix(const HilbertSpace& space) {
    const Eigen::Index dim = space.dimension();
    Eigen::MatrixXd v = Eigen::MatrixXd::Zero(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
        const BasisState& from = space.state(col);
        for (int q = 0; q < space.n_qubits(); ++q) {
            const std::uint32_t flipped = from.bits ^ space.qubit_mask(q);
            // Each qubit flip pairs with one photon lowering (n -> n-1) and one raising (n -> n+1).
            for (int photons : {from.photons - 1, from.photons + 1}) {
                if (photons < 0 || photons > space.n_max())
                    continue;
                const Eigen::Index row = space.index_of(BasisState{flipped, photons});
                v(row, col) = std::sqrt(double(std::max(from.photons, photons)));
            }
        }
    }
    return v;
}

Eigen::MatrixXd hamiltonian_matrix(const SystemParams& params, double coupling_value) {
    if (coupling_value < 0.0)
        throw std::invalid_argument("hamiltonian_matrix: coupling_value must be >= 0");
    const HilbertSpace space = params.space();
    Eigen::MatrixXd h = coupling_value * interaction_matrix(space);
    for (Eigen::Index k = 0; k < space.dimension(); ++k)
        h(k, k) = unperturbed_energy(params, space, space.state(k));
    return h;
}

}  // namespace sqed
