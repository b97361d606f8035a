#include "sqed/propagator.hpp"

#include <algorithm>

namespace sqed {

std::vector<double> sample_times(double t_final, double sample_dt) {
    if (!(t_final > 0.0) || !(sample_dt > 0.0))
        throw std::invalid_argument("sample_times: t_final and sample_dt must be > 0");
    std::vector<double> times;
    const auto count = static_cast<long long>(std::floor(t_final / sample_dt * (1.0 + 1e-12)));
    times.reserve(std::size_t(count) + 2);
    for (long long k = 0; k <= count; ++k)
        times.push_back(std::min(double(k) * sample_dt, t_final));
    if (t_final - times.back() > 1e-9 * sample_dt)
        times.push_back(t_final);
    times.erase(std::unique(times.begin(), times.end()), times.end());
    return times;
}

Trajectory propagate_at(const SystemParams& params, const CouplingSchedule& schedule, double t_final,
                        const std::vector<double>& times) {
    params.validate();
    if (!std::is_sorted(times.begin(), times.end()) || (!times.empty() && (times.front() < 0.0 || times.back() > t_final)))
        throw std::invalid_argument("propagate: sample times must be sorted within [0, t_final]");

    const SegmentPropagator<Eigen::MatrixXd> on(hamiltonian_matrix(params, schedule.g0()));
    const SegmentPropagator<Eigen::MatrixXd> off(hamiltonian_matrix(params, 0.0));
    const auto segments = switching_segments(schedule, t_final);

    Trajectory traj{params, schedule, 0.0, {}};
    traj.samples.reserve(times.size());

    StateVector psi = params.space().basis_vector(0);
    auto next = times.begin();
    for (std::size_t k = 0; k < segments.size(); ++k) {
        const Segment& seg = segments[k];
        const bool last = k + 1 == segments.size();
        const auto& u = seg.coupling != 0.0 ? on : off;
        for (; next != times.end() && (*next < seg.end || (last && *next <= seg.end)); ++next)
            traj.samples.push_back({*next, u.apply(*next - seg.begin, psi)});
        psi = u.apply(seg.end - seg.begin, psi);
    }
    return traj;
}

Trajectory propagate(const SystemParams& params, const CouplingSchedule& schedule, double t_final,
                     double sample_dt) {
    Trajectory traj = propagate_at(params, schedule, t_final, sample_times(t_final, sample_dt));
    traj.sample_dt = sample_dt;
    return traj;
}

ConvergenceReport convergence_check(const SystemParams& params, const CouplingSchedule& schedule,
                                    double t_final, int n_max, double sample_dt) {
    if (n_max < 1)
        throw std::invalid_argument("convergence_check: n_max must be >= 1");
    SystemParams lo = params;
    lo.n_max = n_max;
    SystemParams hi = params;
    hi.n_max = n_max + 1;
    const Trajectory a = propagate(lo, schedule, t_final, sample_dt);
    const Trajectory b = propagate(hi, schedule, t_final, sample_dt);
    const HilbertSpace sa = lo.space();
    const HilbertSpace sb = hi.space();

    ConvergenceReport report;
    report.n_max = n_max;
    for (std::size_t k = 0; k < a.samples.size(); ++k) {
        const double pa = excitation_probability(sa, a.samples[k].state, 0);
        const double pb = excitation_probability(sb, b.samples[k].state, 0);
        report.sup_difference = std::max(report.sup_difference, std::abs(pa - pb));
    }
    report.converged = report.sup_difference <= report.threshold;
    return report;
}

}  // namespace sqed
