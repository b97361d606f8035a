#include "sqed/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>

#include "sqed/closedform2q.hpp"
#include "sqed/csv.hpp"
#include "sqed/engine.hpp"
#include "sqed/propagator.hpp"

namespace sqed {

PipelineCurves exact_and_perturbative(const RunConfig& cfg) {
    cfg.validate();
    const SystemParams params = cfg.system_params();
    const CouplingSchedule schedule = cfg.schedule();
    const HilbertSpace space = params.space();

    PipelineCurves curves;
    curves.t = sample_times(cfg.t_final_ns, cfg.sample_dt_ns);
    const Trajectory traj = propagate_at(params, schedule, cfg.t_final_ns, curves.t);
    const PerturbativeSolution sol = run_to_order(params, schedule, cfg.order, cfg.t_final_ns);
    for (std::size_t k = 0; k < curves.t.size(); ++k) {
        curves.p_exact.push_back(excitation_probability(space, traj.samples[k].state, cfg.qubit_index));
        curves.p_pert.push_back(pert_excitation_probability(sol, cfg.qubit_index, curves.t[k]));
    }
    return curves;
}

void cmd_exact(const RunConfig& cfg, std::ostream& out) {
    cfg.validate();
    const SystemParams params = cfg.system_params();
    const HilbertSpace space = params.space();
    const Trajectory traj = propagate(params, cfg.schedule(), cfg.t_final_ns, cfg.sample_dt_ns);
    csv::write_header(out, {"t_ns", "p_excite", "photon_exp", "norm"});
    for (const Sample& s : traj.samples)
        csv::write_row(out, {s.t, excitation_probability(space, s.state, cfg.qubit_index),
                             photon_expectation(space, s.state), s.state.norm()});
}

void cmd_perturb(const RunConfig& cfg, std::ostream& out) {
    cfg.validate();
    const PerturbativeSolution sol = run_to_order(cfg.system_params(), cfg.schedule(), cfg.order, cfg.t_final_ns);
    csv::write_header(out, {"t_ns", "p_excite", "norm_truncated"});
    for (double t : sample_times(cfg.t_final_ns, cfg.sample_dt_ns)) {
        const StateVector psi = sol.state(t);
        csv::write_row(out, {t, excitation_probability(sol.space(), psi, cfg.qubit_index), psi.norm()});
    }
}

CompareSummary cmd_compare(const RunConfig& cfg, std::ostream& out) {
    const PipelineCurves curves = exact_and_perturbative(cfg);

    CompareSummary summary;
    summary.closed_form_applicable = cfg.n_qubits == 2 && cfg.effective_n_max() >= 1 && cfg.order >= 2;
    const ClosedFormParams cf = ClosedFormParams::from_switching_frequency(
        ghz_to_rad_per_ns(cfg.omega0_ghz), ghz_to_rad_per_ns(cfg.omega_c_ghz), ghz_to_rad_per_ns(cfg.g_eff_ghz),
        cfg.switching_frequency());
    const HilbertSpace cf_space(2, 1);

    double sum_sq_pert = 0.0;
    double sum_sq_cf = 0.0;
    std::size_t cf_rows = 0;

    csv::write_header(out, {"t_ns", "p_exact", "p_pert", "p_closedform", "abs_diff_pert", "abs_diff_cf"});
    for (std::size_t k = 0; k < curves.t.size(); ++k) {
        const double diff = std::abs(curves.p_exact[k] - curves.p_pert[k]);
        summary.sup_diff_pert = std::max(summary.sup_diff_pert, diff);
        sum_sq_pert += diff * diff;

        csv::Cell p_cf, diff_cf;
        if (summary.closed_form_applicable) {
            try {
                p_cf = excitation_probability(cf_space, closedform_state(curves.t[k], cf), cfg.qubit_index);
                diff_cf = std::abs(curves.p_exact[k] - *p_cf);
                summary.sup_diff_cf = std::max(summary.sup_diff_cf.value_or(0.0), *diff_cf);
                sum_sq_cf += *diff_cf * *diff_cf;
                ++cf_rows;
            } catch (const ResonanceError&) {
                ++summary.guarded_rows;
            }
        }
        csv::write_row(out, {curves.t[k], curves.p_exact[k], curves.p_pert[k], p_cf, diff, diff_cf});
    }
    summary.rms_diff_pert = std::sqrt(sum_sq_pert / double(curves.t.size()));
    if (cf_rows > 0)
        summary.rms_diff_cf = std::sqrt(sum_sq_cf / double(cf_rows));
    return summary;
}

std::vector<SweepRow> cmd_sweep(const RunConfig& cfg, const SweepRange& range, std::ostream& out,
                                unsigned workers) {
    if (!(range.ratio_min > 0.0) || !(range.ratio_max > range.ratio_min))
        throw ConfigError("ratio_min", "need 0 < ratio_min < ratio_max");
    if (range.points < 2)
        throw ConfigError("points", "must be >= 2");
    cfg.validate();

    std::vector<SweepRow> rows(std::size_t(range.points));
    for (int i = 0; i < range.points; ++i)
        rows[std::size_t(i)].ratio =
            range.ratio_min + (range.ratio_max - range.ratio_min) * double(i) / double(range.points - 1);

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (std::size_t i = next++; i < rows.size(); i = next++) {
            try {
                RunConfig point = cfg;
                point.switch_freq_ghz.reset();
                point.switch_ratio = rows[i].ratio;
                const PipelineCurves c = exact_and_perturbative(point);
                for (std::size_t k = 0; k < c.t.size(); ++k) {
                    rows[i].sup_abs_diff = std::max(rows[i].sup_abs_diff, std::abs(c.p_exact[k] - c.p_pert[k]));
                    rows[i].max_p_pert = std::max(rows[i].max_p_pert, c.p_pert[k]);
                }
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };

    if (workers == 0)
        workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, unsigned(rows.size()));
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w)
        pool.emplace_back(work);
    work();
    for (auto& th : pool)
        th.join();
    if (failure)
        std::rethrow_exception(failure);

    csv::write_header(out, {"switch_ratio", "sup_abs_diff", "max_p_pert"});
    for (const SweepRow& r : rows)
        csv::write_row(out, {r.ratio, r.sup_abs_diff, r.max_p_pert});
    return rows;
}

}  // namespace sqed
