#ifndef SQED_COMMANDS_HPP
#define SQED_COMMANDS_HPP

#include <iosfwd>
#include <optional>
#include <vector>

#include "sqed/config.hpp"

namespace sqed {

/// Excitation probabilities of cfg.qubit_index on the sample grid.
struct PipelineCurves {
    std::vector<double> t;
    std::vector<double> p_exact;
    std::vector<double> p_pert;
};

PipelineCurves exact_and_perturbative(const RunConfig& cfg);

/// t_ns,p_excite,photon_exp,norm
void cmd_exact(const RunConfig& cfg, std::ostream& out);

/// t_ns,p_excite,norm_truncated
void cmd_perturb(const RunConfig& cfg, std::ostream& out);

struct CompareSummary {
    double sup_diff_pert = 0.0;
    double rms_diff_pert = 0.0;
    std::optional<double> sup_diff_cf;
    std::optional<double> rms_diff_cf;
    bool closed_form_applicable = false;
    std::size_t guarded_rows = 0;  ///< rows whose closed-form value was refused
};

/// t_ns,p_exact,p_pert,p_closedform,abs_diff_pert,abs_diff_cf
///
/// The closed-form columns are filled when n_qubits == 2, n_max >= 1 and
/// order >= 2; resonance-guarded rows leave them empty.
CompareSummary cmd_compare(const RunConfig& cfg, std::ostream& out);

struct SweepRange {
    double ratio_min = 4.0;
    double ratio_max = 24.0;
    int points = 21;
};

struct SweepRow {
    double ratio = 0.0;
    double sup_abs_diff = 0.0;
    double max_p_pert = 0.0;
};

/// One row per varpi_s / omega0, evaluated on `workers` threads (0 = hardware
/// concurrency) and written in ratio order: switch_ratio,sup_abs_diff,max_p_pert
std::vector<SweepRow> cmd_sweep(const RunConfig& cfg, const SweepRange& range, std::ostream& out,
                                unsigned workers = 0);

}  // namespace sqed

#endif  // SQED_COMMANDS_HPP
