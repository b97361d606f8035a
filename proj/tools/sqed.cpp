// sqed: exact, perturbative and closed-form dynamics of qubits coupled to a
// resonator through a periodically switched coupling.
//
//   sqed exact|perturb|compare|sweep [--config cfg.json] --out result.csv [overrides]
//
// Exit codes: 0 success, 2 config error, 3 resonance guard hit (output still
// written), 4 I/O error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sqed/closedform2q.hpp"
#include "sqed/commands.hpp"
#include "sqed/config.hpp"
#include "sqed/format.hpp"

namespace {

enum ExitCode { kOk = 0, kConfigError = 2, kResonance = 3, kIoError = 4 };

struct Options {
    std::string config_path;
    std::string out_path;
    std::optional<double> switch_ratio;
    std::optional<int> order;
    std::optional<double> t_final_ns;
    std::optional<int> n_max;
    sqed::SweepRange range;
};

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("--config", opt.config_path, "flat JSON config (defaults reproduce the reference run)");
    cmd->add_option("--out", opt.out_path, "CSV output path")->required();
    cmd->add_option("--switch-ratio", opt.switch_ratio, "varpi_s / omega0 (replaces switch_freq_ghz)");
    cmd->add_option("--order", opt.order, "perturbative order (0..4)");
    cmd->add_option("--t-final-ns", opt.t_final_ns, "final time in ns");
    cmd->add_option("--nmax", opt.n_max, "photon cutoff");
}

sqed::RunConfig resolve(const Options& opt) {
    sqed::RunConfig cfg = opt.config_path.empty() ? sqed::RunConfig{} : sqed::load_config(opt.config_path);
    if (opt.switch_ratio) {
        cfg.switch_freq_ghz.reset();
        cfg.switch_ratio = opt.switch_ratio;
    }
    if (opt.order)
        cfg.order = *opt.order;
    if (opt.t_final_ns)
        cfg.t_final_ns = *opt.t_final_ns;
    if (opt.n_max)
        cfg.n_max = opt.n_max;
    cfg.validate();
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Qubits in a resonator with switched coupling: exact, perturbative and closed-form dynamics"};
    app.require_subcommand(1);
    Options opt;

    auto* exact = app.add_subcommand("exact", "exact piecewise propagation");
    auto* perturb = app.add_subcommand("perturb", "order-by-order perturbative engine");
    auto* compare = app.add_subcommand("compare", "exact vs perturbative vs closed form");
    auto* sweep = app.add_subcommand("sweep", "sup |p_exact - p_pert| over a range of varpi_s / omega0");
    for (auto* cmd : {exact, perturb, compare, sweep})
        add_common(cmd, opt);
    sweep->add_option("--ratio-min", opt.range.ratio_min, "smallest varpi_s / omega0");
    sweep->add_option("--ratio-max", opt.range.ratio_max, "largest varpi_s / omega0");
    sweep->add_option("--points", opt.range.points, "number of ratios (>= 2)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kConfigError;
    }

    sqed::RunConfig cfg;
    try {
        cfg = resolve(opt);
    } catch (const sqed::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return kIoError;
    }

    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out) {
        std::cerr << "I/O error: cannot open '" << opt.out_path << "' for writing\n";
        return kIoError;
    }

    int rc = kOk;
    try {
        if (*exact) {
            sqed::cmd_exact(cfg, out);
        } else if (*perturb) {
            sqed::cmd_perturb(cfg, out);
        } else if (*compare) {
            const auto s = sqed::cmd_compare(cfg, out);
            std::cout << "sup_diff_pert=" << sqed::format_double(s.sup_diff_pert)
                      << " rms_diff_pert=" << sqed::format_double(s.rms_diff_pert);
            if (s.sup_diff_cf)
                std::cout << " sup_diff_cf=" << sqed::format_double(*s.sup_diff_cf)
                          << " rms_diff_cf=" << sqed::format_double(*s.rms_diff_cf);
            if (s.guarded_rows > 0) {
                std::cout << " closed_form_guarded_rows=" << s.guarded_rows;
                rc = kResonance;
            }
            std::cout << '\n';
        } else {
            sqed::cmd_sweep(cfg, opt.range, out);
        }
    } catch (const sqed::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const sqed::ResonanceError& e) {
        std::cerr << "resonance guard: " << e.what() << '\n';
        return kResonance;
    }

    out.flush();
    if (!out) {
        std::cerr << "I/O error: failed writing '" << opt.out_path << "'\n";
        return kIoError;
    }
    return rc;
}
