#ifndef SQED_CONFIG_HPP
#define SQED_CONFIG_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "sqed/model.hpp"

namespace sqed {

/// Invalid configuration; field() names the offending key.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, const std::string& constraint)
        : std::runtime_error(field + ": " + constraint), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

/// Flat run configuration. Frequencies are ordinary frequencies in GHz;
/// conversion to rad/ns happens in system_params() / schedule() only.
struct RunConfig {
    double omega0_ghz = 5.439;
    double omega_c_ghz = 4.343;
    double g_eff_ghz = 0.050;
    std::optional<double> switch_ratio;     ///< varpi_s / omega0
    std::optional<double> switch_freq_ghz;  ///< varpi_s / 2 pi
    int n_qubits = 2;
    std::optional<int> n_max;  ///< defaults to max(2, order)
    int order = 2;
    double t_final_ns = 10.0;
    double sample_dt_ns = 0.01;
    int qubit_index = 0;

    /// Throws ConfigError naming the first violated constraint.
    void validate() const;

    int effective_n_max() const;
    double switching_frequency() const;  ///< rad/ns
    SystemParams system_params() const;
    CouplingSchedule schedule() const;
};

/// When neither switching key is present the ratio defaults to 20.
constexpr double kDefaultSwitchRatio = 20.0;

/// Parses a flat JSON object. Unknown keys and wrong types are ConfigErrors.
RunConfig parse_config(const nlohmann::json& doc);
RunConfig load_config(const std::string& path);

}  // namespace sqed

#endif  // SQED_CONFIG_HPP
