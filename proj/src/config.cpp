#include "sqed/config.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>

namespace sqed {

namespace {

double as_real(const std::string& key, const nlohmann::json& value) {
    if (!value.is_number())
        throw ConfigError(key, "must be a number");
    const double v = value.get<double>();
    if (!std::isfinite(v))
        throw ConfigError(key, "must be finite");
    return v;
}

int as_int(const std::string& key, const nlohmann::json& value) {
    if (!value.is_number_integer())
        throw ConfigError(key, "must be an integer");
    return value.get<int>();
}

}  // namespace

void RunConfig::validate() const {
    if (!(omega0_ghz > 0.0))
        throw ConfigError("omega0_ghz", "must be > 0");
    if (!(omega_c_ghz > 0.0))
        throw ConfigError("omega_c_ghz", "must be > 0");
    if (!(g_eff_ghz >= 0.0))
        throw ConfigError("g_eff_ghz", "must be >= 0");
    if (g_eff_ghz >= omega0_ghz || g_eff_ghz >= omega_c_ghz)
        throw ConfigError("g_eff_ghz", "must be smaller than omega0_ghz and omega_c_ghz");
    if (switch_ratio && switch_freq_ghz)
        throw ConfigError("switch_ratio", "mutually exclusive with switch_freq_ghz");
    if (switch_ratio && !(*switch_ratio > 0.0))
        throw ConfigError("switch_ratio", "must be > 0");
    if (switch_freq_ghz && !(*switch_freq_ghz > 0.0))
        throw ConfigError("switch_freq_ghz", "must be > 0");
    if (n_qubits < 1 || n_qubits > 8)
        throw ConfigError("n_qubits", "must be in [1, 8]");
    if (n_max && (*n_max < 0 || *n_max > 16))
        throw ConfigError("n_max", "must be in [0, 16]");
    if (order < 0 || order > 4)
        throw ConfigError("order", "must be in [0, 4]");
    if (!(t_final_ns > 0.0))
        throw ConfigError("t_final_ns", "must be > 0");
    if (!(sample_dt_ns > 0.0) || sample_dt_ns > t_final_ns)
        throw ConfigError("sample_dt_ns", "must be > 0 and <= t_final_ns");
    if (qubit_index < 0 || qubit_index >= n_qubits)
        throw ConfigError("qubit_index", "must be in [0, n_qubits)");
}

int RunConfig::effective_n_max() const { return n_max.value_or(std::max(2, order)); }

double RunConfig::switching_frequency() const {
    if (switch_freq_ghz)
        return ghz_to_rad_per_ns(*switch_freq_ghz);
    return switch_ratio.value_or(kDefaultSwitchRatio) * ghz_to_rad_per_ns(omega0_ghz);
}

SystemParams RunConfig::system_params() const {
    return {ghz_to_rad_per_ns(omega0_ghz), ghz_to_rad_per_ns(omega_c_ghz), ghz_to_rad_per_ns(g_eff_ghz),
            n_qubits, effective_n_max()};
}

CouplingSchedule RunConfig::schedule() const {
    return CouplingSchedule::from_switching_frequency(ghz_to_rad_per_ns(g_eff_ghz), switching_frequency());
}

RunConfig parse_config(const nlohmann::json& doc) {
    if (!doc.is_object())
        throw ConfigError("<root>", "config must be a flat JSON object");

    RunConfig cfg;
    using Setter = std::function<void(const std::string&, const nlohmann::json&)>;
    const std::map<std::string, Setter> setters = {
        {"omega0_ghz", [&](auto& k, auto& v) { cfg.omega0_ghz = as_real(k, v); }},
        {"omega_c_ghz", [&](auto& k, auto& v) { cfg.omega_c_ghz = as_real(k, v); }},
        {"g_eff_ghz", [&](auto& k, auto& v) { cfg.g_eff_ghz = as_real(k, v); }},
        {"switch_ratio", [&](auto& k, auto& v) { cfg.switch_ratio = as_real(k, v); }},
        {"switch_freq_ghz", [&](auto& k, auto& v) { cfg.switch_freq_ghz = as_real(k, v); }},
        {"n_qubits", [&](auto& k, auto& v) { cfg.n_qubits = as_int(k, v); }},
        {"n_max", [&](auto& k, auto& v) { cfg.n_max = as_int(k, v); }},
        {"order", [&](auto& k, auto& v) { cfg.order = as_int(k, v); }},
        {"t_final_ns", [&](auto& k, auto& v) { cfg.t_final_ns = as_real(k, v); }},
        {"sample_dt_ns", [&](auto& k, auto& v) { cfg.sample_dt_ns = as_real(k, v); }},
        {"qubit_index", [&](auto& k, auto& v) { cfg.qubit_index = as_int(k, v); }},
    };
    for (const auto& [key, value] : doc.items()) {
        auto it = setters.find(key);
        if (it == setters.end())
            throw ConfigError(key, "unknown key");
        it->second(key, value);
    }
    cfg.validate();
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::ios_base::failure("cannot open config file '" + path + "'");
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("<root>", std::string("invalid JSON: ") + e.what());
    }
    return parse_config(doc);
}

}  // namespace sqed
