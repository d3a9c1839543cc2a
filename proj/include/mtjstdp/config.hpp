#pragma once

#include <charconv>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "mtjstdp/crossbar.hpp"
#include "mtjstdp/format.hpp"
#include "mtjstdp/llgs.hpp"
#include "mtjstdp/material.hpp"
#include "mtjstdp/montecarlo.hpp"
#include "mtjstdp/thermal.hpp"
#include "mtjstdp/waveform.hpp"

namespace mtjstdp {

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

// Strict section reader: every key is either consumed or rejected, and a key
// supplied without its unit suffix gets a diagnostic naming the expected key.
class SectionReader {
public:
    SectionReader(const nlohmann::json& node, std::string path)
        : node_(node), path_(std::move(path)) {
        if (!node_.is_object()) throw ConfigError("config: " + path_ + " must be an object");
    }

    bool has(const std::string& key) {
        known_.insert(key);
        return node_.contains(key);
    }

    double number(const std::string& key, double fallback) {
        known_.insert(key);
        if (!node_.contains(key)) return fallback;
        return as_number(key);
    }

    double require_number(const std::string& key) {
        known_.insert(key);
        if (!node_.contains(key)) throw_missing(key);
        return as_number(key);
    }

    std::uint64_t integer(const std::string& key, std::uint64_t fallback) {
        known_.insert(key);
        if (!node_.contains(key)) return fallback;
        const auto& v = node_.at(key);
        if (!v.is_number_integer() && !v.is_number_unsigned()) {
            throw ConfigError("config: " + path_ + "." + key + " must be an integer");
        }
        return v.get<std::uint64_t>();
    }

    std::uint64_t require_integer(const std::string& key) {
        known_.insert(key);
        if (!node_.contains(key)) throw_missing(key);
        return integer(key, 0);
    }

    bool boolean(const std::string& key, bool fallback) {
        known_.insert(key);
        if (!node_.contains(key)) return fallback;
        const auto& v = node_.at(key);
        if (!v.is_boolean()) throw ConfigError("config: " + path_ + "." + key + " must be a boolean");
        return v.get<bool>();
    }

    std::string text(const std::string& key, const std::string& fallback) {
        known_.insert(key);
        if (!node_.contains(key)) return fallback;
        const auto& v = node_.at(key);
        if (!v.is_string()) throw ConfigError("config: " + path_ + "." + key + " must be a string");
        return v.get<std::string>();
    }

    const nlohmann::json* array(const std::string& key) {
        known_.insert(key);
        if (!node_.contains(key)) return nullptr;
        const auto& v = node_.at(key);
        if (!v.is_array()) throw ConfigError("config: " + path_ + "." + key + " must be an array");
        return &v;
    }

    const nlohmann::json* object(const std::string& key) {
        known_.insert(key);
        if (!node_.contains(key)) return nullptr;
        const auto& v = node_.at(key);
        if (!v.is_object()) throw ConfigError("config: " + path_ + "." + key + " must be an object");
        return &v;
    }

    // Call after all reads: rejects unknown keys, pointing at the suffixed
    // spelling when the bare stem of a known key was supplied.
    void finish() const {
        for (auto it = node_.begin(); it != node_.end(); ++it) {
            const std::string& key = it.key();
            if (known_.count(key)) continue;
            for (const auto& candidate : known_) {
                if (candidate.rfind(key + "_", 0) == 0) {
                    throw ConfigError("config: unknown key " + path_ + "." + key + "; expected " +
                                      path_ + "." + candidate + " (unit suffix is required)");
                }
            }
            throw ConfigError("config: unknown key " + path_ + "." + key);
        }
    }

    const std::string& path() const { return path_; }

private:
    // A required suffixed key supplied as its bare stem is the most common
    // mistake; name the expected spelling.
    [[noreturn]] void throw_missing(const std::string& key) const {
        for (auto it = node_.begin(); it != node_.end(); ++it) {
            if (key.rfind(it.key() + "_", 0) == 0) {
                throw ConfigError("config: unknown key " + path_ + "." + it.key() + "; expected " +
                                  path_ + "." + key + " (unit suffix is required)");
            }
        }
        throw ConfigError("config: missing required key " + path_ + "." + key);
    }

    double as_number(const std::string& key) const {
        const auto& v = node_.at(key);
        if (!v.is_number()) throw ConfigError("config: " + path_ + "." + key + " must be a number");
        return v.get<double>();
    }

    const nlohmann::json& node_;
    std::string path_;
    std::set<std::string> known_;
};

inline BinaryState parse_state(const std::string& text, const std::string& where) {
    if (text == "P") return BinaryState::P;
    if (text == "AP") return BinaryState::AP;
    throw ConfigError("config: " + where + " must be \"P\" or \"AP\", got \"" + text + "\"");
}

// Canonical 12-significant-digit value: absorbs the one-ulp wobble of unit
// rescaling so serialize/parse cycles reach a fixed point immediately.
inline double canon12(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
    double out = 0.0;
    std::from_chars(buf, res.ptr, out);
    return out;
}

inline Vec3 parse_vec3(const nlohmann::json& node, const std::string& where) {
    if (!node.is_array() || node.size() != 3 || !node[0].is_number() || !node[1].is_number() ||
        !node[2].is_number()) {
        throw ConfigError("config: " + where + " must be an array of three numbers");
    }
    return {node[0].get<double>(), node[1].get<double>(), node[2].get<double>()};
}

}  // namespace detail

struct TrialConfig {
    enum class Kind { pair, idle };
    Kind waveform = Kind::pair;
    double delta_t = 1e-9;  // s
    SwitchDirection direction = SwitchDirection::ap_to_p;
    std::uint64_t trial_index = 0;
};

struct CrossbarSection {
    int rows = 1;
    int cols = 1;
    std::vector<std::vector<BinaryState>> initial_states;
    std::vector<std::vector<double>> pre_spikes;   // s, per row
    std::vector<std::vector<double>> post_spikes;  // s, per column
    std::uint64_t realization = 0;
    std::vector<CellOverride> overrides;
};

// Parsed configuration document. Physical quantities are stored in internal
// units (CGS lengths, seconds, volts, ohms, kelvins); the JSON schema carries
// explicit unit suffixes in its key names.
struct ExperimentConfig {
    MaterialParams material;
    ThermalParams thermal;
    ResistanceModel resistance;
    StdpProtocol protocol;
    double neuron_gap = 0.0;  // s between switching and heating pulse of one spike
    SimConfig sim;
    SignConvention sign_convention = SignConvention::fig5_caption;
    std::vector<double> sweep_grid;  // s, signed
    TrialConfig trial;
    CrossbarSection crossbar;

    // Line waveform emitted by a row (pre) neuron: its switching pulse drives
    // depression, its heating pulse precedes the posts' potentiation pulses.
    NeuronPulseSpec pre_neuron_spec() const {
        const int dep_sign = switching_sign_for(SwitchDirection::p_to_ap);
        const int pot_heat_sign = heating_sign_for(protocol.heating_polarity,
                                                   SwitchDirection::ap_to_p, protocol.potentiation.heating);
        NeuronPulseSpec spec;
        spec.switching = protocol.depression.switching;
        spec.switching.polarity = dep_sign;  // pre-side terminal enters positively
        spec.heating = protocol.potentiation.heating;
        spec.heating.polarity = pot_heat_sign;
        spec.gap = neuron_gap;
        return spec;
    }

    // Column (post) neuron: switching drives potentiation, heating precedes
    // the pres' depression pulses. The post terminal enters the device
    // voltage negated, so emitted polarities are the device-level signs
    // flipped.
    NeuronPulseSpec post_neuron_spec() const {
        const int pot_sign = switching_sign_for(SwitchDirection::ap_to_p);
        const int dep_heat_sign = heating_sign_for(protocol.heating_polarity,
                                                   SwitchDirection::p_to_ap, protocol.depression.heating);
        NeuronPulseSpec spec;
        spec.switching = protocol.potentiation.switching;
        spec.switching.polarity = -pot_sign;
        spec.heating = protocol.depression.heating;
        spec.heating.polarity = -dep_heat_sign;
        spec.gap = neuron_gap;
        return spec;
    }

    CrossbarConfig crossbar_config() const {
        CrossbarConfig cfg;
        cfg.rows = crossbar.rows;
        cfg.cols = crossbar.cols;
        cfg.material = material;
        cfg.thermal = thermal;
        cfg.resistance = resistance;
        cfg.pre_spec = pre_neuron_spec();
        cfg.post_spec = post_neuron_spec();
        cfg.initial_states = crossbar.initial_states;
        cfg.overrides = crossbar.overrides;
        return cfg;
    }
};

namespace detail {

inline MaterialParams parse_material(const nlohmann::json& node, const std::string& path,
                                     const MaterialParams& base) {
    SectionReader r(node, path);
    MaterialParams m = base;
    m.saturation_magnetization = r.number("saturation_magnetization_emu_cc", base.saturation_magnetization);
    m.interface_anisotropy = r.number("interface_anisotropy_erg_cm2", base.interface_anisotropy);
    m.damping = r.number("damping", base.damping);
    m.gyromagnetic_ratio = r.number("gyromagnetic_ratio_rad_per_s_oe", base.gyromagnetic_ratio);
    m.energy_barrier = r.number("energy_barrier_kt", base.energy_barrier);
    m.free_layer_diameter = r.number("free_layer_diameter_nm", base.free_layer_diameter * 1e7) / 1e7;
    m.aspect_ratio = r.number("aspect_ratio", base.aspect_ratio);
    m.free_layer_thickness = r.number("free_layer_thickness_nm", base.free_layer_thickness * 1e7) / 1e7;
    m.demag_tensor.x = r.number("demag_nx", base.demag_tensor.x);
    m.demag_tensor.y = r.number("demag_ny", base.demag_tensor.y);
    m.demag_tensor.z = r.number("demag_nz", base.demag_tensor.z);
    m.spin_polarization = r.number("spin_polarization", base.spin_polarization);
    if (r.has("pinned_axis")) m.pinned_axis = parse_vec3(node.at("pinned_axis"), path + ".pinned_axis");
    const std::string noise = r.text("noise_convention",
                                     base.noise_convention == NoiseConvention::brown ? "brown" : "paper-literal");
    if (noise == "brown") {
        m.noise_convention = NoiseConvention::brown;
    } else if (noise == "paper-literal") {
        m.noise_convention = NoiseConvention::paper_literal;
    } else {
        throw ConfigError("config: " + path + ".noise_convention must be \"brown\" or \"paper-literal\"");
    }
    m.curie_temperature = r.number("curie_temperature_K", base.curie_temperature);
    r.finish();
    m.validate();
    return m;
}

inline ThermalParams parse_thermal(const nlohmann::json& node, const std::string& path,
                                   const ThermalParams& base, bool require_tau) {
    SectionReader r(node, path);
    ThermalParams t = base;
    t.room_temperature = r.number("room_temperature_K", base.room_temperature);
    t.joule_heating_constant = r.number("joule_heating_constant_K_per_W", base.joule_heating_constant);
    t.thermal_time_constant =
        (require_tau ? r.require_number("tau_tr_ns") : r.number("tau_tr_ns", base.thermal_time_constant * 1e9)) /
        1e9;
    r.finish();
    t.validate();
    return t;
}

inline ResistanceModel parse_resistance(const nlohmann::json& node, const std::string& path,
                                        const ResistanceModel& base) {
    SectionReader r(node, path);
    ResistanceModel m = base;
    m.r_parallel = r.number("r_parallel_ohm", base.r_parallel);
    m.tmr = r.number("tmr", base.tmr);
    m.state = parse_state(r.text("initial_state", to_string(base.state)), path + ".initial_state");
    r.finish();
    m.validate();
    return m;
}

inline StdpBranchSpec parse_branch(const nlohmann::json& node, const std::string& path) {
    SectionReader r(node, path);
    StdpBranchSpec b;
    b.heating.amplitude = r.require_number("heating_amplitude_V");
    b.heating.duration = r.require_number("heating_duration_ns") / 1e9;
    b.switching.amplitude = r.require_number("switching_amplitude_V");
    b.switching.duration = r.require_number("switching_duration_ns") / 1e9;
    r.finish();
    b.heating.validate();
    b.switching.validate();
    return b;
}

}  // namespace detail

inline ExperimentConfig parse_config(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("config: invalid JSON: ") + e.what());
    }

    detail::SectionReader top(doc, "$");
    ExperimentConfig cfg;

    {
        const auto* node = top.object("material");
        MaterialParams base;  // schema defaults live in the shipped profile; hard fallbacks here
        base.saturation_magnetization = 1257.3;
        base.interface_anisotropy = 1.3;
        base.damping = 0.015;
        base.energy_barrier = 73.0;
        base.free_layer_diameter = 40e-7;
        base.free_layer_thickness = 1.42e-7;
        base.demag_tensor = {1.0425088412818386, 1.0425088412818386, 10.481352931795495};
        base.spin_polarization = 0.015;
        cfg.material = node ? detail::parse_material(*node, "material", base) : base;
    }
    {
        const auto* node = top.object("thermal");
        if (!node) throw ConfigError("config: missing required key thermal.tau_tr_ns");
        ThermalParams base;
        base.room_temperature = 300.0;
        base.joule_heating_constant = 83600.0;
        base.thermal_time_constant = 1.4e-9;
        cfg.thermal = detail::parse_thermal(*node, "thermal", base, /*require_tau=*/true);
    }
    {
        const auto* node = top.object("resistance");
        ResistanceModel base;
        base.r_parallel = 350.0;
        base.tmr = 1.0;
        base.state = BinaryState::AP;
        cfg.resistance = node ? detail::parse_resistance(*node, "resistance", base) : base;
    }
    {
        const auto* node = top.object("pulses");
        if (!node) throw ConfigError("config: missing required section pulses");
        detail::SectionReader r(*node, "pulses");
        const std::string polarity = r.text("heating_polarity", "aligned");
        if (polarity == "aligned") {
            cfg.protocol.heating_polarity = HeatingPolarity::aligned;
        } else if (polarity == "opposed") {
            cfg.protocol.heating_polarity = HeatingPolarity::opposed;
        } else {
            throw ConfigError("config: pulses.heating_polarity must be \"aligned\" or \"opposed\"");
        }
        cfg.neuron_gap = r.number("gap_ns", 3.0) / 1e9;
        if (cfg.neuron_gap < 0.0) throw ConfigError("config: pulses.gap_ns must be >= 0");
        const auto* pot = r.object("potentiation");
        if (!pot) throw ConfigError("config: missing required section pulses.potentiation");
        cfg.protocol.potentiation = detail::parse_branch(*pot, "pulses.potentiation");
        const auto* dep = r.object("depression");
        if (!dep) throw ConfigError("config: missing required section pulses.depression");
        cfg.protocol.depression = detail::parse_branch(*dep, "pulses.depression");
        r.finish();
    }
    {
        const auto* node = top.object("simulation");
        if (!node) throw ConfigError("config: missing required key simulation.master_seed");
        detail::SectionReader r(*node, "simulation");
        cfg.sim.dt = r.number("dt_ps", 0.5) / 1e12;
        cfg.sim.horizon = r.number("horizon_ns", 50.0) / 1e9;
        cfg.sim.relax_window = r.number("relax_window_ns", 5.0) / 1e9;
        cfg.sim.switch_threshold = r.number("switch_threshold", 0.5);
        cfg.sim.n_trials = r.integer("n_trials", 1000);
        cfg.sim.master_seed = r.require_integer("master_seed");
        cfg.sim.record_traces = r.boolean("record_traces", false);
        cfg.sim.clamp_temperature = r.number("clamp_temperature_K", 0.0);
        cfg.sim.threads = 1;  // set by the CLI --threads flag
        const std::string sign = r.text("sign_convention", "fig5-caption");
        if (sign == "fig5-caption") {
            cfg.sign_convention = SignConvention::fig5_caption;
        } else if (sign == "section-iv-text") {
            cfg.sign_convention = SignConvention::section_iv_text;
        } else {
            throw ConfigError(
                "config: simulation.sign_convention must be \"fig5-caption\" or \"section-iv-text\"");
        }
        r.finish();
        cfg.sim.validate();
    }
    {
        const auto* node = top.object("sweep");
        cfg.sweep_grid = {-32e-9, -24e-9, -16e-9, -12e-9, -8e-9, -6e-9, -4e-9, -2e-9, -1e-9, -0.5e-9,
                          0.5e-9, 1e-9,   2e-9,   4e-9,   6e-9,  8e-9,  12e-9, 16e-9, 24e-9, 32e-9};
        if (node) {
            detail::SectionReader r(*node, "sweep");
            if (const auto* grid = r.array("delta_t_grid_ns")) {
                cfg.sweep_grid.clear();
                for (const auto& v : *grid) {
                    if (!v.is_number()) throw ConfigError("config: sweep.delta_t_grid_ns entries must be numbers");
                    cfg.sweep_grid.push_back(v.get<double>() / 1e9);
                }
                if (cfg.sweep_grid.empty()) throw ConfigError("config: sweep.delta_t_grid_ns must be non-empty");
            }
            r.finish();
        }
    }
    {
        const auto* node = top.object("trial");
        if (node) {
            detail::SectionReader r(*node, "trial");
            const std::string kind = r.text("waveform", "pair");
            if (kind == "pair") {
                cfg.trial.waveform = TrialConfig::Kind::pair;
            } else if (kind == "idle") {
                cfg.trial.waveform = TrialConfig::Kind::idle;
            } else {
                throw ConfigError("config: trial.waveform must be \"pair\" or \"idle\"");
            }
            cfg.trial.delta_t = r.number("delta_t_ns", 1.0) / 1e9;
            const std::string dir = r.text("direction", "AP->P");
            if (dir == "AP->P") {
                cfg.trial.direction = SwitchDirection::ap_to_p;
            } else if (dir == "P->AP") {
                cfg.trial.direction = SwitchDirection::p_to_ap;
            } else {
                throw ConfigError("config: trial.direction must be \"AP->P\" or \"P->AP\"");
            }
            cfg.trial.trial_index = r.integer("trial_index", 0);
            r.finish();
        }
    }
    {
        const auto* node = top.object("crossbar");
        CrossbarSection& xb = cfg.crossbar;
        if (node) {
            detail::SectionReader r(*node, "crossbar");
            xb.rows = static_cast<int>(r.integer("rows", 1));
            xb.cols = static_cast<int>(r.integer("cols", 1));
            if (xb.rows < 1 || xb.cols < 1) throw ConfigError("config: crossbar.rows/cols must be >= 1");
            if (const auto* states = r.array("initial_states")) {
                for (std::size_t i = 0; i < states->size(); ++i) {
                    std::vector<BinaryState> row;
                    const auto& jrow = (*states)[i];
                    if (!jrow.is_array()) throw ConfigError("config: crossbar.initial_states must be a 2-d array");
                    for (const auto& cell : jrow) {
                        if (!cell.is_string()) throw ConfigError("config: crossbar.initial_states entries must be strings");
                        row.push_back(detail::parse_state(cell.get<std::string>(), "crossbar.initial_states"));
                    }
                    xb.initial_states.push_back(std::move(row));
                }
            }
            auto parse_spikes = [&](const char* key, int count) {
                std::vector<std::vector<double>> out(static_cast<std::size_t>(count));
                if (const auto* arr = r.array(key)) {
                    if (arr->size() != static_cast<std::size_t>(count)) {
                        throw ConfigError(std::string("config: crossbar.") + key +
                                          " must have one entry per line");
                    }
                    for (std::size_t i = 0; i < arr->size(); ++i) {
                        const auto& jrow = (*arr)[i];
                        if (!jrow.is_array()) throw ConfigError(std::string("config: crossbar.") + key +
                                                                " must be an array of arrays");
                        for (const auto& v : jrow) {
                            if (!v.is_number()) throw ConfigError(std::string("config: crossbar.") + key +
                                                                  " entries must be numbers");
                            out[i].push_back(v.get<double>() / 1e9);
                        }
                    }
                }
                return out;
            };
            xb.pre_spikes = parse_spikes("pre_spikes_ns", xb.rows);
            xb.post_spikes = parse_spikes("post_spikes_ns", xb.cols);
            xb.realization = r.integer("realization", 0);
            if (const auto* ov = r.array("overrides")) {
                for (const auto& entry : *ov) {
                    detail::SectionReader ro(entry, "crossbar.overrides[]");
                    CellOverride cell;
                    cell.row = static_cast<int>(ro.require_integer("row"));
                    cell.col = static_cast<int>(ro.require_integer("col"));
                    if (const auto* mn = ro.object("material")) {
                        cell.material = detail::parse_material(*mn, "crossbar.overrides[].material", cfg.material);
                    }
                    if (const auto* tn = ro.object("thermal")) {
                        cell.thermal = detail::parse_thermal(*tn, "crossbar.overrides[].thermal", cfg.thermal,
                                                             /*require_tau=*/false);
                    }
                    if (const auto* rn = ro.object("resistance")) {
                        cell.resistance =
                            detail::parse_resistance(*rn, "crossbar.overrides[].resistance", cfg.resistance);
                    }
                    ro.finish();
                    xb.overrides.push_back(std::move(cell));
                }
            }
            r.finish();
        }
        if (xb.initial_states.empty()) {
            xb.initial_states.assign(static_cast<std::size_t>(xb.rows),
                                     std::vector<BinaryState>(static_cast<std::size_t>(xb.cols),
                                                              cfg.resistance.state));
        }
        if (xb.pre_spikes.empty()) xb.pre_spikes.assign(static_cast<std::size_t>(xb.rows), {});
        if (xb.post_spikes.empty()) xb.post_spikes.assign(static_cast<std::size_t>(xb.cols), {});
    }
    top.finish();
    return cfg;
}

// Canonical serialization: parse(serialize(cfg)) reproduces the document
// byte for byte.
inline std::string serialize_config(const ExperimentConfig& cfg) {
    nlohmann::ordered_json doc;
    auto& material = doc["material"];
    material["saturation_magnetization_emu_cc"] = cfg.material.saturation_magnetization;
    material["interface_anisotropy_erg_cm2"] = cfg.material.interface_anisotropy;
    material["damping"] = cfg.material.damping;
    material["gyromagnetic_ratio_rad_per_s_oe"] = cfg.material.gyromagnetic_ratio;
    material["energy_barrier_kt"] = cfg.material.energy_barrier;
    material["free_layer_diameter_nm"] = detail::canon12(cfg.material.free_layer_diameter * 1e7);
    material["aspect_ratio"] = cfg.material.aspect_ratio;
    material["free_layer_thickness_nm"] = detail::canon12(cfg.material.free_layer_thickness * 1e7);
    material["demag_nx"] = cfg.material.demag_tensor.x;
    material["demag_ny"] = cfg.material.demag_tensor.y;
    material["demag_nz"] = cfg.material.demag_tensor.z;
    material["spin_polarization"] = cfg.material.spin_polarization;
    material["pinned_axis"] = {cfg.material.pinned_axis.x, cfg.material.pinned_axis.y,
                               cfg.material.pinned_axis.z};
    material["noise_convention"] =
        cfg.material.noise_convention == NoiseConvention::brown ? "brown" : "paper-literal";
    material["curie_temperature_K"] = cfg.material.curie_temperature;

    auto& thermal = doc["thermal"];
    thermal["room_temperature_K"] = cfg.thermal.room_temperature;
    thermal["joule_heating_constant_K_per_W"] = cfg.thermal.joule_heating_constant;
    thermal["tau_tr_ns"] = detail::canon12(cfg.thermal.thermal_time_constant * 1e9);

    auto& resistance = doc["resistance"];
    resistance["r_parallel_ohm"] = cfg.resistance.r_parallel;
    resistance["tmr"] = cfg.resistance.tmr;
    resistance["initial_state"] = to_string(cfg.resistance.state);

    auto& pulses = doc["pulses"];
    pulses["heating_polarity"] =
        cfg.protocol.heating_polarity == HeatingPolarity::aligned ? "aligned" : "opposed";
    pulses["gap_ns"] = detail::canon12(cfg.neuron_gap * 1e9);
    auto branch = [](const StdpBranchSpec& b) {
        nlohmann::ordered_json j;
        j["heating_amplitude_V"] = b.heating.amplitude;
        j["heating_duration_ns"] = detail::canon12(b.heating.duration * 1e9);
        j["switching_amplitude_V"] = b.switching.amplitude;
        j["switching_duration_ns"] = detail::canon12(b.switching.duration * 1e9);
        return j;
    };
    pulses["potentiation"] = branch(cfg.protocol.potentiation);
    pulses["depression"] = branch(cfg.protocol.depression);

    auto& sim = doc["simulation"];
    sim["dt_ps"] = detail::canon12(cfg.sim.dt * 1e12);
    sim["horizon_ns"] = detail::canon12(cfg.sim.horizon * 1e9);
    sim["relax_window_ns"] = detail::canon12(cfg.sim.relax_window * 1e9);
    sim["switch_threshold"] = cfg.sim.switch_threshold;
    sim["n_trials"] = cfg.sim.n_trials;
    sim["master_seed"] = cfg.sim.master_seed;
    sim["record_traces"] = cfg.sim.record_traces;
    sim["clamp_temperature_K"] = cfg.sim.clamp_temperature;
    sim["sign_convention"] =
        cfg.sign_convention == SignConvention::fig5_caption ? "fig5-caption" : "section-iv-text";

    auto& sweep = doc["sweep"];
    {
        std::vector<double> grid_ns;
        grid_ns.reserve(cfg.sweep_grid.size());
        for (double v : cfg.sweep_grid) grid_ns.push_back(detail::canon12(v * 1e9));
        sweep["delta_t_grid_ns"] = grid_ns;
    }

    auto& trial = doc["trial"];
    trial["waveform"] = cfg.trial.waveform == TrialConfig::Kind::pair ? "pair" : "idle";
    trial["delta_t_ns"] = detail::canon12(cfg.trial.delta_t * 1e9);
    trial["direction"] = to_string(cfg.trial.direction);
    trial["trial_index"] = cfg.trial.trial_index;

    auto& xb = doc["crossbar"];
    xb["rows"] = cfg.crossbar.rows;
    xb["cols"] = cfg.crossbar.cols;
    {
        nlohmann::ordered_json states = nlohmann::ordered_json::array();
        for (const auto& row : cfg.crossbar.initial_states) {
            nlohmann::ordered_json jrow = nlohmann::ordered_json::array();
            for (BinaryState s : row) jrow.push_back(to_string(s));
            states.push_back(jrow);
        }
        xb["initial_states"] = states;
        auto spikes_ns = [](const std::vector<std::vector<double>>& spikes) {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const auto& line : spikes) {
                nlohmann::ordered_json jline = nlohmann::ordered_json::array();
                for (double t : line) jline.push_back(detail::canon12(t * 1e9));
                arr.push_back(jline);
            }
            return arr;
        };
        xb["pre_spikes_ns"] = spikes_ns(cfg.crossbar.pre_spikes);
        xb["post_spikes_ns"] = spikes_ns(cfg.crossbar.post_spikes);
        xb["realization"] = cfg.crossbar.realization;
    }
    return doc.dump(2) + "\n";
}

}  // namespace mtjstdp
