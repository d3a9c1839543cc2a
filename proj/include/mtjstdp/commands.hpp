#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "mtjstdp/config.hpp"
#include "mtjstdp/crossbar.hpp"
#include "mtjstdp/format.hpp"
#include "mtjstdp/montecarlo.hpp"
#include "mtjstdp/svg.hpp"

namespace mtjstdp {

namespace detail {

inline std::filesystem::path prepare_out_dir(const std::filesystem::path& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw std::runtime_error("cannot create output directory: " + out_dir.string());
    return out_dir;
}

inline Waveform trial_waveform(const ExperimentConfig& cfg) {
    if (cfg.trial.waveform == TrialConfig::Kind::idle) return {};
    return stdp_pair_waveform(std::fabs(cfg.trial.delta_t), cfg.protocol, cfg.trial.direction);
}

inline ResistanceModel trial_model(const ExperimentConfig& cfg) {
    ResistanceModel model = cfg.resistance;
    if (cfg.trial.waveform == TrialConfig::Kind::pair) {
        model.state = initial_state_for(cfg.trial.direction);
    }
    return model;
}

// Strided series for plotting; the CSV keeps every step.
inline void downsampled(const std::vector<double>& x, const std::vector<double>& y,
                        std::vector<double>& xs, std::vector<double>& ys) {
    const std::size_t stride = std::max<std::size_t>(1, x.size() / 2000);
    for (std::size_t i = 0; i < x.size(); i += stride) {
        xs.push_back(x[i]);
        ys.push_back(y[i]);
    }
}

}  // namespace detail

// Deterministic temperature trace of the configured trial waveform.
inline std::vector<std::filesystem::path> cmd_thermal_trace(const ExperimentConfig& cfg,
                                                            const std::filesystem::path& out_dir,
                                                            bool plot = true) {
    detail::prepare_out_dir(out_dir);
    const Waveform waveform = detail::trial_waveform(cfg);
    const ThermalTrace trace = thermal_trace(waveform, cfg.thermal, detail::trial_model(cfg), cfg.sim);

    CsvWriter csv("t_ns,voltage_V,power_W,temperature_K");
    for (std::size_t i = 0; i < trace.t.size(); ++i) {
        csv.row({format_sig9(trace.t[i] * 1e9), format_sig9(trace.voltage[i]),
                 format_sig9(trace.power[i]), format_sig9(trace.temperature[i])});
    }
    std::vector<std::filesystem::path> files;
    files.push_back(out_dir / "thermal_trace.csv");
    write_file(files.back(), csv.str());

    if (plot) {
        SvgChart chart("Free-layer temperature", "t (ns)", "T_AF (K)");
        SvgChart::Series s;
        s.color = "#c0392b";
        s.markers = false;
        std::vector<double> t_ns(trace.t.size());
        for (std::size_t i = 0; i < trace.t.size(); ++i) t_ns[i] = trace.t[i] * 1e9;
        detail::downsampled(t_ns, trace.temperature, s.x, s.y);
        chart.add_series(std::move(s));
        files.push_back(out_dir / "thermal_trace.svg");
        write_file(files.back(), chart.render());
    }
    return files;
}

// Single-trial per-step trace.
inline std::vector<std::filesystem::path> cmd_trial(const ExperimentConfig& cfg,
                                                    const std::filesystem::path& out_dir,
                                                    bool plot = true) {
    detail::prepare_out_dir(out_dir);
    SimConfig sim = cfg.sim;
    sim.record_traces = true;
    const TrialOutcome outcome = run_trial(cfg.material, cfg.thermal, detail::trial_model(cfg),
                                           detail::trial_waveform(cfg), sim, cfg.trial.trial_index);

    CsvWriter csv("t_ns,mx,my,mz,temperature_K,voltage_V");
    const TrialTrace& tr = outcome.trace;
    for (std::size_t i = 0; i < tr.t.size(); ++i) {
        csv.row({format_sig9(tr.t[i] * 1e9), format_sig9(tr.mx[i]), format_sig9(tr.my[i]),
                 format_sig9(tr.mz[i]), format_sig9(tr.temperature[i]), format_sig9(tr.voltage[i])});
    }
    std::vector<std::filesystem::path> files;
    files.push_back(out_dir / "trial_trace.csv");
    write_file(files.back(), csv.str());

    if (plot) {
        SvgChart chart("Single trial", "t (ns)", "m_z");
        SvgChart::Series s;
        s.color = "#2c3e50";
        s.markers = false;
        std::vector<double> t_ns(tr.t.size());
        for (std::size_t i = 0; i < tr.t.size(); ++i) t_ns[i] = tr.t[i] * 1e9;
        detail::downsampled(t_ns, tr.mz, s.x, s.y);
        chart.add_series(std::move(s));
        files.push_back(out_dir / "trial_trace.svg");
        write_file(files.back(), chart.render());
    }
    return files;
}

inline std::vector<std::filesystem::path> cmd_stdp_sweep(const ExperimentConfig& cfg,
                                                         const std::filesystem::path& out_dir,
                                                         bool plot = true) {
    detail::prepare_out_dir(out_dir);
    const StdpCurve curve = stdp_sweep(cfg.sweep_grid, cfg.protocol, cfg.material, cfg.thermal,
                                       cfg.resistance, cfg.sim, cfg.sign_convention);

    CsvWriter csv("delta_t_ns,direction,n_trials,n_switched,p_signed,ci_low,ci_high");
    for (const auto& point : curve) {
        csv.row({format_sig9(point.delta_t * 1e9), to_string(point.direction),
                 format_u64(point.n_trials), format_u64(point.n_switched), format_sig9(point.p_signed),
                 format_sig9(point.ci_low), format_sig9(point.ci_high)});
    }
    std::vector<std::filesystem::path> files;
    files.push_back(out_dir / "stdp_curve.csv");
    write_file(files.back(), csv.str());

    if (plot) {
        SvgChart chart("Switching probability vs pairing interval", "delta_t (ns)", "signed p_switch");
        SvgChart::Series pot, dep;
        pot.color = "#2980b9";
        dep.color = "#c0392b";
        for (const auto& point : curve) {
            auto& s = point.direction == SwitchDirection::ap_to_p ? pot : dep;
            s.x.push_back(point.delta_t * 1e9);
            s.y.push_back(point.p_signed);
            const double sign = point.p_signed < 0.0 ? -1.0 : 1.0;
            s.err_low.push_back(sign < 0 ? -point.ci_high : point.ci_low);
            s.err_high.push_back(sign < 0 ? -point.ci_low : point.ci_high);
        }
        chart.add_series(std::move(dep));
        chart.add_series(std::move(pot));
        files.push_back(out_dir / "stdp_curve.svg");
        write_file(files.back(), chart.render());
    }
    return files;
}

inline std::vector<std::filesystem::path> cmd_crossbar(const ExperimentConfig& cfg,
                                                       const std::filesystem::path& out_dir,
                                                       bool /*plot*/ = true) {
    detail::prepare_out_dir(out_dir);
    const CrossbarConfig xb = cfg.crossbar_config();
    SpikeSchedule pre{cfg.crossbar.pre_spikes};
    SpikeSchedule post{cfg.crossbar.post_spikes};
    const CrossbarResult result = simulate(xb, pre, post, cfg.sim, cfg.crossbar.realization);

    nlohmann::ordered_json doc;
    doc["rows"] = result.rows;
    doc["cols"] = result.cols;
    auto matrix = [&](auto&& get) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (int r = 0; r < result.rows; ++r) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (int c = 0; c < result.cols; ++c) row.push_back(get(result.at(r, c)));
            rows.push_back(row);
        }
        return rows;
    };
    doc["initial_states"] = matrix([](const DeviceResult& d) { return to_string(d.initial_state); });
    doc["final_states"] = matrix([](const DeviceResult& d) { return to_string(d.final_state); });
    doc["peak_temperature_K"] =
        matrix([](const DeviceResult& d) { return nlohmann::ordered_json(d.peak_temperature); });
    nlohmann::ordered_json events = nlohmann::ordered_json::array();
    for (const auto& device : result.devices) {
        for (const auto& event : device.events) {
            nlohmann::ordered_json e;
            e["row"] = device.row;
            e["col"] = device.col;
            e["t_ns"] = event.time * 1e9;
            e["direction"] = to_string(event.direction);
            events.push_back(e);
        }
    }
    doc["events"] = events;

    std::vector<std::filesystem::path> files;
    files.push_back(out_dir / "crossbar_result.json");
    write_file(files.back(), doc.dump(2) + "\n");

    CsvWriter csv("row,col,initial_state,final_state,n_switches,peak_temperature_K,final_mz");
    for (const auto& device : result.devices) {
        csv.row({format_u64(static_cast<std::uint64_t>(device.row)),
                 format_u64(static_cast<std::uint64_t>(device.col)), to_string(device.initial_state),
                 to_string(device.final_state), format_u64(device.events.size()),
                 format_sig9(device.peak_temperature), format_sig9(device.final_m.z)});
    }
    files.push_back(out_dir / "crossbar_summary.csv");
    write_file(files.back(), csv.str());
    return files;
}

}  // namespace mtjstdp
