#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mtjstdp/montecarlo.hpp"

namespace mtjstdp {

// Spike times per neuron, seconds, strictly increasing.
struct SpikeSchedule {
    std::vector<std::vector<double>> times;

    void validate() const {
        for (const auto& neuron : times) {
            double previous = -1.0;
            for (double t : neuron) {
                if (t < 0.0) throw std::invalid_argument("SpikeSchedule: spike times must be >= 0");
                if (t <= previous) {
                    throw std::invalid_argument("SpikeSchedule: spike times must be strictly increasing");
                }
                previous = t;
            }
        }
    }

    double last_event_time() const {
        double last = 0.0;
        for (const auto& neuron : times) {
            if (!neuron.empty()) last = std::max(last, neuron.back());
        }
        return last;
    }
};

struct CellOverride {
    int row = 0;
    int col = 0;
    std::optional<MaterialParams> material;
    std::optional<ThermalParams> thermal;
    std::optional<ResistanceModel> resistance;
};

struct CrossbarConfig {
    int rows = 1;
    int cols = 1;
    MaterialParams material;          // shared defaults
    ThermalParams thermal;
    ResistanceModel resistance;       // state field ignored; initial_states wins
    NeuronPulseSpec pre_spec;         // emitted by every row (pre) neuron
    NeuronPulseSpec post_spec;        // emitted by every column (post) neuron
    std::vector<std::vector<BinaryState>> initial_states;  // [row][col]
    std::vector<CellOverride> overrides;

    void validate() const {
        if (rows < 1 || cols < 1) throw std::invalid_argument("CrossbarConfig: rows and cols must be >= 1");
        material.validate();
        thermal.validate();
        resistance.validate();
        pre_spec.validate();
        post_spec.validate();
        if (initial_states.size() != static_cast<std::size_t>(rows)) {
            throw std::invalid_argument("CrossbarConfig: initial_states row count mismatch");
        }
        for (const auto& row : initial_states) {
            if (row.size() != static_cast<std::size_t>(cols)) {
                throw std::invalid_argument("CrossbarConfig: initial_states column count mismatch");
            }
        }
        for (const auto& o : overrides) {
            if (o.row < 0 || o.row >= rows || o.col < 0 || o.col >= cols) {
                throw std::invalid_argument("CrossbarConfig: override cell out of range");
            }
            if (o.material) o.material->validate();
            if (o.thermal) o.thermal->validate();
            if (o.resistance) o.resistance->validate();
        }
    }

    MaterialParams material_at(int r, int c) const {
        for (const auto& o : overrides) {
            if (o.row == r && o.col == c && o.material) return *o.material;
        }
        return material;
    }
    ThermalParams thermal_at(int r, int c) const {
        for (const auto& o : overrides) {
            if (o.row == r && o.col == c && o.thermal) return *o.thermal;
        }
        return thermal;
    }
    ResistanceModel resistance_at(int r, int c) const {
        ResistanceModel m = resistance;
        for (const auto& o : overrides) {
            if (o.row == r && o.col == c && o.resistance) m = *o.resistance;
        }
        m.state = initial_states[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        return m;
    }
};

struct DeviceResult {
    int row = 0;
    int col = 0;
    BinaryState initial_state = BinaryState::P;
    BinaryState final_state = BinaryState::P;
    std::vector<SwitchEvent> events;
    double peak_temperature = 0.0;
    Vec3 final_m;
};

struct CrossbarResult {
    int rows = 0;
    int cols = 0;
    std::vector<DeviceResult> devices;  // row-major

    const DeviceResult& at(int r, int c) const {
        return devices[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) +
                       static_cast<std::size_t>(c)];
    }
};

namespace detail {

inline std::uint64_t crossbar_device_id(int rows, int cols, int r, int c) {
    (void)rows;
    // device ids start at 1; id 0 is the single-device Monte Carlo path
    return static_cast<std::uint64_t>(r) * static_cast<std::uint64_t>(cols) +
           static_cast<std::uint64_t>(c) + 1;
}

}  // namespace detail

// One stochastic realization of the whole array. Every device (r, c) sees
// V_row_r(t) - V_col_c(t) from the precomputed line waveforms and evolves on
// its own RNG stream, so devices are exactly independent and the result does
// not depend on how they are scheduled across workers.
inline CrossbarResult simulate(const CrossbarConfig& config, const SpikeSchedule& pre,
                               const SpikeSchedule& post, const SimConfig& sim,
                               std::uint64_t realization = 0) {
    config.validate();
    pre.validate();
    post.validate();
    sim.validate();
    if (pre.times.size() != static_cast<std::size_t>(config.rows)) {
        throw std::invalid_argument("simulate: pre schedule must have one entry per row");
    }
    if (post.times.size() != static_cast<std::size_t>(config.cols)) {
        throw std::invalid_argument("simulate: post schedule must have one entry per column");
    }

    std::vector<Waveform> row_waveforms;
    row_waveforms.reserve(pre.times.size());
    for (const auto& spikes : pre.times) row_waveforms.push_back(neuron_waveform(spikes, config.pre_spec));
    std::vector<Waveform> col_waveforms;
    col_waveforms.reserve(post.times.size());
    for (const auto& spikes : post.times) col_waveforms.push_back(neuron_waveform(spikes, config.post_spec));

    for (const auto& w : row_waveforms) detail::require_waveform_fits(w, sim);
    for (const auto& w : col_waveforms) detail::require_waveform_fits(w, sim);

    CrossbarResult result;
    result.rows = config.rows;
    result.cols = config.cols;
    result.devices.resize(static_cast<std::size_t>(config.rows) * static_cast<std::size_t>(config.cols));

    const std::uint64_t n_devices = result.devices.size();
    parallel_for_index(n_devices, sim.threads, [&](std::uint64_t idx) {
        const int r = static_cast<int>(idx / static_cast<std::uint64_t>(config.cols));
        const int c = static_cast<int>(idx % static_cast<std::uint64_t>(config.cols));
        const Waveform device_wf = Waveform::difference(row_waveforms[static_cast<std::size_t>(r)],
                                                        col_waveforms[static_cast<std::size_t>(c)]);
        RngStream rng(sim.master_seed,
                      stream_id_for(detail::crossbar_device_id(config.rows, config.cols, r, c),
                                    realization));
        const TrialOutcome outcome =
            detail::integrate_device(config.material_at(r, c), config.thermal_at(r, c),
                                     config.resistance_at(r, c), device_wf, sim, rng);
        DeviceResult& device = result.devices[idx];
        device.row = r;
        device.col = c;
        device.initial_state = outcome.initial_state;
        device.final_state = outcome.final_state;
        device.events = outcome.events;
        device.peak_temperature = outcome.peak_temperature;
        device.final_m = outcome.final_m;
    });
    return result;
}

struct PairingReport {
    int row = 0;
    int col = 0;
    double delta_t = 0.0;  // s; positive: pre heats then post switches
};

// Diagnostic: per device, the nearest heating-pulse-end -> switching-pulse-
// start interval implied by the spike schedules and pulse layouts. Positive
// for the pre-then-post (potentiation) pairing, negative for post-then-pre.
inline std::vector<PairingReport> effective_pairings(const SpikeSchedule& pre,
                                                     const SpikeSchedule& post,
                                                     const NeuronPulseSpec& pre_spec,
                                                     const NeuronPulseSpec& post_spec) {
    pre.validate();
    post.validate();
    pre_spec.validate();
    post_spec.validate();

    std::vector<PairingReport> report;
    for (std::size_t r = 0; r < pre.times.size(); ++r) {
        for (std::size_t c = 0; c < post.times.size(); ++c) {
            bool found = false;
            double best = 0.0;
            auto consider = [&](double value) {
                if (!found || std::fabs(value) < std::fabs(best)) {
                    best = value;
                    found = true;
                }
            };
            for (double tp : pre.times[r]) {
                for (double tq : post.times[c]) {
                    // pre heating end -> post switching start
                    consider(tq - (tp + pre_spec.heating_end_offset()));
                    // post heating end -> pre switching start, reported negative
                    consider(-(tp - (tq + post_spec.heating_end_offset())));
                }
            }
            if (found) {
                report.push_back({static_cast<int>(r), static_cast<int>(c), best});
            }
        }
    }
    return report;
}

}  // namespace mtjstdp
