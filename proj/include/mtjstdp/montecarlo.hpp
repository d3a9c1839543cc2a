#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mtjstdp/llgs.hpp"
#include "mtjstdp/material.hpp"
#include "mtjstdp/parallel.hpp"
#include "mtjstdp/rng.hpp"
#include "mtjstdp/stats.hpp"
#include "mtjstdp/thermal.hpp"
#include "mtjstdp/waveform.hpp"

namespace mtjstdp {

struct SimConfig {
    double dt = 1e-12;             // s
    double horizon = 0.0;          // s; waveform support must fit inside
    double relax_window = 5e-9;    // s of field-free settling before classification
    double switch_threshold = 0.5; // |m_z| level for state detection
    std::uint64_t n_trials = 1;
    std::uint64_t master_seed = 0;
    bool record_traces = false;
    int threads = 1;
    double clamp_temperature = 0.0;  // K; > 0 pins T_AF for the whole trial

    void validate() const {
        if (!(dt > 0.0) || dt > kMaxTimestep) throw std::invalid_argument("SimConfig: dt must be in (0, 5 ps]");
        if (!(horizon > 0.0)) throw std::invalid_argument("SimConfig: horizon must be > 0");
        if (relax_window < 0.0) throw std::invalid_argument("SimConfig: relax_window must be >= 0");
        if (n_trials < 1) throw std::invalid_argument("SimConfig: n_trials must be >= 1");
        if (!(std::fabs(switch_threshold) < 1.0)) {
            throw std::invalid_argument("SimConfig: |switch_threshold| must be < 1");
        }
        if (clamp_temperature < 0.0) throw std::invalid_argument("SimConfig: clamp_temperature must be >= 0");
    }
};

struct SwitchEvent {
    double time = 0.0;  // s
    SwitchDirection direction = SwitchDirection::ap_to_p;
};

struct TrialTrace {
    std::vector<double> t, mx, my, mz, temperature, voltage;
};

struct TrialOutcome {
    bool switched = false;
    Vec3 final_m;
    double peak_temperature = 0.0;
    BinaryState initial_state = BinaryState::P;
    BinaryState final_state = BinaryState::P;  // from the online detector
    std::vector<SwitchEvent> events;
    TrialTrace trace;  // populated when SimConfig::record_traces
};

namespace detail {

// Core coupled integration: voltage -> Joule power -> thermal step -> spin
// current -> LLG-S step, with online P/AP detection. A detected switch flips
// the resistance from the following step on.
inline TrialOutcome integrate_device(const MaterialParams& material, const ThermalParams& thermal,
                                     ResistanceModel model, const Waveform& waveform,
                                     const SimConfig& sim, RngStream rng) {
    const double dt = sim.dt;
    const std::uint64_t steps =
        static_cast<std::uint64_t>(std::llround((sim.horizon + sim.relax_window) / dt));

    TrialOutcome out;
    out.initial_state = model.state;

    Vec3 m = sample_initial_angle(material, thermal.room_temperature, thermal.room_temperature,
                                  model.state, rng);
    // Same exponential update as thermal_step with the decay factor hoisted
    // out of the loop (dt is constant within a trial).
    const double thermal_decay = std::exp(-dt / thermal.thermal_time_constant);
    const bool clamped = sim.clamp_temperature > 0.0;
    double temperature = clamped ? sim.clamp_temperature : thermal.room_temperature;
    out.peak_temperature = temperature;

    if (sim.record_traces) {
        out.trace.t.push_back(0.0);
        out.trace.mx.push_back(m.x);
        out.trace.my.push_back(m.y);
        out.trace.mz.push_back(m.z);
        out.trace.temperature.push_back(temperature);
        out.trace.voltage.push_back(waveform.at(0.0));
    }

    Waveform::Cursor cursor(waveform);
    for (std::uint64_t k = 0; k < steps; ++k) {
        const double t = static_cast<double>(k) * dt;
        const double v = cursor.at(t);
        const double r = resistance(model);
        if (!clamped) {
            const double target = thermal.room_temperature + thermal.joule_heating_constant * v * v / r;
            temperature = target + (temperature - target) * thermal_decay;
            if (temperature > out.peak_temperature) out.peak_temperature = temperature;
        }
        const SpinCurrent is = spin_current(v, r, material.spin_polarization);
        m = llgs_step(m, is, material, temperature, dt, rng);

        const double along = m.dot(material.pinned_axis) * easy_axis_sign(model.state);
        if (along < -sim.switch_threshold) {
            model.state = flipped(model.state);
            out.events.push_back({t + dt, model.state == BinaryState::P ? SwitchDirection::ap_to_p
                                                                        : SwitchDirection::p_to_ap});
        }

        if (sim.record_traces) {
            out.trace.t.push_back(t + dt);
            out.trace.mx.push_back(m.x);
            out.trace.my.push_back(m.y);
            out.trace.mz.push_back(m.z);
            out.trace.temperature.push_back(temperature);
            out.trace.voltage.push_back(v);
        }
    }

    out.final_m = m;
    out.final_state = model.state;
    const double proj = m.dot(material.pinned_axis) * easy_axis_sign(out.initial_state);
    out.switched = proj < -sim.switch_threshold ||
                   (std::fabs(proj) <= sim.switch_threshold && proj < 0.0);
    return out;
}

inline void require_waveform_fits(const Waveform& waveform, const SimConfig& sim) {
    if (waveform.support_end() > sim.horizon * (1.0 + 1e-12)) {
        throw std::invalid_argument("waveform extends beyond the simulation horizon");
    }
}

}  // namespace detail

inline TrialOutcome run_trial(const MaterialParams& material, const ThermalParams& thermal,
                              const ResistanceModel& model, const Waveform& waveform,
                              const SimConfig& sim, std::uint64_t trial_index,
                              std::uint64_t device_id = 0) {
    material.validate();
    thermal.validate();
    model.validate();
    sim.validate();
    detail::require_waveform_fits(waveform, sim);
    RngStream rng(sim.master_seed, stream_id_for(device_id, trial_index));
    return detail::integrate_device(material, thermal, model, waveform, sim, rng);
}

struct ProbEstimate {
    std::uint64_t n_trials = 0;
    std::uint64_t n_switched = 0;
    double p = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
};

// Monte Carlo switching probability with a 95% Wilson interval. Trials are
// dispatched to sim.threads workers on disjoint per-trial streams, so the
// counts cannot depend on the worker count.
inline ProbEstimate estimate_switch_prob(const MaterialParams& material, const ThermalParams& thermal,
                                         const ResistanceModel& model, const Waveform& waveform,
                                         const SimConfig& sim, std::uint64_t device_id = 0) {
    material.validate();
    thermal.validate();
    model.validate();
    sim.validate();
    detail::require_waveform_fits(waveform, sim);

    std::atomic<std::uint64_t> switched{0};
    parallel_for_index(sim.n_trials, sim.threads, [&](std::uint64_t i) {
        RngStream rng(sim.master_seed, stream_id_for(device_id, i));
        if (detail::integrate_device(material, thermal, model, waveform, sim, rng).switched) {
            switched.fetch_add(1, std::memory_order_relaxed);
        }
    });

    ProbEstimate est;
    est.n_trials = sim.n_trials;
    est.n_switched = switched.load();
    est.p = static_cast<double>(est.n_switched) / static_cast<double>(est.n_trials);
    const Interval ci = wilson_interval(est.n_switched, est.n_trials);
    est.ci_low = ci.low;
    est.ci_high = ci.high;
    return est;
}

// Which curve quadrant carries the positive sign. The figure-caption
// convention makes AP->P (potentiation) positive; the body-text convention is
// the mirror image.
enum class SignConvention { fig5_caption, section_iv_text };

inline double signed_probability(double p, SwitchDirection d, SignConvention c) {
    const bool positive = (d == SwitchDirection::ap_to_p) == (c == SignConvention::fig5_caption);
    return positive ? p : -p;
}

struct StdpBranchSpec {
    PulseSpec heating;
    PulseSpec switching;
};

// Pulse program for both STDP branches. The branches carry independent
// amplitudes because the switching current must sit just below criticality in
// the branch's own resistance state, and R_P != R_AP.
struct StdpProtocol {
    StdpBranchSpec potentiation;  // AP->P, driven at delta_t > 0
    StdpBranchSpec depression;    // P->AP, driven at delta_t < 0
    HeatingPolarity heating_polarity = HeatingPolarity::aligned;

    const StdpBranchSpec& branch(SwitchDirection d) const {
        return d == SwitchDirection::ap_to_p ? potentiation : depression;
    }
};

struct StdpPoint {
    double delta_t = 0.0;  // s, signed
    SwitchDirection direction = SwitchDirection::ap_to_p;
    std::uint64_t n_trials = 0;
    std::uint64_t n_switched = 0;
    double p_signed = 0.0;
    double ci_low = 0.0;   // on |p_signed|
    double ci_high = 0.0;
};

using StdpCurve = std::vector<StdpPoint>;

inline Waveform stdp_pair_waveform(double delta_t_abs, const StdpProtocol& protocol,
                                   SwitchDirection direction) {
    const StdpBranchSpec& b = protocol.branch(direction);
    return pair_protocol(delta_t_abs, b.heating, b.switching, direction, protocol.heating_polarity);
}

// Sweeps the pairing interval. delta_t > 0 runs the potentiation pairing from
// an AP initial state, delta_t < 0 the mirrored depression pairing from P;
// delta_t = 0 is evaluated in both branches.
inline StdpCurve stdp_sweep(std::vector<double> grid, const StdpProtocol& protocol,
                            const MaterialParams& material, const ThermalParams& thermal,
                            const ResistanceModel& base_model, const SimConfig& sim,
                            SignConvention sign = SignConvention::fig5_caption) {
    if (grid.empty()) throw std::invalid_argument("stdp_sweep: delta_t grid must be non-empty");
    std::sort(grid.begin(), grid.end());

    StdpCurve curve;
    auto run_point = [&](double delta_t, SwitchDirection direction) {
        ResistanceModel model = base_model;
        model.state = initial_state_for(direction);
        const Waveform w = stdp_pair_waveform(std::fabs(delta_t), protocol, direction);
        const ProbEstimate est = estimate_switch_prob(material, thermal, model, w, sim);
        curve.push_back({delta_t, direction, est.n_trials, est.n_switched,
                         signed_probability(est.p, direction, sign), est.ci_low, est.ci_high});
    };

    for (double delta_t : grid) {
        if (delta_t < 0.0) {
            run_point(delta_t, SwitchDirection::p_to_ap);
        } else if (delta_t > 0.0) {
            run_point(delta_t, SwitchDirection::ap_to_p);
        } else {
            run_point(0.0, SwitchDirection::p_to_ap);
            run_point(0.0, SwitchDirection::ap_to_p);
        }
    }
    return curve;
}

struct ThermalTrace {
    std::vector<double> t, voltage, power, temperature;
};

// Deterministic temperature trace of Fig. 4; no magnetization noise enters
// and the resistance state stays fixed, so the result matches the piecewise
// closed-form composition exactly.
inline ThermalTrace thermal_trace(const Waveform& waveform, const ThermalParams& thermal,
                                  const ResistanceModel& model, const SimConfig& sim) {
    thermal.validate();
    model.validate();
    sim.validate();
    detail::require_waveform_fits(waveform, sim);

    const std::uint64_t steps = static_cast<std::uint64_t>(std::llround(sim.horizon / sim.dt));
    ThermalTrace trace;
    trace.t.reserve(steps + 1);

    ThermalState ts;
    ts.temperature = thermal.room_temperature;
    ts.segment_start_temperature = ts.temperature;

    trace.t.push_back(0.0);
    trace.voltage.push_back(waveform.at(0.0));
    trace.power.push_back(joule_power(waveform.at(0.0), model));
    trace.temperature.push_back(ts.temperature);

    Waveform::Cursor cursor(waveform);
    for (std::uint64_t k = 0; k < steps; ++k) {
        const double t = static_cast<double>(k) * sim.dt;
        const double v = cursor.at(t);
        const double p = joule_power(v, model);
        ts = thermal_step(ts, p, thermal, sim.dt);
        trace.t.push_back(t + sim.dt);
        trace.voltage.push_back(v);
        trace.power.push_back(p);
        trace.temperature.push_back(ts.temperature);
    }
    return trace;
}

}  // namespace mtjstdp
