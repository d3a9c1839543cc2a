#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "mtjstdp/material.hpp"

namespace mtjstdp {

struct PulseSpec {
    double amplitude = 0.0;  // V, >= 0
    double duration = 0.0;   // s, > 0
    int polarity = +1;       // emitted sign when no derivation rule applies

    void validate() const {
        if (amplitude < 0.0) throw std::invalid_argument("PulseSpec: amplitude must be >= 0");
        if (!(duration > 0.0)) throw std::invalid_argument("PulseSpec: duration must be > 0");
        if (polarity != 1 && polarity != -1) throw std::invalid_argument("PulseSpec: polarity must be +1 or -1");
    }
};

// Piecewise-constant voltage program: sorted, non-overlapping segments,
// implicitly 0 V elsewhere. Overlapping inputs are resolved by summing
// amplitudes (linear superposition).
class Waveform {
public:
    struct Segment {
        double t_begin = 0.0;
        double t_end = 0.0;
        double voltage = 0.0;
    };

    Waveform() = default;

    static Waveform from_segments(std::vector<Segment> raw) {
        for (const auto& s : raw) {
            if (!(s.t_end > s.t_begin)) throw std::invalid_argument("Waveform: segment end must exceed start");
        }
        // Boundary sweep: sum amplitudes on every elementary interval.
        std::vector<double> edges;
        edges.reserve(2 * raw.size());
        for (const auto& s : raw) {
            edges.push_back(s.t_begin);
            edges.push_back(s.t_end);
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

        Waveform w;
        for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
            const double a = edges[i];
            const double b = edges[i + 1];
            double v = 0.0;
            for (const auto& s : raw) {
                if (s.t_begin <= a && b <= s.t_end) v += s.voltage;
            }
            if (v != 0.0) {
                if (!w.segments_.empty() && w.segments_.back().t_end == a &&
                    w.segments_.back().voltage == v) {
                    w.segments_.back().t_end = b;
                } else {
                    w.segments_.push_back({a, b, v});
                }
            }
        }
        return w;
    }

    // Right-continuous evaluation: at a boundary the upcoming segment wins.
    double at(double t) const {
        auto it = std::upper_bound(segments_.begin(), segments_.end(), t,
                                   [](double value, const Segment& s) { return value < s.t_end; });
        if (it == segments_.end() || t < it->t_begin) return 0.0;
        return it->voltage;
    }

    const std::vector<Segment>& segments() const { return segments_; }
    bool empty() const { return segments_.empty(); }

    double support_end() const { return segments_.empty() ? 0.0 : segments_.back().t_end; }

    double support_length() const {
        double total = 0.0;
        for (const auto& s : segments_) total += s.t_end - s.t_begin;
        return total;
    }

    Waveform negated() const {
        Waveform w = *this;
        for (auto& s : w.segments_) s.voltage = -s.voltage;
        return w;
    }

    static Waveform superpose(const Waveform& a, const Waveform& b) {
        std::vector<Segment> all = a.segments_;
        all.insert(all.end(), b.segments_.begin(), b.segments_.end());
        return from_segments(std::move(all));
    }

    static Waveform difference(const Waveform& a, const Waveform& b) {
        return superpose(a, b.negated());
    }

    // O(1) amortized sequential evaluation for monotonically increasing t.
    class Cursor {
    public:
        explicit Cursor(const Waveform& w) : w_(&w) {}
        double at(double t) {
            const auto& segs = w_->segments_;
            while (index_ < segs.size() && t >= segs[index_].t_end) ++index_;
            if (index_ >= segs.size() || t < segs[index_].t_begin) return 0.0;
            return segs[index_].voltage;
        }

    private:
        const Waveform* w_;
        std::size_t index_ = 0;
    };

private:
    std::vector<Segment> segments_;
};

// Fig. 3-style composite spike: switching pulse first, heating pulse after a
// gap. Amplitude signs are carried by the PulseSpec polarities (as emitted by
// the neuron onto its line).
struct NeuronPulseSpec {
    PulseSpec switching;
    PulseSpec heating;
    double gap = 0.0;  // s between the two pulses

    void validate() const {
        switching.validate();
        heating.validate();
        if (gap < 0.0) throw std::invalid_argument("NeuronPulseSpec: gap must be >= 0");
    }

    double event_length() const { return switching.duration + gap + heating.duration; }
    double heating_end_offset() const { return event_length(); }
};

enum class SwitchDirection { ap_to_p, p_to_ap };

inline const char* to_string(SwitchDirection d) {
    return d == SwitchDirection::ap_to_p ? "AP->P" : "P->AP";
}

inline BinaryState initial_state_for(SwitchDirection d) {
    return d == SwitchDirection::ap_to_p ? BinaryState::AP : BinaryState::P;
}

// Positive device voltage drives AP->P (spin_current sign convention).
inline int switching_sign_for(SwitchDirection d) {
    return d == SwitchDirection::ap_to_p ? +1 : -1;
}

// How the heating-pulse sign relates to the switching direction it precedes.
//  aligned: same sign as the switching pulse (half-select safe: the larger
//           cross-state current is always a stabilizing torque),
//  opposed: opposite sign (heating torque opposes the upcoming switching),
//  fixed:   take the sign from the heating PulseSpec itself.
enum class HeatingPolarity { aligned, opposed, fixed };

inline int heating_sign_for(HeatingPolarity mode, SwitchDirection direction,
                            const PulseSpec& heating) {
    switch (mode) {
        case HeatingPolarity::aligned: return switching_sign_for(direction);
        case HeatingPolarity::opposed: return -switching_sign_for(direction);
        case HeatingPolarity::fixed: return heating.polarity;
    }
    return +1;
}

// Fig. 2(a) pairing: heating pulse on [0, t1], switching pulse on
// [t1 + dt, t1 + dt + t2] with the polarity that drives `direction`.
inline Waveform pair_protocol(double delta_t, const PulseSpec& heating, const PulseSpec& switching,
                              SwitchDirection direction,
                              HeatingPolarity mode = HeatingPolarity::fixed) {
    if (delta_t < 0.0) {
        throw std::invalid_argument("pair_protocol: delta_t must be >= 0 (mirror the protocol instead)");
    }
    heating.validate();
    switching.validate();
    const double sw_sign = switching_sign_for(direction);
    const double heat_sign = heating_sign_for(mode, direction, heating);
    const double t1 = heating.duration;
    std::vector<Waveform::Segment> segs;
    if (heating.amplitude != 0.0) {
        segs.push_back({0.0, t1, heat_sign * heating.amplitude});
    }
    if (switching.amplitude != 0.0) {
        segs.push_back({t1 + delta_t, t1 + delta_t + switching.duration, sw_sign * switching.amplitude});
    }
    return Waveform::from_segments(std::move(segs));
}

inline Waveform neuron_waveform(double spike_time, const NeuronPulseSpec& spec) {
    if (spike_time < 0.0) throw std::invalid_argument("neuron_waveform: spike_time must be >= 0");
    spec.validate();
    std::vector<Waveform::Segment> segs;
    if (spec.switching.amplitude != 0.0) {
        segs.push_back({spike_time, spike_time + spec.switching.duration,
                        spec.switching.polarity * spec.switching.amplitude});
    }
    const double heat_begin = spike_time + spec.switching.duration + spec.gap;
    if (spec.heating.amplitude != 0.0) {
        segs.push_back({heat_begin, heat_begin + spec.heating.duration,
                        spec.heating.polarity * spec.heating.amplitude});
    }
    return Waveform::from_segments(std::move(segs));
}

inline Waveform neuron_waveform(const std::vector<double>& spike_times,
                                const NeuronPulseSpec& spec) {
    Waveform w;
    for (double t : spike_times) w = Waveform::superpose(w, neuron_waveform(t, spec));
    return w;
}

// Net junction voltage: pinned-layer terminal is the pre-neuron side.
inline double device_voltage(const Waveform& pre, const Waveform& post, double t) {
    return pre.at(t) - post.at(t);
}

}  // namespace mtjstdp
