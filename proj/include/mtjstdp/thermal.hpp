#pragma once

#include <cmath>
#include <stdexcept>

#include "mtjstdp/material.hpp"

namespace mtjstdp {

struct ThermalParams {
    double room_temperature = 300.0;      // T_RT, K
    double joule_heating_constant = 0.0;  // alpha_J, K/W
    double thermal_time_constant = 0.0;   // tau_TR, s

    void validate() const {
        if (!(room_temperature > 0.0)) throw std::invalid_argument("ThermalParams: T_RT must be > 0");
        if (joule_heating_constant < 0.0) throw std::invalid_argument("ThermalParams: alpha_J must be >= 0");
        if (!(thermal_time_constant > 0.0)) throw std::invalid_argument("ThermalParams: tau_TR must be > 0");
    }
};

// Instantaneous free-layer temperature plus the bookkeeping needed to expose
// T_0, the temperature at the start of the current constant-power segment.
struct ThermalState {
    double temperature = 300.0;                // T_AF, K
    double segment_start_temperature = 300.0;  // T_0, K
    double segment_power = -1.0;               // W; negative means "no segment yet"
};

struct ResistanceModel {
    double r_parallel = 0.0;  // R_P, ohm
    double tmr = 0.0;         // (R_AP - R_P) / R_P
    BinaryState state = BinaryState::P;

    void validate() const {
        if (!(r_parallel > 0.0)) throw std::invalid_argument("ResistanceModel: R_P must be > 0");
        if (tmr < 0.0) throw std::invalid_argument("ResistanceModel: TMR must be >= 0");
    }
};

inline double resistance(const ResistanceModel& model) {
    return model.state == BinaryState::P ? model.r_parallel : model.r_parallel * (1.0 + model.tmr);
}

inline double joule_power(double voltage, const ResistanceModel& model) {
    return voltage * voltage / resistance(model);
}

// One exact step of the unified relaxation ODE dT/dt = (T_target - T)/tau_TR
// with T_target = T_RT + alpha_J * P. Reduces to the heating closed form for
// constant P started from T_RT and to pure cooling toward T_RT for P = 0, and
// composes exactly over arbitrary piecewise-constant power programs.
inline ThermalState thermal_step(ThermalState state, double power, const ThermalParams& params,
                                 double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("thermal_step: dt must be > 0");
    if (power != state.segment_power) {
        state.segment_start_temperature = state.temperature;
        state.segment_power = power;
    }
    const double target = params.room_temperature + params.joule_heating_constant * power;
    state.temperature = target + (state.temperature - target) * std::exp(-dt / params.thermal_time_constant);
    return state;
}

// T_AF(t) = T_RT + alpha_J * P_HP * (1 - exp(-t/tau_TR)); heating from room
// temperature under constant power. Oracle for thermal_step.
inline double analytic_heating(double t, double power, const ThermalParams& params) {
    if (t < 0.0) throw std::invalid_argument("analytic_heating: t must be >= 0");
    return params.room_temperature +
           params.joule_heating_constant * power * (1.0 - std::exp(-t / params.thermal_time_constant));
}

// Cooling from T_0 toward room temperature with no applied power.
inline double analytic_cooling(double t, double initial_temperature, const ThermalParams& params) {
    if (t < 0.0) throw std::invalid_argument("analytic_cooling: t must be >= 0");
    return params.room_temperature +
           (initial_temperature - params.room_temperature) * std::exp(-t / params.thermal_time_constant);
}

}  // namespace mtjstdp
