#pragma once

#include "mtjstdp/material.hpp"
#include "mtjstdp/montecarlo.hpp"
#include "mtjstdp/thermal.hpp"

namespace test_support {

// The shipped device: Table-style magnet constants with the calibrated
// effective demag split (uniaxial difference N_z - N_x reproduces the 73 kT
// barrier at 300 K) and the engineering defaults used by the CLI profile.
inline mtjstdp::MaterialParams default_material() {
    mtjstdp::MaterialParams p;
    p.saturation_magnetization = 1257.3;  // emu/cm^3
    p.interface_anisotropy = 1.3;         // erg/cm^2
    p.damping = 0.015;
    p.gyromagnetic_ratio = 1.76e7;
    p.energy_barrier = 73.0;
    p.free_layer_diameter = 40e-7;   // cm
    p.aspect_ratio = 1.0;
    p.free_layer_thickness = 1.42e-7;  // cm
    p.demag_tensor = {1.0425088412818386, 1.0425088412818386, 10.481352931795495};
    p.spin_polarization = 0.015;
    return p;
}

inline mtjstdp::ThermalParams default_thermal() {
    mtjstdp::ThermalParams t;
    t.room_temperature = 300.0;
    t.joule_heating_constant = 83600.0;  // K/W
    t.thermal_time_constant = 1.4e-9;    // s
    return t;
}

inline mtjstdp::ResistanceModel default_resistance(mtjstdp::BinaryState state) {
    mtjstdp::ResistanceModel m;
    m.r_parallel = 350.0;
    m.tmr = 1.0;
    m.state = state;
    return m;
}

inline mtjstdp::SimConfig default_sim(std::uint64_t n_trials, std::uint64_t seed) {
    mtjstdp::SimConfig sim;
    sim.dt = 1e-12;
    sim.horizon = 50e-9;
    sim.relax_window = 5e-9;
    sim.switch_threshold = 0.5;
    sim.n_trials = n_trials;
    sim.master_seed = seed;
    sim.threads = 2;
    return sim;
}

}  // namespace test_support
