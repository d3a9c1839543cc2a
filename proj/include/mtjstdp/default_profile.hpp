#pragma once

#include <string_view>

namespace mtjstdp {

// Shipped default profile. Magnet constants follow the standard perpendicular
// CoFeB/MgO simulation set (M_s, K_i, alpha, E_B, geometry, T_RT, alpha_J);
// the demag split is chosen so the macrospin barrier H_keff*M_s*V/2 equals
// the 73 kT energy barrier at 300 K, and the electrical defaults put the
// switching pulse just below the 3 ns switching boundary while the heating
// pulse stays under the half-select safety line. configs/default.json is the
// same document on disk.
inline constexpr std::string_view default_profile_json = R"json({
  "material": {
    "saturation_magnetization_emu_cc": 1257.3,
    "interface_anisotropy_erg_cm2": 1.3,
    "damping": 0.015,
    "gyromagnetic_ratio_rad_per_s_oe": 17600000.0,
    "energy_barrier_kt": 73.0,
    "free_layer_diameter_nm": 40.0,
    "aspect_ratio": 1.0,
    "free_layer_thickness_nm": 1.42,
    "demag_nx": 1.0425088412818386,
    "demag_ny": 1.0425088412818386,
    "demag_nz": 10.481352931795495,
    "spin_polarization": 0.015,
    "pinned_axis": [0.0, 0.0, 1.0],
    "noise_convention": "brown",
    "curie_temperature_K": 0.0
  },
  "thermal": {
    "room_temperature_K": 300.0,
    "joule_heating_constant_K_per_W": 83600.0,
    "tau_tr_ns": 1.4
  },
  "resistance": {
    "r_parallel_ohm": 350.0,
    "tmr": 1.0,
    "initial_state": "AP"
  },
  "pulses": {
    "heating_polarity": "aligned",
    "gap_ns": 3.0,
    "potentiation": {
      "heating_amplitude_V": 1.1,
      "heating_duration_ns": 8.0,
      "switching_amplitude_V": 1.8,
      "switching_duration_ns": 3.0
    },
    "depression": {
      "heating_amplitude_V": 0.55,
      "heating_duration_ns": 8.0,
      "switching_amplitude_V": 0.9,
      "switching_duration_ns": 3.0
    }
  },
  "simulation": {
    "dt_ps": 0.5,
    "horizon_ns": 50.0,
    "relax_window_ns": 5.0,
    "switch_threshold": 0.5,
    "n_trials": 1000,
    "master_seed": 20260810,
    "record_traces": false,
    "clamp_temperature_K": 0.0,
    "sign_convention": "fig5-caption"
  },
  "sweep": {
    "delta_t_grid_ns": [-32, -24, -16, -12, -8, -6, -4, -2, -1, -0.5,
                        0.5, 1, 2, 4, 6, 8, 12, 16, 24, 32]
  },
  "trial": {
    "waveform": "pair",
    "delta_t_ns": 1.0,
    "direction": "AP->P",
    "trial_index": 0
  },
  "crossbar": {
    "rows": 2,
    "cols": 2,
    "initial_states": [["AP", "AP"], ["P", "P"]],
    "pre_spikes_ns": [[0.0], []],
    "post_spikes_ns": [[12.0], []],
    "realization": 0
  }
}
)json";

}  // namespace mtjstdp
