#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "mtjstdp/vec3.hpp"

namespace mtjstdp {

// CGS-Gaussian constants. Fields in Oe, moments in emu, energies in erg.
namespace constants {
inline constexpr double k_boltzmann_erg = 1.380649e-16;       // erg/K
inline constexpr double bohr_magneton_emu = 9.2740100783e-21; // erg/G
inline constexpr double electron_charge_c = 1.602176634e-19;  // C (spin current is carried in A)
inline constexpr double four_pi = 4.0 * std::numbers::pi;
}  // namespace constants

enum class BinaryState { P, AP };

inline int easy_axis_sign(BinaryState s) { return s == BinaryState::P ? +1 : -1; }
inline BinaryState flipped(BinaryState s) { return s == BinaryState::P ? BinaryState::AP : BinaryState::P; }
inline const char* to_string(BinaryState s) { return s == BinaryState::P ? "P" : "AP"; }

// Scaling convention for the stochastic field amplitude, see thermal_field().
enum class NoiseConvention { brown, paper_literal };

struct MaterialParams {
    double saturation_magnetization = 0.0;  // M_s, emu/cm^3
    double interface_anisotropy = 0.0;      // K_i, erg/cm^2
    double damping = 0.0;                   // alpha
    double gyromagnetic_ratio = 1.76e7;     // gamma, rad/(s*Oe)
    double energy_barrier = 0.0;            // E_B in units of k_B*T at the room-temperature reference
    double free_layer_diameter = 0.0;       // cm
    double aspect_ratio = 1.0;
    double free_layer_thickness = 0.0;      // cm
    Vec3 demag_tensor{0.0, 0.0, constants::four_pi};  // (N_x, N_y, N_z), CGS: trace = 4*pi
    double spin_polarization = 0.6;
    Vec3 pinned_axis{0.0, 0.0, 1.0};
    NoiseConvention noise_convention = NoiseConvention::brown;
    double curie_temperature = 0.0;  // K; 0 disables Bloch-law M_s(T) in the thermal field

    // Free layer volume in cm^3; elliptical disk with axes d and AR*d.
    double volume() const {
        return std::numbers::pi / 4.0 * free_layer_diameter * free_layer_diameter * aspect_ratio *
               free_layer_thickness;
    }

    // N_s = M_s V / mu_B, number of Bohr magnetons in the free layer.
    double spin_count() const {
        return saturation_magnetization * volume() / constants::bohr_magneton_emu;
    }

    // Bloch-law saturation magnetization; only the thermal-field amplitude,
    // which carries the explicit M_s(T), uses this.
    double ms_at(double temperature) const {
        if (curie_temperature <= 0.0) return saturation_magnetization;
        if (temperature >= curie_temperature) {
            throw std::domain_error("MaterialParams: temperature at or above Curie temperature");
        }
        return saturation_magnetization *
               (1.0 - std::pow(temperature / curie_temperature, 1.5));
    }

    void validate() const {
        if (!(saturation_magnetization > 0.0)) throw std::invalid_argument("MaterialParams: M_s must be > 0");
        if (!(free_layer_thickness > 0.0)) throw std::invalid_argument("MaterialParams: t_fl must be > 0");
        if (!(free_layer_diameter > 0.0)) throw std::invalid_argument("MaterialParams: diameter must be > 0");
        if (!(damping > 0.0)) throw std::invalid_argument("MaterialParams: damping must be > 0");
        if (!(energy_barrier > 0.0)) throw std::invalid_argument("MaterialParams: E_B must be > 0");
        if (!(spin_polarization > 0.0) || spin_polarization > 1.0) {
            throw std::invalid_argument("MaterialParams: spin_polarization must be in (0, 1]");
        }
        const double trace = demag_tensor.x + demag_tensor.y + demag_tensor.z;
        if (std::fabs(trace - constants::four_pi) > 1e-6) {
            throw std::invalid_argument("MaterialParams: demag tensor trace must equal 4*pi, got " +
                                        std::to_string(trace));
        }
        if (std::fabs(pinned_axis.norm() - 1.0) > 1e-9) {
            throw std::invalid_argument("MaterialParams: pinned_axis must be a unit vector");
        }
    }
};

}  // namespace mtjstdp
