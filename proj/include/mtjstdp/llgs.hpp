#pragma once

#include <cmath>
#include <stdexcept>

#include "mtjstdp/material.hpp"
#include "mtjstdp/rng.hpp"
#include "mtjstdp/vec3.hpp"

namespace mtjstdp {

// Spin current through the junction in charge-current units (A), already
// scaled by the polarization. sign = +1 drives the free layer toward the
// pinned axis (P), -1 away from it (AP); the sign follows the voltage
// polarity alone.
struct SpinCurrent {
    double magnitude = 0.0;  // A, >= 0
    int sign = +1;
};

inline SpinCurrent spin_current(double voltage, double resistance_ohm, double polarization) {
    if (!(resistance_ohm > 0.0)) throw std::invalid_argument("spin_current: resistance must be > 0");
    const double charge_current = voltage / resistance_ohm;
    return {polarization * std::fabs(charge_current), charge_current < 0.0 ? -1 : +1};
}

namespace detail {

inline void require_unit(const Vec3& m, const char* where) {
    if (std::fabs(m.norm() - 1.0) > 1e-6) {
        throw std::invalid_argument(std::string(where) + ": magnetization must be a unit vector");
    }
}

// Standard-deviation of each thermal-field component, Oe.
inline double thermal_sigma(double temperature, const MaterialParams& p, double dt) {
    if (temperature == 0.0) return 0.0;
    const double ms = p.ms_at(temperature);
    const double denom = std::fabs(p.gyromagnetic_ratio) * ms * p.volume();
    if (p.noise_convention == NoiseConvention::brown) {
        return std::sqrt(2.0 * p.damping * constants::k_boltzmann_erg * temperature / (denom * dt));
    }
    // Literal reading with dt in the numerator; kept selectable for
    // comparison even though its statistics depend on the step size.
    return std::sqrt(p.damping * constants::k_boltzmann_erg * temperature * dt / denom);
}

}  // namespace detail

// zeta * sigma with zeta a vector of independent standard normals. Consumes
// no draws at zero temperature.
inline Vec3 thermal_field(double temperature, const MaterialParams& params, double dt,
                          RngStream& rng) {
    if (temperature < 0.0) throw std::invalid_argument("thermal_field: temperature must be >= 0");
    if (!(dt > 0.0)) throw std::invalid_argument("thermal_field: dt must be > 0");
    const double sigma = detail::thermal_sigma(temperature, params, dt);
    if (sigma == 0.0) return {};
    return {sigma * rng.normal(), sigma * rng.normal(), sigma * rng.normal()};
}

// Demagnetization (H_d,i = -N_i * M_s * m_i) plus interface anisotropy
// (H_k = 2 K_i / (M_s t_fl) along z, weighted by m_z).
inline Vec3 anisotropy_demag_field(const Vec3& m, const MaterialParams& p) {
    const double ms = p.saturation_magnetization;
    const double hk = 2.0 * p.interface_anisotropy / (ms * p.free_layer_thickness);
    return {-p.demag_tensor.x * ms * m.x, -p.demag_tensor.y * ms * m.y,
            -p.demag_tensor.z * ms * m.z + hk * m.z};
}

inline Vec3 effective_field(const Vec3& m, const MaterialParams& params, double temperature,
                            double dt, RngStream& rng) {
    detail::require_unit(m, "effective_field");
    return anisotropy_demag_field(m, params) + thermal_field(temperature, params, dt, rng);
}

namespace detail {

// Explicit (Landau-Lifshitz) form of the LLG-S right-hand side. The implicit
// Gilbert term alpha (m x dm/dt) has been eliminated algebraically, which
// yields the 1/(1+alpha^2) prefactor. The Slonczewski torque
// (1/(q N_s)) m x (m x I_s M) enters through tau = sign * beta * m x (M x m),
// which points toward M for sign = +1.
inline Vec3 llgs_rhs(const Vec3& m, const Vec3& h_eff, const SpinCurrent& is,
                     const MaterialParams& p) {
    const double alpha = p.damping;
    const double gamma = p.gyromagnetic_ratio;
    const Vec3 mxh = m.cross(h_eff);
    const Vec3 mxmxh = m.cross(mxh);

    Vec3 rhs = -gamma * mxh - (alpha * gamma) * mxmxh;
    if (is.magnitude != 0.0) {
        const double beta = is.magnitude / (constants::electron_charge_c * p.spin_count());
        const Vec3 tau = (is.sign * beta) * m.cross(p.pinned_axis.cross(m));
        rhs += tau + alpha * m.cross(tau);
    }
    return rhs * (1.0 / (1.0 + alpha * alpha));
}

}  // namespace detail

inline constexpr double kMaxTimestep = 5.0e-12;  // s; accuracy guard for the Heun scheme

// One stochastic Heun (predictor-corrector) step of the LLG-S equation.
// The same thermal-field realization enters both stages, which converges to
// the Stratonovich interpretation; the corrector output is renormalized.
inline Vec3 llgs_step(const Vec3& m, const SpinCurrent& is, const MaterialParams& params,
                      double temperature, double dt, RngStream& rng) {
    if (!(dt > 0.0) || dt > kMaxTimestep) {
        throw std::invalid_argument("llgs_step: dt must be in (0, 5 ps]");
    }
    detail::require_unit(m, "llgs_step");
    const Vec3 h_thermal = thermal_field(temperature, params, dt, rng);

    const Vec3 k1 = detail::llgs_rhs(m, anisotropy_demag_field(m, params) + h_thermal, is, params);
    const Vec3 predictor = m + dt * k1;
    const Vec3 k2 =
        detail::llgs_rhs(predictor, anisotropy_demag_field(predictor, params) + h_thermal, is, params);
    return (m + (0.5 * dt) * (k1 + k2)).normalized();
}

// Polar angle theta about the easy axis of `state`, drawn from
// p(theta) ~ sin(theta) exp(-Delta sin^2 theta) on [0, pi/2] with
// Delta = E_B * T_ref / T; azimuth uniform. Exact rejection sampler in
// w = 1 - cos(theta): the target exp(-2 Delta w + Delta w^2) sits under the
// Exp(Delta) proposal with acceptance exp(-Delta w (1 - w)) <= 1.
inline double sample_polar_angle(double delta, RngStream& rng) {
    if (!(delta > 0.0)) throw std::invalid_argument("sample_polar_angle: delta must be > 0");
    const double tail = -std::expm1(-delta);  // 1 - e^{-delta}
    for (;;) {
        const double w = -std::log1p(-rng.uniform01() * tail) / delta;
        if (rng.uniform01() <= std::exp(-delta * w * (1.0 - w))) {
            return std::acos(1.0 - w);
        }
    }
}

inline Vec3 sample_initial_angle(const MaterialParams& params, double temperature,
                                 double reference_temperature, BinaryState state, RngStream& rng) {
    if (!(temperature > 0.0)) throw std::invalid_argument("sample_initial_angle: T must be > 0");
    const double delta = params.energy_barrier * reference_temperature / temperature;
    const double theta = sample_polar_angle(delta, rng);
    const double phi = 6.283185307179586476925286766559 * rng.uniform01();

    const Vec3 axis = params.pinned_axis * static_cast<double>(easy_axis_sign(state));
    Vec3 e1, e2;
    transverse_basis(axis, e1, e2);
    const double s = std::sin(theta);
    return axis * std::cos(theta) + e1 * (s * std::cos(phi)) + e2 * (s * std::sin(phi));
}

}  // namespace mtjstdp
