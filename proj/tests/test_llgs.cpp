#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include "mtjstdp/llgs.hpp"
#include "support/fixtures.hpp"
#include "support/test_support.hpp"

using namespace mtjstdp;

namespace {

// Purely uniaxial test magnet: thin-film demag, K_i chosen so that the net
// easy-axis field H_k - 4 pi M_s equals the requested value.
MaterialParams uniaxial_material(double h_eff_oe, double damping) {
    MaterialParams p = test_support::default_material();
    p.damping = damping;
    p.demag_tensor = {0.0, 0.0, constants::four_pi};
    const double hk = h_eff_oe + constants::four_pi * p.saturation_magnetization;
    p.interface_anisotropy = hk * p.saturation_magnetization * p.free_layer_thickness / 2.0;
    return p;
}

}  // namespace

TEST_CASE("effective_field: deterministic parts match the CGS formulas") {
    MaterialParams p = test_support::default_material();
    p.demag_tensor = {0.0, 0.0, constants::four_pi};
    RngStream rng(1, 0);

    const double hk = 2.0 * p.interface_anisotropy /
                      (p.saturation_magnetization * p.free_layer_thickness);
    CHECK(hk == Catch::Approx(14562.0).epsilon(2e-4));

    SECTION("m along z at zero temperature") {
        const Vec3 h = effective_field({0, 0, 1}, p, 0.0, 1e-12, rng);
        CHECK(h.x == 0.0);
        CHECK(h.y == 0.0);
        CHECK(h.z == Catch::Approx(hk - constants::four_pi * p.saturation_magnetization));
    }

    SECTION("m along x: anisotropy term vanishes, demag remains") {
        const Vec3 h = effective_field({1, 0, 0}, p, 0.0, 1e-12, rng);
        CHECK(h.x == 0.0);  // N_x = 0 for the thin film
        CHECK(h.y == 0.0);
        CHECK(h.z == 0.0);
    }

    SECTION("general demag uses H_d,i = -N_i M_s m_i") {
        p.demag_tensor = {2.0, 4.0, constants::four_pi - 6.0};
        const Vec3 m = Vec3{0.36, 0.48, 0.8}.normalized();
        const Vec3 h = effective_field(m, p, 0.0, 1e-12, rng);
        CHECK(h.x == Catch::Approx(-2.0 * p.saturation_magnetization * m.x));
        CHECK(h.y == Catch::Approx(-4.0 * p.saturation_magnetization * m.y));
        CHECK(h.z == Catch::Approx((constants::four_pi - 6.0) * -p.saturation_magnetization * m.z +
                                   hk * m.z));
    }

    SECTION("contract violations") {
        CHECK_THROWS_AS(effective_field({0, 0, 1.5}, p, 0.0, 1e-12, rng), std::invalid_argument);
        CHECK_THROWS_AS(effective_field({0, 0, 1}, p, -1.0, 1e-12, rng), std::invalid_argument);
    }
}

TEST_CASE("thermal_field: zero temperature, determinism, variance") {
    MaterialParams p = test_support::default_material();

    SECTION("zero temperature gives the exact zero vector") {
        RngStream rng(3, 1);
        const Vec3 h = thermal_field(0.0, p, 1e-12, rng);
        CHECK(h.x == 0.0);
        CHECK(h.y == 0.0);
        CHECK(h.z == 0.0);
    }

    SECTION("same stream state, same vector") {
        RngStream a(11, 7), b(11, 7);
        const Vec3 ha = thermal_field(300.0, p, 1e-12, a);
        const Vec3 hb = thermal_field(300.0, p, 1e-12, b);
        CHECK(ha.x == hb.x);
        CHECK(ha.y == hb.y);
        CHECK(ha.z == hb.z);
    }

    SECTION("sample variance matches sigma^2 within 3% for both conventions") {
        const double dt = 1e-12;
        const double T = 300.0;
        const double denom = p.gyromagnetic_ratio * p.saturation_magnetization * p.volume();
        struct Case {
            NoiseConvention convention;
            double sigma2;
        };
        const Case cases[] = {
            {NoiseConvention::brown, 2.0 * p.damping * constants::k_boltzmann_erg * T / (denom * dt)},
            {NoiseConvention::paper_literal,
             p.damping * constants::k_boltzmann_erg * T * dt / denom},
        };
        for (const auto& c : cases) {
            p.noise_convention = c.convention;
            RngStream rng(2024, 0);
            std::vector<double> xs(100000);
            for (auto& x : xs) x = thermal_field(T, p, dt, rng).x;
            const auto mv = test_support::mean_and_variance(xs);
            CHECK(mv.variance == Catch::Approx(c.sigma2).epsilon(0.03));
        }
    }
}

TEST_CASE("spin_current maps voltage to signed polarized current") {
    const SpinCurrent zero = spin_current(0.0, 2000.0, 0.6);
    CHECK(zero.magnitude == 0.0);

    const SpinCurrent is = spin_current(1.0, 2000.0, 0.6);
    CHECK(is.magnitude == Catch::Approx(0.3e-3));
    CHECK(is.sign == +1);

    const SpinCurrent neg = spin_current(-1.0, 2000.0, 0.6);
    CHECK(neg.magnitude == Catch::Approx(is.magnitude));
    CHECK(neg.sign == -1);

    CHECK_THROWS_AS(spin_current(1.0, 0.0, 0.6), std::invalid_argument);
    CHECK_THROWS_AS(spin_current(1.0, -5.0, 0.6), std::invalid_argument);
}

TEST_CASE("llgs_step: fixed points on the easy axis") {
    MaterialParams p = uniaxial_material(2000.0, 0.015);
    RngStream rng(5, 0);
    const SpinCurrent none{};
    for (const Vec3 m0 : {Vec3{0, 0, 1}, Vec3{0, 0, -1}}) {
        Vec3 m = m0;
        for (int i = 0; i < 100; ++i) m = llgs_step(m, none, p, 0.0, 1e-12, rng);
        CHECK(std::fabs(m.x - m0.x) < 1e-12);
        CHECK(std::fabs(m.y - m0.y) < 1e-12);
        CHECK(std::fabs(m.z - m0.z) < 1e-12);
    }
}

TEST_CASE("llgs_step: zero-damping precession conserves m_z and the norm") {
    MaterialParams p = uniaxial_material(150.0, 0.0);
    RngStream rng(5, 0);
    const SpinCurrent none{};
    const double theta0 = 0.5;
    Vec3 m{std::sin(theta0), 0.0, std::cos(theta0)};
    const double mz0 = m.z;
    double max_norm_err = 0.0, max_mz_err = 0.0;
    for (int i = 0; i < 10000; ++i) {
        m = llgs_step(m, none, p, 0.0, 1e-12, rng);
        max_norm_err = std::max(max_norm_err, std::fabs(m.norm() - 1.0));
        max_mz_err = std::max(max_mz_err, std::fabs(m.z - mz0));
    }
    CHECK(max_norm_err <= 1e-9);
    CHECK(max_mz_err <= 1e-6);
}

TEST_CASE("llgs_step: damped relaxation follows the analytic angle decay") {
    const double h = 2000.0;
    MaterialParams p = uniaxial_material(h, 0.015);
    RngStream rng(5, 0);
    const SpinCurrent none{};
    const double theta0 = std::numbers::pi / 6.0;
    Vec3 m{std::sin(theta0), 0.0, std::cos(theta0)};

    double previous_mz = m.z;
    const int steps = 10000;
    const double dt = 1e-12;
    for (int i = 0; i < steps; ++i) {
        m = llgs_step(m, none, p, 0.0, dt, rng);
        CHECK(m.z >= previous_mz - 1e-12);  // monotone approach to +z
        previous_mz = m.z;
    }
    // single-spin uniaxial solution: tan(theta(t)) = tan(theta0) exp(-lambda t)
    const double lambda =
        p.damping * p.gyromagnetic_ratio * h / (1.0 + p.damping * p.damping);
    const double expected_tan = std::tan(theta0) * std::exp(-lambda * steps * dt);
    const double actual_tan = std::sqrt(m.x * m.x + m.y * m.y) / m.z;
    CHECK(actual_tan == Catch::Approx(expected_tan).epsilon(0.02));
}

TEST_CASE("llgs_step: spin-current sign pushes toward / away from the pinned axis") {
    MaterialParams p = uniaxial_material(2000.0, 0.015);
    RngStream rng(5, 0);
    const double beta = 5e9;  // 1/s, far above critical
    const SpinCurrent strong_p{beta * constants::electron_charge_c * p.spin_count(), +1};

    const double tilt = 0.1;
    Vec3 m{std::sin(tilt), 0.0, -std::cos(tilt)};  // near AP
    for (int i = 0; i < 3000; ++i) m = llgs_step(m, strong_p, p, 0.0, 1e-12, rng);
    CHECK(m.z > 0.9);  // sign +1 favors P

    const SpinCurrent strong_ap{strong_p.magnitude, -1};
    m = {std::sin(tilt), 0.0, std::cos(tilt)};
    for (int i = 0; i < 3000; ++i) m = llgs_step(m, strong_ap, p, 0.0, 1e-12, rng);
    CHECK(m.z < -0.9);
}

TEST_CASE("llgs_step: dt guard and norm maintenance at temperature") {
    MaterialParams p = uniaxial_material(2000.0, 0.015);
    RngStream rng(5, 0);
    CHECK_THROWS_AS(llgs_step({0, 0, 1}, {}, p, 300.0, 6e-12, rng), std::invalid_argument);
    CHECK_THROWS_AS(llgs_step({0, 0, 1}, {}, p, 300.0, 0.0, rng), std::invalid_argument);

    Vec3 m{0, 0, 1};
    double max_err = 0.0;
    for (int i = 0; i < 20000; ++i) {
        m = llgs_step(m, {}, p, 300.0, 1e-12, rng);
        max_err = std::max(max_err, std::fabs(m.norm() - 1.0));
    }
    CHECK(max_err <= 1e-9);
}

TEST_CASE("llgs_step: identical streams give bit-identical trajectories") {
    MaterialParams p = test_support::default_material();
    RngStream a(77, 123), b(77, 123);
    Vec3 ma{0, 0, 1}, mb{0, 0, 1};
    for (int i = 0; i < 2000; ++i) {
        ma = llgs_step(ma, {1e-4, +1}, p, 300.0, 1e-12, a);
        mb = llgs_step(mb, {1e-4, +1}, p, 300.0, 1e-12, b);
    }
    CHECK(ma.x == mb.x);
    CHECK(ma.y == mb.y);
    CHECK(ma.z == mb.z);
}

TEST_CASE("llgs_step: halving dt leaves the m_z distribution invariant (Brown scaling)") {
    MaterialParams p = uniaxial_material(2000.0, 0.015);
    const double t_final = 0.5e-9;
    auto sample = [&](double dt, std::uint64_t trial) {
        RngStream rng(4242, trial);
        Vec3 m = sample_initial_angle(p, 300.0, 300.0, BinaryState::P, rng);
        const int n = static_cast<int>(std::llround(t_final / dt));
        for (int i = 0; i < n; ++i) m = llgs_step(m, {}, p, 300.0, dt, rng);
        return m.z;
    };
    std::vector<double> coarse(2000), fine(2000);
    for (std::uint64_t i = 0; i < coarse.size(); ++i) coarse[i] = sample(1e-12, i);
    for (std::uint64_t i = 0; i < fine.size(); ++i) fine[i] = sample(0.5e-12, i + 50000);
    const double p_value = test_support::ks_two_sample_pvalue(coarse, fine);
    CHECK(p_value > 0.01);
}

TEST_CASE("sample_initial_angle: statistics against the quadrature oracle") {
    MaterialParams p = test_support::default_material();

    SECTION("huge barrier collapses onto the easy axis") {
        RngStream rng(9, 0);
        p.energy_barrier = 1e8;
        const Vec3 m = sample_initial_angle(p, 300.0, 300.0, BinaryState::P, rng);
        CHECK(m.z > 0.9999);
        const Vec3 ap = sample_initial_angle(p, 300.0, 300.0, BinaryState::AP, rng);
        CHECK(ap.z < -0.9999);
    }

    SECTION("mean squared angle at Delta = 73 matches the quadrature value") {
        const double delta = 73.0;
        auto density = [&](double theta) {
            return std::sin(theta) * std::exp(-delta * std::sin(theta) * std::sin(theta));
        };
        const double norm = test_support::simpson(density, 0.0, std::numbers::pi / 2.0);
        const double second = test_support::simpson(
            [&](double theta) { return theta * theta * density(theta); }, 0.0,
            std::numbers::pi / 2.0);
        const double oracle = second / norm;
        CHECK(oracle == Catch::Approx(1.0 / 73.0).epsilon(0.08));  // sanity vs small-angle limit

        RngStream rng(31337, 0);
        double acc = 0.0;
        const int n = 100000;
        for (int i = 0; i < n; ++i) {
            const double theta = std::acos(
                sample_initial_angle(p, 300.0, 300.0, BinaryState::P, rng).z);
            acc += theta * theta;
        }
        const double mc = acc / n;
        CHECK(mc == Catch::Approx(oracle).epsilon(0.05));
    }

    SECTION("azimuth is uniform: chi-square over 36 bins at 99% confidence") {
        RngStream rng(555, 0);
        constexpr int bins = 36;
        std::vector<int> counts(bins, 0);
        const int n = 100000;
        for (int i = 0; i < n; ++i) {
            const Vec3 m = sample_initial_angle(p, 300.0, 300.0, BinaryState::P, rng);
            double phi = std::atan2(m.y, m.x);
            if (phi < 0.0) phi += 2.0 * std::numbers::pi;
            const int bin = std::min(bins - 1, static_cast<int>(phi / (2.0 * std::numbers::pi) * bins));
            ++counts[bin];
        }
        const double expected = static_cast<double>(n) / bins;
        double chi2 = 0.0;
        for (int c : counts) chi2 += (c - expected) * (c - expected) / expected;
        CHECK(chi2 < 57.342);  // chi^2 critical value, 35 dof, 99%
    }

    SECTION("scaling: Delta halves when T doubles relative to the reference") {
        RngStream rng(777, 0);
        double acc = 0.0;
        const int n = 40000;
        for (int i = 0; i < n; ++i) {
            const double theta = std::acos(
                sample_initial_angle(p, 600.0, 300.0, BinaryState::P, rng).z);
            acc += theta * theta;
        }
        CHECK(acc / n == Catch::Approx(2.0 / 73.0).epsilon(0.08));
    }
}
