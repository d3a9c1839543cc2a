#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace mtjstdp {

namespace detail {

// Philox4x32-10 block cipher (Salmon et al., SC'11). Counter-based so that
// (seed, stream, counter) -> output is a pure function, independent of
// platform, thread schedule, and call history.
struct PhiloxBlock {
    std::array<std::uint32_t, 4> v;
};

inline PhiloxBlock philox4x32(std::uint64_t key64, std::uint64_t stream, std::uint64_t counter) {
    constexpr std::uint32_t kMul0 = 0xD2511F53u;
    constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
    constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

    std::uint32_t c0 = static_cast<std::uint32_t>(counter);
    std::uint32_t c1 = static_cast<std::uint32_t>(counter >> 32);
    std::uint32_t c2 = static_cast<std::uint32_t>(stream);
    std::uint32_t c3 = static_cast<std::uint32_t>(stream >> 32);
    std::uint32_t k0 = static_cast<std::uint32_t>(key64);
    std::uint32_t k1 = static_cast<std::uint32_t>(key64 >> 32);

    for (int round = 0; round < 10; ++round) {
        const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * c0;
        const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * c2;
        const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
        const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
        const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
        const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
        c0 = hi1 ^ c1 ^ k0;
        c1 = lo1;
        c2 = hi0 ^ c3 ^ k1;
        c3 = lo0;
        k0 += kWeyl0;
        k1 += kWeyl1;
    }
    return {{c0, c1, c2, c3}};
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

}  // namespace detail

// One logical random stream. Identical (master_seed, stream_id, counter)
// produce identical draws on any platform and for any worker count; parallel
// code hands every trial/device its own stream_id and never shares streams.
class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_id)
        : master_seed_(master_seed), stream_id_(stream_id) {}

    std::uint64_t master_seed() const { return master_seed_; }
    std::uint64_t stream_id() const { return stream_id_; }
    std::uint64_t counter() const { return counter_; }

    // Uniform on [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform on (0, 1]; safe under log().
    double uniform01_open_low() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller; draws come in deterministic pairs.
    double normal() {
        if (have_cached_normal_) {
            have_cached_normal_ = false;
            return cached_normal_;
        }
        const double u1 = uniform01_open_low();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        cached_normal_ = r * std::sin(a);
        have_cached_normal_ = true;
        return r * std::cos(a);
    }

private:
    std::uint64_t next_u64() {
        if (lane_ == 0) {
            block_ = detail::philox4x32(master_seed_, stream_id_, counter_++);
            lane_ = 2;
            return (static_cast<std::uint64_t>(block_.v[0]) << 32) | block_.v[1];
        }
        lane_ = 0;
        return (static_cast<std::uint64_t>(block_.v[2]) << 32) | block_.v[3];
    }

    std::uint64_t master_seed_;
    std::uint64_t stream_id_;
    std::uint64_t counter_ = 0;
    detail::PhiloxBlock block_{};
    int lane_ = 0;
    double cached_normal_ = 0.0;
    bool have_cached_normal_ = false;
};

// Collision-free stream id for (device, trial) pairs; device 0 keeps
// stream_id == trial so single-device Monte Carlo stays the trivial mapping.
inline std::uint64_t stream_id_for(std::uint64_t device_id, std::uint64_t trial_index) {
    if (device_id == 0) return trial_index;
    return detail::splitmix64(device_id) ^ trial_index;
}

}  // namespace mtjstdp
