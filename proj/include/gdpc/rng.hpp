#ifndef GDPC_RNG_HPP
#define GDPC_RNG_HPP

#include <cmath>
#include <cstdint>

#include <Eigen/Dense>

namespace gdpc {

// splitmix64 finalizer. Used both for seed mixing and to expand a single
// 64-bit seed into a full xoshiro256++ state.
inline std::uint64_t splitmix64(std::uint64_t x) {
    std::uint64_t z = x + 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// xoshiro256++ with splitmix64 seeding. All stochastic code in this
// project draws through this generator so that a (seed, draw order)
// pair pins every result bit-for-bit.
class Rng {
  public:
    // State words are splitmix64 outputs of a counter stream started at
    // the seed (the reference seeding discipline for xoshiro).
    explicit Rng(std::uint64_t seed) {
        std::uint64_t c = seed;
        for (auto& w : state_) {
            w = splitmix64(c);
            c += 0x9E3779B97F4A7C15ULL;
        }
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform on [0, 1), 53-bit resolution.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform on (lo, hi]; the shifted mantissa trick keeps log() safe.
    double uniform_open(double lo, double hi) {
        const double u = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
        return lo + (hi - lo) * u;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    // Standard normals via Box-Muller. Each call consumes exactly two
    // uniforms per generated pair; no state is carried across calls, so
    // the draw count of every fill is well defined.
    void fill_normal(Eigen::Ref<Eigen::VectorXd> out) {
        const Eigen::Index n = out.size();
        for (Eigen::Index i = 0; i < n; i += 2) {
            const double u1 = uniform_open(0.0, 1.0);
            const double u2 = next_double();
            const double r = std::sqrt(-2.0 * std::log(u1));
            const double a = 2.0 * M_PI * u2;
            out[i] = r * std::cos(a);
            if (i + 1 < n) out[i + 1] = r * std::sin(a);
        }
    }

    double next_normal() {
        Eigen::VectorXd one(1);
        fill_normal(one);
        return one[0];
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::uint64_t state_[4];
};

// Deterministic mix of a cell address into a single 64-bit key.
// Documented so an independent implementation of xoshiro256++ /
// splitmix64 can reproduce every replication stream:
//   h = 0; for field in [scenario_id, T, m, rep_index]: h = splitmix64(h ^ field)
//   rep_seed = splitmix64(base_seed ^ h)
inline std::uint64_t mix_key(std::uint64_t scenario_id, std::uint64_t T, std::uint64_t m,
                             std::uint64_t rep_index) {
    std::uint64_t h = 0;
    h = splitmix64(h ^ scenario_id);
    h = splitmix64(h ^ T);
    h = splitmix64(h ^ m);
    h = splitmix64(h ^ rep_index);
    return h;
}

inline std::uint64_t replication_seed(std::uint64_t base_seed, std::uint64_t scenario_id,
                                      std::uint64_t T, std::uint64_t m, std::uint64_t rep_index) {
    return splitmix64(base_seed ^ mix_key(scenario_id, T, m, rep_index));
}

}  // namespace gdpc

#endif
