#ifndef OPATOMO_RNG_HPP
#define OPATOMO_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>

namespace opatomo {

/// Counter-based random stream: every draw is a pure function of
/// (master seed, stream tag, phase index, shot index, draw counter),
/// so results do not depend on evaluation order or thread count.
class RandomStream {
  public:
    RandomStream(std::uint64_t master_seed, std::uint64_t stream_tag,
                 std::uint64_t phase_index, std::uint64_t shot_index)
        : counter_(0) {
        std::uint64_t k = mix(master_seed ^ 0x6a09e667f3bcc909ull);
        k = mix(k ^ (stream_tag * 0xbb67ae8584caa73bull));
        k = mix(k ^ (phase_index * 0x3c6ef372fe94f82bull));
        key_ = mix(k ^ (shot_index * 0xa54ff53a5f1d36f1ull));
    }

    /// splitmix64 finalizer over a strided counter.
    std::uint64_t next_u64() {
        std::uint64_t z = key_ + (++counter_) * 0x9e3779b97f4a7c15ull;
        return mix(z);
    }

    /// Uniform in (0,1]; never returns 0 so log() is safe.
    double next_uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53 + 0x1.0p-54;
    }

    /// Standard normal via Box-Muller (no rejection, fixed draw count).
    double next_normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = next_uniform();
        double u2 = next_uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    double next_normal(double mean, double stddev) {
        return mean + stddev * next_normal();
    }

    /// Chi-squared with 1 dof (square of a standard normal).
    double next_chi2_1() {
        double z = next_normal();
        return z * z;
    }

  private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ull;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebull;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t key_;
    std::uint64_t counter_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

/// Stream tags used by the experiment runner.
namespace stream_tag {
inline constexpr std::uint64_t signal = 1;
inline constexpr std::uint64_t vacuum = 2;
inline constexpr std::uint64_t bootstrap = 3;
}  // namespace stream_tag

}  // namespace opatomo

#endif  // OPATOMO_RNG_HPP
