#ifndef BGCTP_RNG_HPP
#define BGCTP_RNG_HPP

#include <cmath>
#include <cstdint>

#include "bgctp/errors.hpp"
#include "bgctp/graph.hpp"

namespace bgctp {

/// Lehmer linear congruential generator, the NETGEN choice:
/// state' = 16807 * state mod (2^31 - 1). Full period on states 1..2^31-2.
class Lehmer {
public:
    static constexpr std::int64_t kModulus = 2147483647; // 2^31 - 1, prime
    static constexpr std::int64_t kMultiplier = 16807;

    explicit Lehmer(std::int64_t seed) : state_(seed) {
        if (seed < 1 || seed > kModulus - 1)
            raise(Errc::InvalidArgument, "seed must lie in [1, 2^31-2]");
    }

    std::int64_t state() const { return state_; }

    /// Advances and returns the raw value, in [1, kModulus-1].
    std::int64_t next() {
        state_ = (kMultiplier * state_) % kModulus;
        return state_;
    }

    /// next() mod k, for k >= 1.
    std::int64_t next_below(std::int64_t k) { return next() % k; }

    /// Cost draw in [1, 100].
    Cost next_cost() { return 1 + static_cast<Cost>(next() % 100); }

    /// Uniform in (0, 1).
    double next_uniform() { return static_cast<double>(next()) / static_cast<double>(kModulus); }

    /// Standard normal via Box-Muller; consumes exactly two uniform draws
    /// and returns the cosine branch.
    double next_normal() {
        const double u1 = next_uniform();
        const double u2 = next_uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

private:
    std::int64_t state_;
};

} // namespace bgctp

#endif // BGCTP_RNG_HPP
