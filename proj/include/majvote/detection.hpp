// Binary symmetric channel and the majority-vote detector.
#pragma once

#include <cstdint>
#include <span>

#include "majvote/rng.hpp"
#include "majvote/spin.hpp"

namespace majvote {

/// BSC with crossover probability p in (0, 1/2).
class NoiseChannel {
public:
    /// Throws std::invalid_argument unless 0 < p < 1/2.
    explicit NoiseChannel(double p);
    /// From the log-odds ε = ½ log((1-p)/p) > 0.
    static NoiseChannel from_epsilon(double epsilon);

    double p() const noexcept { return p_; }
    double epsilon() const noexcept { return epsilon_; }
    std::uint64_t flip_threshold() const noexcept { return flip_threshold_; }

private:
    double p_;
    double epsilon_;
    std::uint64_t flip_threshold_;
};

void check_crossover(double p);

/// y_i = -x_i with probability p, independently.
void bsc_apply(std::span<const Spin> x, const NoiseChannel& channel, Rng& rng, std::span<Spin> y);
SpinVector bsc_apply(const SpinVector& x, const NoiseChannel& channel, Rng& rng);

/// sign(1ᵀv). n must be odd.
int majority_sign(std::span<const Spin> v);
int majority_sign(const SpinVector& v);

/// true iff majority_sign(x) != majority_sign(y). Equal odd lengths required.
bool detect_error(const SpinVector& x, const SpinVector& y);

/// Same test on precomputed sums (both nonzero because n is odd).
inline bool sums_disagree(long sum_x, long sum_y) noexcept { return (sum_x > 0) != (sum_y > 0); }

}  // namespace majvote
