#include "majvote/detection.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace majvote {

void check_crossover(double p) {
    if (!(p > 0.0 && p < 0.5))
        throw std::invalid_argument("crossover probability must satisfy 0 < p < 1/2, got " +
                                    std::to_string(p));
}

NoiseChannel::NoiseChannel(double p) : p_(p) {
    check_crossover(p);
    epsilon_ = 0.5 * (std::log1p(-p) - std::log(p));
    flip_threshold_ = bernoulli_threshold(p);
}

NoiseChannel NoiseChannel::from_epsilon(double epsilon) {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon))
        throw std::invalid_argument("epsilon must be positive and finite");
    // p = e^{-ε} / (e^{ε} + e^{-ε}) = 1 / (1 + e^{2ε})
    return NoiseChannel(1.0 / (1.0 + std::exp(2.0 * epsilon)));
}

void bsc_apply(std::span<const Spin> x, const NoiseChannel& channel, Rng& rng, std::span<Spin> y) {
    if (x.size() != y.size()) throw std::invalid_argument("bsc_apply: output size mismatch");
    const std::uint64_t threshold = channel.flip_threshold();
    for (std::size_t i = 0; i < x.size(); ++i)
        y[i] = rng() < threshold ? static_cast<Spin>(-x[i]) : x[i];
}

SpinVector bsc_apply(const SpinVector& x, const NoiseChannel& channel, Rng& rng) {
    std::vector<Spin> y(static_cast<std::size_t>(x.size()));
    bsc_apply(x.values(), channel, rng, y);
    return SpinVector(std::move(y));
}

int majority_sign(std::span<const Spin> v) {
    if (v.size() % 2 == 0)
        throw std::invalid_argument("majority needs an odd number of members, got " +
                                    std::to_string(v.size()));
    return spin_sum(v) > 0 ? 1 : -1;
}

int majority_sign(const SpinVector& v) { return majority_sign(v.values()); }

bool detect_error(const SpinVector& x, const SpinVector& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("detect_error: length mismatch " + std::to_string(x.size()) +
                                    " vs " + std::to_string(y.size()));
    return majority_sign(x) != majority_sign(y);
}

}  // namespace majvote
