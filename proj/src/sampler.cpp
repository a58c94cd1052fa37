#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "majvote/ising.hpp"
#include "majvote/numeric.hpp"

namespace majvote {

Sampler::Sampler(IsingModel model, GlauberOptions glauber)
    : model_(std::move(model)), glauber_(glauber) {
    const double theta = model_.theta();
    const int n = model_.n();
    switch (model_.family()) {
        case GraphFamily::Empty:
            break;
        case GraphFamily::Chain:
        case GraphFamily::ChainPBC:
            // P(flip) = e^{-θ} / (e^{θ} + e^{-θ})
            chain_flip_threshold_ = bernoulli_threshold(1.0 / (1.0 + std::exp(2.0 * theta)));
            wrap_accept_threshold_ = bernoulli_threshold(std::exp(-2.0 * theta));
            break;
        case GraphFamily::Complete: {
            std::vector<double> log_w(static_cast<std::size_t>(n) + 1);
            for (int k = 0; k <= n; ++k) log_w[k] = log_binomial(n, k) + model_.energy_of_sum(2L * k - n);
            plus_pmf_ = normalize_log_weights(log_w);
            plus_cdf_.resize(plus_pmf_.size());
            CompensatedSum acc;
            for (std::size_t k = 0; k < plus_pmf_.size(); ++k) {
                acc.add(plus_pmf_[k]);
                plus_cdf_[k] = acc.value();
            }
            plus_cdf_.back() = 1.0;
            break;
        }
        case GraphFamily::Custom: {
            for (const auto& nb : model_.graph().adjacency())
                max_degree_ = std::max(max_degree_, static_cast<int>(nb.size()));
            heat_bath_threshold_.resize(2 * static_cast<std::size_t>(max_degree_) + 1);
            for (int field = -max_degree_; field <= max_degree_; ++field)
                heat_bath_threshold_[field + max_degree_] =
                    bernoulli_threshold(1.0 / (1.0 + std::exp(-2.0 * theta * field)));
            break;
        }
    }
}

void Sampler::draw_empty(Rng& rng, std::span<Spin> out) const {
    std::size_t i = 0;
    while (i < out.size()) {
        std::uint64_t bits = rng();
        for (int b = 0; b < 64 && i < out.size(); ++b, ++i, bits >>= 1)
            out[i] = (bits & 1U) ? Spin{1} : Spin{-1};
    }
}

void Sampler::draw_free_chain(Rng& rng, std::span<Spin> out) const {
    out[0] = (rng() >> 63) ? Spin{1} : Spin{-1};
    for (std::size_t i = 1; i < out.size(); ++i)
        out[i] = rng() < chain_flip_threshold_ ? static_cast<Spin>(-out[i - 1]) : out[i - 1];
}

void Sampler::draw_by_sum(Rng& rng, std::span<Spin> out) const {
    const double u = rng.uniform();
    const auto it = std::upper_bound(plus_cdf_.begin(), plus_cdf_.end(), u);
    std::size_t remaining_plus = static_cast<std::size_t>(it - plus_cdf_.begin());
    remaining_plus = std::min(remaining_plus, out.size());
    // Selection sampling: every k-subset of positions is equally likely.
    for (std::size_t i = 0; i < out.size(); ++i) {
        const std::uint64_t left = out.size() - i;
        if (rng.below(left) < remaining_plus) {
            out[i] = 1;
            --remaining_plus;
        } else {
            out[i] = -1;
        }
    }
}

void Sampler::uniform_state(Rng& rng, std::span<Spin> out) const { draw_empty(rng, out); }

void Sampler::glauber_updates(Rng& rng, std::span<Spin> state, std::uint64_t updates) const {
    const auto& adjacency = model_.graph().adjacency();
    const std::uint64_t n = state.size();
    for (std::uint64_t u = 0; u < updates; ++u) {
        const std::size_t site = rng.below(n);
        int local = 0;
        for (int j : adjacency[site]) local += state[j];
        state[site] = rng() < heat_bath_threshold_[local + max_degree_] ? Spin{1} : Spin{-1};
    }
}

void Sampler::draw(Rng& rng, std::span<Spin> out) const {
    if (static_cast<int>(out.size()) != model_.n())
        throw std::invalid_argument("output span does not match model size");
    switch (model_.family()) {
        case GraphFamily::Empty:
            draw_empty(rng, out);
            return;
        case GraphFamily::Chain:
            draw_free_chain(rng, out);
            return;
        case GraphFamily::ChainPBC:
            // Free-chain proposal, accepted with exp(θ(x_n x_1 - 1)).
            for (;;) {
                draw_free_chain(rng, out);
                if (out.front() == out.back() || rng() < wrap_accept_threshold_) return;
            }
        case GraphFamily::Complete:
            draw_by_sum(rng, out);
            return;
        case GraphFamily::Custom:
            uniform_state(rng, out);
            glauber_updates(rng, out, glauber_.burn_in_updates(model_.n()));
            return;
    }
}

SpinVector Sampler::draw(Rng& rng) const {
    std::vector<Spin> spins(static_cast<std::size_t>(model_.n()));
    draw(rng, spins);
    return SpinVector(std::move(spins));
}

SpinVector sample(const IsingModel& model, Rng& rng, const GlauberOptions& glauber) {
    return Sampler(model, glauber).draw(rng);
}

}  // namespace majvote
