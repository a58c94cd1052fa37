// Serial reference versions of the kernels. Written for clarity over speed.
#include <stdexcept>

#include "majvote/kernels.hpp"

namespace majvote::kernels {

std::vector<TrialRecord> run_trials_serial(const Sampler& sampler, const NoiseChannel& channel,
                                           std::uint64_t trials, std::uint64_t seed) {
    std::vector<TrialRecord> records;
    records.reserve(trials);
    const int n = sampler.model().n();

    if (sampler.exact()) {
        for (std::uint64_t t = 0; t < trials; ++t) {
            Rng rng = substream(seed, t);
            const SpinVector x = sampler.draw(rng);
            const SpinVector y = bsc_apply(x, channel, rng);
            records.push_back({static_cast<std::int32_t>(x.sum()), static_cast<std::int32_t>(y.sum())});
        }
        return records;
    }

    std::vector<Spin> state(static_cast<std::size_t>(n));
    for (std::uint64_t t = 0; t < trials; ++t) {
        if (t % kTrialBlock == 0) {
            Rng chain_rng(derive_seed(seed ^ kChainStreamTag, t / kTrialBlock));
            sampler.uniform_state(chain_rng, state);
            sampler.glauber_updates(chain_rng, state, sampler.glauber().burn_in_updates(n));
        }
        Rng rng = substream(seed, t);
        sampler.glauber_updates(rng, state, sampler.glauber().thinning(n));
        const SpinVector x(state);
        const SpinVector y = bsc_apply(x, channel, rng);
        records.push_back({static_cast<std::int32_t>(x.sum()), static_cast<std::int32_t>(y.sum())});
    }
    return records;
}

std::vector<double> state_log_weights_serial(const IsingModel& model, double field) {
    const int n = model.n();
    if (n > kMaxEnumerationSize) throw std::invalid_argument("state enumeration needs n <= 20");
    const std::size_t states = std::size_t{1} << n;
    std::vector<double> out;
    out.reserve(states);
    std::vector<Spin> x(static_cast<std::size_t>(n));
    for (std::size_t s = 0; s < states; ++s) {
        for (int i = 0; i < n; ++i) x[i] = ((s >> i) & 1U) ? Spin{1} : Spin{-1};
        out.push_back(energy(model, x) + field * static_cast<double>(spin_sum(x)));
    }
    return out;
}

}  // namespace majvote::kernels
