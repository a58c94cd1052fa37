#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include <omp.h>

#include "majvote/kernels.hpp"

namespace majvote::kernels {

int worker_count() { return omp_get_max_threads(); }

void set_worker_count(int workers) {
    if (workers < 1) throw std::invalid_argument("worker count must be >= 1");
    omp_set_num_threads(workers);
}

int apply_worker_env() {
    if (const char* env = std::getenv("MAJVOTE_WORKERS"); env && *env) {
        char* end = nullptr;
        const long workers = std::strtol(env, &end, 10);
        if (*end != '\0' || workers < 1)
            throw std::invalid_argument("MAJVOTE_WORKERS must be a positive integer");
        set_worker_count(static_cast<int>(workers));
    }
    return worker_count();
}

namespace {

void run_exact_block(const Sampler& sampler, const NoiseChannel& channel, std::uint64_t seed,
                     std::uint64_t begin, std::uint64_t end, std::span<Spin> x, std::span<Spin> y,
                     TrialRecord* out) {
    for (std::uint64_t t = begin; t < end; ++t) {
        Rng rng = substream(seed, t);
        sampler.draw(rng, x);
        bsc_apply(x, channel, rng, y);
        out[t] = {static_cast<std::int32_t>(spin_sum(x)), static_cast<std::int32_t>(spin_sum(y))};
    }
}

void run_glauber_block(const Sampler& sampler, const NoiseChannel& channel, std::uint64_t seed,
                       std::uint64_t block, std::uint64_t begin, std::uint64_t end,
                       std::span<Spin> x, std::span<Spin> y, TrialRecord* out) {
    const int n = sampler.model().n();
    Rng chain_rng(derive_seed(seed ^ kChainStreamTag, block));
    sampler.uniform_state(chain_rng, x);
    sampler.glauber_updates(chain_rng, x, sampler.glauber().burn_in_updates(n));
    const std::uint64_t thinning = sampler.glauber().thinning(n);
    for (std::uint64_t t = begin; t < end; ++t) {
        Rng rng = substream(seed, t);
        sampler.glauber_updates(rng, x, thinning);
        bsc_apply(x, channel, rng, y);
        out[t] = {static_cast<std::int32_t>(spin_sum(x)), static_cast<std::int32_t>(spin_sum(y))};
    }
}

}  // namespace

std::vector<TrialRecord> run_trials(const Sampler& sampler, const NoiseChannel& channel,
                                    std::uint64_t trials, std::uint64_t seed) {
    std::vector<TrialRecord> records(trials);
    const std::size_t n = static_cast<std::size_t>(sampler.model().n());
    const bool glauber = !sampler.exact();
    const std::int64_t blocks = static_cast<std::int64_t>((trials + kTrialBlock - 1) / kTrialBlock);
    TrialRecord* out = records.data();

#pragma omp parallel
    {
        std::vector<Spin> x(n), y(n);
#pragma omp for schedule(dynamic, 1)
        for (std::int64_t b = 0; b < blocks; ++b) {
            const std::uint64_t begin = static_cast<std::uint64_t>(b) * kTrialBlock;
            const std::uint64_t end = std::min(trials, begin + kTrialBlock);
            if (glauber)
                run_glauber_block(sampler, channel, seed, static_cast<std::uint64_t>(b), begin, end, x, y, out);
            else
                run_exact_block(sampler, channel, seed, begin, end, x, y, out);
        }
    }
    return records;
}

namespace {

// Energy of the state encoded by `index` (bit i set means x_i = +1).
double state_energy(const IsingModel& model, const std::vector<Edge>& edges, std::uint32_t index) {
    const int n = model.n();
    if (model.energy_depends_only_on_sum())
        return model.energy_of_sum(2L * std::popcount(index) - n);
    long bond_sum = 0;
    for (const auto& [i, j] : edges) bond_sum += (((index >> i) ^ (index >> j)) & 1U) ? -1 : 1;
    return model.theta() * static_cast<double>(bond_sum);
}

}  // namespace

std::vector<double> state_log_weights(const IsingModel& model, double field) {
    const int n = model.n();
    if (n > kMaxEnumerationSize) throw std::invalid_argument("state enumeration needs n <= 20");
    const std::int64_t states = std::int64_t{1} << n;
    std::vector<double> out(static_cast<std::size_t>(states));
    const std::vector<Edge> no_edges;
    const auto& edges = model.energy_depends_only_on_sum() ? no_edges : model.graph().edges();

#pragma omp parallel for schedule(static)
    for (std::int64_t s = 0; s < states; ++s) {
        const auto index = static_cast<std::uint32_t>(s);
        const long sum = 2L * std::popcount(index) - n;
        out[s] = state_energy(model, edges, index) + field * static_cast<double>(sum);
    }
    return out;
}

}  // namespace majvote::kernels
