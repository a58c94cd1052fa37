// Data-parallel kernels and their serial reference implementations.
//
// The OpenMP versions must return exactly what the serial versions return,
// element for element, for any worker count. Tests hold them to that.
#pragma once

#include <cstdint>
#include <vector>

#include "majvote/detection.hpp"
#include "majvote/ising.hpp"

namespace majvote::kernels {

/// Trials are grouped into fixed blocks. For Custom graphs each block runs
/// one Glauber chain; for exact samplers blocks only set the work grain.
inline constexpr std::uint64_t kTrialBlock = 256;

/// Sums of one (X, Y) draw.
struct TrialRecord {
    std::int32_t sum_x;
    std::int32_t sum_y;
    bool operator==(const TrialRecord&) const = default;
};

/// One record per trial, trial t drawing from substream(seed, t).
std::vector<TrialRecord> run_trials(const Sampler& sampler, const NoiseChannel& channel,
                                    std::uint64_t trials, std::uint64_t seed);
std::vector<TrialRecord> run_trials_serial(const Sampler& sampler, const NoiseChannel& channel,
                                           std::uint64_t trials, std::uint64_t seed);

/// log of exp(energy(x) + field·1ᵀx) for every state, indexed so that bit i
/// of the index set means x_i = +1. n <= 20.
std::vector<double> state_log_weights(const IsingModel& model, double field);
std::vector<double> state_log_weights_serial(const IsingModel& model, double field);

/// Seed-domain tag for Glauber burn-in streams, kept apart from trial streams.
inline constexpr std::uint64_t kChainStreamTag = 0xc4a1e5b10c5e7a9dULL;

int worker_count();
void set_worker_count(int workers);
/// Applies MAJVOTE_WORKERS from the environment when set. Returns the
/// resulting worker count.
int apply_worker_env();

}  // namespace majvote::kernels
