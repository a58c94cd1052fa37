// Seeded Monte Carlo experiments over (prior, channel) pairs.
//
// Output depends only on the config (seed included), never on how many
// workers ran it: trials draw from per-index substreams and all reductions
// run in trial-index order.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "majvote/asymptotics.hpp"
#include "majvote/detection.hpp"
#include "majvote/ising.hpp"
#include "majvote/kernels.hpp"

namespace majvote {

struct ExperimentConfig {
    GraphFamily family = GraphFamily::Empty;
    Coupling coupling = Coupling::Edgewise;
    int n = 1;
    double theta = 0.5;
    double p = 0.1;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 0;
    double confidence = 0.99;
    std::optional<Graph> custom_graph;  // required when family == Custom
    std::string custom_path;            // provenance, echoed in output
    GlauberOptions glauber;

    /// Throws std::invalid_argument with a one-line reason.
    void validate() const;
    IsingModel model() const;
};

enum class EstimateMethod { MonteCarlo, Exact };

struct Estimate {
    double point = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    EstimateMethod method = EstimateMethod::MonteCarlo;
    std::uint64_t events = 0;  // error count behind `point`
    bool sampler_exact = true;  // false when the prior came from Glauber MCMC
};

struct Interval {
    double low;
    double high;
};

/// Wilson score interval for `events` successes out of `trials`.
Interval wilson_interval(std::uint64_t events, std::uint64_t trials, double confidence);
/// Half-width of the Wilson interval at z standard errors.
double wilson_half_width(std::uint64_t events, std::uint64_t trials, double z);

/// Raw per-trial sums for a config (the shared input of every estimator).
std::vector<kernels::TrialRecord> simulate_trials(const ExperimentConfig& config);

Estimate estimate_pe(const ExperimentConfig& config);
Estimate estimate_pe(const ExperimentConfig& config, std::span<const kernels::TrialRecord> records);
/// Exact P_e packaged as an Estimate (degenerate interval).
Estimate exact_pe(const ExperimentConfig& config);

struct Histogram {
    double low = 0.0;
    double high = 0.0;
    std::vector<double> mass;  // fraction of draws per equal-width bin
};

enum class StatsSource { Auto, Sampled, ClosedForm };

struct MagnetizationStats {
    double var_scaled = 0.0;    // Var(√n X̄)
    double below_B_mass = 0.0;  // P(|√n X̄| <= B)
    Histogram histogram;        // of √n X̄ over [-√n, √n]
    StatsSource source = StatsSource::Sampled;  // path that actually ran
};

/// Auto switches to the closed-form pmf for Complete graphs once
/// n · trials exceeds 2·10⁸ spin draws.
MagnetizationStats magnetization_stats(const ExperimentConfig& config, double B,
                                       StatsSource source = StatsSource::Auto, int bins = 40);
MagnetizationStats magnetization_stats(const MagnetizationPmf& pmf, double B, int bins = 40);

/// Moments of √n(Ȳ - (1-2p)X̄) across trials, i.e. of Σ_i Z_i / √n with
/// Z_i = Y_i - (1-2p)X_i.
struct Lemma1Diagnostic {
    double mean = 0.0;
    double var = 0.0;
    double mean_std_error = 0.0;
    double var_std_error = 0.0;
    std::uint64_t trials = 0;
};

Lemma1Diagnostic lemma1_diagnostic(const ExperimentConfig& config);
Lemma1Diagnostic lemma1_diagnostic(const ExperimentConfig& config,
                                   std::span<const kernels::TrialRecord> records);

/// lim P_e where a closed form is known for the config's model: Empty,
/// Chain/ChainPBC, Curie-Weiss off the critical point (0 above it).
std::optional<double> limit_for(const ExperimentConfig& config);
/// Exact Hoeffding bound where the magnetization pmf is computable.
std::optional<double> exact_bound_for(const ExperimentConfig& config);

enum class SweepAxis { N, Theta, P };
SweepAxis parse_sweep_axis(const std::string& name);
std::string to_string(SweepAxis axis);

struct SweepRow {
    double axis_value;
    ExperimentConfig config;  // with the row's derived seed
    Estimate estimate;
    std::optional<double> limit;
    std::optional<double> bound;
};

/// Row i runs with seed derive_seed(base.seed, i). Invalid rows throw
/// std::invalid_argument naming the row.
std::vector<SweepRow> sweep(const ExperimentConfig& base, SweepAxis axis, std::span<const double> values);

}  // namespace majvote
