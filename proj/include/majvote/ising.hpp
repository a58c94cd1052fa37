// Ising priors on graphs: energies, partition functions, samplers.
//
// Edgewise coupling weights a configuration by exp(θ Σ_{(i,j)∈E} x_i x_j);
// Curie-Weiss coupling (complete graph only) by exp((θ/n)(1ᵀx)²).
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "majvote/graph.hpp"
#include "majvote/rng.hpp"
#include "majvote/spin.hpp"

namespace majvote {

enum class Coupling { Edgewise, CurieWeiss };

std::string_view to_string(Coupling coupling);
Coupling parse_coupling(std::string_view name);

class IsingModel {
public:
    /// Throws if theta <= 0 or CurieWeiss is paired with a non-complete graph.
    IsingModel(Graph graph, double theta, Coupling coupling = Coupling::Edgewise);

    const Graph& graph() const noexcept { return graph_; }
    double theta() const noexcept { return theta_; }
    Coupling coupling() const noexcept { return coupling_; }
    int n() const noexcept { return graph_.n(); }
    GraphFamily family() const noexcept { return graph_.family(); }

    /// True when the energy is a function of 1ᵀx alone (complete graph, or no edges).
    bool energy_depends_only_on_sum() const noexcept;
    /// Energy as a function of S = 1ᵀx. Only valid when energy_depends_only_on_sum().
    double energy_of_sum(long sum) const noexcept;

private:
    Graph graph_;
    double theta_;
    Coupling coupling_;
};

double energy(const IsingModel& model, std::span<const Spin> x);
double energy(const IsingModel& model, const SpinVector& x);

inline constexpr int kMaxEnumerationSize = 20;

/// log Σ_x exp(energy(x) + b·1ᵀx) by 2ⁿ enumeration. n <= 20.
double log_partition_bruteforce(const IsingModel& model, double field = 0.0);

/// Closed form for the periodic chain with coupling θ per edge. n >= 3.
double chain_log_partition(int n, double theta, double field = 0.0);

class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double residual)
        : std::runtime_error(what + " (residual " + std::to_string(residual) + ")"), residual_(residual) {}
    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

/// log Z_n(θ, b) for the Curie-Weiss prior via its Gaussian-integral
/// representation, integrated numerically in the rescaled variable s = t/√n.
/// Throws QuadratureError when the relative error estimate exceeds 1e-10.
double curie_weiss_log_partition(int n, double theta, double field = 0.0);

struct GlauberOptions {
    std::optional<std::uint64_t> burn_in_sweeps;    // default 100·n sweeps
    std::optional<std::uint64_t> thinning_updates;  // default 10·n single-site updates

    std::uint64_t burn_in_updates(int n) const {
        const std::uint64_t sweeps = burn_in_sweeps.value_or(100ULL * static_cast<std::uint64_t>(n));
        return sweeps * static_cast<std::uint64_t>(n);
    }
    std::uint64_t thinning(int n) const {
        return thinning_updates.value_or(10ULL * static_cast<std::uint64_t>(n));
    }
};

/// Draws configurations from an IsingModel. Exact for Empty, Chain,
/// ChainPBC and Complete; heat-bath Glauber dynamics (approximate) for Custom.
/// Immutable after construction, so one Sampler can serve many threads as
/// long as each brings its own Rng.
class Sampler {
public:
    explicit Sampler(IsingModel model, GlauberOptions glauber = {});

    const IsingModel& model() const noexcept { return model_; }
    bool exact() const noexcept { return model_.family() != GraphFamily::Custom; }
    const GlauberOptions& glauber() const noexcept { return glauber_; }

    /// Fills `out` (size n) with one draw. For Custom graphs this runs a fresh
    /// chain from a uniform start through the full burn-in.
    void draw(Rng& rng, std::span<Spin> out) const;
    SpinVector draw(Rng& rng) const;

    // Glauber building blocks, used by the Monte Carlo harness to keep one
    // chain alive across several retained samples.
    void uniform_state(Rng& rng, std::span<Spin> out) const;
    void glauber_updates(Rng& rng, std::span<Spin> state, std::uint64_t updates) const;

    /// Exact pmf of the number of +1 spins, for models whose energy depends
    /// only on the sum. Empty otherwise.
    const std::vector<double>& plus_count_pmf() const noexcept { return plus_pmf_; }

private:
    void draw_empty(Rng& rng, std::span<Spin> out) const;
    void draw_free_chain(Rng& rng, std::span<Spin> out) const;
    void draw_by_sum(Rng& rng, std::span<Spin> out) const;

    IsingModel model_;
    GlauberOptions glauber_;
    std::uint64_t chain_flip_threshold_ = 0;  // P(x_{i+1} = -x_i)
    std::uint64_t wrap_accept_threshold_ = 0;  // e^{-2θ}, applied when x_n != x_1
    std::vector<double> plus_pmf_;
    std::vector<double> plus_cdf_;
    std::vector<std::uint64_t> heat_bath_threshold_;  // indexed by local field + max degree
    int max_degree_ = 0;
};

SpinVector sample(const IsingModel& model, Rng& rng, const GlauberOptions& glauber = {});

}  // namespace majvote
