// Closed-form limits, bounds and the mean-field free-energy exponent.
#pragma once

#include <functional>
#include <span>
#include <variant>

#include "majvote/exact.hpp"
#include "majvote/ising.hpp"

namespace majvote {

/// Standard normal tail, Q(x) = P(N(0,1) > x).
double q_tail(double x);

/// (1-2p) / √(4p(1-p)): the signal-to-noise slope shared by every limit.
double snr_slope(double p);

/// arccot with range (0, π).
double arccot(double x);

/// Empty graph: (2/π) arcsin √p.
double pe_limit_iid(double p);
/// √n X̄ → N(0, σ²): (1/π) arccot(slope · σ).
double pe_limit_gaussian(double p, double sigma);
/// Periodic chain: σ = e^θ.
double pe_limit_chain(double p, double theta);
/// Curie-Weiss with θ < 1/2: σ = 1/√(1-2θ).
double pe_limit_complete_subcritical(double p, double theta);

/// (1-2p)² / (8(1-p)²), in (0, 1/8).
double c_p(double p);

/// Descriptor of a limiting law for √n X̄.
struct LimitSpec {
    enum class Kind { IID, Chain, CompleteSubcritical, GaussianSigma, FromSamples };
    Kind kind = Kind::IID;
    double theta = 0.0;
    double sigma = 0.0;
    std::span<const double> samples = {};  // realizations of X_lim for FromSamples

    static LimitSpec iid() { return {}; }
    static LimitSpec chain(double theta);
    static LimitSpec complete_subcritical(double theta);
    static LimitSpec gaussian(double sigma);
    static LimitSpec from_samples(std::span<const double> samples);
};

/// lim P_e for the given limiting law. FromSamples averages Q(slope·|x|).
double pe_limit(const LimitSpec& spec, double p);

enum class BoundMethod { Exact, MonteCarlo };

struct BoundResult {
    double value;
    BoundMethod method;
    std::uint64_t trials = 0;  // MonteCarlo only
    double std_error = 0.0;    // MonteCarlo only
};

/// E[exp(-C_p (√n X̄)²)] over the prior, an upper bound on P_e.
double hoeffding_bound(const MagnetizationPmf& pmf, double p);
/// Exact uses exact_magnetization_pmf; MonteCarlo averages over `trials`
/// prior draws with substreams of `seed`.
BoundResult hoeffding_bound(const IsingModel& model, double p, BoundMethod method,
                            std::uint64_t trials = 100000, std::uint64_t seed = 0);

/// E[Q(slope · |√n X̄|)] under an exact pmf.
double q_functional(const MagnetizationPmf& pmf, double p);
/// Sample mean of Q(slope · |x|) over realizations of √n X̄ (or of X_lim).
double q_functional(std::span<const double> scaled_samples, double p);
/// ∫ Q(slope · |x|) density(x) dx by adaptive quadrature over the real line.
double q_functional(const std::function<double(double)>& density, double p);

/// f(θ, s) = log cosh(2√θ s) - s².
double f_value(double theta, double s);

struct FreeEnergyMax {
    double max;
    double argmax;  // s* >= 0
};

/// max_s f(θ, s). Zero at s* = 0 for θ <= 1/2; otherwise from the
/// mean-field fixed point m = tanh(2θm), s* = √θ m.
FreeEnergyMax f_max(double theta);

/// f_max(θ) - f_max(θ - C_p); requires θ > 1/2.
double error_exponent_lb(double theta, double p);

}  // namespace majvote
