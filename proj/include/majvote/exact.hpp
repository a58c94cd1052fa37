// Exact oracles: conditional and total detection error, magnetization pmf.
#pragma once

#include <vector>

#include "majvote/ising.hpp"
#include "majvote/spin.hpp"

namespace majvote {

/// P(sign(1ᵀY) != sign(1ᵀx) | x) for a BSC with crossover p. Depends on x
/// only through n and its number of +1 entries. n odd, 0 < p < 1/2.
double conditional_error_prob(int n, int plus_count, double p);
double conditional_error_prob(const SpinVector& x, double p);

/// Distribution of S = 1ᵀX. prob[k] = P(number of +1 spins = k), S = 2k - n.
struct MagnetizationPmf {
    int n = 0;
    std::vector<double> prob;

    long sum_at(std::size_t k) const noexcept { return 2L * static_cast<long>(k) - n; }
    /// P(S = s); zero for s outside {-n, -n+2, ..., n}.
    double at_sum(long s) const noexcept;
};

inline constexpr int kMaxChainPmfSize = 20000;
inline constexpr int kMaxClosedFormPmfSize = 1000000;

/// Exact pmf of S. Empty and Complete graphs use closed-form weights
/// (n <= 10⁶); Chain and ChainPBC a forward recursion over the chain
/// (n <= 20000); Custom graphs 2ⁿ enumeration (n <= 20).
MagnetizationPmf exact_magnetization_pmf(const IsingModel& model);

/// Always by 2ⁿ enumeration, whatever the family. n <= 20.
MagnetizationPmf enumerated_magnetization_pmf(const IsingModel& model);

/// P_e = Σ_x p(x) P(err | x). n odd, and exact_magnetization_pmf's limits.
double exact_error_prob(const IsingModel& model, double p);
double exact_error_prob(const MagnetizationPmf& pmf, double p);

}  // namespace majvote
