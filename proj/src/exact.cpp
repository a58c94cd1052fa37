#include "majvote/exact.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "majvote/detection.hpp"
#include "majvote/kernels.hpp"
#include "majvote/numeric.hpp"

namespace majvote {
namespace {

void require_odd(int n) {
    if (n < 1 || n % 2 == 0)
        throw std::invalid_argument("n must be a positive odd number, got " + std::to_string(n));
}

MagnetizationPmf from_log_weights(int n, const std::vector<double>& log_w) {
    return {n, normalize_log_weights(log_w)};
}

MagnetizationPmf closed_form_pmf(const IsingModel& model) {
    const int n = model.n();
    if (n > kMaxClosedFormPmfSize)
        throw std::invalid_argument("closed-form magnetization pmf needs n <= 1000000");
    // Energies are even in S; mirroring keeps pmf(S) == pmf(-S) bit for bit.
    std::vector<double> log_w(static_cast<std::size_t>(n) + 1);
    for (int k = 0; 2 * k <= n; ++k) {
        log_w[k] = log_binomial(n, k) + model.energy_of_sum(2L * k - n);
        log_w[n - k] = log_w[k];
    }
    return from_log_weights(n, log_w);
}

// Forward recursion over chain positions. weight[s][k]: first spin +1, last
// spin s, k spins up so far, each bond contributing 1 (agree) or e^{-2θ}.
// The first-spin -1 branch is the mirror image k -> n - k.
MagnetizationPmf chain_pmf(const IsingModel& model) {
    const int n = model.n();
    if (n > kMaxChainPmfSize) throw std::invalid_argument("chain magnetization pmf needs n <= 20000");
    const double r = std::exp(-2.0 * model.theta());
    const std::size_t width = static_cast<std::size_t>(n) + 1;
    std::vector<double> up(width, 0.0), down(width, 0.0), next_up(width), next_down(width);
    up[1] = 1.0;
    double log_scale = 0.0;
    for (int i = 1; i < n; ++i) {
        std::fill(next_up.begin(), next_up.end(), 0.0);
        std::fill(next_down.begin(), next_down.end(), 0.0);
        double peak = 0.0;
        for (int k = 0; k <= i; ++k) {
            // next spin +1 raises k
            next_up[k + 1] = up[k] + r * down[k];
            next_down[k] = down[k] + r * up[k];
            peak = std::max({peak, next_up[k + 1], next_down[k]});
        }
        for (int k = 0; k <= i + 1; ++k) {
            next_up[k] /= peak;
            next_down[k] /= peak;
        }
        log_scale += std::log(peak);
        std::swap(up, next_up);
        std::swap(down, next_down);
    }
    const bool periodic = model.family() == GraphFamily::ChainPBC;
    std::vector<double> branch(width);
    for (std::size_t k = 0; k < width; ++k) branch[k] = up[k] + (periodic ? r : 1.0) * down[k];
    std::vector<double> total(width);
    CompensatedSum norm;
    for (std::size_t k = 0; k < width; ++k) {
        total[k] = branch[k] + branch[width - 1 - k];
        norm.add(total[k]);
    }
    const double z = norm.value();
    for (double& v : total) v /= z;
    return {n, std::move(total)};
}

}  // namespace

double MagnetizationPmf::at_sum(long s) const noexcept {
    if ((s + n) % 2 != 0 || s < -n || s > n) return 0.0;
    return prob[static_cast<std::size_t>((s + n) / 2)];
}

double conditional_error_prob(int n, int plus_count, double p) {
    require_odd(n);
    check_crossover(p);
    if (plus_count < 0 || plus_count > n) throw std::invalid_argument("plus count out of range");
    // Mirror so that the majority is +1: a > m.
    const int a = std::max(plus_count, n - plus_count);
    const int m = n - a;
    // 1ᵀY = (a - m) - 2(B₊ - B₋), an error iff B₊ >= B₋ + d.
    const int d = (a - m + 1) / 2;
    const auto pmf_plus = binomial_pmf(a, p);
    const auto pmf_minus = binomial_pmf(m, p);

    std::vector<double> survival(static_cast<std::size_t>(a) + 2, 0.0);
    CompensatedSum tail;
    for (int t = a; t >= 0; --t) {
        tail.add(pmf_plus[t]);
        survival[t] = tail.value();
    }
    CompensatedSum total;
    for (int j = 0; j <= m && j + d <= a; ++j) total.add(pmf_minus[j] * survival[j + d]);
    return total.value();
}

double conditional_error_prob(const SpinVector& x, double p) {
    return conditional_error_prob(x.size(), x.plus_count(), p);
}

MagnetizationPmf enumerated_magnetization_pmf(const IsingModel& model) {
    const int n = model.n();
    if (n > kMaxEnumerationSize)
        throw std::invalid_argument("enumeration needs n <= 20, got " + std::to_string(n));
    const auto log_w = kernels::state_log_weights(model, 0.0);
    const double shift = *std::max_element(log_w.begin(), log_w.end());
    std::vector<CompensatedSum> by_count(static_cast<std::size_t>(n) + 1);
    for (std::size_t s = 0; s < log_w.size(); ++s)
        by_count[std::popcount(static_cast<std::uint32_t>(s))].add(std::exp(log_w[s] - shift));
    std::vector<double> prob(by_count.size());
    CompensatedSum norm;
    for (std::size_t k = 0; k < prob.size(); ++k) {
        // Average with the mirror count so the pmf is exactly symmetric.
        prob[k] = 0.5 * (by_count[k].value() + by_count[n - k].value());
        norm.add(prob[k]);
    }
    const double z = norm.value();
    for (double& v : prob) v /= z;
    return {n, std::move(prob)};
}

MagnetizationPmf exact_magnetization_pmf(const IsingModel& model) {
    switch (model.family()) {
        case GraphFamily::Empty:
        case GraphFamily::Complete:
            return closed_form_pmf(model);
        case GraphFamily::Chain:
        case GraphFamily::ChainPBC:
            return chain_pmf(model);
        case GraphFamily::Custom:
            break;
    }
    if (model.n() > kMaxEnumerationSize)
        throw std::invalid_argument("exact magnetization pmf for custom graphs needs n <= 20, got " +
                                    std::to_string(model.n()));
    return enumerated_magnetization_pmf(model);
}

double exact_error_prob(const MagnetizationPmf& pmf, double p) {
    require_odd(pmf.n);
    check_crossover(p);
    // Conditional error is symmetric in k <-> n-k; fold the pmf first.
    CompensatedSum total;
    for (int k = 0; k <= pmf.n / 2; ++k) {
        const double mass = pmf.prob[k] + pmf.prob[pmf.n - k];
        if (mass == 0.0) continue;
        total.add(mass * conditional_error_prob(pmf.n, k, p));
    }
    return total.value();
}

double exact_error_prob(const IsingModel& model, double p) {
    require_odd(model.n());
    check_crossover(p);
    return exact_error_prob(exact_magnetization_pmf(model), p);
}

}  // namespace majvote
