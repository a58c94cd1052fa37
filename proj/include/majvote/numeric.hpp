#pragma once

#include <cmath>
#include <span>
#include <vector>

namespace majvote {

/// Neumaier-compensated accumulator. Order of add() calls fixes the result.
class CompensatedSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

double log_binomial(int n, int k);

/// log Σ exp(v_i) with a single max shift.
double log_sum_exp(std::span<const double> values);

/// Normalizes log-weights to probabilities (single max shift, compensated sum).
std::vector<double> normalize_log_weights(std::span<const double> log_weights);

/// Probability mass function of Binomial(n, p), computed in log domain.
std::vector<double> binomial_pmf(int n, double p);

/// Upper quantile z with P(N(0,1) > z) = (1 - confidence) / 2.
double two_sided_z(double confidence);

}  // namespace majvote
