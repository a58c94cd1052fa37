#include "majvote/numeric.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include <boost/math/distributions/normal.hpp>

namespace majvote {

double log_binomial(int n, int k) {
    if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double log_sum_exp(std::span<const double> values) {
    if (values.empty()) return -std::numeric_limits<double>::infinity();
    const double shift = *std::max_element(values.begin(), values.end());
    if (!std::isfinite(shift)) return shift;
    CompensatedSum acc;
    for (double v : values) acc.add(std::exp(v - shift));
    return shift + std::log(acc.value());
}

std::vector<double> normalize_log_weights(std::span<const double> log_weights) {
    std::vector<double> out(log_weights.size());
    if (log_weights.empty()) return out;
    const double shift = *std::max_element(log_weights.begin(), log_weights.end());
    CompensatedSum acc;
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = std::exp(log_weights[i] - shift);
        acc.add(out[i]);
    }
    const double total = acc.value();
    for (double& v : out) v /= total;
    return out;
}

std::vector<double> binomial_pmf(int n, double p) {
    std::vector<double> pmf(static_cast<std::size_t>(n) + 1, 0.0);
    if (n == 0) {
        pmf[0] = 1.0;
        return pmf;
    }
    if (p <= 0.0) {
        pmf[0] = 1.0;
        return pmf;
    }
    const double lp = std::log(p);
    const double lq = std::log1p(-p);
    for (int k = 0; k <= n; ++k)
        pmf[k] = std::exp(log_binomial(n, k) + k * lp + (n - k) * lq);
    return pmf;
}

double two_sided_z(double confidence) {
    if (!(confidence > 0.0 && confidence < 1.0))
        throw std::invalid_argument("confidence must lie in (0, 1)");
    static const boost::math::normal standard;
    return boost::math::quantile(boost::math::complement(standard, (1.0 - confidence) / 2.0));
}

}  // namespace majvote
