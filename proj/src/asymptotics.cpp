#include "majvote/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "majvote/detection.hpp"
#include "majvote/numeric.hpp"

namespace majvote {

double q_tail(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

double snr_slope(double p) {
    check_crossover(p);
    return (1.0 - 2.0 * p) / std::sqrt(4.0 * p * (1.0 - p));
}

double arccot(double x) { return std::atan2(1.0, x); }

double pe_limit_iid(double p) {
    check_crossover(p);
    return 2.0 / std::numbers::pi * std::asin(std::sqrt(p));
}

double pe_limit_gaussian(double p, double sigma) {
    if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be positive");
    return arccot(snr_slope(p) * sigma) / std::numbers::pi;
}

double pe_limit_chain(double p, double theta) {
    if (!(theta > 0.0)) throw std::invalid_argument("theta must be positive");
    return pe_limit_gaussian(p, std::exp(theta));
}

double pe_limit_complete_subcritical(double p, double theta) {
    if (!(theta > 0.0 && theta < 0.5))
        throw std::invalid_argument(
            "subcritical complete-graph limit needs 0 < theta < 1/2; for theta > 1/2 the limit is 0 "
            "and error_exponent_lb gives its decay rate");
    return pe_limit_gaussian(p, 1.0 / std::sqrt(1.0 - 2.0 * theta));
}

double c_p(double p) {
    check_crossover(p);
    const double num = 1.0 - 2.0 * p;
    const double den = 1.0 - p;
    return num * num / (8.0 * den * den);
}

LimitSpec LimitSpec::chain(double theta) {
    if (!(theta > 0.0)) throw std::invalid_argument("theta must be positive");
    return {.kind = Kind::Chain, .theta = theta};
}

LimitSpec LimitSpec::complete_subcritical(double theta) {
    if (!(theta > 0.0 && theta < 0.5)) throw std::invalid_argument("CompleteSubcritical needs 0 < theta < 1/2");
    return {.kind = Kind::CompleteSubcritical, .theta = theta};
}

LimitSpec LimitSpec::gaussian(double sigma) {
    if (!(sigma > 0.0)) throw std::invalid_argument("GaussianSigma needs sigma > 0");
    return {.kind = Kind::GaussianSigma, .sigma = sigma};
}

LimitSpec LimitSpec::from_samples(std::span<const double> samples) {
    if (samples.empty()) throw std::invalid_argument("FromSamples needs at least one sample");
    return {.kind = Kind::FromSamples, .samples = samples};
}

double pe_limit(const LimitSpec& spec, double p) {
    switch (spec.kind) {
        case LimitSpec::Kind::IID: return pe_limit_iid(p);
        case LimitSpec::Kind::Chain: return pe_limit_chain(p, spec.theta);
        case LimitSpec::Kind::CompleteSubcritical: return pe_limit_complete_subcritical(p, spec.theta);
        case LimitSpec::Kind::GaussianSigma: return pe_limit_gaussian(p, spec.sigma);
        case LimitSpec::Kind::FromSamples: return q_functional(spec.samples, p);
    }
    throw std::logic_error("unhandled limit kind");
}

double hoeffding_bound(const MagnetizationPmf& pmf, double p) {
    const double c = c_p(p);
    CompensatedSum acc;
    for (std::size_t k = 0; k < pmf.prob.size(); ++k) {
        const double s = static_cast<double>(pmf.sum_at(k));
        acc.add(pmf.prob[k] * std::exp(-c * s * s / pmf.n));
    }
    return acc.value();
}

BoundResult hoeffding_bound(const IsingModel& model, double p, BoundMethod method,
                            std::uint64_t trials, std::uint64_t seed) {
    if (method == BoundMethod::Exact) return {hoeffding_bound(exact_magnetization_pmf(model), p), method};
    if (trials < 2) throw std::invalid_argument("Monte Carlo bound needs at least 2 trials");
    const double c = c_p(p);
    const Sampler sampler(model);
    std::vector<Spin> x(static_cast<std::size_t>(model.n()));
    CompensatedSum sum, sum_sq;
    for (std::uint64_t t = 0; t < trials; ++t) {
        Rng rng = substream(seed, t);
        sampler.draw(rng, x);
        const double s = static_cast<double>(spin_sum(x));
        const double v = std::exp(-c * s * s / model.n());
        sum.add(v);
        sum_sq.add(v * v);
    }
    const double mean = sum.value() / trials;
    const double var = std::max(0.0, (sum_sq.value() - trials * mean * mean) / (trials - 1));
    return {mean, method, trials, std::sqrt(var / trials)};
}

double q_functional(const MagnetizationPmf& pmf, double p) {
    const double slope = snr_slope(p);
    const double root_n = std::sqrt(static_cast<double>(pmf.n));
    CompensatedSum acc;
    for (std::size_t k = 0; k < pmf.prob.size(); ++k)
        acc.add(pmf.prob[k] * q_tail(slope * std::abs(static_cast<double>(pmf.sum_at(k))) / root_n));
    return acc.value();
}

double q_functional(std::span<const double> scaled_samples, double p) {
    if (scaled_samples.empty()) throw std::invalid_argument("q_functional needs a non-empty sample set");
    const double slope = snr_slope(p);
    CompensatedSum acc;
    for (double x : scaled_samples) acc.add(q_tail(slope * std::abs(x)));
    return acc.value() / static_cast<double>(scaled_samples.size());
}

double q_functional(const std::function<double(double)>& density, double p) {
    const double slope = snr_slope(p);
    auto integrand = [&](double x) { return q_tail(slope * std::abs(x)) * density(x); };
    double error = 0.0;
    // Split at 0 where |x| has its kink.
    const double left = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        integrand, -std::numeric_limits<double>::infinity(), 0.0, 20, 1e-13, &error);
    double error_right = 0.0;
    const double right = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        integrand, 0.0, std::numeric_limits<double>::infinity(), 20, 1e-13, &error_right);
    const double value = left + right;
    if (error + error_right > 1e-10 * std::max(value, 1e-300))
        throw QuadratureError("q_functional quadrature did not converge", error + error_right);
    return value;
}

double f_value(double theta, double s) {
    if (!(theta >= 0.0)) throw std::invalid_argument("theta must be non-negative");
    const double u = std::abs(2.0 * std::sqrt(theta) * s);
    return u + std::log1p(std::exp(-2.0 * u)) - std::numbers::ln2 - s * s;
}

FreeEnergyMax f_max(double theta) {
    if (!(theta > 0.0)) throw std::invalid_argument("f_max needs theta > 0");
    if (theta <= 0.5) return {0.0, 0.0};
    // g(m) = tanh(2θm) - m is positive on (0, m*) and negative on (m*, 1].
    double lo = 0.0, hi = 1.0;
    int iterations = 0;
    while (hi - lo > 1e-15 && iterations < 200) {
        const double mid = 0.5 * (lo + hi);
        if (std::tanh(2.0 * theta * mid) - mid > 0.0)
            lo = mid;
        else
            hi = mid;
        ++iterations;
    }
    const double m = 0.5 * (lo + hi);
    const double s = std::sqrt(theta) * m;
    const double residual = std::abs(s - std::sqrt(theta) * std::tanh(2.0 * std::sqrt(theta) * s));
    if (!(m > 0.0) || residual > 1e-10)
        throw std::runtime_error("f_max fixed point did not converge (residual " +
                                 std::to_string(residual) + ")");
    return {f_value(theta, s), s};
}

double error_exponent_lb(double theta, double p) {
    if (!(theta > 0.5))
        throw std::invalid_argument("error exponent bound applies only for theta > 1/2");
    return f_max(theta).max - f_max(theta - c_p(p)).max;
}

}  // namespace majvote
