// Curie-Weiss partition function by quadrature.
//
// Z_n(θ,b) = (2ⁿ/√π) ∫ exp(-t²) coshⁿ(2√(θ/n) t + b) dt. With s = t/√n,
// log Z = n log 2 - ½ log π + ½ log n + log ∫ exp(n·h(s)) ds,
// h(s) = log cosh(2√θ s + b) - s².
#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/minima.hpp>

#include "majvote/ising.hpp"

namespace majvote {
namespace {

double log_cosh(double u) {
    const double a = std::abs(u);
    // cosh u - 1 = 2 sinh²(u/2) keeps full relative precision near 0, where
    // n·log cosh would otherwise amplify cancellation noise.
    if (a < 1.0) {
        const double half = std::sinh(0.5 * a);
        return std::log1p(2.0 * half * half);
    }
    return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
}

constexpr double kRelativeTolerance = 1e-10;

}  // namespace

double curie_weiss_log_partition(int n, double theta, double field) {
    if (n < 1) throw std::invalid_argument("curie-weiss partition needs n >= 1");
    if (!(theta > 0.0)) throw std::invalid_argument("theta must be positive");

    const double root_theta = std::sqrt(theta);
    auto h = [&](double s) { return log_cosh(2.0 * root_theta * s + field) - s * s; };

    // h(s) <= 2√θ|s| + |b| - s², so beyond this radius n·(h - h(0)) < -45.
    const double radius = std::max(
        6.0, root_theta + std::sqrt(theta + std::abs(field) + 45.0 / n) + 1.0);

    // Locate local maxima on a grid, then polish each one.
    constexpr int kGrid = 4000;
    const double step = 2.0 * radius / kGrid;
    std::vector<double> peaks;
    double prev = h(-radius), cur = h(-radius + step);
    for (int i = 1; i < kGrid; ++i) {
        const double next = h(-radius + (i + 1) * step);
        if (cur >= prev && cur >= next) {
            const double centre = -radius + i * step;
            auto neg = [&](double s) { return -h(s); };
            const auto [arg, val] =
                boost::math::tools::brent_find_minima(neg, centre - step, centre + step, 52);
            peaks.push_back(arg);
        }
        prev = cur;
        cur = next;
    }
    if (peaks.empty()) peaks.push_back(0.0);
    double h_max = -std::numeric_limits<double>::infinity();
    for (double s : peaks) h_max = std::max(h_max, h(s));

    // h(s) - h(s0) written so its rounding error scales with |s - s0|;
    // the plain difference carries ~ε·n noise near a peak, which the
    // quadrature cannot resolve at large n.
    auto h_diff = [&](double s, double s0) {
        const double u0 = 2.0 * root_theta * s0 + field;
        const double d = 2.0 * root_theta * (s - s0);
        double log_ratio;
        if (std::abs(d) < 20.0) {
            const double half = std::sinh(0.5 * d);
            log_ratio = std::log1p(2.0 * half * half + std::tanh(u0) * std::sinh(d));
        } else {
            log_ratio = log_cosh(u0 + d) - log_cosh(u0);
        }
        return log_ratio - (s - s0) * (s + s0);
    };

    // Peaks have width ~1/√n; cut geometrically around each so every
    // segment sees a smooth, resolvable piece of the integrand.
    std::vector<double> cuts{-radius, radius};
    for (double s : peaks) {
        cuts.push_back(s);
        for (double d = 1.0 / std::sqrt(static_cast<double>(n)); d < 2.0 * radius; d *= 2.0) {
            cuts.push_back(s - d);
            cuts.push_back(s + d);
        }
    }
    std::erase_if(cuts, [&](double c) { return c < -radius || c > radius; });
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    double integral = 0.0, error = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
        const double ref = *std::min_element(peaks.begin(), peaks.end(), [&](double a, double b) {
            return std::abs(a - mid) < std::abs(b - mid);
        });
        const double offset = n * (h(ref) - h_max);
        auto integrand = [&](double s) { return std::exp(n * h_diff(s, ref) + offset); };
        // Every local maximum is a cut, so each segment peaks at an endpoint.
        // Segments far below the main peak (whose mass is ≳ 1/√n) are bounded,
        // not integrated.
        const double bound =
            (cuts[i + 1] - cuts[i]) * std::max(integrand(cuts[i]), integrand(cuts[i + 1]));
        if (bound < 1e-20 / std::sqrt(static_cast<double>(n))) {
            error += bound;
            continue;
        }
        // Fixed panels with a single 61-point Kronrod pass each. Boost 1.74
        // reports the Kronrod-Gauss difference in [-1, 1] units without the
        // half-width factor (which also defeats its adaptive stopping rule),
        // so the estimate is rescaled here.
        constexpr int kPanels = 16;
        const double width = (cuts[i + 1] - cuts[i]) / kPanels;
        for (int j = 0; j < kPanels; ++j) {
            const double a = cuts[i] + j * width;
            const double b = j + 1 == kPanels ? cuts[i + 1] : a + width;
            double panel_error = 0.0;
            integral += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, a, b, 0, 0.0,
                                                                                     &panel_error);
            error += 0.5 * (b - a) * panel_error;
        }
    }

    // Gaussian tail bound for |s| > radius: exp(n(2√θ|s| + |b| - s² - h_max)).
    const double centre = root_theta;
    const double tail_exponent =
        n * (theta + std::abs(field) - h_max) - n * (radius - centre) * (radius - centre);
    const double tail = std::exp(tail_exponent) * std::sqrt(std::numbers::pi / n);
    error += 2.0 * tail;

    const double relative = error / integral;
    if (!(integral > 0.0) || !(relative <= kRelativeTolerance))
        throw QuadratureError("curie-weiss partition quadrature did not converge", relative);

    return n * std::numbers::ln2 - 0.5 * std::log(std::numbers::pi) + 0.5 * std::log(n) +
           n * h_max + std::log(integral);
}

}  // namespace majvote
