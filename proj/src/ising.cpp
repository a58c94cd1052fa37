#include "majvote/ising.hpp"

#include <cmath>
#include <stdexcept>

#include "majvote/kernels.hpp"
#include "majvote/numeric.hpp"

namespace majvote {

std::string_view to_string(Coupling coupling) {
    return coupling == Coupling::CurieWeiss ? "curie-weiss" : "edgewise";
}

Coupling parse_coupling(std::string_view name) {
    if (name == "edgewise") return Coupling::Edgewise;
    if (name == "curie-weiss") return Coupling::CurieWeiss;
    throw std::invalid_argument("unknown coupling '" + std::string(name) + "'");
}

IsingModel::IsingModel(Graph graph, double theta, Coupling coupling)
    : graph_(std::move(graph)), theta_(theta), coupling_(coupling) {
    if (!(theta_ > 0.0) || !std::isfinite(theta_))
        throw std::invalid_argument("theta must be a positive finite number");
    if (coupling_ == Coupling::CurieWeiss && graph_.family() != GraphFamily::Complete)
        throw std::invalid_argument("curie-weiss coupling requires the complete graph");
}

bool IsingModel::energy_depends_only_on_sum() const noexcept {
    return graph_.family() == GraphFamily::Complete || graph_.family() == GraphFamily::Empty ||
           graph_.edge_count() == 0;
}

double IsingModel::energy_of_sum(long sum) const noexcept {
    const double s = static_cast<double>(sum);
    if (coupling_ == Coupling::CurieWeiss) return theta_ / n() * s * s;
    if (graph_.family() == GraphFamily::Complete) return 0.5 * theta_ * (s * s - n());
    return 0.0;
}

double energy(const IsingModel& model, std::span<const Spin> x) {
    if (static_cast<int>(x.size()) != model.n())
        throw std::invalid_argument("configuration length " + std::to_string(x.size()) +
                                    " does not match model size " + std::to_string(model.n()));
    if (model.energy_depends_only_on_sum()) return model.energy_of_sum(spin_sum(x));
    long bond_sum = 0;
    for (const auto& [i, j] : model.graph().edges()) bond_sum += x[i] * x[j];
    return model.theta() * static_cast<double>(bond_sum);
}

double energy(const IsingModel& model, const SpinVector& x) { return energy(model, x.values()); }

double log_partition_bruteforce(const IsingModel& model, double field) {
    if (model.n() > kMaxEnumerationSize)
        throw std::invalid_argument("brute-force partition function needs n <= 20 (got " +
                                    std::to_string(model.n()) +
                                    "); use the chain or curie-weiss closed forms, or Monte Carlo");
    const auto log_weights = kernels::state_log_weights(model, field);
    return log_sum_exp(log_weights);
}

double chain_log_partition(int n, double theta, double field) {
    if (n < 3) throw std::invalid_argument("periodic chain needs n >= 3");
    if (!(theta > 0.0)) throw std::invalid_argument("theta must be positive");
    const double c = std::cosh(field);
    const double sh = std::sinh(field);
    const double root = std::sqrt(sh * sh + std::exp(-4.0 * theta));
    const double big = c + root;
    const double small = c - root;  // positive: c² - root² = 1 - e^{-4θ} > 0
    return n * theta + n * std::log(big) + std::log1p(std::pow(small / big, n));
}

}  // namespace majvote
