#include "majvote/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "majvote/exact.hpp"
#include "majvote/numeric.hpp"

namespace majvote {

void ExperimentConfig::validate() const {
    if (n < 1 || n % 2 == 0)
        throw std::invalid_argument("n must be a positive odd number, got " + std::to_string(n));
    check_crossover(p);
    if (!(theta > 0.0) || !std::isfinite(theta)) throw std::invalid_argument("theta must be positive");
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (!(confidence > 0.0 && confidence < 1.0)) throw std::invalid_argument("confidence must lie in (0, 1)");
    if (coupling == Coupling::CurieWeiss && family != GraphFamily::Complete)
        throw std::invalid_argument("curie-weiss coupling requires the complete graph");
    if ((family == GraphFamily::Chain || family == GraphFamily::ChainPBC) && n < 3)
        throw std::invalid_argument("chain graphs need n >= 3");
    if (family == GraphFamily::Custom) {
        if (!custom_graph) throw std::invalid_argument("custom family needs a graph");
        if (custom_graph->n() != n)
            throw std::invalid_argument("n (" + std::to_string(n) + ") does not match the custom graph (" +
                                        std::to_string(custom_graph->n()) + " vertices)");
    }
}

IsingModel ExperimentConfig::model() const {
    validate();
    if (family == GraphFamily::Custom) return IsingModel(*custom_graph, theta, Coupling::Edgewise);
    return IsingModel(build_graph(family, n), theta, coupling);
}

Interval wilson_interval(std::uint64_t events, std::uint64_t trials, double confidence) {
    if (trials == 0) throw std::invalid_argument("wilson interval needs trials >= 1");
    const double z = two_sided_z(confidence);
    const double point = static_cast<double>(events) / static_cast<double>(trials);
    const double nt = static_cast<double>(trials);
    const double denom = 1.0 + z * z / nt;
    const double centre = (point + z * z / (2.0 * nt)) / denom;
    const double half = wilson_half_width(events, trials, z);
    return {std::clamp(std::min(centre - half, point), 0.0, 1.0),
            std::clamp(std::max(centre + half, point), 0.0, 1.0)};
}

double wilson_half_width(std::uint64_t events, std::uint64_t trials, double z) {
    const double point = static_cast<double>(events) / static_cast<double>(trials);
    const double nt = static_cast<double>(trials);
    const double denom = 1.0 + z * z / nt;
    return z / denom * std::sqrt(point * (1.0 - point) / nt + z * z / (4.0 * nt * nt));
}

std::vector<kernels::TrialRecord> simulate_trials(const ExperimentConfig& config) {
    const Sampler sampler(config.model(), config.glauber);
    return kernels::run_trials(sampler, NoiseChannel(config.p), config.trials, config.seed);
}

Estimate estimate_pe(const ExperimentConfig& config, std::span<const kernels::TrialRecord> records) {
    std::uint64_t errors = 0;
    for (const auto& r : records) errors += sums_disagree(r.sum_x, r.sum_y) ? 1 : 0;
    const auto ci = wilson_interval(errors, records.size(), config.confidence);
    Estimate e;
    e.point = static_cast<double>(errors) / static_cast<double>(records.size());
    e.ci_low = ci.low;
    e.ci_high = ci.high;
    e.trials = records.size();
    e.seed = config.seed;
    e.method = EstimateMethod::MonteCarlo;
    e.events = errors;
    e.sampler_exact = config.family != GraphFamily::Custom;
    return e;
}

Estimate estimate_pe(const ExperimentConfig& config) {
    config.validate();
    const auto records = simulate_trials(config);
    return estimate_pe(config, records);
}

Estimate exact_pe(const ExperimentConfig& config) {
    const double pe = exact_error_prob(config.model(), config.p);
    Estimate e;
    e.point = e.ci_low = e.ci_high = pe;
    e.seed = config.seed;
    e.method = EstimateMethod::Exact;
    return e;
}

namespace {

Histogram empty_histogram(int n, int bins) {
    if (bins < 1) throw std::invalid_argument("histogram needs at least one bin");
    const double edge = std::sqrt(static_cast<double>(n));
    return {-edge, edge, std::vector<double>(static_cast<std::size_t>(bins), 0.0)};
}

std::size_t bin_of(const Histogram& h, double v) {
    const double frac = (v - h.low) / (h.high - h.low);
    const auto bins = h.mass.size();
    return std::min(bins - 1, static_cast<std::size_t>(std::max(0.0, std::floor(frac * bins))));
}

}  // namespace

MagnetizationStats magnetization_stats(const MagnetizationPmf& pmf, double B, int bins) {
    if (!(B > 0.0)) throw std::invalid_argument("B must be positive");
    MagnetizationStats out;
    out.source = StatsSource::ClosedForm;
    out.histogram = empty_histogram(pmf.n, bins);
    const double root_n = std::sqrt(static_cast<double>(pmf.n));
    CompensatedSum mean, second, below;
    for (std::size_t k = 0; k < pmf.prob.size(); ++k) {
        const double v = static_cast<double>(pmf.sum_at(k)) / root_n;
        const double w = pmf.prob[k];
        mean.add(w * v);
        second.add(w * v * v);
        if (std::abs(v) <= B) below.add(w);
        out.histogram.mass[bin_of(out.histogram, v)] += w;
    }
    out.var_scaled = second.value() - mean.value() * mean.value();
    out.below_B_mass = below.value();
    return out;
}

MagnetizationStats magnetization_stats(const ExperimentConfig& config, double B, StatsSource source,
                                       int bins) {
    config.validate();
    if (!(B > 0.0)) throw std::invalid_argument("B must be positive");
    if (source == StatsSource::Auto) {
        const bool heavy = static_cast<double>(config.n) * static_cast<double>(config.trials) > 2e8;
        source = (config.family == GraphFamily::Complete && heavy) ? StatsSource::ClosedForm
                                                                   : StatsSource::Sampled;
    }
    if (source == StatsSource::ClosedForm) {
        if (config.family != GraphFamily::Complete && config.family != GraphFamily::Empty &&
            config.family != GraphFamily::Chain && config.family != GraphFamily::ChainPBC)
            throw std::invalid_argument("closed-form magnetization needs a family with an exact pmf");
        return magnetization_stats(exact_magnetization_pmf(config.model()), B, bins);
    }

    const auto records = simulate_trials(config);
    MagnetizationStats out;
    out.source = StatsSource::Sampled;
    out.histogram = empty_histogram(config.n, bins);
    const double root_n = std::sqrt(static_cast<double>(config.n));
    const double weight = 1.0 / static_cast<double>(records.size());
    CompensatedSum mean, second, below;
    for (const auto& r : records) {
        const double v = r.sum_x / root_n;
        mean.add(v);
        second.add(v * v);
        if (std::abs(v) <= B) below.add(1.0);
        out.histogram.mass[bin_of(out.histogram, v)] += weight;
    }
    const double count = static_cast<double>(records.size());
    const double m = mean.value() / count;
    out.var_scaled = count > 1 ? (second.value() - count * m * m) / (count - 1.0) : 0.0;
    out.below_B_mass = below.value() / count;
    return out;
}

Lemma1Diagnostic lemma1_diagnostic(const ExperimentConfig& config,
                                   std::span<const kernels::TrialRecord> records) {
    if (records.size() < 2) throw std::invalid_argument("noise diagnostic needs at least 2 trials");
    const double root_n = std::sqrt(static_cast<double>(config.n));
    const double gain = 1.0 - 2.0 * config.p;
    const double count = static_cast<double>(records.size());
    CompensatedSum sum;
    for (const auto& r : records) sum.add((r.sum_y - gain * r.sum_x) / root_n);
    const double mean = sum.value() / count;
    CompensatedSum m2, m4;
    for (const auto& r : records) {
        const double d = (r.sum_y - gain * r.sum_x) / root_n - mean;
        m2.add(d * d);
        m4.add(d * d * d * d);
    }
    Lemma1Diagnostic out;
    out.trials = records.size();
    out.mean = mean;
    out.var = m2.value() / (count - 1.0);
    out.mean_std_error = std::sqrt(out.var / count);
    const double central4 = m4.value() / count;
    out.var_std_error = std::sqrt(std::max(0.0, central4 - out.var * out.var) / count);
    return out;
}

Lemma1Diagnostic lemma1_diagnostic(const ExperimentConfig& config) {
    config.validate();
    const auto records = simulate_trials(config);
    return lemma1_diagnostic(config, records);
}

std::optional<double> limit_for(const ExperimentConfig& config) {
    switch (config.family) {
        case GraphFamily::Empty:
            return pe_limit_iid(config.p);
        case GraphFamily::Chain:
        case GraphFamily::ChainPBC:
            return pe_limit_chain(config.p, config.theta);
        case GraphFamily::Complete:
            if (config.coupling != Coupling::CurieWeiss) return std::nullopt;
            if (config.theta < 0.5) return pe_limit_complete_subcritical(config.p, config.theta);
            if (config.theta > 0.5) return 0.0;
            return std::nullopt;
        case GraphFamily::Custom:
            return std::nullopt;
    }
    return std::nullopt;
}

std::optional<double> exact_bound_for(const ExperimentConfig& config) {
    const bool available = [&] {
        switch (config.family) {
            case GraphFamily::Empty:
            case GraphFamily::Complete: return config.n <= 100000;
            case GraphFamily::Chain:
            case GraphFamily::ChainPBC: return config.n <= 5001;
            case GraphFamily::Custom: return config.n <= kMaxEnumerationSize;
        }
        return false;
    }();
    if (!available) return std::nullopt;
    return hoeffding_bound(exact_magnetization_pmf(config.model()), config.p);
}

SweepAxis parse_sweep_axis(const std::string& name) {
    if (name == "n") return SweepAxis::N;
    if (name == "theta") return SweepAxis::Theta;
    if (name == "p") return SweepAxis::P;
    throw std::invalid_argument("unknown sweep axis '" + name + "' (expected n, theta or p)");
}

std::string to_string(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::N: return "n";
        case SweepAxis::Theta: return "theta";
        case SweepAxis::P: return "p";
    }
    return "?";
}

std::vector<SweepRow> sweep(const ExperimentConfig& base, SweepAxis axis, std::span<const double> values) {
    std::vector<ExperimentConfig> configs;
    configs.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        ExperimentConfig c = base;
        const double v = values[i];
        c.seed = derive_seed(base.seed, i);
        try {
            switch (axis) {
                case SweepAxis::N:
                    if (v != std::floor(v) || v < 1 || v > 1e9) throw std::invalid_argument("n must be an integer");
                    c.n = static_cast<int>(v);
                    break;
                case SweepAxis::Theta: c.theta = v; break;
                case SweepAxis::P: c.p = v; break;
            }
            c.validate();
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("sweep row " + std::to_string(i) + " (" + to_string(axis) + "=" +
                                        std::to_string(v) + "): " + e.what());
        }
        configs.push_back(std::move(c));
    }
    std::vector<SweepRow> rows;
    rows.reserve(configs.size());
    for (std::size_t i = 0; i < configs.size(); ++i) {
        const auto& c = configs[i];
        rows.push_back({values[i], c, estimate_pe(c), limit_for(c), exact_bound_for(c)});
    }
    return rows;
}

}  // namespace majvote
