#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "majvote/asymptotics.hpp"
#include "oracles.hpp"

using namespace majvote;

namespace {
IsingModel make(GraphFamily f, int n, double theta, Coupling c = Coupling::Edgewise) {
    return IsingModel(build_graph(f, n), theta, c);
}
}  // namespace

TEST_CASE("q_tail") {
    CHECK(q_tail(0.0) == 0.5);
    CHECK(q_tail(40.0) < 1e-300);
    CHECK(std::abs(q_tail(1.959964) - 0.025) < 1e-6);
    for (double x : {-3.0, -0.5, 0.1, 1.959964, 2.5, 6.0})
        CHECK(q_tail(x) == doctest::Approx(oracle::q_tail_high_precision(x)).epsilon(1e-14));
    for (double x = -5; x < 5; x += 0.25) {
        CHECK(q_tail(x) + q_tail(-x) == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(q_tail(x + 0.25) < q_tail(x));
    }
}

TEST_CASE("i.i.d. limit") {
    CHECK(pe_limit_iid(0.25) == doctest::Approx(1.0 / 3).epsilon(1e-15));
    // Independent route: bivariate normal quadrant probability at ρ = 1 - 2p.
    CHECK(pe_limit_iid(0.1) == doctest::Approx(oracle::quadrant_disagreement(0.8)).epsilon(1e-9));
    CHECK(std::abs(pe_limit_iid(0.1) - 0.20483) < 1e-5);
    double prev = 0.5;
    for (double p : {0.4, 0.1, 1e-2, 1e-4, 1e-8}) {
        const double v = pe_limit_iid(p);
        CHECK(v < prev);
        prev = v;
    }
    CHECK(prev < 1e-3);
    CHECK_THROWS_AS(pe_limit_iid(0.5), std::invalid_argument);
}

TEST_CASE("gaussian limit reduces to the i.i.d. limit at sigma = 1") {
    for (double p : {0.05, 0.1, 0.25, 0.4}) CHECK(std::abs(pe_limit_gaussian(p, 1.0) - pe_limit_iid(p)) < 1e-12);
    for (int i = 1; i < 1000; ++i) {
        const double p = 0.5 * i / 1000.0;
        CHECK(std::abs(pe_limit_gaussian(p, 1.0) - pe_limit_iid(p)) < 1e-12);
    }
    CHECK(pe_limit_gaussian(0.1, 1e12) < 1e-12);
    CHECK_THROWS_AS(pe_limit_gaussian(0.1, 0.0), std::invalid_argument);
}

TEST_CASE("gaussian limit against a two-gaussian simulation") {
    // X ~ N(0, σ²), Y = (1-2p)X + N(0, 4p(1-p)); count sign disagreements.
    const double p = 0.1, sigma = 2.0;
    std::mt19937_64 gen(12345);
    std::normal_distribution<double> x_dist(0.0, sigma), z_dist(0.0, std::sqrt(4 * p * (1 - p)));
    const int draws = 2000000;
    int disagree = 0;
    for (int i = 0; i < draws; ++i) {
        const double x = x_dist(gen);
        const double y = (1 - 2 * p) * x + z_dist(gen);
        disagree += (x > 0) != (y > 0);
    }
    const double rate = disagree / double(draws);
    const double limit = pe_limit_gaussian(p, sigma);
    CHECK(std::abs(rate - limit) < 4 * std::sqrt(limit * (1 - limit) / draws));
}

TEST_CASE("chain and complete-subcritical limits") {
    for (double p : {0.05, 0.2, 0.45}) {
        CHECK(pe_limit_chain(p, 1e-12) == doctest::Approx(pe_limit_iid(p)).epsilon(1e-9));
        CHECK(pe_limit_complete_subcritical(p, 1e-12) == doctest::Approx(pe_limit_iid(p)).epsilon(1e-9));
        CHECK(pe_limit_complete_subcritical(p, 0.5 - 1e-14) < 1e-5);
        double prev = 1.0;
        for (double theta = 0.05; theta < 3.0; theta += 0.05) {
            const double v = pe_limit_chain(p, theta);
            CHECK(v < prev);
            CHECK(v > 0.0);
            prev = v;
        }
    }
    CHECK(pe_limit_chain(0.1, 0.5) == doctest::Approx(pe_limit_gaussian(0.1, std::exp(0.5))));
    CHECK_THROWS_AS(pe_limit_complete_subcritical(0.1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(pe_limit_complete_subcritical(0.1, 0.7), std::invalid_argument);
}

TEST_CASE("all limits lie in (0, 1/2)") {
    for (double p = 0.01; p < 0.5; p += 0.02) {
        for (double v : {pe_limit_iid(p), pe_limit_chain(p, 0.3), pe_limit_chain(p, 2.0),
                         pe_limit_complete_subcritical(p, 0.1), pe_limit_complete_subcritical(p, 0.45),
                         pe_limit_gaussian(p, 0.2), pe_limit_gaussian(p, 5.0)}) {
            CHECK(v > 0.0);
            CHECK(v < 0.5);
        }
    }
}

TEST_CASE("limit spec dispatch") {
    CHECK(pe_limit(LimitSpec::iid(), 0.2) == pe_limit_iid(0.2));
    CHECK(pe_limit(LimitSpec::chain(0.4), 0.2) == pe_limit_chain(0.2, 0.4));
    CHECK(pe_limit(LimitSpec::complete_subcritical(0.3), 0.2) == pe_limit_complete_subcritical(0.2, 0.3));
    CHECK(pe_limit(LimitSpec::gaussian(1.5), 0.2) == pe_limit_gaussian(0.2, 1.5));
    const std::vector<double> zeros(10, 0.0);
    CHECK(pe_limit(LimitSpec::from_samples(zeros), 0.2) == 0.5);
    CHECK_THROWS(LimitSpec::complete_subcritical(0.6));
    CHECK_THROWS(LimitSpec::gaussian(-1.0));
    CHECK_THROWS(LimitSpec::from_samples({}));
}

TEST_CASE("c_p") {
    CHECK(c_p(1e-12) == doctest::Approx(0.125));
    CHECK(c_p(0.5 - 1e-9) < 1e-16);
    CHECK(c_p(0.25) == doctest::Approx(1.0 / 18).epsilon(1e-15));
    for (double p = 0.01; p < 0.5; p += 0.01) {
        CHECK(c_p(p) > 0.0);
        CHECK(c_p(p) < 0.125);
    }
}

TEST_CASE("hoeffding bound") {
    // n = 1: (√n X̄)² = 1 so the bound is e^{-C_p} → e^{-1/8} as p → 0.
    const auto single = make(GraphFamily::Empty, 1, 1.0);
    const double bound = hoeffding_bound(single, 1e-12, BoundMethod::Exact).value;
    CHECK(bound == doctest::Approx(std::exp(-0.125)).epsilon(1e-9));
    CHECK(exact_error_prob(single, 1e-12) <= bound);

    const auto three = make(GraphFamily::Empty, 3, 1.0);
    CHECK(hoeffding_bound(three, 0.1, BoundMethod::Exact).value >= exact_error_prob(three, 0.1));

    double prev = 1.0;
    for (int n : {101, 201, 401}) {
        const double b = hoeffding_bound(make(GraphFamily::Complete, n, 0.7, Coupling::CurieWeiss), 0.1,
                                         BoundMethod::Exact).value;
        CHECK(b < prev);
        prev = b;
    }

    const auto ring = make(GraphFamily::ChainPBC, 9, 0.8);
    const auto exact = hoeffding_bound(ring, 0.2, BoundMethod::Exact);
    const auto mc = hoeffding_bound(ring, 0.2, BoundMethod::MonteCarlo, 200000, 5);
    CHECK(mc.method == BoundMethod::MonteCarlo);
    CHECK(std::abs(mc.value - exact.value) < 4 * mc.std_error);
}

TEST_CASE("hoeffding domination on small models") {
    for (auto f : {GraphFamily::Empty, GraphFamily::Chain, GraphFamily::ChainPBC, GraphFamily::Complete})
        for (int n : {1, 3, 5, 7, 9})
            for (double theta : {0.2, 0.8, 1.5})
                for (double p = 0.02; p < 0.5; p += 0.04) {
                    if ((f == GraphFamily::Chain || f == GraphFamily::ChainPBC) && n < 3) continue;
                    const auto model = make(f, n, theta, f == GraphFamily::Complete ? Coupling::CurieWeiss : Coupling::Edgewise);
                    CHECK(exact_error_prob(model, p) <= hoeffding_bound(model, p, BoundMethod::Exact).value);
                }
}

TEST_CASE("q functional") {
    const std::vector<double> point_mass{0.0};
    CHECK(q_functional(point_mass, 0.3) == 0.5);
    const auto normal = [](double x) { return std::exp(-0.5 * x * x) / std::sqrt(2 * std::numbers::pi); };
    CHECK(std::abs(q_functional(normal, 0.25) - 1.0 / 3) < 1e-9);
    // The density form at N(0, σ²) equals the Gaussian closed form.
    const double sigma = 1.7;
    const auto wide = [&](double x) { return normal(x / sigma) / sigma; };
    CHECK(std::abs(q_functional(wide, 0.15) - pe_limit_gaussian(0.15, sigma)) < 1e-9);
    CHECK_THROWS(q_functional(std::span<const double>{}, 0.1));

    // Empty n=9, p=0.1: independent binomial sums give 0.1934236 for the
    // functional and 0.1759049 for the exact error, a finite-n gap of 0.0175.
    const auto empty9 = make(GraphFamily::Empty, 9, 1.0);
    const double qf = q_functional(exact_magnetization_pmf(empty9), 0.1);
    double oracle_qf = 0.0;
    const double slope = 0.8 / std::sqrt(0.36);
    for (int k = 0; k <= 9; ++k)
        oracle_qf += std::exp(std::lgamma(10.0) - std::lgamma(k + 1.0) - std::lgamma(10.0 - k)) / 512.0 *
                     oracle::q_tail_high_precision(slope * std::abs(2 * k - 9) / 3.0);
    CHECK(qf == doctest::Approx(oracle_qf).epsilon(1e-12));
    CHECK(std::abs(qf - 0.1934236) < 1e-7);
    CHECK(std::abs(qf - exact_error_prob(empty9, 0.1)) < 0.02);
}

TEST_CASE("q functional approaches the limit as n grows") {
    for (double p : {0.1, 0.3}) {
        double gap_chain = 1.0, gap_cw = 1.0;
        for (int n : {101, 401, 1601}) {
            const double chain = q_functional(exact_magnetization_pmf(make(GraphFamily::ChainPBC, n, 0.5)), p);
            const double cw =
                q_functional(exact_magnetization_pmf(make(GraphFamily::Complete, n, 0.3, Coupling::CurieWeiss)), p);
            const double gc = std::abs(chain - pe_limit_chain(p, 0.5));
            const double gw = std::abs(cw - pe_limit_complete_subcritical(p, 0.3));
            CHECK(gc < gap_chain);
            CHECK(gw < gap_cw);
            gap_chain = gc;
            gap_cw = gw;
        }
        CHECK(gap_chain < 1e-3);
        CHECK(gap_cw < 1e-3);
    }
}

TEST_CASE("f_max below and at the critical point") {
    for (double theta : {0.1, 0.3, 0.5}) {
        const auto r = f_max(theta);
        CHECK(r.max == 0.0);
        CHECK(r.argmax == 0.0);
    }
    CHECK_THROWS(f_max(0.0));
}

TEST_CASE("f_max against a fine grid search") {
    const auto [grid_max, grid_arg] = oracle::grid_max_f(1.0, 0.0, 3.0, 1e-6);
    const auto r = f_max(1.0);
    CHECK(std::abs(r.max - grid_max) < 1e-9);
    CHECK(std::abs(r.argmax - grid_arg) < 2e-6);
    CHECK(r.max == doctest::Approx(0.32652).epsilon(1e-4));
    CHECK(r.argmax == doctest::Approx(0.9575).epsilon(1e-4));
}

TEST_CASE("f_max is increasing above 1/2 and its argmax solves the fixed point") {
    double prev = 0.0;
    for (double theta = 0.51; theta < 3.0; theta += 0.03) {
        const auto r = f_max(theta);
        CHECK(r.max > prev);
        prev = r.max;
        const double residual = r.argmax - std::sqrt(theta) * std::tanh(2 * std::sqrt(theta) * r.argmax);
        CHECK(std::abs(residual) < 1e-10);
        CHECK(f_value(theta, r.argmax) >= f_value(theta, r.argmax + 1e-4));
        CHECK(f_value(theta, r.argmax) >= f_value(theta, r.argmax - 1e-4));
    }
    // continuity at the critical point
    CHECK(f_max(0.5 + 1e-6).max < 1e-10);
}

TEST_CASE("error exponent lower bound") {
    const double lb = error_exponent_lb(0.7, 0.1);
    CHECK(lb > 0.0);
    const double cp = c_p(0.1);
    const double oracle_lb = oracle::grid_max_f(0.7, 0.0, 3.0, 1e-6).first -
                             oracle::grid_max_f(0.7 - cp, 0.0, 3.0, 1e-6).first;
    CHECK(std::abs(lb - oracle_lb) < 1e-9);

    // θ - C_p below the critical point: only the first term survives.
    CHECK(error_exponent_lb(0.55, 0.1) == f_max(0.55).max);

    double prev = 0.0;
    for (double theta = 0.6; theta <= 1.5 + 1e-9; theta += 0.05) {
        const double v = error_exponent_lb(theta, 0.1);
        CHECK(v > prev);
        prev = v;
    }
    CHECK_THROWS_AS(error_exponent_lb(0.5, 0.1), std::invalid_argument);
}
