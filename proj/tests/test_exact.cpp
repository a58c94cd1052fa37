#include <cmath>

#include "doctest.h"
#include "majvote/exact.hpp"
#include "oracles.hpp"

using namespace majvote;

namespace {

IsingModel make(GraphFamily f, int n, double theta, Coupling c = Coupling::Edgewise) {
    return IsingModel(build_graph(f, n), theta, c);
}

// Σ_x p(x) P(err | x) with both factors from the test oracles.
double oracle_error_prob(int n, const oracle::Edges& edges, double theta, bool cw, double p) {
    const auto pmf = oracle::state_pmf(n, edges, theta, cw);
    double total = 0.0;
    for (std::uint32_t s = 0; s < pmf.size(); ++s) {
        std::vector<int> x(n);
        for (int i = 0; i < n; ++i) x[i] = oracle::spin(s, i);
        total += pmf[s] * oracle::conditional_error(x, p);
    }
    return total;
}

}  // namespace

TEST_CASE("conditional error examples") {
    // ≥ 2 flips out of 3: 3·0.01·0.9 + 0.001
    CHECK(oracle::conditional_error({1, 1, 1}, 0.1) == doctest::Approx(0.028).epsilon(1e-12));
    CHECK(oracle::conditional_error({1, 1, -1}, 0.1) == doctest::Approx(0.172).epsilon(1e-12));

    CHECK(conditional_error_prob(SpinVector{1, 1, 1}, 0.1) == doctest::Approx(0.028).epsilon(1e-12));
    CHECK(conditional_error_prob(SpinVector{1, 1, -1}, 0.1) == doctest::Approx(0.172).epsilon(1e-12));
    CHECK(conditional_error_prob(SpinVector{1, -1, 1, -1, -1}, 1e-15) < 1e-12);
}

TEST_CASE("conditional error matches flip-pattern enumeration") {
    for (int n : {1, 3, 5, 9, 11})
        for (int k = 0; k <= n; ++k)
            for (double p : {0.01, 0.1, 0.3, 0.45}) {
                std::vector<int> x(n, -1);
                for (int i = 0; i < k; ++i) x[i] = 1;
                CHECK(conditional_error_prob(n, k, p) ==
                      doctest::Approx(oracle::conditional_error(x, p)).epsilon(1e-12));
            }
}

TEST_CASE("conditional error rejects bad inputs") {
    CHECK_THROWS_AS(conditional_error_prob(SpinVector{1, 1}, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(conditional_error_prob(SpinVector{1, 1, 1}, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(conditional_error_prob(SpinVector{1, 1, 1}, 0.0), std::invalid_argument);
}

TEST_CASE("exact error probability examples") {
    // (2·0.028 + 6·0.172) / 8
    CHECK(exact_error_prob(make(GraphFamily::Empty, 3, 1.0), 0.1) == doctest::Approx(0.136).epsilon(1e-12));
    CHECK(exact_error_prob(make(GraphFamily::Empty, 3, 1.0), 1e-15) < 1e-12);
    CHECK_THROWS_AS(exact_error_prob(make(GraphFamily::Empty, 4, 1.0), 0.1), std::invalid_argument);
    const IsingModel big(from_edge_list(21, {{0, 1}}), 0.5);
    CHECK_THROWS_AS(exact_error_prob(big, 0.1), std::invalid_argument);
}

TEST_CASE("exact error probability matches the oracle for every family") {
    for (int n : {5, 7})
        for (double theta : {0.2, 0.8})
            for (double p : {0.1, 0.3}) {
                CAPTURE(n);
                CAPTURE(theta);
                CAPTURE(p);
                CHECK(exact_error_prob(make(GraphFamily::Empty, n, theta), p) ==
                      doctest::Approx(oracle_error_prob(n, {}, theta, false, p)).epsilon(1e-11));
                CHECK(exact_error_prob(make(GraphFamily::Chain, n, theta), p) ==
                      doctest::Approx(oracle_error_prob(n, oracle::path_edges(n, false), theta, false, p)).epsilon(1e-11));
                CHECK(exact_error_prob(make(GraphFamily::ChainPBC, n, theta), p) ==
                      doctest::Approx(oracle_error_prob(n, oracle::path_edges(n, true), theta, false, p)).epsilon(1e-11));
                CHECK(exact_error_prob(make(GraphFamily::Complete, n, theta, Coupling::CurieWeiss), p) ==
                      doctest::Approx(oracle_error_prob(n, {}, theta, true, p)).epsilon(1e-11));
                CHECK(exact_error_prob(make(GraphFamily::Complete, n, theta), p) ==
                      doctest::Approx(oracle_error_prob(n, oracle::all_pairs(n), theta, false, p)).epsilon(1e-11));
                const IsingModel star(from_edge_list(n, {{0, 1}, {0, 2}, {0, 3}, {3, 4}}), theta);
                CHECK(exact_error_prob(star, p) ==
                      doctest::Approx(oracle_error_prob(n, {{0, 1}, {0, 2}, {0, 3}, {3, 4}}, theta, false, p))
                          .epsilon(1e-11));
            }
}

TEST_CASE("exact error probability grows with noise") {
    for (auto f : {GraphFamily::Empty, GraphFamily::Chain, GraphFamily::ChainPBC, GraphFamily::Complete})
        for (int n : {3, 5, 7, 9})
            for (double theta : {0.2, 0.8}) {
                const auto model = make(f, n, theta, f == GraphFamily::Complete ? Coupling::CurieWeiss : Coupling::Edgewise);
                double prev = 0.0;
                for (double p = 0.02; p < 0.5; p += 0.04) {
                    const double pe = exact_error_prob(model, p);
                    CHECK(pe > prev);
                    prev = pe;
                }
            }
}

TEST_CASE("magnetization pmf examples") {
    const auto flat = exact_magnetization_pmf(make(GraphFamily::Complete, 3, 1e-15, Coupling::CurieWeiss));
    CHECK(flat.at_sum(-3) == doctest::Approx(1.0 / 8));
    CHECK(flat.at_sum(-1) == doctest::Approx(3.0 / 8));
    CHECK(flat.at_sum(1) == doctest::Approx(3.0 / 8));
    CHECK(flat.at_sum(3) == doctest::Approx(1.0 / 8));
    CHECK(flat.at_sum(0) == 0.0);
    CHECK(flat.at_sum(5) == 0.0);

    const auto empty = exact_magnetization_pmf(make(GraphFamily::Empty, 5, 0.3));
    const double binom[] = {1, 5, 10, 10, 5, 1};
    for (int k = 0; k <= 5; ++k) CHECK(empty.prob[k] == doctest::Approx(binom[k] / 32.0));
}

TEST_CASE("periodic chain pmf matches sampler frequencies (n=4)") {
    const auto model = make(GraphFamily::ChainPBC, 4, 0.5);
    const auto pmf = exact_magnetization_pmf(model);
    const Sampler sampler(model);
    std::vector<std::uint64_t> counts(5, 0);
    const std::uint64_t draws = 400000;
    std::vector<Spin> x(4);
    for (std::uint64_t t = 0; t < draws; ++t) {
        Rng rng = substream(31, t);
        sampler.draw(rng, x);
        ++counts[(spin_sum(x) + 4) / 2];
    }
    CHECK(oracle::chi_square_pvalue(counts, pmf.prob, draws) > 0.01);
}

TEST_CASE("chain recursion pmf agrees with enumeration") {
    for (auto f : {GraphFamily::Chain, GraphFamily::ChainPBC})
        for (int n = 3; n <= 13; ++n)
            for (double theta : {0.1, 0.7, 2.0}) {
                const auto model = make(f, n, theta);
                const auto fast = exact_magnetization_pmf(model);
                const auto slow = enumerated_magnetization_pmf(model);
                for (int k = 0; k <= n; ++k) CHECK(fast.prob[k] == doctest::Approx(slow.prob[k]).epsilon(1e-12));
            }
}

TEST_CASE("pmf invariants: normalized and symmetric") {
    std::vector<IsingModel> models{
        make(GraphFamily::Empty, 9, 0.5),
        make(GraphFamily::Chain, 11, 0.9),
        make(GraphFamily::ChainPBC, 2001, 0.5),
        make(GraphFamily::Complete, 4001, 0.7, Coupling::CurieWeiss),
        make(GraphFamily::Complete, 12, 0.2),
        IsingModel(from_edge_list(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}}), 0.4),
    };
    for (const auto& model : models) {
        const auto pmf = exact_magnetization_pmf(model);
        double total = 0.0;
        for (double v : pmf.prob) total += v;
        CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
        for (int k = 0; k <= pmf.n; ++k) CHECK(pmf.prob[k] == pmf.prob[pmf.n - k]);
    }
}
