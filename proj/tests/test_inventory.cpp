#include <doctest.h>

#include <cmath>

#include "glrip/inventory.hpp"
#include "glrip/rng.hpp"

using namespace glrip;

namespace {
double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }
} // namespace

TEST_CASE("normal quantile hits known values") {
    CHECK(z_quantile(0.95) == doctest::Approx(1.6448536269514722).epsilon(1e-9));
    CHECK(std::abs(z_quantile(0.5)) < 1e-12);
    CHECK(z_quantile(0.975) == doctest::Approx(1.959963984540054).epsilon(1e-9));
    CHECK_THROWS_AS(z_quantile(0.0), std::invalid_argument);
    CHECK_THROWS_AS(z_quantile(1.0), std::invalid_argument);
}

TEST_CASE("normal quantile inverts the CDF across the range") {
    for (double p = 0.001; p < 0.9995; p += 0.0007) {
        double z = z_quantile(p);
        CHECK(normal_cdf(z) == doctest::Approx(p).epsilon(1e-10));
        CHECK(z_quantile(1.0 - p) == doctest::Approx(-z).epsilon(1e-9));
    }
}

TEST_CASE("safety stock formula") {
    CHECK(safety_stock(25.0, 4.0, 2.0) == doctest::Approx(20.0));
    CHECK(safety_stock(0.0, 4.0, 2.0) == 0.0);
}

TEST_CASE("scenario bits: strict shortage, strict surplus, ties to zero") {
    double z = z_quantile(0.95);
    double ss = safety_stock(25.0, 4.0, z); // ~16.45

    // annual supply below demand: shortage bit only
    auto b = classify(100.0, 25.0, 2, 40.0, 4.0, z); // nq=80 < mu
    CHECK(b.t);
    CHECK_FALSE(b.t_prime);

    // exact balance is a tie: both bits clear
    b = classify(100.0, 25.0, 2, 50.0, 4.0, z);
    CHECK_FALSE(b.t);
    CHECK_FALSE(b.t_prime);

    // surplus inside the safety band
    b = classify(100.0, 25.0, 2, 50.0 + ss / 4.0, 4.0, z);
    CHECK_FALSE(b.t);
    CHECK_FALSE(b.t_prime);

    // surplus exactly at the band edge stays a tie
    b = classify(100.0, 25.0, 1, 100.0 + ss, 4.0, z);
    CHECK_FALSE(b.t);
    CHECK_FALSE(b.t_prime);

    // surplus strictly beyond the band
    b = classify(100.0, 25.0, 1, 100.0 + ss + 1e-6, 4.0, z);
    CHECK_FALSE(b.t);
    CHECK(b.t_prime);
}

TEST_CASE("boundary grid around both scenario switches") {
    double z = z_quantile(0.9);
    double mu = 500.0, var = 64.0, lead = 6.0;
    double ss = safety_stock(var, lead, z);
    for (double eps : {1e-9, 1e-6, 1e-3, 0.1}) {
        // around nq == mu
        CHECK(classify(mu, var, 1, mu - eps, lead, z).t);
        CHECK_FALSE(classify(mu, var, 1, mu + eps, lead, z).t);
        // around nq - mu == ss
        CHECK_FALSE(classify(mu, var, 1, mu + ss - eps, lead, z).t_prime);
        CHECK(classify(mu, var, 1, mu + ss + eps, lead, z).t_prime);
    }
}

TEST_CASE("four-term expression equals the piecewise form on random states") {
    Rng rng(20240817);
    for (int i = 0; i < 20000; ++i) {
        double mu = rng.uniform(0.0, 2000.0);
        double var = rng.uniform(0.0, 400.0);
        int n = 1 + (int)rng.index(10);
        double q = rng.uniform(0.0, 2200.0 / n);
        double lead = rng.uniform(0.5, 10.0);
        double z = z_quantile(rng.uniform(0.5, 0.99));
        double lit = expected_inventory_auto(mu, var, n, q, lead, z);
        double closed = expected_inventory_closed(mu, var, n, q, lead, z);
        REQUIRE(std::abs(lit - closed) <=
                1e-9 * std::max(1.0, std::abs(closed)));
    }
}

TEST_CASE("expected inventory by scenario") {
    double z = z_quantile(0.95);
    double ss = safety_stock(25.0, 4.0, z);

    // balanced ordering leaves exactly the safety stock on hand
    CHECK(expected_inventory_auto(100.0, 25.0, 4, 25.0, 4.0, z) ==
          doctest::Approx(ss));
    // shortage adds the uncovered demand
    CHECK(expected_inventory_auto(100.0, 25.0, 2, 40.0, 4.0, z) ==
          doctest::Approx(20.0 + ss));
    // moderate surplus is absorbed by the safety band
    CHECK(expected_inventory_auto(100.0, 25.0, 2, 52.0, 4.0, z) ==
          doctest::Approx(ss));
    // heavy surplus dominates the band
    CHECK(expected_inventory_auto(100.0, 25.0, 2, 70.0, 4.0, z) ==
          doctest::Approx(40.0));
}
