#include <cmath>
#include <random>

#include <doctest.h>

#include "generators.hpp"
#include "upper_envelope/errors.hpp"
#include "upper_envelope/oracle.hpp"

using namespace uenv;
using namespace uenv::oracle;

namespace {

UnitCircle at(double x, double y) { return UnitCircle{{x, y}}; }

}  // namespace

TEST_CASE("brute_force_evaluate") {
    const std::vector<UnitCircle> one{at(0, 0)};
    CHECK(brute_force_evaluate(one, 0.0) == std::optional<double>{1.0});
    CHECK(brute_force_evaluate(one, 1.0) == std::optional<double>{0.0});
    CHECK_FALSE(brute_force_evaluate(one, 1.5));
    CHECK_FALSE(brute_force_evaluate(std::vector<UnitCircle>{}, 0.0));

    const std::vector<UnitCircle> stacked{at(0, 0), at(0, -5)};
    CHECK(*brute_force_evaluate(stacked, 0.5) == doctest::Approx(0.8660254037844386).epsilon(1e-15));

    // max(sqrt(1 - 0.75^2), sqrt(1 - 0.25^2)) = sqrt(0.9375)
    const std::vector<UnitCircle> pair{at(0, 0), at(1, 0)};
    CHECK(*brute_force_evaluate(pair, 0.75) == doctest::Approx(0.9682458365518543).epsilon(1e-15));
}

TEST_CASE("brute_force_evaluate never yields NaN (property)") {
    std::mt19937_64 rng(51);
    std::vector<UnitCircle> circles;
    for (const auto& p : testing::random_centers(rng, 50, 20.0, 2.0)) circles.push_back({p});
    std::uniform_real_distribution<double> ux(-2.0, 22.0);
    for (int k = 0; k < 5000; ++k) {
        if (const auto v = brute_force_evaluate(circles, ux(rng))) CHECK_FALSE(std::isnan(*v));
    }
    for (const UnitCircle& c : circles) {
        CHECK_FALSE(std::isnan(*brute_force_evaluate(circles, c.center.x - 1.0)));
        CHECK_FALSE(std::isnan(*brute_force_evaluate(circles, c.center.x + 1.0)));
    }
}

TEST_CASE("scan_transition") {
    const auto sym = scan_transition_detailed(at(0, 0), at(1, 0), 1e-3);
    REQUIRE(sym);
    CHECK(sym->switches == 1);
    CHECK(std::abs(sym->position - 0.5) <= 1e-3);

    CHECK_FALSE(scan_transition(at(0, 0), at(3, 0), 1e-3));
    CHECK_FALSE(scan_transition(at(0, 0), at(2, 0), 1e-3));

    // The right circle overshadows from the start of the overlap.
    const auto over = scan_transition(at(0, 0), at(0.5, 1), 1e-3);
    REQUIRE(over);
    CHECK(std::abs(*over + 0.5) <= 2e-3);

    // The left circle dominates to the end of its domain.
    const auto left = scan_transition(at(0, 1), at(0.5, 0), 1e-3);
    REQUIRE(left);
    CHECK(*left == 1.0);

    CHECK_THROWS_AS(scan_transition(at(1, 0), at(0, 0), 1e-3), std::invalid_argument);
    CHECK_THROWS_AS(scan_transition(at(0, 0), at(1, 0), 0.0), std::invalid_argument);
}

TEST_CASE("near-coincident and near-tangent pairs scan with a single switch") {
    for (const auto& [cj, ci] : {std::pair{at(0, 0), at(1e-6, 0)}, std::pair{at(0, 0), at(1.999, 0)},
                                 std::pair{at(0, 0), at(1e-6, 1e-7)}}) {
        const auto r = scan_transition_detailed(cj, ci, 1e-3);
        REQUIRE(r);
        CHECK(r->switches == 1);
    }
}
