#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rcag/errors.hpp"
#include "rcag/process.hpp"
#include "rcag/randomness_tests.hpp"
#include "support.hpp"

using namespace rcag;

TEST_CASE("link and its inverse") {
    CHECK(link(0.0) == 0.0);
    CHECK(link(1.0) == doctest::Approx(std::numbers::pi / 2));
    for (double x : {-10.0, -1.0, 0.3, 5.0}) {
        CHECK(std::abs(link_inverse(link(x)) - x) < 1e-12);
    }
    CHECK_THROWS_AS((void)link_inverse(std::numbers::pi), InvalidInput);
    CHECK_THROWS_AS((void)link_inverse(-4.0), InvalidInput);
    CHECK(std::isfinite(link_inverse(wrapped_offset(std::numbers::pi, 0.0))));
    CHECK(wrapped_offset(0.1, 6.2) == doctest::Approx(0.1 + kTwoPi - 6.2));
}

TEST_CASE("AR stationarity") {
    const double ok1[] = {0.9};
    const double bad1[] = {1.0};
    const double ok2[] = {0.5, 0.4};
    const double bad2[] = {0.5, 0.6};
    const double bad3[] = {0.2, -1.1};
    CHECK(ar_is_stationary(ok1));
    CHECK_FALSE(ar_is_stationary(bad1));
    CHECK(ar_is_stationary(ok2));
    CHECK_FALSE(ar_is_stationary(bad2));
    CHECK_FALSE(ar_is_stationary(bad3));
    CHECK(ar_is_stationary(std::span<const double>{}));
}

TEST_CASE("process spec parsing") {
    auto s = parse_process_spec("lar1:rho=0.9");
    CHECK(s.kind == ProcessKind::Larma);
    CHECK(s.ar == std::vector<double>{0.9});
    CHECK(s.ma.empty());
    CHECK(s.burn_in == 500);

    s = parse_process_spec("lma1:rho=0.9,burn=100");
    CHECK(s.ma == std::vector<double>{0.9});
    CHECK(s.burn_in == 100);

    s = parse_process_spec("lar2:rho=0.5,0.4");
    CHECK(s.ar == std::vector<double>{0.5, 0.4});

    s = parse_process_spec("car:p=2,mu=0,kappa=3,alpha=0.5,0.5");
    CHECK(s.kind == ProcessKind::Car);
    CHECK(s.kappa == 3.0);
    CHECK(s.ar == std::vector<double>{0.5, 0.5});

    CHECK(parse_process_spec("unif").kind == ProcessKind::IidUniform);
    CHECK(parse_process_spec("vm:mu=0,kappa=2").kappa == 2.0);
    CHECK(parse_process_spec("wc:mu=0,rho=0.5").rho == 0.5);
    CHECK(parse_process_spec("larma:ar=0.5,ma=0.3,sigma=2").sigma == 2.0);

    for (const char* text : {"lar1:rho=0.9", "lma1:rho=0.3", "larma:ar=0.2,0.1,ma=0.4,sigma=0.5,mu=1",
                             "car:p=2,mu=0.25,kappa=7,alpha=0.5,0.5", "vm:mu=1,kappa=2", "wc:rho=0.3", "unif"}) {
        const auto spec = parse_process_spec(text);
        CHECK(parse_process_spec(to_string(spec)) == spec);
    }
}

TEST_CASE("process spec errors name the field") {
    auto message = [](const char* text) {
        try {
            (void)parse_process_spec(text);
        } catch (const ParseError& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(message("lar1:rho=abc").find("'rho'") != std::string::npos);
    CHECK(message("lar1:rho=0.5,rhoo=1").find("'rhoo'") != std::string::npos);
    CHECK(message("car:p=3,kappa=1,alpha=0.5,0.5").find("'p'") != std::string::npos);
    CHECK(message("vm:mu=0").find("'kappa'") != std::string::npos);
    CHECK(message("lar1:rho=0.5,burn=-1").find("'burn'") != std::string::npos);
    CHECK(message("bogus:x=1").find("bogus") != std::string::npos);
    CHECK_THROWS_AS((void)parse_process_spec("lar1:rho=1.2"), InvalidInput);
    CHECK_THROWS_AS((void)parse_process_spec("wc:rho=1"), InvalidInput);
    CHECK_THROWS_AS((void)parse_process_spec("car:kappa=-1,alpha=0.5"), InvalidInput);
}

TEST_CASE("generators are deterministic and well-formed") {
    for (const char* text : {"lar1:rho=0.9", "lma1:rho=0.9", "car:p=2,kappa=3,alpha=0.5,0.5", "unif",
                             "vm:kappa=2", "wc:rho=0.5", "lar2:rho=0.5,0.4"}) {
        const auto spec = parse_process_spec(text);
        const auto a = generate(spec, 300, {4, 4});
        CHECK(a.size() == 300);
        CHECK(a == generate(spec, 300, {4, 4}));
        CHECK_FALSE(a == generate(spec, 300, {4, 5}));
        for (const Angle x : a) {
            REQUIRE(x.value() >= 0.0);
            REQUIRE(x.value() < kTwoPi);
        }
    }
    CHECK_THROWS_AS((void)generate(parse_process_spec("lar1:rho=0.5"), 0, {}), InvalidInput);
}

TEST_CASE("LAR(1) lag-one dependence grows with rho") {
    auto lag_one = [](const AngleSeries& s) {
        // Circular lag-one resultant of successive differences.
        double c = 0.0;
        double si = 0.0;
        for (std::size_t i = 1; i < s.size(); ++i) {
            c += std::cos(s[i].value() - s[i - 1].value());
            si += std::sin(s[i].value() - s[i - 1].value());
        }
        return std::hypot(c, si) / static_cast<double>(s.size() - 1);
    };
    const double r0 = lag_one(generate(parse_process_spec("lar1:rho=0"), 20000, {1, 0}));
    const double r9 = lag_one(generate(parse_process_spec("lar1:rho=0.9"), 20000, {1, 0}));
    CHECK(r9 > r0 + 0.2);
}

TEST_CASE("CAR with zero coefficients is i.i.d. von Mises") {
    const auto s = generate(parse_process_spec("car:p=2,mu=1,kappa=2,alpha=0,0"), 100000, {6, 0});
    const auto m = circular_moments(s);
    CHECK(std::abs(m.resultant_length - 0.69777465796400798) < 0.01);
    CHECK(std::abs(m.mean_direction - 1.0) < 0.02);
}

TEST_CASE("unit-variance LAR(1) with rho = 0 is the Cauchy image of a normal") {
    // With X ~ N(0, 1), P(|2 atan X| <= pi/2) = P(|X| <= 1) = 0.6827.
    const auto s = generate(parse_process_spec("lar1:rho=0"), 100000, {7, 0});
    int inside = 0;
    for (const Angle a : s) {
        const double t = std::remainder(a.value(), kTwoPi);
        inside += std::abs(t) <= std::numbers::pi / 2 ? 1 : 0;
    }
    CHECK(std::abs(inside / 1e5 - 0.682689492137086) < 0.005);
}

TEST_CASE("degenerate processes keep the size") {
    const double level[] = {0.05};
    const auto table = testing::calibrated_table(400, level, 4000);
    for (const char* text : {"lar1:rho=0", "car:p=1,kappa=0,alpha=0"}) {
        const auto spec = parse_process_spec(text);
        int ep = 0;
        int dd = 0;
        constexpr int reps = 1000;
        for (std::uint64_t r = 0; r < reps; ++r) {
            const auto s = generate(spec, 400, {r, 70});
            ep += rejects(ep_test(s, 0.05, {r, 71}).decision) ? 1 : 0;
            dd += rejects(dd_test(s, 0.05, table).decision) ? 1 : 0;
        }
        INFO(text << ": EP " << ep << ", DD " << dd);
        CHECK(std::abs(ep / double(reps) - 0.05) <= 0.02);
        CHECK(std::abs(dd / double(reps) - 0.05) <= 0.02);
    }
}

TEST_CASE("doubling the burn-in leaves power unchanged") {
    const double level[] = {0.05};
    const auto table = testing::calibrated_table(1000, level, 2000);
    const auto base = parse_process_spec("lar1:rho=0.5");
    auto longer = base;
    longer.burn_in = 1000;
    int a = 0;
    int b = 0;
    constexpr int reps = 2000;
    for (std::uint64_t r = 0; r < reps; ++r) {
        a += rejects(dd_test(generate(base, 1000, {r, 80}), 0.05, table).decision) ? 1 : 0;
        b += rejects(dd_test(generate(longer, 1000, {r, 80}), 0.05, table).decision) ? 1 : 0;
    }
    INFO("burn 500: " << a << ", burn 1000: " << b);
    // Retained innovations are shared, so only the start-up state differs.
    CHECK(std::abs(a - b) < 0.01 * reps);
}
