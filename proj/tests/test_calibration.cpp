#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rcag/calibration.hpp"
#include "rcag/errors.hpp"
#include "rcag/randomness_tests.hpp"
#include "rcag/thresholds.hpp"

using namespace rcag;

namespace {

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("rcag_test_" + name);
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("percentile convention") {
    const double s[] = {5, 3, 1, 4, 2};
    CHECK(percentile(s, 50) == 3.0);
    CHECK(percentile(s, 95) == doctest::Approx(4.8));
    const double c[] = {2.5, 2.5, 2.5};
    CHECK(percentile(c, 1) == 2.5);
    CHECK(percentile(c, 99) == 2.5);
    CHECK_THROWS_AS((void)percentile(std::span<const double>{}, 50), InvalidInput);
    CHECK_THROWS_AS((void)percentile(s, 0), InvalidInput);
    CHECK_THROWS_AS((void)percentile(s, 100), InvalidInput);
}

TEST_CASE("calibration is reproducible and monotone in alpha") {
    const double alphas[] = {0.10, 0.05, 0.01};
    const auto a = calibrate_threshold(200, alphas, 300, {9, 0}, 1);
    const auto b = calibrate_threshold(200, alphas, 300, {9, 0}, 4);
    REQUIRE(a.size() == 3);
    CHECK(a == b);
    CHECK(a[2].c >= a[1].c);
    CHECK(a[1].c >= a[0].c);
    for (const auto& e : a) {
        CHECK(e.k == 300);
        CHECK(e.seed == 9);
        CHECK(e.m == 200);
        CHECK(e.percentile == "linear-interp");
        CHECK(e.source == ThresholdSource::Calibrated);
    }
    CHECK_THROWS_AS((void)calibrate_threshold(41, alphas, 300, {}, 1), InvalidInput);
    CHECK_THROWS_AS((void)calibrate_threshold(2, alphas, 300, {}, 1), InvalidInput);
    CHECK_THROWS_AS((void)calibrate_threshold(40, alphas, 99, {}, 1), InvalidInput);
}

TEST_CASE("null statistics are uniform-series HD values") {
    const auto stats = null_dd_statistics(100, 5, {3, 3}, 2);
    REQUIRE(stats.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(stats[i] == dd_statistic(sample_circular_uniform(RngSeed{3, 3}.child("calib", i), 100)));
    }
}

TEST_CASE("calibration is insensitive to the endpoint law") {
    // Uniform versus von Mises(0, 2) null series.
    for (std::size_t m : {200U, 1000U}) {
        const double level[] = {0.05};
        const double cu = calibrate_threshold(m, level, 1000, {12, 0}, 1).front().c;
        std::vector<double> vm(1000);
        for (std::size_t i = 0; i < vm.size(); ++i) {
            vm[i] = dd_statistic(sample_von_mises(RngSeed{13, 0}.child("vm", i), Angle{}, 2.0, m));
        }
        const double cv = percentile(vm, 95);
        INFO("m = " << m << ": uniform " << cu << ", von Mises " << cv);
        CHECK(std::abs(cu - cv) < 0.02);
    }
}

TEST_CASE("threshold table basics") {
    ThresholdTable t;
    ThresholdEntry e;
    e.m = 40;
    e.alpha = 0.05;
    e.c = 0.6;
    t.upsert(e);
    CHECK(t.contains(40, 0.05));
    CHECK(t.contains(40, 0.05 + 1e-12));
    CHECK_FALSE(t.contains(40, 0.01));
    CHECK_THROWS_AS((void)t.at(42, 0.05), MissingThreshold);
    e.c = 0.7;
    t.upsert(e);
    CHECK(t.size() == 1);
    CHECK(t.at(40, 0.05).c == 0.7);
}

TEST_CASE("reference and bundled tables") {
    const auto& ref = published_reference_table();
    CHECK(ref.size() == 78);
    CHECK(ref.at(8000, 0.05).c == 0.34519);
    CHECK(ref.at(1000, 0.05).c == 0.38380);
    CHECK(ref.at(40, 0.01).c == doctest::Approx(0.7162).epsilon(1e-3));
    CHECK(ref.at(8000, 0.05).source == ThresholdSource::PublishedReference);
    for (const auto& x : ref.entries()) {
        if (x.alpha == 0.05) {
            CHECK(ref.at(x.m, 0.01).c >= x.c);
            CHECK(ref.at(x.m, 0.10).c <= x.c);
        }
    }
    const auto& bundled = bundled_threshold_table();
    CHECK(bundled.size() == 26 * 5);
    for (const auto& x : ref.entries()) {
        REQUIRE(bundled.contains(x.m, x.alpha));
        REQUIRE(bundled.contains(x.m, x.alpha / 2));
        CHECK(bundled.at(x.m, x.alpha).source == ThresholdSource::Calibrated);
        CHECK(bundled.at(x.m, x.alpha).k == 1000);
    }
    for (const auto& x : bundled.entries()) {
        if (x.alpha == 0.05) {
            CHECK(bundled.at(x.m, 0.01).c >= x.c);
            CHECK(bundled.at(x.m, 0.10).c <= x.c);
        }
    }
}

TEST_CASE("threshold store round trip") {
    const double alphas[] = {0.05, 0.01};
    ThresholdTable t;
    for (auto& e : calibrate_threshold(100, alphas, 200, {1, 2}, 1)) {
        t.upsert(e);
    }
    t.merge(published_reference_table());
    const auto path = temp_path("store.json");
    threshold_store_save(path, t);
    const auto loaded = threshold_store_load(path);
    CHECK(loaded == t);
    const std::string first = read_file(path);
    threshold_store_save(path, loaded);
    CHECK(read_file(path) == first);
    CHECK_FALSE(std::filesystem::exists(path.string() + ".tmp"));
    std::filesystem::remove(path);
}

TEST_CASE("threshold store errors") {
    CHECK_THROWS_AS((void)threshold_table_from_json("{\"version\": 2, \"entries\": []}"), VersionError);
    CHECK_THROWS_AS((void)threshold_table_from_json("{\"version\": 1,\n \"entries\": [\n oops]}"), ParseError);
    try {
        (void)threshold_table_from_json("{\"version\": 1,\n \"entries\": [\n oops]}");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    try {
        (void)threshold_table_from_json(
            R"({"version": 1, "entries": [{"m": 40, "alpha": 0.05, "c": "x", "k": 1, "seed": 0,
                "percentile": "linear-interp", "source": "calibrated"}]})");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("entries[0].c") != std::string::npos);
    }
    CHECK_THROWS_AS((void)threshold_table_from_json(R"({"entries": []})"), ParseError);
    CHECK_THROWS_AS((void)threshold_store_load(temp_path("does_not_exist.json")), std::exception);
}
