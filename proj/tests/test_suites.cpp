#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "su11/suites.hpp"

#include <json.hpp>

#include <regex>

using namespace su11;
using nlohmann::json;

namespace {

std::string strip_wall_time(std::string text) {
    static const std::regex wall(R"("wall_time_ms":\d+)");
    return std::regex_replace(text, wall, "\"wall_time_ms\":0");
}

} // namespace

TEST_CASE("registry lists eleven suites and validates names") {
    CHECK(suite_registry().size() == 11);
    CHECK(is_known_suite("jacobi"));
    CHECK(is_known_suite("all"));
    CHECK_FALSE(is_known_suite("nope"));
    CHECK_THROWS_AS(run_suite("nope", 10, 1, 1e-9), std::invalid_argument);
}

TEST_CASE("every suite passes at its default tolerance on a reduced sweep") {
    for (const auto& info : suite_registry()) {
        const long samples = std::min<long>(info.default_samples, 50);
        const VerificationReport r = run_suite(info.name, samples, 20240817, info.default_tolerance);
        INFO(info.name, " defect ", r.max_defect);
        CHECK(r.pass);
        CHECK(r.max_defect <= r.tolerance);
        CHECK(r.suite == info.name);
        CHECK(r.samples == samples);
    }
}

TEST_CASE("empty sweeps pass trivially") {
    for (const auto& info : suite_registry()) {
        const VerificationReport r = run_suite(info.name, 0, 7, info.default_tolerance);
        CHECK(r.pass);
        CHECK(r.max_defect == 0.0);
        CHECK(r.worst_point.empty());
    }
}

TEST_CASE("reports are deterministic given (suite, samples, seed)") {
    const VerificationReport a = run_suite("jacobi", 100, 5, 1e-12);
    const VerificationReport b = run_suite("jacobi", 100, 5, 1e-12);
    CHECK(strip_wall_time(to_json(a)) == strip_wall_time(to_json(b)));
    // Different seed, different worst point (overwhelmingly likely).
    const VerificationReport c = run_suite("jacobi", 100, 6, 1e-12);
    CHECK(strip_wall_time(to_json(a)) != strip_wall_time(to_json(c)));
}

TEST_CASE("running everything equals running each suite separately") {
    const auto all = run_all(std::optional<long>(25), 11, std::nullopt);
    CHECK(all.size() == suite_registry().size());
    for (std::size_t i = 0; i < all.size(); ++i) {
        const auto& info = suite_registry()[i];
        const VerificationReport solo = run_suite(info.name, 25, 11, info.default_tolerance);
        CHECK(strip_wall_time(to_json(all[i])) == strip_wall_time(to_json(solo)));
    }
}

TEST_CASE("pass reflects the tolerance") {
    const VerificationReport strict = run_suite("jacobi", 50, 3, 1e-300);
    CHECK_FALSE(strict.pass);
    const VerificationReport loose = run_suite("jacobi", 50, 3, 1e-6);
    CHECK(loose.pass);
}

TEST_CASE("pig suite reports the fitted scalar") {
    SuiteExtras extras;
    const VerificationReport r = run_suite("pig", 20, 9, 1e-10, &extras);
    CHECK(r.pass);
    REQUIRE(extras.kappa.has_value());
    CHECK(*extras.kappa == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("JSON reports round-trip field by field") {
    SuiteExtras extras;
    const VerificationReport r = run_suite("dressing", 40, 123456789, 1e-11, &extras);
    const json parsed = json::parse(to_json(r));
    CHECK(parsed["suite"].get<std::string>() == r.suite);
    CHECK(parsed["samples"].get<long>() == r.samples);
    CHECK(parsed["seed"].get<std::uint64_t>() == r.seed);
    // 17 significant digits make the doubles round-trip exactly.
    CHECK(parsed["tolerance"].get<double>() == r.tolerance);
    CHECK(parsed["max_defect"].get<double>() == r.max_defect);
    CHECK(parsed["pass"].get<bool>() == r.pass);
    CHECK(parsed["wall_time_ms"].get<long>() == r.wall_time_ms);
    REQUIRE(parsed["worst_point"].size() == r.worst_point.size());
    for (std::size_t i = 0; i < r.worst_point.size(); ++i)
        CHECK(parsed["worst_point"][i].get<double>() == r.worst_point[i]);
}

TEST_CASE("worst point has chart dimension") {
    const VerificationReport pig = run_suite("pig", 10, 2, 1e-10);
    CHECK(pig.worst_point.size() == 4);
    const VerificationReport jac = run_suite("jacobi", 10, 2, 1e-12);
    CHECK(jac.worst_point.size() == 3);
}
