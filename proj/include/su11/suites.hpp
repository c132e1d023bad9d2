#pragma once

#include "su11/gwflow.hpp"
#include "su11/report.hpp"
#include "su11/rng.hpp"
#include "su11/thompson.hpp"

#include <optional>
#include <vector>

namespace su11 {

/// Deterministic samplers used by the verification suites. Every draw is
/// a pure function of (seed, suite tag, sample index), so per-suite
/// results do not depend on which other suites ran.
namespace sampling {

Rng stream(std::uint64_t seed, const std::string& tag, std::uint64_t index);

/// lambda uniform in [lambda_lo, lambda_hi], s uniform in [s_lo, s_hi],
/// phi uniform in [phi_margin, 2pi - phi_margin].
QStarPoint admissible_qstar(Rng& rng, double lambda_lo, double lambda_hi, double s_lo,
                            double s_hi, double phi_margin = 0.0);

/// Dressed admissible AN element: lambda log-uniform in [lambda_lo, lambda_hi],
/// rapidity uniform in [0, boost_range].
ANPoint admissible_an(Rng& rng, double lambda_lo, double lambda_hi, double boost_range);

GElement group_element(Rng& rng, double boost_range);

/// Uniform box point, each coordinate in [-2, 2].
Vec3 box_point(Rng& rng);

} // namespace sampling

struct SuiteInfo {
    std::string name;
    long default_samples;
    double default_tolerance;
    std::string defect; // what the per-sample defect measures
};

/// The suites known to `verify`; "all" is accepted by run_all only.
const std::vector<SuiteInfo>& suite_registry();

bool is_known_suite(const std::string& name);

/// Extra suite outputs that do not fit the report schema.
struct SuiteExtras {
    std::optional<double> kappa; // pig: fitted global scalar
};

/// The scalar relating the wedge construction to the bracket table,
/// fitted once at a fixed generic group element (the pig suite's kappa).
double pig_fitted_kappa();

/// Run one suite (not "all"). Deterministic given (suite, samples, seed).
VerificationReport run_suite(const std::string& suite, long samples, std::uint64_t seed,
                             double tolerance, SuiteExtras* extras = nullptr);

VerificationReport run_suite_defaults(const std::string& suite, std::uint64_t seed);

/// Run every registered suite with the same seed; samples/tolerance
/// override the per-suite defaults when set.
std::vector<VerificationReport> run_all(std::optional<long> samples, std::uint64_t seed,
                                        std::optional<double> tolerance);

} // namespace su11
