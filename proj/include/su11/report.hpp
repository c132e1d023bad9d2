#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace su11 {

/// Outcome of one verification suite. pass <=> max_defect <= tolerance.
struct VerificationReport {
    std::string suite;
    long samples = 0;
    std::uint64_t seed = 0;
    double tolerance = 0.0;
    double max_defect = 0.0;
    std::vector<double> worst_point; // coordinates of the worst sample; empty sweep -> empty
    bool pass = true;
    long wall_time_ms = 0;
};

/// One-line JSON object with fixed field order; doubles are printed with
/// 17 significant digits so that parsing recovers them exactly.
std::string to_json(const VerificationReport& r);

/// Short human-readable summary (for standard error).
std::string summary_line(const VerificationReport& r);

/// Format a double with 17 significant digits.
std::string format_double(double v);

} // namespace su11
