#include "su11/report.hpp"

#include <cstdio>
#include <sstream>

namespace su11 {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string to_json(const VerificationReport& r) {
    std::ostringstream os;
    os << "{\"suite\":\"" << r.suite << "\""
       << ",\"samples\":" << r.samples
       << ",\"seed\":" << r.seed
       << ",\"tolerance\":" << format_double(r.tolerance)
       << ",\"max_defect\":" << format_double(r.max_defect)
       << ",\"worst_point\":[";
    for (std::size_t i = 0; i < r.worst_point.size(); ++i) {
        if (i) os << ",";
        os << format_double(r.worst_point[i]);
    }
    os << "]"
       << ",\"pass\":" << (r.pass ? "true" : "false")
       << ",\"wall_time_ms\":" << r.wall_time_ms << "}";
    return os.str();
}

std::string summary_line(const VerificationReport& r) {
    std::ostringstream os;
    os << (r.pass ? "PASS" : "FAIL") << " " << r.suite << ": samples=" << r.samples
       << " seed=" << r.seed << " max_defect=" << format_double(r.max_defect)
       << " tol=" << format_double(r.tolerance) << " (" << r.wall_time_ms << " ms)";
    return os.str();
}

} // namespace su11
