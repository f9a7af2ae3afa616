#include "lottie_forge/numeric.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <system_error>

namespace lottie_forge {

double round_sig(double value, int digits) {
    if (digits < 1) {
        digits = 1;
    }
    if (value == 0.0 || !std::isfinite(value)) {
        return value == 0.0 ? 0.0 : value;
    }
    // Decimal string round-trip keeps the operation idempotent; a
    // pow10-based scale/round drifts on values like 0.1234.
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.*e", digits - 1, value);
    return std::strtod(buf, nullptr);
}

std::string format_number(double value) {
    if (value == 0.0) {
        return "0"; // collapses -0.0 as well
    }
    double integral = 0.0;
    if (std::modf(value, &integral) == 0.0 && std::fabs(value) < 1e15) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.0f", value);
        return buf;
    }
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc()) {
        std::snprintf(buf, sizeof(buf), "%.17g", value);
        return buf;
    }
    return std::string(buf, ptr);
}

bool parse_number(const std::string& text, double& out) {
    if (text.empty()) {
        return false;
    }
    char* end = nullptr;
    out = std::strtod(text.c_str(), &end);
    return end == text.c_str() + text.size();
}

} // namespace lottie_forge
