#ifndef SUPRA_FORMAT_HPP_
#define SUPRA_FORMAT_HPP_

#include <cstdio>
#include <string>

namespace supra {

// 17 significant digits: enough for binary64 round trips.
inline std::string format_double17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace supra

#endif // SUPRA_FORMAT_HPP_
