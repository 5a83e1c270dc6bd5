#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace boost {

// Boost < 1.75 defines rational == integer through a free template that calls
// back into ==; C++20 reversed candidates turn that into infinite recursion.
// Exact non-template overloads win overload resolution and break the cycle.
#if BOOST_VERSION < 107500
inline bool operator==(const rational<std::int64_t> &a, std::int64_t b) {
    return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(const rational<std::int64_t> &a, int b) { return a == static_cast<std::int64_t>(b); }
#endif

} // namespace boost

namespace q2col {

using rational = boost::rational<std::int64_t>;

/// "p/q", denominator always printed.
inline std::string to_string(const rational &r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

} // namespace q2col
