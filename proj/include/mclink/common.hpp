#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace mclink {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Base class for every error condition raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two sequences that must have equal length do not.
struct LengthMismatch : Error {
    using Error::Error;
};

inline bool is_power_of_two(long n) { return n > 0 && (n & (n - 1)) == 0; }

inline int next_power_of_two(int n) {
    int p = 1;
    while (p < n) p <<= 1;
    return p;
}

} // namespace mclink
