#pragma once

#include <vector>

#include "mclink/common.hpp"

namespace mclink::codes {

/// Register seeded with all zeros would never leave the zero state.
struct ZeroSeed : Error {
    using Error::Error;
};

/// Feedback taps whose state cycle is shorter than 2^m - 1.
struct NonMaximalPolynomial : Error {
    using Error::Error;
};

struct NotPowerOfTwo : Error {
    using Error::Error;
};

enum class CodeFamily { MSequence, Walsh };

/// Fibonacci-form shift register: `degree` stages, output taken from the last
/// stage, feedback is the XOR of the tapped stages (indices 1..degree, stage
/// `degree` always tapped) shifted back into stage 1.
struct LfsrSpec {
    int degree = 0;
    std::vector<int> taps;
    std::vector<int> seed; // bits, seed[i] = stage i+1, not all zero
};

struct SpreadingCode {
    std::vector<int> chips; // each +1 or -1
    CodeFamily family = CodeFamily::MSequence;
    int index = 0;

    int length() const { return int(chips.size()); }
};

/// Known-primitive tap sets for degrees 2..10. Callers may supply their own;
/// non-maximal sets are rejected at generation time.
std::vector<int> primitive_taps(int degree);

/// Convenience spec: built-in taps and an all-ones seed.
LfsrSpec default_lfsr(int degree);

/// One full period (2^m - 1 chips) of the register's output, bits mapped
/// 0 -> +1 and 1 -> -1. The achieved cycle length is checked against 2^m - 1.
SpreadingCode generate_m_sequence(const LfsrSpec& spec);

/// All `order` rows of the Sylvester-recursive +-1 orthogonal matrix.
std::vector<SpreadingCode> walsh_hadamard_set(int order);

/// Sum over k of a[k] * b[(k+lag) mod length], exact in integer arithmetic.
long periodic_correlation(const SpreadingCode& a, const SpreadingCode& b, int lag);

/// Largest |periodic_correlation(c, c, lag)| over lag = 1..length-1.
long max_offpeak_autocorrelation(const SpreadingCode& c);

} // namespace mclink::codes
