#include "mclink/codes.hpp"

#include <algorithm>
#include <cstdlib>

namespace mclink::codes {

std::vector<int> primitive_taps(int degree) {
    switch (degree) {
    case 2: return {1, 2};
    case 3: return {2, 3};
    case 4: return {3, 4};
    case 5: return {3, 5};
    case 6: return {5, 6};
    case 7: return {6, 7};
    case 8: return {4, 5, 6, 8};
    case 9: return {5, 9};
    case 10: return {7, 10};
    default:
        throw Error("no built-in primitive taps for degree " + std::to_string(degree));
    }
}

LfsrSpec default_lfsr(int degree) {
    return {degree, primitive_taps(degree), std::vector<int>(degree, 1)};
}

namespace {

void check_spec(const LfsrSpec& spec) {
    if (spec.degree < 2)
        throw Error("LFSR degree must be at least 2");
    if (int(spec.seed.size()) != spec.degree)
        throw Error("seed length must equal the register degree");
    if (std::all_of(spec.seed.begin(), spec.seed.end(), [](int b) { return b == 0; }))
        throw ZeroSeed("all-zero seed: the register would stay in the zero state");
    if (spec.taps.empty())
        throw Error("tap set must not be empty");
    for (int t : spec.taps)
        if (t < 1 || t > spec.degree)
            throw Error("tap index out of range 1..degree");
    if (std::find(spec.taps.begin(), spec.taps.end(), spec.degree) == spec.taps.end())
        throw Error("tap set must include the last stage");
}

} // namespace

SpreadingCode generate_m_sequence(const LfsrSpec& spec) {
    check_spec(spec);

    const int m = spec.degree;
    std::uint64_t state = 0; // bit i = stage i+1
    for (int i = 0; i < m; ++i)
        if (spec.seed[i]) state |= 1ULL << i;

    std::uint64_t tap_mask = 0;
    for (int t : spec.taps) tap_mask |= 1ULL << (t - 1);

    const std::uint64_t initial = state;
    const long full_period = (1L << m) - 1;

    SpreadingCode code;
    code.family = CodeFamily::MSequence;
    code.index = m;
    code.chips.reserve(full_period);

    long steps = 0;
    do {
        const int out = int((state >> (m - 1)) & 1ULL);
        code.chips.push_back(out ? -1 : +1);
        const int fb = __builtin_parityll(state & tap_mask);
        state = ((state << 1) | std::uint64_t(fb)) & ((1ULL << m) - 1);
        ++steps;
    } while (state != initial && steps < full_period);

    if (steps != full_period || state != initial)
        throw NonMaximalPolynomial("state cycle length " + std::to_string(steps) +
                                   " != " + std::to_string(full_period));
    return code;
}

std::vector<SpreadingCode> walsh_hadamard_set(int order) {
    if (!is_power_of_two(order))
        throw NotPowerOfTwo("Walsh set order must be a power of two, got " +
                            std::to_string(order));

    // Sylvester recursion, built row-wise: entry (i, j) = parity of popcount(i & j).
    std::vector<SpreadingCode> set(order);
    for (int i = 0; i < order; ++i) {
        set[i].family = CodeFamily::Walsh;
        set[i].index = i;
        set[i].chips.resize(order);
        for (int j = 0; j < order; ++j)
            set[i].chips[j] = __builtin_parityll(std::uint64_t(i) & std::uint64_t(j)) ? -1 : +1;
    }
    return set;
}

long periodic_correlation(const SpreadingCode& a, const SpreadingCode& b, int lag) {
    const int n = a.length();
    if (n != b.length())
        throw LengthMismatch("code lengths differ: " + std::to_string(n) + " vs " +
                             std::to_string(b.length()));
    if (lag < 0 || lag >= n)
        throw Error("lag must satisfy 0 <= lag < length");

    long sum = 0;
    for (int k = 0; k < n; ++k)
        sum += long(a.chips[k]) * long(b.chips[(k + lag) % n]);
    return sum;
}

long max_offpeak_autocorrelation(const SpreadingCode& c) {
    long worst = 0;
    for (int lag = 1; lag < c.length(); ++lag)
        worst = std::max(worst, std::labs(periodic_correlation(c, c, lag)));
    return worst;
}

} // namespace mclink::codes
