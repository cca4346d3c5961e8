#pragma once

#include <span>
#include <vector>

#include "mclink/codes.hpp"
#include "mclink/common.hpp"

namespace mclink::waveform {

struct OddBitCount : Error {
    using Error::Error;
};

struct BadGuard : Error {
    using Error::Error;
};

struct DegenerateWeights : Error {
    using Error::Error;
};

enum class Modulation { Bpsk, Qpsk };

inline int bits_per_symbol(Modulation m) { return m == Modulation::Bpsk ? 1 : 2; }

/// Unit-average-energy mapping. BPSK: 0 -> +1, 1 -> -1. QPSK: Gray-coded bit
/// pairs onto (+-1 +-j)/sqrt(2), first bit -> real sign, second -> imaginary.
std::vector<cplx> map_symbols(const std::vector<int>& bits, Modulation scheme);

cplx map_one(const int* bits, Modulation scheme);

/// Hard decision back to bits; returns the bit count written (1 or 2).
int demap_one(cplx x, Modulation scheme, int out_bits[2]);

/// Replicates one data symbol onto the code's subcarriers with chip signs.
std::vector<cplx> spread_symbol(cplx x, const codes::SpreadingCode& code);

/// Radix-2 transform tables for one size. Both directions carry the 1/sqrt(n)
/// scale, so forward and inverse are exact inverses of each other.
class Fft {
public:
    explicit Fft(int n);

    int size() const { return n_; }
    void forward(std::span<cplx> a) const;
    void inverse(std::span<cplx> a) const;

private:
    void transform(std::span<cplx> a, bool inverse) const;

    int n_;
    std::vector<int> bitrev_;
    std::vector<cplx> twiddle_; // exp(-2*pi*j*k/n), k < n/2
};

/// Zero-pads the frame column to n_fft bins, inverse-transforms, and prepends
/// the last cp_len samples as a cyclic prefix.
std::vector<cplx> mc_modulate(std::span<const cplx> column, const Fft& fft, int cp_len);
std::vector<cplx> mc_modulate(const std::vector<cplx>& column, int n_fft, int cp_len);

/// Drops the prefix, forward-transforms, and returns the first n_sc bins.
std::vector<cplx> mc_demodulate(std::span<const cplx> samples, const Fft& fft, int cp_len, int n_sc);
std::vector<cplx> mc_demodulate(const std::vector<cplx>& samples, int n_fft, int cp_len, int n_sc);

enum class Combiner { Mmse, ZeroForcing, EqualGain };

/// Per-subcarrier despreading weights together with the bias normalization
/// despread() divides by. For the channel-derived rules the normalization is
/// sum_k w[k] * h[k], which makes the symbol estimate unbiased.
struct CombinerWeights {
    std::vector<cplx> w;
    cplx norm{1.0, 0.0};

    /// Plain correlation: unit weights, no normalization.
    static CombinerWeights raw(int g);
    /// Unit weights with 1/G normalization, for bins already equalized.
    static CombinerWeights unit_gain(int g);
};

CombinerWeights make_combiner(Combiner kind, std::span<const cplx> h, double noise_var);

/// sum_k w[k] * chips[k] * bins[k] / norm.
cplx despread(std::span<const cplx> bins, const codes::SpreadingCode& code,
              const CombinerWeights& cw);

/// Complex grid over (subcarrier, symbol, antenna) plus a per-(subcarrier,
/// symbol) pilot mask shared by all antennas. Columns are contiguous in k.
class Frame {
public:
    Frame(int n_sc, int n_symbols, int n_tx, int n_fft, int cp_len);

    int n_sc() const { return n_sc_; }
    int n_symbols() const { return n_symbols_; }
    int n_tx() const { return n_tx_; }
    int n_fft() const { return n_fft_; }
    int cp_len() const { return cp_len_; }

    cplx& at(int k, int t, int a) { return grid_[index(k, t, a)]; }
    cplx at(int k, int t, int a) const { return grid_[index(k, t, a)]; }

    std::span<cplx> column(int t, int a) { return {&grid_[index(0, t, a)], size_t(n_sc_)}; }
    std::span<const cplx> column(int t, int a) const {
        return {&grid_[index(0, t, a)], size_t(n_sc_)};
    }

    void mark_pilot(int k, int t) { pilot_mask_[size_t(t) * n_sc_ + k] = 1; }
    bool is_pilot(int k, int t) const { return pilot_mask_[size_t(t) * n_sc_ + k] != 0; }

private:
    size_t index(int k, int t, int a) const {
        return (size_t(a) * n_symbols_ + t) * n_sc_ + k;
    }

    int n_sc_, n_symbols_, n_tx_, n_fft_, cp_len_;
    std::vector<cplx> grid_;
    std::vector<unsigned char> pilot_mask_;
};

} // namespace mclink::waveform
