#include "mclink/waveform.hpp"

#include <cmath>

namespace mclink::waveform {

cplx map_one(const int* bits, Modulation scheme) {
    if (scheme == Modulation::Bpsk)
        return {bits[0] ? -1.0 : 1.0, 0.0};
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    return {bits[0] ? -inv_sqrt2 : inv_sqrt2, bits[1] ? -inv_sqrt2 : inv_sqrt2};
}

std::vector<cplx> map_symbols(const std::vector<int>& bits, Modulation scheme) {
    const int bps = bits_per_symbol(scheme);
    if (bits.size() % bps != 0)
        throw OddBitCount("QPSK needs an even number of bits, got " +
                          std::to_string(bits.size()));
    std::vector<cplx> out(bits.size() / bps);
    for (size_t i = 0; i < out.size(); ++i)
        out[i] = map_one(&bits[i * bps], scheme);
    return out;
}

int demap_one(cplx x, Modulation scheme, int out_bits[2]) {
    out_bits[0] = x.real() < 0.0 ? 1 : 0;
    if (scheme == Modulation::Bpsk) return 1;
    out_bits[1] = x.imag() < 0.0 ? 1 : 0;
    return 2;
}

std::vector<cplx> spread_symbol(cplx x, const codes::SpreadingCode& code) {
    std::vector<cplx> out(code.length());
    for (int k = 0; k < code.length(); ++k)
        out[k] = x * double(code.chips[k]);
    return out;
}

Fft::Fft(int n) : n_(n) {
    if (!is_power_of_two(n))
        throw Error("transform size must be a power of two, got " + std::to_string(n));
    bitrev_.resize(n);
    int log2n = 0;
    while ((1 << log2n) < n) ++log2n;
    for (int i = 0; i < n; ++i) {
        int r = 0;
        for (int b = 0; b < log2n; ++b)
            if (i & (1 << b)) r |= 1 << (log2n - 1 - b);
        bitrev_[i] = r;
    }
    twiddle_.resize(n / 2);
    for (int k = 0; k < n / 2; ++k)
        twiddle_[k] = std::polar(1.0, -2.0 * kPi * k / n);
}

void Fft::transform(std::span<cplx> a, bool inverse) const {
    for (int i = 0; i < n_; ++i) {
        const int j = bitrev_[i];
        if (i < j) std::swap(a[i], a[j]);
    }
    for (int len = 2; len <= n_; len <<= 1) {
        const int half = len / 2;
        const int stride = n_ / len;
        for (int start = 0; start < n_; start += len) {
            for (int j = 0; j < half; ++j) {
                const cplx w = inverse ? std::conj(twiddle_[j * stride]) : twiddle_[j * stride];
                const cplx u = a[start + j];
                const cplx v = a[start + j + half] * w;
                a[start + j] = u + v;
                a[start + j + half] = u - v;
            }
        }
    }
    const double scale = 1.0 / std::sqrt(double(n_));
    for (int i = 0; i < n_; ++i) a[i] *= scale;
}

void Fft::forward(std::span<cplx> a) const { transform(a, false); }
void Fft::inverse(std::span<cplx> a) const { transform(a, true); }

std::vector<cplx> mc_modulate(std::span<const cplx> column, const Fft& fft, int cp_len) {
    const int n = fft.size();
    if (cp_len < 0 || cp_len >= n)
        throw BadGuard("guard interval must satisfy 0 <= cp_len < n_fft");
    if (int(column.size()) > n)
        throw Error("column has more bins than the transform size");

    std::vector<cplx> body(n, cplx{0.0, 0.0});
    std::copy(column.begin(), column.end(), body.begin());
    fft.inverse(body);

    std::vector<cplx> out(n + cp_len);
    std::copy(body.end() - cp_len, body.end(), out.begin());
    std::copy(body.begin(), body.end(), out.begin() + cp_len);
    return out;
}

std::vector<cplx> mc_modulate(const std::vector<cplx>& column, int n_fft, int cp_len) {
    return mc_modulate(std::span<const cplx>(column), Fft(n_fft), cp_len);
}

std::vector<cplx> mc_demodulate(std::span<const cplx> samples, const Fft& fft, int cp_len,
                                int n_sc) {
    const int n = fft.size();
    if (cp_len < 0 || cp_len >= n)
        throw BadGuard("guard interval must satisfy 0 <= cp_len < n_fft");
    if (int(samples.size()) != n + cp_len)
        throw LengthMismatch("expected " + std::to_string(n + cp_len) + " samples, got " +
                             std::to_string(samples.size()));
    if (n_sc > n)
        throw Error("n_sc exceeds the transform size");

    std::vector<cplx> body(samples.begin() + cp_len, samples.end());
    fft.forward(body);
    body.resize(n_sc);
    return body;
}

std::vector<cplx> mc_demodulate(const std::vector<cplx>& samples, int n_fft, int cp_len,
                                int n_sc) {
    return mc_demodulate(std::span<const cplx>(samples), Fft(n_fft), cp_len, n_sc);
}

CombinerWeights CombinerWeights::raw(int g) {
    CombinerWeights cw;
    cw.w.assign(g, cplx{1.0, 0.0});
    cw.norm = {1.0, 0.0};
    return cw;
}

CombinerWeights CombinerWeights::unit_gain(int g) {
    CombinerWeights cw;
    cw.w.assign(g, cplx{1.0, 0.0});
    cw.norm = {double(g), 0.0};
    return cw;
}

CombinerWeights make_combiner(Combiner kind, std::span<const cplx> h, double noise_var) {
    CombinerWeights cw;
    cw.w.resize(h.size());
    cplx norm{0.0, 0.0};
    for (size_t k = 0; k < h.size(); ++k) {
        switch (kind) {
        case Combiner::Mmse:
            cw.w[k] = std::conj(h[k]) / (std::norm(h[k]) + noise_var);
            break;
        case Combiner::ZeroForcing:
            cw.w[k] = 1.0 / h[k];
            break;
        case Combiner::EqualGain: {
            const double mag = std::abs(h[k]);
            cw.w[k] = mag > 0.0 ? std::conj(h[k]) / mag : cplx{0.0, 0.0};
            break;
        }
        }
        norm += cw.w[k] * h[k];
    }
    cw.norm = norm;
    return cw;
}

cplx despread(std::span<const cplx> bins, const codes::SpreadingCode& code,
              const CombinerWeights& cw) {
    if (bins.size() != size_t(code.length()) || cw.w.size() != bins.size())
        throw LengthMismatch("bins, code, and weights must have equal length");
    if (std::abs(cw.norm) < 1e-12)
        throw DegenerateWeights("combiner normalization is numerically zero");

    cplx acc{0.0, 0.0};
    for (size_t k = 0; k < bins.size(); ++k)
        acc += cw.w[k] * double(code.chips[k]) * bins[k];
    return acc / cw.norm;
}

Frame::Frame(int n_sc, int n_symbols, int n_tx, int n_fft, int cp_len)
    : n_sc_(n_sc), n_symbols_(n_symbols), n_tx_(n_tx), n_fft_(n_fft), cp_len_(cp_len) {
    if (n_sc < 1 || n_symbols < 1 || n_tx < 1)
        throw Error("frame dimensions must be positive");
    if (n_sc > n_fft)
        throw Error("n_sc must not exceed n_fft");
    if (cp_len < 0 || cp_len >= n_fft)
        throw BadGuard("guard interval must satisfy 0 <= cp_len < n_fft");
    grid_.assign(size_t(n_sc) * n_symbols * n_tx, cplx{0.0, 0.0});
    pilot_mask_.assign(size_t(n_sc) * n_symbols, 0);
}

} // namespace mclink::waveform
