#pragma once

#include <vector>

#include "mclink/common.hpp"
#include "mclink/linalg.hpp"
#include "mclink/rng.hpp"

namespace mclink::channel {

struct DimensionMismatch : Error {
    using Error::Error;
};

struct TooManyTaps : Error {
    using Error::Error;
};

enum class Profile { Flat, Exponential };

/// Block-fading MIMO model. Exponential profiles give tap l a power
/// proportional to exp(-decay * l), normalized to unit total power per antenna
/// pair. Antenna correlation r is applied on both sides with the separable
/// exponential model (coefficient r^|i-j| between elements).
struct ChannelModel {
    int n_tx = 1;
    int n_rx = 1;
    Profile profile = Profile::Flat;
    int num_taps = 1;
    double decay = 1.0;
    double spatial_r = 0.0;
    int block_length = 0; // symbols per fading block; 0 = one block per frame

    void validate() const;
    std::vector<double> tap_powers() const;
};

/// One fading block: taps[l] is the n_rx x n_tx gain matrix of delay l.
struct ChannelRealization {
    std::vector<CMat> taps;

    int num_taps() const { return int(taps.size()); }
    const CMat& flat() const { return taps[0]; }
};

/// Total complex noise variance per sample, split equally between the real and
/// imaginary parts.
struct NoiseSpec {
    double variance = 0.0;
};

/// sigma^2 = signal_power / 10^(snr_db/10).
NoiseSpec snr_to_noise_variance(double snr_db, double signal_power);

ChannelRealization draw_channel(const ChannelModel& model, Rng& rng);

/// H_k = sum_l taps[l] * exp(-2*pi*j*k*l/n_fft) at each requested bin.
std::vector<CMat> frequency_response(const ChannelRealization& h, int n_fft,
                                     const std::vector<int>& bins);

/// Y = H * tx + V with V entries i.i.d. CN(0, variance).
CMat apply_channel(const CMat& h, const CMat& tx, NoiseSpec noise, Rng& rng);

/// Per-sample tap convolution of the per-antenna streams (zero initial state,
/// output truncated to the input length), plus per-sample noise.
std::vector<std::vector<cplx>> apply_time_domain(const ChannelRealization& h,
                                                 const std::vector<std::vector<cplx>>& tx,
                                                 NoiseSpec noise, Rng& rng);

/// Entry (i, j) = r^|i-j|.
CMat exponential_correlation(int n, double r);

/// E{H^H H} for this model: n_rx times the transmit-side correlation matrix.
CMat correlation_matrix(const ChannelModel& model);

/// Monte-Carlo estimate of E{H^H H} from `draws` realizations; oracle for
/// correlation_matrix.
CMat estimate_correlation_matrix(const ChannelModel& model, int draws, Rng& rng);

} // namespace mclink::channel
