#include "mclink/channel.hpp"

#include <cmath>

namespace mclink::channel {

void ChannelModel::validate() const {
    if (n_tx < 1 || n_rx < 1)
        throw Error("antenna counts must be at least 1");
    if (profile == Profile::Exponential && num_taps < 1)
        throw Error("exponential profile needs num_taps >= 1");
    if (profile == Profile::Exponential && decay <= 0.0)
        throw Error("exponential decay must be positive");
    if (spatial_r < 0.0 || spatial_r >= 1.0)
        throw Error("spatial correlation must lie in [0, 1)");
    if (block_length < 0)
        throw Error("block_length must be nonnegative");
}

std::vector<double> ChannelModel::tap_powers() const {
    const int taps = profile == Profile::Flat ? 1 : num_taps;
    std::vector<double> p(taps);
    double total = 0.0;
    for (int l = 0; l < taps; ++l) {
        p[l] = profile == Profile::Flat ? 1.0 : std::exp(-decay * l);
        total += p[l];
    }
    for (double& v : p) v /= total;
    return p;
}

NoiseSpec snr_to_noise_variance(double snr_db, double signal_power) {
    if (signal_power <= 0.0)
        throw Error("signal power must be positive");
    return {signal_power / std::pow(10.0, snr_db / 10.0)};
}

namespace {

CMat correlation_sqrt(int n, double r) {
    if (r == 0.0) return CMat::Identity(n, n);
    Eigen::LLT<CMat> llt(exponential_correlation(n, r));
    if (llt.info() != Eigen::Success)
        throw Error("correlation matrix is not positive definite");
    return llt.matrixL();
}

} // namespace

ChannelRealization draw_channel(const ChannelModel& model, Rng& rng) {
    model.validate();
    const auto powers = model.tap_powers();
    const bool correlated = model.spatial_r != 0.0;

    CMat l_rx, l_tx_h;
    if (correlated) {
        l_rx = correlation_sqrt(model.n_rx, model.spatial_r);
        l_tx_h = correlation_sqrt(model.n_tx, model.spatial_r).adjoint();
    }

    ChannelRealization h;
    h.taps.reserve(powers.size());
    for (double p : powers) {
        CMat w(model.n_rx, model.n_tx);
        for (int r = 0; r < model.n_rx; ++r)
            for (int a = 0; a < model.n_tx; ++a)
                w(r, a) = rng.next_cgauss(1.0);
        if (correlated) w = l_rx * w * l_tx_h;
        h.taps.push_back(std::sqrt(p) * w);
    }
    return h;
}

std::vector<CMat> frequency_response(const ChannelRealization& h, int n_fft,
                                     const std::vector<int>& bins) {
    if (h.num_taps() > n_fft)
        throw TooManyTaps("tap count " + std::to_string(h.num_taps()) +
                          " exceeds transform size " + std::to_string(n_fft));
    std::vector<CMat> response;
    response.reserve(bins.size());
    for (int k : bins) {
        CMat hk = CMat::Zero(h.taps[0].rows(), h.taps[0].cols());
        for (int l = 0; l < h.num_taps(); ++l)
            hk += h.taps[l] * std::polar(1.0, -2.0 * kPi * double(k) * double(l) / n_fft);
        response.push_back(std::move(hk));
    }
    return response;
}

CMat apply_channel(const CMat& h, const CMat& tx, NoiseSpec noise, Rng& rng) {
    if (h.cols() != tx.rows())
        throw DimensionMismatch("H is " + std::to_string(h.rows()) + "x" +
                                std::to_string(h.cols()) + " but tx has " +
                                std::to_string(tx.rows()) + " rows");
    CMat y = h * tx;
    if (noise.variance > 0.0)
        for (Eigen::Index c = 0; c < y.cols(); ++c)
            for (Eigen::Index r = 0; r < y.rows(); ++r)
                y(r, c) += rng.next_cgauss(noise.variance);
    return y;
}

std::vector<std::vector<cplx>> apply_time_domain(const ChannelRealization& h,
                                                 const std::vector<std::vector<cplx>>& tx,
                                                 NoiseSpec noise, Rng& rng) {
    const int n_tx = int(tx.size());
    const int n_rx = int(h.taps[0].rows());
    if (n_tx != int(h.taps[0].cols()))
        throw DimensionMismatch("stream count does not match the channel's transmit side");
    const size_t n = tx.empty() ? 0 : tx[0].size();
    for (const auto& s : tx)
        if (s.size() != n) throw LengthMismatch("transmit streams must have equal length");

    std::vector<std::vector<cplx>> rx(n_rx, std::vector<cplx>(n, cplx{0.0, 0.0}));
    for (int r = 0; r < n_rx; ++r) {
        auto& out = rx[r];
        for (int a = 0; a < n_tx; ++a) {
            const auto& in = tx[a];
            for (int l = 0; l < h.num_taps(); ++l) {
                const cplx g = h.taps[l](r, a);
                if (g == cplx{0.0, 0.0}) continue;
                for (size_t s = l; s < n; ++s)
                    out[s] += g * in[s - l];
            }
        }
        if (noise.variance > 0.0)
            for (size_t s = 0; s < n; ++s)
                out[s] += rng.next_cgauss(noise.variance);
    }
    return rx;
}

CMat exponential_correlation(int n, double r) {
    CMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m(i, j) = std::pow(r, std::abs(i - j));
    return m;
}

CMat correlation_matrix(const ChannelModel& model) {
    model.validate();
    return double(model.n_rx) * exponential_correlation(model.n_tx, model.spatial_r);
}

CMat estimate_correlation_matrix(const ChannelModel& model, int draws, Rng& rng) {
    model.validate();
    CMat acc = CMat::Zero(model.n_tx, model.n_tx);
    for (int i = 0; i < draws; ++i) {
        const auto h = draw_channel(model, rng);
        CMat h0 = CMat::Zero(model.n_rx, model.n_tx);
        for (const auto& tap : h.taps) h0 += tap; // response at bin 0
        acc += h0.adjoint() * h0;
    }
    return acc / double(draws);
}

} // namespace mclink::channel
