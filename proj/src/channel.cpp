#include "nbldpc/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nbldpc {

const char* convention_name(Convention c) {
    switch (c) {
        case Convention::LogProb: return "LOGPROB";
        case Convention::ZeroRef: return "ZERO_REF";
        case Convention::StarRef: return "STAR_REF";
    }
    return "?";
}

ModulationScheme ModulationScheme::bpsk() {
    ModulationScheme s;
    s.name = "bpsk";
    s.q = 2;
    s.bits_per_symbol = 1;
    s.real_only = true;
    s.points = {{1.0, 0.0}, {-1.0, 0.0}};
    return s;
}

ModulationScheme ModulationScheme::qam16() {
    ModulationScheme s;
    s.name = "qam16";
    s.q = 16;
    s.bits_per_symbol = 4;
    s.real_only = false;
    // Gray map per axis: 00 -> -3, 01 -> -1, 11 -> +1, 10 -> +3.
    static const double level[4] = {-3.0, -1.0, +3.0, +1.0};
    const double scale = 1.0 / std::sqrt(10.0);
    s.points.resize(16);
    for (int sym = 0; sym < 16; ++sym) {
        double i = level[(sym >> 2) & 3];
        double q = level[sym & 3];
        s.points[sym] = {i * scale, q * scale};
    }
    return s;
}

double ebno_to_sigma(double ebno_db, double rate, int bits_per_symbol) {
    if (rate <= 0.0 || bits_per_symbol < 1)
        throw std::invalid_argument("ebno_to_sigma: rate and bits per symbol must be positive");
    double ebno = std::pow(10.0, ebno_db / 10.0);
    return std::sqrt(1.0 / (2.0 * rate * bits_per_symbol * ebno));
}

std::vector<std::complex<double>> modulate(const std::vector<Symbol>& word,
                                           const ModulationScheme& scheme) {
    std::vector<std::complex<double>> out;
    out.reserve(word.size());
    for (Symbol s : word) {
        if (s >= scheme.points.size())
            throw std::invalid_argument("modulate: symbol " + std::to_string(int(s)) +
                                        " outside the " + scheme.name + " alphabet");
        out.push_back(scheme.points[s]);
    }
    return out;
}

void add_awgn(std::vector<std::complex<double>>& samples, double sigma, std::mt19937_64& rng) {
    if (sigma < 0.0) throw std::invalid_argument("add_awgn: negative sigma");
    if (sigma == 0.0) return;
    std::normal_distribution<double> gauss(0.0, sigma);
    for (auto& y : samples) y += std::complex<double>(gauss(rng), gauss(rng));
}

IntrinsicInfo compute_intrinsic(const std::vector<std::complex<double>>& observations,
                                double sigma, const ModulationScheme& scheme,
                                Convention convention) {
    if (sigma <= 0.0)
        throw std::invalid_argument("compute_intrinsic: sigma must be positive");
    const int q = scheme.q;
    IntrinsicInfo info;
    info.num_vars = static_cast<int>(observations.size());
    info.q = q;
    info.convention = convention;
    info.sigma = sigma;
    info.gamma.resize(observations.size() * static_cast<std::size_t>(q));
    const double inv2s2 = 1.0 / (2.0 * sigma * sigma);
    for (std::size_t n = 0; n < observations.size(); ++n) {
        double* row = info.gamma.data() + n * q;
        for (int a = 0; a < q; ++a) {
            double d2;
            if (scheme.real_only) {
                double dx = observations[n].real() - scheme.points[a].real();
                d2 = dx * dx;
            } else {
                d2 = std::norm(observations[n] - scheme.points[a]);
            }
            row[a] = d2 * inv2s2;
        }
        double ref = (convention == Convention::ZeroRef)
                         ? row[0]
                         : *std::min_element(row, row + q);
        for (int a = 0; a < q; ++a) row[a] -= ref;
    }
    return info;
}

}  // namespace nbldpc
