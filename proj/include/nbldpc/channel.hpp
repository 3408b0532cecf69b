#pragma once

#include <complex>
#include <random>
#include <string>
#include <vector>

#include "nbldpc/gf.hpp"

namespace nbldpc {

/// Normalization discipline of an intrinsic (or extrinsic) metric row.
///   LogProb: negative log-likelihoods shifted once at initialization so the
///            row minimum is 0; no further per-iteration shifting.
///   ZeroRef: values relative to symbol 0 (row[0] == 0, entries may be
///            negative).
///   StarRef: values relative to the row minimum (min == 0, all entries
///            nonnegative).
enum class Convention { LogProb, ZeroRef, StarRef };

const char* convention_name(Convention c);

/// Channel metrics gamma_n(a) for every variable node, row-major N x q.
/// Smaller always means more likely.
struct IntrinsicInfo {
    int num_vars = 0;
    int q = 0;
    Convention convention = Convention::StarRef;
    double sigma = 0.0;
    std::vector<double> gamma;  // num_vars * q

    double& at(int n, int a) { return gamma[static_cast<std::size_t>(n) * q + a]; }
    double at(int n, int a) const { return gamma[static_cast<std::size_t>(n) * q + a]; }
    const double* row(int n) const { return gamma.data() + static_cast<std::size_t>(n) * q; }
    double* row(int n) { return gamma.data() + static_cast<std::size_t>(n) * q; }
};

/// Memoryless symbol mapping onto the complex plane. `real_only` marks
/// one-dimensional constellations whose distance metric ignores the
/// quadrature component.
struct ModulationScheme {
    std::string name;
    int q = 0;
    int bits_per_symbol = 0;
    bool real_only = false;
    std::vector<std::complex<double>> points;

    /// 0 -> +1, 1 -> -1 on the real axis.
    static ModulationScheme bpsk();

    /// 16-QAM, Gray-labeled per axis: bits b3 b2 select the in-phase level
    /// and b1 b0 the quadrature level through 00 -> -3, 01 -> -1,
    /// 11 -> +1, 10 -> +3, scaled by 1/sqrt(10) for unit average energy.
    static ModulationScheme qam16();
};

/// Noise scale from Eb/N0 in dB: sigma^2 = 1 / (2 * rate * bits * 10^(ebno/10)),
/// sigma being the per-real-dimension standard deviation.
double ebno_to_sigma(double ebno_db, double rate, int bits_per_symbol);

/// Maps symbols through the scheme. Throws if a symbol is outside [0, q).
std::vector<std::complex<double>> modulate(const std::vector<Symbol>& word,
                                           const ModulationScheme& scheme);

/// Adds independent N(0, sigma^2) noise to each real dimension in place.
/// For real_only schemes the imaginary part is still perturbed; the metric
/// below ignores it.
void add_awgn(std::vector<std::complex<double>>& samples, double sigma, std::mt19937_64& rng);

/// Squared-distance channel metrics d_n(a) = ||y_n - s(a)||^2 / (2 sigma^2)
/// under the requested convention. Throws std::invalid_argument when
/// sigma <= 0.
IntrinsicInfo compute_intrinsic(const std::vector<std::complex<double>>& observations,
                                double sigma, const ModulationScheme& scheme,
                                Convention convention);

}  // namespace nbldpc
