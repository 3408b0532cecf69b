#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nbldpc/channel.hpp"
#include "nbldpc/code.hpp"
#include "nbldpc/decoder.hpp"

namespace nbldpc {

enum class Modulation { Bpsk, Qam16 };

const char* modulation_name(Modulation m);
ModulationScheme modulation_scheme(Modulation m);

/// Monte Carlo sweep description. Either `code_path` names an NBALIST file
/// or `generate` requests a random regular code from (gen_n, gen_dv,
/// gen_dc, gen_q) seeded from `seed`.
struct SimConfig {
    std::string code_path;
    bool generate = false;
    int gen_n = 0, gen_dv = 0, gen_dc = 0, gen_q = 0;

    DecoderConfig decoder;
    Modulation modulation = Modulation::Qam16;
    std::vector<double> ebno_db;
    std::uint64_t max_frames = 1000;
    std::uint64_t max_frame_errors = 100;
    std::uint64_t seed = 1;
    int workers = 1;
};

/// Aggregates of one (Eb/N0, decoder) operating point.
struct SimRecord {
    double ebno_db = 0.0;
    std::string decoder;
    std::uint64_t frames = 0;
    std::uint64_t bit_errors = 0;
    std::uint64_t frame_errors = 0;
    double ber = 0.0;  // bit_errors / (frames * K * p)
    double fer = 0.0;  // frame_errors / frames
    double avg_iterations = 0.0;
    double additions_per_bit = 0.0;
    double comparisons_per_bit = 0.0;
    double multiplications_per_bit = 0.0;
};

/// One transmitted frame: random information symbols, encode, modulate,
/// AWGN, intrinsic (AI-normalized first for the selective rule), decode.
struct FrameOutcome {
    bool frame_error = false;
    std::uint64_t info_bit_errors = 0;
    int iterations = 0;
    bool converged = false;
    OpCounter ops;
    std::vector<Symbol> transmitted;
    std::vector<Symbol> decoded;
};

/// Runs frame `frame_index` of SNR point `snr_index`. The noise stream
/// depends only on (seed, snr_index, frame_index), so different decoder
/// configurations see identical transmissions and outcomes are independent
/// of scheduling.
FrameOutcome run_frame(const Code& code, const SystematicForm& sf, const ModulationScheme& scheme,
                       const DecoderConfig& decoder, double sigma, std::uint64_t seed,
                       std::uint64_t snr_index, std::uint64_t frame_index);

/// Full sweep over config.ebno_db on an already-loaded code. Frames are
/// processed in blocks across `workers` threads and folded in frame order,
/// so results are byte-identical for any worker count. Each point stops at
/// max_frames or once max_frame_errors is reached.
std::vector<SimRecord> run_sweep(const Code& code, const SimConfig& config);

/// Convenience overload that loads or generates the code per the config.
std::vector<SimRecord> run_sweep(const SimConfig& config);

/// CSV with a fixed header and one row per record; floats via "%.6g".
std::string emit_csv(const std::vector<SimRecord>& records);

/// Wilson score interval for a binomial proportion at normal quantile z
/// (1.96 for 95%). Returns {low, high}; {0, 1} when trials == 0.
std::pair<double, double> wilson_interval(std::uint64_t errors, std::uint64_t trials,
                                          double z = 1.96);

/// CLI token of a decoder configuration ("sp", "ms", "pnorm:2.5", ...).
std::string decoder_token(const DecoderConfig& decoder);

}  // namespace nbldpc
