#include "nbldpc/sim.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <stdexcept>
#include <thread>

#include "nbldpc/rng.hpp"

namespace nbldpc {

const char* modulation_name(Modulation m) {
    return m == Modulation::Bpsk ? "bpsk" : "qam16";
}

ModulationScheme modulation_scheme(Modulation m) {
    return m == Modulation::Bpsk ? ModulationScheme::bpsk() : ModulationScheme::qam16();
}

std::string decoder_token(const DecoderConfig& decoder) {
    switch (decoder.rule) {
        case Rule::SumProduct: return "sp";
        case Rule::MinSum: return "ms";
        case Rule::MinSum0: return "ms0";
        case Rule::MinSumStar: return "mss";
        case Rule::PNorm: {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "pnorm:%g", decoder.p);
            return buf;
        }
        case Rule::Euclidean: return "euclid";
        case Rule::MinMaxStandard: return "minmax";
        case Rule::MinMaxSelective: return "minmax-sel";
    }
    return "?";
}

FrameOutcome run_frame(const Code& code, const SystematicForm& sf, const ModulationScheme& scheme,
                       const DecoderConfig& decoder, double sigma, std::uint64_t seed,
                       std::uint64_t snr_index, std::uint64_t frame_index) {
    const Field& field = code.field();
    std::mt19937_64 rng = stream_rng(seed, snr_index, frame_index);

    std::vector<Symbol> info(sf.info_cols.size());
    for (auto& s : info)
        s = static_cast<Symbol>(uniform_below(rng, static_cast<std::uint64_t>(field.q())));
    FrameOutcome out;
    out.transmitted = encode(code, sf, info);

    std::vector<std::complex<double>> samples = modulate(out.transmitted, scheme);
    add_awgn(samples, sigma, rng);

    IntrinsicInfo intrinsic =
        compute_intrinsic(samples, sigma, scheme, rule_convention(decoder.rule));
    if (decoder.rule == Rule::MinMaxSelective)
        intrinsic = normalize_intrinsic_ai(intrinsic, decoder.ai);

    DecodeResult res = decode(code, intrinsic, decoder);
    out.decoded = res.hard_decision;
    out.iterations = res.iterations_used;
    out.converged = res.converged;
    out.ops = res.ops;
    out.frame_error = (out.decoded != out.transmitted);
    for (int col : sf.info_cols)
        out.info_bit_errors += static_cast<std::uint64_t>(
            std::popcount(static_cast<unsigned>(out.transmitted[col] ^ out.decoded[col])));
    return out;
}

std::vector<SimRecord> run_sweep(const Code& code, const SimConfig& config) {
    const Field& field = code.field();
    ModulationScheme scheme = modulation_scheme(config.modulation);
    if (scheme.q != field.q())
        throw std::invalid_argument("run_sweep: " + scheme.name + " carries " +
                                    std::to_string(scheme.q) + "-ary symbols but the code is over GF(" +
                                    std::to_string(field.q()) + ")");
    if (config.ebno_db.empty())
        throw std::invalid_argument("run_sweep: no Eb/N0 points requested");
    if (config.max_frames < 1)
        throw std::invalid_argument("run_sweep: max_frames must be >= 1");
    if (config.workers < 1)
        throw std::invalid_argument("run_sweep: workers must be >= 1");

    SystematicForm sf = systematic_form(code);
    const int k_info = code.num_vars() - sf.rank;
    if (k_info <= 0)
        throw std::invalid_argument("run_sweep: the code has no information symbols (rank = N)");
    if (sf.rank < code.num_checks())
        std::cerr << "run_sweep: parity-check matrix is rank-deficient (rank " << sf.rank << " of "
                  << code.num_checks() << " rows); using K = " << k_info << "\n";
    const double rate = static_cast<double>(k_info) / code.num_vars();
    const double bits_per_frame = static_cast<double>(k_info) * field.p();

    const int workers = config.workers;
    const std::uint64_t block = static_cast<std::uint64_t>(workers) * 8;

    std::vector<SimRecord> records;
    for (std::size_t si = 0; si < config.ebno_db.size(); ++si) {
        const double ebno = config.ebno_db[si];
        const double sigma = ebno_to_sigma(ebno, rate, scheme.bits_per_symbol);

        SimRecord rec;
        rec.ebno_db = ebno;
        rec.decoder = decoder_token(config.decoder);
        std::uint64_t iter_sum = 0;
        OpCounter ops_sum;

        std::uint64_t next_frame = 0;
        bool done = false;
        while (!done && next_frame < config.max_frames) {
            const std::uint64_t count = std::min(block, config.max_frames - next_frame);
            std::vector<FrameOutcome> outcomes(count);
            auto worker = [&](int w) {
                for (std::uint64_t i = static_cast<std::uint64_t>(w); i < count;
                     i += static_cast<std::uint64_t>(workers))
                    outcomes[i] = run_frame(code, sf, scheme, config.decoder, sigma, config.seed,
                                            si, next_frame + i);
            };
            if (workers == 1) {
                worker(0);
            } else {
                std::vector<std::thread> pool;
                pool.reserve(workers);
                for (int w = 0; w < workers; ++w) pool.emplace_back(worker, w);
                for (auto& t : pool) t.join();
            }
            // Fold in frame order so the stopping point is scheduling-free.
            for (std::uint64_t i = 0; i < count; ++i) {
                const FrameOutcome& fo = outcomes[i];
                ++rec.frames;
                rec.bit_errors += fo.info_bit_errors;
                rec.frame_errors += fo.frame_error ? 1 : 0;
                iter_sum += static_cast<std::uint64_t>(fo.iterations);
                ops_sum += fo.ops;
                if (rec.frame_errors >= config.max_frame_errors) {
                    done = true;
                    break;
                }
            }
            next_frame += count;
        }

        const double denom = static_cast<double>(rec.frames) * bits_per_frame;
        rec.ber = rec.frames ? static_cast<double>(rec.bit_errors) / denom : 0.0;
        rec.fer = rec.frames ? static_cast<double>(rec.frame_errors) / rec.frames : 0.0;
        rec.avg_iterations = rec.frames ? static_cast<double>(iter_sum) / rec.frames : 0.0;
        rec.additions_per_bit = rec.frames ? static_cast<double>(ops_sum.additions) / denom : 0.0;
        rec.comparisons_per_bit =
            rec.frames ? static_cast<double>(ops_sum.comparisons) / denom : 0.0;
        rec.multiplications_per_bit =
            rec.frames ? static_cast<double>(ops_sum.multiplications) / denom : 0.0;
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<SimRecord> run_sweep(const SimConfig& config) {
    if (config.generate != config.code_path.empty()) {
        // Exactly one source must be set: either a path or the generator.
        if (config.generate)
            throw std::invalid_argument("run_sweep: give either a code file or generator settings, not both");
        throw std::invalid_argument("run_sweep: no code file and no generator settings");
    }
    if (config.generate) {
        int p = 0;
        while ((1 << p) < config.gen_q) ++p;
        if (config.gen_q < 2 || (1 << p) != config.gen_q)
            throw std::invalid_argument("run_sweep: generator q must be a power of two in [2, 256]");
        Field field(p);
        Code code = random_regular_code(field, config.gen_n, config.gen_dv, config.gen_dc,
                                        config.seed);
        return run_sweep(code, config);
    }
    Code code = load_code_file(config.code_path);
    return run_sweep(code, config);
}

std::string emit_csv(const std::vector<SimRecord>& records) {
    std::string out =
        "ebno_db,decoder,frames,bit_errors,frame_errors,ber,fer,avg_iterations,"
        "additions_per_bit,comparisons_per_bit,multiplications_per_bit\n";
    char buf[512];
    for (const SimRecord& r : records) {
        std::snprintf(buf, sizeof(buf), "%.6g,%s,%llu,%llu,%llu,%.6g,%.6g,%.6g,%.6g,%.6g,%.6g\n",
                      r.ebno_db, r.decoder.c_str(), static_cast<unsigned long long>(r.frames),
                      static_cast<unsigned long long>(r.bit_errors),
                      static_cast<unsigned long long>(r.frame_errors), r.ber, r.fer,
                      r.avg_iterations, r.additions_per_bit, r.comparisons_per_bit,
                      r.multiplications_per_bit);
        out += buf;
    }
    return out;
}

std::pair<double, double> wilson_interval(std::uint64_t errors, std::uint64_t trials, double z) {
    if (trials == 0) return {0.0, 1.0};
    const double n = static_cast<double>(trials);
    const double phat = static_cast<double>(errors) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (phat + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

}  // namespace nbldpc
