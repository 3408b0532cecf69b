// Monte Carlo error-rate sweeps for q-ary LDPC decoders.
//
// Examples:
//   nbldpc_sim --code code.nbalist --decoder minmax --mod qam16 --ebno 4:7:0.5
//   nbldpc_sim --gen 96,2,4,16 --decoder minmax-sel --mod qam16 --ebno 6 \
//              --frames 2000 --workers 8 --out sweep.csv

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "nbldpc/sim.hpp"

using namespace nbldpc;

namespace {

std::vector<double> parse_ebno(const std::string& text) {
    // "A" or "A:B:STEP" (inclusive endpoints, STEP > 0).
    std::vector<double> points;
    double a = 0, b = 0, step = 0;
    char extra = 0;
    if (std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &a, &b, &step, &extra) == 3) {
        if (step <= 0) throw CLI::ValidationError("--ebno", "step must be > 0");
        if (b < a) throw CLI::ValidationError("--ebno", "range end is below its start");
        for (double x = a; x <= b + 1e-9; x += step) points.push_back(x);
        return points;
    }
    if (std::sscanf(text.c_str(), "%lf%c", &a, &extra) == 1) return {a};
    throw CLI::ValidationError("--ebno", "expected A or A:B:STEP");
}

DecoderConfig parse_decoder(const std::string& token) {
    DecoderConfig d;
    if (token == "sp") d.rule = Rule::SumProduct;
    else if (token == "ms") d.rule = Rule::MinSum;
    else if (token == "ms0") d.rule = Rule::MinSum0;
    else if (token == "mss") d.rule = Rule::MinSumStar;
    else if (token == "euclid") d.rule = Rule::Euclidean;
    else if (token == "minmax") d.rule = Rule::MinMaxStandard;
    else if (token == "minmax-sel") d.rule = Rule::MinMaxSelective;
    else if (token.rfind("pnorm:", 0) == 0) {
        d.rule = Rule::PNorm;
        char extra = 0;
        if (std::sscanf(token.c_str() + 6, "%lf%c", &d.p, &extra) != 1 || !(d.p >= 1.0))
            throw CLI::ValidationError("--decoder", "pnorm:P needs a numeric P >= 1");
    } else {
        throw CLI::ValidationError(
            "--decoder", "expected sp, ms, ms0, mss, pnorm:P, euclid, minmax or minmax-sel");
    }
    return d;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monte Carlo BER/FER sweeps for q-ary LDPC decoders"};

    std::string code_path, gen_spec, decoder_token_arg = "minmax", mod = "qam16";
    std::string ebno_spec, out_path;
    SimConfig config;
    int iters = 200;
    double ai = 12.0, cot = 31.0;

    auto* code_opt = app.add_option("--code", code_path, "NBALIST parity-check file");
    auto* gen_opt =
        app.add_option("--gen", gen_spec, "Generate a random regular code: N,dv,dc,q");
    code_opt->excludes(gen_opt);
    gen_opt->excludes(code_opt);
    app.add_option("--decoder", decoder_token_arg,
                   "sp | ms | ms0 | mss | pnorm:P | euclid | minmax | minmax-sel")
        ->capture_default_str();
    app.add_option("--mod", mod, "bpsk | qam16")->check(CLI::IsMember({"bpsk", "qam16"}))
        ->capture_default_str();
    app.add_option("--ebno", ebno_spec, "Eb/N0 in dB: A or A:B:STEP")->required();
    app.add_option("--frames", config.max_frames, "Frames per point")->capture_default_str();
    app.add_option("--max-fe", config.max_frame_errors, "Stop a point after this many frame errors")
        ->capture_default_str();
    app.add_option("--iters", iters, "Decoder iteration limit")->capture_default_str();
    app.add_option("--ai", ai, "Selective a-priori scale target")->capture_default_str();
    app.add_option("--cot", cot, "Selective cut-off threshold")->capture_default_str();
    app.add_option("--seed", config.seed, "Master seed")->capture_default_str();
    app.add_option("--workers", config.workers, "Worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--out", out_path, "Write the CSV here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!gen_spec.empty()) {
            int n = 0, dv = 0, dc = 0, q = 0;
            char extra = 0;
            if (std::sscanf(gen_spec.c_str(), "%d,%d,%d,%d%c", &n, &dv, &dc, &q, &extra) != 4)
                throw std::invalid_argument("--gen expects N,dv,dc,q");
            config.generate = true;
            config.gen_n = n;
            config.gen_dv = dv;
            config.gen_dc = dc;
            config.gen_q = q;
        } else if (!code_path.empty()) {
            config.code_path = code_path;
        } else {
            throw std::invalid_argument("one of --code or --gen is required");
        }

        config.decoder = parse_decoder(decoder_token_arg);
        config.decoder.max_iterations = iters;
        config.decoder.ai = ai;
        config.decoder.cot = cot;
        config.modulation = (mod == "bpsk") ? Modulation::Bpsk : Modulation::Qam16;
        config.ebno_db = parse_ebno(ebno_spec);

        std::string csv = emit_csv(run_sweep(config));
        if (out_path.empty()) {
            std::cout << csv;
        } else {
            std::ofstream out(out_path);
            if (!out) throw std::runtime_error("cannot open " + out_path + " for writing");
            out << csv;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
