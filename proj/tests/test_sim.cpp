#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "nbldpc/sim.hpp"

using namespace nbldpc;

namespace {

SimConfig base_config() {
    SimConfig c;
    c.generate = true;
    c.gen_n = 24;
    c.gen_dv = 2;
    c.gen_dc = 4;
    c.gen_q = 2;
    c.decoder.rule = Rule::MinMaxStandard;
    c.decoder.max_iterations = 30;
    c.modulation = Modulation::Bpsk;
    c.max_frames = 40;
    c.max_frame_errors = 1000;
    c.seed = 9;
    return c;
}

}  // namespace

TEST_CASE("identical transmissions for identical frame coordinates") {
    Code code = random_regular_code(Field(1), 24, 2, 4, 9);
    SystematicForm sf = systematic_form(code);
    ModulationScheme scheme = modulation_scheme(Modulation::Bpsk);
    DecoderConfig mm;
    mm.rule = Rule::MinMaxStandard;
    DecoderConfig ms;
    ms.rule = Rule::MinSum;

    auto a = run_frame(code, sf, scheme, mm, 0.8, 5, 0, 17);
    auto b = run_frame(code, sf, scheme, mm, 0.8, 5, 0, 17);
    CHECK(a.transmitted == b.transmitted);
    CHECK(a.decoded == b.decoded);
    CHECK(a.info_bit_errors == b.info_bit_errors);

    // A different decoder on the same coordinates sees the same codeword.
    auto c = run_frame(code, sf, scheme, ms, 0.8, 5, 0, 17);
    CHECK(c.transmitted == a.transmitted);

    // Different coordinates give a different transmission (overwhelmingly).
    auto d = run_frame(code, sf, scheme, mm, 0.8, 5, 0, 18);
    auto e = run_frame(code, sf, scheme, mm, 0.8, 5, 1, 17);
    CHECK(d.transmitted != e.transmitted);
}

TEST_CASE("noiseless operating point decodes every frame") {
    SimConfig c = base_config();
    c.ebno_db = {60.0};
    auto records = run_sweep(c);
    REQUIRE(records.size() == 1);
    CHECK(records[0].frames == 40);
    CHECK(records[0].frame_errors == 0);
    CHECK(records[0].bit_errors == 0);
    CHECK(records[0].fer == 0.0);
    CHECK(records[0].ber == 0.0);
    CHECK(records[0].avg_iterations == 1.0);
    CHECK(records[0].additions_per_bit > 0.0);
}

TEST_CASE("worker count does not change the emitted CSV") {
    SimConfig c = base_config();
    c.ebno_db = {2.0, 5.0};
    c.max_frames = 60;
    auto one = run_sweep(c);
    c.workers = 8;
    auto eight = run_sweep(c);
    CHECK(emit_csv(one) == emit_csv(eight));

    // And with an early stop on frame errors.
    c.ebno_db = {0.0};
    c.max_frame_errors = 5;
    c.max_frames = 500;
    auto stopped8 = run_sweep(c);
    c.workers = 1;
    auto stopped1 = run_sweep(c);
    CHECK(emit_csv(stopped1) == emit_csv(stopped8));
    CHECK(stopped1[0].frame_errors >= 5);
    CHECK(stopped1[0].frames < 500);
}

TEST_CASE("CSV layout") {
    SimConfig c = base_config();
    c.ebno_db = {60.0};
    auto records = run_sweep(c);
    std::string csv = emit_csv(records);
    std::istringstream in(csv);
    std::string header, row, extra;
    REQUIRE(std::getline(in, header));
    CHECK(header ==
          "ebno_db,decoder,frames,bit_errors,frame_errors,ber,fer,avg_iterations,"
          "additions_per_bit,comparisons_per_bit,multiplications_per_bit");
    REQUIRE(std::getline(in, row));
    CHECK(row.substr(0, 10) == "60,minmax,");
    CHECK_FALSE(std::getline(in, extra));
    int commas = 0;
    for (char ch : row) commas += ch == ',';
    CHECK(commas == 10);
}

TEST_CASE("decoder tokens") {
    DecoderConfig d;
    d.rule = Rule::SumProduct;
    CHECK(decoder_token(d) == "sp");
    d.rule = Rule::MinSum;
    CHECK(decoder_token(d) == "ms");
    d.rule = Rule::MinSum0;
    CHECK(decoder_token(d) == "ms0");
    d.rule = Rule::MinSumStar;
    CHECK(decoder_token(d) == "mss");
    d.rule = Rule::PNorm;
    d.p = 2.5;
    CHECK(decoder_token(d) == "pnorm:2.5");
    d.rule = Rule::Euclidean;
    CHECK(decoder_token(d) == "euclid");
    d.rule = Rule::MinMaxStandard;
    CHECK(decoder_token(d) == "minmax");
    d.rule = Rule::MinMaxSelective;
    CHECK(decoder_token(d) == "minmax-sel");
}

TEST_CASE("sweep configuration validation") {
    SimConfig c = base_config();
    c.ebno_db = {1.0};
    c.generate = false;  // neither a path nor generation
    CHECK_THROWS_AS(run_sweep(c), std::invalid_argument);
    c.generate = true;
    c.code_path = "/nonexistent/x.nbalist";  // both
    CHECK_THROWS_AS(run_sweep(c), std::invalid_argument);

    // Modulation alphabet must match the code's field.
    c.code_path.clear();
    c.modulation = Modulation::Qam16;  // q = 16 vs code q = 4
    CHECK_THROWS_AS(run_sweep(c), std::invalid_argument);

    c = base_config();
    c.ebno_db = {};
    CHECK_THROWS_AS(run_sweep(c), std::invalid_argument);

    c = base_config();
    c.ebno_db = {1.0};
    c.workers = 0;
    CHECK_THROWS_AS(run_sweep(c), std::invalid_argument);
    c.workers = 1;
    c.max_frames = 0;
    CHECK_THROWS_AS(run_sweep(c), std::invalid_argument);
}

TEST_CASE("binomial interval sanity") {
    auto [lo0, hi0] = wilson_interval(0, 0);
    CHECK(lo0 == 0.0);
    CHECK(hi0 == 1.0);

    auto [lo, hi] = wilson_interval(10, 100);
    CHECK(lo > 0.04);
    CHECK(lo < 0.10);
    CHECK(hi > 0.10);
    CHECK(hi < 0.20);

    auto [la, ha] = wilson_interval(0, 50);
    CHECK(la == 0.0);
    CHECK(ha < 0.10);
    auto [lb, hb] = wilson_interval(50, 50);
    CHECK(lb > 0.90);
    CHECK(hb == 1.0);

    // Wider z never shrinks the interval.
    auto [lc, hc] = wilson_interval(10, 100, 2.58);
    CHECK(lc <= lo);
    CHECK(hc >= hi);
}

TEST_CASE("selective decoding spends fewer comparisons at a working point") {
    SimConfig c;
    c.generate = true;
    c.gen_n = 32;
    c.gen_dv = 2;
    c.gen_dc = 4;
    c.gen_q = 16;
    c.modulation = Modulation::Qam16;
    c.ebno_db = {7.0};
    c.max_frames = 30;
    c.max_frame_errors = 1000;
    c.seed = 4;
    c.decoder.rule = Rule::MinMaxStandard;
    c.decoder.max_iterations = 50;
    auto standard = run_sweep(c);
    c.decoder.rule = Rule::MinMaxSelective;
    auto selective = run_sweep(c);
    REQUIRE(standard.size() == 1);
    REQUIRE(selective.size() == 1);
    CHECK(selective[0].comparisons_per_bit < standard[0].comparisons_per_bit);
}

TEST_CASE("frame accounting uses information bits") {
    // The sweep must normalize by information bits: K = N - rank symbols,
    // one bit each over GF(2). Uses the same generator seed as base_config.
    Code code = random_regular_code(Field(1), 24, 2, 4, 9);
    SystematicForm sf = systematic_form(code);
    const std::uint64_t info_bits = static_cast<std::uint64_t>(24 - sf.rank);

    SimConfig c = base_config();
    c.ebno_db = {-3.0};  // noisy enough to produce errors
    c.max_frames = 50;
    auto rec = run_sweep(c)[0];
    CHECK(rec.frame_errors > 0);
    CHECK(rec.bit_errors > 0);
    CHECK(rec.bit_errors <= rec.frames * info_bits);
    CHECK(rec.ber == doctest::Approx(static_cast<double>(rec.bit_errors) /
                                     static_cast<double>(rec.frames * info_bits)));
    CHECK(rec.fer == doctest::Approx(static_cast<double>(rec.frame_errors) /
                                     static_cast<double>(rec.frames)));
}
