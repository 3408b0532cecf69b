#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <set>

#include "nbldpc/channel.hpp"
#include "nbldpc/rng.hpp"

using namespace nbldpc;

TEST_CASE("ebno_to_sigma reference values") {
    // 0 dB, rate 1/2, 1 bit/symbol: sigma^2 = 1
    CHECK(ebno_to_sigma(0.0, 0.5, 1) == doctest::Approx(1.0).epsilon(1e-12));
    // 3 dB, rate 1/2, 4 bits/symbol: sigma^2 = 1 / (4 * 10^0.3)
    double s = ebno_to_sigma(3.0, 0.5, 4);
    CHECK(s * s == doctest::Approx(0.1252968084068181).epsilon(1e-12));
    // monotone decreasing in Eb/N0
    CHECK(ebno_to_sigma(10.0, 0.5, 4) < ebno_to_sigma(2.0, 0.5, 4));
    CHECK_THROWS_AS(ebno_to_sigma(0.0, 0.0, 4), std::invalid_argument);
    CHECK_THROWS_AS(ebno_to_sigma(0.0, 0.5, 0), std::invalid_argument);
}

TEST_CASE("BPSK maps 0 to +1 and 1 to -1") {
    auto bpsk = ModulationScheme::bpsk();
    CHECK(bpsk.q == 2);
    CHECK(bpsk.bits_per_symbol == 1);
    CHECK(bpsk.real_only);
    CHECK(bpsk.points[0] == std::complex<double>(1.0, 0.0));
    CHECK(bpsk.points[1] == std::complex<double>(-1.0, 0.0));
}

TEST_CASE("16-QAM constellation geometry") {
    auto qam = ModulationScheme::qam16();
    CHECK(qam.q == 16);
    CHECK(qam.bits_per_symbol == 4);
    CHECK(!qam.real_only);

    std::set<std::pair<double, double>> distinct;
    double energy = 0.0;
    for (auto pt : qam.points) {
        distinct.insert({pt.real(), pt.imag()});
        energy += std::norm(pt);
    }
    CHECK(distinct.size() == 16);
    CHECK(energy / 16.0 == doctest::Approx(1.0).epsilon(1e-12));

    // Gray property: horizontally or vertically adjacent points differ in
    // exactly one of the four label bits.
    const double step = 2.0 / std::sqrt(10.0);
    int adjacent_pairs = 0;
    for (int a = 0; a < 16; ++a)
        for (int b = a + 1; b < 16; ++b) {
            double dx = std::abs(qam.points[a].real() - qam.points[b].real());
            double dy = std::abs(qam.points[a].imag() - qam.points[b].imag());
            bool neighbor = (dx < 1e-12 && std::abs(dy - step) < 1e-12) ||
                            (dy < 1e-12 && std::abs(dx - step) < 1e-12);
            if (neighbor) {
                ++adjacent_pairs;
                int diff = a ^ b;
                CHECK((diff & (diff - 1)) == 0);  // single bit
            }
        }
    CHECK(adjacent_pairs == 24);  // 2 * 4 * 3 edges in a 4x4 grid
}

TEST_CASE("modulate validates the alphabet") {
    auto bpsk = ModulationScheme::bpsk();
    CHECK(modulate({0, 1, 0}, bpsk).size() == 3);
    CHECK_THROWS_AS(modulate({0, 2}, bpsk), std::invalid_argument);
}

TEST_CASE("awgn is deterministic per seed and has the right scale") {
    auto rng1 = stream_rng(11, 0, 0);
    auto rng2 = stream_rng(11, 0, 0);
    std::vector<std::complex<double>> a(64, {0.0, 0.0}), b(64, {0.0, 0.0});
    add_awgn(a, 0.7, rng1);
    add_awgn(b, 0.7, rng2);
    CHECK(a == b);

    auto rng3 = stream_rng(12, 0, 0);
    std::vector<std::complex<double>> c(200000, {0.0, 0.0});
    add_awgn(c, 0.5, rng3);
    double var = 0.0;
    for (auto y : c) var += y.real() * y.real() + y.imag() * y.imag();
    var /= 2.0 * c.size();
    CHECK(var == doctest::Approx(0.25).epsilon(0.01));

    std::vector<std::complex<double>> d(8, {1.0, -1.0});
    add_awgn(d, 0.0, rng3);
    CHECK(d == std::vector<std::complex<double>>(8, {1.0, -1.0}));
}

TEST_CASE("intrinsic conventions") {
    auto qam = ModulationScheme::qam16();
    auto rng = stream_rng(3, 1, 4);
    std::vector<Symbol> word{0, 5, 11, 15, 7, 2};
    auto tx = modulate(word, qam);
    add_awgn(tx, 0.4, rng);

    auto star = compute_intrinsic(tx, 0.4, qam, Convention::StarRef);
    auto zero = compute_intrinsic(tx, 0.4, qam, Convention::ZeroRef);
    auto logp = compute_intrinsic(tx, 0.4, qam, Convention::LogProb);

    for (int n = 0; n < star.num_vars; ++n) {
        double mn = *std::min_element(star.row(n), star.row(n) + 16);
        CHECK(mn == doctest::Approx(0.0));
        for (int a = 0; a < 16; ++a) CHECK(star.at(n, a) >= 0.0);
        CHECK(zero.at(n, 0) == 0.0);
        // STAR_REF row equals the ZERO_REF row minus its minimum
        double zmin = *std::min_element(zero.row(n), zero.row(n) + 16);
        for (int a = 0; a < 16; ++a)
            CHECK(star.at(n, a) == doctest::Approx(zero.at(n, a) - zmin).epsilon(1e-12));
        // LOGPROB is initialized STAR-shifted, so the two coincide here
        for (int a = 0; a < 16; ++a) CHECK(logp.at(n, a) == star.at(n, a));
    }
}

TEST_CASE("noiseless intrinsic is minimized by the sent symbol") {
    auto qam = ModulationScheme::qam16();
    std::vector<Symbol> word{3, 9, 14, 0};
    auto tx = modulate(word, qam);
    auto star = compute_intrinsic(tx, 0.3, qam, Convention::StarRef);
    for (std::size_t n = 0; n < word.size(); ++n) {
        CHECK(star.at(static_cast<int>(n), word[n]) == 0.0);
        for (int a = 0; a < 16; ++a)
            if (a != word[n]) CHECK(star.at(static_cast<int>(n), a) > 0.0);
    }
}

TEST_CASE("BPSK metric ignores the quadrature component") {
    auto bpsk = ModulationScheme::bpsk();
    std::vector<std::complex<double>> obs{{0.8, 5.0}, {-0.2, -9.0}};
    auto star = compute_intrinsic(obs, 1.0, bpsk, Convention::StarRef);
    // distances (0.8 -> +1): (0.2^2, 1.8^2)/2 shifted; imaginary part dropped
    CHECK(star.at(0, 0) == doctest::Approx(0.0));
    CHECK(star.at(0, 1) == doctest::Approx((1.8 * 1.8 - 0.2 * 0.2) / 2.0));
    CHECK(star.at(1, 1) == doctest::Approx(0.0));
}

TEST_CASE("compute_intrinsic rejects a degenerate channel") {
    auto bpsk = ModulationScheme::bpsk();
    std::vector<std::complex<double>> obs{{1.0, 0.0}};
    CHECK_THROWS_AS(compute_intrinsic(obs, 0.0, bpsk, Convention::StarRef),
                    std::invalid_argument);
}
