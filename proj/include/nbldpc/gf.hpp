#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

namespace nbldpc {

/// Element of GF(2^p), stored as bit-packed polynomial coefficients:
/// bit k of the integer is the coefficient of x^k.
using Symbol = std::uint8_t;

/// Arithmetic context for a binary-extension Galois field GF(2^p),
/// 1 <= p <= 8. Addition is bitwise XOR; multiplication, division and
/// inversion go through log/antilog tables built at construction from a
/// fixed, conventional primitive polynomial (see primitive_poly_for).
///
/// Instances are immutable after construction and safe to share across
/// threads. Arithmetic members assume their operands are already reduced,
/// i.e. strictly below q().
class Field {
public:
    /// Throws std::invalid_argument unless 1 <= extension_degree <= 8.
    explicit Field(int extension_degree);

    int p() const noexcept { return p_; }
    int q() const noexcept { return q_; }
    unsigned primitive_poly() const noexcept { return poly_; }

    Symbol add(Symbol a, Symbol b) const noexcept { return a ^ b; }

    /// Subtraction equals addition in characteristic 2.
    Symbol sub(Symbol a, Symbol b) const noexcept { return a ^ b; }

    Symbol mul(Symbol a, Symbol b) const noexcept {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }

    /// Multiplicative inverse. Throws std::domain_error on 0.
    Symbol inv(Symbol a) const {
        if (a == 0) throw std::domain_error("GF(2^p): inverse of zero");
        return exp_[q_ - 1 - log_[a]];
    }

    /// a / b. Throws std::domain_error when b == 0.
    Symbol div(Symbol a, Symbol b) const { return mul(a, inv(b)); }

    /// Discrete logarithm base x (the primitive element). Throws on 0.
    int log(Symbol a) const {
        if (a == 0) throw std::domain_error("GF(2^p): log of zero");
        return log_[a];
    }

    /// x^(k mod (q-1)) for k >= 0.
    Symbol exp(int k) const { return exp_[k % (q_ - 1)]; }

    /// The fixed primitive polynomial used for GF(2^p), integer-encoded
    /// with bit k holding the coefficient of x^k:
    ///   p=1: x+1        p=2: x^2+x+1      p=3: x^3+x+1    p=4: x^4+x+1
    ///   p=5: x^5+x^2+1  p=6: x^6+x+1      p=7: x^7+x^3+1  p=8: x^8+x^4+x^3+x^2+1
    static unsigned primitive_poly_for(int extension_degree);

    bool operator==(const Field& other) const noexcept {
        return p_ == other.p_ && poly_ == other.poly_;
    }

private:
    int p_;
    int q_;
    unsigned poly_;
    std::array<std::uint8_t, 256> log_{};
    std::array<Symbol, 512> exp_{};
};

}  // namespace nbldpc
