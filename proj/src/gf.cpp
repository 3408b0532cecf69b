#include "nbldpc/gf.hpp"

#include <string>

namespace nbldpc {

unsigned Field::primitive_poly_for(int extension_degree) {
    switch (extension_degree) {
        case 1: return 0b11;         // x + 1 (GF(2) itself; never used for reduction)
        case 2: return 0b111;        // x^2 + x + 1
        case 3: return 0b1011;       // x^3 + x + 1
        case 4: return 0b10011;      // x^4 + x + 1
        case 5: return 0b100101;     // x^5 + x^2 + 1
        case 6: return 0b1000011;    // x^6 + x + 1
        case 7: return 0b10001001;   // x^7 + x^3 + 1
        case 8: return 0b100011101;  // x^8 + x^4 + x^3 + x^2 + 1
        default:
            throw std::invalid_argument("GF(2^p): extension degree must be in [1, 8], got " +
                                        std::to_string(extension_degree));
    }
}

Field::Field(int extension_degree)
    : p_(extension_degree),
      q_(1 << extension_degree),
      poly_(primitive_poly_for(extension_degree)) {
    // Antilog table: exp_[i] = x^i, reducing by the primitive polynomial
    // whenever the degree reaches p.
    exp_[0] = 1;
    for (int i = 1; i < q_ - 1; ++i) {
        unsigned v = static_cast<unsigned>(exp_[i - 1]) << 1;
        if (v & static_cast<unsigned>(q_)) v ^= poly_;
        exp_[i] = static_cast<Symbol>(v);
    }
    for (int i = 1; i < q_ - 1; ++i) {
        if (exp_[i] == 1)
            throw std::logic_error("GF(2^p): reduction polynomial is not primitive");
    }
    for (int i = 0; i < q_ - 1; ++i) log_[exp_[i]] = static_cast<std::uint8_t>(i);
    // Doubled tail so mul() can index log(a) + log(b) without a modulo.
    for (int i = q_ - 1; i <= 2 * (q_ - 1); ++i) exp_[i] = exp_[i - (q_ - 1)];
}

}  // namespace nbldpc
