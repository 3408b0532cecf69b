#pragma once

#include <cstdint>
#include <vector>

#include "nbldpc/channel.hpp"
#include "nbldpc/code.hpp"
#include "nbldpc/decoder.hpp"
#include "nbldpc/gf.hpp"

namespace nbldpc {

/// Semirings the enumeration oracle can aggregate in.
enum class OracleRule { MinSum, PNorm, MinMax, SumProduct };

/// Definitional check-node output: enumerates every local configuration of
/// the non-target edges satisfying the parity constraint and aggregates it
/// per the rule (sum / p-norm / max inside, min / sum outside). No
/// forward/backward sharing, no shortcuts beyond solving the parity for the
/// implied target symbol. Guarded: refuses when q^(degree-1) exceeds
/// `enumeration_guard`. SumProduct rows come back unnormalized.
std::vector<double> brute_check_node_row(const Field& field, OracleRule rule, double p,
                                         const std::vector<std::vector<double>>& alpha,
                                         const std::vector<Symbol>& labels, int target,
                                         std::uint64_t enumeration_guard = 1'000'000);

/// Single entry of brute_check_node_row.
double brute_check_node(const Field& field, OracleRule rule, double p,
                        const std::vector<std::vector<double>>& alpha,
                        const std::vector<Symbol>& labels, int target, Symbol a,
                        std::uint64_t enumeration_guard = 1'000'000);

/// Exhaustive maximum-likelihood decoding: enumerates the full codebook
/// (guarded by codeword_limit) and returns the codeword minimizing
/// sum_n gamma_n(x_n). Ties resolve to the lexicographically smallest
/// codeword. The intrinsic must be STAR_REF or LOGPROB.
std::vector<Symbol> ml_decode(const Code& code, const IntrinsicInfo& intrinsic,
                              std::uint64_t codeword_limit = 100'000);

/// Exhaustive a-posteriori references on cycle-free codes, evaluated at one
/// variable node:
///   min_sum[a]  = min over codewords x with x_n = a of sum_k gamma_k(x_k)
///   min_sum0[a] = min_sum[a] - min over codewords vanishing on n and on
///                 every variable two steps from n of sum_k gamma_k(x_k)
struct TreeOracleRows {
    std::vector<double> min_sum;
    std::vector<double> min_sum0;
};
TreeOracleRows tree_aposteriori_oracle(const Code& code, const IntrinsicInfo& intrinsic,
                                       int node, std::uint64_t codeword_limit = 100'000);

/// True when the Tanner graph has no cycle (forest).
bool is_cycle_free(const Code& code);

/// Exhaustive witness search for the covering property: for every a in
/// GF(q) there must exist a' in delta1, a'' in delta2 with
/// h1 a' + h2 a'' = h a. Reports the witnesses found (index = symbol a)
/// or the first symbol lacking one.
struct PigeonholeReport {
    bool ok = false;
    Symbol failing_symbol = 0;
    std::vector<std::pair<Symbol, Symbol>> witnesses;
};
PigeonholeReport verify_pigeonhole(const Field& field, Symbol h, Symbol h1, Symbol h2,
                                   const std::vector<Symbol>& delta1,
                                   const std::vector<Symbol>& delta2);

}  // namespace nbldpc
