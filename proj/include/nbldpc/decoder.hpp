#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nbldpc/channel.hpp"
#include "nbldpc/code.hpp"
#include "nbldpc/gf.hpp"

namespace nbldpc {

/// Message-passing update families. All share the same flooding schedule
/// and differ in the check-node semiring and the normalization convention
/// of their metric rows.
enum class Rule {
    SumProduct,      // probability domain (+, x), renormalized messages
    MinSum,          // (min, +) on LOGPROB rows
    MinSum0,         // (min, +) on ZERO_REF rows (relative to symbol 0)
    MinSumStar,      // (min, +) on STAR_REF rows (relative to the row min)
    PNorm,           // (min, +) on p-th powers with a final p-th root, STAR_REF
    Euclidean,       // PNorm with p = 2
    MinMaxStandard,  // (min, max) forward/backward, STAR_REF
    MinMaxSelective  // (min, max) restricted to low-bucket pairs, STAR_REF
};

const char* rule_name(Rule rule);

/// The intrinsic normalization each rule consumes.
Convention rule_convention(Rule rule);

struct DecoderConfig {
    Rule rule = Rule::MinMaxStandard;
    double p = 2.0;              // PNorm exponent, p >= 1
    int max_iterations = 200;
    double ai = 12.0;            // selective a-priori scale target, > 0
    double cot = 31.0;           // selective cut-off threshold, >= 2
    bool early_stop = true;      // stop once the hard decision is a codeword
    bool record_history = false; // keep per-iteration a-posteriori snapshots
};

/// Real-valued operation tallies. `comparisons` counts binary min/max
/// evaluations (selective bucket routing with unequal bucket indices
/// resolves without one and adds nothing), `additions` binary sums and
/// subtractions, `multiplications` products, divisions and power/root
/// evaluations. `pair_evaluations` separately counts the admissible
/// (a', a'') pairs visited by min-max elementary steps: q^2 for the
/// standard step, |delta'| * |delta''| for the selective one.
struct OpCounter {
    std::uint64_t additions = 0;
    std::uint64_t comparisons = 0;
    std::uint64_t multiplications = 0;
    std::uint64_t pair_evaluations = 0;

    OpCounter& operator+=(const OpCounter& o) {
        additions += o.additions;
        comparisons += o.comparisons;
        multiplications += o.multiplications;
        pair_evaluations += o.pair_evaluations;
        return *this;
    }
    OpCounter operator-(const OpCounter& o) const {
        return {additions - o.additions, comparisons - o.comparisons,
                multiplications - o.multiplications, pair_evaluations - o.pair_evaluations};
    }
    std::uint64_t total() const { return additions + comparisons + multiplications; }
    bool operator==(const OpCounter&) const = default;
};

struct DecodeResult {
    std::vector<Symbol> hard_decision;  // N symbols
    std::vector<double> a_posteriori;   // N x q, final iteration, row-major
    int iterations_used = 0;
    bool converged = false;             // final hard decision has zero syndrome
    OpCounter ops;                      // whole run
    std::vector<OpCounter> ops_by_iteration;
    std::vector<std::vector<double>> history;  // per-iteration a-posteriori copies
};

/// Iterative decoding with the flooding schedule: per iteration a full
/// check pass, a full variable pass, the a-posteriori/hard decision and a
/// syndrome test. Stops early on a zero syndrome when configured to. The
/// intrinsic's convention must match rule_convention(config.rule) and its
/// q the code's field.
DecodeResult decode(const Code& code, const IntrinsicInfo& intrinsic,
                    const DecoderConfig& config);

/// Scales all entries so the grand mean becomes `ai`. Requires a STAR_REF
/// intrinsic with a positive grand mean. Used to bring the metrics into
/// the regime a finite cut-off threshold was tuned for.
IntrinsicInfo normalize_intrinsic_ai(const IntrinsicInfo& intrinsic, double ai);

/// Check-node update of one check in isolation: `alpha` holds one q-row per
/// incident edge, `labels` the edge coefficients. Returns the q-row of each
/// outgoing message, same order. Exposed for unit tests and the bindings;
/// decode() runs the same computation over the whole graph.
std::vector<std::vector<double>> check_node_messages(const Field& field, Rule rule,
                                                     const std::vector<std::vector<double>>& alpha,
                                                     const std::vector<Symbol>& labels,
                                                     const DecoderConfig& config,
                                                     OpCounter& ops);

/// Variable-node update of one node in isolation: combines the intrinsic
/// row with all incoming check rows, returning one extrinsic row per edge
/// (the total minus that edge's contribution, re-normalized per the
/// convention) plus the a-posteriori row. Sum-product rows are treated as
/// probabilities and renormalized to sum 1.
struct VariableNodeResult {
    std::vector<std::vector<double>> alpha;
    std::vector<double> a_posteriori;
};
VariableNodeResult variable_node_update(const std::vector<double>& gamma_row,
                                        const std::vector<std::vector<double>>& beta_rows,
                                        Rule rule, OpCounter& ops);

/// One elementary (min, max) step: out(a) = min over h1 a1 + h2 a2 = h a of
/// max(f1(a1), f2(a2)), visiting all q^2 pairs.
std::vector<double> min_max_step(const Field& field, Symbol h, Symbol h1, Symbol h2,
                                 std::span<const double> f1, std::span<const double> f2,
                                 OpCounter& ops);

/// Bucket sets and pair count chosen by one selective step.
struct SelectiveStepReport {
    std::vector<Symbol> delta1, delta2;  // ascending symbol order
    std::uint64_t pair_evaluations = 0;
};

/// Selective variant of min_max_step: operands are bucketed by the integer
/// part of their value (entries >= cot discarded), buckets are accumulated
/// in increasing order until card(delta1) + card(delta2) >= q + 1, and only
/// pairs from the accumulated sets are visited. Outputs with no admissible
/// pair saturate at cot. Pairs from different buckets resolve to the
/// higher-bucket operand without a comparison.
std::vector<double> min_max_selective_step(const Field& field, Symbol h, Symbol h1, Symbol h2,
                                           std::span<const double> f1, std::span<const double> f2,
                                           double cot, OpCounter& ops,
                                           SelectiveStepReport* report = nullptr);

/// Index of the most likely symbol of one a-posteriori row (smallest metric,
/// or largest probability under SumProduct); ties resolve to the smallest
/// symbol index.
Symbol hard_decision_symbol(std::span<const double> row, Rule rule);

/// All q symbols sorted most-likely-first. Entries whose metrics differ by
/// at most tie_tol are treated as tied and ordered by symbol index, so the
/// result is a deterministic function of the likelihood ordering.
std::vector<Symbol> a_posteriori_order(std::span<const double> row, Rule rule,
                                       double tie_tol = 1e-9);

}  // namespace nbldpc
