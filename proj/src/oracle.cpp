#include "nbldpc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace nbldpc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::uint64_t checked_pow(std::uint64_t base, int exponent, std::uint64_t cap) {
    std::uint64_t v = 1;
    for (int i = 0; i < exponent; ++i) {
        if (v > cap / base) return cap + 1;
        v *= base;
    }
    return v;
}

struct BruteContext {
    const Field* field;
    OracleRule rule;
    double p;
    const std::vector<std::vector<double>>* alpha;
    const std::vector<Symbol>* labels;
    std::vector<int> others;  // non-target edge positions
    Symbol h_target;
    std::vector<double>* out;
};

// Depth-first over the non-target edges; `partial` carries the running
// aggregate and `synd` the running sum of h_i a_i. Each completed
// configuration contributes to the target symbol it implies.
void brute_recurse(const BruteContext& ctx, std::size_t depth, Symbol synd, double partial) {
    const Field& f = *ctx.field;
    const int q = f.q();
    if (depth == ctx.others.size()) {
        // h_t a = sum of the others (characteristic 2).
        Symbol a = f.div(synd, ctx.h_target);
        double& slot = (*ctx.out)[a];
        switch (ctx.rule) {
            case OracleRule::SumProduct: slot += partial; break;
            case OracleRule::PNorm: {
                double v = std::pow(partial, 1.0 / ctx.p);
                if (v < slot) slot = v;
                break;
            }
            default:
                if (partial < slot) slot = partial;
        }
        return;
    }
    const int edge = ctx.others[depth];
    const std::vector<double>& row = (*ctx.alpha)[edge];
    const Symbol h = (*ctx.labels)[edge];
    for (int b = 0; b < q; ++b) {
        const Symbol synd2 = f.add(synd, f.mul(h, static_cast<Symbol>(b)));
        double next;
        switch (ctx.rule) {
            case OracleRule::MinSum: next = partial + row[b]; break;
            case OracleRule::PNorm: next = partial + std::pow(row[b], ctx.p); break;
            case OracleRule::MinMax: next = std::max(partial, row[b]); break;
            case OracleRule::SumProduct: next = partial * row[b]; break;
            default: next = partial;
        }
        brute_recurse(ctx, depth + 1, synd2, next);
    }
}

}  // namespace

std::vector<double> brute_check_node_row(const Field& field, OracleRule rule, double p,
                                         const std::vector<std::vector<double>>& alpha,
                                         const std::vector<Symbol>& labels, int target,
                                         std::uint64_t enumeration_guard) {
    const int q = field.q();
    const int degree = static_cast<int>(alpha.size());
    if (degree < 2) throw std::invalid_argument("brute_check_node: degree must be >= 2");
    if (labels.size() != alpha.size())
        throw std::invalid_argument("brute_check_node: one label per edge");
    if (target < 0 || target >= degree)
        throw std::invalid_argument("brute_check_node: target edge out of range");
    for (const auto& row : alpha)
        if (row.size() != static_cast<std::size_t>(q))
            throw std::invalid_argument("brute_check_node: rows must have q entries");
    for (Symbol h : labels)
        if (h == 0) throw std::invalid_argument("brute_check_node: zero label");
    if (rule == OracleRule::PNorm && !(p >= 1.0))
        throw std::invalid_argument("brute_check_node: p must be >= 1");
    std::uint64_t count = checked_pow(static_cast<std::uint64_t>(q), degree - 1, enumeration_guard);
    if (count > enumeration_guard)
        throw EnumerationLimitError(
            "brute_check_node: q^(degree-1) exceeds the enumeration guard of " +
            std::to_string(enumeration_guard));

    BruteContext ctx;
    ctx.field = &field;
    ctx.rule = rule;
    ctx.p = p;
    ctx.alpha = &alpha;
    ctx.labels = &labels;
    for (int j = 0; j < degree; ++j)
        if (j != target) ctx.others.push_back(j);
    ctx.h_target = labels[target];
    std::vector<double> out(q, rule == OracleRule::SumProduct ? 0.0 : kInf);
    ctx.out = &out;

    double seed;
    switch (rule) {
        case OracleRule::SumProduct: seed = 1.0; break;
        case OracleRule::MinMax: seed = -kInf; break;
        default: seed = 0.0;
    }
    brute_recurse(ctx, 0, 0, seed);
    return out;
}

double brute_check_node(const Field& field, OracleRule rule, double p,
                        const std::vector<std::vector<double>>& alpha,
                        const std::vector<Symbol>& labels, int target, Symbol a,
                        std::uint64_t enumeration_guard) {
    if (a >= field.q()) throw std::invalid_argument("brute_check_node: symbol out of range");
    return brute_check_node_row(field, rule, p, alpha, labels, target, enumeration_guard)[a];
}

std::vector<Symbol> ml_decode(const Code& code, const IntrinsicInfo& intrinsic,
                              std::uint64_t codeword_limit) {
    if (intrinsic.convention == Convention::ZeroRef)
        throw std::invalid_argument("ml_decode: intrinsic must be STAR_REF or LOGPROB");
    if (intrinsic.num_vars != code.num_vars() || intrinsic.q != code.field().q())
        throw std::invalid_argument("ml_decode: intrinsic does not match the code");
    std::vector<std::vector<Symbol>> words = enumerate_codewords(code, codeword_limit);
    const std::vector<Symbol>* best = nullptr;
    double best_metric = kInf;
    for (const auto& w : words) {
        double metric = 0.0;
        for (int n = 0; n < code.num_vars(); ++n) metric += intrinsic.at(n, w[n]);
        if (metric < best_metric ||
            (metric == best_metric && best != nullptr && w < *best)) {
            best_metric = metric;
            best = &w;
        }
    }
    return *best;
}

bool is_cycle_free(const Code& code) {
    // Union-find over variable and check nodes; an edge joining two already
    // connected nodes closes a cycle.
    const int total = code.num_vars() + code.num_checks();
    std::vector<int> parent(total);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int m = 0; m < code.num_checks(); ++m) {
        for (const CheckEntry& e : code.check_rows()[m]) {
            int a = find(e.var);
            int b = find(code.num_vars() + m);
            if (a == b) return false;
            parent[a] = b;
        }
    }
    return true;
}

TreeOracleRows tree_aposteriori_oracle(const Code& code, const IntrinsicInfo& intrinsic,
                                       int node, std::uint64_t codeword_limit) {
    if (!is_cycle_free(code))
        throw std::invalid_argument("tree_aposteriori_oracle: the Tanner graph has a cycle");
    if (node < 0 || node >= code.num_vars())
        throw std::invalid_argument("tree_aposteriori_oracle: node out of range");
    if (intrinsic.num_vars != code.num_vars() || intrinsic.q != code.field().q())
        throw std::invalid_argument("tree_aposteriori_oracle: intrinsic does not match the code");

    // Variables within two steps of `node` (through its checks).
    std::set<int> near;
    near.insert(node);
    for (int m = 0; m < code.num_checks(); ++m) {
        bool touches = false;
        for (const CheckEntry& e : code.check_rows()[m]) touches = touches || e.var == node;
        if (touches)
            for (const CheckEntry& e : code.check_rows()[m]) near.insert(e.var);
    }

    std::vector<std::vector<Symbol>> words = enumerate_codewords(code, codeword_limit);
    const int q = code.field().q();
    TreeOracleRows rows;
    rows.min_sum.assign(q, kInf);
    double vanish_best = kInf;
    for (const auto& w : words) {
        double metric = 0.0;
        for (int n = 0; n < code.num_vars(); ++n) metric += intrinsic.at(n, w[n]);
        double& slot = rows.min_sum[w[node]];
        if (metric < slot) slot = metric;
        bool vanishes = true;
        for (int n : near) vanishes = vanishes && (w[n] == 0);
        if (vanishes && metric < vanish_best) vanish_best = metric;
    }
    rows.min_sum0.resize(q);
    for (int a = 0; a < q; ++a) rows.min_sum0[a] = rows.min_sum[a] - vanish_best;
    return rows;
}

PigeonholeReport verify_pigeonhole(const Field& field, Symbol h, Symbol h1, Symbol h2,
                                   const std::vector<Symbol>& delta1,
                                   const std::vector<Symbol>& delta2) {
    if (h == 0 || h1 == 0 || h2 == 0)
        throw std::invalid_argument("verify_pigeonhole: labels must be nonzero");
    const int q = field.q();
    PigeonholeReport report;
    report.witnesses.resize(q);
    for (int a = 0; a < q; ++a) {
        const Symbol want = field.mul(h, static_cast<Symbol>(a));
        bool found = false;
        for (Symbol a1 : delta1) {
            const Symbol u1 = field.mul(h1, a1);
            for (Symbol a2 : delta2) {
                if ((u1 ^ field.mul(h2, a2)) == want) {
                    report.witnesses[a] = {a1, a2};
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
        if (!found) {
            report.ok = false;
            report.failing_symbol = static_cast<Symbol>(a);
            return report;
        }
    }
    report.ok = true;
    return report;
}

}  // namespace nbldpc
