#include "nbldpc/decoder.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace nbldpc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct ResolvedRule {
    Rule rule;
    double p;
    double cot;
};

ResolvedRule resolve(const DecoderConfig& config) {
    ResolvedRule rr{config.rule, config.p, config.cot};
    if (config.rule == Rule::Euclidean) {
        rr.rule = Rule::PNorm;
        rr.p = 2.0;
    }
    if (rr.rule == Rule::PNorm && !(rr.p >= 1.0))
        throw std::invalid_argument("decoder: p-norm exponent must satisfy p >= 1");
    if (rr.rule == Rule::MinMaxSelective) {
        if (!(config.cot >= 2.0))
            throw std::invalid_argument("decoder: cut-off threshold must be >= 2");
        if (!(config.ai > 0.0))
            throw std::invalid_argument("decoder: a-priori normalization target must be positive");
    }
    return rr;
}

void elementary_min_plus(const double* f1, const double* f2, double* out, int q,
                         OpCounter& ops) {
    std::fill(out, out + q, kInf);
    for (int a1 = 0; a1 < q; ++a1) {
        const double v1 = f1[a1];
        for (int a2 = 0; a2 < q; ++a2) {
            const double w = v1 + f2[a2];
            double& slot = out[a1 ^ a2];
            if (w < slot) slot = w;
        }
    }
    ops.additions += static_cast<std::uint64_t>(q) * q;
    ops.comparisons += static_cast<std::uint64_t>(q) * q;
}

void renormalize_prob(double* row, int q, OpCounter& ops) {
    double sum = 0.0;
    for (int a = 0; a < q; ++a) sum += row[a];
    ops.additions += static_cast<std::uint64_t>(q > 0 ? q - 1 : 0);
    if (!(sum > 0.0) || !std::isfinite(sum))
        throw std::runtime_error("sum-product: probability row renormalization failed "
                                 "(all-zero or non-finite row)");
    const double scale = 1.0 / sum;
    for (int a = 0; a < q; ++a) row[a] *= scale;
    ops.multiplications += static_cast<std::uint64_t>(q);
}

void elementary_prob_conv(const double* f1, const double* f2, double* out, int q,
                          OpCounter& ops) {
    std::fill(out, out + q, 0.0);
    for (int a1 = 0; a1 < q; ++a1) {
        const double v1 = f1[a1];
        for (int a2 = 0; a2 < q; ++a2) out[a1 ^ a2] += v1 * f2[a2];
    }
    ops.additions += static_cast<std::uint64_t>(q) * q;
    ops.multiplications += static_cast<std::uint64_t>(q) * q;
    renormalize_prob(out, q, ops);
}

void min_max_step_core(const Field& field, Symbol h, Symbol h1, Symbol h2, const double* f1,
                       const double* f2, double* out, OpCounter& ops) {
    const int q = field.q();
    const Symbol hinv = field.inv(h);
    Symbol u2[256];
    for (int a2 = 0; a2 < q; ++a2) u2[a2] = field.mul(h2, static_cast<Symbol>(a2));
    std::fill(out, out + q, kInf);
    for (int a1 = 0; a1 < q; ++a1) {
        const double v1 = f1[a1];
        const Symbol u1 = field.mul(h1, static_cast<Symbol>(a1));
        for (int a2 = 0; a2 < q; ++a2) {
            const Symbol s = field.mul(hinv, static_cast<Symbol>(u1 ^ u2[a2]));
            const double w = std::max(v1, f2[a2]);
            if (w < out[s]) out[s] = w;
        }
    }
    ops.comparisons += 2 * static_cast<std::uint64_t>(q) * q;
    ops.pair_evaluations += static_cast<std::uint64_t>(q) * q;
}

struct BucketEntry {
    long long key;
    Symbol sym;
};

// Entries strictly below cot, sorted by (bucket, symbol); returns the count.
int bucket_entries(const double* f, int q, double cot, BucketEntry* out) {
    int n = 0;
    for (int a = 0; a < q; ++a) {
        if (f[a] < cot)
            out[n++] = {static_cast<long long>(std::floor(f[a])), static_cast<Symbol>(a)};
    }
    std::sort(out, out + n, [](const BucketEntry& x, const BucketEntry& y) {
        return x.key != y.key ? x.key < y.key : x.sym < y.sym;
    });
    return n;
}

void min_max_selective_core(const Field& field, Symbol h, Symbol h1, Symbol h2,
                            const double* f1, const double* f2, double* out, double cot,
                            OpCounter& ops, SelectiveStepReport* report) {
    const int q = field.q();
    const Symbol hinv = field.inv(h);
    BucketEntry l1[256], l2[256];
    const int n1 = bucket_entries(f1, q, cot, l1);
    const int n2 = bucket_entries(f2, q, cot, l2);

    // Grow both sets one bucket level at a time until together they could
    // cover every output symbol.
    int d1 = 0, d2 = 0;
    while (d1 < n1 || d2 < n2) {
        long long level = std::numeric_limits<long long>::max();
        if (d1 < n1) level = l1[d1].key;
        if (d2 < n2) level = std::min(level, l2[d2].key);
        while (d1 < n1 && l1[d1].key == level) ++d1;
        while (d2 < n2 && l2[d2].key == level) ++d2;
        if (d1 + d2 >= q + 1) break;
    }

    std::fill(out, out + q, kInf);
    for (int x = 0; x < d1; ++x) {
        const Symbol u1 = field.mul(h1, l1[x].sym);
        const double v1 = f1[l1[x].sym];
        const long long k1 = l1[x].key;
        for (int y = 0; y < d2; ++y) {
            const Symbol s = field.mul(hinv, static_cast<Symbol>(u1 ^ field.mul(h2, l2[y].sym)));
            double w;
            if (k1 == l2[y].key) {
                w = std::max(v1, f2[l2[y].sym]);
                ++ops.comparisons;
            } else {
                w = k1 > l2[y].key ? v1 : f2[l2[y].sym];
            }
            if (w < out[s]) out[s] = w;
            ++ops.comparisons;
        }
    }
    ops.pair_evaluations += static_cast<std::uint64_t>(d1) * d2;
    for (int a = 0; a < q; ++a)
        if (out[a] == kInf) out[a] = cot;

    if (report) {
        report->delta1.clear();
        report->delta2.clear();
        for (int x = 0; x < d1; ++x) report->delta1.push_back(l1[x].sym);
        for (int y = 0; y < d2; ++y) report->delta2.push_back(l2[y].sym);
        std::sort(report->delta1.begin(), report->delta1.end());
        std::sort(report->delta2.begin(), report->delta2.end());
        report->pair_evaluations = static_cast<std::uint64_t>(d1) * d2;
    }
}

struct CheckWorkspace {
    std::vector<double> at, fwd, bwd, merged;
    void ensure(int degree, int q) {
        const std::size_t need = static_cast<std::size_t>(degree) * q;
        if (at.size() < need) {
            at.resize(need);
            fwd.resize(need);
            bwd.resize(need);
        }
        if (merged.size() < static_cast<std::size_t>(q)) merged.resize(q);
    }
};

// One full check node: fold each incoming row into the syndrome domain,
// run the forward/backward recursion of the rule's elementary step, merge,
// and unfold each outgoing row through its own label.
void check_node_core(const Field& field, const ResolvedRule& rr, const double* alpha,
                     const Symbol* labels, int degree, double* beta, CheckWorkspace& ws,
                     OpCounter& ops) {
    const int q = field.q();
    ws.ensure(degree, q);
    double* at = ws.at.data();
    double* fwd = ws.fwd.data();
    double* bwd = ws.bwd.data();

    for (int j = 0; j < degree; ++j) {
        const double* src = alpha + static_cast<std::size_t>(j) * q;
        double* dst = at + static_cast<std::size_t>(j) * q;
        const Symbol h = labels[j];
        if (rr.rule == Rule::PNorm) {
            for (int b = 0; b < q; ++b) dst[field.mul(h, static_cast<Symbol>(b))] = std::pow(src[b], rr.p);
            ops.multiplications += static_cast<std::uint64_t>(q);
        } else {
            for (int b = 0; b < q; ++b) dst[field.mul(h, static_cast<Symbol>(b))] = src[b];
        }
    }

    auto step = [&](const double* u, const double* v, double* o) {
        switch (rr.rule) {
            case Rule::SumProduct: elementary_prob_conv(u, v, o, q, ops); break;
            case Rule::MinMaxStandard: min_max_step_core(field, 1, 1, 1, u, v, o, ops); break;
            case Rule::MinMaxSelective:
                min_max_selective_core(field, 1, 1, 1, u, v, o, rr.cot, ops, nullptr);
                break;
            default: elementary_min_plus(u, v, o, q, ops); break;
        }
    };

    std::memcpy(fwd, at, sizeof(double) * q);
    for (int i = 1; i <= degree - 2; ++i)
        step(fwd + static_cast<std::size_t>(i - 1) * q, at + static_cast<std::size_t>(i) * q,
             fwd + static_cast<std::size_t>(i) * q);
    std::memcpy(bwd + static_cast<std::size_t>(degree - 1) * q,
                at + static_cast<std::size_t>(degree - 1) * q, sizeof(double) * q);
    for (int i = degree - 2; i >= 1; --i)
        step(bwd + static_cast<std::size_t>(i + 1) * q, at + static_cast<std::size_t>(i) * q,
             bwd + static_cast<std::size_t>(i) * q);

    for (int j = 0; j < degree; ++j) {
        const double* folded;
        if (j == 0) {
            folded = bwd + static_cast<std::size_t>(1) * q;
        } else if (j == degree - 1) {
            folded = fwd + static_cast<std::size_t>(degree - 2) * q;
        } else {
            step(fwd + static_cast<std::size_t>(j - 1) * q,
                 bwd + static_cast<std::size_t>(j + 1) * q, ws.merged.data());
            folded = ws.merged.data();
        }
        double* dst = beta + static_cast<std::size_t>(j) * q;
        const Symbol h = labels[j];
        for (int a = 0; a < q; ++a) dst[a] = folded[field.mul(h, static_cast<Symbol>(a))];
        if (rr.rule == Rule::PNorm) {
            const double root = 1.0 / rr.p;
            for (int a = 0; a < q; ++a) dst[a] = std::pow(dst[a], root);
            ops.multiplications += static_cast<std::uint64_t>(q);
        }
    }
}

// Combines the intrinsic row with the incoming beta rows; emits one
// extrinsic row per edge and the a-posteriori row. Returns the hard
// decision for the node.
Symbol variable_node_core(Rule rule, int q, const double* gamma_row,
                          const std::vector<const double*>& betas,
                          const std::vector<double*>& alphas, double* apost,
                          std::vector<double>& scratch, OpCounter& ops) {
    const int dn = static_cast<int>(betas.size());
    if (rule == Rule::SumProduct) {
        // Leave-one-out products via prefix/suffix tables; dividing by a
        // message would blow up on underflowed zeros.
        scratch.resize(static_cast<std::size_t>(2 * (dn + 1)) * q);
        double* pref = scratch.data();
        double* suf = scratch.data() + static_cast<std::size_t>(dn + 1) * q;
        std::memcpy(pref, gamma_row, sizeof(double) * q);
        for (int j = 0; j < dn; ++j) {
            const double* b = betas[j];
            double* prev = pref + static_cast<std::size_t>(j) * q;
            double* next = pref + static_cast<std::size_t>(j + 1) * q;
            for (int a = 0; a < q; ++a) next[a] = prev[a] * b[a];
        }
        std::fill(suf + static_cast<std::size_t>(dn) * q, suf + static_cast<std::size_t>(dn + 1) * q,
                  1.0);
        for (int j = dn - 1; j >= 0; --j) {
            const double* b = betas[j];
            double* prev = suf + static_cast<std::size_t>(j + 1) * q;
            double* next = suf + static_cast<std::size_t>(j) * q;
            for (int a = 0; a < q; ++a) next[a] = prev[a] * b[a];
        }
        ops.multiplications += 2 * static_cast<std::uint64_t>(dn) * q;
        std::memcpy(apost, pref + static_cast<std::size_t>(dn) * q, sizeof(double) * q);
        renormalize_prob(apost, q, ops);
        for (int j = 0; j < dn; ++j) {
            double* ar = alphas[j];
            const double* pr = pref + static_cast<std::size_t>(j) * q;
            const double* su = suf + static_cast<std::size_t>(j + 1) * q;
            for (int a = 0; a < q; ++a) ar[a] = pr[a] * su[a];
            ops.multiplications += static_cast<std::uint64_t>(q);
            renormalize_prob(ar, q, ops);
        }
        int best = 0;
        for (int a = 1; a < q; ++a)
            if (apost[a] > apost[best]) best = a;
        ops.comparisons += static_cast<std::uint64_t>(q - 1);
        return static_cast<Symbol>(best);
    }

    for (int a = 0; a < q; ++a) {
        double t = gamma_row[a];
        for (int j = 0; j < dn; ++j) t += betas[j][a];
        apost[a] = t;
    }
    ops.additions += static_cast<std::uint64_t>(dn) * q;
    for (int j = 0; j < dn; ++j) {
        double* ar = alphas[j];
        const double* b = betas[j];
        for (int a = 0; a < q; ++a) ar[a] = apost[a] - b[a];
        ops.additions += static_cast<std::uint64_t>(q);
        if (rule == Rule::MinSum0) {
            const double ref = ar[0];
            for (int a = 0; a < q; ++a) ar[a] -= ref;
            ops.additions += static_cast<std::uint64_t>(q);
        } else {
            // STAR_REF family, and MIN_SUM's stability normalization: raw
            // log-probability messages grow without bound across iterations
            // and eventually swamp double precision, so each outgoing row is
            // re-referenced to its minimum.
            double ref = ar[0];
            for (int a = 1; a < q; ++a)
                if (ar[a] < ref) ref = ar[a];
            ops.comparisons += static_cast<std::uint64_t>(q - 1);
            for (int a = 0; a < q; ++a) ar[a] -= ref;
            ops.additions += static_cast<std::uint64_t>(q);
        }
    }
    int best = 0;
    for (int a = 1; a < q; ++a)
        if (apost[a] < apost[best]) best = a;
    ops.comparisons += static_cast<std::uint64_t>(q - 1);
    return static_cast<Symbol>(best);
}

}  // namespace

const char* rule_name(Rule rule) {
    switch (rule) {
        case Rule::SumProduct: return "SUM_PRODUCT";
        case Rule::MinSum: return "MIN_SUM";
        case Rule::MinSum0: return "MIN_SUM_0";
        case Rule::MinSumStar: return "MIN_SUM_STAR";
        case Rule::PNorm: return "P_NORM";
        case Rule::Euclidean: return "EUCLIDEAN";
        case Rule::MinMaxStandard: return "MIN_MAX_STANDARD";
        case Rule::MinMaxSelective: return "MIN_MAX_SELECTIVE";
    }
    return "?";
}

Convention rule_convention(Rule rule) {
    switch (rule) {
        case Rule::SumProduct:
        case Rule::MinSum: return Convention::LogProb;
        case Rule::MinSum0: return Convention::ZeroRef;
        default: return Convention::StarRef;
    }
}

std::vector<double> min_max_step(const Field& field, Symbol h, Symbol h1, Symbol h2,
                                 std::span<const double> f1, std::span<const double> f2,
                                 OpCounter& ops) {
    const int q = field.q();
    if (h == 0 || h1 == 0 || h2 == 0)
        throw std::invalid_argument("min_max_step: labels must be nonzero");
    if (f1.size() != static_cast<std::size_t>(q) || f2.size() != static_cast<std::size_t>(q))
        throw std::invalid_argument("min_max_step: operand rows must have q entries");
    std::vector<double> out(q);
    min_max_step_core(field, h, h1, h2, f1.data(), f2.data(), out.data(), ops);
    return out;
}

std::vector<double> min_max_selective_step(const Field& field, Symbol h, Symbol h1, Symbol h2,
                                           std::span<const double> f1, std::span<const double> f2,
                                           double cot, OpCounter& ops,
                                           SelectiveStepReport* report) {
    const int q = field.q();
    if (h == 0 || h1 == 0 || h2 == 0)
        throw std::invalid_argument("min_max_selective_step: labels must be nonzero");
    if (f1.size() != static_cast<std::size_t>(q) || f2.size() != static_cast<std::size_t>(q))
        throw std::invalid_argument("min_max_selective_step: operand rows must have q entries");
    std::vector<double> out(q);
    min_max_selective_core(field, h, h1, h2, f1.data(), f2.data(), out.data(), cot, ops, report);
    return out;
}

std::vector<std::vector<double>> check_node_messages(const Field& field, Rule rule,
                                                     const std::vector<std::vector<double>>& alpha,
                                                     const std::vector<Symbol>& labels,
                                                     const DecoderConfig& config,
                                                     OpCounter& ops) {
    const int q = field.q();
    const int degree = static_cast<int>(alpha.size());
    if (degree < 2) throw std::invalid_argument("check_node_messages: degree must be >= 2");
    if (labels.size() != alpha.size())
        throw std::invalid_argument("check_node_messages: one label per incoming row");
    for (const auto& row : alpha)
        if (row.size() != static_cast<std::size_t>(q))
            throw std::invalid_argument("check_node_messages: rows must have q entries");
    for (Symbol h : labels)
        if (h == 0 || h >= q)
            throw std::invalid_argument("check_node_messages: labels must lie in [1, q)");

    DecoderConfig cfg = config;
    cfg.rule = rule;
    ResolvedRule rr = resolve(cfg);
    std::vector<double> flat(static_cast<std::size_t>(degree) * q);
    for (int j = 0; j < degree; ++j)
        std::copy(alpha[j].begin(), alpha[j].end(), flat.begin() + static_cast<std::size_t>(j) * q);
    std::vector<double> beta(static_cast<std::size_t>(degree) * q);
    CheckWorkspace ws;
    check_node_core(field, rr, flat.data(), labels.data(), degree, beta.data(), ws, ops);
    std::vector<std::vector<double>> out(degree);
    for (int j = 0; j < degree; ++j)
        out[j].assign(beta.begin() + static_cast<std::size_t>(j) * q,
                      beta.begin() + static_cast<std::size_t>(j + 1) * q);
    return out;
}

VariableNodeResult variable_node_update(const std::vector<double>& gamma_row,
                                        const std::vector<std::vector<double>>& beta_rows,
                                        Rule rule, OpCounter& ops) {
    const int q = static_cast<int>(gamma_row.size());
    if (q < 2) throw std::invalid_argument("variable_node_update: need q >= 2");
    for (const auto& row : beta_rows)
        if (row.size() != static_cast<std::size_t>(q))
            throw std::invalid_argument("variable_node_update: rows must have q entries");
    VariableNodeResult res;
    res.a_posteriori.resize(q);
    res.alpha.assign(beta_rows.size(), std::vector<double>(q));
    std::vector<const double*> betas;
    std::vector<double*> alphas;
    for (const auto& row : beta_rows) betas.push_back(row.data());
    for (auto& row : res.alpha) alphas.push_back(row.data());
    std::vector<double> scratch;
    variable_node_core(rule == Rule::Euclidean ? Rule::PNorm : rule, q, gamma_row.data(), betas,
                       alphas, res.a_posteriori.data(), scratch, ops);
    return res;
}

Symbol hard_decision_symbol(std::span<const double> row, Rule rule) {
    if (row.empty()) throw std::invalid_argument("hard_decision_symbol: empty row");
    std::size_t best = 0;
    if (rule == Rule::SumProduct) {
        for (std::size_t a = 1; a < row.size(); ++a)
            if (row[a] > row[best]) best = a;
    } else {
        for (std::size_t a = 1; a < row.size(); ++a)
            if (row[a] < row[best]) best = a;
    }
    return static_cast<Symbol>(best);
}

std::vector<Symbol> a_posteriori_order(std::span<const double> row, Rule rule, double tie_tol) {
    const int q = static_cast<int>(row.size());
    std::vector<std::pair<double, int>> v(q);
    for (int a = 0; a < q; ++a)
        v[a] = {rule == Rule::SumProduct ? -row[a] : row[a], a};
    std::sort(v.begin(), v.end());
    std::vector<Symbol> out;
    out.reserve(q);
    int start = 0;
    std::vector<int> group;
    for (int i = 0; i <= q; ++i) {
        if (i == q || v[i].first - v[start].first > tie_tol) {
            group.clear();
            for (int j = start; j < i; ++j) group.push_back(v[j].second);
            std::sort(group.begin(), group.end());
            for (int g : group) out.push_back(static_cast<Symbol>(g));
            start = i;
        }
    }
    return out;
}

IntrinsicInfo normalize_intrinsic_ai(const IntrinsicInfo& intrinsic, double ai) {
    if (intrinsic.convention != Convention::StarRef)
        throw std::invalid_argument("normalize_intrinsic_ai: expects a STAR_REF intrinsic");
    if (!(ai > 0.0)) throw std::invalid_argument("normalize_intrinsic_ai: target must be positive");
    if (intrinsic.gamma.empty())
        throw std::invalid_argument("normalize_intrinsic_ai: empty intrinsic");
    double mean = std::accumulate(intrinsic.gamma.begin(), intrinsic.gamma.end(), 0.0) /
                  static_cast<double>(intrinsic.gamma.size());
    if (!(mean > 0.0))
        throw std::invalid_argument("normalize_intrinsic_ai: grand mean must be positive");
    IntrinsicInfo out = intrinsic;
    const double lambda = ai / mean;
    for (double& g : out.gamma) g *= lambda;
    return out;
}

DecodeResult decode(const Code& code, const IntrinsicInfo& intrinsic,
                    const DecoderConfig& config) {
    const Field& field = code.field();
    const int q = field.q();
    const int n_vars = code.num_vars();
    const int n_checks = code.num_checks();
    const int n_edges = code.num_edges();

    if (intrinsic.num_vars != n_vars)
        throw std::invalid_argument("decode: intrinsic covers " +
                                    std::to_string(intrinsic.num_vars) + " variables, code has " +
                                    std::to_string(n_vars));
    if (intrinsic.q != q)
        throw std::invalid_argument("decode: intrinsic alphabet does not match the code's field");
    if (intrinsic.convention != rule_convention(config.rule))
        throw std::invalid_argument(std::string("decode: rule ") + rule_name(config.rule) +
                                    " expects a " + convention_name(rule_convention(config.rule)) +
                                    " intrinsic, got " + convention_name(intrinsic.convention));
    if (config.max_iterations < 1)
        throw std::invalid_argument("decode: max_iterations must be >= 1");
    ResolvedRule rr = resolve(config);

    DecodeResult res;
    res.hard_decision.assign(n_vars, 0);
    res.a_posteriori.assign(static_cast<std::size_t>(n_vars) * q, 0.0);

    // Sum-product works on probabilities: exp(-gamma), renormalized.
    std::vector<double> gamma_work;
    const double* gamma = intrinsic.gamma.data();
    if (rr.rule == Rule::SumProduct) {
        gamma_work.resize(intrinsic.gamma.size());
        for (int n = 0; n < n_vars; ++n) {
            double* row = gamma_work.data() + static_cast<std::size_t>(n) * q;
            const double* src = gamma + static_cast<std::size_t>(n) * q;
            for (int a = 0; a < q; ++a) row[a] = std::exp(-src[a]);
            res.ops.multiplications += static_cast<std::uint64_t>(q);
            renormalize_prob(row, q, res.ops);
        }
        gamma = gamma_work.data();
    }

    std::vector<double> alpha(static_cast<std::size_t>(n_edges) * q);
    std::vector<double> beta(static_cast<std::size_t>(n_edges) * q);
    for (int e = 0; e < n_edges; ++e)
        std::memcpy(alpha.data() + static_cast<std::size_t>(e) * q,
                    gamma + static_cast<std::size_t>(code.edge_var(e)) * q, sizeof(double) * q);

    CheckWorkspace ws;
    std::vector<double> vn_scratch;
    std::vector<const double*> betas;
    std::vector<double*> alphas;
    std::vector<Symbol> row_labels;

    for (int iter = 1; iter <= config.max_iterations; ++iter) {
        const OpCounter before = res.ops;

        for (int m = 0; m < n_checks; ++m) {
            const int off = code.row_offset(m);
            const int degree = code.check_degree(m);
            row_labels.resize(degree);
            for (int j = 0; j < degree; ++j) row_labels[j] = code.edge_label(off + j);
            check_node_core(field, rr, alpha.data() + static_cast<std::size_t>(off) * q,
                            row_labels.data(), degree,
                            beta.data() + static_cast<std::size_t>(off) * q, ws, res.ops);
        }

        for (int n = 0; n < n_vars; ++n) {
            const auto& edges = code.var_edges()[n];
            betas.clear();
            alphas.clear();
            for (int e : edges) {
                betas.push_back(beta.data() + static_cast<std::size_t>(e) * q);
                alphas.push_back(alpha.data() + static_cast<std::size_t>(e) * q);
            }
            res.hard_decision[n] = variable_node_core(
                rr.rule, q, gamma + static_cast<std::size_t>(n) * q, betas, alphas,
                res.a_posteriori.data() + static_cast<std::size_t>(n) * q, vn_scratch, res.ops);
        }

        bool all_zero = true;
        for (int m = 0; m < n_checks && all_zero; ++m) {
            Symbol s = 0;
            for (const CheckEntry& e : code.check_rows()[m])
                s = field.add(s, field.mul(e.label, res.hard_decision[e.var]));
            all_zero = (s == 0);
        }

        res.iterations_used = iter;
        res.converged = all_zero;
        res.ops_by_iteration.push_back(res.ops - before);
        if (config.record_history) res.history.push_back(res.a_posteriori);
        if (all_zero && config.early_stop) break;
    }
    return res;
}

}  // namespace nbldpc
