#include "nbldpc/code.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <iterator>
#include <set>
#include <sstream>

#include "nbldpc/rng.hpp"

namespace nbldpc {

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

Code::Code(const Field& field, int num_vars, std::vector<std::vector<CheckEntry>> check_rows)
    : field_(field), n_(num_vars), rows_(std::move(check_rows)) {
    if (n_ < 1) throw std::invalid_argument("code: need at least one variable node");
    if (rows_.empty()) throw std::invalid_argument("code: need at least one check node");

    var_edges_.assign(n_, {});
    row_offset_.reserve(rows_.size());
    for (auto& row : rows_) {
        if (row.size() < 2)
            throw std::invalid_argument("code: check node degree must be at least 2");
        std::sort(row.begin(), row.end(),
                  [](const CheckEntry& a, const CheckEntry& b) { return a.var < b.var; });
        row_offset_.push_back(num_edges_);
        for (std::size_t j = 0; j < row.size(); ++j) {
            const CheckEntry& e = row[j];
            if (e.var < 0 || e.var >= n_)
                throw std::invalid_argument("code: variable index out of range");
            if (j > 0 && row[j - 1].var == e.var)
                throw std::invalid_argument("code: repeated variable within a check row");
            if (e.label == 0 || e.label >= field_.q())
                throw std::invalid_argument("code: edge label must lie in [1, q)");
            var_edges_[e.var].push_back(num_edges_);
            edge_var_.push_back(e.var);
            edge_label_.push_back(e.label);
            ++num_edges_;
        }
    }
    for (int n = 0; n < n_; ++n) {
        if (var_edges_[n].empty())
            throw std::invalid_argument("code: variable node " + std::to_string(n) +
                                        " has no incident check");
    }
}

int Code::max_check_degree() const noexcept {
    std::size_t d = 0;
    for (const auto& row : rows_) d = std::max(d, row.size());
    return static_cast<int>(d);
}

int Code::max_var_degree() const noexcept {
    std::size_t d = 0;
    for (const auto& v : var_edges_) d = std::max(d, v.size());
    return static_cast<int>(d);
}

double Code::design_rate() const noexcept {
    return 1.0 - static_cast<double>(num_checks()) / static_cast<double>(n_);
}

namespace {

struct NumberLine {
    int number = 0;
    std::vector<long long> values;
};

// Physical lines -> comment-stripped integer token lines (blank lines dropped).
std::vector<NumberLine> tokenize(const std::string& text) {
    if (text.empty()) throw ParseError(1, "empty input");
    if (text.back() != '\n') {
        int lines = 1 + static_cast<int>(std::count(text.begin(), text.end(), '\n'));
        throw ParseError(lines, "final newline required");
    }
    std::vector<NumberLine> out;
    int lineno = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++lineno;
        if (std::size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        NumberLine nl;
        nl.number = lineno;
        std::istringstream iss(line);
        std::string tok;
        while (iss >> tok) {
            errno = 0;
            char* end = nullptr;
            long long v = std::strtoll(tok.c_str(), &end, 10);
            if (end == tok.c_str() || *end != '\0' || errno != 0)
                throw ParseError(lineno, "expected an integer, got '" + tok + "'");
            nl.values.push_back(v);
        }
        if (!nl.values.empty()) out.push_back(std::move(nl));
    }
    return out;
}

const NumberLine& need_line(const std::vector<NumberLine>& lines, std::size_t idx,
                            const std::string& what) {
    if (idx >= lines.size()) {
        int last = lines.empty() ? 1 : lines.back().number;
        throw ParseError(last, "unexpected end of file, missing " + what);
    }
    return lines[idx];
}

}  // namespace

Code parse_code_string(const std::string& text) {
    std::vector<NumberLine> lines = tokenize(text);

    const NumberLine& header = need_line(lines, 0, "header line 'N M q'");
    if (header.values.size() != 3)
        throw ParseError(header.number, "header must hold exactly 'N M q'");
    long long n = header.values[0], m = header.values[1], q = header.values[2];
    if (n < 1 || n > 1'000'000) throw ParseError(header.number, "bad variable count N");
    if (m < 1 || m > 1'000'000) throw ParseError(header.number, "bad check count M");
    if (q < 2 || q > 256 || (q & (q - 1)) != 0)
        throw ParseError(header.number, "q must be a power of two in [2, 256]");
    int p = 0;
    while ((1 << p) < q) ++p;
    Field field(p);

    const NumberLine& maxima = need_line(lines, 1, "degree maxima line");
    if (maxima.values.size() != 2)
        throw ParseError(maxima.number, "expected 'dv_max dc_max'");

    const NumberLine& vdeg = need_line(lines, 2, "variable degree line");
    if (vdeg.values.size() != static_cast<std::size_t>(n))
        throw ParseError(vdeg.number, "expected " + std::to_string(n) + " variable degrees");
    const NumberLine& cdeg = need_line(lines, 3, "check degree line");
    if (cdeg.values.size() != static_cast<std::size_t>(m))
        throw ParseError(cdeg.number, "expected " + std::to_string(m) + " check degrees");

    long long dv_actual = 0, dc_actual = 0;
    for (long long d : vdeg.values) {
        if (d < 1) throw ParseError(vdeg.number, "variable degree must be >= 1");
        dv_actual = std::max(dv_actual, d);
    }
    for (long long d : cdeg.values) {
        if (d < 2) throw ParseError(cdeg.number, "check degree must be >= 2");
        dc_actual = std::max(dc_actual, d);
    }
    if (dv_actual != maxima.values[0])
        throw ParseError(maxima.number, "declared dv_max " + std::to_string(maxima.values[0]) +
                                            " but degrees say " + std::to_string(dv_actual));
    if (dc_actual != maxima.values[1])
        throw ParseError(maxima.number, "declared dc_max " + std::to_string(maxima.values[1]) +
                                            " but degrees say " + std::to_string(dc_actual));

    std::vector<std::vector<CheckEntry>> rows;
    rows.reserve(m);
    std::vector<long long> seen_vdeg(n, 0);
    for (long long row = 0; row < m; ++row) {
        const NumberLine& rl = need_line(lines, 4 + row, "row " + std::to_string(row + 1));
        long long deg = cdeg.values[row];
        if (rl.values.size() != static_cast<std::size_t>(2 * deg))
            throw ParseError(rl.number, "check " + std::to_string(row + 1) + " declares degree " +
                                            std::to_string(deg) + " but row holds " +
                                            std::to_string(rl.values.size()) + " fields");
        std::vector<CheckEntry> entries;
        entries.reserve(deg);
        for (long long j = 0; j < deg; ++j) {
            long long var1 = rl.values[2 * j];
            long long h = rl.values[2 * j + 1];
            if (var1 < 1 || var1 > n)
                throw ParseError(rl.number, "variable index " + std::to_string(var1) +
                                                " out of range [1, " + std::to_string(n) + "]");
            if (h == 0) throw ParseError(rl.number, "zero edge label");
            if (h < 0 || h >= q)
                throw ParseError(rl.number,
                                 "edge label " + std::to_string(h) + " out of range [1, q)");
            for (const CheckEntry& prev : entries)
                if (prev.var == var1 - 1)
                    throw ParseError(rl.number, "variable " + std::to_string(var1) +
                                                    " repeated within the row");
            entries.push_back({static_cast<int>(var1 - 1), static_cast<Symbol>(h)});
            ++seen_vdeg[var1 - 1];
        }
        rows.push_back(std::move(entries));
    }
    if (lines.size() > static_cast<std::size_t>(4 + m))
        throw ParseError(lines[4 + m].number, "trailing data after the last check row");
    for (long long v = 0; v < n; ++v) {
        if (seen_vdeg[v] != vdeg.values[v])
            throw ParseError(vdeg.number, "variable " + std::to_string(v + 1) + " declares degree " +
                                              std::to_string(vdeg.values[v]) + " but appears " +
                                              std::to_string(seen_vdeg[v]) + " times");
    }
    return Code(field, static_cast<int>(n), std::move(rows));
}

Code parse_code_file(std::istream& in) {
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return parse_code_string(text);
}

Code load_code_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open code file: " + path);
    return parse_code_file(in);
}

std::string serialize_code_file(const Code& code) {
    std::ostringstream out;
    out << code.num_vars() << ' ' << code.num_checks() << ' ' << code.field().q() << '\n';
    out << code.max_var_degree() << ' ' << code.max_check_degree() << '\n';
    for (int v = 0; v < code.num_vars(); ++v) {
        if (v) out << ' ';
        out << code.var_degree(v);
    }
    out << '\n';
    for (int m = 0; m < code.num_checks(); ++m) {
        if (m) out << ' ';
        out << code.check_degree(m);
    }
    out << '\n';
    for (const auto& row : code.check_rows()) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out << ' ';
            out << (row[j].var + 1) << ' ' << static_cast<int>(row[j].label);
        }
        out << '\n';
    }
    out << "# GF(" << code.field().q() << ") primitive polynomial "
        << code.field().primitive_poly() << '\n';
    return out.str();
}

Code random_regular_code(const Field& field, int num_vars, int var_degree, int check_degree,
                         std::uint64_t seed) {
    if (num_vars < 1 || var_degree < 1 || check_degree < 2)
        throw std::invalid_argument("random_regular_code: need N >= 1, dv >= 1, dc >= 2");
    long long edges = static_cast<long long>(num_vars) * var_degree;
    if (edges % check_degree != 0)
        throw std::invalid_argument("random_regular_code: N*dv must be divisible by dc");
    int num_checks = static_cast<int>(edges / check_degree);
    if (check_degree > num_vars)
        throw std::invalid_argument("random_regular_code: dc exceeds the number of variables");

    std::mt19937_64 rng(mix3(seed, 0x636f6465ULL, static_cast<std::uint64_t>(num_vars)));
    std::vector<int> sockets(edges);
    for (long long i = 0; i < edges; ++i) sockets[i] = static_cast<int>(i / var_degree);
    for (long long i = edges - 1; i > 0; --i) {
        long long j = static_cast<long long>(uniform_below(rng, i + 1));
        std::swap(sockets[i], sockets[j]);
    }

    // Re-pair parallel edges: swap one offender with a random socket until
    // every check sees distinct variables.
    const int max_passes = 1000;
    for (int pass = 0; pass < max_passes; ++pass) {
        std::vector<long long> bad;
        for (int m = 0; m < num_checks; ++m) {
            std::set<int> seen;
            for (int j = 0; j < check_degree; ++j) {
                long long idx = static_cast<long long>(m) * check_degree + j;
                if (!seen.insert(sockets[idx]).second) bad.push_back(idx);
            }
        }
        if (bad.empty()) break;
        if (pass == max_passes - 1)
            throw std::runtime_error("random_regular_code: could not remove parallel edges");
        for (long long idx : bad) {
            long long j = static_cast<long long>(uniform_below(rng, edges));
            std::swap(sockets[idx], sockets[j]);
        }
    }

    std::vector<std::vector<CheckEntry>> rows(num_checks);
    for (int m = 0; m < num_checks; ++m) {
        rows[m].reserve(check_degree);
        for (int j = 0; j < check_degree; ++j) {
            Symbol label = static_cast<Symbol>(
                1 + uniform_below(rng, static_cast<std::uint64_t>(field.q() - 1)));
            rows[m].push_back({sockets[static_cast<long long>(m) * check_degree + j], label});
        }
    }
    return Code(field, num_vars, std::move(rows));
}

Code random_tree_code(const Field& field, int num_vars, int max_check_degree, int max_depth,
                      std::uint64_t seed) {
    if (num_vars < 2) throw std::invalid_argument("random_tree_code: need at least 2 variables");
    if (max_check_degree < 2)
        throw std::invalid_argument("random_tree_code: max check degree must be >= 2");
    if (max_depth < 1) throw std::invalid_argument("random_tree_code: max depth must be >= 1");

    std::mt19937_64 rng(mix3(seed, 0x74726565ULL, static_cast<std::uint64_t>(num_vars)));
    std::vector<int> depth{0};
    std::vector<std::vector<CheckEntry>> rows;
    int next_var = 1;
    auto random_label = [&] {
        return static_cast<Symbol>(1 + uniform_below(rng, static_cast<std::uint64_t>(field.q() - 1)));
    };
    while (next_var < num_vars) {
        std::vector<int> frontier;
        for (int v = 0; v < next_var; ++v)
            if (depth[v] < max_depth) frontier.push_back(v);
        int parent = frontier.empty()
                         ? static_cast<int>(uniform_below(rng, next_var))
                         : frontier[uniform_below(rng, frontier.size())];
        int remaining = num_vars - next_var;
        int dmax = std::min(max_check_degree, remaining + 1);
        int deg = 2 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(dmax - 1)));
        std::vector<CheckEntry> row;
        row.push_back({parent, random_label()});
        for (int t = 0; t < deg - 1; ++t) {
            row.push_back({next_var, random_label()});
            depth.push_back(depth[parent] + 1);
            ++next_var;
        }
        rows.push_back(std::move(row));
    }
    return Code(field, num_vars, std::move(rows));
}

std::vector<Symbol> syndrome(const Code& code, const std::vector<Symbol>& word) {
    if (word.size() != static_cast<std::size_t>(code.num_vars()))
        throw std::invalid_argument("syndrome: word length must equal the variable count");
    const Field& f = code.field();
    std::vector<Symbol> s(code.num_checks(), 0);
    for (int m = 0; m < code.num_checks(); ++m)
        for (const CheckEntry& e : code.check_rows()[m])
            s[m] = f.add(s[m], f.mul(e.label, word[e.var]));
    return s;
}

SystematicForm systematic_form(const Code& code) {
    const Field& f = code.field();
    const int n = code.num_vars();
    const int m = code.num_checks();
    std::vector<std::vector<Symbol>> rows(m, std::vector<Symbol>(n, 0));
    for (int r = 0; r < m; ++r)
        for (const CheckEntry& e : code.check_rows()[r]) rows[r][e.var] = e.label;

    SystematicForm sf;
    int rank = 0;
    for (int col = 0; col < n && rank < m; ++col) {
        int pivot = -1;
        for (int r = rank; r < m; ++r) {
            if (rows[r][col] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        Symbol scale = f.inv(rows[rank][col]);
        for (int c = col; c < n; ++c) rows[rank][c] = f.mul(rows[rank][c], scale);
        for (int r = 0; r < m; ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            Symbol factor = rows[r][col];
            for (int c = col; c < n; ++c)
                rows[r][c] = f.add(rows[r][c], f.mul(factor, rows[rank][c]));
        }
        sf.pivot_cols.push_back(col);
        ++rank;
    }
    sf.rank = rank;
    rows.resize(rank);
    sf.rref = std::move(rows);
    std::size_t next_pivot = 0;
    for (int col = 0; col < n; ++col) {
        if (next_pivot < sf.pivot_cols.size() && sf.pivot_cols[next_pivot] == col)
            ++next_pivot;
        else
            sf.info_cols.push_back(col);
    }
    return sf;
}

std::vector<Symbol> encode(const Code& code, const SystematicForm& sf,
                           const std::vector<Symbol>& info) {
    if (info.size() != sf.info_cols.size())
        throw std::invalid_argument("encode: expected " + std::to_string(sf.info_cols.size()) +
                                    " information symbols, got " + std::to_string(info.size()));
    const Field& f = code.field();
    std::vector<Symbol> word(code.num_vars(), 0);
    for (std::size_t i = 0; i < info.size(); ++i) {
        if (info[i] >= f.q()) throw std::invalid_argument("encode: symbol out of range");
        word[sf.info_cols[i]] = info[i];
    }
    // Each RREF row reads pivot + sum(free part) = 0; in characteristic 2
    // the pivot value equals that sum.
    for (int r = 0; r < sf.rank; ++r) {
        Symbol acc = 0;
        for (int col : sf.info_cols) {
            Symbol h = sf.rref[r][col];
            if (h != 0) acc = f.add(acc, f.mul(h, word[col]));
        }
        word[sf.pivot_cols[r]] = acc;
    }
    return word;
}

std::vector<std::vector<Symbol>> enumerate_codewords(const Code& code, std::uint64_t limit) {
    SystematicForm sf = systematic_form(code);
    const int k = code.num_vars() - sf.rank;
    const int p = code.field().p();
    if (static_cast<long long>(k) * p >= 63)
        throw EnumerationLimitError("enumerate_codewords: codebook holds 2^" +
                                    std::to_string(static_cast<long long>(k) * p) +
                                    " words, over the limit of " + std::to_string(limit));
    std::uint64_t count = 1ULL << (static_cast<long long>(k) * p);
    if (count > limit)
        throw EnumerationLimitError("enumerate_codewords: codebook holds " +
                                    std::to_string(count) + " words, over the limit of " +
                                    std::to_string(limit));
    std::vector<std::vector<Symbol>> words;
    words.reserve(count);
    std::vector<Symbol> info(k, 0);
    const int q = code.field().q();
    for (;;) {
        words.push_back(encode(code, sf, info));
        int pos = 0;
        while (pos < k) {
            int v = info[pos] + 1;
            if (v < q) {
                info[pos] = static_cast<Symbol>(v);
                break;
            }
            info[pos] = 0;
            ++pos;
        }
        if (pos == k) break;
    }
    return words;
}

}  // namespace nbldpc
