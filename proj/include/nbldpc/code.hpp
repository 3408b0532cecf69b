#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "nbldpc/gf.hpp"

namespace nbldpc {

/// One nonzero entry h_{m,n} of the parity-check matrix, seen from its row.
struct CheckEntry {
    int var;       // variable (column) index, 0-based
    Symbol label;  // nonzero coefficient in GF(q)
    bool operator==(const CheckEntry&) const = default;
};

/// Text-format failure carrying the 1-based line it was detected on.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message);
    int line() const noexcept { return line_; }

private:
    int line_;
};

/// A q-ary LDPC code given by its labeled Tanner graph: M check rows over
/// N variables, each row an ordered list of (variable, label) entries with
/// entries kept sorted by variable index. Construction validates the
/// structure (nonzero labels, indices in range, no repeated variable within
/// a row, check degrees >= 2, every variable connected) and throws
/// std::invalid_argument on violation. Immutable afterwards.
class Code {
public:
    Code(const Field& field, int num_vars, std::vector<std::vector<CheckEntry>> check_rows);

    const Field& field() const noexcept { return field_; }
    int num_vars() const noexcept { return n_; }
    int num_checks() const noexcept { return static_cast<int>(rows_.size()); }
    int num_edges() const noexcept { return num_edges_; }

    const std::vector<std::vector<CheckEntry>>& check_rows() const noexcept { return rows_; }

    /// Edges are numbered row by row: edge j of check m has the global
    /// index row_offset(m) + j.
    int row_offset(int check) const noexcept { return row_offset_[check]; }
    int edge_var(int edge) const noexcept { return edge_var_[edge]; }
    Symbol edge_label(int edge) const noexcept { return edge_label_[edge]; }

    /// Global edge indices incident to each variable node.
    const std::vector<std::vector<int>>& var_edges() const noexcept { return var_edges_; }

    int check_degree(int check) const noexcept { return static_cast<int>(rows_[check].size()); }
    int var_degree(int var) const noexcept { return static_cast<int>(var_edges_[var].size()); }
    int max_check_degree() const noexcept;
    int max_var_degree() const noexcept;

    /// Rate 1 - M/N of the designed matrix (not accounting for rank loss).
    double design_rate() const noexcept;

    bool operator==(const Code& other) const noexcept {
        return field_ == other.field_ && n_ == other.n_ && rows_ == other.rows_;
    }

private:
    Field field_;
    int n_;
    std::vector<std::vector<CheckEntry>> rows_;
    std::vector<int> row_offset_;
    std::vector<int> edge_var_;
    std::vector<Symbol> edge_label_;
    std::vector<std::vector<int>> var_edges_;
    int num_edges_ = 0;
};

/// Reads the NBALIST text format:
///
///   line 1:  N M q          (q a power of two, 2..256)
///   line 2:  dv_max dc_max  (exact maximum variable / check degrees)
///   line 3:  N variable degrees
///   line 4:  M check degrees (each >= 2)
///   then M rows, row m holding its degree's worth of "n h" pairs with
///   1-based variable indices n and labels h in [1, q).
///
/// '#' starts a comment running to end of line; blank lines are skipped;
/// any amount of whitespace separates fields on input. The final line must
/// end with a newline. Structural violations raise ParseError with the
/// offending line number.
Code parse_code_file(std::istream& in);
Code parse_code_string(const std::string& text);
Code load_code_file(const std::string& path);

/// Canonical NBALIST writer: single spaces, rows ascending, entries sorted
/// by variable index, a trailing comment echoing the field's primitive
/// polynomial, final newline. parse(serialize(c)) == c for every code, and
/// serialize(parse(f)) == f for files already in canonical form.
std::string serialize_code_file(const Code& code);

/// Random (dv, dc)-regular Tanner graph on num_vars variables with labels
/// uniform in [1, q). Requires num_vars * var_degree divisible by
/// check_degree. Parallel edges are repaired by re-pairing; deterministic
/// for a fixed seed.
Code random_regular_code(const Field& field, int num_vars, int var_degree, int check_degree,
                         std::uint64_t seed);

/// Random cycle-free (tree) Tanner graph on num_vars >= 2 variables. Checks
/// of degree 2..max_check_degree are attached breadth-outward; no variable
/// sits deeper than max_depth check layers from the root. Deterministic for
/// a fixed seed.
Code random_tree_code(const Field& field, int num_vars, int max_check_degree, int max_depth,
                      std::uint64_t seed);

/// s_m = sum_n h_{m,n} x_n over GF(q), one value per check.
std::vector<Symbol> syndrome(const Code& code, const std::vector<Symbol>& word);

/// Reduced row echelon form of H over GF(q). Columns are not physically
/// moved; pivot_cols lists the pivot column of each of the `rank` kept
/// rows and info_cols the remaining (free) columns, ascending.
struct SystematicForm {
    int rank = 0;
    std::vector<int> pivot_cols;
    std::vector<int> info_cols;
    std::vector<std::vector<Symbol>> rref;  // rank rows of width N
};

SystematicForm systematic_form(const Code& code);

/// Places `info` (size N - rank) on the free columns and solves the pivot
/// columns so the result is a codeword.
std::vector<Symbol> encode(const Code& code, const SystematicForm& sf,
                           const std::vector<Symbol>& info);

class EnumerationLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// All q^(N - rank) codewords, odometer order over the information
/// symbols. Refuses with EnumerationLimitError (reporting the count) when
/// the codebook exceeds `limit`.
std::vector<std::vector<Symbol>> enumerate_codewords(const Code& code, std::uint64_t limit);

}  // namespace nbldpc
