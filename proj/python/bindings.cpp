// Python bindings for the decoder library. The module mirrors the C++
// surface operation-for-operation: field arithmetic, code handling,
// channel metrics, the decoder family and the Monte Carlo driver. Rows of
// metrics cross the boundary as plain lists; symbol vectors as lists of
// ints.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "nbldpc/channel.hpp"
#include "nbldpc/code.hpp"
#include "nbldpc/decoder.hpp"
#include "nbldpc/gf.hpp"
#include "nbldpc/oracle.hpp"
#include "nbldpc/rng.hpp"
#include "nbldpc/sim.hpp"

namespace py = pybind11;
using namespace nbldpc;

namespace {

std::vector<std::vector<std::pair<int, int>>> rows_as_pairs(const Code& code) {
    std::vector<std::vector<std::pair<int, int>>> out;
    out.reserve(code.check_rows().size());
    for (const auto& row : code.check_rows()) {
        std::vector<std::pair<int, int>> r;
        r.reserve(row.size());
        for (const CheckEntry& e : row) r.emplace_back(e.var, static_cast<int>(e.label));
        out.push_back(std::move(r));
    }
    return out;
}

Code code_from_pairs(const Field& field, int num_vars,
                     const std::vector<std::vector<std::pair<int, int>>>& rows) {
    std::vector<std::vector<CheckEntry>> converted;
    converted.reserve(rows.size());
    for (const auto& row : rows) {
        std::vector<CheckEntry> r;
        r.reserve(row.size());
        for (const auto& [var, label] : row)
            r.push_back(CheckEntry{var, static_cast<Symbol>(label)});
        converted.push_back(std::move(r));
    }
    return Code(field, num_vars, std::move(converted));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Non-binary LDPC decoding over GF(2^p): message-passing decoder "
              "family, enumeration oracles and a Monte Carlo simulation driver.";

    py::register_exception<ParseError>(m, "ParseError");
    py::register_exception<EnumerationLimitError>(m, "EnumerationLimitError");

    // ---- field --------------------------------------------------------------
    py::class_<Field>(m, "Field")
        .def(py::init<int>(), py::arg("extension_degree"))
        .def_property_readonly("p", &Field::p)
        .def_property_readonly("q", &Field::q)
        .def("add", &Field::add)
        .def("sub", &Field::sub)
        .def("mul", &Field::mul)
        .def("div", &Field::div)
        .def("inv", &Field::inv)
        .def("log", &Field::log)
        .def("exp", &Field::exp)
        .def_static("primitive_poly_for", &Field::primitive_poly_for)
        .def("__eq__", [](const Field& a, const Field& b) { return a == b; })
        .def("__repr__",
             [](const Field& f) { return "Field(GF(" + std::to_string(f.q()) + "))"; });

    // ---- code ---------------------------------------------------------------
    py::class_<Code>(m, "Code")
        .def(py::init(&code_from_pairs), py::arg("field"), py::arg("num_vars"),
             py::arg("check_rows"),
             "Build from rows of (variable_index, label) pairs.")
        .def_property_readonly("field", &Code::field)
        .def_property_readonly("num_vars", &Code::num_vars)
        .def_property_readonly("num_checks", &Code::num_checks)
        .def_property_readonly("num_edges", &Code::num_edges)
        .def_property_readonly("check_rows", &rows_as_pairs)
        .def("check_degree", &Code::check_degree)
        .def("var_degree", &Code::var_degree)
        .def("design_rate", &Code::design_rate)
        .def("__eq__", [](const Code& a, const Code& b) { return a == b; })
        .def("__repr__", [](const Code& c) {
            std::ostringstream s;
            s << "Code(GF(" << c.field().q() << "), N=" << c.num_vars()
              << ", M=" << c.num_checks() << ")";
            return s.str();
        });

    py::class_<SystematicForm>(m, "SystematicForm")
        .def_readonly("rank", &SystematicForm::rank)
        .def_readonly("pivot_cols", &SystematicForm::pivot_cols)
        .def_readonly("info_cols", &SystematicForm::info_cols)
        .def_readonly("rref", &SystematicForm::rref);

    m.def("parse_code_string", &parse_code_string, py::arg("text"));
    m.def("load_code_file", &load_code_file, py::arg("path"));
    m.def("serialize_code_file", &serialize_code_file, py::arg("code"));
    m.def("random_regular_code", &random_regular_code, py::arg("field"), py::arg("num_vars"),
          py::arg("var_degree"), py::arg("check_degree"), py::arg("seed"));
    m.def("random_tree_code", &random_tree_code, py::arg("field"), py::arg("num_vars"),
          py::arg("max_check_degree"), py::arg("max_depth"), py::arg("seed"));
    m.def("systematic_form", &systematic_form, py::arg("code"));
    m.def("encode", &encode, py::arg("code"), py::arg("systematic_form"), py::arg("info"));
    m.def("syndrome", &syndrome, py::arg("code"), py::arg("word"));
    m.def("enumerate_codewords", &enumerate_codewords, py::arg("code"),
          py::arg("limit") = 100'000);

    // ---- channel ------------------------------------------------------------
    py::enum_<Convention>(m, "Convention")
        .value("LogProb", Convention::LogProb)
        .value("ZeroRef", Convention::ZeroRef)
        .value("StarRef", Convention::StarRef);

    py::class_<IntrinsicInfo>(m, "IntrinsicInfo")
        .def(py::init([](int num_vars, int q, Convention conv, std::vector<double> gamma) {
                 IntrinsicInfo info;
                 info.num_vars = num_vars;
                 info.q = q;
                 info.convention = conv;
                 info.sigma = 1.0;
                 if (gamma.size() != static_cast<std::size_t>(num_vars) * q)
                     throw std::invalid_argument("IntrinsicInfo: gamma must hold num_vars * q entries");
                 info.gamma = std::move(gamma);
                 return info;
             }),
             py::arg("num_vars"), py::arg("q"), py::arg("convention"), py::arg("gamma"))
        .def_readwrite("num_vars", &IntrinsicInfo::num_vars)
        .def_readwrite("q", &IntrinsicInfo::q)
        .def_readwrite("convention", &IntrinsicInfo::convention)
        .def_readwrite("sigma", &IntrinsicInfo::sigma)
        .def_readwrite("gamma", &IntrinsicInfo::gamma)
        .def("row", [](const IntrinsicInfo& info, int n) {
            if (n < 0 || n >= info.num_vars) throw py::index_error();
            return std::vector<double>(info.gamma.begin() + static_cast<std::size_t>(n) * info.q,
                                       info.gamma.begin() + static_cast<std::size_t>(n + 1) * info.q);
        });

    py::class_<ModulationScheme>(m, "ModulationScheme")
        .def_readonly("name", &ModulationScheme::name)
        .def_readonly("q", &ModulationScheme::q)
        .def_readonly("bits_per_symbol", &ModulationScheme::bits_per_symbol)
        .def_readonly("real_only", &ModulationScheme::real_only)
        .def_readonly("points", &ModulationScheme::points)
        .def_static("bpsk", &ModulationScheme::bpsk)
        .def_static("qam16", &ModulationScheme::qam16);

    m.def("ebno_to_sigma", &ebno_to_sigma, py::arg("ebno_db"), py::arg("rate"),
          py::arg("bits_per_symbol"));
    m.def("modulate", &modulate, py::arg("word"), py::arg("scheme"));
    m.def(
        "add_awgn",
        [](std::vector<std::complex<double>> samples, double sigma, std::uint64_t seed) {
            std::mt19937_64 rng(seed);
            add_awgn(samples, sigma, rng);
            return samples;
        },
        py::arg("samples"), py::arg("sigma"), py::arg("seed"),
        "Returns a noisy copy drawn from a generator seeded with `seed`.");
    m.def("compute_intrinsic", &compute_intrinsic, py::arg("observations"), py::arg("sigma"),
          py::arg("scheme"), py::arg("convention"));

    // ---- decoder ------------------------------------------------------------
    py::enum_<Rule>(m, "Rule")
        .value("SumProduct", Rule::SumProduct)
        .value("MinSum", Rule::MinSum)
        .value("MinSum0", Rule::MinSum0)
        .value("MinSumStar", Rule::MinSumStar)
        .value("PNorm", Rule::PNorm)
        .value("Euclidean", Rule::Euclidean)
        .value("MinMaxStandard", Rule::MinMaxStandard)
        .value("MinMaxSelective", Rule::MinMaxSelective);

    m.def("rule_name", &rule_name);
    m.def("rule_convention", &rule_convention);

    py::class_<DecoderConfig>(m, "DecoderConfig")
        .def(py::init<>())
        .def_readwrite("rule", &DecoderConfig::rule)
        .def_readwrite("p", &DecoderConfig::p)
        .def_readwrite("max_iterations", &DecoderConfig::max_iterations)
        .def_readwrite("ai", &DecoderConfig::ai)
        .def_readwrite("cot", &DecoderConfig::cot)
        .def_readwrite("early_stop", &DecoderConfig::early_stop)
        .def_readwrite("record_history", &DecoderConfig::record_history);

    py::class_<OpCounter>(m, "OpCounter")
        .def(py::init<>())
        .def_readwrite("additions", &OpCounter::additions)
        .def_readwrite("comparisons", &OpCounter::comparisons)
        .def_readwrite("multiplications", &OpCounter::multiplications)
        .def_readwrite("pair_evaluations", &OpCounter::pair_evaluations)
        .def("total", &OpCounter::total)
        .def("__repr__", [](const OpCounter& c) {
            std::ostringstream s;
            s << "OpCounter(additions=" << c.additions << ", comparisons=" << c.comparisons
              << ", multiplications=" << c.multiplications
              << ", pair_evaluations=" << c.pair_evaluations << ")";
            return s.str();
        });

    py::class_<DecodeResult>(m, "DecodeResult")
        .def_readonly("hard_decision", &DecodeResult::hard_decision)
        .def_readonly("a_posteriori", &DecodeResult::a_posteriori)
        .def_readonly("iterations_used", &DecodeResult::iterations_used)
        .def_readonly("converged", &DecodeResult::converged)
        .def_readonly("ops", &DecodeResult::ops)
        .def_readonly("ops_by_iteration", &DecodeResult::ops_by_iteration)
        .def_readonly("history", &DecodeResult::history);

    m.def("decode", &decode, py::arg("code"), py::arg("intrinsic"), py::arg("config"));
    m.def("normalize_intrinsic_ai", &normalize_intrinsic_ai, py::arg("intrinsic"), py::arg("ai"));
    m.def(
        "check_node_messages",
        [](const Field& field, Rule rule, const std::vector<std::vector<double>>& alpha,
           const std::vector<Symbol>& labels, const DecoderConfig& config) {
            OpCounter ops;
            auto rows = check_node_messages(field, rule, alpha, labels, config, ops);
            return py::make_tuple(rows, ops);
        },
        py::arg("field"), py::arg("rule"), py::arg("alpha"), py::arg("labels"),
        py::arg("config"), "Returns (rows, op_counter).");
    m.def(
        "min_max_step",
        [](const Field& field, Symbol h, Symbol h1, Symbol h2, const std::vector<double>& f1,
           const std::vector<double>& f2) {
            OpCounter ops;
            auto out = min_max_step(field, h, h1, h2, f1, f2, ops);
            return py::make_tuple(out, ops);
        },
        py::arg("field"), py::arg("h"), py::arg("h1"), py::arg("h2"), py::arg("f1"),
        py::arg("f2"), "Returns (row, op_counter).");

    py::class_<SelectiveStepReport>(m, "SelectiveStepReport")
        .def_readonly("delta1", &SelectiveStepReport::delta1)
        .def_readonly("delta2", &SelectiveStepReport::delta2)
        .def_readonly("pair_evaluations", &SelectiveStepReport::pair_evaluations);

    m.def(
        "min_max_selective_step",
        [](const Field& field, Symbol h, Symbol h1, Symbol h2, const std::vector<double>& f1,
           const std::vector<double>& f2, double cot) {
            OpCounter ops;
            SelectiveStepReport report;
            auto out = min_max_selective_step(field, h, h1, h2, f1, f2, cot, ops, &report);
            return py::make_tuple(out, ops, report);
        },
        py::arg("field"), py::arg("h"), py::arg("h1"), py::arg("h2"), py::arg("f1"),
        py::arg("f2"), py::arg("cot"), "Returns (row, op_counter, report).");
    m.def(
        "hard_decision_symbol",
        [](const std::vector<double>& row, Rule rule) { return hard_decision_symbol(row, rule); },
        py::arg("row"), py::arg("rule"));
    m.def(
        "a_posteriori_order",
        [](const std::vector<double>& row, Rule rule, double tie_tol) {
            return a_posteriori_order(row, rule, tie_tol);
        },
        py::arg("row"), py::arg("rule"), py::arg("tie_tol") = 1e-9);

    // ---- oracles ------------------------------------------------------------
    py::enum_<OracleRule>(m, "OracleRule")
        .value("MinSum", OracleRule::MinSum)
        .value("PNorm", OracleRule::PNorm)
        .value("MinMax", OracleRule::MinMax)
        .value("SumProduct", OracleRule::SumProduct);

    m.def("brute_check_node_row", &brute_check_node_row, py::arg("field"), py::arg("rule"),
          py::arg("p"), py::arg("alpha"), py::arg("labels"), py::arg("target"),
          py::arg("enumeration_guard") = 1'000'000);
    m.def("ml_decode", &ml_decode, py::arg("code"), py::arg("intrinsic"),
          py::arg("codeword_limit") = 100'000);
    m.def("is_cycle_free", &is_cycle_free, py::arg("code"));

    py::class_<PigeonholeReport>(m, "PigeonholeReport")
        .def_readonly("ok", &PigeonholeReport::ok)
        .def_readonly("failing_symbol", &PigeonholeReport::failing_symbol)
        .def_readonly("witnesses", &PigeonholeReport::witnesses);

    m.def("verify_pigeonhole", &verify_pigeonhole, py::arg("field"), py::arg("h"), py::arg("h1"),
          py::arg("h2"), py::arg("delta1"), py::arg("delta2"));

    // ---- simulation ---------------------------------------------------------
    py::enum_<Modulation>(m, "Modulation")
        .value("Bpsk", Modulation::Bpsk)
        .value("Qam16", Modulation::Qam16);

    py::class_<SimConfig>(m, "SimConfig")
        .def(py::init<>())
        .def_readwrite("code_path", &SimConfig::code_path)
        .def_readwrite("generate", &SimConfig::generate)
        .def_readwrite("gen_n", &SimConfig::gen_n)
        .def_readwrite("gen_dv", &SimConfig::gen_dv)
        .def_readwrite("gen_dc", &SimConfig::gen_dc)
        .def_readwrite("gen_q", &SimConfig::gen_q)
        .def_readwrite("decoder", &SimConfig::decoder)
        .def_readwrite("modulation", &SimConfig::modulation)
        .def_readwrite("ebno_db", &SimConfig::ebno_db)
        .def_readwrite("max_frames", &SimConfig::max_frames)
        .def_readwrite("max_frame_errors", &SimConfig::max_frame_errors)
        .def_readwrite("seed", &SimConfig::seed)
        .def_readwrite("workers", &SimConfig::workers);

    py::class_<SimRecord>(m, "SimRecord")
        .def_readonly("ebno_db", &SimRecord::ebno_db)
        .def_readonly("decoder", &SimRecord::decoder)
        .def_readonly("frames", &SimRecord::frames)
        .def_readonly("bit_errors", &SimRecord::bit_errors)
        .def_readonly("frame_errors", &SimRecord::frame_errors)
        .def_readonly("ber", &SimRecord::ber)
        .def_readonly("fer", &SimRecord::fer)
        .def_readonly("avg_iterations", &SimRecord::avg_iterations)
        .def_readonly("additions_per_bit", &SimRecord::additions_per_bit)
        .def_readonly("comparisons_per_bit", &SimRecord::comparisons_per_bit)
        .def_readonly("multiplications_per_bit", &SimRecord::multiplications_per_bit);

    py::class_<FrameOutcome>(m, "FrameOutcome")
        .def_readonly("frame_error", &FrameOutcome::frame_error)
        .def_readonly("info_bit_errors", &FrameOutcome::info_bit_errors)
        .def_readonly("iterations", &FrameOutcome::iterations)
        .def_readonly("converged", &FrameOutcome::converged)
        .def_readonly("ops", &FrameOutcome::ops)
        .def_readonly("transmitted", &FrameOutcome::transmitted)
        .def_readonly("decoded", &FrameOutcome::decoded);

    m.def("run_frame", &run_frame, py::arg("code"), py::arg("systematic_form"),
          py::arg("scheme"), py::arg("decoder"), py::arg("sigma"), py::arg("seed"),
          py::arg("snr_index"), py::arg("frame_index"));
    m.def("run_sweep",
          py::overload_cast<const Code&, const SimConfig&>(&run_sweep), py::arg("code"),
          py::arg("config"), py::call_guard<py::gil_scoped_release>());
    m.def("run_sweep", py::overload_cast<const SimConfig&>(&run_sweep), py::arg("config"),
          py::call_guard<py::gil_scoped_release>());
    m.def("emit_csv", &emit_csv, py::arg("records"));
    m.def("wilson_interval", &wilson_interval, py::arg("errors"), py::arg("trials"),
          py::arg("z") = 1.96);
    m.def("decoder_token", &decoder_token, py::arg("decoder"));
}
