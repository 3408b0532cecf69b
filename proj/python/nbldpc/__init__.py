"""Non-binary LDPC decoding over GF(2^p).

The package wraps the C++ core: Galois field arithmetic, labeled Tanner
graphs with an NBALIST text format, AWGN/QAM channel metrics, the
message-passing decoder family (sum-product, the min-sum realizations,
p-norm, min-max standard/selective) with operation accounting,
enumeration oracles, and a deterministic Monte Carlo driver.
"""

from ._core import (
    Code,
    Convention,
    DecodeResult,
    DecoderConfig,
    EnumerationLimitError,
    Field,
    FrameOutcome,
    IntrinsicInfo,
    Modulation,
    ModulationScheme,
    OpCounter,
    OracleRule,
    ParseError,
    PigeonholeReport,
    Rule,
    SelectiveStepReport,
    SimConfig,
    SimRecord,
    SystematicForm,
    a_posteriori_order,
    add_awgn,
    brute_check_node_row,
    check_node_messages,
    compute_intrinsic,
    decode,
    decoder_token,
    ebno_to_sigma,
    emit_csv,
    encode,
    enumerate_codewords,
    hard_decision_symbol,
    is_cycle_free,
    load_code_file,
    min_max_selective_step,
    min_max_step,
    ml_decode,
    modulate,
    normalize_intrinsic_ai,
    parse_code_string,
    random_regular_code,
    random_tree_code,
    rule_convention,
    rule_name,
    run_frame,
    run_sweep,
    serialize_code_file,
    syndrome,
    systematic_form,
    verify_pigeonhole,
    wilson_interval,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
