"""efpe: lightweight format-preserving encryption for decimal strings.

An 8-round balanced Feistel network over even-length digit strings, driven
by a compact two-iteration S-box/XOR/rotate PRF.  Ships with a CLI, a
known-answer-vector toolset and statistical analysis suites.
"""

from .errors import FormatError, KeyFormatError
from .feistel import Cipher, join_halves, split_halves, validate_numeric_string
from .keyschedule import (
    DEFAULT_ROUNDS,
    MasterKey,
    derive_round_keys,
    format_master_key,
    generate_master_key,
    parse_master_key,
)
from .prf import AES_SBOX, prf_core, prf_wide, rotate_left_one_byte, sub_bytes
from .roundfunc import pow10, round_f

__version__ = "1.0.0"

__all__ = [
    "AES_SBOX",
    "Cipher",
    "DEFAULT_ROUNDS",
    "FormatError",
    "KeyFormatError",
    "MasterKey",
    "derive_round_keys",
    "format_master_key",
    "generate_master_key",
    "join_halves",
    "parse_master_key",
    "pow10",
    "prf_core",
    "prf_wide",
    "rotate_left_one_byte",
    "round_f",
    "split_halves",
    "sub_bytes",
    "validate_numeric_string",
]
