"""Feistel round function: wide PRF output reduced into the half-block domain."""

from .prf import MASK32, prf_wide

MAX_HALF_DIGITS = 16

# 10^0 .. 10^16, built by repeated multiplication; 10^16 < 2^54 fits uint64.
_POW10 = [1]
for _ in range(MAX_HALF_DIGITS):
    _POW10.append(_POW10[-1] * 10)
_POW10 = tuple(_POW10)


def pow10(m: int) -> int:
    """Exact 10^m for m in [0, 16]."""
    if not 0 <= m <= MAX_HALF_DIGITS:
        raise ValueError(f"m must be in [0, {MAX_HALF_DIGITS}], got {m}")
    return _POW10[m]


def round_f(r: int, keys: tuple[int, int], round_index: int, m: int) -> int:
    """PRF the right half (split into 32-bit limbs) and reduce mod 10^m.

    The reduction is a plain modulo, so outputs carry a small bias
    (< 10^m / 2^64 relative); this is accepted and documented rather than
    corrected by rejection sampling.
    """
    pow10m = pow10(m)
    if not 0 <= r < pow10m:
        raise ValueError(f"half-block {r} outside [0, 10^{m})")
    return prf_wide(r & MASK32, r >> 32, round_index, keys) % pow10m
