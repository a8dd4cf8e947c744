"""Pure-numpy batch kernels: vectorized over arrays of half-block values.

Fallback lane used when numba is unavailable or EFPE_BACKEND=numpy.
All arrays are uint64; values never exceed 10^16 + 10^16 < 2^55, so no
intermediate overflows.
"""

import numpy as np

from .prf import AES_SBOX

name = "numpy"

SBOX_U64 = np.array(AES_SBOX, dtype=np.uint64)
_MASK32 = np.uint64(0xFFFFFFFF)


def _sub_bytes(x):
    return (
        (SBOX_U64[(x >> 24) & 0xFF] << 24)
        | (SBOX_U64[(x >> 16) & 0xFF] << 16)
        | (SBOX_U64[(x >> 8) & 0xFF] << 8)
        | SBOX_U64[x & 0xFF]
    )


def _rotl8(x):
    return ((x << 8) | (x >> 24)) & _MASK32


def _prf_core(x, k0, k1):
    s = _rotl8(_sub_bytes(x) ^ k0)
    return _rotl8(_sub_bytes(s) ^ k1)


def _prf_wide(lo, hi, round_index, k0, k1):
    ib = np.uint64(round_index * 0x01010101)
    s1 = _prf_core(lo ^ ib, k0, k1)
    s2 = _prf_core(s1 ^ hi ^ np.uint64(1), k0, k1)
    s3 = _prf_core(s2 ^ np.uint64(2), k0, k1)
    return (s3 << 32) | s2


def encrypt_batch(left, right, pow10m, k0s, k1s):
    """Run all Feistel rounds over parallel arrays of halves."""
    left = left.astype(np.uint64, copy=True)
    right = right.astype(np.uint64, copy=True)
    p = np.uint64(pow10m)
    for i in range(len(k0s)):
        f = _prf_wide(right & _MASK32, right >> 32, i, k0s[i], k1s[i]) % p
        left, right = right, (left + f) % p
    return left, right


def decrypt_batch(left, right, pow10m, k0s, k1s):
    """Exact inverse of encrypt_batch under the same key arrays."""
    left = left.astype(np.uint64, copy=True)
    right = right.astype(np.uint64, copy=True)
    p = np.uint64(pow10m)
    for i in range(len(k0s) - 1, -1, -1):
        prev_right = left
        f = _prf_wide(prev_right & _MASK32, prev_right >> 32, i, k0s[i], k1s[i]) % p
        # right - f can go negative; add p first to stay in uint64.
        left, right = (right + p - f) % p, prev_right
    return left, right
