"""Numba-jitted batch kernels: one tight loop per block, scalar uint64 ops.

Selected by default when numba imports cleanly; EFPE_BACKEND=numpy skips it.
The S-box is passed in as an array argument so the compiled kernels stay
cacheable across processes.  All literals are pinned to uint64 up front:
numba demotes mixed uint64/int64 expressions to int64 or float64, which
would corrupt values past 2^63.
"""

import numpy as np
from numba import njit, uint64

from .prf import AES_SBOX

name = "numba"

SBOX_U64 = np.array(AES_SBOX, dtype=np.uint64)

_M8 = np.uint64(0xFF)
_M32 = np.uint64(0xFFFFFFFF)
_S8 = np.uint64(8)
_S16 = np.uint64(16)
_S24 = np.uint64(24)
_S32 = np.uint64(32)
_C1 = np.uint64(1)
_C2 = np.uint64(2)
_BCAST = np.uint64(0x01010101)


@njit(cache=True, inline="always")
def _prf_core(x, k0, k1, sbox):
    s = (
        (sbox[(x >> _S24) & _M8] << _S24)
        | (sbox[(x >> _S16) & _M8] << _S16)
        | (sbox[(x >> _S8) & _M8] << _S8)
        | sbox[x & _M8]
    )
    s ^= k0
    s = ((s << _S8) | (s >> _S24)) & _M32
    s = (
        (sbox[(s >> _S24) & _M8] << _S24)
        | (sbox[(s >> _S16) & _M8] << _S16)
        | (sbox[(s >> _S8) & _M8] << _S8)
        | sbox[s & _M8]
    )
    s ^= k1
    return ((s << _S8) | (s >> _S24)) & _M32


@njit(cache=True, inline="always")
def _prf_wide(lo, hi, ib, k0, k1, sbox):
    s1 = _prf_core(lo ^ ib, k0, k1, sbox)
    s2 = _prf_core(s1 ^ hi ^ _C1, k0, k1, sbox)
    s3 = _prf_core(s2 ^ _C2, k0, k1, sbox)
    return (s3 << _S32) | s2


@njit(cache=True)
def _encrypt_kernel(left, right, pow10m, k0s, k1s, sbox):
    rounds = k0s.shape[0]
    for idx in range(left.shape[0]):
        L = left[idx]
        R = right[idx]
        for i in range(rounds):
            f = _prf_wide(R & _M32, R >> _S32, uint64(i) * _BCAST, k0s[i], k1s[i], sbox) % pow10m
            L, R = R, (L + f) % pow10m
        left[idx] = L
        right[idx] = R


@njit(cache=True)
def _decrypt_kernel(left, right, pow10m, k0s, k1s, sbox):
    rounds = k0s.shape[0]
    for idx in range(left.shape[0]):
        L = left[idx]
        R = right[idx]
        for i in range(rounds - 1, -1, -1):
            prev_r = L
            f = _prf_wide(prev_r & _M32, prev_r >> _S32, uint64(i) * _BCAST, k0s[i], k1s[i], sbox) % pow10m
            # R - f can go negative; add the modulus first to stay unsigned.
            L, R = (R + pow10m - f) % pow10m, prev_r
        left[idx] = L
        right[idx] = R


def encrypt_batch(left, right, pow10m, k0s, k1s):
    """Run all Feistel rounds over parallel arrays of halves."""
    left = left.astype(np.uint64, copy=True)
    right = right.astype(np.uint64, copy=True)
    _encrypt_kernel(left, right, np.uint64(pow10m), k0s, k1s, SBOX_U64)
    return left, right


def decrypt_batch(left, right, pow10m, k0s, k1s):
    """Exact inverse of encrypt_batch under the same key arrays."""
    left = left.astype(np.uint64, copy=True)
    right = right.astype(np.uint64, copy=True)
    _decrypt_kernel(left, right, np.uint64(pow10m), k0s, k1s, SBOX_U64)
    return left, right
