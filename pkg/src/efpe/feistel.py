"""Balanced Feistel cipher over even-length decimal strings.

A 2m-digit string splits into two m-digit halves held as integers.  Each
round replaces (L, R) with (R, (L + F(R, i)) mod 10^m); decryption walks
the rounds backwards and subtracts.  Modular addition is the combiner, so
the structure inverts exactly and ciphertexts keep the input's length and
alphabet, leading zeros included.

Same key and plaintext always give the same ciphertext: there is no tweak
or nonce.  Callers who need semantic security across repeats must handle
that at a higher layer.
"""

import numpy as np

from .errors import FormatError
from .keyschedule import DEFAULT_ROUNDS, MasterKey, derive_round_keys
from .roundfunc import pow10, round_f
from . import backend as _backend

MAX_DIGITS = 32


def validate_numeric_string(s: str) -> str:
    """Check the cipher's input format; returns s unchanged if valid."""
    if not isinstance(s, str) or not s:
        raise FormatError("input must be a non-empty digit string")
    if len(s) % 2:
        raise FormatError(f"odd length {len(s)}; only even-length strings are supported")
    if len(s) > MAX_DIGITS:
        raise FormatError(f"length {len(s)} exceeds the {MAX_DIGITS}-digit maximum")
    for pos, ch in enumerate(s):
        if not "0" <= ch <= "9":
            raise FormatError(f"non-digit character {ch!r} at position {pos}")
    return s


def split_halves(s: str) -> tuple[int, int, int]:
    """Validate and split into (left, right, m) with m = len(s) / 2."""
    validate_numeric_string(s)
    m = len(s) // 2
    return int(s[:m]), int(s[m:]), m


def join_halves(left: int, right: int, m: int) -> str:
    """Render both halves as exactly m digits each, zero-padded."""
    return f"{left:0{m}d}{right:0{m}d}"


class Cipher:
    """Encryption context: a round-key schedule shared by both directions.

    Immutable after construction; one instance may be used concurrently
    from any number of threads.  ``rounds`` is configurable for reduced-
    round analysis but the cipher is specified and tested at the default
    of 8.
    """

    def __init__(self, key: MasterKey, rounds: int = DEFAULT_ROUNDS):
        self.rounds = rounds
        self.round_keys = derive_round_keys(key, rounds)
        self._k0s = np.array([p[0] for p in self.round_keys], dtype=np.uint64)
        self._k1s = np.array([p[1] for p in self.round_keys], dtype=np.uint64)

    def encrypt_block(self, plaintext: str) -> str:
        left, right, m = split_halves(plaintext)
        pow10m = pow10(m)
        for i in range(self.rounds):
            f = round_f(right, self.round_keys[i], i, m)
            left, right = right, (left + f) % pow10m
        return join_halves(left, right, m)

    def decrypt_block(self, ciphertext: str) -> str:
        left, right, m = split_halves(ciphertext)
        pow10m = pow10(m)
        for i in range(self.rounds - 1, -1, -1):
            prev_right = left
            f = round_f(prev_right, self.round_keys[i], i, m)
            left, right = (right - f) % pow10m, prev_right
        return join_halves(left, right, m)

    def encrypt_batch(self, left, right, m: int, backend: str | None = None):
        """Encrypt parallel uint64 arrays of halves; returns new arrays.

        Dispatches to the selected kernel backend (numba or numpy); the
        scalar path and both kernels produce identical values.
        """
        b = _backend.get_backend(backend)
        return b.encrypt_batch(np.asarray(left), np.asarray(right), pow10(m), self._k0s, self._k1s)

    def decrypt_batch(self, left, right, m: int, backend: str | None = None):
        """Inverse of encrypt_batch."""
        b = _backend.get_backend(backend)
        return b.decrypt_batch(np.asarray(left), np.asarray(right), pow10(m), self._k0s, self._k1s)
