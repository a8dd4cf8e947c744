"""Master-key handling and per-round subkey derivation.

A 128-bit master key is viewed as four big-endian 32-bit words W0..W3.
Round i gets one subkey pair: the first word is derived by the PRF core
keyed with (W0, W1), the second keyed with (W2, W3).  The PRF inputs fold
the fixed schedule constant with ``(i << 8) | j`` (j selects the word
inside the pair), so every derivation input is distinct for up to 255
rounds.
"""

import secrets
import random
from dataclasses import dataclass

from .errors import KeyFormatError
from .prf import MASK32, prf_core

SCHEDULE_CONST = 0xA5A5A5A5
DEFAULT_ROUNDS = 8

_HEX_DIGITS = set("0123456789abcdefABCDEF")


@dataclass(frozen=True)
class MasterKey:
    """128-bit key as four big-endian 32-bit words (W0 most significant)."""

    words: tuple[int, int, int, int]

    def __post_init__(self):
        if len(self.words) != 4 or any(not 0 <= w <= MASK32 for w in self.words):
            raise ValueError("master key needs exactly four 32-bit words")

    @classmethod
    def from_int(cls, value: int) -> "MasterKey":
        if not 0 <= value < 1 << 128:
            raise ValueError("master key must fit in 128 bits")
        return cls(tuple((value >> shift) & MASK32 for shift in (96, 64, 32, 0)))

    def to_int(self) -> int:
        w0, w1, w2, w3 = self.words
        return (w0 << 96) | (w1 << 64) | (w2 << 32) | w3

    def to_hex(self) -> str:
        return f"{self.to_int():032x}"


def parse_master_key(text: str) -> MasterKey:
    """Parse 32 hex characters (surrounding whitespace allowed) into a key."""
    s = text.strip()
    if len(s) != 32:
        raise KeyFormatError(f"key must be 32 hex characters, got {len(s)}")
    for pos, ch in enumerate(s):
        if ch not in _HEX_DIGITS:
            raise KeyFormatError(f"non-hex character {ch!r} at position {pos}")
    return MasterKey.from_int(int(s, 16))


def format_master_key(key: MasterKey) -> str:
    """Inverse of parse_master_key: 32 lowercase hex characters."""
    return key.to_hex()


def generate_master_key(seed: int | None = None) -> MasterKey:
    """Fresh 128-bit key from the OS CSPRNG, or a deterministic test key.

    Seeded keys are reproducible fixtures for KAT generation and tests;
    they are NOT secure and must never protect real data.
    """
    if seed is None:
        return MasterKey.from_int(secrets.randbits(128))
    return MasterKey.from_int(random.Random(seed).getrandbits(128))


def derive_round_keys(master: MasterKey, rounds: int = DEFAULT_ROUNDS) -> tuple[tuple[int, int], ...]:
    """Derive the ordered subkey pairs for each round from the master key."""
    if not 2 <= rounds <= 255:
        raise ValueError(f"rounds must be in [2, 255], got {rounds}")
    w0, w1, w2, w3 = master.words
    return tuple(
        (
            prf_core(SCHEDULE_CONST ^ ((i << 8) | 0), (w0, w1)),
            prf_core(SCHEDULE_CONST ^ ((i << 8) | 1), (w2, w3)),
        )
        for i in range(rounds)
    )
