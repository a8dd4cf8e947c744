"""Standalone straight-line reference implementation used as the test oracle.

This module must stay independent of the efpe package: nothing here imports
from it.  The S-box is computed from GF(2^8) field arithmetic instead of a
lookup table, and the cipher is a direct loop transcription.  All golden
values frozen in the test suite (and the shipped KAT file) were produced by
this code before the package implementation was trusted.
"""

import random

MASK32 = 0xFFFFFFFF
SCHEDULE_CONST = 0xA5A5A5A5


def _gf_mul(a: int, b: int) -> int:
    # Multiplication in GF(2^8) modulo the AES polynomial x^8+x^4+x^3+x+1.
    p = 0
    for _ in range(8):
        if b & 1:
            p ^= a
        carry = a & 0x80
        a = (a << 1) & 0xFF
        if carry:
            a ^= 0x1B
        b >>= 1
    return p


def _gf_inv(a: int) -> int:
    if a == 0:
        return 0
    for x in range(1, 256):
        if _gf_mul(a, x) == 1:
            return x
    raise ArithmeticError(f"no inverse for {a:#x}")


def _affine(b: int) -> int:
    out = b
    for shift in (1, 2, 3, 4):
        out ^= ((b << shift) | (b >> (8 - shift))) & 0xFF
    return out ^ 0x63


SBOX = [_affine(_gf_inv(x)) for x in range(256)]


def sub_bytes(x: int) -> int:
    return (
        (SBOX[(x >> 24) & 0xFF] << 24)
        | (SBOX[(x >> 16) & 0xFF] << 16)
        | (SBOX[(x >> 8) & 0xFF] << 8)
        | SBOX[x & 0xFF]
    )


def rotl8(x: int) -> int:
    return ((x << 8) | (x >> 24)) & MASK32


def prf_core(x: int, k0: int, k1: int) -> int:
    s = x
    s = rotl8(sub_bytes(s) ^ k0)
    s = rotl8(sub_bytes(s) ^ k1)
    return s


def prf_wide(lo: int, hi: int, round_index: int, k0: int, k1: int) -> int:
    ib = round_index * 0x01010101
    s1 = prf_core(lo ^ ib, k0, k1)
    s2 = prf_core(s1 ^ hi ^ 0x00000001, k0, k1)
    s3 = prf_core(s2 ^ 0x00000002, k0, k1)
    return (s3 << 32) | s2


def derive_round_keys(key_int: int, rounds: int = 8):
    w0 = (key_int >> 96) & MASK32
    w1 = (key_int >> 64) & MASK32
    w2 = (key_int >> 32) & MASK32
    w3 = key_int & MASK32
    pairs = []
    for i in range(rounds):
        k0 = prf_core(SCHEDULE_CONST ^ ((i << 8) | 0), w0, w1)
        k1 = prf_core(SCHEDULE_CONST ^ ((i << 8) | 1), w2, w3)
        pairs.append((k0, k1))
    return pairs


def round_f(r: int, k0: int, k1: int, round_index: int, pow10m: int) -> int:
    return prf_wide(r & MASK32, r >> 32, round_index, k0, k1) % pow10m


def encrypt(key_int: int, plaintext: str, rounds: int = 8) -> str:
    n = len(plaintext)
    m = n // 2
    pow10m = 10 ** m
    left = int(plaintext[:m])
    right = int(plaintext[m:])
    keys = derive_round_keys(key_int, rounds)
    for i in range(rounds):
        k0, k1 = keys[i]
        f = round_f(right, k0, k1, i, pow10m)
        left, right = right, (left + f) % pow10m
    return str(left).zfill(m) + str(right).zfill(m)


def decrypt(key_int: int, ciphertext: str, rounds: int = 8) -> str:
    n = len(ciphertext)
    m = n // 2
    pow10m = 10 ** m
    left = int(ciphertext[:m])
    right = int(ciphertext[m:])
    keys = derive_round_keys(key_int, rounds)
    for i in range(rounds - 1, -1, -1):
        k0, k1 = keys[i]
        prev_right = left
        f = round_f(prev_right, k0, k1, i, pow10m)
        prev_left = (right - f) % pow10m
        left, right = prev_left, prev_right
    return str(left).zfill(m) + str(right).zfill(m)


def generate_kat_text(count: int, lengths, seed: int, rounds: int = 8) -> str:
    """Reference rendition of the KAT file, byte-for-byte."""
    rng = random.Random(seed)
    blocks = []
    for i in range(count):
        n = lengths[i % len(lengths)]
        key_int = rng.getrandbits(128)
        pt = str(rng.randrange(10 ** n)).zfill(n)
        ct = encrypt(key_int, pt, rounds)
        blocks.append(f"COUNT = {i}\nKEY = {key_int:032x}\nPT = {pt}\nCT = {ct}")
    return f"# eFPE KAT v1\nROUNDS = {rounds}\n\n" + "\n\n".join(blocks) + "\n"
