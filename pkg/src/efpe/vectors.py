"""Known-answer test vectors: generation, a line-oriented file format, and
verification, so independent implementations can cross-check byte-exactly.

File layout (LF newlines, lowercase hex keys)::

    # eFPE KAT v1
    ROUNDS = 8

    COUNT = 0
    KEY = 000102030405060708090a0b0c0d0e0f
    PT = 1234
    CT = 5678

with one blank line between records.
"""

import random
from dataclasses import dataclass, field

from .feistel import MAX_DIGITS, Cipher, validate_numeric_string
from .keyschedule import DEFAULT_ROUNDS, MasterKey, parse_master_key
from .roundfunc import pow10

MAGIC = "# eFPE KAT v1"
DEFAULT_LENGTHS = tuple(range(2, MAX_DIGITS + 2, 2))


class KatParseError(ValueError):
    """KAT file text that does not match the format; message names the line."""


@dataclass
class KatRecord:
    index: int
    key: str
    plaintext: str
    ciphertext: str


@dataclass
class KatFile:
    rounds: int = DEFAULT_ROUNDS
    records: list[KatRecord] = field(default_factory=list)


def generate_vectors(count: int, lengths=DEFAULT_LENGTHS, seed: int = 0, rounds: int = DEFAULT_ROUNDS) -> KatFile:
    """Deterministically draw (key, plaintext) pairs and encrypt them.

    Lengths are cycled in order; keys and plaintexts come from a seeded
    generator, so the same arguments always reproduce the same file.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    for n in lengths:
        if n % 2 or not 2 <= n <= MAX_DIGITS:
            raise ValueError(f"invalid block length {n}: must be even and in [2, {MAX_DIGITS}]")
    rng = random.Random(seed)
    records = []
    for i in range(count):
        n = lengths[i % len(lengths)]
        key_int = rng.getrandbits(128)
        pt = str(rng.randrange(pow10(n // 2) ** 2)).zfill(n)
        key = MasterKey.from_int(key_int)
        ct = Cipher(key, rounds).encrypt_block(pt)
        records.append(KatRecord(index=i, key=key.to_hex(), plaintext=pt, ciphertext=ct))
    return KatFile(rounds=rounds, records=records)


def serialize_vectors(kat: KatFile) -> str:
    blocks = [
        f"COUNT = {r.index}\nKEY = {r.key}\nPT = {r.plaintext}\nCT = {r.ciphertext}"
        for r in kat.records
    ]
    body = "\n\n".join(blocks)
    return f"{MAGIC}\nROUNDS = {kat.rounds}\n\n{body}\n" if blocks else f"{MAGIC}\nROUNDS = {kat.rounds}\n"


def _field(lines, lineno: int, name: str) -> str:
    if lineno >= len(lines):
        raise KatParseError(f"line {lineno + 1}: unexpected end of file, wanted '{name} = ...'")
    line = lines[lineno]
    prefix = f"{name} = "
    if not line.startswith(prefix):
        raise KatParseError(f"line {lineno + 1}: expected '{name} = ...', got {line!r}")
    return line[len(prefix):]


def parse_vectors(text: str) -> KatFile:
    """Inverse of serialize_vectors; raises KatParseError naming the line."""
    lines = text.split("\n")
    if not lines or lines[0] != MAGIC:
        raise KatParseError(f"line 1: missing header {MAGIC!r}")
    rounds_text = _field(lines, 1, "ROUNDS")
    try:
        rounds = int(rounds_text)
    except ValueError:
        raise KatParseError(f"line 2: ROUNDS is not an integer: {rounds_text!r}") from None
    records = []
    ln = 2
    while ln < len(lines):
        if lines[ln] == "":
            ln += 1
            continue
        try:
            index = int(_field(lines, ln, "COUNT"))
        except ValueError:
            raise KatParseError(f"line {ln + 1}: COUNT is not an integer") from None
        key = _field(lines, ln + 1, "KEY")
        pt = _field(lines, ln + 2, "PT")
        ct = _field(lines, ln + 3, "CT")
        if index != len(records):
            raise KatParseError(f"line {ln + 1}: COUNT = {index}, expected {len(records)} (indices must not gap)")
        records.append(KatRecord(index=index, key=key, plaintext=pt, ciphertext=ct))
        ln += 4
    return KatFile(rounds=rounds, records=records)


@dataclass
class RecordResult:
    index: int
    ok: bool
    detail: str


@dataclass
class VerificationReport:
    total: int
    failures: list[int]
    results: list[RecordResult]
    warning: str = ""

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self):
        return {
            "total": self.total,
            "failures": self.failures,
            "passed": self.passed,
            "warning": self.warning,
            "results": [{"index": r.index, "ok": r.ok, "detail": r.detail} for r in self.results],
        }

    def summary(self) -> str:
        lines = [f"record {r.index}: {'ok' if r.ok else 'FAIL: ' + r.detail}" for r in self.results]
        verdict = "PASS" if self.passed else f"FAIL ({len(self.failures)} of {self.total} records)"
        if self.warning:
            lines.append(f"warning: {self.warning}")
        lines.append(f"verdict: {verdict}")
        return "\n".join(lines)


def verify_vectors(kat: KatFile) -> VerificationReport:
    """Recompute every record in both directions and report per-record status."""
    results = []
    failures = []
    for rec in kat.records:
        try:
            key = parse_master_key(rec.key)
            validate_numeric_string(rec.plaintext)
            cipher = Cipher(key, kat.rounds)
            got_ct = cipher.encrypt_block(rec.plaintext)
            got_pt = cipher.decrypt_block(rec.ciphertext)
        except ValueError as exc:
            results.append(RecordResult(rec.index, False, str(exc)))
            failures.append(rec.index)
            continue
        if got_ct != rec.ciphertext:
            results.append(RecordResult(rec.index, False, f"encrypt gave {got_ct}, file says {rec.ciphertext}"))
            failures.append(rec.index)
        elif got_pt != rec.plaintext:
            results.append(RecordResult(rec.index, False, f"decrypt gave {got_pt}, file says {rec.plaintext}"))
            failures.append(rec.index)
        else:
            results.append(RecordResult(rec.index, True, ""))
    warning = "no records to verify" if not kat.records else ""
    return VerificationReport(total=len(kat.records), failures=failures, results=results, warning=warning)
