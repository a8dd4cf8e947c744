"""Empirical and arithmetic validation suites for the cipher.

Covers the effective-security arithmetic (bits per decimal digit), the
birthday-bound advantage term, exhaustive small-domain permutation checks,
key-avalanche and digit-distribution statistics, and round-key
distinctness.  Every statistical routine is seeded and reproducible
bit-for-bit; reports render both as text and as plain dicts for JSON.
"""

import math
import random
from dataclasses import asdict, dataclass, field

import numpy as np

from .feistel import Cipher, join_halves
from .keyschedule import SCHEDULE_CONST, MasterKey, derive_round_keys
from .roundfunc import MAX_HALF_DIGITS, pow10

LOG2_10 = math.log2(10)

# 99.9th percentile of chi-square with 9 degrees of freedom.
CHI2_CRITICAL_999 = 27.88


def _check_m(m: int):
    if not 1 <= m <= MAX_HALF_DIGITS:
        raise ValueError(f"m must be in [1, {MAX_HALF_DIGITS}], got {m}")


@dataclass(frozen=True)
class SecurityEstimate:
    m: int
    bits: float
    attack_ops: int

    def to_dict(self):
        return asdict(self)

    def summary(self) -> str:
        return f"m={self.m:>2} digits -> {self.bits:.1f} bits effective security, ~10^{self.m} attack operations"


@dataclass(frozen=True)
class AdvantageBound:
    q: int
    m: int
    birthday_term: float

    def to_dict(self):
        return asdict(self)

    def summary(self) -> str:
        return (
            f"q={self.q} queries at m={self.m}: birthday term q^2/10^m = {self.birthday_term:.3e}"
            " (PRF distinguishing advantage assumed, not computed)"
        )


def security_bits(m: int) -> SecurityEstimate:
    """Effective half-block security: m * log2(10) bits, 10^m attack ops."""
    _check_m(m)
    return SecurityEstimate(m=m, bits=m * LOG2_10, attack_ops=pow10(m))


def birthday_bound_advantage(q: int, m: int) -> AdvantageBound:
    """Collision term q^2 / 10^m of the distinguishing-advantage bound."""
    _check_m(m)
    if q < 0:
        raise ValueError(f"query count must be nonnegative, got {q}")
    return AdvantageBound(q=q, m=m, birthday_term=(q * q) / pow10(m))


@dataclass
class BijectivityReport:
    n: int
    key: str
    domain: int
    distinct_outputs: int
    roundtrip_ok: bool
    passed: bool

    def to_dict(self):
        return asdict(self)

    def summary(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return (
            f"bijectivity n={self.n} key={self.key}: {self.distinct_outputs}/{self.domain} distinct outputs, "
            f"roundtrip {'ok' if self.roundtrip_ok else 'BROKEN'} -> {verdict}"
        )


def bijectivity_check(key: MasterKey | None, n: int, rounds: int = 8, cipher=None) -> BijectivityReport:
    """Encrypt the full 10^n domain and check the map is a permutation.

    With the default cipher this runs on the batch kernels; passing a
    ``cipher`` object (anything with encrypt_block/decrypt_block) switches
    to a scalar sweep, which is how corrupted test doubles are screened.
    """
    if n not in (2, 4):
        raise ValueError(f"exhaustive check only supports n in (2, 4), got {n}")
    m = n // 2
    domain = pow10(n)
    if cipher is None:
        cipher = Cipher(key, rounds)
        values = np.arange(domain, dtype=np.uint64)
        half = pow10(m)
        el, er = cipher.encrypt_batch(values // half, values % half, m)
        outputs = el * np.uint64(half) + er
        distinct = int(np.unique(outputs).size)
        dl, dr = cipher.decrypt_batch(el, er, m)
        roundtrip_ok = bool(np.array_equal(dl * np.uint64(half) + dr, values))
        key_hex = key.to_hex()
    else:
        outputs = [cipher.encrypt_block(join_halves(v // pow10(m), v % pow10(m), m)) for v in range(domain)]
        distinct = len(set(outputs))
        roundtrip_ok = all(
            cipher.decrypt_block(c) == join_halves(v // pow10(m), v % pow10(m), m)
            for v, c in enumerate(outputs)
        )
        key_hex = key.to_hex() if key is not None else "<custom cipher>"
    return BijectivityReport(
        n=n,
        key=key_hex,
        domain=domain,
        distinct_outputs=distinct,
        roundtrip_ok=roundtrip_ok,
        passed=(distinct == domain and roundtrip_ok),
    )


@dataclass
class AvalancheReport:
    trials: int
    n: int
    seed: int
    fraction_changed: float
    mean_changed_digits: float
    changed_digit_histogram: list[int] = field(default_factory=list)

    def to_dict(self):
        return asdict(self)

    def summary(self) -> str:
        return (
            f"avalanche n={self.n} trials={self.trials} seed={self.seed}: "
            f"{self.fraction_changed:.4f} of trials changed the ciphertext, "
            f"mean {self.mean_changed_digits:.2f} digits changed"
        )


def avalanche_test(trials: int, n: int = 16, seed: int = 0, *, null_control: bool = False) -> AvalancheReport:
    """Flip one random master-key bit per trial and count changed digits.

    ``null_control=True`` re-flips the chosen bit (keys end up identical),
    which must report zero changes; it validates the counting path.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(seed)
    histogram = [0] * (n + 1)
    changed_trials = 0
    total_changed = 0
    for _ in range(trials):
        key_int = rng.getrandbits(128)
        pt = str(rng.randrange(pow10(n))).zfill(n)
        bit = rng.randrange(128)
        flipped = key_int ^ (1 << bit)
        if null_control:
            flipped ^= 1 << bit
        ct_a = Cipher(MasterKey.from_int(key_int)).encrypt_block(pt)
        ct_b = Cipher(MasterKey.from_int(flipped)).encrypt_block(pt)
        ndiff = sum(a != b for a, b in zip(ct_a, ct_b))
        histogram[ndiff] += 1
        total_changed += ndiff
        changed_trials += ndiff > 0
    return AvalancheReport(
        trials=trials,
        n=n,
        seed=seed,
        fraction_changed=changed_trials / trials,
        mean_changed_digits=total_changed / trials,
        changed_digit_histogram=histogram,
    )


@dataclass
class DistributionReport:
    n: int
    key: str
    samples: int
    chi_square: list[float]
    critical_value: float
    passed: bool

    def to_dict(self):
        return asdict(self)

    def summary(self) -> str:
        worst = max(self.chi_square)
        verdict = "PASS" if self.passed else "FAIL"
        return (
            f"digit distribution n={self.n} key={self.key} samples={self.samples}: "
            f"max chi-square {worst:.2f} (critical {self.critical_value}) -> {verdict}"
        )


def digit_distribution_test(key: MasterKey | None, n: int, samples: int, rounds: int = 8, cipher=None) -> DistributionReport:
    """Encrypt counter plaintexts and chi-square each output digit position.

    Counters 0..samples-1 are encoded as n-digit strings (wrapping mod the
    domain size when it is smaller).  Each position is tallied over the
    digit alphabet and tested against a uniform expectation with 9 degrees
    of freedom.
    """
    if samples < 1000:
        raise ValueError("need at least 1000 samples for a meaningful tally")
    if n % 2 or not 2 <= n <= 2 * MAX_HALF_DIGITS:
        raise ValueError(f"n must be even and in [2, {2 * MAX_HALF_DIGITS}], got {n}")
    m = n // 2
    half = pow10(m)
    domain = half * half  # 10^n as an exact Python int; may exceed uint64
    counts = np.zeros((n, 10), dtype=np.int64)
    if cipher is None:
        cipher = Cipher(key, rounds)
        values = np.arange(samples, dtype=np.uint64)
        if samples > domain:
            values %= np.uint64(domain)
        el, er = cipher.encrypt_batch(values // np.uint64(half), values % np.uint64(half), m)
        # tally per half so no full-block integer ever exceeds 64 bits
        for pos in range(n):
            src, offset = (el, 0) if pos < m else (er, m)
            digits = (src // np.uint64(pow10(m - 1 - (pos - offset)))) % np.uint64(10)
            counts[pos] = np.bincount(digits.astype(np.int64), minlength=10)
        key_hex = key.to_hex()
    else:
        for v in range(samples):
            ct = cipher.encrypt_block(str(v % domain).zfill(n))
            for pos, ch in enumerate(ct):
                counts[pos][int(ch)] += 1
        key_hex = key.to_hex() if key is not None else "<custom cipher>"
    expected = samples / 10
    chi = [float(((row - expected) ** 2 / expected).sum()) for row in counts]
    return DistributionReport(
        n=n,
        key=key_hex,
        samples=samples,
        chi_square=chi,
        critical_value=CHI2_CRITICAL_999,
        passed=all(c < CHI2_CRITICAL_999 for c in chi),
    )


@dataclass
class RoundKeyReport:
    sample_keys: int
    rounds: int
    seed: int
    all_distinct_count: int
    pass_fraction: float
    schedule_inputs_distinct: bool

    def to_dict(self):
        return asdict(self)

    def summary(self) -> str:
        return (
            f"round keys: {self.all_distinct_count}/{self.sample_keys} sampled schedules had "
            f"{self.rounds} pairwise-distinct subkey pairs (fraction {self.pass_fraction:.4f}); "
            f"derivation inputs distinct by enumeration: {self.schedule_inputs_distinct}"
        )


def schedule_inputs_distinct(rounds: int = 8) -> bool:
    """Enumerate the schedule's PRF inputs and confirm no two collide."""
    inputs = {SCHEDULE_CONST ^ ((i << 8) | j) for i in range(rounds) for j in (0, 1)}
    return len(inputs) == 2 * rounds


def round_key_distinctness(sample_keys: int, seed: int = 0, rounds: int = 8) -> RoundKeyReport:
    """Sample master keys and report how often all subkey pairs differ."""
    if sample_keys < 1:
        raise ValueError("sample_keys must be >= 1")
    rng = random.Random(seed)
    if rounds == 1:
        # a single pair cannot collide; the schedule itself needs >= 2 rounds
        all_distinct = sample_keys
    else:
        all_distinct = 0
        for _ in range(sample_keys):
            pairs = derive_round_keys(MasterKey.from_int(rng.getrandbits(128)), rounds)
            all_distinct += len(set(pairs)) == rounds
    return RoundKeyReport(
        sample_keys=sample_keys,
        rounds=rounds,
        seed=seed,
        all_distinct_count=all_distinct,
        pass_fraction=all_distinct / sample_keys,
        schedule_inputs_distinct=schedule_inputs_distinct(rounds),
    )
