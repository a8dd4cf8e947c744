"""Command-line front end.

Subcommands: keygen, encrypt, decrypt, vectors (generate/verify),
analyze (security/avalanche/bijectivity/distribution/roundkeys), bench.

Exit codes: 0 success, 1 domain or verification failure (including
analysis thresholds), 2 usage error.
"""

import argparse
import json
import random
import sys
import time

import numpy as np

from . import analysis, vectors
from .backend import get_backend
from .errors import FormatError, KeyFormatError
from .feistel import Cipher
from .keyschedule import MasterKey, format_master_key, generate_master_key, parse_master_key
from .roundfunc import pow10

AVALANCHE_THRESHOLD = 0.99
ROUNDKEY_THRESHOLD = 0.999


def _hex_seed(text: str) -> int:
    try:
        return int(text, 16)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed must be hexadecimal, got {text!r}")


def _read_key(args) -> MasterKey:
    if args.key is not None:
        return parse_master_key(args.key)
    with open(args.key_file, "r", encoding="ascii") as fh:
        return parse_master_key(fh.read())


def _read_digits(arg: str) -> str:
    return sys.stdin.read().strip() if arg == "-" else arg


def cmd_keygen(args) -> int:
    if args.seed is not None:
        key = generate_master_key(args.seed)
        print("note: deterministic key from --seed; for tests only, never production", file=sys.stderr)
    else:
        key = generate_master_key()
    line = format_master_key(key) + "\n"
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(line)
    else:
        sys.stdout.write(line)
    return 0


def cmd_encrypt(args) -> int:
    cipher = Cipher(_read_key(args))
    print(cipher.encrypt_block(_read_digits(args.digits)))
    return 0


def cmd_decrypt(args) -> int:
    cipher = Cipher(_read_key(args))
    print(cipher.decrypt_block(_read_digits(args.digits)))
    return 0


def cmd_vectors(args) -> int:
    if args.vectors_cmd == "generate":
        lengths = vectors.DEFAULT_LENGTHS
        if args.lengths:
            lengths = tuple(int(x) for x in args.lengths.split(","))
        kat = vectors.generate_vectors(args.count, lengths, args.seed)
        text = vectors.serialize_vectors(kat)
        if args.out:
            with open(args.out, "w", newline="") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return 0
    # verify
    with open(args.file, "r", encoding="ascii") as fh:
        text = fh.read()
    try:
        kat = vectors.parse_vectors(text)
    except vectors.KatParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    report = vectors.verify_vectors(kat)
    print(report.summary())
    return 0 if report.passed else 1


def _emit(args, reports, failed: bool) -> int:
    if getattr(args, "json", False):
        docs = [r.to_dict() for r in reports]
        print(json.dumps(docs[0] if len(docs) == 1 else {"reports": docs}, indent=2))
    else:
        for r in reports:
            print(r.summary())
        print("verdict:", "FAIL" if failed else "PASS")
    return 1 if failed else 0


def cmd_analyze(args) -> int:
    if args.suite == "security":
        ms = [args.m] if args.m else [4, 8, 12, 16]
        for m in ms:
            print(analysis.security_bits(m).summary())
        return 0

    if args.suite == "avalanche":
        report = analysis.avalanche_test(args.trials, n=args.digits, seed=args.seed)
        return _emit(args, [report], report.fraction_changed < AVALANCHE_THRESHOLD)

    if args.suite == "bijectivity":
        rng = random.Random(args.seed)
        reports = [
            analysis.bijectivity_check(MasterKey.from_int(rng.getrandbits(128)), args.digits)
            for _ in range(args.keys)
        ]
        return _emit(args, reports, any(not r.passed for r in reports))

    if args.suite == "distribution":
        rng = random.Random(args.seed)
        reports = [
            analysis.digit_distribution_test(MasterKey.from_int(rng.getrandbits(128)), args.digits, args.samples)
            for _ in range(args.keys)
        ]
        return _emit(args, reports, any(not r.passed for r in reports))

    # roundkeys
    report = analysis.round_key_distinctness(args.keys, seed=args.seed)
    failed = report.pass_fraction < ROUNDKEY_THRESHOLD or not report.schedule_inputs_distinct
    return _emit(args, [report], failed)


def _bench_one(backend_name: str, blocks: int, digits: int) -> float:
    m = digits // 2
    get_backend(backend_name)  # fail fast if unavailable
    cipher = Cipher(generate_master_key(seed=1))
    rng = np.random.default_rng(2)
    left = rng.integers(0, pow10(m), size=blocks, dtype=np.uint64)
    right = rng.integers(0, pow10(m), size=blocks, dtype=np.uint64)
    # warm-up triggers JIT compilation so the timed run measures steady state
    cipher.encrypt_batch(left[:16], right[:16], m, backend=backend_name)
    t0 = time.perf_counter()
    cipher.encrypt_batch(left, right, m, backend=backend_name)
    elapsed = time.perf_counter() - t0
    rate = blocks / elapsed
    print(f"backend={backend_name:<6} blocks={blocks} digits={digits}  {rate:,.0f} blocks/s  {1e9 * elapsed / blocks:,.1f} ns/block")
    return rate


def cmd_bench(args) -> int:
    if args.blocks < 1:
        print("--blocks must be >= 1", file=sys.stderr)
        return 2
    if args.digits % 2 or not 2 <= args.digits <= 32:
        print("--digits must be even, in [2, 32]", file=sys.stderr)
        return 2
    names = ["numba", "numpy"] if args.backend == "both" else [args.backend]
    rates = {}
    for name in names:
        try:
            rates[name] = _bench_one(name, args.blocks, args.digits)
        except ImportError:
            print(f"backend={name:<6} unavailable, skipped", file=sys.stderr)
    if len(rates) == 2:
        print(f"speedup numba/numpy: {rates['numba'] / rates['numpy']:.1f}x")
    return 0


def _add_key_args(p):
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--key", help="master key as 32 hex characters")
    group.add_argument("--key-file", help="file holding one line of 32 hex characters")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="efpe", description="Format-preserving encryption for even-length decimal strings")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("keygen", help="generate a 128-bit master key")
    p.add_argument("--out", help="write the key file here instead of stdout")
    p.add_argument("--seed", type=_hex_seed, help="hex seed for a deterministic (insecure) test key")
    p.set_defaults(func=cmd_keygen)

    p = sub.add_parser("encrypt", help="encrypt one even-length digit string")
    _add_key_args(p)
    p.add_argument("digits", help="plaintext digits, or - to read from stdin")
    p.set_defaults(func=cmd_encrypt)

    p = sub.add_parser("decrypt", help="decrypt one even-length digit string")
    _add_key_args(p)
    p.add_argument("digits", help="ciphertext digits, or - to read from stdin")
    p.set_defaults(func=cmd_decrypt)

    p = sub.add_parser("vectors", help="generate or verify known-answer vector files")
    vsub = p.add_subparsers(dest="vectors_cmd", required=True)
    g = vsub.add_parser("generate", help="write a deterministic vector file")
    g.add_argument("--count", type=int, required=True)
    g.add_argument("--lengths", help="comma-separated even block lengths (default: 2,4,...,32)")
    g.add_argument("--seed", type=_hex_seed, default=0, help="hex seed")
    g.add_argument("--out", help="output path (default: stdout)")
    g.set_defaults(func=cmd_vectors)
    v = vsub.add_parser("verify", help="recompute and check every record in a vector file")
    v.add_argument("file")
    v.set_defaults(func=cmd_vectors)

    p = sub.add_parser("analyze", help="run a statistical or arithmetic analysis suite")
    asub = p.add_subparsers(dest="suite", required=True)

    s = asub.add_parser("security", help="effective security levels per half-block size")
    s.add_argument("--m", type=int, help="single half-block size in digits (default: 4 8 12 16)")
    s.set_defaults(func=cmd_analyze)

    s = asub.add_parser("avalanche", help="master-key bit-flip sensitivity")
    s.add_argument("--trials", type=int, default=1000)
    s.add_argument("--digits", type=int, default=16)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_analyze)

    s = asub.add_parser("bijectivity", help="exhaustive permutation check on a small domain")
    s.add_argument("--digits", type=int, choices=(2, 4), default=2)
    s.add_argument("--keys", type=int, default=10, help="number of random keys to sweep")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_analyze)

    s = asub.add_parser("distribution", help="chi-square of output digits over counter plaintexts")
    s.add_argument("--samples", type=int, default=100_000)
    s.add_argument("--digits", type=int, default=8)
    s.add_argument("--keys", type=int, default=3)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_analyze)

    s = asub.add_parser("roundkeys", help="subkey-pair distinctness over sampled master keys")
    s.add_argument("--keys", type=int, default=10_000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_analyze)

    p = sub.add_parser("bench", help="throughput of the batch kernels (informational)")
    p.add_argument("--blocks", type=int, default=1_000_000)
    p.add_argument("--digits", type=int, default=16)
    p.add_argument("--backend", choices=("numba", "numpy", "both"), default="both")
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (KeyFormatError, FormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
