import pathlib

import pytest

REPO_ROOT = pathlib.Path(__file__).resolve().parent.parent

# Generation parameters of the frozen golden vector file.  Regenerating with
# these must reproduce vectors/kat_v1.txt byte-for-byte.
GOLDEN_KAT_PATH = REPO_ROOT / "vectors" / "kat_v1.txt"
GOLDEN_KAT_SEED = 0xCAFEBABE
GOLDEN_KAT_COUNT = 20

# Frozen single-block vector (computed by tests/reference.py, then pinned).
KAT_KEY_HEX = "000102030405060708090a0b0c0d0e0f"
KAT_PLAINTEXT = "1234567890123456"
KAT_CIPHERTEXT = "7100246775260098"


@pytest.fixture
def golden_kat_text() -> str:
    return GOLDEN_KAT_PATH.read_text()
