"""Shared helpers for the test suite."""

import numpy as np
import pytest

from compcode import gr_from_indices


def ring_matmul(ring, a, b):
    """Matrix product of two index matrices over ``ring``.

    Every shipped ring is an F2-algebra whose addition table is XOR on
    indices (asserted in test_rings), so sums can be accumulated with ^.
    """
    prod = ring.mul[np.asarray(a)[:, :, None], np.asarray(b)[None, :, :]]
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for l in range(a.shape[1]):
        out ^= prod[:, l, :]
    return out.astype(np.uint8)


def random_element(rng, group, ring):
    """A uniformly random group-ring element."""
    return gr_from_indices(
        group, ring, rng.integers(0, ring.size, size=group.order)
    )


def translate_word(group, word, h):
    """Permute a codeword's coordinates by left group translation."""
    perm = group.cayley[group.inv[h]]
    out = 0
    for k in range(group.order):
        out |= ((word >> int(perm[k])) & 1) << k
    return out


def naive_profile(code):
    """All-codeword weight histogram and minimum distance by brute force."""
    words = [0]
    for row in code.rows:
        words.extend([w ^ row for w in words])
    hist = [0] * (code.n + 1)
    for w in words:
        hist[w.bit_count()] += 1
    nonzero = [w.bit_count() for w in words if w]
    return (min(nonzero) if nonzero else 0, hist)


def random_code(rng, n_lo=4, n_hi=22, k_max=12):
    from compcode.bincodes import BinaryCode

    n = int(rng.integers(n_lo, n_hi + 1))
    k = int(rng.integers(1, min(n, k_max) + 1))
    rows = [int(x) for x in rng.integers(1, 1 << n, size=k, dtype=np.int64)]
    return BinaryCode.from_rows(n, rows)


@pytest.fixture
def rng():
    return np.random.default_rng(20260821)


# One line per acceptance criterion, appended by tests/test_acceptance.py and
# echoed after the run (terminal summaries bypass output capture).
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
