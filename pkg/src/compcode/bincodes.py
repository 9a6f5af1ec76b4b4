"""Binary linear codes: bitset algebra, exact weight enumeration, neighbors.

Codewords are Python integers whose bit ``i`` is coordinate ``i`` (so the
first character of a serialized bitstring is bit 0).  Generator matrices
are kept in reduced row echelon form, which makes the dimension, duals and
membership checks cheap.  Exact weight distributions come from a full
codeword enumeration: a Gray-code walk over ``2^k`` words, run through a
compiled two-lane popcount kernel for large dimensions (budget ``k <= 36``)
and a vectorised table for small ones.  Results are independent of how the
enumeration is chunked.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "BinaryCode",
    "WeightProfile",
    "EnumeratorClass",
    "rref_rows",
    "dual",
    "is_self_dual",
    "inner_product",
    "min_distance",
    "weight_counts",
    "classify_enumerator",
    "neighbor",
    "neighbor_chain",
    "row_to_string",
    "string_to_row",
    "write_binary_code",
    "read_binary_code_text",
]

_MAX_N = 128
_ENUM_BUDGET_K = 36
_SMALL_K = 20


def rref_rows(rows: Iterable[int]) -> tuple[int, ...]:
    """Reduced row echelon form of a set of bitset rows (pivot = lowest bit)."""
    piv: dict[int, int] = {}
    for r in rows:
        r = int(r)
        while r:
            p = (r & -r).bit_length() - 1
            if p in piv:
                r ^= piv[p]
            else:
                piv[p] = r
                break
    for p in sorted(piv, reverse=True):
        row = piv[p]
        for p2, r2 in list(piv.items()):
            if p2 != p and (r2 >> p) & 1:
                piv[p2] = r2 ^ row
    return tuple(piv[p] for p in sorted(piv))


class BinaryCode:
    """A binary linear [n, k] code held as a canonical RREF generator."""

    __slots__ = ("n", "k", "rows", "_hist")

    def __init__(self, n: int, rows: tuple[int, ...]):
        self.n = n
        self.k = len(rows)
        self.rows = rows
        self._hist = None

    @classmethod
    def from_rows(cls, n: int, rows: Iterable[int]) -> "BinaryCode":
        if not 0 < n <= _MAX_N:
            raise ValueError(f"code length must be in [1, {_MAX_N}], got {n}")
        rows = list(rows)
        for r in rows:
            if r < 0 or r >> n:
                raise ValueError(f"row {r:#x} does not fit in {n} coordinates")
        return cls(n, rref_rows(rows))

    @classmethod
    def from_bitstrings(cls, n: int, lines: Sequence[str]) -> "BinaryCode":
        return cls.from_rows(n, [string_to_row(line, n) for line in lines])

    def contains(self, word: int) -> bool:
        w = int(word)
        for row in self.rows:
            p = (row & -row).bit_length() - 1
            if (w >> p) & 1:
                w ^= row
        return w == 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BinaryCode):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"BinaryCode(n={self.n}, k={self.k})"


def row_to_string(row: int, n: int) -> str:
    return "".join("1" if (row >> i) & 1 else "0" for i in range(n))


def string_to_row(text: str, n: int | None = None) -> int:
    text = text.strip()
    if not text or any(ch not in "01" for ch in text):
        raise ValueError(f"bad bitstring {text!r}")
    if n is not None and len(text) != n:
        raise ValueError(f"bitstring length {len(text)} does not match n={n}")
    row = 0
    for i, ch in enumerate(text):
        if ch == "1":
            row |= 1 << i
    return row


def inner_product(x: int, y: int) -> int:
    """GF(2) inner product of two bitset words."""
    return (int(x) & int(y)).bit_count() & 1


def dual(code: BinaryCode) -> BinaryCode:
    """The dual code (nullspace of the generator matrix)."""
    pivots = [(r & -r).bit_length() - 1 for r in code.rows]
    pivot_set = set(pivots)
    out = []
    for f in range(code.n):
        if f in pivot_set:
            continue
        v = 1 << f
        for p, row in zip(pivots, code.rows):
            if (row >> f) & 1:
                v |= 1 << p
        out.append(v)
    return BinaryCode.from_rows(code.n, out)


def is_self_dual(code: BinaryCode) -> bool:
    """True when the code equals its dual."""
    if 2 * code.k != code.n:
        return False
    rows = code.rows
    for i, a in enumerate(rows):
        for b in rows[i:]:
            if inner_product(a, b):
                return False
    return True


# ---------------------------------------------------------------------------
# Exact weight enumeration
# ---------------------------------------------------------------------------


def _pack_lanes(rows: Sequence[int], n: int) -> np.ndarray:
    lanes = 2 if n > 64 else 1
    out = np.zeros((len(rows), lanes), dtype=np.uint64)
    mask = (1 << 64) - 1
    for i, r in enumerate(rows):
        out[i, 0] = r & mask
        if lanes == 2:
            out[i, 1] = (r >> 64) & mask
    return out


def _hist_small(gen: np.ndarray, n: int) -> np.ndarray:
    k, lanes = gen.shape
    tab = np.zeros((1 << k, lanes), dtype=np.uint64)
    for i in range(k):
        step = 1 << i
        tab[step : 2 * step] = tab[:step] ^ gen[i]
    weights = np.zeros(1 << k, dtype=np.int64)
    for lane in range(lanes):
        weights += np.bitwise_count(tab[:, lane]).astype(np.int64)
    return np.bincount(weights, minlength=n + 1)


_KERNELS: dict[str, object] = {}


def _get_kernel(kind: str):
    kernel = _KERNELS.get(kind)
    if kernel is not None:
        return kernel
    from numba import njit

    M1 = np.uint64(0x5555555555555555)
    M2 = np.uint64(0x3333333333333333)
    M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
    H01 = np.uint64(0x0101010101010101)
    S1 = np.uint64(1)
    S2 = np.uint64(2)
    S4 = np.uint64(4)
    S56 = np.uint64(56)

    if kind == "one":

        @njit(cache=True)
        def kernel(gen0, klo, hist):  # pragma: no cover - compiled
            k = gen0.shape[0]
            nlo = 1 << klo
            lo0 = np.zeros(nlo, dtype=np.uint64)
            for i in range(klo):
                g0 = gen0[i]
                step = 1 << i
                for j in range(step):
                    lo0[step + j] = lo0[j] ^ g0
            h0 = np.uint64(0)
            nhi = 1 << (k - klo)
            for s in range(nhi):
                if s > 0:
                    b = 0
                    t = s
                    while t & 1 == 0:
                        t >>= 1
                        b += 1
                    h0 = h0 ^ gen0[klo + b]
                for j in range(nlo):
                    x = lo0[j] ^ h0
                    x = x - ((x >> S1) & M1)
                    x = (x & M2) + ((x >> S2) & M2)
                    x = (x + (x >> S4)) & M4
                    w = (x * H01) >> S56
                    hist[w] += 1

    elif kind == "two_lut":
        # Second lane is narrow (<= 16 bits): popcount via lookup table.

        @njit(cache=True)
        def kernel(gen0, gen1, lut1, klo, hist):  # pragma: no cover - compiled
            k = gen0.shape[0]
            nlo = 1 << klo
            lo0 = np.zeros(nlo, dtype=np.uint64)
            lo1 = np.zeros(nlo, dtype=np.uint64)
            for i in range(klo):
                g0 = gen0[i]
                g1 = gen1[i]
                step = 1 << i
                for j in range(step):
                    lo0[step + j] = lo0[j] ^ g0
                    lo1[step + j] = lo1[j] ^ g1
            h0 = np.uint64(0)
            h1 = np.uint64(0)
            nhi = 1 << (k - klo)
            for s in range(nhi):
                if s > 0:
                    b = 0
                    t = s
                    while t & 1 == 0:
                        t >>= 1
                        b += 1
                    h0 = h0 ^ gen0[klo + b]
                    h1 = h1 ^ gen1[klo + b]
                for j in range(nlo):
                    x = lo0[j] ^ h0
                    x = x - ((x >> S1) & M1)
                    x = (x & M2) + ((x >> S2) & M2)
                    x = (x + (x >> S4)) & M4
                    w = (x * H01) >> S56
                    hist[w + lut1[lo1[j] ^ h1]] += 1

    else:

        @njit(cache=True)
        def kernel(gen0, gen1, klo, hist):  # pragma: no cover - compiled
            k = gen0.shape[0]
            nlo = 1 << klo
            lo0 = np.zeros(nlo, dtype=np.uint64)
            lo1 = np.zeros(nlo, dtype=np.uint64)
            for i in range(klo):
                g0 = gen0[i]
                g1 = gen1[i]
                step = 1 << i
                for j in range(step):
                    lo0[step + j] = lo0[j] ^ g0
                    lo1[step + j] = lo1[j] ^ g1
            h0 = np.uint64(0)
            h1 = np.uint64(0)
            nhi = 1 << (k - klo)
            for s in range(nhi):
                if s > 0:
                    b = 0
                    t = s
                    while t & 1 == 0:
                        t >>= 1
                        b += 1
                    h0 = h0 ^ gen0[klo + b]
                    h1 = h1 ^ gen1[klo + b]
                for j in range(nlo):
                    x = lo0[j] ^ h0
                    x = x - ((x >> S1) & M1)
                    x = (x & M2) + ((x >> S2) & M2)
                    x = (x + (x >> S4)) & M4
                    w = (x * H01) >> S56
                    y = lo1[j] ^ h1
                    y = y - ((y >> S1) & M1)
                    y = (y & M2) + ((y >> S2) & M2)
                    y = (y + (y >> S4)) & M4
                    w = w + ((y * H01) >> S56)
                    hist[w] += 1

    _KERNELS[kind] = kernel
    return kernel


def _hist_chunked_numpy(gen: np.ndarray, n: int, klo: int) -> np.ndarray:
    k, lanes = gen.shape
    tab = np.zeros((1 << klo, lanes), dtype=np.uint64)
    for i in range(klo):
        step = 1 << i
        tab[step : 2 * step] = tab[:step] ^ gen[i]
    hist = np.zeros(n + 1, dtype=np.int64)
    h = np.zeros(lanes, dtype=np.uint64)
    for s in range(1 << (k - klo)):
        if s > 0:
            b = (s & -s).bit_length() - 1
            h ^= gen[klo + b]
        weights = np.zeros(1 << klo, dtype=np.int64)
        for lane in range(lanes):
            weights += np.bitwise_count(tab[:, lane] ^ h[lane]).astype(np.int64)
        hist += np.bincount(weights, minlength=n + 1)
    return hist


def _full_histogram(code: BinaryCode) -> np.ndarray:
    if code._hist is not None:
        return code._hist
    if code.k > _ENUM_BUDGET_K:
        raise ValueError(
            f"exact enumeration over 2^{code.k} codewords exceeds the "
            f"k <= {_ENUM_BUDGET_K} budget"
        )
    gen = _pack_lanes(code.rows, code.n)
    if code.k <= _SMALL_K:
        hist = _hist_small(gen, code.n) if code.k else np.bincount([0], minlength=code.n + 1)
    else:
        klo = min(code.k, 16)
        width = code.n - 64
        try:
            if gen.shape[1] == 1:
                kernel = _get_kernel("one")
                args = (np.ascontiguousarray(gen[:, 0]), klo)
            elif width <= 16:
                kernel = _get_kernel("two_lut")
                lut1 = np.bitwise_count(np.arange(1 << width, dtype=np.uint64)).astype(np.uint64)
                args = (
                    np.ascontiguousarray(gen[:, 0]),
                    np.ascontiguousarray(gen[:, 1]),
                    lut1,
                    klo,
                )
            else:
                kernel = _get_kernel("two")
                args = (
                    np.ascontiguousarray(gen[:, 0]),
                    np.ascontiguousarray(gen[:, 1]),
                    klo,
                )
        except ImportError:  # pragma: no cover - numba is a hard dependency
            hist = _hist_chunked_numpy(gen, code.n, klo)
        else:
            hist = np.zeros(code.n + 1, dtype=np.int64)
            kernel(*args, hist)
    code._hist = hist
    return hist


@dataclass(frozen=True)
class WeightProfile:
    """Exact codeword counts by weight, from weight 0 up to some cutoff."""

    counts: tuple[int, ...]
    exact: bool = True

    def a(self, w: int) -> int:
        if not 0 <= w < len(self.counts):
            raise ValueError(f"weight {w} outside the tabulated range")
        return self.counts[w]


def min_distance(code: BinaryCode) -> int:
    """Exact minimum distance by full enumeration (budget ``k <= 36``)."""
    if code.k == 0:
        raise ValueError("the zero code has no minimum distance")
    hist = _full_histogram(code)
    for w in range(1, len(hist)):
        if hist[w]:
            return w
    raise AssertionError("unreachable: nonzero code with no nonzero weight")


def weight_counts(code: BinaryCode, w_max: int) -> WeightProfile:
    """Exact counts ``A_0 .. A_w_max`` by full enumeration (budget ``k <= 36``)."""
    if not 0 <= w_max <= code.n:
        raise ValueError(f"w_max must be in [0, {code.n}], got {w_max}")
    hist = _full_histogram(code)
    return WeightProfile(tuple(int(c) for c in hist[: w_max + 1]))


# ---------------------------------------------------------------------------
# Weight-enumerator classification for lengths 64 and 68
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EnumeratorClass:
    """A weight-enumerator family label with its (beta, gamma) parameters."""

    family: str
    beta: int | None = None
    gamma: int | None = None

    def __str__(self) -> str:
        if self.family == "unknown":
            return "unknown"
        parts = [self.family]
        if self.beta is not None:
            parts.append(f"beta={self.beta}")
        if self.gamma is not None:
            parts.append(f"gamma={self.gamma}")
        return " ".join(parts)


def classify_enumerator(n: int, profile: WeightProfile) -> EnumeratorClass:
    """Match the (A_12, A_14) pair against the known self-dual families.

    For n=64: A_12 = 1312 + 16b with A_14 = 22016 - 64b (family 1) or
    A_14 = 23040 - 64b (family 2).  For n=68: A_12 = 442 + 4b with
    A_14 = 10864 - 8b (family 1) or A_14 = 14960 - 8b - 256g, 0 <= g <= 9
    (family 2).
    """
    if n not in (64, 68):
        raise ValueError(f"classification is defined for lengths 64 and 68, got {n}")
    if len(profile.counts) < 15:
        raise ValueError("classification needs exact counts through weight 14")
    if not profile.exact:
        raise ValueError("classification needs exact counts")
    a12, a14 = profile.counts[12], profile.counts[14]
    if n == 64:
        t = a12 - 1312
        if t < 0 or t % 16:
            return EnumeratorClass("unknown")
        beta = t // 16
        if a14 == 22016 - 64 * beta:
            return EnumeratorClass("W64_1", beta=beta)
        if a14 == 23040 - 64 * beta:
            return EnumeratorClass("W64_2", beta=beta)
        return EnumeratorClass("unknown")
    t = a12 - 442
    if t < 0 or t % 4:
        return EnumeratorClass("unknown")
    beta = t // 4
    if a14 == 10864 - 8 * beta:
        return EnumeratorClass("W68_1", beta=beta)
    rem = 14960 - 8 * beta - a14
    if rem >= 0 and rem % 256 == 0 and rem // 256 <= 9:
        return EnumeratorClass("W68_2", beta=beta, gamma=rem // 256)
    return EnumeratorClass("unknown")


# ---------------------------------------------------------------------------
# Neighbors of self-dual codes
# ---------------------------------------------------------------------------


def neighbor(code: BinaryCode, x: int) -> BinaryCode:
    """The self-dual neighbor through ``x``: <(<x> perp intersect C), x>.

    Requires ``code`` self-dual, ``x`` self-orthogonal and outside the code.
    """
    x = int(x)
    if x < 0 or x >> code.n:
        raise ValueError(f"x does not fit in {code.n} coordinates")
    if not is_self_dual(code):
        raise ValueError("neighbor requires a self-dual starting code")
    if inner_product(x, x):
        raise ValueError("x must be self-orthogonal (even weight)")
    if code.contains(x):
        raise ValueError("x already lies in the code; the neighbor step is undefined")
    keep = []
    odd = []
    for row in code.rows:
        (odd if inner_product(row, x) else keep).append(row)
    # x notin C = C' dual forces at least one generator off <x>'s hyperplane.
    pivot = odd[0]
    keep.extend(r ^ pivot for r in odd[1:])
    keep.append(x)
    out = BinaryCode.from_rows(code.n, keep)
    if out.k != code.k:
        raise AssertionError("neighbor construction lost rank")
    return out


def neighbor_chain(code: BinaryCode, xs: Sequence[int]) -> list[BinaryCode]:
    """Iterate :func:`neighbor`, returning the successive codes."""
    out = []
    current = code
    for x in xs:
        current = neighbor(current, x)
        out.append(current)
    return out


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------


def write_binary_code(path: str, code: BinaryCode) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"binary n={code.n} k={code.k}\n")
        for row in code.rows:
            fh.write(row_to_string(row, code.n) + "\n")


def read_binary_code_text(text: str) -> BinaryCode:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty code file")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "binary":
        raise ValueError(f"bad binary code header {lines[0]!r}")
    try:
        n = int(head[1].removeprefix("n="))
        k = int(head[2].removeprefix("k="))
    except ValueError:
        raise ValueError(f"bad binary code header {lines[0]!r}") from None
    rows = lines[1:]
    if len(rows) != k:
        raise ValueError(f"header says k={k} but file has {len(rows)} rows")
    code = BinaryCode.from_bitstrings(n, rows)
    if code.k != k:
        raise ValueError(f"rows are dependent: rank {code.k} != declared k={k}")
    return code
