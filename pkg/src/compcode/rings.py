"""Table-backed finite commutative rings of characteristic 2.

Every supported ring is a finite field or finite local ring whose elements
are encoded as small integer indices (``0 <= index < size``).  The index
encoding doubles as the GF(2)-coordinate encoding of the element over a
fixed monomial basis, so ring addition is bitwise XOR of indices for every
kind.  All operation tables are materialised up front (``size <= 256``),
which keeps arithmetic trivially correct and fast.

Supported kinds:

- ``f2``  -- the binary field {0, 1}
- ``f4``  -- GF(4) with basis {1, w} and w^2 = w + 1
- ``f2u`` -- F2 + u*F2 with u^2 = 0 (element 1 + u prints as ``3``)
- ``f4u`` -- F4 + u*F4 with u^2 = 0, GF(2)-basis {1, w, u, wu}
- ``r1``, ``r2``, ``r3`` -- GF(2)[u1, ..., uk] / (ui^2, ui*uj - uj*ui)

``r1`` is the same ring as ``f2u`` up to renaming ``u1`` to ``u``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "Ring",
    "RingElement",
    "make_ring",
    "ring_add",
    "ring_mul",
    "ring_is_unit",
    "parse_element",
    "format_element",
    "parse_vector",
    "format_vector",
    "RING_KINDS",
]

RING_KINDS = ("f2", "f4", "f2u", "f4u", "r1", "r2", "r3")


class Ring:
    """A finite commutative ring with exhaustive operation tables.

    Attributes:
        kind: canonical kind string (one of :data:`RING_KINDS`).
        size: number of elements.
        char: additive characteristic (always 2 here).
        add: ``(size, size)`` table of element indices; equals XOR of indices.
        mul: ``(size, size)`` table of element indices.
        inv: multiplicative inverse per index, ``-1`` for non-units.
        units: boolean mask of invertible elements.
        zero, one: indices of the additive and multiplicative identities.
        names: canonical token per index.
        residue_size: size of the residue field ``R / m``.
        res: index of the canonical residue representative per element.
        is_chain: True when the maximal ideal is principal (fields included).
        theta: index of a generator of the maximal ideal (chain rings with a
            nonzero maximal ideal; ``None`` for fields and non-chain rings).
        theta_div: per-index ``d`` with ``theta * d == c`` for ``c`` in the
            maximal ideal (``-1`` outside it); ``None`` when theta is None.
        nvars: for ``r1``/``r2``/``r3``, the number k of nilpotent generators;
            0 otherwise.
    """

    def __init__(
        self,
        kind: str,
        names: Sequence[str],
        mul: np.ndarray,
        residue_mask: int,
        is_chain: bool,
        theta: int | None,
        nvars: int = 0,
    ) -> None:
        size = len(names)
        self.kind = kind
        self.size = size
        self.char = 2
        self.names = tuple(names)
        idx = np.arange(size, dtype=np.uint8)
        self.add = idx[:, None] ^ idx[None, :]
        self.mul = mul.astype(np.uint8)
        self.zero = 0
        self.one = 1
        self.res = (idx & residue_mask).astype(np.uint8)
        self.residue_size = residue_mask + 1
        self.units = self.res != 0
        inv = np.full(size, -1, dtype=np.int16)
        for x in range(size):
            if self.units[x]:
                hits = np.nonzero(mul[x] == self.one)[0]
                if hits.size != 1:
                    raise ValueError(f"ring {kind!r}: element {x} has no unique inverse")
                inv[x] = hits[0]
        self.inv = inv
        self.is_chain = is_chain
        self.theta = theta
        if theta is not None:
            tdiv = np.full(size, -1, dtype=np.int16)
            for c in range(size):
                hits = np.nonzero(mul[theta] == c)[0]
                if hits.size:
                    tdiv[c] = hits[0]
            self.theta_div = tdiv
        else:
            self.theta_div = None
        self.nvars = nvars
        # GF(2)-basis of the ring in the index encoding (addition is XOR).
        self.f2_basis = tuple(1 << i for i in range((size - 1).bit_length()))
        self._monomials = _monomial_table(kind, size)

    @property
    def is_field(self) -> bool:
        return self.residue_size == self.size

    def element(self, index: int) -> "RingElement":
        return RingElement(self, int(index))

    def parse(self, token: str) -> int:
        return parse_element(self, token)

    def format(self, index: int) -> str:
        return format_element(self, index)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Ring({self.kind!r}, size={self.size})"


@dataclass(frozen=True)
class RingElement:
    """A single ring element: a ring reference plus an element index."""

    ring: Ring
    index: int

    def __post_init__(self) -> None:
        if not 0 <= self.index < self.ring.size:
            raise ValueError(
                f"element index {self.index} out of range for ring {self.ring.kind!r}"
            )

    @property
    def token(self) -> str:
        return format_element(self.ring, self.index)

    def u_parts(self) -> tuple["RingElement", "RingElement"]:
        """Decompose ``a + b*u`` for the u-adic kinds (f2u, f4u, r1)."""
        ring = self.ring
        if ring.kind == "f4u":
            base = make_ring("f4")
            return base.element(self.index & 3), base.element(self.index >> 2)
        if ring.kind in ("f2u", "r1"):
            base = make_ring("f2")
            return base.element(self.index & 1), base.element((self.index >> 1) & 1)
        raise ValueError(f"u_parts is not defined for ring kind {ring.kind!r}")

    def monomial_coeffs(self) -> tuple[int, ...]:
        """GF(2) coefficients over the monomial basis (r1/r2/r3 kinds)."""
        ring = self.ring
        if ring.nvars == 0:
            raise ValueError(f"monomial_coeffs is not defined for ring kind {ring.kind!r}")
        width = 1 << ring.nvars
        return tuple((self.index >> s) & 1 for s in range(width))

    def __add__(self, other: "RingElement") -> "RingElement":
        return ring_add(self, other)

    def __mul__(self, other: "RingElement") -> "RingElement":
        return ring_mul(self, other)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"RingElement({self.ring.kind}, {self.token})"


def _check_same_ring(a: RingElement, b: RingElement) -> Ring:
    if a.ring is not b.ring:
        raise ValueError(
            f"elements belong to different rings: {a.ring.kind!r} vs {b.ring.kind!r}"
        )
    return a.ring


def ring_add(a: RingElement, b: RingElement) -> RingElement:
    """Sum of two elements of the same ring."""
    ring = _check_same_ring(a, b)
    return ring.element(ring.add[a.index, b.index])


def ring_mul(a: RingElement, b: RingElement) -> RingElement:
    """Product of two elements of the same ring."""
    ring = _check_same_ring(a, b)
    return ring.element(ring.mul[a.index, b.index])


def ring_is_unit(a: RingElement) -> bool:
    """True when the element has a multiplicative inverse."""
    return bool(a.ring.units[a.index])


# ---------------------------------------------------------------------------
# Ring constructions
# ---------------------------------------------------------------------------


def _mul_f2() -> np.ndarray:
    t = np.zeros((2, 2), dtype=np.uint8)
    t[1, 1] = 1
    return t


def _mul_f4() -> np.ndarray:
    # index = a0 + 2*a1 encodes a0 + a1*w with w^2 = w + 1
    t = np.zeros((4, 4), dtype=np.uint8)
    for x in range(4):
        a0, a1 = x & 1, x >> 1
        for y in range(4):
            b0, b1 = y & 1, y >> 1
            c0 = (a0 & b0) ^ (a1 & b1)
            c1 = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1)
            t[x, y] = c0 | (c1 << 1)
    return t


def _mul_u_adic(base: np.ndarray) -> np.ndarray:
    """Multiplication for R = B + u*B with u^2 = 0, given B's table."""
    m = base.shape[0]
    size = m * m
    t = np.zeros((size, size), dtype=np.uint8)
    for x in range(size):
        xa, xb = x % m, x // m
        for y in range(size):
            ya, yb = y % m, y // m
            ca = base[xa, ya]
            cb = base[xa, yb] ^ base[xb, ya]
            t[x, y] = int(ca) + m * int(cb)
    return t


def _mul_rk(k: int) -> np.ndarray:
    """Multiplication for GF(2)[u1..uk]/(ui^2, ui uj - uj ui).

    Element bit ``s`` is the coefficient of the square-free monomial whose
    variable set is the bitmask ``s``; disjoint variable sets multiply to
    their union and overlapping ones vanish.
    """
    nmon = 1 << k
    size = 1 << nmon
    a = np.arange(size, dtype=np.uint32)[:, None]
    b = np.arange(size, dtype=np.uint32)[None, :]
    out = np.zeros((size, size), dtype=np.uint32)
    for s in range(nmon):
        for t in range(nmon):
            if s & t:
                continue
            out ^= (((a >> s) & 1) & ((b >> t) & 1)) << (s | t)
    return out.astype(np.uint8) if size <= 256 else out


def _rk_monomial_token(mask: int) -> str:
    if mask == 0:
        return "1"
    return "".join(f"u{i + 1}" for i in range(8) if (mask >> i) & 1)


def _rk_names(k: int) -> list[str]:
    nmon = 1 << k
    size = 1 << nmon
    # Canonical print order: higher-degree monomials first, then by mask.
    order = sorted(range(nmon), key=lambda m: (-bin(m).count("1"), m))
    names = []
    for x in range(size):
        if x == 0:
            names.append("0")
            continue
        parts = [_rk_monomial_token(m) for m in order if (x >> m) & 1]
        names.append("+".join(parts))
    return names


def _f4u_names() -> list[str]:
    # index = z0 + 2*z1 + 4*z2 + 8*z3 encodes z0 + z1*w + z2*u + z3*wu
    mono = [(8, "wu"), (4, "u"), (2, "w"), (1, "1")]
    names = []
    for x in range(16):
        if x == 0:
            names.append("0")
            continue
        names.append("+".join(tok for bit, tok in mono if x & bit))
    return names


def _monomial_table(kind: str, size: int) -> dict[str, int]:
    """Monomial token -> element index, for the additive token grammar."""
    if kind == "f2":
        return {"1": 1}
    if kind == "f4":
        return {"1": 1, "w": 2}
    if kind == "f2u":
        return {"1": 1, "u": 2, "3": 3}
    if kind == "f4u":
        return {"1": 1, "w": 2, "u": 4, "wu": 8, "uw": 8}
    # r1/r2/r3
    k = {4: 1, 16: 2, 256: 3}[size]
    table: dict[str, int] = {}
    for mask in range(1 << k):
        table[_rk_monomial_token(mask)] = 1 << mask
    return table


_RING_CACHE: dict[str, Ring] = {}


def make_ring(kind: str) -> Ring:
    """Build (and cache) a ring by kind string."""
    key = kind.strip().lower()
    if key in _RING_CACHE:
        return _RING_CACHE[key]
    if key == "f2":
        ring = Ring("f2", ("0", "1"), _mul_f2(), residue_mask=1, is_chain=True, theta=None)
    elif key == "f4":
        ring = Ring("f4", ("0", "1", "w", "w+1"), _mul_f4(), residue_mask=3,
                    is_chain=True, theta=None)
    elif key == "f2u":
        ring = Ring("f2u", ("0", "1", "u", "3"), _mul_u_adic(_mul_f2()),
                    residue_mask=1, is_chain=True, theta=2)
    elif key == "f4u":
        ring = Ring("f4u", _f4u_names(), _mul_u_adic(_mul_f4()),
                    residue_mask=3, is_chain=True, theta=4)
    elif key in ("r1", "r2", "r3"):
        k = int(key[1])
        ring = Ring(key, _rk_names(k), _mul_rk(k), residue_mask=1,
                    is_chain=(k == 1), theta=(2 if k == 1 else None), nvars=k)
    else:
        raise ValueError(
            f"unknown ring kind {kind!r}; expected one of {', '.join(RING_KINDS)}"
        )
    _RING_CACHE[key] = ring
    return ring


# ---------------------------------------------------------------------------
# Token grammar
# ---------------------------------------------------------------------------


def parse_element(ring: Ring, token: str) -> int:
    """Parse one element token (a '+'-joined sum of monomials, or '0')."""
    text = token.strip().replace(" ", "")
    if not text:
        raise ValueError(f"empty element token for ring {ring.kind!r}")
    acc = 0
    for part in text.split("+"):
        if part == "0":
            continue
        idx = ring._monomials.get(part)
        if idx is None:
            raise ValueError(f"bad token {part!r} for ring {ring.kind!r}")
        acc ^= idx
    return acc


def format_element(ring: Ring, index: int) -> str:
    """Canonical token for an element index."""
    if not 0 <= index < ring.size:
        raise ValueError(f"element index {index} out of range for ring {ring.kind!r}")
    return ring.names[index]


def parse_vector(ring: Ring, text: str) -> np.ndarray:
    """Parse a comma-separated token vector into an index array."""
    parts = [p for p in text.strip().split(",")]
    if parts == [""]:
        raise ValueError("empty vector")
    return np.array([parse_element(ring, p) for p in parts], dtype=np.uint8)


def format_vector(ring: Ring, entries: Iterable[int]) -> str:
    """Comma-separated canonical tokens of an index vector."""
    return ",".join(format_element(ring, int(e)) for e in entries)
