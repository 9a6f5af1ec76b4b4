"""GF(2)-linear Gray maps between the supported rings and binary vectors.

All maps operate on :class:`RingVector` values (a ring plus an index
vector) and use half-vector concatenation: a length-``n`` input maps to the
two (or more) constituent length-``n`` component vectors laid side by side.
The one exception is :func:`psi_delta`, which expands every coordinate into
its own block of ``2^k`` bits, in place.

Maps:

- ``psi_f4``:   F4 -> F2^2, a*w + b*(1+w) -> (a | b)
- ``phi_f2u``:  F2+uF2 -> F2^2, a + b*u -> (b | a+b)
- ``psi_f4u``:  F4+uF4 -> (F2+uF2)^2 via the same w / (1+w) split
- ``phi_f4u``:  F4+uF4 -> F4^2, a + b*u -> (b | a+b)
- ``binary_image_f4u``: phi_f2u composed with psi_f4u, F4+uF4 -> F2^4
- ``phi_k_rk``: r1/r2/r3 -> F2^(2^k) by recursive (b | a+b) splitting on the
  last nilpotent variable
- ``psi_delta``: r1/r2/r3 -> F2^(2^k) per coordinate, monomial-support
  indicator in lexicographic exponent order
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .rings import Ring, format_vector, make_ring, parse_vector

__all__ = [
    "RingVector",
    "ring_vector",
    "vector_from_tokens",
    "psi_f4",
    "phi_f2u",
    "psi_f4u",
    "phi_f4u",
    "binary_image_f4u",
    "phi_k_rk",
    "psi_delta",
    "binary_image",
    "lee_weight",
    "bits_to_string",
    "string_to_bits",
]


@dataclass(frozen=True)
class RingVector:
    """A fixed-length vector of ring element indices."""

    ring: Ring
    entries: np.ndarray

    def __post_init__(self) -> None:
        entries = np.asarray(self.entries, dtype=np.uint8)
        if entries.ndim != 1:
            raise ValueError("ring vector entries must be one-dimensional")
        if entries.size and entries.max() >= self.ring.size:
            raise ValueError(f"entry index out of range for ring {self.ring.kind!r}")
        object.__setattr__(self, "entries", entries)

    def __len__(self) -> int:
        return int(self.entries.size)

    @property
    def tokens(self) -> str:
        return format_vector(self.ring, self.entries)


def ring_vector(ring: Ring, entries) -> RingVector:
    return RingVector(ring, np.asarray(entries, dtype=np.uint8))


def vector_from_tokens(ring: Ring, text: str) -> RingVector:
    return RingVector(ring, parse_vector(ring, text))


def _require_kind(vec: RingVector, *kinds: str, op: str) -> None:
    if vec.ring.kind not in kinds:
        raise ValueError(
            f"{op} expects a vector over {' or '.join(kinds)}, got {vec.ring.kind!r}"
        )


def psi_f4(vec: RingVector) -> np.ndarray:
    """F4 Gray map: write each entry as a*w + b*(1+w) and emit (a | b)."""
    _require_kind(vec, "f4", op="psi_f4")
    e = vec.entries
    a = (e ^ (e >> 1)) & 1
    b = e & 1
    return np.concatenate([a, b]).astype(np.uint8)


def phi_f2u(vec: RingVector) -> np.ndarray:
    """F2+uF2 Gray map: write each entry as a + b*u and emit (b | a+b)."""
    _require_kind(vec, "f2u", "r1", op="phi_f2u")
    e = vec.entries
    a = e & 1
    b = (e >> 1) & 1
    return np.concatenate([b, a ^ b]).astype(np.uint8)


def psi_f4u(vec: RingVector) -> RingVector:
    """F4+uF4 -> (F2+uF2)^2: the w / (1+w) split with F2+uF2 components."""
    _require_kind(vec, "f4u", op="psi_f4u")
    e = vec.entries
    z0, z1, z2, z3 = e & 1, (e >> 1) & 1, (e >> 2) & 1, (e >> 3) & 1
    a = (z0 ^ z1) | ((z2 ^ z3) << 1)
    b = z0 | (z2 << 1)
    return RingVector(make_ring("f2u"), np.concatenate([a, b]))


def phi_f4u(vec: RingVector) -> RingVector:
    """F4+uF4 -> F4^2: write each entry as a + b*u and emit (b | a+b)."""
    _require_kind(vec, "f4u", op="phi_f4u")
    e = vec.entries
    a = e & 3
    b = (e >> 2) & 3
    return RingVector(make_ring("f4"), np.concatenate([b, a ^ b]))


def binary_image_f4u(vec: RingVector) -> np.ndarray:
    """The composite binary image phi_f2u(psi_f4u(vec)) of length 4n."""
    return phi_f2u(psi_f4u(vec))


def phi_k_rk(vec: RingVector) -> np.ndarray:
    """Binary image of an r1/r2/r3 vector by recursive (b | a+b) splits.

    Viewing R_k as R_(k-1)[u_k], an entry a + b*u_k splits into the halves
    (b | a+b); the split recurses on the remaining variables down to F2.
    """
    _require_kind(vec, "r1", "r2", "r3", op="phi_k_rk")
    k = vec.ring.nvars
    e = vec.entries.astype(np.uint32)

    def split(values: np.ndarray, level: int) -> np.ndarray:
        if level == 0:
            return (values & 1).astype(np.uint8)
        half = 1 << (level - 1)
        mask = (1 << half) - 1
        a = values & mask
        b = (values >> half) & mask
        return np.concatenate([split(b, level - 1), split(a ^ b, level - 1)])

    return split(e, k)


def _lex_monomial_order(k: int) -> list[int]:
    """Variable-set bitmasks in lexicographic exponent-tuple order."""
    def exponents(mask: int) -> tuple[int, ...]:
        return tuple((mask >> i) & 1 for i in range(k))

    return sorted(range(1 << k), key=exponents)


def psi_delta(vec: RingVector) -> np.ndarray:
    """Per-coordinate monomial-support indicator map for r1/r2/r3.

    Each entry expands, in place, to ``2^k`` bits indexed by monomials in
    lexicographic exponent order; the bit at monomial ``b`` is the parity of
    the coefficients of monomials whose variable set contains that of ``b``.
    """
    _require_kind(vec, "r1", "r2", "r3", op="psi_delta")
    k = vec.ring.nvars
    nmon = 1 << k
    order = _lex_monomial_order(k)
    table = np.zeros((vec.ring.size, nmon), dtype=np.uint8)
    for x in range(vec.ring.size):
        for pos, bmask in enumerate(order):
            acc = 0
            for smask in range(nmon):
                if (x >> smask) & 1 and (bmask & smask) == bmask:
                    acc ^= 1
            table[x, pos] = acc
    return table[vec.entries].reshape(-1).astype(np.uint8)


def binary_image(vec: RingVector) -> np.ndarray:
    """The default binary image for any supported ring kind."""
    kind = vec.ring.kind
    if kind == "f2":
        return vec.entries.astype(np.uint8).copy()
    if kind == "f4":
        return psi_f4(vec)
    if kind in ("f2u", "r1"):
        return phi_f2u(RingVector(vec.ring, vec.entries))
    if kind == "f4u":
        return binary_image_f4u(vec)
    return phi_k_rk(vec)


def lee_weight(vec: RingVector) -> int:
    """Hamming weight of the binary image (the operational Lee weight)."""
    return int(binary_image(vec).sum())


def bits_to_string(bits: np.ndarray) -> str:
    return "".join("1" if b else "0" for b in bits)


def string_to_bits(text: str) -> np.ndarray:
    text = text.strip()
    if not text or any(ch not in "01" for ch in text):
        raise ValueError(f"bad bitstring {text!r}")
    return np.array([1 if ch == "1" else 0 for ch in text], dtype=np.uint8)
