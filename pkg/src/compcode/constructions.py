"""Self-dual code constructions over the supported rings.

Builds ``[I | M]`` generators from group-ring elements (with ``M`` either
the full translation matrix or a composite layout), checks the matrix
self-duality criterion ``M M^T = I`` (characteristic 2), measures chain-ring
codes by residue/torsion ranks, applies the two-column self-dual extension,
takes Gray images of whole codes, and runs the seeded random search.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .bincodes import BinaryCode, classify_enumerator, is_self_dual, min_distance, weight_counts
from .composite import CompositeSpec, composite_code, omega_matrix
from .graymaps import (
    RingVector,
    binary_image,
    phi_f2u,
    phi_f4u,
    phi_k_rk,
    psi_delta,
    psi_f4,
    psi_f4u,
)
from .groupring import GroupRingElement, is_unitary_unit, sigma_matrix
from .rings import Ring, RingElement, format_vector, make_ring, parse_vector

__all__ = [
    "RingCode",
    "ExtensionSpec",
    "SearchHit",
    "ring_inner_product",
    "gram_matrix",
    "chain_ranks",
    "code_cardinality",
    "ring_code_is_self_dual",
    "build_pure_generator",
    "rowspace_code",
    "check_selfdual_condition",
    "code_binary_image",
    "extend_code",
    "gray_image",
    "GRAY_MAP_NAMES",
    "search_random",
    "write_ring_code",
    "read_ring_code_text",
]


@dataclass(frozen=True)
class RingCode:
    """A linear code over a table-backed ring, kept as raw generator rows.

    Rows are not reduced to a canonical form; cardinality over chain rings
    comes from :func:`chain_ranks`.
    """

    ring: Ring
    n: int
    rows: np.ndarray  # (k, n) element indices

    def __post_init__(self) -> None:
        rows = np.asarray(self.rows, dtype=np.uint8)
        if rows.ndim != 2 or rows.shape[1] != self.n:
            raise ValueError(f"generator shape {rows.shape} does not match length {self.n}")
        if rows.size and rows.max() >= self.ring.size:
            raise ValueError(f"entry out of range for ring {self.ring.kind!r}")
        object.__setattr__(self, "rows", rows)

    @property
    def k(self) -> int:
        return int(self.rows.shape[0])

    def row_vector(self, i: int) -> RingVector:
        return RingVector(self.ring, self.rows[i].copy())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RingCode):
            return NotImplemented
        return (
            self.ring is other.ring
            and self.n == other.n
            and np.array_equal(self.rows, other.rows)
        )

    def __hash__(self) -> int:
        return hash((self.ring.kind, self.n, self.rows.tobytes()))


def ring_inner_product(ring: Ring, x: np.ndarray, y: np.ndarray) -> int:
    """Euclidean inner product of two index vectors (characteristic 2)."""
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    terms = ring.mul[np.asarray(x, dtype=np.uint8), np.asarray(y, dtype=np.uint8)]
    return int(np.bitwise_xor.reduce(terms)) if len(terms) else 0


def gram_matrix(ring: Ring, rows: np.ndarray) -> np.ndarray:
    """All pairwise inner products of the given rows."""
    rows = np.asarray(rows, dtype=np.uint8)
    if rows.shape[0] == 0:
        return np.zeros((0, 0), dtype=np.uint8)
    terms = ring.mul[rows[:, None, :], rows[None, :, :]]
    return np.bitwise_xor.reduce(terms, axis=2)


# ---------------------------------------------------------------------------
# Chain-ring code measurement
# ---------------------------------------------------------------------------


def _residue_ring(ring: Ring) -> Ring:
    return make_ring({2: "f2", 4: "f4"}[ring.residue_size])


def _residue_rank(field: Ring, mat: np.ndarray) -> int:
    """Rank of an index matrix over a field, by Gaussian elimination."""
    mat = mat.copy()
    k, n = mat.shape
    rank = 0
    for c in range(n):
        pivot = next((i for i in range(rank, k) if mat[i, c]), None)
        if pivot is None:
            continue
        mat[[rank, pivot]] = mat[[pivot, rank]]
        mat[rank] = field.mul[field.inv[mat[rank, c]], mat[rank]]
        for i in range(k):
            if i != rank and mat[i, c]:
                mat[i] ^= field.mul[mat[i, c], mat[rank]]
        rank += 1
        if rank == k:
            break
    return rank


def chain_ranks(code: RingCode) -> tuple[int, int]:
    """(free rank k1, torsion rank k2) of a code over a chain ring.

    The row space then has cardinality ``q^k1`` over the fields and
    ``q^(2*k1 + k2)`` over the non-field chain rings, where ``q`` is the
    residue field size.
    """
    ring = code.ring
    if not ring.is_chain:
        raise ValueError(f"ring {ring.kind!r} is not a chain ring")
    mat = code.rows.copy()
    k, n = mat.shape
    mul, inv = ring.mul, ring.inv
    k1 = 0
    for c in range(n):
        pivot = next((i for i in range(k1, k) if ring.units[mat[i, c]]), None)
        if pivot is None:
            continue
        mat[[k1, pivot]] = mat[[pivot, k1]]
        mat[k1] = mul[inv[mat[k1, c]], mat[k1]]
        for i in range(k):
            if i != k1 and mat[i, c]:
                mat[i] ^= mul[mat[i, c], mat[k1]]
        k1 += 1
        if k1 == k:
            break
    torsion = mat[k1:]
    if ring.is_field:
        if torsion.size and torsion.any():
            raise AssertionError("nonzero field row without a unit entry")
        return k1, 0
    # Every leftover entry sits in the maximal ideal; divide by its generator.
    divided = ring.theta_div[torsion]
    if torsion.size and divided.min() < 0:
        raise AssertionError("leftover entry outside the maximal ideal")
    field = _residue_ring(ring)
    residue = ring.res[divided.astype(np.uint8)]
    k2 = _residue_rank(field, residue.reshape(-1, n)) if torsion.size else 0
    return k1, k2


def code_cardinality(code: RingCode) -> int:
    """Number of codewords in the row space (chain rings only)."""
    k1, k2 = chain_ranks(code)
    q = code.ring.residue_size
    if code.ring.is_field:
        return q**k1
    return q ** (2 * k1 + k2)


def ring_code_is_self_dual(code: RingCode) -> bool:
    """True when the row space equals its Euclidean dual.

    Checks self-orthogonality (zero Gram matrix) plus the cardinality
    condition |C| = |R|^(n/2), via residue/torsion ranks.
    """
    if gram_matrix(code.ring, code.rows).any():
        return False
    k1, k2 = chain_ranks(code)
    if code.ring.is_field:
        return code.n % 2 == 0 and k1 == code.n // 2
    return 2 * k1 + k2 == code.n


# ---------------------------------------------------------------------------
# [I | M] generators and the self-duality criterion
# ---------------------------------------------------------------------------


def _construction_matrix(v: GroupRingElement, spec: CompositeSpec | None) -> np.ndarray:
    if spec is None:
        return sigma_matrix(v)
    return omega_matrix(v, spec).entries


def build_pure_generator(v: GroupRingElement, spec: CompositeSpec | None = None) -> RingCode:
    """The ``n x 2n`` generator ``[I | M]`` over v's ring.

    ``spec`` selects the composite layout; ``None`` uses the plain
    translation matrix.
    """
    m = _construction_matrix(v, spec)
    n = v.group.order
    rows = np.zeros((n, 2 * n), dtype=np.uint8)
    rows[:, :n] = np.eye(n, dtype=np.uint8) * v.ring.one
    rows[:, n:] = m
    return RingCode(v.ring, 2 * n, rows)


def rowspace_code(v: GroupRingElement, spec: CompositeSpec | None = None):
    """Row-space code of the bare construction matrix (no identity prefix).

    With a layout this is :func:`~compcode.composite.composite_code`; with
    ``spec=None`` the rows come from the plain translation matrix.  Reduced
    over ``f2``, raw generator rows otherwise.
    """
    if spec is not None:
        return composite_code(v, spec)
    m = sigma_matrix(v)
    if v.ring.kind == "f2":
        return BinaryCode.from_rows(v.group.order, [_bits_to_int(row) for row in m])
    return RingCode(v.ring, v.group.order, m.copy())


def check_selfdual_condition(v: GroupRingElement, spec: CompositeSpec | None = None) -> bool:
    """True when ``M M^T = I`` for the construction matrix of ``v``.

    In characteristic 2 this is exactly the condition for ``[I | M]`` to
    generate a self-dual code of length 2n.
    """
    m = _construction_matrix(v, spec)
    ring = v.ring
    prod = np.bitwise_xor.reduce(ring.mul[m[:, None, :], m[None, :, :]], axis=2)
    expect = np.eye(len(m), dtype=np.uint8) * ring.one
    return np.array_equal(prod, expect)


# ---------------------------------------------------------------------------
# The two-column extension
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExtensionSpec:
    """Extension data: a unit ``c`` with ``c^2 = 1`` and a vector ``X`` with
    ``<X, X> = 1`` (both read as -1 in characteristic 2)."""

    c: RingElement
    x: RingVector


def extend_code(code: RingCode, ext: ExtensionSpec) -> RingCode:
    """Extend a self-dual code of length n to one of length n + 2.

    The new generator has first row ``(1, 0, X)`` and, for each old row
    ``r_i``, the row ``(y_i, c*y_i, r_i)`` with ``y_i = <r_i, X>``.  The two
    new coordinates come first.
    """
    ring = code.ring
    problems = []
    if ext.c.ring is not ring or ext.x.ring is not ring:
        raise ValueError("extension data must live over the code's ring")
    if not ring.units[ext.c.index]:
        problems.append(f"c = {ext.c.token} is not a unit")
    elif ring.mul[ext.c.index, ext.c.index] != ring.one:
        problems.append(f"c = {ext.c.token} does not satisfy c^2 = 1")
    if len(ext.x) != code.n:
        problems.append(f"X has length {len(ext.x)}, expected {code.n}")
    elif ring_inner_product(ring, ext.x.entries, ext.x.entries) != ring.one:
        problems.append("X does not satisfy <X, X> = 1")
    if problems:
        raise ValueError("invalid extension: " + "; ".join(problems))
    if not ring_code_is_self_dual(code):
        raise ValueError("extension requires a self-dual starting code")
    k, n = code.k, code.n
    out = np.zeros((k + 1, n + 2), dtype=np.uint8)
    out[0, 0] = ring.one
    out[0, 2:] = ext.x.entries
    for i in range(k):
        y = ring_inner_product(ring, code.rows[i], ext.x.entries)
        out[i + 1, 0] = y
        out[i + 1, 1] = ring.mul[ext.c.index, y]
        out[i + 1, 2:] = code.rows[i]
    return RingCode(ring, n + 2, out)


# ---------------------------------------------------------------------------
# Gray images of whole codes
# ---------------------------------------------------------------------------

GRAY_MAP_NAMES = (
    "binary",
    "psi-f4",
    "phi-f2u",
    "psi-f4u",
    "phi-f4u",
    "phi-k",
    "psi-delta",
)

_BINARY_MAPS: dict[str, Callable[[RingVector], np.ndarray]] = {
    "binary": binary_image,
    "psi-f4": psi_f4,
    "phi-f2u": phi_f2u,
    "phi-k": phi_k_rk,
    "psi-delta": psi_delta,
}


def _binary_span(code: RingCode, fn: Callable[[RingVector], np.ndarray]) -> BinaryCode:
    ring = code.ring
    rows = []
    width = None
    for i in range(code.k):
        for mult in ring.f2_basis:
            vec = RingVector(ring, ring.mul[mult, code.rows[i]])
            bits = fn(vec)
            width = len(bits)
            rows.append(_bits_to_int(bits))
    if width is None:
        raise ValueError("cannot map a code with no generator rows")
    return BinaryCode.from_rows(width, rows)


def _bits_to_int(bits: np.ndarray) -> int:
    out = 0
    for i, b in enumerate(bits):
        if b:
            out |= 1 << i
    return out


def gray_image(code: RingCode, name: str) -> "RingCode | BinaryCode":
    """Image of a whole code under a named Gray map.

    Binary-valued maps return a :class:`BinaryCode` spanned by the images
    of all GF(2)-basis multiples of the generators; ring-valued maps
    (``psi-f4u``, ``phi-f4u``) return a :class:`RingCode` whose generators
    are the images of the module-basis multiples (redundant rows are kept).
    """
    key = name.strip().lower()
    if key in _BINARY_MAPS:
        return _binary_span(code, _BINARY_MAPS[key])
    if key == "psi-f4u":
        mults, fn, target = (1, 2), psi_f4u, "f2u"  # {1, w}: module basis over F2+uF2
    elif key == "phi-f4u":
        mults, fn, target = (1, 4), phi_f4u, "f4"  # {1, u}: module basis over F4
    else:
        raise ValueError(f"unknown gray map {name!r}; expected one of {', '.join(GRAY_MAP_NAMES)}")
    ring = code.ring
    out_rows = []
    for i in range(code.k):
        for mult in mults:
            vec = RingVector(ring, ring.mul[mult, code.rows[i]])
            out_rows.append(fn(vec).entries)
    out = np.array(out_rows, dtype=np.uint8)
    return RingCode(make_ring(target), out.shape[1], out)


def code_binary_image(code: RingCode) -> BinaryCode:
    """The default full binary image of a code (kind-dispatched map)."""
    return _binary_span(code, binary_image)


# ---------------------------------------------------------------------------
# Random search
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SearchHit:
    """One deduplicated search result."""

    v: GroupRingElement
    code: BinaryCode
    d: int
    a12: int
    a14: int
    family: str


def search_random(
    ring: Ring,
    group,
    spec: CompositeSpec | None,
    trials: int,
    seed: int,
    min_d: int | None = None,
    target_family: str | None = None,
) -> list[SearchHit]:
    """Seeded random search for self-dual codes from ``[I | M]`` generators.

    Samples coefficient vectors i.i.d. uniformly, keeps unitary units,
    builds the generator, takes the binary image, verifies self-duality,
    applies the distance/family filters, and deduplicates by the
    (A_12, A_14) signature.  Deterministic for a fixed seed.
    """
    from .groupring import gr_from_indices

    if ring.char != 2:  # pragma: no cover - all supported rings qualify
        raise ValueError("search requires a characteristic-2 ring")
    rng = random.Random(seed)
    n = group.order
    found: dict[tuple[int, int], SearchHit] = {}
    for _ in range(max(0, trials)):
        coeffs = [rng.randrange(ring.size) for _ in range(n)]
        v = gr_from_indices(group, ring, coeffs)
        if not is_unitary_unit(v):
            continue
        ring_code = build_pure_generator(v, spec)
        bin_code = code_binary_image(ring_code)
        if not is_self_dual(bin_code):
            continue  # defensive: the matrix criterion is checked downstream
        profile = weight_counts(bin_code, min(14, bin_code.n))
        d = min_distance(bin_code)
        a12 = profile.a(12) if bin_code.n >= 12 else 0
        a14 = profile.a(14) if bin_code.n >= 14 else 0
        family = ""
        if bin_code.n in (64, 68) and d >= 12:
            family = classify_enumerator(bin_code.n, profile).family
        if min_d is not None and d < min_d:
            continue
        if target_family is not None and family != target_family:
            continue
        found.setdefault((a12, a14), SearchHit(v, bin_code, d, a12, a14, family))
    return [found[key] for key in sorted(found)]


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------


def write_ring_code(path: str, code: RingCode) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"ring {code.ring.kind} n={code.n} k={code.k}\n")
        for i in range(code.k):
            fh.write(format_vector(code.ring, code.rows[i]) + "\n")


def read_ring_code_text(text: str) -> RingCode:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty code file")
    head = lines[0].split()
    if len(head) != 4 or head[0] != "ring":
        raise ValueError(f"bad ring code header {lines[0]!r}")
    ring = make_ring(head[1])
    try:
        n = int(head[2].removeprefix("n="))
        k = int(head[3].removeprefix("k="))
    except ValueError:
        raise ValueError(f"bad ring code header {lines[0]!r}") from None
    if len(lines) - 1 != k:
        raise ValueError(f"header says k={k} but file has {len(lines) - 1} rows")
    rows = np.zeros((k, n), dtype=np.uint8)
    for i, line in enumerate(lines[1:]):
        vec = parse_vector(ring, line)
        if len(vec) != n:
            raise ValueError(f"row {i + 1} has length {len(vec)}, expected {n}")
        rows[i] = vec
    return RingCode(ring, n, rows)
