"""Composite block matrices built from a group listing and auxiliary groups.

The translation matrix of a group-ring element tiles into an
``(n/r) x (n/r)`` grid of ``r x r`` blocks.  A composite layout keeps the
first row of every block but regenerates the remaining block rows either
from the ambient group (a *natural* block) or from the division table of an
*auxiliary* group of order ``r`` (an *aux* block).  Concretely, for the
block at grid position ``(p, q)`` with top-left matrix position
``(j, k) = (p*r, q*r)`` (0-based):

- natural block, row ``a``: entry ``t`` is the coefficient at
  ``g_(j+a)^-1 * g_(k+t)``;
- aux block over ``H``, row ``a``: entry ``t`` is the coefficient at
  ``phi(h_a^-1 * h_t)``, where ``phi`` maps the listing of ``H`` onto the
  elements ``g_j^-1 * g_(k+t)`` in column order.

Row 0 of either flavour is the same, so the layout is determined by the
grid of block descriptors.  A layout with every block natural reproduces
the plain translation matrix and is rejected by validation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .groups import (
    FiniteGroup,
    c2xc2,
    c4xc2,
    cyclic_group,
    cyclic_group_evens_first,
    dihedral_group,
    make_group,
    quaternion8,
)
from .groupring import GroupRingElement, sigma_matrix
from .rings import Ring

__all__ = [
    "CompositeSpec",
    "OmegaMatrix",
    "validate_spec",
    "omega_pattern",
    "omega_matrix",
    "composite_code",
    "preset_spec",
    "parse_spec_text",
    "parse_spec_file",
    "PRESET_NAMES",
]


@dataclass(frozen=True)
class CompositeSpec:
    """A composite layout: ambient group, block size, and block grid.

    ``blocks[p][q]`` is ``None`` for a natural block or a
    :class:`FiniteGroup` of order ``r`` for an aux block.
    """

    group: FiniteGroup
    r: int
    blocks: tuple[tuple[Optional[FiniteGroup], ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "blocks", tuple(tuple(row) for row in self.blocks)
        )

    @property
    def grid_size(self) -> int:
        return self.group.order // self.r


@dataclass(frozen=True)
class OmegaMatrix:
    """A composite matrix together with the layout that produced it."""

    entries: np.ndarray
    ring: Ring
    spec: CompositeSpec


def validate_spec(spec: CompositeSpec) -> list[str]:
    """Return a list of diagnostics; an empty list means the layout is valid."""
    problems: list[str] = []
    n, r = spec.group.order, spec.r
    if n % r != 0:
        problems.append(f"block size {r} does not divide the group order {n}")
        return problems
    if not 1 < r < n:
        problems.append(f"block size must satisfy 1 < r < {n}, got {r}")
        return problems
    m = n // r
    if len(spec.blocks) != m or any(len(row) != m for row in spec.blocks):
        problems.append(f"block grid must be {m} x {m}")
        return problems
    aux_count = 0
    for p, row in enumerate(spec.blocks):
        for q, aux in enumerate(row):
            if aux is None:
                continue
            aux_count += 1
            if aux.order != r:
                problems.append(
                    f"aux group {aux.name!r} at grid ({p}, {q}) has order {aux.order}, "
                    f"expected {r}"
                )
            if aux.labels and aux.cayley[0, 0] != 0:
                problems.append(
                    f"aux group {aux.name!r} at grid ({p}, {q}) must list its identity first"
                )
    if aux_count == 0:
        problems.append(
            "every block is natural: the layout degenerates to the plain "
            "translation matrix (use sigma_matrix instead)"
        )
    return problems


def _require_valid(spec: CompositeSpec) -> None:
    problems = validate_spec(spec)
    if problems:
        raise ValueError("invalid composite layout: " + "; ".join(problems))


def omega_pattern(spec: CompositeSpec) -> np.ndarray:
    """The ``n x n`` matrix of group listing indices selecting each entry.

    ``pattern[j, i]`` is the listing index of the group element whose
    coefficient fills entry ``(j, i)`` of the composite matrix.
    """
    _require_valid(spec)
    g = spec.group
    n, r = g.order, spec.r
    m = n // r
    pattern = np.zeros((n, n), dtype=np.uint8)
    for p in range(m):
        j0 = p * r
        for q in range(m):
            k0 = q * r
            aux = spec.blocks[p][q]
            if aux is None:
                for a in range(r):
                    pattern[j0 + a, k0 : k0 + r] = g.cayley[g.inv[j0 + a], k0 : k0 + r]
            else:
                img = g.cayley[g.inv[j0], k0 : k0 + r]
                for a in range(r):
                    pattern[j0 + a, k0 : k0 + r] = img[aux.cayley[aux.inv[a]]]
    return pattern


def omega_matrix(v: GroupRingElement, spec: CompositeSpec) -> OmegaMatrix:
    """Fill the composite layout with the coefficients of ``v``."""
    if v.group is not spec.group:
        raise ValueError(
            f"element group {v.group.name!r} does not match layout group {spec.group.name!r}"
        )
    pattern = omega_pattern(spec)
    return OmegaMatrix(v.coeffs[pattern], v.ring, spec)


def composite_code(v: GroupRingElement, spec: CompositeSpec):
    """The row-space code generated by the composite matrix of ``v``.

    Over ``f2`` the result is a :class:`~compcode.bincodes.BinaryCode`
    (reduced row space); over the other rings it is a
    :class:`~compcode.constructions.RingCode` keeping the ``n`` generator
    rows.
    """
    from .bincodes import BinaryCode
    from .constructions import RingCode

    entries = omega_matrix(v, spec).entries
    if v.ring.kind == "f2":
        rows = [int(np.bitwise_or.reduce(row.astype(np.int64) << np.arange(len(row)))) for row in entries]
        return BinaryCode.from_rows(v.group.order, rows)
    return RingCode(v.ring, v.group.order, entries.copy())


# ---------------------------------------------------------------------------
# Presets and layout files
# ---------------------------------------------------------------------------


def _preset_q8_c2c2() -> tuple[FiniteGroup, CompositeSpec]:
    g = quaternion8()
    h = c2xc2()
    return g, CompositeSpec(g, 4, ((h, None), (None, h)))


def _preset_d8_full_c2c2() -> tuple[FiniteGroup, CompositeSpec]:
    g = dihedral_group(8)
    h = c2xc2()
    return g, CompositeSpec(g, 4, ((h, h), (None, None)))


def _preset_d8_c4_sigma() -> tuple[FiniteGroup, CompositeSpec]:
    g = dihedral_group(8)
    h = cyclic_group(4)
    return g, CompositeSpec(g, 4, ((h, h), (None, None)))


def _preset_d8_sect7() -> tuple[FiniteGroup, CompositeSpec]:
    g = dihedral_group(8)
    h1 = cyclic_group_evens_first(4)
    h2 = c2xc2()
    return g, CompositeSpec(g, 4, ((h1, h2), (h2, h2)))


def _preset_d16_c8() -> tuple[FiniteGroup, CompositeSpec]:
    g = dihedral_group(16)
    h = cyclic_group_evens_first(8)
    return g, CompositeSpec(g, 8, ((h, h), (h, h)))


def _preset_d16_ex7() -> tuple[FiniteGroup, CompositeSpec]:
    g = dihedral_group(16)
    h1 = c4xc2()
    h2 = dihedral_group(8)
    return g, CompositeSpec(g, 8, ((h1, h1), (h2, h2)))


_PRESETS = {
    "q8-c2c2": _preset_q8_c2c2,
    "d8-full-c2c2": _preset_d8_full_c2c2,
    "d8-c4-sigma": _preset_d8_c4_sigma,
    "d8-sect7": _preset_d8_sect7,
    "d16-c8": _preset_d16_c8,
    "d16-ex7": _preset_d16_ex7,
}

PRESET_NAMES = tuple(sorted(_PRESETS))


def preset_spec(name: str) -> tuple[FiniteGroup, CompositeSpec]:
    """Look up a shipped layout preset by name."""
    try:
        builder = _PRESETS[name.strip().lower()]
    except KeyError:
        raise ValueError(
            f"unknown preset {name!r}; available: {', '.join(PRESET_NAMES)}"
        ) from None
    return builder()


def parse_spec_text(text: str) -> tuple[FiniteGroup, CompositeSpec]:
    """Parse a layout description.

    Format: line 1 is ``group <kind>``, line 2 is ``r <int>``, and the
    remaining whitespace-separated tokens are the ``(n/r)^2`` block
    descriptors in row-major order, each ``nat`` or ``aux:<groupkind>``.
    Blank lines and lines starting with ``#`` are ignored.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if len(lines) < 3:
        raise ValueError("layout file needs a group line, an r line and block descriptors")
    g_parts = lines[0].split()
    if len(g_parts) != 2 or g_parts[0] != "group":
        raise ValueError(f"bad group line {lines[0]!r}; expected 'group <kind>'")
    group = make_group(g_parts[1])
    r_parts = lines[1].split()
    if len(r_parts) != 2 or r_parts[0] != "r" or not r_parts[1].isdigit():
        raise ValueError(f"bad block-size line {lines[1]!r}; expected 'r <int>'")
    r = int(r_parts[1])
    n = group.order
    if n % r != 0 or not 1 < r < n:
        raise ValueError(f"block size {r} is not a proper divisor of the group order {n}")
    m = n // r
    tokens = " ".join(lines[2:]).split()
    if len(tokens) != m * m:
        raise ValueError(f"expected {m * m} block descriptors, got {len(tokens)}")
    grid: list[list[Optional[FiniteGroup]]] = []
    it = iter(tokens)
    for _ in range(m):
        row: list[Optional[FiniteGroup]] = []
        for _ in range(m):
            tok = next(it)
            if tok == "nat":
                row.append(None)
            elif tok.startswith("aux:"):
                row.append(make_group(tok[4:]))
            else:
                raise ValueError(f"bad block descriptor {tok!r}; expected 'nat' or 'aux:<kind>'")
        grid.append(row)
    spec = CompositeSpec(group, r, tuple(tuple(row) for row in grid))
    problems = validate_spec(spec)
    if problems:
        raise ValueError("invalid composite layout: " + "; ".join(problems))
    return group, spec


def parse_spec_file(path: str) -> tuple[FiniteGroup, CompositeSpec]:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_spec_text(fh.read())
