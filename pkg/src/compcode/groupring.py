"""Group-ring elements and the translation matrix of an element.

An element ``v`` of the group ring RG is stored as a dense coefficient
vector over the group's frozen listing: ``coeffs[i]`` is the coefficient of
the listing element ``g_i``, encoded as a ring element index.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .groups import FiniteGroup
from .rings import Ring, format_vector, parse_vector

__all__ = [
    "GroupRingElement",
    "gr_from_tokens",
    "gr_from_indices",
    "gr_zero",
    "gr_identity",
    "gr_tokens",
    "gr_add",
    "gr_mul",
    "gr_involution",
    "sigma_matrix",
    "is_unitary_unit",
]


@dataclass(frozen=True)
class GroupRingElement:
    """A group-ring element: group, coefficient ring, and coefficient vector."""

    group: FiniteGroup
    ring: Ring
    coeffs: np.ndarray

    def __post_init__(self) -> None:
        coeffs = np.asarray(self.coeffs, dtype=np.uint8)
        if coeffs.shape != (self.group.order,):
            raise ValueError(
                f"coefficient vector has shape {coeffs.shape}, expected ({self.group.order},)"
            )
        if coeffs.max(initial=0) >= self.ring.size:
            raise ValueError(f"coefficient index out of range for ring {self.ring.kind!r}")
        object.__setattr__(self, "coeffs", coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return (
            self.group is other.group
            and self.ring is other.ring
            and np.array_equal(self.coeffs, other.coeffs)
        )

    def __hash__(self) -> int:
        return hash((id(self.group), id(self.ring), self.coeffs.tobytes()))

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"GroupRingElement({self.group.name}, {self.ring.kind}, [{gr_tokens(self)}])"


def gr_from_tokens(group: FiniteGroup, ring: Ring, text: str) -> GroupRingElement:
    """Parse a comma-separated coefficient vector in listing order."""
    coeffs = parse_vector(ring, text)
    if len(coeffs) != group.order:
        raise ValueError(
            f"expected {group.order} coefficients for group {group.name!r}, got {len(coeffs)}"
        )
    return GroupRingElement(group, ring, coeffs)


def gr_from_indices(group: FiniteGroup, ring: Ring, indices) -> GroupRingElement:
    """Build an element from an iterable of ring element indices."""
    return GroupRingElement(group, ring, np.asarray(list(indices), dtype=np.uint8))


def gr_zero(group: FiniteGroup, ring: Ring) -> GroupRingElement:
    return GroupRingElement(group, ring, np.zeros(group.order, dtype=np.uint8))


def gr_identity(group: FiniteGroup, ring: Ring) -> GroupRingElement:
    """The multiplicative identity 1 * g_0."""
    coeffs = np.zeros(group.order, dtype=np.uint8)
    coeffs[0] = ring.one
    return GroupRingElement(group, ring, coeffs)


def gr_tokens(v: GroupRingElement) -> str:
    """Serialise the coefficient vector as comma-separated ring tokens."""
    return format_vector(v.ring, v.coeffs)


def _check_compatible(v: GroupRingElement, w: GroupRingElement) -> None:
    if v.group is not w.group:
        raise ValueError(f"group mismatch: {v.group.name!r} vs {w.group.name!r}")
    if v.ring is not w.ring:
        raise ValueError(f"ring mismatch: {v.ring.kind!r} vs {w.ring.kind!r}")


def gr_add(v: GroupRingElement, w: GroupRingElement) -> GroupRingElement:
    """Coefficient-wise sum."""
    _check_compatible(v, w)
    return GroupRingElement(v.group, v.ring, v.ring.add[v.coeffs, w.coeffs])


def gr_mul(v: GroupRingElement, w: GroupRingElement) -> GroupRingElement:
    """Convolution product over the group's Cayley table."""
    _check_compatible(v, w)
    ring, cayley = v.ring, v.group.cayley
    out = np.zeros(v.group.order, dtype=np.uint8)
    for i in range(v.group.order):
        a = v.coeffs[i]
        if a == 0:
            continue
        terms = ring.mul[a, w.coeffs]
        for j in range(v.group.order):
            k = cayley[i, j]
            out[k] = ring.add[out[k], terms[j]]
    return GroupRingElement(v.group, v.ring, out)


def gr_involution(v: GroupRingElement) -> GroupRingElement:
    """The canonical involution sending each group element to its inverse."""
    return GroupRingElement(v.group, v.ring, v.coeffs[v.group.inv])


def sigma_matrix(v: GroupRingElement) -> np.ndarray:
    """The full translation matrix of ``v``.

    Entry ``(j, i)`` is the coefficient of ``v`` at ``g_j^-1 * g_i``, so row
    ``j`` is the coefficient vector of ``g_j * v`` and row 0 equals the
    coefficient vector of ``v``.
    """
    g = v.group
    pattern = g.cayley[g.inv][:, :]
    return v.coeffs[pattern]


def is_unitary_unit(v: GroupRingElement) -> bool:
    """True when ``v`` times its involution is the identity of RG.

    Only defined for coefficient rings of characteristic 2, where this is
    the condition for the translation matrix to be orthogonal.
    """
    if v.ring.char != 2:
        raise ValueError("is_unitary_unit requires a coefficient ring of characteristic 2")
    prod = gr_mul(v, gr_involution(v))
    return prod == gr_identity(v.group, v.ring)
