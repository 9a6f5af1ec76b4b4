"""Finite groups with fixed, frozen element listings.

A group is stored as an explicit Cayley table over an ordered element
listing.  The listing order is part of the contract: matrix constructions
index rows and columns by listing position, so two copies of the same
abstract group with different listings are deliberately distinct objects.

Frozen listings:

- cyclic ``n``:      1, x, x^2, ..., x^(n-1)
- dihedral ``2m``:   1, x, ..., x^(m-1), y, xy, ..., x^(m-1)y  (y^2 = 1,
  yx = x^(-1)y)
- quaternion 8:      1, x, x^2, x^3, y, xy, x^2y, x^3y  (y^2 = x^2,
  yx = x^(-1)y)
- C2 x C2:           1, a, b, ab
- C4 x C2:           1, a, a^2, a^3, b, ab, a^2b, a^3b
- cyclic "alt" (even ``n``): even powers first, then odd powers
  (1, x^2, ..., x^(n-2), x, x^3, ..., x^(n-1))
"""

from __future__ import annotations

import re
from typing import Sequence

import numpy as np

__all__ = [
    "FiniteGroup",
    "make_group",
    "cyclic_group",
    "cyclic_group_evens_first",
    "dihedral_group",
    "quaternion8",
    "c2xc2",
    "c4xc2",
    "group_from_table",
    "group_mul",
    "left_translation_permutation",
    "left_translate_vector",
]

_MAX_ORDER = 16


class FiniteGroup:
    """A finite group given by an ordered listing and its Cayley table.

    Attributes:
        name: short kind string (e.g. ``"d8"``).
        order: number of elements.
        labels: element label per listing position; position 0 is the identity.
        cayley: ``cayley[i, j]`` is the listing index of ``g_i * g_j``.
        inv: listing index of the inverse per position.
    """

    def __init__(self, name: str, labels: Sequence[str], cayley: np.ndarray) -> None:
        n = len(labels)
        cayley = np.asarray(cayley, dtype=np.uint8)
        if n == 0 or n > _MAX_ORDER:
            raise ValueError(f"group order must be between 1 and {_MAX_ORDER}, got {n}")
        if cayley.shape != (n, n):
            raise ValueError(f"Cayley table shape {cayley.shape} does not match order {n}")
        self.name = name
        self.order = n
        self.labels = tuple(labels)
        self.cayley = cayley
        self._validate()
        inv = np.zeros(n, dtype=np.uint8)
        for i in range(n):
            hits = np.nonzero(cayley[i] == 0)[0]
            if hits.size != 1:
                raise ValueError(f"group {name!r}: element {labels[i]!r} lacks a unique inverse")
            inv[i] = hits[0]
        self.inv = inv

    def _validate(self) -> None:
        n, c = self.order, self.cayley
        if c.max(initial=0) >= n:
            raise ValueError(f"group {self.name!r}: table entry out of range")
        full = np.arange(n, dtype=np.uint8)
        for i in range(n):
            if not np.array_equal(np.sort(c[i]), full) or not np.array_equal(
                np.sort(c[:, i]), full
            ):
                raise ValueError(f"group {self.name!r}: Cayley table is not a Latin square")
        if not np.array_equal(c[0], full) or not np.array_equal(c[:, 0], full):
            raise ValueError(f"group {self.name!r}: listing position 0 is not the identity")
        # Associativity, exhaustively: left[a,b,e] = (ab)e, right[a,b,e] = a(be).
        left = c[c, :]
        right = c[:, c]
        if not np.array_equal(left, right):
            raise ValueError(f"group {self.name!r}: Cayley table is not associative")

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValueError(f"group {self.name!r} has no element labelled {label!r}") from None

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"FiniteGroup({self.name!r}, order={self.order})"


def group_mul(group: FiniteGroup, i: int, j: int) -> int:
    """Listing index of ``g_i * g_j``."""
    return int(group.cayley[i, j])


def left_translation_permutation(group: FiniteGroup, h: int) -> np.ndarray:
    """The permutation ``k -> index(g_h * g_k)`` of listing positions."""
    if not 0 <= h < group.order:
        raise ValueError(f"element index {h} out of range for group {group.name!r}")
    return group.cayley[h].copy()

def left_translate_vector(group: FiniteGroup, h: int, vec: np.ndarray) -> np.ndarray:
    """Coordinate action of left translation by ``g_h`` on a coefficient vector.

    Position ``k`` of the result reads position ``index(g_h^-1 * g_k)`` of the
    input, so the result is the coefficient vector of ``g_h * v``.
    """
    if len(vec) != group.order:
        raise ValueError("vector length does not match group order")
    src = group.cayley[group.inv[h]]
    return np.asarray(vec)[src]


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------


def _power_label(base: str, e: int) -> str:
    if e == 0:
        return "1"
    if e == 1:
        return base
    return f"{base}{e}"


def _semidirect_cayley(m: int, twist: bool, y_square_shift: int) -> np.ndarray:
    """Table for groups with normal form x^a y^b over listing x-powers-then-y.

    ``twist`` selects y x = x^(-1) y; ``y_square_shift`` is s with y^2 = x^s.
    """
    n = 2 * m
    c = np.zeros((n, n), dtype=np.uint8)
    for a in range(m):
        for b in range(2):
            i = a + m * b
            for cexp in range(m):
                for d in range(2):
                    j = cexp + m * d
                    e = (a + (cexp if not (twist and b) else -cexp)) % m
                    if b and d:
                        e = (e + y_square_shift) % m
                    c[i, j] = e + m * ((b + d) % 2)
    return c


def cyclic_group(n: int) -> FiniteGroup:
    """Cyclic group of order ``n`` with the power listing 1, x, ..., x^(n-1)."""
    if not 1 <= n <= _MAX_ORDER:
        raise ValueError(f"cyclic group order must be between 1 and {_MAX_ORDER}, got {n}")
    idx = np.arange(n)
    cayley = ((idx[:, None] + idx[None, :]) % n).astype(np.uint8)
    return FiniteGroup(f"c{n}", [_power_label("x", e) for e in range(n)], cayley)


def cyclic_group_evens_first(n: int) -> FiniteGroup:
    """Cyclic group of even order listed as even powers first, then odd."""
    if n % 2 or not 2 <= n <= _MAX_ORDER:
        raise ValueError(f"evens-first listing needs an even order in [2, {_MAX_ORDER}], got {n}")
    exps = list(range(0, n, 2)) + list(range(1, n, 2))
    pos = {e: i for i, e in enumerate(exps)}
    cayley = np.zeros((n, n), dtype=np.uint8)
    for i, a in enumerate(exps):
        for j, b in enumerate(exps):
            cayley[i, j] = pos[(a + b) % n]
    return FiniteGroup(f"c{n}alt", [_power_label("x", e) for e in exps], cayley)


def dihedral_group(order: int) -> FiniteGroup:
    """Dihedral group of the given (even) order, reflections listed last."""
    if order % 2 or not 4 <= order <= _MAX_ORDER:
        raise ValueError(f"dihedral order must be an even number in [4, {_MAX_ORDER}], got {order}")
    m = order // 2
    labels = [_power_label("x", e) for e in range(m)]
    labels += [("y" if e == 0 else f"{_power_label('x', e)}y") for e in range(m)]
    return FiniteGroup(f"d{order}", labels, _semidirect_cayley(m, twist=True, y_square_shift=0))


def quaternion8() -> FiniteGroup:
    """The quaternion group of order 8 with listing 1, x, x^2, x^3, y, xy, x^2y, x^3y."""
    labels = ["1", "x", "x2", "x3", "y", "xy", "x2y", "x3y"]
    return FiniteGroup("q8", labels, _semidirect_cayley(4, twist=True, y_square_shift=2))


def c2xc2() -> FiniteGroup:
    """Klein four-group with listing 1, a, b, ab."""
    cayley = np.array([[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]], dtype=np.uint8)
    return FiniteGroup("c2c2", ["1", "a", "b", "ab"], cayley)


def c4xc2() -> FiniteGroup:
    """C4 x C2 with listing 1, a, a^2, a^3, b, ab, a^2b, a^3b."""
    labels = ["1", "a", "a2", "a3", "b", "ab", "a2b", "a3b"]
    return FiniteGroup("c4c2", labels, _semidirect_cayley(4, twist=False, y_square_shift=0))


def group_from_table(name: str, labels: Sequence[str], cayley: np.ndarray) -> FiniteGroup:
    """Build a group from an explicit table; all group laws are checked."""
    return FiniteGroup(name, labels, cayley)


_CYCLIC_RE = re.compile(r"^c(\d+)$")
_CYCLIC_ALT_RE = re.compile(r"^c(\d+)alt$")
_DIHEDRAL_RE = re.compile(r"^d(\d+)$")


def make_group(kind: str) -> FiniteGroup:
    """Build a group from a kind string such as ``d8``, ``q8`` or ``c2c2``."""
    key = kind.strip().lower()
    if key == "q8":
        return quaternion8()
    if key == "c2c2":
        return c2xc2()
    if key == "c4c2":
        return c4xc2()
    m = _CYCLIC_ALT_RE.match(key)
    if m:
        return cyclic_group_evens_first(int(m.group(1)))
    m = _CYCLIC_RE.match(key)
    if m:
        return cyclic_group(int(m.group(1)))
    m = _DIHEDRAL_RE.match(key)
    if m:
        return dihedral_group(int(m.group(1)))
    raise ValueError(
        f"unknown group kind {kind!r}; expected c<n>, c<n>alt, d<2m>, q8, c2c2 or c4c2"
    )
