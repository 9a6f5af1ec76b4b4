"""Group-ring arithmetic and translation-matrix checks."""

from __future__ import annotations

import random

import numpy as np
import pytest

from compcode.groupring import (
    GroupRingElement,
    gr_add,
    gr_from_indices,
    gr_from_tokens,
    gr_identity,
    gr_involution,
    gr_mul,
    gr_tokens,
    gr_zero,
    is_unitary_unit,
    sigma_matrix,
)
from compcode.groups import left_translate_vector, make_group
from compcode.rings import make_ring


def rand_elem(group, ring, rng):
    return gr_from_indices(
        group, ring, [rng.randrange(ring.size) for _ in range(group.order)]
    )


def ring_matmul(ring, a, b):
    prod = ring.mul[a[:, :, None], b[None, :, :]]
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for l in range(a.shape[1]):
        out ^= prod[:, l, :]
    return out.astype(np.uint8)


def test_c3_convolution_oracle():
    c3, f2 = make_group("c3"), make_ring("f2")
    v = gr_from_indices(c3, f2, [1, 1, 0])  # 1 + x
    w = gr_from_indices(c3, f2, [1, 0, 1])  # 1 + x^2
    assert gr_mul(v, w).coeffs.tolist() == [0, 1, 1]  # x + x^2


def test_identity_and_zero():
    g, ring = make_group("d8"), make_ring("f4u")
    rng = random.Random(1)
    v = rand_elem(g, ring, rng)
    assert gr_mul(gr_identity(g, ring), v) == v
    assert gr_mul(v, gr_identity(g, ring)) == v
    assert gr_add(v, gr_zero(g, ring)) == v
    assert gr_add(v, v) == gr_zero(g, ring)


@pytest.mark.parametrize("gk,rk", [("q8", "f2"), ("d8", "f2u"), ("d16", "f4u"), ("c4c2", "r2")])
def test_ring_laws_randomized(gk, rk):
    g, ring = make_group(gk), make_ring(rk)
    rng = random.Random(20)
    for _ in range(40):
        a, b, c = (rand_elem(g, ring, rng) for _ in range(3))
        assert gr_mul(gr_mul(a, b), c) == gr_mul(a, gr_mul(b, c))
        assert gr_mul(a, gr_add(b, c)) == gr_add(gr_mul(a, b), gr_mul(a, c))
        assert gr_add(a, b) == gr_add(b, a)


def test_involution_laws():
    g, ring = make_group("d16"), make_ring("f2u")
    rng = random.Random(21)
    for _ in range(50):
        a, b = rand_elem(g, ring, rng), rand_elem(g, ring, rng)
        assert gr_involution(gr_involution(a)) == a
        assert gr_involution(gr_mul(a, b)) == gr_mul(gr_involution(b), gr_involution(a))
        assert gr_involution(gr_add(a, b)) == gr_add(gr_involution(a), gr_involution(b))


@pytest.mark.parametrize("gk,rk", [("q8", "f2"), ("d8", "f2u"), ("c8", "f4"), ("d16", "f2")])
def test_sigma_is_a_ring_homomorphism(gk, rk):
    g, ring = make_group(gk), make_ring(rk)
    rng = random.Random(22)
    for _ in range(30):
        a, b = rand_elem(g, ring, rng), rand_elem(g, ring, rng)
        assert (
            sigma_matrix(gr_mul(a, b))
            == ring_matmul(ring, sigma_matrix(a), sigma_matrix(b))
        ).all()
        assert (
            sigma_matrix(gr_add(a, b)) == (sigma_matrix(a) ^ sigma_matrix(b))
        ).all()
        assert (sigma_matrix(gr_involution(a)) == sigma_matrix(a).T).all()


def test_sigma_rows_are_translates():
    g, ring = make_group("d8"), make_ring("f4u")
    rng = random.Random(23)
    v = rand_elem(g, ring, rng)
    m = sigma_matrix(v)
    assert (m[0] == v.coeffs).all()
    for j in range(g.order):
        assert (m[j] == left_translate_vector(g, j, v.coeffs)).all()


def test_sigma_d16_block_structure():
    g, ring = make_group("d16"), make_ring("f2u")
    rng = random.Random(24)
    v = rand_elem(g, ring, rng)
    m = sigma_matrix(v)
    a, b = m[:8, :8], m[:8, 8:]
    # rotation half: circulant in the x-exponent
    for j in range(8):
        for i in range(8):
            assert a[j, i] == v.coeffs[(i - j) % 8]
            assert b[j, i] == v.coeffs[8 + (i - j) % 8]
    assert (m[8:, :8] == b.T).all()
    assert (m[8:, 8:] == a.T).all()


def test_is_unitary_unit_cases():
    g, ring = make_group("q8"), make_ring("f2")
    assert is_unitary_unit(gr_identity(g, ring))
    assert not is_unitary_unit(gr_zero(g, ring))
    # any single group element is a unitary unit: delta_g * delta_{g^-1} = 1
    for i in range(g.order):
        coeffs = [0] * g.order
        coeffs[i] = 1
        assert is_unitary_unit(gr_from_indices(g, ring, coeffs))
    # 1 + x over F2 C2 squares to zero, so it is not
    c2 = make_group("c2")
    f2 = make_ring("f2")
    assert not is_unitary_unit(gr_from_indices(c2, f2, [1, 1]))


def test_token_round_trip():
    g, ring = make_group("d8"), make_ring("f4u")
    v = gr_from_tokens(g, ring, "0,w,u+1,u+1,u,wu+u,w,wu+u+1")
    assert gr_tokens(v) == "0,w,u+1,u+1,u,wu+u,w,wu+u+1"
    assert gr_from_tokens(g, ring, gr_tokens(v)) == v


def test_validation_errors():
    g, ring = make_group("q8"), make_ring("f2")
    with pytest.raises(ValueError):
        gr_from_tokens(g, ring, "1,0,1")  # wrong length
    with pytest.raises(ValueError):
        gr_from_indices(g, ring, [0, 1, 2, 0, 0, 0, 0, 0])  # index out of range
    other = make_group("d8")
    v = gr_identity(g, ring)
    w = gr_identity(other, ring)
    with pytest.raises(ValueError):
        gr_mul(v, w)
    with pytest.raises(ValueError):
        gr_add(v, w)


def test_cross_ring_identity_required():
    g = make_group("q8")
    v = gr_identity(g, make_ring("f2"))
    w = GroupRingElement(g, make_ring("f2u"), np.zeros(8, dtype=np.uint8))
    with pytest.raises(ValueError):
        gr_mul(v, w)
