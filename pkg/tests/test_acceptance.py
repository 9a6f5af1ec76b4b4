"""Acceptance suite: one printed pass/fail line per numbered criterion.

Run with ``pytest tests/test_acceptance.py -v -s`` to see every line (pytest
captures stdout otherwise; failing criteria repeat their line in the assert
message).  Criteria 4-7 enumerate 2^32/2^34 codewords per profile and
dominate the runtime (roughly six to eight minutes in total on one core).

Criteria 6, 7, and 8 FAIL by construction and are expected to: the shipped
neighbor chain reproduces the published step-1 parameters exactly and then
diverges, and three of the structural identities asserted for composite
layouts are provably false outside the plain-translation layout.  The
failing tests are kept faithful rather than weakened; docs/ and the test
bodies record the verified counterexamples.
"""

import time

import numpy as np
import pytest

from compcode import (
    build_pure_generator,
    check_selfdual_condition,
    classify_enumerator,
    code_binary_image,
    composite_code,
    extend_code,
    gr_from_indices,
    gr_from_tokens,
    gr_involution,
    gr_mul,
    gray_image,
    is_self_dual,
    is_unitary_unit,
    make_ring,
    min_distance,
    neighbor,
    omega_matrix,
    preset_spec,
    ring_code_is_self_dual,
    sigma_matrix,
    string_to_row,
    weight_counts,
)
from compcode.bincodes import BinaryCode
from compcode.constructions import ExtensionSpec, RingCode, ring_inner_product
from compcode.cli import (
    TABLE3_EXPECTED,
    TABLE4_CHECKS,
    example5_ring_code,
    hamming_code,
    table1_binary,
    table1_ring_code,
    table2_binary,
    table3_x_words,
)
from compcode.graymaps import (
    RingVector,
    binary_image,
    binary_image_f4u,
    phi_f2u,
    phi_f4u,
    phi_k_rk,
    psi_delta,
    psi_f4,
    psi_f4u,
)
from compcode.rings import RingElement

import conftest
from conftest import (
    naive_profile,
    random_code,
    random_element,
    ring_matmul,
    translate_word,
)

PRESETS = ("q8-c2c2", "d8-full-c2c2", "d8-c4-sigma", "d8-sect7", "d16-c8", "d16-ex7")


def _report(num: int, ok: bool, detail: str) -> str:
    line = f"criterion {num}: {'PASS' if ok else 'FAIL'} - {detail}"
    print(line)
    conftest.ACCEPTANCE_LINES.append(line)
    return line


@pytest.fixture(scope="module")
def base68():
    """The [68,34] code shared by criteria 5-7 (no enumeration yet)."""
    return table2_binary()


@pytest.fixture(scope="module")
def chain68(base68):
    """The 13 iterated neighbors N_(1) .. N_(13); index 0 is the base code."""
    codes = [base68]
    for x in table3_x_words():
        codes.append(neighbor(codes[-1], x))
    return codes


def test_criterion_1_hamming_reproduction():
    min_distance(hamming_code())  # warm the enumeration path untimed
    t0 = time.perf_counter()
    code = hamming_code()
    d = min_distance(code)
    sd = is_self_dual(code)
    dt = time.perf_counter() - t0
    ok = (code.n, code.k, d) == (8, 4, 4) and sd and dt < 1.0
    line = _report(
        1,
        ok,
        f"quaternion-layout code is [{code.n},{code.k},{d}], self-dual={sd} "
        f"(want self-dual [8,4,4], exact; {dt:.2f}s < 1s)",
    )
    assert ok, line


def test_criterion_2_block_matrix_matches_translation_matrix():
    g, spec = preset_spec("d8-c4-sigma")
    rng = np.random.default_rng(8201)
    t0 = time.perf_counter()
    bad = 0
    for kind in ("f2", "f2u"):
        ring = make_ring(kind)
        for _ in range(100):
            v = random_element(rng, g, ring)
            if not (omega_matrix(v, spec).entries == sigma_matrix(v)).all():
                bad += 1
    dt = time.perf_counter() - t0
    ok = bad == 0 and dt < 1.0
    line = _report(
        2,
        ok,
        f"aligned-subgroup layout: {bad}/200 random elements disagree with the "
        f"translation matrix (want 0, exact; {dt:.2f}s < 1s)",
    )
    assert ok, line


def test_criterion_3_length32_extremal_image():
    t0 = time.perf_counter()
    rc = example5_ring_code()
    ring_sd = ring_code_is_self_dual(rc)
    img = gray_image(rc, "phi-k")
    d = min_distance(img)
    sd = is_self_dual(img)
    dt = time.perf_counter() - t0
    ok = ring_sd and (img.n, img.k, d) == (32, 16, 8) and sd and dt < 5.0
    line = _report(
        3,
        ok,
        f"length-16 code self-dual={ring_sd}; image is [{img.n},{img.k},{d}], "
        f"self-dual={sd} (want self-dual [32,16,8], exact; {dt:.2f}s < 5s)",
    )
    assert ok, line


def test_criterion_4_length64_code():
    t0 = time.perf_counter()
    code = table1_binary()
    d = min_distance(code)
    sd = is_self_dual(code)
    profile = weight_counts(code, 14)
    cls = classify_enumerator(64, profile)
    dt = time.perf_counter() - t0
    got = (code.n, code.k, d, profile.a(12), profile.a(14), cls.family, cls.beta)
    ok = got == (64, 32, 12, 1312, 23040, "W64_2", 0) and sd and dt <= 300
    line = _report(
        4,
        ok,
        f"got [{got[0]},{got[1]},{got[2]}] self-dual={sd} A12={got[3]} "
        f"A14={got[4]} {cls} (want self-dual [64,32,12] A12=1312 A14=23040 "
        f"W64_2 beta=0, exact; {dt:.0f}s <= 300s)",
    )
    assert ok, line


def test_criterion_5_length68_extension(base68):
    t0 = time.perf_counter()
    code = base68
    d = min_distance(code)
    sd = is_self_dual(code)
    profile = weight_counts(code, 14)
    cls = classify_enumerator(68, profile)
    dt = time.perf_counter() - t0
    got = (code.n, code.k, d, profile.a(12), profile.a(14),
           cls.family, cls.gamma, cls.beta)
    ok = got == (68, 34, 12, 854, 13112, "W68_2", 4, 103) and sd and dt <= 1200
    line = _report(
        5,
        ok,
        f"got [{got[0]},{got[1]},{got[2]}] self-dual={sd} A12={got[3]} "
        f"A14={got[4]} {cls} (want self-dual [68,34,12] A12=854 A14=13112 "
        f"W68_2 gamma=4 beta=103, exact; {dt:.0f}s <= 1200s)",
    )
    assert ok, line


def test_criterion_6_neighbor_chain(chain68):
    t0 = time.perf_counter()
    got = []
    ok = True
    for step, expected in enumerate(TABLE3_EXPECTED, start=1):
        code = chain68[step]
        profile = weight_counts(code, 14)
        cls = classify_enumerator(68, profile)
        d = min_distance(code)
        got.append((cls.gamma, cls.beta))
        if (cls.family, cls.gamma, cls.beta, d) != ("W68_2", *expected, 12):
            ok = False
    dt = time.perf_counter() - t0
    line = _report(
        6,
        ok,
        f"chain (gamma,beta) per step: got {got}, want {list(TABLE3_EXPECTED)} "
        f"(exact per step; {dt:.0f}s) - step 1 matches, the published later "
        f"steps are not reproduced by any reading of the listed vectors we tried",
    )
    assert ok, line


def test_criterion_7_neighbor_spot_checks(chain68):
    t0 = time.perf_counter()
    got = []
    ok = True
    for idx, bits, expected in TABLE4_CHECKS:
        nb = neighbor(chain68[idx], string_to_row(bits, 34) << 34)
        profile = weight_counts(nb, 14)
        cls = classify_enumerator(68, profile)
        d = min_distance(nb)
        got.append((idx, cls.gamma, cls.beta))
        if (cls.family, cls.gamma, cls.beta, d) != ("W68_2", *expected, 12):
            ok = False
    dt = time.perf_counter() - t0
    want = [(idx, *exp) for idx, _, exp in TABLE4_CHECKS]
    line = _report(
        7,
        ok,
        f"spot checks (step, gamma, beta): got {got}, want {want} (exact; "
        f"{dt:.0f}s) - depends on the unreproduced chain of criterion 6",
    )
    assert ok, line


# ---------------------------------------------------------------------------
# Criterion 8: six randomized property suites (>= 500 cases each, fixed seed)
# ---------------------------------------------------------------------------


def _suite_block_matrix_properties():
    """Additivity, multiplicativity, and involution-transpose of the block
    matrix under every preset layout (540 property checks per property)."""
    rng = np.random.default_rng(8801)
    cases = failures = 0
    for i in range(180):
        g, spec = preset_spec(PRESETS[i % len(PRESETS)])
        ring = make_ring("f2" if i % 2 else "f2u")
        v = random_element(rng, g, ring)
        w = random_element(rng, g, ring)
        ov = omega_matrix(v, spec).entries
        ow = omega_matrix(w, spec).entries
        # additivity: coefficientwise XOR is ring addition for every kind
        s = gr_from_indices(g, ring, v.coeffs ^ w.coeffs)
        cases += 1
        if not (omega_matrix(s, spec).entries == (ov ^ ow)).all():
            failures += 1
        cases += 1
        if not (omega_matrix(gr_mul(v, w), spec).entries
                == ring_matmul(ring, ov, ow)).all():
            failures += 1
        cases += 1
        if not (omega_matrix(gr_involution(v), spec).entries == ov.T).all():
            failures += 1
    return cases, failures, "block-matrix add/mul/transpose"


def _suite_three_way_equivalence():
    """Self-duality criterion: code self-duality, M M^T = I, and the
    unitary-unit property must coincide for every element."""
    rng = np.random.default_rng(8802)
    frozen = [
        ("q8-c2c2", "f2u", [0, 0, 0, 1, 0, 0, 2, 0]),
        ("d8-full-c2c2", "f2u", [0, 0, 0, 1, 0, 0, 2, 0]),
        ("d8-sect7", "f2", [0, 0, 0, 1, 0, 1, 0, 1]),
        ("d16-c8", "f2", [0] * 13 + [1, 1, 1]),
    ]
    cases = failures = 0
    for i in range(500):
        g, spec = preset_spec(PRESETS[i % len(PRESETS)])
        ring = make_ring("f2" if i % 2 else "f2u")
        v = random_element(rng, g, ring)
        code_sd = ring_code_is_self_dual(build_pure_generator(v, spec))
        cond = check_selfdual_condition(v, spec)
        unit = is_unitary_unit(v)
        cases += 1
        if not (code_sd == cond == unit):
            failures += 1
    for name, kind, coeffs in frozen:
        g, spec = preset_spec(name)
        v = gr_from_indices(g, make_ring(kind), coeffs)
        code_sd = ring_code_is_self_dual(build_pure_generator(v, spec))
        cond = check_selfdual_condition(v, spec)
        unit = is_unitary_unit(v)
        cases += 1
        if not (code_sd == cond == unit):
            failures += 1
    return cases, failures, "three-way self-duality equivalence"


def _suite_group_invariance():
    """Row spaces of block matrices over F2 must be preserved by the group's
    translation action on coordinates (every preset has n <= 16)."""
    rng = np.random.default_rng(8803)
    ring = make_ring("f2")
    cases = failures = 0

    def invariant(group, spec, v) -> bool:
        code = composite_code(v, spec)
        for h in range(group.order):
            for row in code.rows:
                if not code.contains(translate_word(group, row, h)):
                    return False
        return True

    for i in range(500):
        g, spec = preset_spec(PRESETS[i % len(PRESETS)])
        v = random_element(rng, g, ring)
        cases += 1
        if not invariant(g, spec, v):
            failures += 1
    g, spec = preset_spec("q8-c2c2")
    v = gr_from_tokens(g, ring, "1,1,0,0,0,0,0,0")  # verified escape element
    cases += 1
    if not invariant(g, spec, v):
        failures += 1
    return cases, failures, "group invariance of row spaces"


def _suite_gray_maps():
    """Linearity and injectivity of every Gray map, plus self-duality
    transport through binary images (>= 500 checks in total)."""
    rng = np.random.default_rng(8804)
    maps = [
        ("f2", binary_image),
        ("f4", psi_f4),
        ("f2u", phi_f2u),
        ("r1", phi_f2u),
        ("f4u", psi_f4u),
        ("f4u", phi_f4u),
        ("f4u", binary_image_f4u),
        ("r1", phi_k_rk),
        ("r2", phi_k_rk),
        ("r3", phi_k_rk),
        ("r1", psi_delta),
        ("r2", psi_delta),
        ("r3", psi_delta),
    ]
    cases = failures = 0

    def image(fn, ring, entries) -> np.ndarray:
        out = fn(RingVector(ring, entries))
        return out.entries if isinstance(out, RingVector) else out

    for i in range(300):  # linearity
        kind, fn = maps[i % len(maps)]
        ring = make_ring(kind)
        n = int(rng.integers(1, 13))
        x = rng.integers(0, ring.size, size=n).astype(np.uint8)
        y = rng.integers(0, ring.size, size=n).astype(np.uint8)
        cases += 1
        if not (image(fn, ring, x ^ y)
                == (image(fn, ring, x) ^ image(fn, ring, y))).all():
            failures += 1
    for i in range(150):  # injectivity on random distinct pairs
        kind, fn = maps[i % len(maps)]
        ring = make_ring(kind)
        n = int(rng.integers(1, 13))
        x = rng.integers(0, ring.size, size=n).astype(np.uint8)
        y = rng.integers(0, ring.size, size=n).astype(np.uint8)
        if (x == y).all():
            y[0] ^= 1
        cases += 1
        if (image(fn, ring, x) == image(fn, ring, y)).all():
            failures += 1

    def check_transport(ring_code) -> list[bool]:
        image = code_binary_image(ring_code)
        return [ring_code_is_self_dual(ring_code), is_self_dual(image)]

    transport: list[bool] = []
    base = example5_ring_code()
    transport += check_transport(base)
    t1 = table1_ring_code()
    transport += check_transport(t1)
    psi_route = gray_image(t1, "psi-f4u")
    transport += check_transport(psi_route)
    ring = base.ring
    one = RingElement(ring, ring.one)
    built = 0
    while built < 45:  # extensions of a self-dual code stay self-dual
        x = RingVector(ring, rng.integers(0, ring.size, size=base.n))
        if ring_inner_product(ring, x.entries, x.entries) != ring.one:
            continue
        built += 1
        transport += check_transport(extend_code(base, ExtensionSpec(one, x)))
    cases += len(transport)
    failures += sum(not okay for okay in transport)
    return cases, failures, "gray-map linearity/injectivity/transport"


def _suite_neighbors():
    """Neighbor outputs must be self-dual with intersection dimension k-1."""
    rng = np.random.default_rng(8805)
    cases = failures = 0
    for start in (hamming_code(), gray_image(example5_ring_code(), "phi-k")):
        code = start
        for _ in range(250):
            while True:
                x = int(rng.integers(1, 1 << code.n, dtype=np.int64))
                if x.bit_count() % 2 == 0 and not code.contains(x):
                    break
            nb = neighbor(code, x)
            merged = BinaryCode.from_rows(code.n, list(code.rows) + list(nb.rows))
            inter_dim = code.k + nb.k - merged.k
            cases += 1
            if not (is_self_dual(nb) and (nb.n, nb.k) == (code.n, code.k)
                    and inter_dim == code.k - 1):
                failures += 1
            code = nb
    return cases, failures, "neighbor self-duality/intersection"


def _suite_enumeration_oracle():
    """Packed enumeration must equal the subset-XOR oracle for k <= 12."""
    rng = np.random.default_rng(8806)
    cases = failures = 0
    for _ in range(500):
        code = random_code(rng)
        d_naive, hist = naive_profile(code)
        cases += 1
        if (weight_counts(code, code.n).counts != tuple(hist)
                or min_distance(code) != d_naive):
            failures += 1
    return cases, failures, "enumeration vs naive oracle"


def test_criterion_8_property_suites():
    t0 = time.perf_counter()
    results = [
        _suite_block_matrix_properties(),
        _suite_three_way_equivalence(),
        _suite_group_invariance(),
        _suite_gray_maps(),
        _suite_neighbors(),
        _suite_enumeration_oracle(),
    ]
    dt = time.perf_counter() - t0
    total_failures = sum(f for _, f, _ in results)
    ok = total_failures == 0 and dt <= 120
    summary = "; ".join(f"{label}: {f}/{c} failed" for c, f, label in results)
    line = _report(
        8,
        ok,
        f"{summary} (want zero failures; {dt:.0f}s <= 120s) - "
        f"multiplicativity/transpose/invariance/equivalence hold on the "
        f"aligned-subgroup layout but provably fail on mixed layouts",
    )
    assert ok, line


def test_criterion_9_out_of_scope_disclosure():
    line = _report(
        9,
        True,
        "automorphism-group orders are NOT computed or verified anywhere in "
        "this package, and 'new code' claims are checked only as far as "
        "weight-enumerator distinctness - no equivalence testing is performed",
    )
    assert line
