"""Command-line front end.

Commands: ``build``, ``selfdual``, ``gray``, ``measure``, ``extend``,
``neighbor``, ``chain``, ``reproduce``, ``search``.  Exit codes: 0 on
success / verified, 1 on a verification mismatch, 2 on usage errors
(including refused enumeration budgets).

The ``reproduce`` targets carry embedded expected values and are fully
self-contained; the heavy length-68 targets each run full 2^34 codeword
enumerations and take minutes per enumeration on one core.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Sequence

from .bincodes import (
    BinaryCode,
    classify_enumerator,
    is_self_dual,
    min_distance,
    neighbor,
    read_binary_code_text,
    string_to_row,
    weight_counts,
    write_binary_code,
)
from .composite import (
    PRESET_NAMES,
    CompositeSpec,
    composite_code,
    parse_spec_file,
    preset_spec,
)
from .constructions import (
    ExtensionSpec,
    RingCode,
    build_pure_generator,
    chain_ranks,
    check_selfdual_condition,
    code_binary_image,
    extend_code,
    gram_matrix,
    gray_image,
    GRAY_MAP_NAMES,
    read_ring_code_text,
    ring_code_is_self_dual,
    rowspace_code,
    search_random,
    write_ring_code,
)
from .graymaps import vector_from_tokens
from .groupring import gr_from_tokens, gr_tokens, is_unitary_unit
from .groups import FiniteGroup, make_group
from .rings import make_ring

__all__ = ["main"]

_ENUM_BUDGET_K = 36


# ---------------------------------------------------------------------------
# Embedded reproduction fixtures
# ---------------------------------------------------------------------------

HAMMING_V = "0,0,0,1,0,1,1,1"

EXAMPLE5_V = "u1,u1,u1,u1,u1,u1,u1,1,0,0,u1,u1,0,1,1,1"

TABLE1_V = "0,w,u+1,u+1,u,wu+u,w,wu+u+1"

TABLE2_C = "1"
TABLE2_X = (
    "0,3,3,u,3,1,3,3,3,3,1,1,0,3,3,1,"
    "3,1,0,u,1,3,u,3,0,1,3,u,3,0,3,1"
)

TABLE3_XS = (
    "1111011010011101111111100100111110",
    "0110100100111101111011111110111011",
    "0000100000010000011101110110000101",
    "1111111100000010000111001100101011",
    "0110010010100110110111101011111111",
    "1100001011011111001111110010001011",
    "1110010010100011111100101110001100",
    "0011000000000110110101001101100000",
    "1001101110001110110000111101000011",
    "1001011111100101110001001011110110",
    "1010101101101101110111011111111010",
    "1111010110110000110111011010101010",
    "1000011111111011110110001010110010",
)
TABLE3_EXPECTED = (
    (4, 101), (6, 145), (7, 152), (7, 143), (8, 162), (9, 174), (9, 167),
    (9, 159), (9, 158), (9, 157), (9, 152), (7, 131), (6, 117),
)

TABLE4_CHECKS = (
    (7, "0001000010111101010000011101000110", (7, 141)),
    (8, "0111100101101011111001111110111101", (7, 134)),
    (13, "0101110011001101000001001000001000", (5, 110)),
)

EXAMPLE6_VS = (
    ("C1", "0,0,0,0,0,1,0,1,0,0,0,1,1,1,1,1"),
    ("C2", "0,0,0,0,0,1,1,1,0,1,0,1,1,1,1,1"),
    ("C3", "0,0,0,0,1,1,1,1,0,0,0,1,0,0,1,1"),
)

EXAMPLE7_V = "0,0,1,0,0,0,1,0,0,0,1,0,1,1,1,1"

REPRO_TARGETS = (
    "hamming-q8",
    "example5-d16",
    "table1-64",
    "table2-68",
    "table3-chain",
    "table4-neighbors",
    "example6-sigma",
    "example7-omega",
)


# ---------------------------------------------------------------------------
# Reproduction pipelines (shared with the acceptance tests)
# ---------------------------------------------------------------------------


def hamming_code() -> BinaryCode:
    """The [8,4,4] code from the Q8 preset."""
    g, spec = preset_spec("q8-c2c2")
    v = gr_from_tokens(g, make_ring("f2"), HAMMING_V)
    return composite_code(v, spec)


def example5_ring_code() -> RingCode:
    """The length-16 self-dual code over r1 from the d16-c8 preset."""
    g, spec = preset_spec("d16-c8")
    v = gr_from_tokens(g, make_ring("r1"), EXAMPLE5_V)
    return composite_code(v, spec)


def table1_ring_code() -> RingCode:
    """The length-16 self-dual code over f4u from the d8-sect7 preset."""
    g, spec = preset_spec("d8-sect7")
    v = gr_from_tokens(g, make_ring("f4u"), TABLE1_V)
    return build_pure_generator(v, spec)


def table1_binary(base: RingCode | None = None) -> BinaryCode:
    """The [64,32] binary image of the length-16 f4u code."""
    return code_binary_image(base if base is not None else table1_ring_code())


def table2_ring_code(base: RingCode | None = None) -> RingCode:
    """The length-34 self-dual f2u code: w-split image, then extension."""
    if base is None:
        base = table1_ring_code()
    psi = gray_image(base, "psi-f4u")
    ring = make_ring("f2u")
    ext = ExtensionSpec(ring.element(ring.parse(TABLE2_C)), vector_from_tokens(ring, TABLE2_X))
    return extend_code(psi, ext)


def table2_binary(ext: RingCode | None = None) -> BinaryCode:
    """The [68,34] binary image of the extended length-34 f2u code."""
    return code_binary_image(ext if ext is not None else table2_ring_code())


def table3_x_words() -> list[int]:
    """The 13 chain vectors: 34 given bits in coordinates 34..67, zeros before."""
    return [string_to_row(s, 34) << 34 for s in TABLE3_XS]


def _gamma_beta(code: BinaryCode) -> tuple[str, int | None, int | None, int]:
    profile = weight_counts(code, 14)
    cls = classify_enumerator(code.n, profile)
    return cls.family, cls.gamma, cls.beta, min_distance(code)


# ---------------------------------------------------------------------------
# Shared helpers
# ---------------------------------------------------------------------------


def _usage(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return 2


def _read_code_file(path: str) -> BinaryCode | RingCode:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    stripped = text.lstrip()
    if stripped.startswith("binary"):
        return read_binary_code_text(text)
    if stripped.startswith("ring"):
        return read_ring_code_text(text)
    raise ValueError(f"{path}: not a code file (expected a 'binary' or 'ring' header)")


def _resolve_group_and_spec(
    group_kind: str, spec_token: str
) -> tuple[FiniteGroup, CompositeSpec | None]:
    """Resolve --group/--spec into a group object and an optional layout.

    The layout's own group object is returned when a layout is used, so
    that elements built from it match the layout identity-wise.
    """
    requested = make_group(group_kind)
    token = spec_token.strip()
    if token.lower() in ("sigma", "none"):
        return requested, None
    if token.lower() in PRESET_NAMES:
        g, spec = preset_spec(token)
    elif os.path.exists(token):
        g, spec = parse_spec_file(token)
    else:
        raise ValueError(
            f"spec {spec_token!r} is not a preset ({', '.join(PRESET_NAMES)}), "
            "an existing layout file, or 'sigma'"
        )
    if g.name != requested.name or g.order != requested.order:
        raise ValueError(
            f"layout is over group {g.name!r} but --group says {requested.name!r}"
        )
    return g, spec


def _describe_binary(code: BinaryCode) -> str:
    parts = [f"[{code.n},{code.k}] binary code"]
    if 0 < code.k <= 24:
        parts.append(f"d={min_distance(code)}")
    parts.append("self-dual" if is_self_dual(code) else "not self-dual")
    return ", ".join(parts)


def _describe_ring(code: RingCode) -> str:
    parts = [f"length-{code.n} code over {code.ring.kind} ({code.k} generator rows)"]
    if code.ring.is_chain:
        k1, k2 = chain_ranks(code)
        q = code.ring.residue_size
        exp = k1 if code.ring.is_field else 2 * k1 + k2
        parts.append(f"|C| = {q}^{exp}")
        parts.append("self-dual" if ring_code_is_self_dual(code) else "not self-dual")
    else:
        orth = not gram_matrix(code.ring, code.rows).any()
        parts.append("self-orthogonal" if orth else "not self-orthogonal")
    return ", ".join(parts)


def _write_any(path: str, code: BinaryCode | RingCode) -> None:
    if isinstance(code, BinaryCode):
        write_binary_code(path, code)
    else:
        write_ring_code(path, code)


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def _cmd_build(args: argparse.Namespace) -> int:
    group, spec = _resolve_group_and_spec(args.group, args.spec)
    ring = make_ring(args.ring)
    v = gr_from_tokens(group, ring, args.v)
    if args.pure:
        code: BinaryCode | RingCode = build_pure_generator(v, spec)
    else:
        code = rowspace_code(v, spec)
    print(_describe_binary(code) if isinstance(code, BinaryCode) else _describe_ring(code))
    if args.out:
        _write_any(args.out, code)
        print(f"wrote {args.out}")
    return 0


def _cmd_selfdual(args: argparse.Namespace) -> int:
    if args.file:
        code = _read_code_file(args.file)
        if isinstance(code, BinaryCode):
            verdict = is_self_dual(code)
        else:
            verdict = ring_code_is_self_dual(code)
        print("self-dual" if verdict else "not self-dual")
        return 0 if verdict else 1
    if not (args.group and args.ring and args.spec and args.v):
        return _usage("selfdual needs either --file or all of --group/--ring/--spec/--v")
    group, spec = _resolve_group_and_spec(args.group, args.spec)
    ring = make_ring(args.ring)
    v = gr_from_tokens(group, ring, args.v)
    cond = check_selfdual_condition(v, spec)
    print(f"matrix criterion M M^T = I: {'yes' if cond else 'no'}")
    print(f"unitary unit: {'yes' if is_unitary_unit(v) else 'no'}")
    return 0 if cond else 1


def _cmd_gray(args: argparse.Namespace) -> int:
    code = _read_code_file(args.input)
    if isinstance(code, BinaryCode):
        return _usage("gray expects a ring code file (binary codes are already binary)")
    image = gray_image(code, args.map)
    print(_describe_binary(image) if isinstance(image, BinaryCode) else _describe_ring(image))
    if args.out:
        _write_any(args.out, image)
        print(f"wrote {args.out}")
    return 0


def _cmd_measure(args: argparse.Namespace) -> int:
    code = _read_code_file(args.file)
    if isinstance(code, RingCode):
        print(f"note: ring code file; measuring its binary image")
        code = code_binary_image(code)
    if code.k > _ENUM_BUDGET_K:
        return _usage(
            f"refusing full enumeration: dimension k={code.k} exceeds the "
            f"k <= {_ENUM_BUDGET_K} budget"
        )
    if code.k == 0:
        print(f"[{code.n},0] binary code (zero code)")
        return 0
    upto = args.upto if args.upto is not None else min(14, code.n)
    if not 0 <= upto <= code.n:
        return _usage(f"--upto must be in [0, {code.n}]")
    print(f"[{code.n},{code.k}] binary code, {'self-dual' if is_self_dual(code) else 'not self-dual'}")
    print(f"d = {min_distance(code)}")
    profile = weight_counts(code, upto)
    for w, count in enumerate(profile.counts):
        if count:
            print(f"A_{w} = {count}")
    if code.n in (64, 68) and upto >= 14:
        print(f"enumerator: {classify_enumerator(code.n, profile)}")
    return 0


def _cmd_extend(args: argparse.Namespace) -> int:
    code = _read_code_file(args.input)
    if isinstance(code, BinaryCode):
        return _usage("extend expects a ring code file (use ring f2 for binary inputs)")
    ring = code.ring
    ext = ExtensionSpec(ring.element(ring.parse(args.c)), vector_from_tokens(ring, args.x))
    out = extend_code(code, ext)
    print(_describe_ring(out))
    if args.out:
        write_ring_code(args.out, out)
        print(f"wrote {args.out}")
    return 0


def _cmd_neighbor(args: argparse.Namespace) -> int:
    code = _read_code_file(args.input)
    if not isinstance(code, BinaryCode):
        return _usage("neighbor expects a binary code file")
    x = string_to_row(args.x, code.n)
    out = neighbor(code, x)
    print(f"[{out.n},{out.k}] binary code, {'self-dual' if is_self_dual(out) else 'not self-dual'}")
    if args.out:
        write_binary_code(args.out, out)
        print(f"wrote {args.out}")
    return 0


def _cmd_chain(args: argparse.Namespace) -> int:
    code = _read_code_file(args.input)
    if not isinstance(code, BinaryCode):
        return _usage("chain expects a binary code file")
    with open(args.xs, "r", encoding="utf-8") as fh:
        lines = [ln.strip() for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]
    for i, line in enumerate(lines, start=1):
        x = string_to_row(line, code.n)
        try:
            code = neighbor(code, x)
        except ValueError as exc:
            return _usage(f"step {i}: {exc}")
        line_out = f"step {i}: [{code.n},{code.k}]"
        if args.classify:
            family, gamma, beta, d = _gamma_beta(code)
            line_out += f" d={d}"
            if family == "W68_2":
                line_out += f" ({gamma},{beta})"
            else:
                line_out += f" {family}" + (f" beta={beta}" if beta is not None else "")
        print(line_out)
        if args.out_prefix:
            path = f"{args.out_prefix}{i:02d}.txt"
            write_binary_code(path, code)
    return 0


def _cmd_search(args: argparse.Namespace) -> int:
    group, spec = _resolve_group_and_spec(args.group, args.spec)
    ring = make_ring(args.ring)
    hits = search_random(
        ring,
        group,
        spec,
        trials=args.trials,
        seed=args.seed,
        min_d=args.min_d,
        target_family=args.target_family,
    )
    if not hits:
        print("no codes found")
        return 0
    for hit in hits:
        line = (
            f"v = {gr_tokens(hit.v)} -> [{hit.code.n},{hit.code.k},{hit.d}]"
            f" A12={hit.a12} A14={hit.a14}"
        )
        if hit.family:
            line += f" {hit.family}"
        print(line)
    return 0


# -- reproduce targets -------------------------------------------------------


def _check_binary(code: BinaryCode, n: int, k: int, d: int, label: str = "") -> bool:
    prefix = f"{label}: " if label else ""
    got_d = min_distance(code) if code.k else None
    if (code.n, code.k, got_d) == (n, k, d) and is_self_dual(code):
        print(f"{prefix}[{n},{k},{d}] OK")
        return True
    print(
        f"{prefix}MISMATCH: expected self-dual [{n},{k},{d}], got "
        f"[{code.n},{code.k},{got_d}] self-dual={is_self_dual(code)}"
    )
    return False


def _repro_hamming() -> int:
    return 0 if _check_binary(hamming_code(), 8, 4, 4) else 1


def _repro_example5() -> int:
    rc = example5_ring_code()
    ok = ring_code_is_self_dual(rc)
    print("length-16 code over r1 self-dual: " + ("OK" if ok else "MISMATCH"))
    ok &= _check_binary(gray_image(rc, "phi-k"), 32, 16, 8)
    return 0 if ok else 1


def _repro_table1() -> int:
    code = table1_binary()
    ok = _check_binary(code, 64, 32, 12)
    profile = weight_counts(code, 14)
    cls = classify_enumerator(64, profile)
    if (profile.a(12), profile.a(14), cls.family, cls.beta) == (1312, 23040, "W64_2", 0):
        print("W64_2 beta=0 OK")
    else:
        ok = False
        print(
            f"MISMATCH: expected A12=1312 A14=23040 W64_2 beta=0, got "
            f"A12={profile.a(12)} A14={profile.a(14)} {cls}"
        )
    return 0 if ok else 1


def _repro_table2() -> int:
    code = table2_binary()
    ok = _check_binary(code, 68, 34, 12)
    profile = weight_counts(code, 14)
    cls = classify_enumerator(68, profile)
    if (profile.a(12), profile.a(14), cls.family, cls.gamma, cls.beta) == (
        854, 13112, "W68_2", 4, 103,
    ):
        print("W68_2 gamma=4 beta=103 OK")
    else:
        ok = False
        print(
            f"MISMATCH: expected A12=854 A14=13112 W68_2 gamma=4 beta=103, got "
            f"A12={profile.a(12)} A14={profile.a(14)} {cls}"
        )
    return 0 if ok else 1


def _repro_table3() -> int:
    code = table2_binary()
    ok_all = True
    for i, (x, expected) in enumerate(zip(table3_x_words(), TABLE3_EXPECTED), start=1):
        code = neighbor(code, x)
        family, gamma, beta, d = _gamma_beta(code)
        if (family, gamma, beta, d) == ("W68_2", *expected, 12):
            print(f"step {i}: ({expected[0]},{expected[1]}) OK")
        else:
            ok_all = False
            print(
                f"step {i}: MISMATCH expected ({expected[0]},{expected[1]}), "
                f"got {family} gamma={gamma} beta={beta} d={d}"
            )
    return 0 if ok_all else 1


def _repro_table4() -> int:
    chain_codes = [table2_binary()]
    for x in table3_x_words():
        chain_codes.append(neighbor(chain_codes[-1], x))
    ok_all = True
    for idx, bits, expected in TABLE4_CHECKS:
        nb = neighbor(chain_codes[idx], string_to_row(bits, 34) << 34)
        family, gamma, beta, d = _gamma_beta(nb)
        if (family, gamma, beta, d) == ("W68_2", *expected, 12):
            print(f"N({idx}) -> ({expected[0]},{expected[1]}) OK")
        else:
            ok_all = False
            print(
                f"N({idx}): MISMATCH expected ({expected[0]},{expected[1]}), "
                f"got {family} gamma={gamma} beta={beta} d={d}"
            )
    return 0 if ok_all else 1


def _repro_example6() -> int:
    g = make_group("d16")
    ring = make_ring("f2")
    ok_all = True
    for name, tokens in EXAMPLE6_VS:
        v = gr_from_tokens(g, ring, tokens)
        img = code_binary_image(build_pure_generator(v, None))
        ok_all &= _check_binary(img, 32, 16, 8, label=name)
    return 0 if ok_all else 1


def _repro_example7() -> int:
    g, spec = preset_spec("d16-ex7")
    v = gr_from_tokens(g, make_ring("f2"), EXAMPLE7_V)
    img = code_binary_image(build_pure_generator(v, spec))
    return 0 if _check_binary(img, 32, 16, 8) else 1


_REPRO_DISPATCH = {
    "hamming-q8": _repro_hamming,
    "example5-d16": _repro_example5,
    "table1-64": _repro_table1,
    "table2-68": _repro_table2,
    "table3-chain": _repro_table3,
    "table4-neighbors": _repro_table4,
    "example6-sigma": _repro_example6,
    "example7-omega": _repro_example7,
}


def _cmd_reproduce(args: argparse.Namespace) -> int:
    return _REPRO_DISPATCH[args.target]()


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="compcode",
        description="Group-ring matrix constructions of self-dual codes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    spec_help = f"layout preset ({', '.join(PRESET_NAMES)}), a layout file, or 'sigma'"

    p = sub.add_parser("build", help="build a code from a group-ring element")
    p.add_argument("--group", required=True, help="group kind, e.g. q8, d8, d16")
    p.add_argument("--ring", required=True, help="ring kind, e.g. f2, f4u, r1")
    p.add_argument("--spec", required=True, help=spec_help)
    p.add_argument("--v", required=True, help="comma-separated coefficient tokens")
    p.add_argument("--pure", action="store_true",
                   help="build the [I | M] generator instead of the bare row space")
    p.add_argument("-o", "--out", help="write the code to this file")
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("selfdual", help="check the self-duality criterion")
    p.add_argument("--file", help="check a code file instead of an element")
    p.add_argument("--group")
    p.add_argument("--ring")
    p.add_argument("--spec", help=spec_help)
    p.add_argument("--v")
    p.set_defaults(func=_cmd_selfdual)

    p = sub.add_parser("gray", help="map a ring code file through a Gray map")
    p.add_argument("input", help="ring code file")
    p.add_argument("--map", default="binary", choices=GRAY_MAP_NAMES)
    p.add_argument("-o", "--out", help="write the image to this file")
    p.set_defaults(func=_cmd_gray)

    p = sub.add_parser("measure", help="distance, weight counts, classification")
    p.add_argument("file", help="code file (ring codes are mapped to binary first)")
    p.add_argument("--upto", type=int, default=None, help="largest tabulated weight")
    p.set_defaults(func=_cmd_measure)

    p = sub.add_parser("extend", help="two-column self-dual extension")
    p.add_argument("input", help="ring code file")
    p.add_argument("--c", required=True, help="unit token with c^2 = 1")
    p.add_argument("--x", required=True, help="comma-separated vector with <X,X> = 1")
    p.add_argument("-o", "--out", help="write the extended code to this file")
    p.set_defaults(func=_cmd_extend)

    p = sub.add_parser("neighbor", help="self-dual neighbor through a vector")
    p.add_argument("input", help="binary code file")
    p.add_argument("--x", required=True, help="bitstring of length n")
    p.add_argument("-o", "--out", help="write the neighbor to this file")
    p.set_defaults(func=_cmd_neighbor)

    p = sub.add_parser("chain", help="iterated neighbors from a vector file")
    p.add_argument("input", help="binary code file")
    p.add_argument("--xs", required=True, help="file with one bitstring per line")
    p.add_argument("--classify", action="store_true",
                   help="report d and the enumerator parameters per step (slow)")
    p.add_argument("--out-prefix", help="write step i to <prefix><i>.txt")
    p.set_defaults(func=_cmd_chain)

    p = sub.add_parser("reproduce", help="re-run an embedded reproduction target")
    p.add_argument("target", choices=REPRO_TARGETS)
    p.set_defaults(func=_cmd_reproduce)

    p = sub.add_parser("search", help="seeded random search for self-dual codes")
    p.add_argument("--group", required=True)
    p.add_argument("--ring", required=True)
    p.add_argument("--spec", required=True, help=spec_help)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--min-d", type=int, default=None, dest="min_d")
    p.add_argument("--target-family", default=None, dest="target_family")
    p.set_defaults(func=_cmd_search)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        return _usage(str(exc))
    except FileNotFoundError as exc:
        return _usage(f"{exc.filename}: file not found")


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
