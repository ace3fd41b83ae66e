#!/usr/bin/env python3
"""Regenerate the JSON-lines isogeny corpus under data/.

Deterministic: enumerates the admissible elliptic-curve traces over small
fields (Waterhouse's classification), plus a handful of abelian-surface
records built as products, and a sample file with deliberately malformed
lines for diagnostics testing.  Files are written in canonical record form
so serialize(parse(line)) is byte-identical.
"""

from __future__ import annotations

import math
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from weilmot.formats import IsogenyRecord, serialize_isogeny_record  # noqa: E402
from weilmot.poly import RationalPolynomial  # noqa: E402
from weilmot.primes import PrimePower  # noqa: E402

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"

PRIME_POWERS = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]


def isqrt_exact(n: int) -> int | None:
    r = math.isqrt(n)
    return r if r * r == n else None


def admissible_traces(q: int) -> list[int]:
    """Waterhouse: traces a of elliptic isogeny classes over F_q."""
    pp = PrimePower.from_q(q)
    p, n = pp.p, pp.a
    bound = math.isqrt(4 * q)
    out = []
    for a in range(-bound, bound + 1):
        if a * a > 4 * q:
            continue
        if a % p != 0:
            out.append(a)
            continue
        root = isqrt_exact(q)
        if n % 2 == 0:
            if a in (2 * root, -2 * root):
                out.append(a)
            elif a in (root, -root) and p % 3 != 1:
                out.append(a)
            elif a == 0 and p % 4 != 1:
                out.append(a)
        else:
            if a == 0:
                out.append(a)
            elif p in (2, 3) and abs(a) == p ** ((n + 1) // 2):
                out.append(a)
    return sorted(out)


def curve_record(q: int, a: int) -> IsogenyRecord:
    sign = "m" if a < 0 else "a"
    return IsogenyRecord(
        label=f"1.{q}.{sign}{abs(a)}", q=q, g=1, coeffs=(1, -a, q)
    )


def surface_record(q: int, a1: int, a2: int, idx: int) -> IsogenyRecord:
    l1 = RationalPolynomial((1, -a1, q)) * RationalPolynomial((1, -a2, q))
    return IsogenyRecord(
        label=f"2.{q}.prod{idx}", q=q, g=2,
        coeffs=tuple(int(c) for c in l1.coeffs),
    )


def simple_surface_record(q: int, a: int, b: int) -> IsogenyRecord:
    # L-polynomial 1 + aT + bT^2 + qaT^3 + q^2 T^4 of a simple abelian surface
    sign_a = "m" if a < 0 else "a"
    sign_b = "m" if b < 0 else "b"
    return IsogenyRecord(
        label=f"2.{q}.s{sign_a}{abs(a)}_{sign_b}{abs(b)}", q=q, g=2,
        coeffs=(1, a, b, q * a, q * q),
    )


def main() -> None:
    DATA.mkdir(exist_ok=True)

    g1_lines = []
    for q in PRIME_POWERS:
        for a in admissible_traces(q):
            g1_lines.append(serialize_isogeny_record(curve_record(q, a)))
    (DATA / "isogeny_corpus_g1.jsonl").write_text("\n".join(g1_lines) + "\n")

    mixed_lines = []
    mixed_lines.append(serialize_isogeny_record(curve_record(2, 1)))
    mixed_lines.append(serialize_isogeny_record(curve_record(3, -1)))
    mixed_lines.append(serialize_isogeny_record(curve_record(5, 0)))
    idx = 0
    for q, pairs in ((2, [(1, -1), (0, 2), (1, 1)]),
                     (3, [(1, -2), (0, 3)]),
                     (4, [(4, 4), (2, -2)]),
                     (9, [(6, 6), (3, 0)])):
        for a1, a2 in pairs:
            idx += 1
            mixed_lines.append(serialize_isogeny_record(surface_record(q, a1, a2, idx)))
    for q, a, b in ((2, -2, 3), (2, -1, 1), (2, 1, 1), (3, -1, 0),
                    (3, 1, -1), (5, -2, 4), (5, 1, 2)):
        mixed_lines.append(serialize_isogeny_record(simple_surface_record(q, a, b)))
    (DATA / "isogeny_sample_mixed.jsonl").write_text("\n".join(mixed_lines) + "\n")

    bad_lines = [
        serialize_isogeny_record(curve_record(2, -1)),
        '{"label": "broken-coeffs", "q": 2, "g": 1, "coeffs": [1, -1]}',
        serialize_isogeny_record(curve_record(3, 2)),
        "this line is not json",
        '{"label": "bad-constant", "q": 2, "g": 1, "coeffs": [2, -1, 2]}',
        serialize_isogeny_record(curve_record(5, 2)),
    ]
    (DATA / "isogeny_sample_bad.jsonl").write_text("\n".join(bad_lines) + "\n")

    print(f"wrote {len(g1_lines)} g=1 records, {len(mixed_lines)} mixed, "
          f"{len(bad_lines)} bad-sample lines")


if __name__ == "__main__":
    main()
