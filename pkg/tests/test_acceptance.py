"""Acceptance suite: one test per criterion, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.
Everything here is exact (zero tolerance) except criterion 9, whose floating
brute-force oracle is compared per coefficient at 1e-6 relative to magnitude.
"""

from __future__ import annotations

import random
from contextlib import contextmanager
from fractions import Fraction
from itertools import combinations
from itertools import product as iproduct

import pytest

from conftest import (
    DATA_DIR,
    ELLIPTIC_FIELDS,
    admissible_traces,
    coeffs_close,
    corpus_varieties,
    elliptic_l1,
    elliptic_zeta,
    float_roots,
    harvest_orbits,
    isqrt_exact,
    poly_from_float_roots,
)
from weilmot import (
    NotWeil,
    PrimePower,
    TateStructure,
    WeilOrbit,
    brauer_block,
    compute_A,
    coniveau_sub,
    curve_end_algebra,
    exterior_charpoly,
    factor_rational_poly,
    honda_tate_dimension,
    hom_from_unit,
    ingest_isogeny_file,
    is_effective,
    k_group_dim,
    kunneth_idempotents,
    motive_of,
    mth_root_factors,
    newton_polygon,
    pole_order,
    rank_from_algebra,
    tate_twist_orbit,
    tensor_charpoly,
    twisted_weight_part,
    verify_weil,
    weil_restriction_charpoly,
    witt_vector_rank,
    zeta_from_curve,
    zeta_product,
)
from weilmot.poly import RationalPolynomial, poly


@contextmanager
def criterion(number: int, label: str):
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE criterion {number}: FAIL - {label}")
        raise
    print(f"ACCEPTANCE criterion {number}: PASS - {label}")


# --------------------------------------------------------------- criterion 1

def test_criterion_1_deuring_waterhouse_golden_suite():
    with criterion(1, "curve endomorphism algebras match Deuring/Waterhouse"):
        for q in ELLIPTIC_FIELDS:
            pp = PrimePower.from_q(q)
            p = pp.p
            root = isqrt_exact(q)
            for a in admissible_traces(q):
                alg = curve_end_algebra(elliptic_l1(q, a), pp)
                assert rank_from_algebra(alg) == 2, (q, a)
                if a % p != 0:
                    # ordinary: commutative imaginary quadratic field
                    (b,) = alg.blocks
                    assert b.orbit_size == 2 and b.index_e == 1, (q, a)
                    assert b.real_places == 0 and b.matrix_size_r == 1
                    assert b.center_poly == poly((q, -a, 1))
                if a == 0 and pp.a == 1:
                    # a = 0 over a prime field: commutative quadratic field
                    (b,) = alg.blocks
                    assert b.orbit_size == 2 and b.index_e == 1, q
                if root is not None and abs(a) == 2 * root and pp.a == 2:
                    # rational Frobenius over q = p^2: quaternion at {p, oo}
                    (b,) = alg.blocks
                    assert b.orbit_size == 1 and b.index_e == 2, (q, a)
                    assert b.real_places == 1 and b.real_invariant == Fraction(1, 2)
                    nonzero = [inv for _, inv in b.finite_invariants if inv != 0]
                    assert nonzero == [Fraction(1, 2)], (q, a)
                    assert b.matrix_size_r == 1
                # Honda-Tate: every irreducible factor is an elliptic curve
                c1 = zeta_from_curve(elliptic_l1(q, a), pp).charpoly(1)
                for factor, _ in factor_rational_poly(c1).factors:
                    orbit = WeilOrbit(min_poly=factor, base=pp, weight=1)
                    assert honda_tate_dimension(orbit) == 1, (q, a)


# --------------------------------------------------------------- criterion 2

def test_criterion_2_supersingular_square_zero_algebra():
    with criterion(2, "supersingular abelian surface squares give A(X) = 0"):
        for p in (2, 3, 5):
            qp2 = PrimePower(p, 2)
            e = zeta_from_curve(poly((1, -2 * p, p * p)), qp2)
            square = zeta_product(e, e)
            alg = compute_A(square)
            assert alg.is_zero and alg.dimension_q == 0, p
            assert witt_vector_rank(square) == 0, p


# --------------------------------------------------------------- criterion 3

def _idempotent_congruences_hold(z) -> bool:
    idems = kunneth_idempotents(z)
    transforms = [z.charpoly(i) for i in range(2 * z.dim_n + 1)]
    modulus = RationalPolynomial.one()
    for c in transforms:
        if not c.is_constant:
            modulus = modulus * c
    total = RationalPolynomial.zero()
    for i, p_i in enumerate(idems):
        total = total + p_i
        for j, c_j in enumerate(transforms):
            if c_j.is_constant:
                continue
            expect = RationalPolynomial.one() if i == j else RationalPolynomial.zero()
            if (p_i - expect) % c_j != RationalPolynomial.zero():
                return False
        for j, p_j in enumerate(idems):
            prod = (p_i * p_j) % modulus
            expect = p_i % modulus if i == j else RationalPolynomial.zero()
            if prod != expect:
                return False
    return total % modulus == RationalPolynomial.one() % modulus


def test_criterion_3_kunneth_idempotents_randomized():
    with criterion(3, "Kunneth idempotent congruences on 20 random products"):
        rng = random.Random(0xC0FFEE)
        done = 0
        while done < 20:
            q = rng.choice([2, 3, 4, 5])
            traces = admissible_traces(q)
            a1, a2 = rng.choice(traces), rng.choice(traces)
            z = zeta_product(elliptic_zeta(q, a1), elliptic_zeta(q, a2))
            assert _idempotent_congruences_hold(z), (q, a1, a2)
            done += 1


# --------------------------------------------------------------- criterion 4

def test_criterion_4_pole_order_triangle():
    with criterion(4, "pole order = Hom(1, twist) = K-group dimension"):
        for name, z in corpus_varieties():
            for r in range(z.dim_n + 1):
                po = pole_order(z, r)
                assert po == hom_from_unit(twisted_weight_part(z, r)), (name, r)
                assert po == k_group_dim(z, 0, r), (name, r)
        ee = zeta_product(elliptic_zeta(2, 1), elliptic_zeta(2, 1))
        assert pole_order(ee, 1) == 4


# --------------------------------------------------------------- criterion 5

def test_criterion_5_brauer_reciprocity_on_ingested_corpus():
    with criterion(5, "Brauer reciprocity on the 100-record isogeny corpus"):
        docs, diags = ingest_isogeny_file(str(DATA_DIR / "isogeny_corpus_g1.jsonl"))
        assert len(docs) >= 100 and not diags
        blocks = 0
        for doc in docs:
            z = doc.to_zeta()
            for orbit, _ in motive_of(z).part(1).parts:
                block = brauer_block(orbit, n_odd=True)
                assert block.invariant_sum.denominator == 1, doc.label
                blocks += 1
        assert blocks >= 100


# --------------------------------------------------------------- criterion 6

def test_criterion_6_coniveau_slope_bridge():
    with criterion(6, "coniveau membership = min-slope bound + brute force"):
        orbits = [o for o in harvest_orbits() if is_effective(o)]
        assert orbits
        for o in orbits:
            polygon = newton_polygon(o.min_poly, o.base)
            v = TateStructure(o.base, ((o, 1),))
            for r in range(0, 5):
                member = coniveau_sub(v, r).dimension > 0
                assert member == (polygon.min_slope >= r), (o.min_poly, r)
        by_base: dict = {}
        for o in orbits:
            by_base.setdefault(o.base, []).append(o)
        for base, group in by_base.items():
            chosen = group[:4]
            v = TateStructure(
                base, tuple((o, 1 + i % 2) for i, o in enumerate(chosen))
            )
            for r in range(0, 4):
                sub = coniveau_sub(v, r)
                best_dim, best = -1, None
                for mults in iproduct(*[range(m + 1) for _, m in v.parts]):
                    parts = tuple(
                        (o, k) for (o, _), k in zip(v.parts, mults) if k > 0
                    )
                    cand = TateStructure(base, parts)
                    if all(is_effective(tate_twist_orbit(o, r)) for o, _ in cand.parts):
                        if cand.dimension > best_dim:
                            best_dim, best = cand.dimension, cand
                assert sub == best and sub.dimension == best_dim, (base, r)


# --------------------------------------------------------------- criterion 7

ADVERSARIAL = [
    # (monic polynomial, q, expected reason)
    (poly((-3, 1)), 5, "constant-valuation"),       # |3| is no power of sqrt(5)
    (poly((6, -1, 1)), 2, "constant-valuation"),    # constant term 6 = 2 * 3
    (poly((2, -3, 1)), 2, "root-bound"),            # real roots 1, 2 off circle
    (poly((5, -5, 1)), 5, "root-bound"),            # real roots off the circle
    (poly((Fraction(1, 3), 1)), 2, "denominator"),  # non-p denominator
    (poly((4, 0, -4, -4, 1)), 2, "not-totally-real"),  # frozen complex-beta case
]


def test_criterion_7_weil_verification_soundness():
    with criterion(7, "verify_weil accepts the corpus, rejects adversaries"):
        docs, _ = ingest_isogeny_file(str(DATA_DIR / "isogeny_corpus_g1.jsonl"))
        for doc in docs:
            z = doc.to_zeta()
            for i, c in enumerate(z.charpolys()):
                if c.is_constant:
                    continue
                for factor, _ in factor_rational_poly(c).factors:
                    assert verify_weil(factor, z.base) == i, (doc.label, i)
        for p_adv, q, reason in ADVERSARIAL:
            with pytest.raises(NotWeil) as exc:
                verify_weil(p_adv, PrimePower.from_q(q))
            assert exc.value.reason == reason, (p_adv, reason)


# --------------------------------------------------------------- criterion 8

def test_criterion_8_restriction_and_roots_chain():
    with criterion(8, "restriction preserves slopes; m-th roots reconstruct"):
        extended = corpus_varieties() + [
            ("E/F9", elliptic_zeta(9, 3)),
            ("E/F16", elliptic_zeta(16, 4)),
            ("E/F16-rational", elliptic_zeta(16, 8)),
        ]
        orbits = harvest_orbits(extended)
        # restriction: orbits over proper prime powers q = q0^m
        restricted_cases = 0
        for o in orbits:
            for m in (2, 3, 4):
                if o.base.a % m != 0 or not o.min_poly.is_integral():
                    continue
                base = o.base.root(m)
                restricted = weil_restriction_charpoly(o.min_poly, o.base, m)
                assert restricted.degree == m * o.degree
                before = newton_polygon(o.min_poly, o.base).segments
                after = newton_polygon(restricted, base).segments
                assert after == tuple((s, m * mult) for s, mult in before), o.min_poly
                restricted_cases += 1
        assert restricted_cases >= 4
        # m-th roots: all effective weight-m orbits with 1 <= m <= 4
        root_cases = 0
        for o in orbits:
            if not (1 <= o.weight <= 4) or not is_effective(o):
                continue
            factors = mth_root_factors(o.min_poly, o.base, o.weight)
            product = RationalPolynomial.one()
            for f in factors:
                assert f.weight == 1, o.min_poly
                product = product * f.min_poly
            assert product == o.min_poly.substitute_power(o.weight), o.min_poly
            root_cases += 1
        assert root_cases >= 8


# --------------------------------------------------------------- criterion 9

def test_criterion_9_tensor_exterior_float_oracle():
    with criterion(9, "tensor/exterior vs float brute force, 500 trials"):
        rng = random.Random(0x7E57)

        def rand_monic():
            d = rng.randint(1, 6)
            return poly([rng.randint(-3, 3) for _ in range(d)] + [1])

        for _ in range(250):
            a, b = rand_monic(), rand_monic()
            got = tensor_charpoly(a, b)
            expect = poly_from_float_roots(
                [x * y for x in float_roots(a) for y in float_roots(b)]
            )
            assert coeffs_close(got, expect, tol=1e-6), (a.coeffs, b.coeffs)
        for _ in range(250):
            a = rand_monic()
            k = rng.randint(1, a.degree)
            got = exterior_charpoly(a, k)
            prods = []
            for combo in combinations(float_roots(a), k):
                z = complex(1)
                for c in combo:
                    z *= c
                prods.append(z)
            expect = poly_from_float_roots(prods)
            assert coeffs_close(got, expect, tol=1e-6), (a.coeffs, k)
        # documented exact symmetric-function examples
        assert tensor_charpoly(poly((2, -1, 1)), poly((-2, 1))) == poly((8, -2, 1))
        assert tensor_charpoly(poly((-2, 1)), poly((-3, 1))) == poly((-6, 1))
        cubic = poly((2, -1, 1)) * poly((-1, 1))
        assert exterior_charpoly(cubic, 2) == poly((-2, 1)) * poly((2, -1, 1))
        assert exterior_charpoly(poly((2, -3, 1)), 2) == poly((-2, 1))


# -------------------------------------------------------------- criterion 10

def test_criterion_10_rank_formula():
    with criterion(10, "rank formula matches the kept weight-n dimension"):
        for name, z in corpus_varieties():
            alg = compute_A(z)
            part = motive_of(z).part(z.dim_n)
            kept_dim = sum(
                mult * orbit.degree
                for orbit, mult in part.parts
                if newton_polygon(orbit.min_poly, z.base).min_slope < 1
            )
            assert rank_from_algebra(alg) == kept_dim, name
        for q in ELLIPTIC_FIELDS:
            pp = PrimePower.from_q(q)
            for a in admissible_traces(q):
                alg = curve_end_algebra(elliptic_l1(q, a), pp)
                assert rank_from_algebra(alg) == 2, (q, a)  # deg P_1 = 2g = 2
