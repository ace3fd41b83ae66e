"""Polynomial arithmetic over F_p and Hensel lifting over Z/p^k.

Internal support for rational factorization (Zassenhaus) and for p-adic
place analysis.  Polynomials are dense ``list[int]`` ascending, reduced
mod p (or mod p^k for lifted objects), with no trailing zeros.

Equal-degree splitting uses Cantor-Zassenhaus with a seeded generator, so
factorizations are deterministic across runs.
"""

from __future__ import annotations

import random


def trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def mp_reduce(f: list[int], m: int) -> list[int]:
    return trim([c % m for c in f])


def mp_degree(f: list[int]) -> int:
    return len(f) - 1


def mp_monic(f: list[int], p: int) -> list[int]:
    if not f or f[-1] == 1:
        return list(f)
    inv = pow(f[-1], -1, p)
    return [c * inv % p for c in f]


def mp_add(f: list[int], g: list[int], m: int) -> list[int]:
    n = max(len(f), len(g))
    return trim([((f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0)) % m
                 for i in range(n)])


def mp_sub(f: list[int], g: list[int], m: int) -> list[int]:
    n = max(len(f), len(g))
    return trim([((f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0)) % m
                 for i in range(n)])


def mp_mul(f: list[int], g: list[int], m: int) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            out[i + j] = (out[i + j] + a * b) % m
    return trim(out)


def mp_divmod(f: list[int], g: list[int], p: int) -> tuple[list[int], list[int]]:
    """Division over F_p (g's leading coefficient is inverted mod p)."""
    if not g:
        raise ZeroDivisionError("mod-p division by zero polynomial")
    f = [c % p for c in f]
    dg = len(g) - 1
    inv = pow(g[-1], -1, p)
    q = [0] * max(len(f) - dg, 0)
    while len(f) - 1 >= dg and f:
        if f[-1] == 0:
            f.pop()
            continue
        k = len(f) - 1 - dg
        factor = f[-1] * inv % p
        q[k] = factor
        for i in range(dg + 1):
            f[k + i] = (f[k + i] - factor * g[i]) % p
        f.pop()
    return trim(q), trim(f)


def mp_divmod_monic(f: list[int], g: list[int], m: int) -> tuple[list[int], list[int]]:
    """Division by a monic g over Z/m (no leading-coefficient inversion)."""
    f = [c % m for c in f]
    dg = len(g) - 1
    q = [0] * max(len(f) - dg, 0)
    while len(f) - 1 >= dg and f:
        if f[-1] == 0:
            f.pop()
            continue
        k = len(f) - 1 - dg
        factor = f[-1]
        q[k] = factor
        for i in range(dg + 1):
            f[k + i] = (f[k + i] - factor * g[i]) % m
        f.pop()
    return trim(q), trim(f)


def mp_mod(f: list[int], g: list[int], p: int) -> list[int]:
    return mp_divmod(f, g, p)[1]


def mp_gcd(f: list[int], g: list[int], p: int) -> list[int]:
    a, b = [c % p for c in f], [c % p for c in g]
    trim(a), trim(b)
    while b:
        a, b = b, mp_mod(a, b, p)
    return mp_monic(a, p)


def mp_xgcd(f: list[int], g: list[int], p: int):
    """Returns (gcd, u, v), gcd monic, with u*f + v*g = gcd (mod p)."""
    a, b = trim([c % p for c in f]), trim([c % p for c in g])
    u0, v0 = [1], []
    u1, v1 = [], [1]
    while b:
        q, r = mp_divmod(a, b, p)
        a, b = b, r
        u0, u1 = u1, mp_sub(u0, mp_mul(q, u1, p), p)
        v0, v1 = v1, mp_sub(v0, mp_mul(q, v1, p), p)
    if not a:
        return a, u0, v0
    inv = pow(a[-1], -1, p)
    return (mp_monic(a, p),
            trim([c * inv % p for c in u0]),
            trim([c * inv % p for c in v0]))


def mp_pow_mod(base: list[int], e: int, mod: list[int], p: int) -> list[int]:
    result = [1]
    base = mp_mod(base, mod, p)
    while e:
        if e & 1:
            result = mp_mod(mp_mul(result, base, p), mod, p)
        base = mp_mod(mp_mul(base, base, p), mod, p)
        e >>= 1
    return result


def mp_derivative(f: list[int], p: int) -> list[int]:
    return trim([i * f[i] % p for i in range(1, len(f))])


def mp_is_squarefree(f: list[int], p: int) -> bool:
    d = mp_derivative(f, p)
    if not d:
        return mp_degree(f) <= 0
    return mp_degree(mp_gcd(f, d, p)) == 0


# ------------------------------------------------------------- factorization

def _ddf(f: list[int], p: int) -> list[tuple[list[int], int]]:
    """Distinct-degree factorization of squarefree monic f: [(block, d), ...]."""
    out = []
    x = [0, 1]
    h = list(x)
    rest = list(f)
    d = 0
    while mp_degree(rest) >= 2 * (d + 1):
        d += 1
        h = mp_pow_mod(h, p, rest, p)
        g = mp_gcd(mp_sub(h, x, p), rest, p)
        if mp_degree(g) > 0:
            out.append((g, d))
            rest, _ = mp_divmod(rest, g, p)
            h = mp_mod(h, rest, p)
    if mp_degree(rest) > 0:
        out.append((rest, mp_degree(rest)))
    return out


def _edf(f: list[int], d: int, p: int, rng: random.Random) -> list[list[int]]:
    """Equal-degree splitting: f squarefree monic with all factors of degree d."""
    n = mp_degree(f)
    if n == d:
        return [f]
    while True:
        a = trim([rng.randrange(p) for _ in range(n)])
        if mp_degree(a) < 1:
            continue
        g = mp_gcd(a, f, p)
        if not 0 < mp_degree(g) < n:
            if p == 2:
                t = list(a)
                acc = list(a)
                for _ in range(d - 1):
                    t = mp_mod(mp_mul(t, t, p), f, p)
                    acc = mp_add(acc, t, p)
                g = mp_gcd(acc, f, p)
            else:
                b = mp_pow_mod(a, (p ** d - 1) // 2, f, p)
                g = mp_gcd(mp_sub(b, [1], p), f, p)
        if 0 < mp_degree(g) < n:
            rest, _ = mp_divmod(f, g, p)
            return _edf(g, d, p, rng) + _edf(rest, d, p, rng)


def mp_factor_squarefree(f: list[int], p: int) -> list[list[int]]:
    """Irreducible monic factors of a squarefree monic f over F_p, sorted."""
    if mp_degree(f) <= 0:
        return []
    rng = random.Random(0x5EED ^ (p * 1048583) ^ len(f))
    factors: list[list[int]] = []
    for block, d in _ddf(f, p):
        factors.extend(_edf(block, d, p, rng))
    factors.sort(key=lambda g: (len(g), tuple(reversed(g))))
    return factors


def mp_coprime_parts(f: list[int], p: int) -> list[list[int]]:
    """Pairwise-coprime monic parts g_i^(m_i) of f mod p, sorted.

    The parts multiply to the monic reduction of f and are exactly the
    maximal prime-power factors, so they Hensel-lift independently.
    """
    f = mp_monic(f, p)
    # distinct irreducible factors via radical extraction
    g = list(f)
    distinct: list[list[int]] = []
    while mp_degree(g) > 0:
        d = mp_derivative(g, p)
        if not d:
            # g(T) = h(T^p) = h(T)^p over the prime field (a^p = a)
            g = trim([g[i] for i in range(0, len(g), p)])
            continue
        w = mp_gcd(g, d, p)
        sqf, _ = mp_divmod(g, w, p)
        for irr in mp_factor_squarefree(sqf, p):
            if irr not in distinct:
                distinct.append(irr)
        g = w
    distinct.sort(key=lambda h: (len(h), tuple(reversed(h))))
    parts = []
    for irr in distinct:
        part = [1]
        h = f
        while True:
            q, r = mp_divmod(h, irr, p)
            if r:
                break
            h = q
            part = mp_mul(part, irr, p)
        parts.append(part)
    return parts


# ------------------------------------------------------------ Hensel lifting

def symmetric(f: list[int], m: int) -> list[int]:
    """Symmetric (balanced) representatives in (-m/2, m/2]."""
    out = []
    for c in f:
        c %= m
        out.append(c - m if 2 * c > m else c)
    return out


def hensel_step(f: list[int], g, h, s, t, m: int):
    """One quadratic Hensel step: from mod m to mod m^2.

    Requires f = g*h (mod m), s*g + t*h = 1 (mod m), g and h monic, f monic
    with deg f = deg g + deg h.  Returns (g*, h*, s*, t*) satisfying the same
    relations mod m^2 with g* = g, h* = h (mod m).
    """
    m2 = m * m
    e = mp_sub(mp_reduce(f, m2), mp_mul(g, h, m2), m2)
    q, r = mp_divmod_monic(mp_mul(s, e, m2), h, m2)
    g_star = mp_add(g, mp_add(mp_mul(t, e, m2), mp_mul(q, g, m2), m2), m2)
    h_star = mp_add(h, r, m2)
    b = mp_sub(mp_add(mp_mul(s, g_star, m2), mp_mul(t, h_star, m2), m2), [1], m2)
    c, d = mp_divmod_monic(mp_mul(s, b, m2), h_star, m2)
    s_star = mp_sub(s, d, m2)
    t_star = mp_sub(t, mp_add(mp_mul(t, b, m2), mp_mul(c, g_star, m2), m2), m2)
    return g_star, h_star, s_star, t_star


def hensel_lift_pair(f: list[int], g: list[int], h: list[int], p: int, k: int):
    """Lift the coprime factorization f = g*h (mod p) to mod p^(2^ceil).

    f monic integer polynomial; g, h monic mod p and coprime.  Returns the
    lifted (g, h) reduced mod p^k (the internal lift may overshoot to the
    next power of two, which is harmless).
    """
    _, s, t = mp_xgcd(g, h, p)
    m = p
    while m < p ** k:
        g, h, s, t = hensel_step(f, g, h, s, t, m)
        m = m * m
    return mp_reduce(g, p ** k), mp_reduce(h, p ** k)


def hensel_lift_many(f: list[int], factors: list[list[int]], p: int, k: int) -> list[list[int]]:
    """Lift a pairwise-coprime monic factorization of f mod p to mod p^k.

    f monic with integer coefficients, f = prod(factors) (mod p).  Uses a
    binary tree of two-factor lifts.
    """
    if len(factors) == 1:
        return [mp_reduce(f, p ** k)]
    mid = len(factors) // 2
    left, right = factors[:mid], factors[mid:]
    g = [1]
    for fac in left:
        g = mp_mul(g, fac, p)
    h = [1]
    for fac in right:
        h = mp_mul(h, fac, p)
    g_lift, h_lift = hensel_lift_pair(f, g, h, p, k)
    return (hensel_lift_many(g_lift, left, p, k)
            + hensel_lift_many(h_lift, right, p, k))
