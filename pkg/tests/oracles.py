"""Independent brute-force oracles used by the tests.

Deliberately naive re-implementations that share no code with the package:
polynomial trial division for irreducibility and Moebius-free counting by
exhaustive scan.  Slow is fine; these only run at desk scale.
"""

import itertools


def poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return out


def poly_divides(g, f, p):
    """Does monic g divide f over GF(p)?  Synthetic long division."""
    rem = list(f)
    while len(rem) >= len(g) and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) < len(g):
            break
        c = rem[-1]
        shift = len(rem) - len(g)
        for i, y in enumerate(g):
            rem[i + shift] = (rem[i + shift] - c * y) % p
    return not any(rem)


def monic_polys(p, degree):
    for lower in itertools.product(range(p), repeat=degree):
        yield list(lower) + [1]


def is_irreducible_naive(f, p):
    """No monic divisor of degree between 1 and deg(f)/2."""
    d = len(f) - 1
    if d < 1:
        return False
    for gd in range(1, d // 2 + 1):
        for g in monic_polys(p, gd):
            if poly_divides(g, f, p):
                return False
    return True


def irreducible_scan(p, d):
    """Count monic irreducibles of degree d over GF(p) by full scan."""
    return sum(1 for f in monic_polys(p, d) if is_irreducible_naive(f, p))


def first_irreducible_scan(p, d):
    """First irreducible in coefficient counting order (constant fastest)."""
    for v in range(p**d):
        digits = []
        t = v
        for _ in range(d):
            digits.append(t % p)
            t //= p
        f = digits + [1]
        if is_irreducible_naive(f, p):
            return tuple(f)
    raise AssertionError("no irreducible found")


def naive_degree(ctx, a):
    """Least d with a^(q^d) = a, via plain exponentiation only."""
    for d in range(1, ctx.m + 1):
        if ctx.pow(a, ctx.q**d) == a:
            return d
    raise AssertionError("degree exceeds m")
