"""Reduced polynomial representatives of functions on GF(q^m).

Every function on a field of size n is the function of exactly one
polynomial of degree below n, so polynomials here are fixed-length
coefficient vectors reduced modulo x^n - x.  Interpolation exploits the
closed form prod over all field elements y of (x - y) = x^n - x, whose
derivative is the constant -1: the basis polynomial hitting 1 at y and 0
elsewhere is minus the synthetic quotient (x^n - x)/(x - y), so one pass of
Horner coefficients per point gives the interpolant in O(n^2) products.

Membership predicates come in deliberately independent pairs (coefficient
test vs commutation test, stratum test vs the literal two-subfield
condition) so each can serve as an oracle for the other.
"""

from dataclasses import dataclass

from .gf import Field, FieldElement
from .monoid import FuncTable
from .orbits import divisors


@dataclass(frozen=True)
class FieldPoly:
    """Polynomial over GF(q^m), reduced: exactly q^m coefficients, ascending."""

    ctx: Field
    coeffs: tuple[FieldElement, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.ctx.element_count:
            raise ValueError("reduced polynomial needs exactly q^m coefficients")

    @classmethod
    def from_coeffs(cls, ctx: Field, coeffs) -> "FieldPoly":
        cs = list(coeffs)
        if len(cs) > ctx.element_count:
            raise ValueError("degree must be below q^m")
        cs += [ctx.zero] * (ctx.element_count - len(cs))
        return cls(ctx, tuple(cs))

    @classmethod
    def from_ints(cls, ctx: Field, residues) -> "FieldPoly":
        """Build from prime-field residues, one per coefficient."""
        return cls.from_coeffs(ctx, [ctx.from_int(c) for c in residues])

    @property
    def degree(self) -> int:
        for d in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[d] != self.ctx.zero:
                return d
        return 0

    # -- textual form: coefficients comma-separated, ascending; a coefficient
    # in the prime field prints as its residue, otherwise as its coordinate
    # vector joined by dots (e.g. "0.1").  Trailing zero coefficients are
    # trimmed on output and padded on input.

    @classmethod
    def parse(cls, ctx: Field, text: str) -> "FieldPoly":
        coeffs = []
        for token in text.strip().split(","):
            token = token.strip()
            digits = [int(t) for t in token.split(".")] if token else [0]
            coeffs.append(ctx.from_coeffs(digits))
        return cls.from_coeffs(ctx, coeffs)

    def __str__(self) -> str:
        def fmt(c: FieldElement) -> str:
            if any(c.coeffs[1:]):
                return ".".join(str(x) for x in c.coeffs)
            return str(c.coeffs[0])

        return ",".join(fmt(c) for c in self.coeffs[: self.degree + 1])


def evaluate(ctx: Field, poly: FieldPoly, x: FieldElement) -> FieldElement:
    """Horner evaluation."""
    acc = ctx.zero
    for c in reversed(poly.coeffs):
        acc = ctx.add(ctx.mul(acc, x), c)
    return acc


def func_from_poly(ctx: Field, poly: FieldPoly) -> FuncTable:
    return FuncTable(
        ctx, tuple(ctx.index(evaluate(ctx, poly, x)) for x in ctx.elements)
    )


def interpolate(ctx: Field, f: FuncTable) -> FieldPoly:
    """The unique reduced polynomial with the given value table."""
    n = ctx.element_count
    coeffs = [0] * n  # element indices; zero element has index 0
    one = ctx.index(ctx.one)
    for yi, vi in enumerate(f.values):
        if vi == 0:
            continue
        powers = [one]
        for _ in range(n - 1):
            powers.append(ctx.mul_index(powers[-1], yi))
        # contribution of value v at node y: v * (1 - (x^n - x)/(x - y)),
        # whose x^i coefficient is -v * y^(n-1-i) for i >= 1 and
        # v * (1 - y^(n-1)) for i = 0
        neg_v = ctx.neg_index(vi)
        for i in range(1, n):
            coeffs[i] = ctx.add_index(coeffs[i], ctx.mul_index(neg_v, powers[n - 1 - i]))
        coeffs[0] = ctx.add_index(
            coeffs[0], ctx.add_index(vi, ctx.mul_index(neg_v, powers[n - 1]))
        )
    elems = ctx.elements
    return FieldPoly(ctx, tuple(elems[c] for c in coeffs))


def compose_polys(ctx: Field, f: FieldPoly, g: FieldPoly) -> FieldPoly:
    """Reduced representative of the composed function f(g(x))."""
    return interpolate(ctx, func_from_poly(ctx, f).after(func_from_poly(ctx, g)))


def is_canonical(ctx: Field, poly: FieldPoly) -> bool:
    """True when every coefficient lies in GF(q), tested as c^q = c."""
    return all(ctx.frobenius_q(c) == c for c in poly.coeffs)


def commutes_with_frobenius(ctx: Field, f: FuncTable) -> bool:
    """Value-table counterpart of the coefficient test: f(x^q) = f(x)^q."""
    frob = ctx.frobenius_map
    return all(f.values[frob[i]] == frob[v] for i, v in enumerate(f.values))


def is_subfield_preserving(ctx: Field, f: FuncTable) -> bool:
    """True when f maps every stratum of exact degree k into itself."""
    deg = ctx.degree_map
    return all(deg[v] == deg[i] for i, v in enumerate(f.values))


def is_subfield_preserving_literal(ctx: Field, f: FuncTable) -> bool:
    """Independent route: f(GF(q)) inside GF(q), and for every pair of
    divisors d, s of m, f maps GF(q^d) minus GF(q^s) into itself.
    Membership of x in GF(q^d) is deg(x) | d.
    """
    deg = ctx.degree_map
    vals = f.values
    for i, v in enumerate(vals):
        if deg[i] == 1 and deg[v] != 1:
            return False
    for d in divisors(ctx.m):
        for s in divisors(ctx.m):
            for i, v in enumerate(vals):
                if d % deg[i] == 0 and s % deg[i] != 0:
                    if d % deg[v] != 0 or s % deg[v] == 0:
                        return False
    return True


def is_member(ctx: Field, poly: FieldPoly) -> bool:
    """Membership in the monoid: canonical and subfield preserving."""
    return is_canonical(ctx, poly) and is_subfield_preserving(
        ctx, func_from_poly(ctx, poly)
    )
