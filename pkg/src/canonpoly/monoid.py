"""The monoid of canonical subfield-preserving functions in abstract form.

An element carries, for each divisor k of m, a self-map sigma of the set of
k-cycles together with one cyclic shift per cycle.  Composition twists the
shifts through the right-hand sigma:

    compose(a, b) applies b first, then a; per divisor,
    sigma''(i) = a.sigma(b.sigma(i)) and s''_i = a.s[b.sigma(i)] + b.s[i] mod k.

With that convention the realization map to concrete function tables is a
homomorphism: to_function(compose(a, b)) equals to_function(a) after
to_function(b).  Shifts are stored as amounts in [0, k) acting on 1-based
positions, each shift being identified by where it sends position 1.

An element is invertible exactly when every sigma component is a bijection;
shift components are always invertible.
"""

import itertools
import math
import random
from dataclasses import dataclass

from .errors import (
    NotEquivariant,
    NotInvertible,
    NotPreserving,
    ShapeMismatch,
    TooLarge,
)
from .gf import Field, FieldElement
from .orbits import OrbitTable, divisors, irreducible_count

DEFAULT_ENUM_BOUND = 1 << 20


@dataclass(frozen=True)
class MonoidShape:
    """Per-divisor component sizes: n_k cycles of length k, k | m ascending."""

    divisors: tuple[int, ...]
    sizes: tuple[int, ...]

    def __post_init__(self):
        if len(self.divisors) != len(self.sizes):
            raise ValueError("divisors and sizes must align")
        if list(self.divisors) != sorted(set(self.divisors)):
            raise ValueError("divisors must be strictly ascending")

    @classmethod
    def for_field(cls, q: int, m: int) -> "MonoidShape":
        ks = divisors(m)
        return cls(tuple(ks), tuple(irreducible_count(q, k) for k in ks))

    @classmethod
    def from_orbits(cls, table: OrbitTable) -> "MonoidShape":
        ks = table.cycle_lengths
        return cls(tuple(ks), tuple(table.cycle_count(k) for k in ks))

    @property
    def order(self) -> int:
        return math.prod(k**n * n**n for k, n in zip(self.divisors, self.sizes))

    @property
    def unit_order(self) -> int:
        return math.prod(
            k**n * math.factorial(n) for k, n in zip(self.divisors, self.sizes)
        )


@dataclass(frozen=True)
class MonoidElem:
    """One (sigma, shifts) pair per divisor; entries of sigma are 1-based."""

    shape: MonoidShape
    sigma: tuple[tuple[int, ...], ...]
    shifts: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for k, n, sg, sh in zip(
            self.shape.divisors, self.shape.sizes, self.sigma, self.shifts
        ):
            if len(sg) != n or len(sh) != n:
                raise ShapeMismatch("component length does not match shape")
            if any(not 1 <= v <= n for v in sg):
                raise ValueError("sigma entries must lie in [1, n]")
            if any(not 0 <= s < k for s in sh):
                raise ValueError("shift amounts must lie in [0, k)")

    def __mul__(self, other: "MonoidElem") -> "MonoidElem":
        return compose(self, other)

    def component(self, k: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
        pos = self.shape.divisors.index(k)
        return self.sigma[pos], self.shifts[pos]

    def to_json(self) -> dict:
        return {
            str(k): {"sigma": list(sg), "shifts": list(sh)}
            for k, sg, sh in zip(self.shape.divisors, self.sigma, self.shifts)
        }

    @classmethod
    def from_json(cls, shape: MonoidShape, data: dict) -> "MonoidElem":
        sigma = []
        shifts = []
        for k in shape.divisors:
            comp = data[str(k)]
            sigma.append(tuple(comp["sigma"]))
            shifts.append(tuple(comp["shifts"]))
        return cls(shape, tuple(sigma), tuple(shifts))


def identity(shape: MonoidShape) -> MonoidElem:
    return MonoidElem(
        shape,
        tuple(tuple(range(1, n + 1)) for n in shape.sizes),
        tuple((0,) * n for n in shape.sizes),
    )


def compose(a: MonoidElem, b: MonoidElem) -> MonoidElem:
    """Product applying b first, then a."""
    if a.shape != b.shape:
        raise ShapeMismatch("cannot compose elements of different shapes")
    sigma = []
    shifts = []
    for k, asg, ash, bsg, bsh in zip(
        a.shape.divisors, a.sigma, a.shifts, b.sigma, b.shifts
    ):
        sigma.append(tuple(asg[i - 1] for i in bsg))
        shifts.append(tuple((ash[i - 1] + s) % k for i, s in zip(bsg, bsh)))
    return MonoidElem(a.shape, tuple(sigma), tuple(shifts))


def is_invertible(a: MonoidElem) -> bool:
    return all(len(set(sg)) == len(sg) for sg in a.sigma)


def invert(a: MonoidElem) -> MonoidElem:
    if not is_invertible(a):
        raise NotInvertible("some sigma component is not a bijection")
    sigma = []
    shifts = []
    for k, sg, sh in zip(a.shape.divisors, a.sigma, a.shifts):
        n = len(sg)
        inv_sg = [0] * n
        for i, v in enumerate(sg, start=1):
            inv_sg[v - 1] = i
        sigma.append(tuple(inv_sg))
        shifts.append(tuple((-sh[inv_sg[i] - 1]) % k for i in range(n)))
    return MonoidElem(a.shape, tuple(sigma), tuple(shifts))


@dataclass(frozen=True)
class FuncTable:
    """Total function on a field, as output indices in basis order."""

    ctx: Field
    values: tuple[int, ...]

    @classmethod
    def identity(cls, ctx: Field) -> "FuncTable":
        return cls(ctx, tuple(range(ctx.element_count)))

    @classmethod
    def from_elements(cls, ctx: Field, outputs) -> "FuncTable":
        return cls(ctx, tuple(ctx.index(v) for v in outputs))

    def __call__(self, a: FieldElement) -> FieldElement:
        return self.ctx.elements[self.values[self.ctx.index(a)]]

    def after(self, other: "FuncTable") -> "FuncTable":
        """Pointwise composition: self applied after other."""
        return FuncTable(self.ctx, tuple(self.values[v] for v in other.values))

    def is_bijection(self) -> bool:
        return len(set(self.values)) == len(self.values)


def to_function(a: MonoidElem, table: OrbitTable) -> FuncTable:
    """Realize abstract data as a concrete function: the j-th element of the
    i-th k-cycle maps to position (j - 1 + s_i mod k) + 1 of cycle sigma(i).
    """
    ctx = table.ctx
    if MonoidShape.from_orbits(table) != a.shape:
        raise ShapeMismatch("element shape does not match the orbit table")
    out = [0] * ctx.element_count
    for k, sg, sh in zip(a.shape.divisors, a.sigma, a.shifts):
        cycles = table.orbits.get(k, [])
        for i, cycle in enumerate(cycles):
            target = cycles[sg[i] - 1]
            s = sh[i]
            for j, idx in enumerate(cycle):
                out[idx] = target[(j + s) % k]
    return FuncTable(ctx, tuple(out))


def from_function(f: FuncTable, table: OrbitTable) -> MonoidElem:
    """Recover the unique abstract element realizing f.

    Raises NotEquivariant if f does not commute with the q-power map and
    NotPreserving if it moves some element across strata; otherwise f is
    determined on each cycle by the image of its representative.
    """
    ctx = table.ctx
    frob = ctx.frobenius_map
    deg = ctx.degree_map
    vals = f.values
    for i, v in enumerate(vals):
        if vals[frob[i]] != frob[v]:
            raise NotEquivariant(
                f"f(x^q) != f(x)^q at index {i}"
            )
    for i, v in enumerate(vals):
        if deg[v] != deg[i]:
            raise NotPreserving(
                f"element of degree {deg[i]} mapped to degree {deg[v]}"
            )
    shape = MonoidShape.from_orbits(table)
    sigma = []
    shifts = []
    for k in shape.divisors:
        cycles = table.orbits.get(k, [])
        sg = []
        sh = []
        for cycle in cycles:
            _, i2, j2 = table.locate_index(vals[cycle[0]])
            sg.append(i2)
            sh.append(j2 - 1)
        sigma.append(tuple(sg))
        shifts.append(tuple(sh))
    return MonoidElem(shape, tuple(sigma), tuple(shifts))


def enumerate_monoid(shape: MonoidShape, bound: int = DEFAULT_ENUM_BOUND):
    """Yield all elements in deterministic lexicographic order.

    Coordinates are ordered divisor-ascending, sigma before shifts within a
    divisor, with the last coordinate varying fastest.
    """
    if shape.order > bound:
        raise TooLarge(f"monoid order {shape.order} exceeds bound {bound}")
    factors = []
    for k, n in zip(shape.divisors, shape.sizes):
        factors.append([tuple(sg) for sg in itertools.product(range(1, n + 1), repeat=n)])
        factors.append([tuple(sh) for sh in itertools.product(range(k), repeat=n)])
    for combo in itertools.product(*factors):
        yield MonoidElem(shape, combo[0::2], combo[1::2])


def _as_rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_element(shape: MonoidShape, seed) -> MonoidElem:
    """Uniform sample; deterministic for a given seed or Random instance."""
    rng = _as_rng(seed)
    sigma = tuple(
        tuple(rng.randrange(1, n + 1) for _ in range(n)) for n in shape.sizes
    )
    shifts = tuple(
        tuple(rng.randrange(k) for _ in range(n))
        for k, n in zip(shape.divisors, shape.sizes)
    )
    return MonoidElem(shape, sigma, shifts)


def random_unit(shape: MonoidShape, seed) -> MonoidElem:
    """Uniform sample from the unit group (sigma components are shuffles)."""
    rng = _as_rng(seed)
    sigma = []
    for n in shape.sizes:
        perm = list(range(1, n + 1))
        rng.shuffle(perm)
        sigma.append(tuple(perm))
    shifts = tuple(
        tuple(rng.randrange(k) for _ in range(n))
        for k, n in zip(shape.divisors, shape.sizes)
    )
    return MonoidElem(shape, tuple(sigma), shifts)


def factor_unit(u: MonoidElem, table: OrbitTable) -> tuple[FuncTable, MonoidElem]:
    """Split a unit as s after h, where s permutes GF(q) and fixes the rest,
    and h fixes GF(q) pointwise.  Returns (s as a table, h abstractly);
    to_function(u) equals s.after(to_function(h)).
    """
    if not is_invertible(u):
        raise NotInvertible("only units factor this way")
    shape = u.shape
    ident = identity(shape)
    base_only = MonoidElem(
        shape,
        (u.sigma[0],) + ident.sigma[1:],
        (u.shifts[0],) + ident.shifts[1:],
    )
    h = MonoidElem(
        shape,
        (ident.sigma[0],) + u.sigma[1:],
        (ident.shifts[0],) + u.shifts[1:],
    )
    return to_function(base_only, table), h
