"""Exact counting, densities, and the exhaustive brute-force oracle.

Counts use exact integers throughout; floats appear only in density and
log-density outputs.  The brute-force census enumerates every reduced
polynomial with base-subfield coefficients and classifies each one
directly, providing an oracle wholly independent of the product formulas.

The scan kernel exists twice: a compiled extension and a pure-Python
fallback with identical semantics.  The compiled one is picked at import
when present unless CANONPOLY_PURE is set in the environment.
"""

import itertools
import math
import os
from array import array
from dataclasses import dataclass
from fractions import Fraction

from . import _scan as _scan_pure
from .errors import DegenerateField, TooLarge
from .gf import Field, is_prime
from .orbits import divisors, irreducible_count
from .polys import FieldPoly

try:
    from . import _scan_native
except ImportError:  # extension not built; pure fallback only
    _scan_native = None

DEFAULT_BOUND = 1 << 20
EXACT_DENSITY_LIMIT = 1 << 20  # largest q^m for which q^(q^m) is materialized


def available_backends() -> list[str]:
    return ["native", "pure"] if _scan_native is not None else ["pure"]


def default_backend() -> str:
    if os.environ.get("CANONPOLY_PURE"):
        return "pure"
    return available_backends()[0]


def _scan_module(backend: str | None):
    backend = backend or default_backend()
    if backend == "pure":
        return _scan_pure
    if backend == "native":
        if _scan_native is None:
            raise ValueError("native scan backend is not built")
        return _scan_native
    raise ValueError(f"unknown backend {backend!r}")


# ---------------------------------------------------------------------------
# closed-form counts

def monoid_order(q: int, m: int) -> int:
    """Product over k | m of k^pi(k) * pi(k)^pi(k)."""
    return math.prod(
        k ** irreducible_count(q, k) * irreducible_count(q, k) ** irreducible_count(q, k)
        for k in divisors(m)
    )


def unit_group_order(q: int, m: int) -> int:
    """Product over k | m of k^pi(k) * pi(k)!."""
    return math.prod(
        k ** irreducible_count(q, k) * math.factorial(irreducible_count(q, k))
        for k in divisors(m)
    )


def preserving_count(q: int, m: int) -> int:
    """All subfield-preserving maps: product of (k*pi(k))^(k*pi(k))."""
    return math.prod(
        (k * irreducible_count(q, k)) ** (k * irreducible_count(q, k))
        for k in divisors(m)
    )


# ---------------------------------------------------------------------------
# densities

def monoid_density(q: int, m: int) -> Fraction:
    """Exact share of members among all q^(q^m) canonical candidates."""
    if q**m > EXACT_DENSITY_LIMIT:
        raise TooLarge("field too large for an exact density; use the log form")
    density = Fraction(monoid_order(q, m), q ** (q**m))
    if is_prime(m):
        # closed form for prime degree; must agree with the general product
        closed = Fraction(q**q * (q**m - q) ** ((q**m - q) // m), q ** (q**m))
        assert density == closed
    return density


def log_monoid_density(q: int, p: int) -> float:
    """Natural log of the member density for prime degree p.

    Algebraically ln densitiy = ((q^p - q)/p) * ln(1 - q^(1-p)); evaluated
    as (q/p) * (1-u) * log1p(-u)/u with u = q^(1-p) so that no intermediate
    overflows however large q and p grow.  log1p(-u)/u tends to -1 as u
    underflows, giving the exact limit -q/p.
    """
    if q < 2:
        raise DegenerateField("q must be at least 2")
    if not is_prime(p):
        raise ValueError("degree must be prime")
    u = math.exp((1 - p) * math.log(q))
    ratio = math.log1p(-u) / u if u > 0.0 else -1.0
    return (q / p) * (1.0 - u) * ratio


@dataclass(frozen=True)
class UnitDensity:
    """Unit-group density: exact where representable, always in log space."""

    exact: Fraction | None
    log_value: float


def unit_density(q: int, p: int) -> UnitDensity:
    """Density of permutation members among canonical candidates, prime p."""
    if q < 2:
        raise DegenerateField("q must be at least 2")
    if not is_prime(p):
        raise ValueError("degree must be prime")
    pi = (q**p - q) // p
    exact = None
    if q**p <= EXACT_DENSITY_LIMIT:
        count = math.factorial(q) * p**pi * math.factorial(pi)
        assert count == unit_group_order(q, p)
        exact = Fraction(count, q ** (q**p))
    try:
        log_value = (
            math.lgamma(q + 1)
            + pi * math.log(p)
            + math.lgamma(pi + 1)
            - q**p * math.log(q)
        )
    except OverflowError:
        log_value = -math.inf
    return UnitDensity(exact, log_value)


def convergence_table(mode: str, values, fixed: int | None = None):
    """Log densities along one of the three directed regimes.

    mode "fixed_q": fixed is q, values are prime degrees.
    mode "fixed_p": fixed is the prime degree, values are field orders q.
    mode "diagonal": values are primes used as both q and degree.
    Returns (q, p, log_density) rows.
    """
    rows = []
    if mode == "fixed_q":
        if fixed is None:
            raise ValueError("fixed_q mode needs the field order")
        rows = [(fixed, p, log_monoid_density(fixed, p)) for p in values]
    elif mode == "fixed_p":
        if fixed is None:
            raise ValueError("fixed_p mode needs the prime degree")
        rows = [(q, fixed, log_monoid_density(q, fixed)) for q in values]
    elif mode == "diagonal":
        rows = [(p, p, log_monoid_density(p, p)) for p in values]
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return rows


def convergence_csv(rows) -> str:
    lines = ["q,p,log_density"]
    lines += [f"{q},{p},{v!r}" for q, p, v in rows]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# census report and the brute-force oracle

@dataclass(frozen=True)
class CensusReport:
    q: int
    m: int
    cycle_lengths: tuple[int, ...]
    irreducible_counts: tuple[int, ...]
    monoid_order: int
    unit_group_order: int
    preserving_count: int
    density: Fraction | None
    unit_density: Fraction | None
    log_density: float | None
    observed_members: int | None = None
    observed_units: int | None = None
    observed_preserving: int | None = None

    def __post_init__(self):
        assert 1 <= self.unit_group_order <= self.monoid_order <= self.preserving_count
        if self.density is not None:
            assert 0 <= self.density <= 1
        if self.unit_density is not None:
            assert 0 <= self.unit_density <= 1

    @property
    def matches(self) -> bool:
        """Observed counts, where present, equal the closed-form counts."""
        return (
            (self.observed_members is None or self.observed_members == self.monoid_order)
            and (self.observed_units is None or self.observed_units == self.unit_group_order)
            and (
                self.observed_preserving is None
                or self.observed_preserving == self.preserving_count
            )
        )

    def to_json(self) -> dict:
        def frac(f: Fraction | None):
            if f is None:
                return None
            return {"exact": f"{f.numerator}/{f.denominator}", "float": float(f)}

        out = {
            "q": self.q,
            "m": self.m,
            "pi": {
                str(k): str(n)
                for k, n in zip(self.cycle_lengths, self.irreducible_counts)
            },
            "monoid_order": str(self.monoid_order),
            "unit_group_order": str(self.unit_group_order),
            "preserving_count": str(self.preserving_count),
            "density": frac(self.density),
            "unit_density": frac(self.unit_density),
            "log_density": self.log_density,
        }
        if self.observed_members is not None:
            out["observed"] = {
                "members": str(self.observed_members),
                "units": str(self.observed_units),
                "preserving": None
                if self.observed_preserving is None
                else str(self.observed_preserving),
                "matches": self.matches,
            }
        return out


def census_report(q: int, m: int) -> CensusReport:
    ks = divisors(m)
    pis = tuple(irreducible_count(q, k) for k in ks)
    order = monoid_order(q, m)
    units = unit_group_order(q, m)
    density = unit_dens = None
    if q**m <= EXACT_DENSITY_LIMIT:
        whole = q ** (q**m)
        density = monoid_density(q, m)
        unit_dens = Fraction(units, whole)
    log_density = log_monoid_density(q, m) if is_prime(m) else None
    return CensusReport(
        q=q,
        m=m,
        cycle_lengths=tuple(ks),
        irreducible_counts=pis,
        monoid_order=order,
        unit_group_order=units,
        preserving_count=preserving_count(q, m),
        density=density,
        unit_density=unit_dens,
        log_density=log_density,
    )


def _scan_inputs(ctx: Field):
    n = ctx.element_count
    q = ctx.q
    add_flat = ctx.add_table
    assert add_flat is not None
    deg = ctx.degree_map
    elems = ctx.elements
    sub = [elems[i] for i in ctx.subfield_indices]
    # step_flat[(d*q + a)*n + x]: index of (sub[a+1 mod q] - sub[a]) * x^d
    step_flat = [0] * (n * q * n)
    deltas = [ctx.sub(sub[(a + 1) % q], sub[a]) for a in range(q)]
    powers = [ctx.one] * n
    for d in range(n):
        for a in range(q):
            base = (d * q + a) * n
            delta = deltas[a]
            for x in range(n):
                step_flat[base + x] = ctx.index(ctx.mul(delta, powers[x]))
        if d + 1 < n:
            powers = [ctx.mul(pw, e) for pw, e in zip(powers, elems)]
    return add_flat, step_flat, deg


def candidate_poly(ctx: Field, candidate_id: int) -> FieldPoly:
    """Decode a scan candidate id into its polynomial."""
    q = ctx.q
    sub = [ctx.elements[i] for i in ctx.subfield_indices]
    coeffs = []
    for _ in range(ctx.element_count):
        coeffs.append(sub[candidate_id % q])
        candidate_id //= q
    return FieldPoly(ctx, tuple(coeffs))


def _observed_preserving(ctx: Field, bound: int) -> int | None:
    """Exhaustively count degree-preserving maps, or None if infeasible."""
    n = ctx.element_count
    if n**n > bound:
        return None
    deg = ctx.degree_map
    count = 0
    for vals in itertools.product(range(n), repeat=n):
        if all(deg[v] == deg[i] for i, v in enumerate(vals)):
            count += 1
    return count


def brute_force_census(
    ctx: Field,
    bound: int = DEFAULT_BOUND,
    collect: bool = False,
    backend: str | None = None,
):
    """Classify every base-coefficient polynomial; oracle for the formulas.

    Returns a CensusReport with observed counts filled in (and, when
    collect is set, the member and unit candidate ids in lexicographic
    order).  Membership reduces to stratum preservation because candidates
    have subfield coefficients by construction.
    """
    n = ctx.element_count
    q = ctx.q
    n_candidates = q**n
    if n_candidates > bound:
        raise TooLarge(
            f"{n_candidates} candidate polynomials exceed the bound {bound}"
        )
    add_flat, step_flat, deg = _scan_inputs(ctx)
    mod = _scan_module(backend)
    if mod is _scan_native:
        members, units, member_ids, unit_ids = mod.scan(
            n,
            q,
            n_candidates,
            array("i", add_flat),
            array("i", step_flat),
            array("i", deg),
            collect,
        )
    else:
        members, units, member_ids, unit_ids = mod.scan(
            n, q, n_candidates, add_flat, step_flat, deg, collect
        )
    base = census_report(q, ctx.m)
    report = CensusReport(
        q=base.q,
        m=base.m,
        cycle_lengths=base.cycle_lengths,
        irreducible_counts=base.irreducible_counts,
        monoid_order=base.monoid_order,
        unit_group_order=base.unit_group_order,
        preserving_count=base.preserving_count,
        density=base.density,
        unit_density=base.unit_density,
        log_density=base.log_density,
        observed_members=members,
        observed_units=units,
        observed_preserving=_observed_preserving(ctx, bound),
    )
    if collect:
        return report, member_ids, unit_ids
    return report
