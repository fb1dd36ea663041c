"""Decomposition of GF(q^m) into cycles of the q-power map.

Every element of exact degree k over GF(q) lies in a k-cycle of the map
a -> a^q, and the k-cycles correspond bijectively to the monic irreducible
polynomials of degree k over GF(q).  The table built here fixes a canonical
labeling: within a cycle, position 1 is the basis-order minimum and
position j+1 is the q-th power of position j; cycles of equal length are
sorted by their representative.
"""

from .errors import IndexOutOfRange
from .gf import Field, FieldElement


def divisors(n: int) -> list[int]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def moebius(n: int) -> int:
    if n < 1:
        raise ValueError("moebius is defined for positive integers")
    result = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    if n > 1:
        result = -result
    return result


def irreducible_count(q: int, d: int) -> int:
    """Number of monic irreducible degree-d polynomials over GF(q).

    Moebius-inverts q^d = sum over j | d of j * count(q, j), entirely in
    exact integers; the sum is always divisible by d.
    """
    if d < 1:
        raise ValueError("degree must be positive")
    total = sum(moebius(d // j) * q**j for j in divisors(d))
    assert total % d == 0, "Moebius sum must be divisible by the degree"
    return total // d


class OrbitTable:
    """Cycles of the q-power map on a field, with canonical (k, i, j) labels.

    Immutable after construction.  Coordinates are 1-based: the j-th element
    of the i-th k-cycle, matching the shift arithmetic modulo k used by the
    monoid layer.
    """

    def __init__(self, ctx: Field):
        self.ctx = ctx
        frob = ctx.frobenius_map
        n = ctx.element_count
        orbits: dict[int, list[list[int]]] = {}
        coords: list[tuple[int, int, int] | None] = [None] * n
        seen = [False] * n
        for start in range(n):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            j = frob[start]
            while j != start:
                cycle.append(j)
                seen[j] = True
                j = frob[j]
            orbits.setdefault(len(cycle), []).append(cycle)
        self.orbits = {k: orbits[k] for k in sorted(orbits)}
        for k, cycles in self.orbits.items():
            for i, cycle in enumerate(cycles, start=1):
                for j, idx in enumerate(cycle, start=1):
                    coords[idx] = (k, i, j)
        self._coords = coords
        self._check()

    def _check(self):
        ctx = self.ctx
        total = 0
        for k, cycles in self.orbits.items():
            assert ctx.m % k == 0
            assert len(cycles) == irreducible_count(ctx.q, k)
            total += k * len(cycles)
        assert total == ctx.element_count

    @property
    def cycle_lengths(self) -> list[int]:
        return list(self.orbits)

    def cycle_count(self, k: int) -> int:
        return len(self.orbits.get(k, []))

    def element_at(self, k: int, i: int, j: int) -> FieldElement:
        cycles = self.orbits.get(k)
        if cycles is None or not 1 <= i <= len(cycles) or not 1 <= j <= k:
            raise IndexOutOfRange(f"no element at (k={k}, i={i}, j={j})")
        return self.ctx.elements[cycles[i - 1][j - 1]]

    def locate(self, a: FieldElement) -> tuple[int, int, int]:
        return self.locate_index(self.ctx.index(a))

    def locate_index(self, idx: int) -> tuple[int, int, int]:
        return self._coords[idx]

    def to_json(self) -> dict:
        ctx = self.ctx
        return {
            str(k): [
                {
                    "rep": str(ctx.elements[cycle[0]]),
                    "elements": [str(ctx.elements[i]) for i in cycle],
                }
                for cycle in cycles
            ]
            for k, cycles in self.orbits.items()
        }


def orbit_partition(ctx: Field) -> OrbitTable:
    return OrbitTable(ctx)


def minimal_polynomial(ctx: Field, table: OrbitTable, a: FieldElement):
    """Monic minimal polynomial of a over GF(q): the product of x minus each
    orbit conjugate.  Returned as a coefficient tuple of field elements,
    ascending degree; every coefficient is fixed by the q-power map.
    """
    k, i, _ = table.locate(a)
    conjugates = [ctx.elements[idx] for idx in table.orbits[k][i - 1]]
    coeffs = [ctx.one]
    for c in conjugates:
        neg_c = ctx.neg(c)
        nxt = [ctx.zero] * (len(coeffs) + 1)
        for deg, co in enumerate(coeffs):
            nxt[deg + 1] = ctx.add(nxt[deg + 1], co)
            nxt[deg] = ctx.add(nxt[deg], ctx.mul(co, neg_c))
        coeffs = nxt
    assert all(ctx.frobenius_q(c) == c for c in coeffs)
    return tuple(coeffs)
