"""Finite field construction and arithmetic.

A field GF(q^m) with q = p^e is realized as GF(p)[x]/(modulus) where the
modulus is a monic irreducible polynomial of degree e*m over the prime
field.  Elements are coefficient vectors of length e*m with respect to the
power basis, constant coefficient first.

The fixed element ordering ("basis order") sorts coefficient vectors by
their base-p value with the constant coefficient as the least significant
digit, so the element at index i has coefficients equal to the base-p
digits of i.  All deterministic enumeration in the package relies on this
order.

Polynomials over the prime field are plain coefficient tuples, ascending
degree; module-level helpers implement the ring operations needed for
modulus construction and irreducibility testing.
"""

from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    NonPrimeCharacteristic,
    ReducibleModulus,
    WrongModulusDegree,
    ZeroInverse,
)

# n*n index tables are only built for fields at most this large
TABLE_LIMIT = 1024


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def factor_prime_power(n: int) -> tuple[int, int]:
    """Write n = p^e for a prime p, or raise ValueError."""
    fs = prime_factors(n)
    if len(fs) != 1:
        raise ValueError(f"{n} is not a prime power")
    p = fs[0]
    e = 0
    while n > 1:
        n //= p
        e += 1
    return p, e


# ---------------------------------------------------------------------------
# polynomials over GF(p): coefficient lists, ascending degree, trimmed

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _poly_divmod(a, b, p):
    rem = _trim(list(a))
    quo = [0] * max(0, len(rem) - len(b) + 1)
    inv_lead = pow(b[-1], -1, p)
    while len(rem) >= len(b):
        c = rem[-1] * inv_lead % p
        d = len(rem) - len(b)
        quo[d] = c
        for i, y in enumerate(b):
            rem[i + d] = (rem[i + d] - c * y) % p
        _trim(rem)
    return quo, rem


def _poly_gcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_divmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def _x_power_mod(exponent, f, p):
    """x^exponent reduced mod f, by square and multiply."""
    result = [1]
    base = _poly_divmod([0, 1], f, p)[1] if len(f) <= 2 else [0, 1]
    while exponent:
        if exponent & 1:
            result = _poly_divmod(_poly_mul(result, base, p), f, p)[1]
        base = _poly_divmod(_poly_mul(base, base, p), f, p)[1]
        exponent >>= 1
    return result


@dataclass(frozen=True)
class PrimePoly:
    """Monic polynomial over GF(p); coefficients ascending, leading 1."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs or self.coeffs[-1] != 1:
            raise ValueError("polynomial must be monic")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_text(cls, text: str) -> "PrimePoly":
        return cls(tuple(int(t) for t in text.split(",")))

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coeffs)


def is_irreducible(poly, p: int) -> bool:
    """Deterministic irreducibility test over GF(p).

    Checks x^(p^d) == x mod f together with gcd(x^(p^(d/r)) - x, f) = 1 for
    every prime r dividing d.
    """
    f = list(poly.coeffs if isinstance(poly, PrimePoly) else poly)
    d = len(f) - 1
    if d < 1:
        return False
    x_mod = _poly_divmod([0, 1], f, p)[1]
    if _x_power_mod(p**d, f, p) != x_mod:
        return False
    for r in prime_factors(d):
        g = _x_power_mod(p ** (d // r), f, p)
        g = g + [0] * (2 - len(g))
        g[1] = (g[1] - 1) % p
        if _poly_gcd(g, f, p) != [1]:
            return False
    return True


@lru_cache(maxsize=None)
def find_irreducible(p: int, d: int) -> PrimePoly:
    """First monic irreducible of degree d over GF(p) in basis order.

    Candidates are enumerated by the base-p value of their lower
    coefficients (constant coefficient least significant), which makes
    field construction fully deterministic.
    """
    if not is_prime(p):
        raise NonPrimeCharacteristic(f"{p} is not prime")
    if d < 1:
        raise ValueError("degree must be positive")
    for v in range(p**d):
        digits = []
        t = v
        for _ in range(d):
            digits.append(t % p)
            t //= p
        if is_irreducible(digits + [1], p):
            return PrimePoly(tuple(digits) + (1,))
    raise AssertionError("no irreducible polynomial found")  # unreachable


# ---------------------------------------------------------------------------
# field elements and the field context

@dataclass(frozen=True)
class FieldElement:
    """Element of GF(p^(e*m)) as a coefficient vector over GF(p)."""

    coeffs: tuple[int, ...]

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coeffs)


class Field:
    """Immutable context for GF(q^m), q = p^e, with a distinguished GF(q).

    All arithmetic methods are pure functions of (self, operands); the
    instance only ever grows internal caches, so it is safe to share
    across concurrent readers.
    """

    def __init__(self, p: int, e: int = 1, m: int = 1, modulus: PrimePoly | None = None):
        if not is_prime(p):
            raise NonPrimeCharacteristic(f"characteristic {p} is not prime")
        if e < 1 or m < 1:
            raise ValueError("e and m must be positive")
        degree = e * m
        if modulus is None:
            modulus = find_irreducible(p, degree)
        if modulus.degree != degree:
            raise WrongModulusDegree(
                f"modulus degree {modulus.degree}, expected {degree}"
            )
        if not is_irreducible(modulus, p):
            raise ReducibleModulus(f"{modulus} is reducible over GF({p})")
        self.p = p
        self.e = e
        self.m = m
        self.q = p**e
        self.degree = degree
        self.element_count = self.q**m
        self.modulus = modulus
        # rows[k] = x^(degree+k) mod modulus, for reducing products
        self._xpow_rows = self._build_reduction_rows()
        self._elements: list[FieldElement] | None = None
        self._frob_map: list[int] | None = None
        self._degree_map: list[int] | None = None
        self._add_flat = None
        self._mul_flat = None
        self._subfield_idx: list[int] | None = None

    def __repr__(self):
        return f"Field(p={self.p}, e={self.e}, m={self.m}, modulus={self.modulus})"

    def _build_reduction_rows(self):
        p, d = self.p, self.degree
        rows = []
        row = [(-c) % p for c in self.modulus.coeffs[:d]]
        for _ in range(max(0, d - 1)):
            rows.append(row)
            lead = row[d - 1]
            row = [lead * rows[0][0] % p] + [
                (row[j - 1] + lead * rows[0][j]) % p for j in range(1, d)
            ]
        return rows

    # -- element construction ------------------------------------------------

    @property
    def zero(self) -> FieldElement:
        return FieldElement((0,) * self.degree)

    @property
    def one(self) -> FieldElement:
        return FieldElement((1,) + (0,) * (self.degree - 1))

    def from_coeffs(self, coeffs) -> FieldElement:
        cs = [c % self.p for c in coeffs]
        if len(cs) > self.degree:
            raise ValueError("too many coefficients")
        cs += [0] * (self.degree - len(cs))
        return FieldElement(tuple(cs))

    def from_int(self, c: int) -> FieldElement:
        """Embed a prime-field residue as a constant."""
        return self.from_coeffs([c])

    def from_index(self, i: int) -> FieldElement:
        digits = []
        for _ in range(self.degree):
            digits.append(i % self.p)
            i //= self.p
        return FieldElement(tuple(digits))

    def index(self, a: FieldElement) -> int:
        i = 0
        for c in reversed(a.coeffs):
            i = i * self.p + c
        return i

    @property
    def elements(self) -> list[FieldElement]:
        """All q^m elements in basis order."""
        if self._elements is None:
            self._elements = [self.from_index(i) for i in range(self.element_count)]
        return self._elements

    def parse_element(self, text: str) -> FieldElement:
        return self.from_coeffs([int(t) for t in text.split(",")] if text else [0])

    def format_element(self, a: FieldElement) -> str:
        return str(a)

    # -- arithmetic ----------------------------------------------------------

    def add(self, a: FieldElement, b: FieldElement) -> FieldElement:
        p = self.p
        return FieldElement(tuple((x + y) % p for x, y in zip(a.coeffs, b.coeffs)))

    def sub(self, a: FieldElement, b: FieldElement) -> FieldElement:
        p = self.p
        return FieldElement(tuple((x - y) % p for x, y in zip(a.coeffs, b.coeffs)))

    def neg(self, a: FieldElement) -> FieldElement:
        p = self.p
        return FieldElement(tuple((-x) % p for x in a.coeffs))

    def mul(self, a: FieldElement, b: FieldElement) -> FieldElement:
        p, d = self.p, self.degree
        conv = [0] * (2 * d - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    conv[i + j] = (conv[i + j] + x * y) % p
        for i in range(2 * d - 2, d - 1, -1):
            c = conv[i]
            if c:
                row = self._xpow_rows[i - d]
                for j in range(d):
                    conv[j] = (conv[j] + c * row[j]) % p
        return FieldElement(tuple(conv[:d]))

    def inv(self, a: FieldElement) -> FieldElement:
        """Multiplicative inverse by extended Euclid in GF(p)[x]."""
        p = self.p
        av = _trim(list(a.coeffs))
        if not av:
            raise ZeroInverse("zero has no inverse")
        # invariant: t_k * a == r_k (mod modulus)
        r0, r1 = list(self.modulus.coeffs), av
        t0, t1 = [], [1]
        while r1:
            quo, rem = _poly_divmod(r0, r1, p)
            prod = _poly_mul(quo, t1, p)
            width = max(len(t0), len(prod))
            nxt = [
                ((t0[i] if i < len(t0) else 0) - (prod[i] if i < len(prod) else 0)) % p
                for i in range(width)
            ]
            r0, r1 = r1, rem
            t0, t1 = t1, _trim(nxt)
        # modulus irreducible and a nonzero, so the gcd is a nonzero constant
        scale = pow(r0[0], -1, p)
        return self.from_coeffs([c * scale % p for c in t0])

    def pow(self, a: FieldElement, exponent: int) -> FieldElement:
        if exponent < 0:
            raise ValueError("exponent must be a natural number")
        result = self.one
        base = a
        while exponent:
            if exponent & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            exponent >>= 1
        return result

    def frobenius_q(self, a: FieldElement) -> FieldElement:
        """a^q, the generator of the Galois group over GF(q)."""
        return self.pow(a, self.q)

    def subfield_degree(self, a: FieldElement) -> int:
        """Least d with a^(q^d) = a; always divides m."""
        b = self.frobenius_q(a)
        d = 1
        while b != a:
            b = self.frobenius_q(b)
            d += 1
        return d

    # -- index-level caches (small fields only) -------------------------------

    @property
    def frobenius_map(self) -> list[int]:
        """Index i -> index of elements[i]^q."""
        if self._frob_map is None:
            self._frob_map = [
                self.index(self.frobenius_q(a)) for a in self.elements
            ]
        return self._frob_map

    @property
    def degree_map(self) -> list[int]:
        """Index i -> subfield degree of elements[i]."""
        if self._degree_map is None:
            frob = self.frobenius_map
            out = []
            for i in range(self.element_count):
                j = frob[i]
                d = 1
                while j != i:
                    j = frob[j]
                    d += 1
                out.append(d)
            self._degree_map = out
        return self._degree_map

    @property
    def subfield_indices(self) -> list[int]:
        """Indices of the q elements of GF(q), ascending in basis order."""
        if self._subfield_idx is None:
            self._subfield_idx = [
                i for i, d in enumerate(self.degree_map) if d == 1
            ]
            assert len(self._subfield_idx) == self.q
        return self._subfield_idx

    def _build_index_tables(self):
        n = self.element_count
        if n > TABLE_LIMIT:
            return
        elems = self.elements
        idx = self.index
        add_flat = [0] * (n * n)
        mul_flat = [0] * (n * n)
        for i, a in enumerate(elems):
            base = i * n
            for j, b in enumerate(elems):
                add_flat[base + j] = idx(self.add(a, b))
                mul_flat[base + j] = idx(self.mul(a, b))
        self._add_flat = add_flat
        self._mul_flat = mul_flat

    @property
    def add_table(self) -> list[int] | None:
        """Flat n*n addition table of element indices, or None if too large."""
        if self._add_flat is None:
            self._build_index_tables()
        return self._add_flat

    @property
    def mul_table(self) -> list[int] | None:
        if self._mul_flat is None:
            self._build_index_tables()
        return self._mul_flat

    def add_index(self, i: int, j: int) -> int:
        t = self.add_table
        if t is not None:
            return t[i * self.element_count + j]
        return self.index(self.add(self.elements[i], self.elements[j]))

    def mul_index(self, i: int, j: int) -> int:
        t = self.mul_table
        if t is not None:
            return t[i * self.element_count + j]
        return self.index(self.mul(self.elements[i], self.elements[j]))

    def neg_index(self, i: int) -> int:
        return self.index(self.neg(self.elements[i]))
