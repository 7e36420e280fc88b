"""Arithmetic over GF(q), q = p**n, for the desk-scale orders used by the generators.

Elements are encoded as integers ``sum(c_i * p**i)`` where ``c_i`` is the
coefficient of ``x**i``. Integer order is therefore lexicographic order on the
coefficient vector read from the highest degree down.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product


class FieldError(ValueError):
    pass


class DivisionByZero(FieldError, ZeroDivisionError):
    pass


class EvenOrder(FieldError):
    pass


# Monic reduction polynomials, low-degree coefficient first (leading 1 omitted).
IRREDUCIBLE = {
    4: (1, 1),            # x^2 + x + 1
    8: (1, 1, 0),         # x^3 + x + 1
    9: (1, 0),            # x^2 + 1
    16: (1, 1, 0, 0),     # x^4 + x + 1
    25: (2, 0),           # x^2 + 2
    27: (1, 2, 0),        # x^3 + 2x + 1
    32: (1, 0, 1, 0, 0),  # x^5 + x^2 + 1
    49: (1, 0),           # x^2 + 1
    64: (1, 1, 0, 0, 0, 0),
    81: (2, 1, 0, 0),     # x^4 + x + 2
    121: (1, 0),          # x^2 + 1
    125: (2, 3, 0),       # x^3 + 3x + 2
    128: (1, 1, 0, 0, 0, 0, 0),
}

MAX_PRIME = 257


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def prime_power(q: int) -> tuple[int, int] | None:
    """``(p, n)`` with ``q == p**n`` for prime ``p``, or ``None``."""
    if q < 2:
        return None
    p = next(d for d in range(2, q + 1) if q % d == 0)
    n, r = 0, q
    while r % p == 0:
        r //= p
        n += 1
    return (p, n) if r == 1 else None


def _poly_mod_p(a: list[int], m: list[int], p: int) -> list[int]:
    """Remainder of ``a`` by monic ``m`` over GF(p); low-degree first."""
    a = a[:]
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] * inv_lead % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return a[:dm] if dm else []


def is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    """Trial division of a monic polynomial (full coefficient list, low first)."""
    n = len(poly) - 1
    full = list(poly)
    for d in range(1, n // 2 + 1):
        for low in product(range(p), repeat=d):
            divisor = list(low) + [1]
            if not any(_poly_mod_p(full, divisor, p)):
                return False
    return True


class GaloisField:
    """GF(p**n) with full operation tables; elements are ints in ``range(q)``."""

    def __init__(self, q: int):
        pn = prime_power(q)
        if pn is None:
            raise FieldError(f"{q} is not a prime power")
        p, n = pn
        if n == 1 and p > MAX_PRIME:
            raise FieldError(f"prime {p} exceeds the supported limit {MAX_PRIME}")
        if n > 1 and q not in IRREDUCIBLE:
            raise FieldError(f"GF({q}) has no built-in reduction polynomial")
        self.p, self.n, self.q = p, n, q
        self.modulus = (tuple(IRREDUCIBLE[q]) + (1,)) if n > 1 else (0, 1)
        if n > 1 and not is_irreducible(self.modulus, p):
            raise FieldError(f"reduction polynomial for GF({q}) is reducible")
        self._build_tables()

    def __repr__(self):
        return f"GaloisField({self.q})"

    def __str__(self):
        return f"GF({self.p}^{self.n})/{self.poly_str()}"

    def poly_str(self) -> str:
        terms = []
        for i in range(len(self.modulus) - 1, -1, -1):
            c = self.modulus[i]
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            coef = "" if (c == 1 and i) else str(c)
            terms.append(coef + mono)
        return "+".join(terms)

    # coefficient-vector helpers
    def coeffs(self, a: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.n):
            a, c = divmod(a, self.p)
            out.append(c)
        return tuple(out)

    def from_coeffs(self, cs) -> int:
        v = 0
        for c in reversed(tuple(cs)):
            v = v * self.p + c % self.p
        return v

    def _mul_slow(self, a: int, b: int) -> int:
        if self.n == 1:
            return a * b % self.p
        ca, cb = self.coeffs(a), self.coeffs(b)
        prod = [0] * (2 * self.n - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] = (prod[i + j] + x * y) % self.p
        return self.from_coeffs(_poly_mod_p(prod, list(self.modulus), self.p))

    def _build_tables(self):
        q = self.q
        self._add = [[self.from_coeffs(x + y for x, y in zip(self.coeffs(a), self.coeffs(b)))
                      for b in range(q)] for a in range(q)]
        self._neg = [self.from_coeffs(-c for c in self.coeffs(a)) for a in range(q)]
        self._mul = [[self._mul_slow(a, b) for b in range(q)] for a in range(q)]
        self._inv = [0] * q
        for a in range(1, q):
            self._inv[a] = next(b for b in range(1, q) if self._mul[a][b] == 1)

    # arithmetic on encoded ints
    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("zero has no multiplicative inverse")
        return self._inv[a]

    def div(self, a: int, b: int) -> int:
        return self._mul[a][self.inv(b)]

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        r = 1
        while e:
            if e & 1:
                r = self._mul[r][a]
            a = self._mul[a][a]
            e >>= 1
        return r

    def order(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("zero has no multiplicative order")
        k, x = 1, a
        while x != 1:
            x = self._mul[x][a]
            k += 1
        return k

    def primitive_element(self) -> int:
        """Least nonzero element of multiplicative order q - 1."""
        return next(a for a in range(1, self.q) if self.order(a) == self.q - 1)

    def quadratic_residues(self) -> frozenset[int]:
        if self.p == 2:
            raise EvenOrder(f"GF({self.q}) has even order")
        return frozenset(self._mul[x][x] for x in range(1, self.q))

    def element(self, value) -> "FieldElement":
        if isinstance(value, (tuple, list)):
            value = self.from_coeffs(value)
        return FieldElement(self, int(value) % self.q if self.n == 1 else int(value))

    def elements(self) -> list["FieldElement"]:
        return [FieldElement(self, a) for a in range(self.q)]


@lru_cache(maxsize=None)
def field(q: int) -> GaloisField:
    return GaloisField(q)


class FieldElement:
    """Operator-friendly wrapper around an encoded element of a :class:`GaloisField`."""

    __slots__ = ("field", "value")

    def __init__(self, f: GaloisField, value: int):
        if not 0 <= value < f.q:
            raise FieldError(f"{value} is not an element of GF({f.q})")
        self.field = f
        self.value = value

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.value)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field.q != self.field.q:
                raise FieldError("elements belong to different fields")
            return other.value
        return self.field.element(other).value

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._other(other)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inv(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field.q == other.field.q and self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __lt__(self, other):
        return self.value < self._other(other)

    def __hash__(self):
        return hash((self.field.q, self.value))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"GF({self.field.q})[{self.value}]"
