"""Exact arithmetic in GF(q), q = p^e.

Elements are plain ints in {0, ..., q-1}: the base-p digits of the index are
the polynomial-basis coordinates (constant term first).  Index 0 is the
additive identity.  Multiplication, inversion and powers go through
generator-power (exp/log) tables; addition is digitwise mod p.

The modulus is canonical: the monic irreducible of degree e over GF(p)
whose coefficient vector, read as a base-p integer with the constant term
least significant, is smallest (the constant term is kept nonzero so that
e = 1 yields x + 1).  This reproduces the conventional small-field tables
(x^2+x+1, x^3+x+1, x^4+x+1, ...).  The generator is the smallest element
index of multiplicative order q - 1.  Both choices make every downstream
enumeration bit-reproducible.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import (
    DegreeZero,
    DivisionByZero,
    FieldTooLarge,
    InvalidParams,
    NotPrime,
    NotQuadraticExtension,
)

DEFAULT_MAX_ORDER = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n >= 1."""
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


def _poly_mod(num: list[int], den: list[int], p: int) -> list[int]:
    """Remainder of num by monic den, coefficients low-degree first, mod p."""
    num = list(num)
    dd = len(den) - 1
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i] % p
        if c:
            for j in range(dd + 1):
                num[i - dd + j] = (num[i - dd + j] - c * den[j]) % p
    return [c % p for c in num[:dd]]


def _poly_is_irreducible(poly: list[int], p: int) -> bool:
    """Trial division of a monic poly by all monic polys of degree <= deg/2."""
    deg = len(poly) - 1
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for idx in range(p**d):
            div = [(idx // p**j) % p for j in range(d)] + [1]
            if not any(_poly_mod(poly, div, p)):
                return False
    return True


def _canonical_modulus(p: int, e: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree e in base-p integer order."""
    for idx in range(p**e):
        coeffs = [(idx // p**j) % p for j in range(e)]
        if coeffs[0] == 0:
            continue
        poly = coeffs + [1]
        if _poly_is_irreducible(poly, p):
            return tuple(poly)
    raise AssertionError(f"no irreducible polynomial of degree {e} over GF({p})")


class GF:
    """The finite field GF(p^e) with canonical modulus and generator tables.

    Immutable after construction; all operations are pure.
    """

    def __init__(self, p: int, e: int = 1, max_order: int = DEFAULT_MAX_ORDER):
        if not is_prime(p):
            raise NotPrime(f"characteristic {p} is not prime")
        if e < 1:
            raise DegreeZero(f"extension degree must be >= 1, got {e}")
        q = p**e
        if q > max_order:
            raise FieldTooLarge(f"p^e = {q} exceeds the cap {max_order}")
        self.p = p
        self.e = e
        self.q = q
        self.modulus = _canonical_modulus(p, e)

        self.generator = self._find_generator()
        self.exp = [0] * max(q - 1, 1)
        self.log = [0] * q  # log[0] unused
        x = 1
        for i in range(q - 1):
            self.exp[i] = x
            self.log[x] = i
            x = self._mul_raw(x, self.generator)
        assert x == 1, "generator order check failed"
        assert sorted(self.exp[: q - 1]) == list(range(1, q)), (
            "exp table is not a bijection onto the nonzero elements"
        )
        self._np_vec = None

    # -- construction helpers ------------------------------------------------

    def _digits(self, a: int) -> list[int]:
        return [(a // self.p**i) % self.p for i in range(self.e)]

    def _from_digits(self, digits: list[int]) -> int:
        return sum((d % self.p) * self.p**i for i, d in enumerate(digits))

    def _mul_raw(self, a: int, b: int) -> int:
        """Polynomial-basis product, no tables (used to build the tables)."""
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * self.e - 1)
        for i, ca in enumerate(da):
            if ca:
                for j, cb in enumerate(db):
                    prod[i + j] = (prod[i + j] + ca * cb) % self.p
        return self._from_digits(_poly_mod(prod, list(self.modulus), self.p))

    def _pow_raw(self, a: int, n: int) -> int:
        r = 1
        while n:
            if n & 1:
                r = self._mul_raw(r, a)
            a = self._mul_raw(a, a)
            n >>= 1
        return r

    def _find_generator(self) -> int:
        n = self.q - 1
        if n == 1:
            return 1
        cofactors = [n // f for f in prime_factors(n)]
        for g in range(1, self.q):
            if all(self._pow_raw(g, c) != 1 for c in cofactors):
                return g
        raise AssertionError("no generator found")  # impossible: F_q* is cyclic

    # -- arithmetic ----------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        return self._from_digits(
            [x + y for x, y in zip(self._digits(a), self._digits(b))]
        )

    def neg(self, a: int) -> int:
        if self.e == 1:
            return (-a) % self.p
        return self._from_digits([-x for x in self._digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("0 has no multiplicative inverse")
        return self.exp[(-self.log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if a == 0:
            if n == 0:
                return 1
            if n < 0:
                raise DivisionByZero("0 has no negative powers")
            return 0
        return self.exp[(self.log[a] * n) % (self.q - 1)]

    def conjugate(self, a: int, r: int) -> int:
        """The involution a -> a^r of GF(r^2); requires q = r^2."""
        if self.q != r * r:
            raise NotQuadraticExtension(f"GF({self.q}) is not GF({r}^2)")
        return self.pow(a, r)

    def scalar(self, n: int) -> int:
        """Image of the integer n in the prime subfield."""
        return n % self.p

    # -- enumeration & serialization ------------------------------------------

    def elements(self) -> range:
        return range(self.q)

    def nonzero(self) -> range:
        return range(1, self.q)

    def vec(self, a: int) -> tuple[int, ...]:
        """Polynomial-basis coordinates of a over GF(p), constant term first."""
        return tuple(self._digits(a))

    def mul_matrix(self, c: int) -> list[list[int]]:
        """e x e matrix over GF(p) of multiplication by c: vec(c*x) = M @ vec(x)."""
        cols = [self._digits(self.mul(c, self.p**s)) for s in range(self.e)]
        return [[cols[s][t] for s in range(self.e)] for t in range(self.e)]

    @property
    def vec_table(self):
        """(q, e) int array of polynomial-basis digits, built lazily."""
        if self._np_vec is None:
            import numpy as np

            self._np_vec = np.array(
                [self._digits(a) for a in range(self.q)], dtype=np.int64
            )
        return self._np_vec

    def to_dict(self) -> dict:
        return {"p": self.p, "e": self.e, "q": self.q, "modulus": list(self.modulus)}

    @classmethod
    def from_dict(cls, d: dict) -> "GF":
        fld = field(int(d["p"]), int(d["e"]))
        if "modulus" in d and tuple(d["modulus"]) != fld.modulus:
            raise InvalidParams(
                f"stored modulus {d['modulus']} is not the canonical one"
            )
        return fld

    @classmethod
    def from_order(cls, q: int) -> "GF":
        """GF(q) for a prime power q, factoring q as p^e."""
        for p in range(2, q + 1):
            if is_prime(p) and q % p == 0:
                e = 0
                m = q
                while m % p == 0:
                    m //= p
                    e += 1
                if m != 1:
                    raise NotPrime(f"{q} is not a prime power")
                return field(p, e)
        raise NotPrime(f"{q} is not a prime power")

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.e})" if self.e > 1 else f"GF({self.p})"

    def __eq__(self, other) -> bool:
        return isinstance(other, GF) and (self.p, self.e) == (other.p, other.e)

    def __hash__(self) -> int:
        return hash((self.p, self.e))


@lru_cache(maxsize=None)
def field(p: int, e: int = 1) -> GF:
    """Cached GF(p^e) constructor; repeated calls return the same object."""
    return GF(p, e)


def field_from_order(q: int) -> GF:
    return GF.from_order(q)
