"""Projective spaces over GF(q): point enumeration, monomials, forms.

Points are tuples of element indices in canonical form (first nonzero
coordinate equal to 1).  Enumeration order is fixed once and for all:
points grouped by the position of the leading 1 (so the affine x0 = 1
block comes first), ties broken lexicographically on the remaining
coordinates in element-index order.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product

from .errors import DimensionMismatch, InvalidParams
from .gf import GF

Point = tuple[int, ...]
Exponents = tuple[int, ...]


def projective_point_count(m: int, q: int) -> int:
    """#P^m(F_q) = q^m + ... + q + 1."""
    return sum(q**i for i in range(m + 1))


def enumerate_projective_points(
    m: int, fld: GF, affine_only: bool = False
) -> list[Point]:
    """Canonical representatives of P^m(F_q) in the fixed enumeration order.

    With affine_only, just the x0 = 1 block of size q^m (the complement of
    the hyperplane x0 = 0).
    """
    if m < 1:
        raise InvalidParams(f"ambient dimension must be >= 1, got {m}")
    q = fld.q
    points: list[Point] = []
    last_pivot = 0 if affine_only else m
    for pivot in range(last_pivot + 1):
        prefix = (0,) * pivot + (1,)
        for tail in product(range(q), repeat=m - pivot):
            points.append(prefix + tail)
    return points


def canonicalize(fld: GF, v: tuple[int, ...]) -> Point:
    """Scale a nonzero vector so its first nonzero coordinate is 1."""
    lead = next((x for x in v if x != 0), None)
    if lead is None:
        raise InvalidParams("cannot canonicalize the zero vector")
    if lead == 1:
        return tuple(v)
    inv = fld.inv(lead)
    return tuple(fld.mul(inv, x) for x in v)


def enumerate_monomials(m: int, h: int) -> list[Exponents]:
    """Exponent vectors of the C(m+h, h) degree-h monomials in x0..xm.

    Graded-lex order with x0 heaviest: x0^h first, xm^h last.
    """
    if m < 0 or h < 0:
        raise InvalidParams("need m >= 0 and h >= 0")

    def rec(nvars: int, deg: int):
        if nvars == 1:
            yield (deg,)
            return
        for e0 in range(deg, -1, -1):
            for rest in rec(nvars - 1, deg - e0):
                yield (e0,) + rest

    return list(rec(m + 1, h))


def monomial_name(expo: Exponents) -> str:
    parts = []
    for i, e in enumerate(expo):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) if parts else "1"


@dataclass
class Form:
    """Homogeneous polynomial over GF(q), sparse exponent-vector terms.

    terms maps exponent tuples (length ambient + 1, entries summing to the
    degree) to nonzero coefficients.
    """

    field: GF
    ambient: int
    degree: int
    terms: dict[Exponents, int] = dc_field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for expo, c in self.terms.items():
            expo = tuple(expo)
            if len(expo) != self.ambient + 1:
                raise DimensionMismatch(
                    f"exponent vector {expo} does not have {self.ambient + 1} entries"
                )
            if sum(expo) != self.degree:
                raise InvalidParams(
                    f"term {expo} has degree {sum(expo)}, form has degree {self.degree}"
                )
            if not 0 <= c < self.field.q:
                raise InvalidParams(f"coefficient {c} is not an element index")
            if c != 0:
                clean[expo] = c
        self.terms = clean

    @classmethod
    def monomial(cls, fld: GF, expo: Exponents, coeff: int = 1) -> "Form":
        return cls(fld, len(expo) - 1, sum(expo), {tuple(expo): coeff})

    @classmethod
    def linear(cls, fld: GF, coeffs: tuple[int, ...]) -> "Form":
        m = len(coeffs) - 1
        terms = {}
        for i, c in enumerate(coeffs):
            if c:
                expo = tuple(1 if j == i else 0 for j in range(m + 1))
                terms[expo] = c
        return cls(fld, m, 1, terms)

    @classmethod
    def from_coeff_vector(
        cls, fld: GF, monomials: list[Exponents], coeffs: list[int]
    ) -> "Form":
        terms = {e: c for e, c in zip(monomials, coeffs) if c}
        degree = sum(monomials[0]) if monomials else 0
        return cls(fld, len(monomials[0]) - 1, degree, terms)

    def evaluate(self, point: tuple[int, ...]) -> int:
        F = self.field
        if len(point) != self.ambient + 1:
            raise DimensionMismatch(
                f"point has {len(point)} coordinates, form expects {self.ambient + 1}"
            )
        total = 0
        for expo, c in self.terms.items():
            v = c
            for x, e in zip(point, expo):
                if e:
                    if x == 0:
                        v = 0
                        break
                    v = F.mul(v, F.pow(x, e))
            total = F.add(total, v)
        return total

    def coefficient(self, expo: Exponents) -> int:
        return self.terms.get(tuple(expo), 0)

    def is_zero(self) -> bool:
        return not self.terms

    def scaled(self, c: int) -> "Form":
        F = self.field
        return Form(
            F, self.ambient, self.degree, {e: F.mul(c, v) for e, v in self.terms.items()}
        )

    def plus(self, other: "Form") -> "Form":
        if (self.ambient, self.degree) != (other.ambient, other.degree):
            raise DimensionMismatch("can only add forms of equal ambient and degree")
        F = self.field
        terms = dict(self.terms)
        for e, v in other.terms.items():
            terms[e] = F.add(terms.get(e, 0), v)
        return Form(F, self.ambient, self.degree, terms)

    def partial(self, i: int) -> "Form":
        """Formal partial derivative with respect to x_i (degree drops by 1)."""
        F = self.field
        terms: dict[Exponents, int] = {}
        for expo, c in self.terms.items():
            if expo[i] == 0:
                continue
            coeff = F.mul(c, F.scalar(expo[i]))
            if coeff == 0:
                continue
            new = list(expo)
            new[i] -= 1
            key = tuple(new)
            terms[key] = F.add(terms.get(key, 0), coeff)
        return Form(F, self.ambient, max(self.degree - 1, 0), terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for expo in sorted(self.terms, reverse=True):
            c = self.terms[expo]
            name = monomial_name(expo)
            if name == "1":
                parts.append(str(c))
            elif c == 1:
                parts.append(name)
            else:
                parts.append(f"{c}*{name}")
        return " + ".join(parts)

    def to_dict(self) -> dict:
        return {
            "ambient": self.ambient,
            "degree": self.degree,
            "terms": [[list(e), c] for e, c in sorted(self.terms.items(), reverse=True)],
        }

    @classmethod
    def from_dict(cls, fld: GF, d: dict) -> "Form":
        return cls(
            fld,
            int(d["ambient"]),
            int(d["degree"]),
            {tuple(map(int, e)): int(c) for e, c in d["terms"]},
        )


def evaluate_form(f: Form, point: tuple[int, ...]) -> int:
    return f.evaluate(point)


def enumerate_hyperplanes(m: int, fld: GF) -> list[Form]:
    """One canonical linear form per hyperplane of P^m, dual enumeration order."""
    return [Form.linear(fld, coeffs) for coeffs in enumerate_projective_points(m, fld)]
