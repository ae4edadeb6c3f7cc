"""Evaluation point sets for each variety family.

Every construction is deterministic: points come out in the fixed
enumeration order of projgeom, subspaces in pivot-pattern order, blown-up
directions in P^1 order.  A PointSet holds the ordered evaluation columns
(projective coordinate vectors) together with per-point origin labels.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field as dc_field
from itertools import combinations, product
from typing import Any, Iterator

from . import bounds
from .errors import (
    AmbiguousClassification,
    DimensionMismatch,
    EmptyPolytope,
    GeneralPositionFailure,
    InvalidAlpha,
    InvalidParams,
    NotQuadratic,
    NotQuadraticExtension,
    ParityMismatch,
)
from .gf import GF
from .linalg import Matrix, det, maximal_minors, rank, rank_and_kernel
from .projgeom import (
    Form,
    Point,
    canonicalize,
    enumerate_monomials,
    enumerate_projective_points,
    monomial_name,
)


def point_label(p: tuple[int, ...]) -> str:
    return "(" + ":".join(str(c) for c in p) + ")"


@dataclass
class PointSet:
    """Ordered, labeled evaluation columns in a fixed ambient dimension."""

    field: GF
    ambient: int
    points: list[tuple[int, ...]]
    labels: list[str]

    def __len__(self) -> int:
        return len(self.points)

    def __post_init__(self):
        if len(self.labels) != len(self.points):
            raise DimensionMismatch("labels and points must have equal length")

    def proportional_pairs(self) -> bool:
        """True if two columns are projectively equal (invariant violation)."""
        seen = set()
        for p in self.points:
            c = canonicalize(self.field, p)
            if c in seen:
                return True
            seen.add(c)
        return False

    def to_dict(self) -> dict:
        return {
            "field": self.field.to_dict(),
            "ambient": self.ambient,
            "n": len(self.points),
            "points": [list(p) for p in self.points],
            "labels": self.labels,
        }


@dataclass
class VarietyDescriptor:
    """Family tag plus parameters, with a canonical JSON encoding."""

    family: str
    params: dict[str, Any] = dc_field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"family": self.family, **self.params}

    @classmethod
    def from_dict(cls, d: dict) -> "VarietyDescriptor":
        d = dict(d)
        try:
            family = d.pop("family")
        except KeyError:
            raise InvalidParams("descriptor needs a 'family' key") from None
        return cls(family, d)

    def label(self) -> str:
        inner = ",".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        return f"{self.family}({inner})"

    def __getitem__(self, key: str):
        try:
            return self.params[key]
        except KeyError:
            raise InvalidParams(
                f"{self.family} descriptor is missing parameter {key!r}"
            ) from None


# -- quadrics -------------------------------------------------------------------


def irreducible_binary_quadratic_coeff(fld: GF) -> int:
    """Smallest c (index order) with x^2 + x + c irreducible over GF(q)."""
    for c in fld.elements():
        if all(fld.add(fld.add(fld.mul(t, t), t), c) != 0 for t in fld.elements()):
            return c
    raise AssertionError("no irreducible quadratic x^2 + x + c exists")


def quadric_normal_form(m: int, w: int, fld: GF) -> Form:
    """Canonical nondegenerate quadric of character w in P^m.

    w = 1 (parabolic, m even): x0^2 + x1*x2 + ...
    w = 2 (hyperbolic, m odd):  x0*x1 + x2*x3 + ...
    w = 0 (elliptic, m odd):    x0^2 + x0*x1 + c*x1^2 + x2*x3 + ...
    """
    if w not in (0, 1, 2):
        raise InvalidParams(f"character must be 0, 1 or 2, got {w}")
    if w == 1 and m % 2 != 0:
        raise ParityMismatch("parabolic quadrics need even m")
    if w in (0, 2) and m % 2 != 1:
        raise ParityMismatch("hyperbolic and elliptic quadrics need odd m")

    def e2(i: int, j: int) -> tuple[int, ...]:
        return tuple(
            (2 if k == i else 0) if i == j else (1 if k in (i, j) else 0)
            for k in range(m + 1)
        )

    terms: dict[tuple[int, ...], int] = {}
    if w == 1:
        terms[e2(0, 0)] = 1
        start = 1
    elif w == 2:
        terms[e2(0, 1)] = 1
        start = 2
    else:
        c = irreducible_binary_quadratic_coeff(fld)
        terms[e2(0, 0)] = 1
        terms[e2(0, 1)] = 1
        terms[e2(1, 1)] = c
        start = 2
    for i in range(start, m, 2):
        terms[e2(i, i + 1)] = 1
    return Form(fld, m, 2, terms)


def _quadric_rank(f: Form) -> int:
    """Rank of a quadratic form: codimension of its translation-invariant space."""
    fld = f.field
    n = f.ambient + 1

    def coeff2(i: int, j: int) -> int:
        if i == j:
            expo = tuple(2 if k == i else 0 for k in range(n))
        else:
            expo = tuple(1 if k in (i, j) else 0 for k in range(n))
        return f.coefficient(expo)

    # Polar form b(x, y) = f(x + y) - f(x) - f(y).
    gram = [
        [
            coeff2(i, j)
            if i != j
            else fld.mul(fld.scalar(2), coeff2(i, i))
            for j in range(n)
        ]
        for i in range(n)
    ]
    _, radical = rank_and_kernel(Matrix(fld, gram))
    if fld.p != 2:
        # In odd characteristic f vanishes on the radical automatically.
        return n - radical.nrows
    # Characteristic 2: f restricted to the radical is Frobenius-semilinear,
    # so its kernel there has codimension 0 or 1.
    values = [f.evaluate(tuple(v)) for v in radical.rows]
    dim_t = radical.nrows - (1 if any(values) else 0)
    return n - dim_t


def classify_quadric(f: Form) -> tuple[int, int]:
    """(rank, character) of a nonzero degree-2 form.

    The rank comes from the translation-invariant subspace; the character
    from matching the exhaustive point count of V(f) against the closed-form
    cone counts, with a defensive uniqueness check.
    """
    if f.degree != 2 or f.is_zero():
        raise NotQuadratic("classification needs a nonzero quadratic form")
    fld = f.field
    m = f.ambient
    rho = _quadric_rank(f)
    measured = sum(
        1 for p in enumerate_projective_points(m, fld) if f.evaluate(p) == 0
    )
    candidates = [1] if rho % 2 == 1 else [0, 2]
    matches = [
        w
        for w in candidates
        if bounds.quadric_count(m, w, fld.q, rho) == measured
    ]
    if len(matches) != 1:
        raise AmbiguousClassification(
            f"rank {rho}, {measured} points matches characters {matches}"
        )
    return rho, matches[0]


def hypersurface_points(f: Form) -> PointSet:
    """All canonical points of V(f) in enumeration order."""
    fld = f.field
    pts = [
        p for p in enumerate_projective_points(f.ambient, fld) if f.evaluate(p) == 0
    ]
    return PointSet(fld, f.ambient, pts, [point_label(p) for p in pts])


def hermitian_form(m: int, r: int, fld: GF) -> Form:
    """x0^(r+1) + ... + xm^(r+1) over GF(r^2)."""
    if fld.q != r * r:
        raise NotQuadraticExtension(f"GF({fld.q}) is not GF({r}^2)")
    terms = {
        tuple((r + 1) if k == i else 0 for k in range(m + 1)): 1
        for i in range(m + 1)
    }
    return Form(fld, m, r + 1, terms)


# -- Grassmannians, Schubert varieties, flags ------------------------------------


def subspace_representatives(l: int, m: int, fld: GF) -> Iterator[Matrix]:
    """RREF bases of all l-dimensional subspaces of F_q^m, by pivot pattern."""
    if not 1 <= l < m:
        raise InvalidParams(f"need 1 <= l < m, got l={l}, m={m}")
    q = fld.q
    for pivots in combinations(range(m), l):
        free = [
            (i, c)
            for i in range(l)
            for c in range(m)
            if c > pivots[i] and c not in pivots
        ]
        for values in product(range(q), repeat=len(free)):
            rows = [[0] * m for _ in range(l)]
            for i, pc in enumerate(pivots):
                rows[i][pc] = 1
            for (i, c), v in zip(free, values):
                rows[i][c] = v
            yield Matrix(fld, rows)


def grassmann_points(l: int, m: int, fld: GF) -> PointSet:
    """One canonical maximal-minor coordinate vector per l-subspace of F_q^m."""
    pts = []
    labels = []
    for rep in subspace_representatives(l, m, fld):
        vec = tuple(maximal_minors(rep))
        assert next(x for x in vec if x) == 1, "pivot minor should lead"
        pts.append(vec)
        labels.append("span" + str(rep.rows))
    expected = bounds.gaussian_binomial(m, l, fld.q)
    assert len(pts) == expected, f"{len(pts)} subspaces, expected {expected}"
    return PointSet(fld, len(pts[0]) - 1, pts, labels)


def schubert_points(l: int, m: int, alpha: list[int], fld: GF) -> PointSet:
    """Subset of the Grassmannian satisfying dim(W meet A_alpha_i) >= i."""
    alpha = list(alpha)
    if len(alpha) != l or any(
        not 1 <= a <= m for a in alpha
    ) or any(a > b for a, b in zip(alpha, alpha[1:])):
        raise InvalidAlpha(f"need 1 <= a1 <= ... <= a{l} <= {m}, got {alpha}")

    def satisfies(rep: Matrix) -> bool:
        for i, a in enumerate(alpha, start=1):
            flag_rows = [
                [1 if c == j else 0 for c in range(m)] for j in range(a)
            ]
            joint = rank(Matrix(fld, rep.rows + flag_rows))
            if l + a - joint < i:
                return False
        return True

    pts = []
    labels = []
    for rep in subspace_representatives(l, m, fld):
        if satisfies(rep):
            pts.append(tuple(maximal_minors(rep)))
            labels.append("span" + str(rep.rows))
    return PointSet(fld, bounds.binomial(m, l) - 1, pts, labels)


def flag_points(m: int, fld: GF) -> PointSet:
    """Incident (point, hyperplane) pairs of P^(m-1), Segre-embedded.

    Coordinates z_ij = x_i * y_j for x the point, y the hyperplane
    coefficients; incidence makes the diagonal trace vanish.
    """
    if m < 2:
        raise InvalidParams(f"need m >= 2, got {m}")
    reps = enumerate_projective_points(m - 1, fld)
    pts = []
    labels = []
    for x in reps:
        for y in reps:
            acc = 0
            for xi, yi in zip(x, y):
                acc = fld.add(acc, fld.mul(xi, yi))
            if acc != 0:
                continue
            z = tuple(fld.mul(xi, yj) for xi in x for yj in y)
            pts.append(z)
            labels.append(f"P={point_label(x)} H={point_label(y)}")
    expected = bounds.flag_count(m, fld.q)
    assert len(pts) == expected, f"{len(pts)} flags, expected {expected}"
    return PointSet(fld, m * m - 1, pts, labels)


# -- Del Pezzo surfaces ----------------------------------------------------------


def _general_position_select(l: int, fld: GF) -> list[Point]:
    """First l points of P^2 in enumeration order that are in general position.

    Depth-first over the enumeration order (equals the plain greedy scan
    whenever that scan succeeds): no three collinear, no six on a conic.
    """
    candidates = enumerate_projective_points(2, fld)
    deg2 = enumerate_monomials(2, 2)

    def ok(chosen: list[Point], cand: Point) -> bool:
        for a, b in combinations(chosen, 2):
            if det(Matrix(fld, [list(a), list(b), list(cand)])) == 0:
                return False
        if len(chosen) == 5:
            rows = [
                [_monomial_value(fld, e, p) for e in deg2] for p in chosen
            ]
            _, ker = rank_and_kernel(Matrix(fld, rows))
            for conic_coeffs in ker.rows:
                conic = Form.from_coeff_vector(fld, deg2, list(conic_coeffs))
                if conic.evaluate(cand) == 0:
                    return False
        return True

    chosen: list[Point] = []

    def search(start: int) -> bool:
        if len(chosen) == l:
            return True
        for idx in range(start, len(candidates)):
            cand = candidates[idx]
            if ok(chosen, cand):
                chosen.append(cand)
                if search(idx + 1):
                    return True
                chosen.pop()
        return False

    if not search(0):
        raise GeneralPositionFailure(
            f"no {l} points of P^2(F_{fld.q}) in general position found"
        )
    return chosen


def _monomial_value(fld: GF, expo: tuple[int, ...], p: tuple[int, ...]) -> int:
    v = 1
    for x, e in zip(p, expo):
        if e:
            if x == 0:
                return 0
            v = fld.mul(v, fld.pow(x, e))
    return v


def delpezzo_points(l: int, fld: GF) -> tuple[PointSet, list[Form], list[Point]]:
    """Evaluation data for the blow-up of P^2 at l general points, q > 4.

    Returns the point set (columns of cubic-basis values: ordinary points of
    P^2 minus the base points, then q+1 directional columns per base point),
    the basis of the 10 - l cubics through the base points, and the base
    points themselves.  Whether the configuration carries an Eckardt point
    is only visible downstream, from the measured minimum distance.
    """
    if not 0 <= l <= 6:
        raise InvalidParams(f"need 0 <= l <= 6, got {l}")
    if fld.q <= 4:
        raise InvalidParams(f"need q > 4 for general position, got q = {fld.q}")
    base = _general_position_select(l, fld)
    cubics = enumerate_monomials(2, 3)
    if l:
        rows = [[_monomial_value(fld, e, p) for e in cubics] for p in base]
        r, ker = rank_and_kernel(Matrix(fld, rows))
        assert r == l, "base points failed to impose independent conditions"
        basis = [Form.from_coeff_vector(fld, cubics, list(v)) for v in ker.rows]
    else:
        basis = [Form.monomial(fld, e) for e in cubics]

    pts: list[tuple[int, ...]] = []
    labels: list[str] = []
    base_set = set(base)
    for p in enumerate_projective_points(2, fld):
        if p in base_set:
            continue
        pts.append(tuple(f.evaluate(p) for f in basis))
        labels.append(point_label(p))
    directions = enumerate_projective_points(1, fld)
    for bp in base:
        pivot = next(i for i, x in enumerate(bp) if x != 0)  # leading 1
        a, bcoord = [i for i in range(3) if i != pivot]
        grads = [(f.partial(a).evaluate(bp), f.partial(bcoord).evaluate(bp)) for f in basis]
        for u, v in directions:
            col = tuple(
                fld.add(fld.mul(u, ga), fld.mul(v, gb)) for ga, gb in grads
            )
            assert any(col), "anticanonical system failed to separate a direction"
            pts.append(col)
            labels.append(f"E{point_label(bp)} dir {point_label((u, v))}")
    q = fld.q
    assert len(pts) == q * q + q + 1 + l * q
    return PointSet(fld, len(basis) - 1, pts, labels), basis, base


# -- toric, complete intersection, P1 x P1 ----------------------------------------


def toric_points(
    s: int, lattice_points: list[tuple[int, ...]], fld: GF
) -> tuple[PointSet, list[Form], list[str]]:
    """Torus evaluation points plus the (homogenized) monomial basis.

    Evaluation points are the (q-1)^s points of the torus, embedded as
    (1 : t_1 : ... : t_s).  Each lattice point u gives the monomial t^u,
    homogenized to degree max(|u|) with a power of x0 (values on the
    embedded torus are unchanged since x0 = 1 there).
    """
    if s < 1:
        raise InvalidParams(f"need s >= 1, got {s}")
    if not lattice_points:
        raise EmptyPolytope("no lattice points supplied")
    reduced = []
    for u in lattice_points:
        u = tuple(int(x) for x in u)
        if len(u) != s:
            raise DimensionMismatch(f"lattice point {u} does not have {s} entries")
        reduced.append(tuple(x % (fld.q - 1) for x in u))
    degree = max(sum(u) for u in reduced)
    basis = []
    labels = []
    for u_orig, u in zip(lattice_points, reduced):
        expo = (degree - sum(u),) + u
        basis.append(Form.monomial(fld, expo))
        labels.append(f"t^{tuple(u_orig)}")
    pts = [(1,) + t for t in product(range(1, fld.q), repeat=s)]
    point_labels = [f"t={t[1:]}" for t in pts]
    return PointSet(fld, s, pts, point_labels), basis, labels


def complete_intersection_points(forms: list[Form]) -> PointSet:
    """Common zero locus of m hypersurfaces in P^m, with a degree-product check."""
    if not forms:
        raise InvalidParams("need at least one form")
    fld = forms[0].field
    m = forms[0].ambient
    if len(forms) != m:
        raise InvalidParams(
            f"a complete intersection in P^{m} needs exactly {m} forms, got {len(forms)}"
        )
    pts = [
        p
        for p in enumerate_projective_points(m, fld)
        if all(f.evaluate(p) == 0 for f in forms)
    ]
    expected = 1
    for f in forms:
        expected *= f.degree
    if len(pts) != expected:
        warnings.warn(
            f"zero locus has {len(pts)} points, degree product is {expected}: "
            "not a reduced complete intersection, Cayley-Bacharach bounds do not apply",
            stacklevel=2,
        )
    return PointSet(fld, m, pts, [point_label(p) for p in pts])


def product_p1p1_points(fld: GF) -> PointSet:
    """All (q+1)^2 pairs of P^1 points, coordinates concatenated."""
    line = enumerate_projective_points(1, fld)
    pts = []
    labels = []
    for a in line:
        for b in line:
            pts.append(a + b)
            labels.append(f"{point_label(a)}x{point_label(b)}")
    return PointSet(fld, 3, pts, labels)


def p1p1_basis(alpha: int, beta: int, fld: GF) -> tuple[list[Form], list[str]]:
    """Bidegree (alpha, beta) monomials as degree alpha+beta forms in 4 variables."""
    if alpha < 0 or beta < 0:
        raise InvalidParams("bidegrees must be nonnegative")
    basis = []
    labels = []
    for i in range(alpha + 1):
        for j in range(beta + 1):
            expo = (alpha - i, i, beta - j, j)
            basis.append(Form.monomial(fld, expo))
            labels.append(f"x0^{alpha - i}*x1^{i}*y0^{beta - j}*y1^{j}")
    return basis, labels


# -- descriptor dispatch -----------------------------------------------------------


def build_point_set(desc: VarietyDescriptor, fld: GF) -> PointSet:
    """Evaluation point set for a descriptor (basis-carrying families drop it)."""
    fam = desc.family
    if fam == "projective_space":
        m = desc["m"]
        pts = enumerate_projective_points(m, fld, desc.params.get("affine", False))
        return PointSet(fld, m, pts, [point_label(p) for p in pts])
    if fam == "quadric":
        if "form" in desc.params:
            f = Form.from_dict(fld, desc.params["form"])
            if f.degree != 2:
                raise NotQuadratic("quadric descriptor form must have degree 2")
        else:
            f = quadric_normal_form(desc["m"], desc["w"], fld)
        return hypersurface_points(f)
    if fam == "hermitian":
        return hypersurface_points(hermitian_form(desc["m"], desc["r"], fld))
    if fam == "grassmann":
        return grassmann_points(desc["l"], desc["m"], fld)
    if fam == "schubert":
        return schubert_points(desc["l"], desc["m"], desc["alpha"], fld)
    if fam == "flag":
        return flag_points(desc["m"], fld)
    if fam == "del_pezzo":
        return delpezzo_points(desc["l"], fld)[0]
    if fam == "toric":
        return toric_points(desc["s"], desc["lattice_points"], fld)[0]
    if fam == "complete_intersection":
        forms = [Form.from_dict(fld, fd) for fd in desc["forms"]]
        return complete_intersection_points(forms)
    if fam == "p1xp1":
        return product_p1p1_points(fld)
    raise InvalidParams(f"unknown variety family {fam!r}")
