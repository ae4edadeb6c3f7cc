"""Projective point enumeration, monomial bases, form evaluation."""

import random

import pytest

from varcodes.errors import DimensionMismatch
from varcodes.gf import GF
from varcodes.projgeom import (
    Form,
    canonicalize,
    enumerate_hyperplanes,
    enumerate_monomials,
    enumerate_projective_points,
    evaluate_form,
    projective_point_count,
)


def test_p2_f2_points_and_order():
    pts = enumerate_projective_points(2, GF(2))
    assert len(pts) == 7
    assert pts[0] == (1, 0, 0)
    # affine block first, then the hyperplane at infinity blocks
    assert pts[4] == (0, 1, 0)
    assert pts[-1] == (0, 0, 1)


def test_p1_f4_count():
    assert len(enumerate_projective_points(1, GF(2, 2))) == 5


def test_affine_only_block():
    pts = enumerate_projective_points(2, GF(2), affine_only=True)
    assert len(pts) == 4
    assert all(p[0] == 1 for p in pts)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_point_counts_and_non_proportionality(q, m):
    if q**m > 10000:
        pytest.skip("desk-scale sweep only")
    F = GF.from_order(q)
    pts = enumerate_projective_points(m, F)
    assert len(pts) == projective_point_count(m, q)
    canon = {canonicalize(F, p) for p in pts}
    assert len(canon) == len(pts)
    assert all(p == canonicalize(F, p) for p in pts)


def test_monomial_count_examples():
    assert len(enumerate_monomials(2, 2)) == 6
    for m in range(1, 5):
        assert len(enumerate_monomials(m, 1)) == m + 1
    assert len(enumerate_monomials(3, 2)) == 10


def test_monomial_order_graded_lex():
    assert enumerate_monomials(2, 2) == [
        (2, 0, 0),
        (1, 1, 0),
        (1, 0, 1),
        (0, 2, 0),
        (0, 1, 1),
        (0, 0, 2),
    ]


def test_evaluate_linear_form():
    F = GF(2)
    f = Form.linear(F, (1, 0, 0))
    assert f.evaluate((1, 1, 1)) == 1


def test_evaluate_hermitian_membership():
    # x0^3 + x1^3 + x2^3 over GF(4) at (0:1:1): 1 + 1 = 0.
    F = GF(2, 2)
    f = Form(F, 2, 3, {(3, 0, 0): 1, (0, 3, 0): 1, (0, 0, 3): 1})
    assert f.evaluate((0, 1, 1)) == 0
    assert f.evaluate((1, 0, 0)) == 1


def test_evaluate_hyperbolic_vertex():
    F = GF(2)
    f = Form(F, 3, 2, {(1, 1, 0, 0): 1, (0, 0, 1, 1): 1})
    assert f.evaluate((1, 0, 0, 0)) == 0


def test_evaluate_dimension_mismatch():
    F = GF(2)
    f = Form.linear(F, (1, 0))
    with pytest.raises(DimensionMismatch):
        f.evaluate((1, 0, 0))


@pytest.mark.parametrize("q", [3, 4, 5])
def test_form_homogeneity(q):
    F = GF.from_order(q)
    rng = random.Random(q)
    monos = enumerate_monomials(2, 3)
    for _ in range(20):
        f = Form(
            F, 2, 3, {e: rng.randrange(1, F.q) for e in rng.sample(monos, 4)}
        )
        p = tuple(rng.randrange(F.q) for _ in range(3))
        if all(x == 0 for x in p):
            continue
        lam = rng.randrange(1, F.q)
        lp = tuple(F.mul(lam, x) for x in p)
        assert evaluate_form(f, lp) == F.mul(F.pow(lam, 3), evaluate_form(f, p))


def test_hyperplane_counts():
    assert len(enumerate_hyperplanes(2, GF(2))) == 7
    assert len(enumerate_hyperplanes(1, GF(3))) == 4
    assert len(enumerate_hyperplanes(3, GF(2, 2))) == 85


@pytest.mark.parametrize("q", [2, 3, 5])
@pytest.mark.parametrize("m", [1, 2, 3])
def test_every_hyperplane_has_sigma_points(q, m):
    F = GF.from_order(q)
    pts = enumerate_projective_points(m, F)
    expected = projective_point_count(m - 1, q)
    for hp in enumerate_hyperplanes(m, F):
        assert sum(1 for p in pts if hp.evaluate(p) == 0) == expected


def test_form_partial_derivative():
    # d/dx1 of x0*x1^2 + x1*x2^2 over GF(3) is 2*x0*x1 + x2^2.
    F = GF(3)
    f = Form(F, 2, 3, {(1, 2, 0): 1, (0, 1, 2): 1})
    df = f.partial(1)
    assert df.terms == {(1, 1, 0): 2, (0, 0, 2): 1}
    # char divides the exponent: d/dx0 of x0^3 vanishes
    g = Form(F, 2, 3, {(3, 0, 0): 1})
    assert g.partial(0).is_zero()


def test_form_serialization_round_trip():
    F = GF(2, 2)
    f = Form(F, 2, 2, {(1, 1, 0): 2, (0, 0, 2): 3})
    assert Form.from_dict(F, f.to_dict()).terms == f.terms
