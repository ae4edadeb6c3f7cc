"""Closed-form expected code parameters per variety family.

Each prediction is tagged with the status of its d value: exact, a lower
bound, or a two-value dichotomy (degree-6 blow-ups, where special point
configurations with an Eckardt point lose 1).  Requests outside a stated
range of validity are refused rather than extrapolated.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Any

from . import bounds
from .errors import NotQuadraticExtension, OutOfTheoremRange, ParityMismatch
from .varieties import VarietyDescriptor

EXACT = "exact"
LOWER_BOUND = "lower-bound"
DICHOTOMY = "dichotomy"
UNKNOWN = "unknown"


@dataclass
class Prediction:
    n: int
    k: int
    d: int | None
    d_status: str
    anchor: str
    d_options: tuple[int, int] | None = None
    weights: tuple[int, ...] | None = None
    k_status: str = "exact"
    extras: dict[str, Any] = dc_field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {
            "n": self.n,
            "k": self.k,
            "k_status": self.k_status,
            "d": self.d,
            "d_status": self.d_status,
            "anchor": self.anchor,
        }
        if self.d_options is not None:
            out["d_options"] = list(self.d_options)
        if self.weights is not None:
            out["weights"] = sorted(self.weights)
        if self.extras:
            out["extras"] = self.extras
        return out


def _require(cond: bool, hypothesis: str):
    if not cond:
        raise OutOfTheoremRange(
            f"outside the stated range of validity: needs {hypothesis}",
            hypothesis=hypothesis,
        )


def predict(desc: VarietyDescriptor, h: int, q: int) -> Prediction:
    """Expected (n, k, d) of the degree-h code of a descriptor over GF(q)."""
    fam = desc.family

    if fam == "projective_space":
        _require(not desc.params.get("affine", False), "the full projective point set")
        m = desc["m"]
        _require(1 <= h <= q, "1 <= h <= q")
        return Prediction(
            bounds.sigma(m, q),
            bounds.binomial(m + h, h),
            (q + 1 - h) * q ** (m - 1),
            EXACT,
            "projective Reed-Muller parameters (Lachaud, Serre)",
        )

    if fam == "quadric":
        _require("w" in desc.params, "a character w (classify explicit forms first)")
        m, w = desc["m"], desc["w"]
        if w == 1 and m % 2 != 0:
            raise ParityMismatch("parabolic quadrics need even m")
        if w in (0, 2) and m % 2 != 1:
            raise ParityMismatch("hyperbolic and elliptic quadrics need odd m")
        n = bounds.quadric_count(m, w, q)
        if h == 1:
            if w == 2:
                d = q ** (m - 1)
            elif w == 1:
                d = q ** (m - 1) - q ** ((m - 2) // 2)
            else:
                d = q ** (m - 1) - q ** ((m - 1) // 2)
            return Prediction(
                n, m + 1, d, EXACT, "smooth quadric code parameters (Wolfmann)"
            )
        if h == 2:
            k = bounds.binomial(m + 2, 2) - 1
            return Prediction(
                n,
                k,
                None,
                UNKNOWN,
                "quadric degree-2 code dimension bound",
                k_status="upper-bound",
            )
        _require(False, "h in {1, 2} for quadric codes")

    if fam == "hermitian":
        m, r = desc["m"], desc["r"]
        if q != r * r:
            raise NotQuadraticExtension(f"GF({q}) is not GF({r}^2)")
        n = bounds.hermitian_count(m, r)
        if h == 1:
            d = r ** (2 * m - 1) - (r ** (m - 1) if m % 2 == 0 else 0)
            weights = (r ** (2 * m - 1) + (-1) ** (m - 1) * r ** (m - 1), r ** (2 * m - 1))
            return Prediction(
                n,
                m + 1,
                d,
                EXACT,
                "Hermitian hypersurface code parameters (Chakravarti)",
                weights=weights,
            )
        _require(m == 3, "m = 3 for degree-h Hermitian codes")
        _require(h < r + 1, "h < r + 1")
        report = bounds.hermitian_ch_bound(n, h, r)
        return Prediction(
            n,
            bounds.binomial(4 + h, h),
            report.value,
            LOWER_BOUND,
            "Hermitian surface degree-h code parameters",
        )

    if fam == "grassmann":
        _require(h == 1, "h = 1 for Grassmannian codes")
        l, m = desc["l"], desc["m"]
        return Prediction(
            bounds.gaussian_binomial(m, l, q),
            bounds.binomial(m, l),
            q ** (l * (m - l)),
            EXACT,
            "Grassmannian code parameters (Nogin)",
            extras={"min_weight_words": bounds.grassmann_min_weight_words(l, m, q)},
        )

    if fam == "flag":
        _require(h == 1, "h = 1 for flag variety codes")
        m = desc["m"]
        return Prediction(
            bounds.flag_count(m, q),
            m * m - 1,
            q ** (2 * m - 3) - q ** (m - 2),
            EXACT,
            "point-hyperplane flag code parameters (Rodier)",
        )

    if fam == "del_pezzo":
        _require(h == 1, "h = 1 (anticanonical) for blow-up codes")
        _require(q > 4, "q > 4")
        l = desc["l"]
        _require(0 <= l <= 6, "0 <= l <= 6")
        n = q * q + q + 1 + l * q
        k = 10 - l
        table = {0: q * q - 2 * q, 1: q * q - 2 * q, 2: q * q - 2 * q,
                 3: q * q - 2 * q + 1, 4: q * q, 5: q * q + 2 * q}
        anchor = "Del Pezzo surface code parameters (Boguslavsky)"
        if l <= 5:
            return Prediction(n, k, table[l], EXACT, anchor)
        return Prediction(
            n,
            k,
            None,
            DICHOTOMY,
            anchor,
            d_options=(q * q + 4 * q, q * q + 4 * q + 1),
            extras={"eckardt_value": q * q + 4 * q},
        )

    if fam == "p1xp1":
        alpha, beta = desc["alpha"], desc["beta"]
        _require(0 <= alpha <= q and 0 <= beta <= q, "0 <= alpha, beta <= q")
        return Prediction(
            (q + 1) ** 2,
            (alpha + 1) * (beta + 1),
            (q + 1 - alpha) * (q + 1 - beta),
            EXACT,
            "biprojective product code parameters (Hansen)",
        )

    raise OutOfTheoremRange(
        f"no closed-form parameter theorem implemented for family {fam!r}",
        hypothesis="family with stated exact parameters",
    )


def applicable_bounds(
    desc: VarietyDescriptor, h: int, q: int, n: int
) -> list[bounds.BoundReport]:
    """Every lower-bound calculator that applies to this code, evaluated.

    n must be the actual block length (for these families, the full set of
    rational points, which the section-count bounds assume).
    """
    fam = desc.family
    out: list[bounds.BoundReport] = []
    if fam == "projective_space" and h == 1 and not desc.params.get("affine", False):
        out.append(bounds.elementary_bound(n, 1, desc["m"], q))
    if fam == "quadric" and h == 1:
        m = desc["m"]
        if 2 < q + 1:
            out.append(bounds.elementary_bound(n, 2, m - 1, q))
        if m >= 3:
            out.append(bounds.lachaud_section_bounds(q, m, 2, n))
    if fam == "hermitian":
        m, r = desc["m"], desc["r"]
        if h == 1 and r + 1 < q + 1:
            out.append(bounds.elementary_bound(n, r + 1, m - 1, q))
        if h == 1 and m >= 3:
            out.append(bounds.lachaud_section_bounds(q, m, r + 1, n))
        if m == 3:
            out.append(bounds.sorensen_bound(n, h, r))
            if h < r + 1:
                out.append(bounds.hermitian_ch_bound(n, h, r))
    if fam == "grassmann" and h == 1 and (desc["l"], desc["m"]) == (2, 4):
        # G(2,4) is a quadric hypersurface in its ambient P^5.
        out.append(bounds.elementary_bound(n, 2, 4, q))
    if fam == "p1xp1":
        alpha, beta = desc["alpha"], desc["beta"]
        if 0 <= beta <= q + 1 and alpha <= q + 1:
            out.append(
                bounds.covering_family_bound(n, q + 1, q + 1, beta, alpha)
            )
    if fam == "complete_intersection":
        degrees = [int(f["degree"]) for f in desc["forms"]]
        s = sum(degrees) - len(degrees) - 1
        if 1 <= h <= s:
            out.append(bounds.cayley_bacharach_bound(degrees, h))
    return out


def lower_bound_value(report: bounds.BoundReport) -> int:
    """The d lower bound asserted by a report, whatever its value shape."""
    v = report.value
    if isinstance(v, dict):
        if "d_lower" in v:
            return v["d_lower"]
        if "cayley_bacharach" in v:
            return v["cayley_bacharach"]
        raise ValueError(f"report {report.name} carries no d lower bound")
    return int(v)
