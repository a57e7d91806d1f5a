"""Independent, gcd-based checks on curve parametrizations.

Nothing here touches resultants: incidence with a plane is decided by the
gcd of the two contracted forms, base points by the iterated gcd of the
components, and the degree of the map onto its image by counting the
distinct roots of fiber polynomials over sampled image points.  This gives
a second algorithmic route against which the biform construction is
cross-validated.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .curves import CurveMap, Plane
from .polynomial import BinaryForm, form_gcd, form_gcd_all, _int_list, _int_poly_gcd, _deg, _split_monomial

__all__ = ["CurveCheck", "base_locus_free", "incident_oracle", "map_degree", "check_curve"]


def base_locus_free(f: CurveMap) -> bool:
    """True iff the components share no projective root."""
    return form_gcd_all(f.components).degree == 0


def _contract(f: CurveMap, covector) -> BinaryForm:
    acc = BinaryForm.zero(f.d)
    for c, comp in zip(covector, f.components):
        if c:
            acc = acc + c * comp
    return acc


def incident_oracle(f: CurveMap, plane: Plane) -> bool:
    """Does the image curve meet the plane?  Decided by a binary-form gcd.

    The contractions h1 = <f, u> and h2 = <f, v> vanish simultaneously at a
    parameter exactly when the image point lies on the plane, so the curve
    meets the plane iff gcd(h1, h2) has a root.  A contraction that is
    identically zero means the curve lies inside the corresponding
    hyperplane, and any nonconstant form has a root, so those cases are
    incident outright.
    """
    if not base_locus_free(f):
        raise ValueError("parametrization has base locus")
    h1 = _contract(f, plane.u)
    h2 = _contract(f, plane.v)
    if h1.is_zero or h2.is_zero:
        return True
    return form_gcd(h1, h2).degree >= 1


def _distinct_root_count(h: BinaryForm) -> tuple[int, bool]:
    """Number of distinct projective roots of h, plus a squarefree flag."""
    p0, p1, core = _split_monomial(h)
    count = (1 if p0 else 0) + (1 if p1 else 0)
    squarefree = p0 <= 1 and p1 <= 1
    if core.degree >= 1:
        u = _int_list(core)
        du = [k * c for k, c in enumerate(u)][1:]
        g = _int_poly_gcd(u, du)
        count += _deg(u) - _deg(g)
        squarefree = squarefree and _deg(g) == 0
    return count, squarefree


def map_degree(f: CurveMap, rng: Optional[random.Random] = None, trials: int = 3) -> int:
    """Generic fiber cardinality of the map onto its image.

    Samples a rational parameter z*, forms the fiber polynomial over the
    image point f(z*) as the gcd of the 2x2 minors f_i(z) P_j - f_j(z) P_i,
    and counts its distinct roots.  Samples whose fiber polynomial is not
    squarefree sit over ramification or singular image points and are
    rejected; among accepted samples singular image points can only
    overcount, so the minimum over ``trials`` draws is reported.
    """
    if not base_locus_free(f):
        raise ValueError("parametrization has base locus")
    rng = rng or random.Random(0)
    counts = []
    attempts = 0
    while len(counts) < trials:
        attempts += 1
        if attempts > 100 * trials:
            raise RuntimeError("could not find enough unramified sample points")
        z = (Fraction(rng.randint(-20, 20)), Fraction(rng.randint(1, 20)))
        P = f.point(z)
        minors = []
        for i in range(f.n + 1):
            for j in range(i + 1, f.n + 1):
                m = P[j] * f.components[i] - P[i] * f.components[j]
                if not m.is_zero:
                    minors.append(m)
        if not minors:
            continue
        G = form_gcd_all(minors)
        if G.degree == 0:
            continue
        count, squarefree = _distinct_root_count(G)
        if not squarefree:
            continue
        counts.append(count)
    return min(counts)


@dataclass(frozen=True)
class CurveCheck:
    """Summary of how good a parametrization is.

    ``birational`` means base-point-free and generically one-to-one onto
    the image, i.e. the image is a genuine degree-d curve.
    """

    base_free: bool
    map_degree: Optional[int]
    image_degree: Optional[int]
    birational: bool


def check_curve(f: CurveMap, rng: Optional[random.Random] = None) -> CurveCheck:
    """Base-point, map-degree, and image-degree report for a curve map."""
    if not base_locus_free(f):
        return CurveCheck(False, None, None, False)
    rng = rng or random.Random(0)
    for _ in range(5):
        e = map_degree(f, rng=rng)
        if f.d % e == 0:
            return CurveCheck(True, e, f.d // e, e == 1)
    raise RuntimeError("map degree sampling failed to divide the curve degree")
