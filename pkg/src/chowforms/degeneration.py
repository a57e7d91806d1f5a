"""One-parameter joins of two curves and their boundary Chow forms.

Two curves attached at the all-ones point A = (1, ..., 1) -- the first at
parameter (1, 0), the second at (0, 1) -- give the family with components

    F_i = f_i(z0, z1) * g_i(eps*z0, z1),

a degree d1+d2 curve map for every eps != 0.  Its Chow form is a polynomial
in eps; the projective limit of the family as eps -> 0 is the lowest
nonvanishing eps-order coefficient, and for a valid join that limit factors
into the two component Chow forms.  This realizes, in exact arithmetic, the
degeneration of a rational curve onto a connected two-component curve.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Optional, Sequence

from .chow import EPS, CayleyBiform, _contraction_resultant, cayley_biform, proportional, uv_names
from .curves import CurveMap, act_gl2
from .polynomial import BinaryForm, MPoly, ScalarLike

__all__ = [
    "DegenerationFamily",
    "join_family",
    "normalize_attachment",
    "family_biform",
    "limit_direction",
    "proportional",
    "boundary_factor_check",
]

_EPS_RING = (EPS,)


@dataclass(frozen=True)
class DegenerationFamily:
    """Componentwise product family joining two curves at (1, ..., 1)."""

    first: CurveMap
    second: CurveMap
    components: tuple[BinaryForm, ...]

    @property
    def n(self) -> int:
        return self.first.n

    @property
    def d(self) -> int:
        return self.first.d + self.second.d

    def at_eps(self, value: ScalarLike) -> CurveMap:
        """Specialize eps to a number, giving an honest curve map."""
        val = Fraction(value)
        rows = []
        for comp in self.components:
            row = [
                c.evaluate({EPS: val}) if isinstance(c, MPoly) else c
                for c in comp.coeffs
            ]
            rows.append(row)
        return CurveMap.from_coeffs(rows)


def _attachment_errors(f: CurveMap, param: tuple[int, int]) -> list[str]:
    point = f.point(param)
    label = f"({param[0]},{param[1]})"
    errs = []
    for i, value in enumerate(point):
        if value == 1:
            continue
        desc = "zero" if value == 0 else str(value)
        errs.append(f"attachment coordinate {i} is {desc} at parameter {label}")
    return errs


def join_family(f: CurveMap, g: CurveMap) -> DegenerationFamily:
    """Join f (at parameter (1,0)) to g (at parameter (0,1)).

    Both curves must pass through A = (1, ..., 1) at those parameters with
    coordinates exactly 1; use :func:`normalize_attachment` to arrange
    that.  Callers are expected to hand in base-point-free birational
    parametrizations; the attachment condition itself is checked here.
    """
    if f.n != g.n:
        raise ValueError("curves live in different ambient spaces")
    errs = [f"f: {e}" for e in _attachment_errors(f, (1, 0))]
    errs += [f"g: {e}" for e in _attachment_errors(g, (0, 1))]
    if errs:
        raise ValueError("; ".join(errs))
    eps = MPoly.var(_EPS_RING, EPS)
    components = []
    for fi, gi in zip(f.components, g.components):
        d2 = gi.degree
        twisted = BinaryForm([c * eps ** (d2 - k) for k, c in enumerate(gi.coeffs)])
        components.append(fi * twisted)
    return DegenerationFamily(f, g, tuple(components))


def normalize_attachment(
    f: CurveMap,
    z_star: Optional[Sequence[ScalarLike]] = None,
    at: tuple[int, int] = (1, 0),
) -> CurveMap:
    """Move a point with all coordinates nonzero to A = (1, ..., 1).

    Reparametrizes so the chosen point sits at the parameter ``at`` and
    rescales coordinates by a diagonal ambient matrix.  If no suitable
    parameter exists the curve lies in a coordinate hyperplane and no
    diagonal normalization can work.
    """
    for i, comp in enumerate(f.components):
        if comp.is_zero:
            raise ValueError(
                f"component {i} vanishes identically: curve lies in the "
                f"coordinate hyperplane x{i} = 0"
            )
    if z_star is None:
        z_star = _find_nonvanishing_parameter(f)
    s, t = (Fraction(v) if isinstance(v, int) else v for v in z_star)
    values = f.point((s, t))
    if any(v == 0 for v in values):
        bad = [i for i, v in enumerate(values) if v == 0]
        raise ValueError(f"chosen point has zero coordinates {bad}")
    if at == (1, 0):
        A = ((s, Fraction(0)), (t, Fraction(1))) if s else ((s, Fraction(1)), (t, Fraction(0)))
    elif at == (0, 1):
        A = ((Fraction(1), s), (Fraction(0), t)) if t else ((Fraction(0), s), (Fraction(1), t))
    else:
        raise ValueError("attachment parameter must be (1, 0) or (0, 1)")
    moved = act_gl2(f, A)
    rescaled = CurveMap(
        tuple((1 / w) * c for w, c in zip(values, moved.components))
    )
    assert rescaled.point(at) == (Fraction(1),) * (f.n + 1)
    return rescaled


def _find_nonvanishing_parameter(f: CurveMap) -> tuple[Fraction, Fraction]:
    bound = 1
    while True:
        for p in range(-bound, bound + 1):
            for q in range(0, bound + 1):
                if (p, q) == (0, 0) or max(abs(p), q) != bound:
                    continue
                values = f.point((Fraction(p), Fraction(q)))
                if all(values):
                    return (Fraction(p), Fraction(q))
        bound += 1
        if bound > (f.n + 1) * f.d + 2:
            raise RuntimeError("no parameter avoids all coordinate zeros")


def family_biform(F: DegenerationFamily) -> CayleyBiform:
    """Chow biform of the family with eps carried as a ring variable."""
    names = uv_names(F.n, eps=True)
    rows = [
        [c.embed(names) if isinstance(c, MPoly) else c for c in comp.coeffs]
        for comp in F.components
    ]
    return CayleyBiform(F.n, F.d, _contraction_resultant(rows, names))


def limit_direction(ca: CayleyBiform) -> CayleyBiform:
    """Projective limit of the family at eps -> 0.

    Writes the biform as sum_k eps^k C_k and returns the normalized C_k of
    least k with C_k != 0: the lowest-order direction of the algebraic arc.
    """
    if ca.is_zero:
        raise ValueError("zero family biform has no limit")
    if not ca.has_eps:
        return ca.normalized()
    parts = ca.poly.decompose(EPS)
    k0 = min(parts)
    return CayleyBiform(ca.n, ca.d, parts[k0]).normalized()


def boundary_factor_check(limit: CayleyBiform, parts: Iterable[CayleyBiform]) -> bool:
    """Does the limit biform equal the product of the given component biforms
    up to scalar?  The Chow form of a union of curves is the product of the
    component Chow forms, so this is the factorization test for boundary
    limits.
    """
    parts = list(parts)
    if not parts:
        raise ValueError("no component biforms given")
    if sum(p.d for p in parts) != limit.d:
        raise ValueError(
            f"degree mismatch: components sum to {sum(p.d for p in parts)}, "
            f"limit has degree {limit.d}"
        )
    product = reduce(lambda a, b: a * b, parts)
    return proportional(limit, product)
