"""Parametrized rational curves in projective space and codimension-2 planes.

A :class:`CurveMap` holds the n+1 degree-d binary forms (f_0, ..., f_n)
defining z -> (f_0(z) : ... : f_n(z)); a :class:`Plane` holds two
independent covectors whose common kernel is a codimension-2 linear
subspace.  Reparametrization and ambient linear actions live here too.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .polynomial import BinaryForm, ScalarLike
from .resultant import det_bareiss

__all__ = ["CurveMap", "Plane", "act_gl2", "act_gln"]


@dataclass(frozen=True)
class CurveMap:
    """Tuple of n+1 binary forms of one degree d >= 1, not all zero."""

    components: tuple[BinaryForm, ...]

    def __post_init__(self):
        if len(self.components) < 2:
            raise ValueError("a curve map needs at least two components")
        d = self.components[0].degree
        if any(c.degree != d for c in self.components):
            raise ValueError("components must share one degree")
        if d < 1:
            raise ValueError("degree must be at least 1")
        if all(c.is_zero for c in self.components):
            raise ValueError("all components are zero")
        if any(not c.is_numeric for c in self.components):
            raise ValueError("components must have numeric coefficients")

    @property
    def n(self) -> int:
        return len(self.components) - 1

    @property
    def d(self) -> int:
        return self.components[0].degree

    @classmethod
    def from_coeffs(cls, rows: Sequence[Sequence[ScalarLike]]) -> "CurveMap":
        return cls(tuple(BinaryForm(row) for row in rows))

    def point(self, z: Sequence[ScalarLike]) -> tuple[Fraction, ...]:
        z0, z1 = (Fraction(v) if isinstance(v, int) else v for v in z)
        return tuple(c.evaluate(z0, z1) for c in self.components)

    def scale(self, factor: ScalarLike) -> "CurveMap":
        return CurveMap(tuple(factor * c for c in self.components))


@dataclass(frozen=True)
class Plane:
    """Codimension-2 plane { x : <x, u> = <x, v> = 0 } in P^n."""

    u: tuple[Fraction, ...]
    v: tuple[Fraction, ...]

    def __post_init__(self):
        u = tuple(Fraction(x) if isinstance(x, int) else x for x in self.u)
        v = tuple(Fraction(x) if isinstance(x, int) else x for x in self.v)
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)
        if len(u) != len(v) or len(u) < 2:
            raise ValueError("covectors must share a length of at least 2")
        if not any(
            u[i] * v[j] - u[j] * v[i]
            for i in range(len(u))
            for j in range(i + 1, len(u))
        ):
            raise ValueError("covectors dependent")

    @property
    def n(self) -> int:
        return len(self.u) - 1


def _det2(A) -> Fraction:
    (a, b), (c, d) = A
    return Fraction(a) * Fraction(d) - Fraction(b) * Fraction(c)


def act_gl2(f: CurveMap, A: Sequence[Sequence[ScalarLike]]) -> CurveMap:
    """Reparametrize: substitute each component by the linear change A."""
    if _det2(A) == 0:
        raise ValueError("singular matrix")
    return CurveMap(tuple(c.substitute_gl2(A) for c in f.components))


def act_gln(f: CurveMap, B: Sequence[Sequence[ScalarLike]]) -> CurveMap:
    """Ambient linear action: component i becomes sum_j B[i][j] * f_j."""
    m = len(f.components)
    rows = [[Fraction(x) if isinstance(x, int) else x for x in row] for row in B]
    if len(rows) != m or any(len(r) != m for r in rows):
        raise ValueError(f"matrix must be {m}x{m}")
    if det_bareiss(rows) == 0:
        raise ValueError("singular matrix")
    zero = BinaryForm.zero(f.d)
    new = []
    for i in range(m):
        acc = zero
        for j in range(m):
            if rows[i][j]:
                acc = acc + rows[i][j] * f.components[j]
        new.append(acc)
    return CurveMap(tuple(new))
