"""Points, lines and incidence in the projective plane PG(2, F).

Both points and lines are homogeneous triples normalized so that the first
nonzero coordinate is 1, giving O(1) structural equality. Incidence is a
vanishing dot product, join/meet are cross products, and collinearity or
concurrency is a vanishing 3x3 determinant.
"""

from __future__ import annotations

from typing import Sequence

from .errors import FieldMismatch, IdenticalArguments
from .field import FieldElement, FieldSpec


def _normalize(field: FieldSpec, coords) -> tuple[FieldElement, FieldElement, FieldElement]:
    elems = []
    for c in coords:
        if isinstance(c, FieldElement):
            if c.field != field:
                raise FieldMismatch(f"coordinate from {c.field!r} used in {field!r}")
            elems.append(c)
        else:
            elems.append(field.element(c))
    if len(elems) != 3:
        raise ValueError(f"homogeneous triple expected, got {len(elems)} coordinates")
    pivot = next((e for e in elems if not e.is_zero()), None)
    if pivot is None:
        raise ValueError("(0:0:0) is not a projective element")
    scale = pivot.inverse()
    return tuple(e * scale for e in elems)


class _Homogeneous:
    __slots__ = ("field", "coords")

    def __init__(self, field: FieldSpec, coords):
        self.field = field
        self.coords = _normalize(field, coords)

    def key(self) -> tuple:
        return tuple(c.index for c in self.coords)

    def __eq__(self, other) -> bool:
        return (type(other) is type(self) and self.field == other.field
                and self.key() == other.key())

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.field.key(), self.key()))

    def __lt__(self, other) -> bool:
        return self.key() < other.key()


class ProjPoint(_Homogeneous):
    def __repr__(self) -> str:
        return "(" + ":".join(repr(c) for c in self.coords) + ")"


class ProjLine(_Homogeneous):
    """A line a*x + b*y + c*z = 0, stored as the normalized triple [a,b,c]."""

    def __repr__(self) -> str:
        return "[" + ",".join(repr(c) for c in self.coords) + "]"


def _check_same_field(a: _Homogeneous, b: _Homogeneous) -> None:
    if a.field != b.field:
        raise FieldMismatch(f"{a!r} and {b!r} live in different fields")


def dot(a: _Homogeneous, b: _Homogeneous) -> FieldElement:
    _check_same_field(a, b)
    s = a.field.zero
    for x, y in zip(a.coords, b.coords):
        s = s + x * y
    return s


def incident(P: ProjPoint, L: ProjLine) -> bool:
    return dot(P, L).is_zero()


def _cross(a: Sequence[FieldElement], b: Sequence[FieldElement]):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def join(P: ProjPoint, Q: ProjPoint) -> ProjLine:
    """The unique line through two distinct points."""
    _check_same_field(P, Q)
    if P == Q:
        raise IdenticalArguments(f"join of identical points {P!r}")
    return ProjLine(P.field, _cross(P.coords, Q.coords))


def meet(L1: ProjLine, L2: ProjLine) -> ProjPoint:
    """The unique common point of two distinct lines."""
    _check_same_field(L1, L2)
    if L1 == L2:
        raise IdenticalArguments(f"meet of identical lines {L1!r}")
    return ProjPoint(L1.field, _cross(L1.coords, L2.coords))


def det3(rows) -> FieldElement:
    (a, b, c), (d, e, f), (g, h, i) = rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def collinear(P: ProjPoint, Q: ProjPoint, R: ProjPoint) -> bool:
    _check_same_field(P, Q)
    _check_same_field(P, R)
    return det3([P.coords, Q.coords, R.coords]).is_zero()


def concurrent(L1: ProjLine, L2: ProjLine, L3: ProjLine) -> bool:
    _check_same_field(L1, L2)
    _check_same_field(L1, L3)
    return det3([L1.coords, L2.coords, L3.coords]).is_zero()


def as_line(P: ProjPoint) -> ProjLine:
    """Duality swap: reinterpret point coordinates as line coefficients."""
    return ProjLine(P.field, P.coords)


def as_point(L: ProjLine) -> ProjPoint:
    return ProjPoint(L.field, L.coords)


def _enumerate_triples(F: FieldSpec):
    one = F.one
    elems = F.elements()
    # normalized representatives in lexicographic coordinate order
    out = [(F.zero, F.zero, one)]
    for c in elems:
        out.append((F.zero, one, c))
    for b in elems:
        for c in elems:
            out.append((one, b, c))
    return out


def enumerate_points(F: FieldSpec) -> list[ProjPoint]:
    """All q^2 + q + 1 points, deterministic coordinate-lexicographic order."""
    return [ProjPoint(F, t) for t in _enumerate_triples(F)]


def enumerate_lines(F: FieldSpec) -> list[ProjLine]:
    return [ProjLine(F, t) for t in _enumerate_triples(F)]
