"""Incidence scenarios as polynomial systems over finite fields.

Each scenario fixes a coordinate frame for some of the lines, turns the
prescribed collinearities/concurrencies into integer-coefficient equations,
adds non-degeneracy inequations, and is solved over any finite field by
exhaustive enumeration of all variable assignments. Geometric side conditions
that are awkward as polynomials (membership of a pencil, a forbidden extra
incidence) are applied as post-checks on candidate solutions.

Five scenarios are built in:

  TEN_E1         ten lines, one 4-fold point W and twelve triple points;
                 frame x, y, z, x+y+z, ax+by+z, cx+dy+z.
  TEN_CASE_A     ten lines, thirteen triple points, the three lines through
                 the double points of M_1 meeting in a single point W;
                 same equations as TEN_E1 plus the requirement that M_1
                 misses W (which always fails).
  TEN_CASE_B     ten lines, thirteen triple points, triangle variant;
                 frame x, y, z, ax-(a+1)y+z, bx-(b+1)y+z, cx-(c+1)y+z.
  ELEVEN_CASE_I  eleven lines, seventeen triple points, the join of the two
                 special double-point hubs is a configuration line.
  ELEVEN_CASE_II eleven lines, seventeen triple points, that join is not a
                 configuration line; frame x, y, z, x+y+z, ax+by+z.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import FieldTooLarge, IdenticalArguments, UnsolvedAssignment
from .field import FieldElement, FieldSpec, make_field
from .incidence import Arrangement
from .polynomial import (
    IntPolynomial,
    collinearity_poly,
    concurrency_poly,
    cross_poly,
    poly_ring,
)
from .projective import ProjLine, incident, join, meet

MAX_FIELD_ORDER = 2 ** 16

TEN_E1 = "TEN_E1"
TEN_CASE_A = "TEN_CASE_A"
TEN_CASE_B = "TEN_CASE_B"
ELEVEN_CASE_I = "ELEVEN_CASE_I"
ELEVEN_CASE_II = "ELEVEN_CASE_II"

SCENARIO_NAMES = (TEN_E1, TEN_CASE_A, TEN_CASE_B, ELEVEN_CASE_I, ELEVEN_CASE_II)

#: fields used to probe "over which fields does this exist" questions:
#: characteristics 2, 3, 5, 7, 11, 13 with the extensions that carry the
#: roots of unity the scenarios need. Evidence is per field, not a proof
#: for all fields.
DEFAULT_BATTERY_ORDERS = (2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27)


def default_battery() -> list[FieldSpec]:
    out = []
    for q in DEFAULT_BATTERY_ORDERS:
        p, k = q, 1
        for prime in (2, 3, 5, 7, 11, 13):
            if q % prime == 0:
                p = prime
                k = 1
                while prime ** k < q:
                    k += 1
                break
        out.append(make_field(p, k))
    return out


@dataclass(frozen=True)
class ConstraintSystem:
    """Equations (= 0), inequations (not all of a group = 0), post-checks."""

    name: str
    variables: tuple
    equations: tuple            # IntPolynomial, each must vanish
    inequations: tuple          # tuple of tuples of IntPolynomial: in each
                                # group at least one member must be nonzero
    post_checks: tuple = ()     # (name, fn(assignment, F) -> bool), True keeps


@dataclass(frozen=True)
class ConsequenceViolation:
    field: FieldSpec
    assignment: dict
    consequence: IntPolynomial


@dataclass(frozen=True)
class ConsequenceReport:
    system: str
    mode: str
    checked: int
    violations: tuple

    @property
    def ok(self) -> bool:
        return not self.violations


# ---------------------------------------------------------------------------
# scenario frames and derived (determinant) systems
# ---------------------------------------------------------------------------

def _sym_frame_abcd():
    """Lines x, y, z, x+y+z, ax+by+z, cx+dy+z with symbolic a, b, c, d."""
    (a, b, c, d), const = poly_ring(("a", "b", "c", "d"))
    zero, one = const(0), const(1)
    L = {
        1: (one, zero, zero),
        2: (zero, one, zero),
        3: (zero, zero, one),
        4: (one, one, one),
        5: (a, b, one),
        6: (c, d, one),
    }
    P = {(i, j): cross_poly(L[i], L[j]) for i in range(1, 7) for j in range(i + 1, 7)}
    return L, P


def _sym_frame_case_b():
    """Lines x, y, z and three lines through (1:1:1) parameterized by a, b, c."""
    (a, b, c), const = poly_ring(("a", "b", "c"))
    zero, one = const(0), const(1)
    L = {
        1: (one, zero, zero),
        2: (zero, one, zero),
        3: (zero, zero, one),
        4: (a, -(a + one), one),
        5: (b, -(b + one), one),
        6: (c, -(c + one), one),
    }
    P = {(i, j): cross_poly(L[i], L[j]) for i in range(1, 7) for j in range(i + 1, 7)}
    return L, P


def _sym_frame_case_ii():
    """Lines x, y, z, x+y+z, ax+by+z with symbolic a, b."""
    (a, b), const = poly_ring(("a", "b"))
    zero, one = const(0), const(1)
    L = {
        1: (one, zero, zero),
        2: (zero, one, zero),
        3: (zero, zero, one),
        4: (one, one, one),
        5: (a, b, one),
    }
    P = {(i, j): cross_poly(L[i], L[j]) for i in range(1, 6) for j in range(i + 1, 6)}
    return L, P


#: collinear point triples forced in the TEN_E1 frame (rows of the four
#: lines through the 4-fold point W)
TEN_E1_TRIPLES = (
    ((1, 2), (3, 4), (5, 6)),
    ((1, 3), (2, 5), (4, 6)),
    ((1, 4), (2, 6), (3, 5)),
    ((1, 5), (2, 4), (3, 6)),
)

#: the same four triples plus the one on the extra configuration line
ELEVEN_I_TRIPLES = TEN_E1_TRIPLES + (((1, 6), (2, 3), (4, 5)),)


def derived_equations(name: str) -> list[IntPolynomial]:
    """Equation systems expanded directly from the scenario geometry.

    Independent route used to validate the hard-coded systems below: for
    every scenario except the last TEN_CASE_B condition these agree with the
    stored equations up to sign.
    """
    if name in (TEN_E1, TEN_CASE_A):
        L, P = _sym_frame_abcd()
        eqs = [collinearity_poly(*[P[t] for t in row]) for row in TEN_E1_TRIPLES]
        m_lines = [cross_poly(P[row[0]], P[row[1]]) for row in TEN_E1_TRIPLES]
        # concurrency of the three hub lines other than M_1
        eqs.append(concurrency_poly(m_lines[1], m_lines[2], m_lines[3]))
        return eqs
    if name == ELEVEN_CASE_I:
        L, P = _sym_frame_abcd()
        return [collinearity_poly(*[P[t] for t in row]) for row in ELEVEN_I_TRIPLES]
    if name == ELEVEN_CASE_II:
        L, P = _sym_frame_case_ii()
        m1 = cross_poly(P[(1, 2)], P[(3, 4)])
        m2 = cross_poly(P[(1, 5)], P[(2, 3)])
        n1 = cross_poly(P[(1, 4)], P[(2, 5)])
        n2 = cross_poly(P[(2, 4)], P[(3, 5)])
        w1 = cross_poly(m1, m2)
        w2 = cross_poly(n1, n2)
        m3 = cross_poly(w1, P[(4, 5)])
        n3 = cross_poly(w2, P[(1, 3)])
        z1 = cross_poly(m3, n2)
        z2 = cross_poly(m3, n3)
        z3 = cross_poly(m3, n1)
        z4 = cross_poly(m2, n3)
        z5 = cross_poly(m1, n3)
        conds = []
        for z, line in ((z1, L[1]), (z2, L[2]), (z3, L[3]), (z4, L[4]), (z5, L[5])):
            dotp = z[0] * line[0] + z[1] * line[1] + z[2] * line[2]
            conds.append(dotp.content_normalized())
        # membership of Z_2 on L_2 holds identically
        assert conds[1].is_zero()
        return [conds[0], conds[2], conds[3], conds[4]]
    if name == TEN_CASE_B:
        L, P = _sym_frame_case_b()
        m2 = cross_poly(P[(1, 2)], P[(3, 4)])
        m3 = cross_poly(P[(1, 5)], P[(2, 3)])
        m4 = cross_poly(P[(1, 3)], P[(2, 6)])
        z1 = cross_poly(m3, m4)
        z2 = cross_poly(m2, m4)
        z3 = cross_poly(m2, m3)
        conds = []
        for z, line in ((z1, L[4]), (z2, L[5]), (z3, L[6])):
            dotp = z[0] * line[0] + z[1] * line[1] + z[2] * line[2]
            conds.append(dotp.content_normalized())
        conds.append(collinearity_poly(P[(1, 4)], P[(2, 5)], P[(3, 6)]))
        return conds
    raise ValueError(f"unknown scenario {name!r}")


# ---------------------------------------------------------------------------
# the published systems, stored verbatim (variables in alphabetical order)
# ---------------------------------------------------------------------------

def _poly(variables: Sequence[str], terms: dict) -> IntPolynomial:
    return IntPolynomial(variables, terms)


def _abcd_system() -> tuple:
    V = ("a", "b", "c", "d")
    A, B, C, D = (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)
    O = (0, 0, 0, 0)
    e1 = _poly(V, {A: 1, B: -1, C: -1, D: 1})                      # a-b-c+d
    e2 = _poly(V, {(1, 0, 0, 1): -1, A: 1, C: -1, D: 1})           # -ad+a-c+d
    e3 = _poly(V, {A: 1, (0, 1, 1, 0): -1})                        # a-bc
    e4 = _poly(V, {(0, 1, 1, 0): 1, D: -1})                        # bc-d
    pencil = _poly(V, {(1, 1, 0, 0): -1, A: 1, (0, 1, 1, 0): 1, O: -1})  # -ab+a+bc-1
    extra = _poly(V, {(1, 0, 0, 1): 1, A: -1, B: 1, D: -1})        # ad-a+b-d
    det = _poly(V, {B: 1, D: -1, A: -1, C: 1, (1, 0, 0, 1): 1, (0, 1, 1, 0): -1})
    a = _poly(V, {A: 1})
    b = _poly(V, {B: 1})
    c = _poly(V, {C: 1})
    d = _poly(V, {D: 1})
    nondeg = ((a,), (b,), (c,), (d,), (det,))
    return (e1, e2, e3, e4), pencil, extra, nondeg


def _case_b_system() -> tuple:
    V = ("a", "b", "c")
    A, B, C, O = (1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 0, 0)
    f1 = _poly(V, {(1, 1, 0): 1, (1, 0, 1): 1, A: 1, (0, 1, 1): -1})  # ab+ac+a-bc
    f2 = _poly(V, {(1, 0, 1): 1, A: 1, B: -1, C: 1})                  # ac+a-b+c
    f3 = _poly(V, {(1, 1, 0): 1, C: 1})                               # ab+c
    f4 = _poly(V, {A: 1, (0, 1, 1): 1})                               # a+bc
    a, b, c = (_poly(V, {e: 1}) for e in (A, B, C))
    nondeg = ((a,), (b,), (c,), (a - b,), (a - c,), (b - c,))
    return (f1, f2, f3, f4), nondeg


def _case_ii_system() -> tuple:
    V = ("a", "b")
    g1 = _poly(V, {(2, 0): -1, (1, 2): 1, (1, 1): 1, (0, 2): -1})  # -a^2+ab^2+ab-b^2
    g2 = _poly(V, {(2, 0): 1, (1, 2): -1, (1, 1): 1, (1, 0): -1})  # a^2-ab^2+ab-a
    g3 = _poly(V, {(1, 2): -1, (1, 1): 1, (1, 0): -1, (0, 2): 1})  # -ab^2+ab-a+b^2
    g4 = _poly(V, {(2, 0): 1, (1, 1): -1, (1, 0): -1, (0, 2): 1})  # a^2-ab-a+b^2
    a = _poly(V, {(1, 0): 1})
    b = _poly(V, {(0, 1): 1})
    one = IntPolynomial.constant(1, V)
    nondeg = ((a,), (b,), (a - one, b - one))  # L_4 != L_5, i.e. (a,b) != (1,1)
    return (g1, g2, g3, g4), nondeg


#: consequence polynomials published for the scenarios, with the solution
#: pool each claim quantifies over ("raw" = equations + inequations without
#: post-checks, "equations" = the bare equation variety)
CONSEQUENCES = {
    ELEVEN_CASE_II: ("equations", (
        _poly(("a", "b"), {(1, 0): 3, (0, 2): -3}),                       # 3(a-b^2)
        _poly(("a", "b"), {(1, 1): 1, (0, 2): -2, (1, 0): 1}),            # ab-2b^2+a
        _poly(("a", "b"), {(2, 0): 1, (1, 1): -1, (0, 2): 1, (1, 0): -1}),  # a^2-ab+b^2-a
    )),
    TEN_CASE_B: ("raw", (
        _poly(("a", "b", "c"), {(0, 2, 0): 1, (0, 0, 0): -1}),            # b^2-1
    )),
    TEN_E1: ("raw", (
        _poly(("a", "b", "c", "d"), {(2, 0, 0, 0): 1, (1, 0, 0, 0): 1,
                                     (0, 0, 0, 0): 1}),                   # a^2+a+1
    )),
}


# ---------------------------------------------------------------------------
# concrete geometry for post-checks and realization
# ---------------------------------------------------------------------------

def _frame_lines_abcd(F: FieldSpec, asg: dict) -> dict:
    one, zero = F.one, F.zero
    a, b, c, d = asg["a"], asg["b"], asg["c"], asg["d"]
    return {
        1: ProjLine(F, (one, zero, zero)),
        2: ProjLine(F, (zero, one, zero)),
        3: ProjLine(F, (zero, zero, one)),
        4: ProjLine(F, (one, one, one)),
        5: ProjLine(F, (a, b, one)),
        6: ProjLine(F, (c, d, one)),
    }


def _hub_lines(F: FieldSpec, asg: dict) -> list[ProjLine]:
    """Joins of the first two points of each forced collinear triple."""
    L = _frame_lines_abcd(F, asg)
    P = {(i, j): meet(L[i], L[j]) for i in range(1, 7) for j in range(i + 1, 7)}
    return [join(P[row[0]], P[row[1]]) for row in TEN_E1_TRIPLES], P


def _case_a_keep(asg: dict, F: FieldSpec) -> bool:
    """Keep solutions where M_1 avoids the common point W of M_2..M_4."""
    try:
        (m1, m2, m3, m4), _ = _hub_lines(F, asg)
        w = meet(m2, m3)
    except IdenticalArguments:
        return False
    if not incident(w, m4):
        return False
    return not incident(w, m1)


def _case_i_keep(asg: dict, F: FieldSpec) -> bool:
    """Keep solutions where the five forced lines do not form a pencil."""
    L = _frame_lines_abcd(F, asg)
    P = {(i, j): meet(L[i], L[j]) for i in range(1, 7) for j in range(i + 1, 7)}
    try:
        lines = [join(P[row[0]], P[row[1]]) for row in ELEVEN_I_TRIPLES]
        if len(set(lines)) != 5:
            return False
        hub = meet(lines[0], lines[1])
    except IdenticalArguments:
        return False
    return not all(incident(hub, t) for t in lines[2:])


def build_system(name: str) -> ConstraintSystem:
    """The published equation system plus non-degeneracy for a scenario."""
    if name == TEN_E1:
        eqs, pencil, _, nondeg = _abcd_system()
        return ConstraintSystem(name, ("a", "b", "c", "d"), eqs + (pencil,), nondeg)
    if name == TEN_CASE_A:
        eqs, pencil, _, nondeg = _abcd_system()
        return ConstraintSystem(name, ("a", "b", "c", "d"), eqs + (pencil,), nondeg,
                                post_checks=(("m1_avoids_w", _case_a_keep),))
    if name == ELEVEN_CASE_I:
        eqs, _, extra, nondeg = _abcd_system()
        return ConstraintSystem(name, ("a", "b", "c", "d"), eqs + (extra,), nondeg,
                                post_checks=(("not_a_pencil", _case_i_keep),))
    if name == TEN_CASE_B:
        eqs, nondeg = _case_b_system()
        return ConstraintSystem(name, ("a", "b", "c"), eqs, nondeg)
    if name == ELEVEN_CASE_II:
        eqs, nondeg = _case_ii_system()
        return ConstraintSystem(name, ("a", "b"), eqs, nondeg)
    raise ValueError(f"unknown scenario {name!r}")


# ---------------------------------------------------------------------------
# exhaustive solving
# ---------------------------------------------------------------------------

def _eval_grid(poly: IntPolynomial, F: FieldSpec, values: list, tables: tuple):
    """Evaluate over the full assignment grid using index tables."""
    ADD, MUL, POW = tables
    total = values[0].shape[0] if values else 1
    acc = np.zeros(total, dtype=np.int32)
    for exps, coeff in poly.terms.items():
        term = np.full(total, F.from_int(coeff).index, dtype=np.int32)
        for vi, e in enumerate(exps):
            if e:
                term = MUL[term, POW[e][values[vi]]]
        acc = ADD[acc, term]
    return acc


def _tables(F: FieldSpec, max_degree: int) -> tuple:
    ADD = np.array(F.add_table, dtype=np.int32)
    MUL = np.array(F.mul_table, dtype=np.int32)
    base = np.arange(F.order, dtype=np.int32)
    POW = {0: np.ones(F.order, dtype=np.int32), 1: base}
    for e in range(2, max_degree + 1):
        POW[e] = MUL[POW[e - 1], base]
    return ADD, MUL, POW


_CHUNK = 1 << 22


def _survivors_tabled(system: ConstraintSystem, F: FieldSpec, total: int) -> list[int]:
    q = F.order
    n = len(system.variables)
    degrees = [p.max_degree() for p in system.equations]
    for group in system.inequations:
        degrees.extend(p.max_degree() for p in group)
    tables = _tables(F, max(degrees, default=1))
    found: list[int] = []
    for offset in range(0, total, _CHUNK):
        idx = np.arange(offset, min(offset + _CHUNK, total), dtype=np.int64)
        values = [((idx // (q ** (n - 1 - i))) % q).astype(np.int32) for i in range(n)]
        mask = np.ones(idx.shape[0], dtype=bool)
        for eq in system.equations:
            mask &= _eval_grid(eq, F, values, tables) == 0
        for group in system.inequations:
            all_zero = np.ones(idx.shape[0], dtype=bool)
            for poly in group:
                all_zero &= _eval_grid(poly, F, values, tables) == 0
            mask &= ~all_zero
        found.extend(int(i) for i in idx[mask])
    return found


def _survivors_direct(system: ConstraintSystem, F: FieldSpec, total: int) -> list[int]:
    # per-assignment evaluation for fields beyond the table limit
    q = F.order
    n = len(system.variables)
    found = []
    for flat in range(total):
        rem, asg = flat, {}
        for i, v in enumerate(system.variables):
            power = q ** (n - 1 - i)
            asg[v] = FieldElement(F, rem // power)
            rem %= power
        if any(not eq.evaluate(asg, F).is_zero() for eq in system.equations):
            continue
        if any(all(p.evaluate(asg, F).is_zero() for p in group)
               for group in system.inequations):
            continue
        found.append(flat)
    return found


def solve_over(system: ConstraintSystem, F: FieldSpec, *,
               apply_post_checks: bool = True) -> list[dict]:
    """All assignments over F satisfying the system, in lexicographic order.

    Exhaustive scan of the q^n assignment grid; the candidate survivors of
    the polynomial constraints then run the geometric post-checks.
    """
    q = F.order
    if q > MAX_FIELD_ORDER:
        raise FieldTooLarge(f"|F| = {q} exceeds the scan guard {MAX_FIELD_ORDER}")
    n = len(system.variables)
    total = q ** n
    flats = (_survivors_tabled if F.has_tables else _survivors_direct)(system, F, total)

    out = []
    for flat in flats:
        asg = {}
        rem = flat
        for i, v in enumerate(system.variables):
            power = q ** (n - 1 - i)
            asg[v] = FieldElement(F, rem // power)
            rem %= power
        out.append(asg)
    if apply_post_checks:
        for check_name, fn in system.post_checks:
            out = [asg for asg in out if fn(asg, F)]
    return out


def consequence_check(system: ConstraintSystem, consequences: Sequence[IntPolynomial],
                      battery: Sequence[FieldSpec], *,
                      mode: str = "raw") -> ConsequenceReport:
    """Check that consequence polynomials vanish on every solution.

    mode="raw" quantifies over solutions of equations plus inequations
    (post-checks never apply); mode="equations" over the bare equation
    variety including degenerate assignments.
    """
    if mode not in ("raw", "equations"):
        raise ValueError(f"unknown mode {mode!r}")
    violations = []
    checked = 0
    for F in battery:
        probe = system if mode == "raw" else ConstraintSystem(
            system.name, system.variables, system.equations, ())
        for asg in solve_over(probe, F, apply_post_checks=False):
            checked += 1
            for cons in consequences:
                if not cons.evaluate(asg, F).is_zero():
                    violations.append(ConsequenceViolation(F, asg, cons))
    return ConsequenceReport(system.name, mode, checked, tuple(violations))


# ---------------------------------------------------------------------------
# realization
# ---------------------------------------------------------------------------

SCENARIO_TARGET_TVEC = {
    TEN_E1: {4: 1, 3: 12, 2: 3},
    TEN_CASE_A: {3: 13, 2: 6},
    TEN_CASE_B: {3: 13, 2: 6},
    ELEVEN_CASE_I: {3: 17, 2: 4},
    ELEVEN_CASE_II: {3: 17, 2: 4},
}


def _require_raw_solution(system: ConstraintSystem, asg: dict, F: FieldSpec) -> None:
    for eq in system.equations:
        if not eq.evaluate(asg, F).is_zero():
            raise UnsolvedAssignment(
                f"{dict_repr(asg)} does not satisfy {eq!r} over {F!r}")
    for group in system.inequations:
        if all(p.evaluate(asg, F).is_zero() for p in group):
            raise UnsolvedAssignment(
                f"{dict_repr(asg)} violates a non-degeneracy condition over {F!r}")


def dict_repr(asg: dict) -> str:
    return "{" + ", ".join(f"{k}={v!r}" for k, v in asg.items()) + "}"


def realize(name: str, asg: dict, F: FieldSpec) -> Arrangement:
    """The full 10- or 11-line arrangement a scenario solution describes.

    Accepts any raw solution (equations and inequations); the geometric
    contradiction of a rejected scenario can then be inspected on the
    resulting arrangement's profile.
    """
    system = build_system(name)
    _require_raw_solution(system, asg, F)
    if name in (TEN_E1, TEN_CASE_A):
        (m1, m2, m3, m4), _ = _hub_lines(F, asg)
        L = _frame_lines_abcd(F, asg)
        lines = [L[i] for i in range(1, 7)] + [m1, m2, m3, m4]
        labels = [f"L_{i}" for i in range(1, 7)] + [f"M_{i}" for i in range(1, 5)]
    elif name == ELEVEN_CASE_I:
        L = _frame_lines_abcd(F, asg)
        P = {(i, j): meet(L[i], L[j]) for i in range(1, 7) for j in range(i + 1, 7)}
        joins = [join(P[row[0]], P[row[1]]) for row in ELEVEN_I_TRIPLES]
        lines = [L[i] for i in range(1, 7)] + joins
        labels = [f"L_{i}" for i in range(1, 7)] + [f"T_{i}" for i in range(1, 6)]
    elif name == TEN_CASE_B:
        one, zero = F.one, F.zero
        a, b, c = asg["a"], asg["b"], asg["c"]
        L = {
            1: ProjLine(F, (one, zero, zero)),
            2: ProjLine(F, (zero, one, zero)),
            3: ProjLine(F, (zero, zero, one)),
            4: ProjLine(F, (a, -(a + one), one)),
            5: ProjLine(F, (b, -(b + one), one)),
            6: ProjLine(F, (c, -(c + one), one)),
        }
        P = {(i, j): meet(L[i], L[j]) for i in range(1, 7) for j in range(i + 1, 7)}
        m1 = join(P[(1, 4)], P[(2, 5)])
        if not incident(P[(3, 6)], m1):
            raise UnsolvedAssignment("forced collinearity on M_1 fails")
        m2 = join(P[(1, 2)], P[(3, 4)])
        m3 = join(P[(1, 5)], P[(2, 3)])
        m4 = join(P[(1, 3)], P[(2, 6)])
        lines = [L[i] for i in range(1, 7)] + [m1, m2, m3, m4]
        labels = [f"L_{i}" for i in range(1, 7)] + [f"M_{i}" for i in range(1, 5)]
    elif name == ELEVEN_CASE_II:
        one, zero = F.one, F.zero
        a, b = asg["a"], asg["b"]
        L = {
            1: ProjLine(F, (one, zero, zero)),
            2: ProjLine(F, (zero, one, zero)),
            3: ProjLine(F, (zero, zero, one)),
            4: ProjLine(F, (one, one, one)),
            5: ProjLine(F, (a, b, one)),
        }
        P = {(i, j): meet(L[i], L[j]) for i in range(1, 6) for j in range(i + 1, 6)}
        m1 = join(P[(1, 2)], P[(3, 4)])
        m2 = join(P[(1, 5)], P[(2, 3)])
        n1 = join(P[(1, 4)], P[(2, 5)])
        n2 = join(P[(2, 4)], P[(3, 5)])
        w1, w2 = meet(m1, m2), meet(n1, n2)
        m3 = join(w1, P[(4, 5)])
        n3 = join(w2, P[(1, 3)])
        lines = [L[i] for i in range(1, 6)] + [m1, m2, n1, n2, m3, n3]
        labels = [f"L_{i}" for i in range(1, 6)] + ["M_1", "M_2", "N_1", "N_2", "M_3", "N_3"]
    else:
        raise ValueError(f"unknown scenario {name!r}")
    return Arrangement(F, lines, labels)
