"""Arrangements of lines: intersection profiles, t-vectors, incidence tables.

The intersection profile of s distinct lines assigns to every point where at
least two of them meet its multiplicity m (number of arrangement lines through
it); t_k counts the points with multiplicity exactly k. The combinatorial
identity C(s,2) = sum_k t_k * C(k,2) holds for every profile by construction
and is asserted on computation.

Also houses the field-free view of an arrangement (blocks of concurrent line
indices) with a backtracking isomorphism test, and the JSON arrangement file
format used by the CLI.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from math import comb
from typing import Optional, Sequence

from .errors import IndexOutOfRange, UnknownLabel
from .field import FieldElement, FieldSpec, make_field
from .projective import ProjLine, ProjPoint, incident, meet


class Arrangement:
    """An ordered set of s >= 1 pairwise distinct lines with optional labels."""

    def __init__(self, field: FieldSpec, lines: Sequence[ProjLine],
                 labels: Optional[Sequence[str]] = None):
        lines = tuple(lines)
        if not lines:
            raise ValueError("an arrangement needs at least one line")
        for L in lines:
            if L.field != field:
                raise ValueError(f"line {L!r} does not live in {field!r}")
        if len(set(lines)) != len(lines):
            raise ValueError("arrangement lines must be pairwise distinct")
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != len(lines):
                raise ValueError("one label per line expected")
        self.field = field
        self.lines = lines
        self.labels = labels

    @property
    def s(self) -> int:
        return len(self.lines)

    def label_of(self, i: int) -> str:
        return self.labels[i] if self.labels else f"L{i + 1}"

    def line_by_label(self, label: str) -> ProjLine:
        for i in range(self.s):
            if self.label_of(i) == label:
                return self.lines[i]
        raise UnknownLabel(f"no line labelled {label!r}")

    def __repr__(self) -> str:
        return f"Arrangement({self.field!r}, s={self.s})"


@dataclass(frozen=True)
class IntersectionProfile:
    s: int
    points: dict  # ProjPoint -> multiplicity >= 2
    tvec: dict    # k -> t_k

    def t(self, k: int) -> int:
        return self.tvec.get(k, 0)

    def triple_count(self, metric: str = "exact3") -> int:
        """Number of triple points: multiplicity exactly 3, or at least 3."""
        if metric == "exact3":
            return self.t(3)
        if metric == "atleast3":
            return sum(t for k, t in self.tvec.items() if k >= 3)
        raise ValueError(f"unknown metric {metric!r}")


def profile(A: Arrangement) -> IntersectionProfile:
    """Group all pairwise meets by point and count multiplicities."""
    pts = set()
    for L1, L2 in itertools.combinations(A.lines, 2):
        pts.add(meet(L1, L2))
    points = {}
    for P in pts:
        m = sum(1 for L in A.lines if incident(P, L))
        points[P] = m
    tvec: dict[int, int] = {}
    for m in points.values():
        tvec[m] = tvec.get(m, 0) + 1
    prof = IntersectionProfile(A.s, points, tvec)
    assert check_identity(A.s, tvec), "pair-count identity violated"
    return prof


def check_identity(s: int, tvec: dict) -> bool:
    """C(s,2) == sum_k t_k * C(k,2)."""
    return comb(s, 2) == sum(t * comb(k, 2) for k, t in tvec.items())


@dataclass(frozen=True)
class LineParity:
    label: str
    point_multiplicities: tuple
    identity_holds: bool       # s - 1 == sum (m_i - 1) over points on the line
    only_triple_points: bool


@dataclass(frozen=True)
class ParityReport:
    s: int
    rows: tuple
    all_pass: bool
    lines_with_only_triples: tuple

    @property
    def forces_odd_s(self) -> bool:
        # a line carrying only triple points forces s - 1 to be even
        return bool(self.lines_with_only_triples)


def parity_check(A: Arrangement, prof: Optional[IntersectionProfile] = None) -> ParityReport:
    """Per-line identity s-1 = sum over its profile points of (m_i - 1)."""
    prof = prof or profile(A)
    rows = []
    only_triples = []
    for i, L in enumerate(A.lines):
        mults = tuple(sorted(m for P, m in prof.points.items() if incident(P, L)))
        holds = (A.s - 1) == sum(m - 1 for m in mults)
        only3 = bool(mults) and all(m == 3 for m in mults)
        if only3:
            only_triples.append(A.label_of(i))
        rows.append(LineParity(A.label_of(i), mults, holds, only3))
    return ParityReport(A.s, tuple(rows), all(r.identity_holds for r in rows),
                        tuple(only_triples))


@dataclass(frozen=True)
class IncidenceTable:
    row_labels: tuple
    col_labels: tuple
    cells: tuple  # tuple of tuples of bool

    def cell(self, row_label: str, col_label: str) -> bool:
        try:
            i = self.row_labels.index(row_label)
            j = self.col_labels.index(col_label)
        except ValueError as exc:
            raise UnknownLabel(str(exc)) from exc
        return self.cells[i][j]

    def column_sums(self) -> tuple:
        return tuple(sum(1 for row in self.cells if row[j])
                     for j in range(len(self.col_labels)))

    def to_csv(self) -> str:
        lines = ["," + ",".join(self.col_labels)]
        for label, row in zip(self.row_labels, self.cells):
            lines.append(label + "," + ",".join("+" if c else "" for c in row))
        return "\n".join(lines) + "\n"


def table(A: Arrangement, points: Optional[Sequence[tuple[str, ProjPoint]]] = None,
          min_multiplicity: int = 2) -> IncidenceTable:
    """Incidence table of the arrangement against its profile points.

    Columns default to all points of multiplicity >= min_multiplicity in a
    deterministic order; callers may pass labelled points instead.
    """
    if points is None:
        prof = profile(A) if A.s >= 2 else IntersectionProfile(A.s, {}, {})
        chosen = sorted((P for P, m in prof.points.items() if m >= min_multiplicity))
        points = [(f"P{j + 1}", P) for j, P in enumerate(chosen)]
    row_labels = tuple(A.label_of(i) for i in range(A.s))
    col_labels = tuple(label for label, _ in points)
    cells = tuple(tuple(incident(P, L) for _, P in points) for L in A.lines)
    return IncidenceTable(row_labels, col_labels, cells)


def remove_line(A: Arrangement, index: int) -> Arrangement:
    if not (0 <= index < A.s):
        raise IndexOutOfRange(f"line index {index} out of range for s={A.s}")
    if A.s == 1:
        raise IndexOutOfRange("removing the only line would leave an empty arrangement")
    lines = A.lines[:index] + A.lines[index + 1:]
    labels = None
    if A.labels:
        labels = A.labels[:index] + A.labels[index + 1:]
    return Arrangement(A.field, lines, labels)


# ---------------------------------------------------------------------------
# field-free incidence structure and isomorphism testing
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AbstractIncidence:
    """Blocks of line indices, one per intersection point of multiplicity >= 2.

    A partial linear space: two line indices share at most one block.
    """

    num_lines: int
    blocks: tuple  # tuple of frozensets of line indices

    def __post_init__(self):
        seen = set()
        for b1, b2 in itertools.combinations(self.blocks, 2):
            inter = b1 & b2
            if len(inter) > 1:
                raise ValueError("two lines meet in more than one block")
        for b in self.blocks:
            if len(b) < 2:
                raise ValueError("blocks record concurrences of at least two lines")
            if min(b) < 0 or max(b) >= self.num_lines:
                raise ValueError("block indices out of range")
            seen.add(b)
        if len(seen) != len(self.blocks):
            raise ValueError("duplicate blocks")


def abstract(A: Arrangement, prof: Optional[IntersectionProfile] = None) -> AbstractIncidence:
    prof = prof or profile(A)
    blocks = []
    for P in sorted(prof.points):
        blocks.append(frozenset(i for i, L in enumerate(A.lines) if incident(P, L)))
    blocks.sort(key=lambda b: (len(b), sorted(b)))
    return AbstractIncidence(A.s, tuple(blocks))


def _line_signature(X: AbstractIncidence) -> list[tuple]:
    """Per line, the sorted multiset of sizes of blocks containing it."""
    sig = [[] for _ in range(X.num_lines)]
    for b in X.blocks:
        for i in b:
            sig[i].append(len(b))
    return [tuple(sorted(s)) for s in sig]


def isomorphic(X: AbstractIncidence, Y: AbstractIncidence) -> bool:
    """Line-relabelling equivalence, by backtracking with degree pruning."""
    if X.num_lines != Y.num_lines:
        return False
    if sorted(len(b) for b in X.blocks) != sorted(len(b) for b in Y.blocks):
        return False
    sig_x, sig_y = _line_signature(X), _line_signature(Y)
    if sorted(sig_x) != sorted(sig_y):
        return False

    n = X.num_lines
    blocks_x = set(X.blocks)
    blocks_y = set(Y.blocks)
    # map most-constrained lines first
    order = sorted(range(n), key=lambda i: (-len(sig_x[i]), sig_x[i]))
    mapping = [-1] * n
    used = [False] * n

    blocks_of_x = [[b for b in X.blocks if i in b] for i in range(n)]

    def consistent(i: int, j: int) -> bool:
        if sig_x[i] != sig_y[j]:
            return False
        # every fully-mapped block through i must land on a block of Y
        for b in blocks_of_x[i]:
            img = set()
            complete = True
            for u in b:
                v = j if u == i else mapping[u]
                if v == -1:
                    complete = False
                    break
                img.add(v)
            if complete and frozenset(img) not in blocks_y:
                return False
        return True

    def extend(pos: int) -> bool:
        if pos == n:
            mapped = {frozenset(mapping[u] for u in b) for b in blocks_x}
            return mapped == blocks_y
        i = order[pos]
        for j in range(n):
            if used[j] or not consistent(i, j):
                continue
            mapping[i] = j
            used[j] = True
            if extend(pos + 1):
                return True
            mapping[i] = -1
            used[j] = False
        return False

    return extend(0)


# ---------------------------------------------------------------------------
# arrangement files
# ---------------------------------------------------------------------------

def _element_to_json(e: FieldElement):
    return e.index if e.field.k == 1 else list(e.coeffs)


def field_to_json(F: FieldSpec) -> dict:
    d = {"p": F.p, "k": F.k}
    if F.k > 1:
        d["modulus"] = list(F.modulus)
    return d


def field_from_json(d: dict) -> FieldSpec:
    return make_field(d["p"], d.get("k", 1), d.get("modulus"))


def arrangement_to_json(A: Arrangement) -> dict:
    d = {
        "field": field_to_json(A.field),
        "lines": [[_element_to_json(c) for c in L.coords] for L in A.lines],
    }
    if A.labels:
        d["labels"] = list(A.labels)
    return d


def arrangement_from_json(d: dict) -> Arrangement:
    F = field_from_json(d["field"])
    lines = [ProjLine(F, [F.element(c) for c in coords]) for coords in d["lines"]]
    return Arrangement(F, lines, d.get("labels"))


def save_arrangement(A: Arrangement, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(arrangement_to_json(A), fh, indent=2)
        fh.write("\n")


def load_arrangement(path: str) -> Arrangement:
    with open(path, "r", encoding="utf-8") as fh:
        return arrangement_from_json(json.load(fh))
