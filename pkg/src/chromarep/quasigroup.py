"""Commutative idempotent quasigroups and their trichromatic colourings.

The colour convention is fixed package-wide: quasigroup element k
corresponds to edge colour k+1, so public colourings always use {1..n}.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations, product

from .algebra import Signature
from .colouring import EdgeColouring, Level, verify


@dataclass(frozen=True)
class Quasigroup:
    """An order-n Cayley table over {0..n-1}."""

    order: int
    table: tuple

    def __post_init__(self):
        if len(self.table) != self.order:
            raise ValueError("table must have one row per element")
        for row in self.table:
            if len(row) != self.order:
                raise ValueError("table rows must have order entries")

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def to_json(self) -> str:
        return json.dumps({"order": self.order,
                           "table": [list(r) for r in self.table]})

    @classmethod
    def from_json(cls, text: str) -> "Quasigroup":
        doc = json.loads(text)
        return cls(doc["order"], tuple(tuple(r) for r in doc["table"]))


@dataclass
class QuasigroupReport:
    valid: bool
    latin_violations: list = field(default_factory=list)
    commutativity_violations: list = field(default_factory=list)
    idempotency_violations: list = field(default_factory=list)


def validate(q: Quasigroup) -> QuasigroupReport:
    """Check the Latin, commutative and idempotent properties with witnesses."""
    report = QuasigroupReport(valid=True)
    full = set(range(q.order))
    for i in range(q.order):
        if set(q.table[i]) != full:
            report.latin_violations.append(("row", i))
        if {q.table[j][i] for j in range(q.order)} != full:
            report.latin_violations.append(("column", i))
        if q.table[i][i] != i:
            report.idempotency_violations.append((i, i))
        for j in range(i + 1, q.order):
            if q.table[i][j] != q.table[j][i]:
                report.commutativity_violations.append((i, j))
    report.valid = not (report.latin_violations
                        or report.commutativity_violations
                        or report.idempotency_violations)
    return report


def standard_qn(n: int) -> Quasigroup:
    """The halved-sum quasigroup on Z_n: i*j is the u with 2u = i+j (mod n).

    Exists exactly for odd n; idempotent and commutative by construction.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError("order must be odd and at least 3")
    half = pow(2, -1, n)
    table = tuple(tuple((i + j) * half % n for j in range(n))
                  for i in range(n))
    return Quasigroup(n, table)


def three_cycle_condition(q: Quasigroup):
    """Decide whether every 3-element subset is realised as a product cycle.

    For each x < y < z looks for u, v, w with u*v = x, v*w = y, w*u = z;
    since vertex relabellings reach all six assignments, the fixed one
    suffices.  Returns (flag, witnesses) with the lexicographically least
    (u, v, w) per triple, or None where the search fails.
    """
    if not validate(q).valid:
        raise ValueError("not a commutative idempotent quasigroup")
    n = q.order
    witnesses = {}
    ok = True
    pre = {}
    for u, v in product(range(n), repeat=2):
        pre.setdefault((q.mul(u, v), u), []).append(v)
    for x, y, z in combinations(range(n), 3):
        found = None
        for u in range(n):
            if found:
                break
            for v in pre.get((x, u), []):
                ws = [w for w in pre.get((y, v), []) if q.mul(w, u) == z]
                if ws:
                    found = (u, v, min(ws))
                    break
        witnesses[(x, y, z)] = found
        if found is None:
            ok = False
    return ok, witnesses


def lambda1(q: Quasigroup) -> EdgeColouring:
    """Colour edge {i,j} of K_n by the product i*j (shifted to 1-based)."""
    if not validate(q).valid:
        raise ValueError("not a commutative idempotent quasigroup")
    return EdgeColouring.from_function(q.order, q.order,
                                      lambda i, j: q.mul(i, j) + 1)


def lambda2(q: Quasigroup) -> EdgeColouring:
    """Extend lambda1 with one extra vertex joined to each i by colour i+1.

    The extra vertex is the last one (index n); the first n vertices carry
    exactly lambda1, so every original vertex becomes chromatically
    saturated.
    """
    if not validate(q).valid:
        raise ValueError("not a commutative idempotent quasigroup")
    n = q.order

    def colour_of(i, j):
        if j == n:
            return i + 1
        if i == n:
            return j + 1
        return q.mul(i, j) + 1

    return EdgeColouring.from_function(n + 1, n, colour_of)


def quasigroup_from_colouring(col: EdgeColouring) -> Quasigroup:
    """Recover a quasigroup from a trichromatic representation on n+1 points.

    Renumbers vertices so that one hub vertex sees colour i+1 on its edge
    to the vertex named i; the remaining edges then read off the Cayley
    table.  Any vertex works as hub (all are incident to every colour), but
    the recovered quasigroups are generally only isotopic, not isomorphic;
    the last vertex is used so that ``lambda2`` output, whose added vertex
    comes last, round-trips to the original quasigroup exactly.
    """
    n = col.n
    if col.m != n + 1:
        raise ValueError(f"need {n + 1} vertices, got {col.m}")
    sig = Signature(frozenset({3}), n)
    if not verify(col, sig, Level.QUALITATIVE).passed:
        raise ValueError("colouring is not a qualitative trichromatic "
                         "representation")
    hub = col.m - 1
    name = {}  # vertex -> quasigroup element
    for w in range(col.m):
        if w != hub:
            name[w] = col.colour(hub, w) - 1
    table = [[0] * n for _ in range(n)]
    for i in range(n):
        table[i][i] = i
    for v, w in combinations(range(col.m), 2):
        if hub in (v, w):
            continue
        i, j = name[v], name[w]
        table[i][j] = table[j][i] = col.colour(v, w) - 1
    q = Quasigroup(n, tuple(tuple(r) for r in table))
    assert validate(q).valid
    return q
