"""Edge-coloured complete graphs and the verification predicates.

An :class:`EdgeColouring` assigns a colour from ``{1..n}`` to every
unordered pair of distinct vertices of a complete graph; the diagonal
carries the invisible identity colour and is never stored.  The three
verification levels (feeble, qualitative, strong) ask progressively more
of the triangles the colouring realises.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations

MAX_WITNESSES = 16


class Level(Enum):
    FEEBLE = "feeble"
    QUALITATIVE = "qualitative"
    STRONG = "strong"

    @property
    def rank(self) -> int:
        return {"feeble": 0, "qualitative": 1, "strong": 2}[self.value]


def edge_index(i: int, j: int) -> int:
    """Position of edge {i,j} in the fixed edge enumeration.

    Edges are ordered (0,1),(0,2),(1,2),(0,3),(1,3),(2,3),... so that all
    edges incident to a new vertex come after every edge among earlier
    vertices.  Canonicalization and search both rely on this order.
    """
    if i == j:
        raise ValueError("no self-edges")
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def edge_list(m: int) -> list[tuple[int, int]]:
    """All edges of K_m in enumeration order."""
    return [(i, j) for j in range(m) for i in range(j)]


@dataclass(frozen=True)
class EdgeColouring:
    """Symmetric proper-colour assignment on the edges of K_m.

    ``colours`` holds one entry per edge in enumeration order.  Instances
    are immutable and safe to share between threads.
    """

    m: int
    n: int
    colours: tuple[int, ...]

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("need at least one vertex")
        if self.n < 1:
            raise ValueError("need at least one colour")
        expected = self.m * (self.m - 1) // 2
        if len(self.colours) != expected:
            raise ValueError(
                f"expected {expected} edge colours, got {len(self.colours)}")
        for c in self.colours:
            if not 1 <= c <= self.n:
                raise ValueError(f"colour {c} outside 1..{self.n}")

    @classmethod
    def from_function(cls, m: int, n: int, colour_of) -> "EdgeColouring":
        cols = tuple(colour_of(i, j) for i, j in edge_list(m))
        return cls(m, n, cols)

    def colour(self, i: int, j: int) -> int:
        return self.colours[edge_index(i, j)]

    def edges(self):
        """Yield (i, j, colour) triples with i < j in enumeration order."""
        for (i, j), c in zip(edge_list(self.m), self.colours):
            yield i, j, c

    def used_colours(self) -> set[int]:
        return set(self.colours)

    def to_json(self, signature=None) -> str:
        doc = {"vertices": self.m,
               "edges": sorted([i, j, c] for i, j, c in self.edges())}
        if signature is not None:
            doc["signature"] = {"s": sorted(signature.s_set), "n": signature.n}
        doc.setdefault("colours", self.n)
        return json.dumps(doc, indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "EdgeColouring":
        doc = json.loads(text)
        m = doc["vertices"]
        n = doc.get("colours") or doc["signature"]["n"]
        cols = [0] * (m * (m - 1) // 2)
        seen = 0
        for i, j, c in doc["edges"]:
            cols[edge_index(i, j)] = c
            seen += 1
        if seen != len(cols):
            raise ValueError("edge list does not cover K_m")
        return cls(m, n, tuple(cols))

    def to_dot(self) -> str:
        """Undirected DOT export with a fixed 12-colour palette.

        Colour index k maps to PALETTE[(k-1) % 12]; beyond 12 colours the
        palette cycles and a numeric suffix keeps labels distinct.
        """
        lines = ["graph colouring {"]
        for i, j, c in self.edges():
            name = DOT_PALETTE[(c - 1) % len(DOT_PALETTE)]
            lines.append(f'  {i} -- {j} [color={name}, label="{c}"];')
        lines.append("}")
        return "\n".join(lines)


DOT_PALETTE = ("red", "blue", "green", "orange", "purple", "brown",
               "cyan", "magenta", "gold", "gray", "darkgreen", "navy")


def classify_triangle(col: EdgeColouring, x: int, y: int, z: int) -> int:
    """Number of distinct colours on the sides of triangle {x,y,z}."""
    if len({x, y, z}) != 3:
        raise ValueError("triangle vertices must be distinct")
    return len({col.colour(x, y), col.colour(y, z), col.colour(x, z)})


def required_multisets(sig) -> list[tuple[int, int, int]]:
    """Sorted proper-colour multisets a qualitative representation must realise."""
    out = []
    for a in range(1, sig.n + 1):
        for b in range(a, sig.n + 1):
            for c in range(b, sig.n + 1):
                if len({a, b, c}) in sig.s_set:
                    out.append((a, b, c))
    return out


@dataclass
class VerificationReport:
    level_requested: Level
    passed: bool
    surjective: bool
    # (vertex triple, colour triple) for triangles whose type is forbidden
    forbidden_witnesses: list = field(default_factory=list)
    forbidden_total: int = 0
    # sorted colour multisets required but never realised
    missing_required: list = field(default_factory=list)
    # ((x, y), (a, b, c)) with no witness vertex; (v, v), (a, a, 0) marks a
    # vertex not incident to colour a (the identity-triple witness condition)
    strong_failures: list = field(default_factory=list)
    strong_total: int = 0

    def summary(self) -> str:
        if self.passed:
            return f"{self.level_requested.value}: pass"
        bits = []
        if not self.surjective:
            bits.append("not surjective")
        if self.forbidden_total:
            bits.append(f"{self.forbidden_total} forbidden triangle(s)")
        if self.missing_required:
            bits.append(f"missing multisets {self.missing_required}")
        if self.strong_total:
            bits.append(f"{self.strong_total} unwitnessed edge/triple pair(s)")
        return f"{self.level_requested.value}: FAIL ({'; '.join(bits)})"


def _colour_neighbours(col: EdgeColouring):
    """neigh[v][c] = set of w with colour(v,w) = c."""
    neigh = [[set() for _ in range(col.n + 1)] for _ in range(col.m)]
    for i, j, c in col.edges():
        neigh[i][c].add(j)
        neigh[j][c].add(i)
    return neigh


def verify(col: EdgeColouring, sig, level: Level) -> VerificationReport:
    """Check a colouring against a chromatic signature at the given level.

    Feeble: no triangle of a type in F occurs and every colour is used.
    Qualitative: additionally every consistent proper-colour multiset is
    realised by some triangle.  Strong: additionally every edge witnesses
    every consistent triple on its colour, and every vertex is incident to
    every colour.
    """
    if col.n != sig.n:
        raise ValueError(f"colouring has {col.n} colours, signature wants {sig.n}")
    report = VerificationReport(level_requested=level, passed=False,
                                surjective=len(col.used_colours()) == sig.n)
    forbidden = sig.forbidden
    realized = set()
    for x, y, z in combinations(range(col.m), 3):
        a, b, c = col.colour(x, y), col.colour(y, z), col.colour(x, z)
        kind = len({a, b, c})
        if kind in forbidden:
            report.forbidden_total += 1
            if len(report.forbidden_witnesses) < MAX_WITNESSES:
                report.forbidden_witnesses.append(((x, y, z), (a, b, c)))
        else:
            realized.add(tuple(sorted((a, b, c))))

    if level.rank >= Level.QUALITATIVE.rank:
        report.missing_required = [t for t in required_multisets(sig)
                                   if t not in realized]

    if level.rank >= Level.STRONG.rank:
        neigh = _colour_neighbours(col)
        consistent_pairs = [[] for _ in range(sig.n + 1)]
        for c in range(1, sig.n + 1):
            for a in range(1, sig.n + 1):
                for b in range(1, sig.n + 1):
                    if len({a, b, c}) in sig.s_set:
                        consistent_pairs[c].append((a, b))
        for v in range(col.m):
            for a in range(1, sig.n + 1):
                if not neigh[v][a]:
                    report.strong_total += 1
                    if len(report.strong_failures) < MAX_WITNESSES:
                        report.strong_failures.append(((v, v), (a, a, 0)))
        for i, j, c in col.edges():
            for a, b in consistent_pairs[c]:
                if not (neigh[i][a] & neigh[j][b]):
                    report.strong_total += 1
                    if len(report.strong_failures) < MAX_WITNESSES:
                        report.strong_failures.append(((i, j), (a, b, c)))

    report.passed = (report.surjective and report.forbidden_total == 0
                     and not report.missing_required
                     and report.strong_total == 0)
    return report


def chromatic_degree(col: EdgeColouring, v: int) -> int:
    """Number of distinct colours on the edges incident to v."""
    if not 0 <= v < col.m:
        raise ValueError(f"vertex {v} out of range")
    return len({col.colour(v, w) for w in range(col.m) if w != v})


def saturate(col: EdgeColouring, v: int, sig) -> EdgeColouring:
    """Extend a {2}-feeble colouring so that v meets all n colours.

    Adds one vertex per colour missing at v; the new vertex copies v's row
    except for its edge to v, which carries the missing colour.  Valid only
    for S = {2}: the copied row cannot create monochromatic or trichromatic
    triangles there.
    """
    if sig.s_set != frozenset({2}):
        raise ValueError("saturation argument only applies to S = {2}")
    if col.n != sig.n:
        raise ValueError("colour count mismatch")
    base = verify(col, sig, Level.FEEBLE)
    if base.forbidden_total:
        raise ValueError("input already contains a forbidden triangle")
    present = {col.colour(v, w) for w in range(col.m) if w != v}
    missing = [d for d in range(1, sig.n + 1) if d not in present]
    if not missing:
        return col

    cols = {(i, j): c for i, j, c in col.edges()}
    m = col.m
    for d in missing:
        u = m
        for w in range(m):
            if w == v:
                cols[(v, u)] = d
            else:
                cols[(min(w, u), max(w, u))] = cols[(min(w, v), max(w, v))]
        m += 1
    out = EdgeColouring(m, col.n,
                        tuple(cols[(i, j)] for i, j in edge_list(m)))
    assert chromatic_degree(out, v) == sig.n
    assert verify(out, sig, Level.FEEBLE).forbidden_total == 0
    return out


def _code_of_ordering(col: EdgeColouring, order: list[int]) -> tuple[int, ...]:
    """Edge-colour sequence of the relabelled colouring, colours renamed
    by first occurrence along the enumeration order."""
    rename: dict[int, int] = {}
    out = []
    for i, j in edge_list(col.m):
        c = col.colour(order[i], order[j])
        if c not in rename:
            rename[c] = len(rename) + 1
        out.append(rename[c])
    return tuple(out)


def canonical_form(col: EdgeColouring) -> EdgeColouring:
    """Lexicographically minimal relabelling over vertex and colour permutations.

    Branch-and-bound over vertex orderings; colours are normalised by first
    occurrence along the fixed edge enumeration, which makes prefixes of the
    code comparable before the ordering is complete.  Idempotent.
    """
    m = col.m
    best = list(_code_of_ordering(col, list(range(m))))

    def dfs(order, code, rename):
        nonlocal best
        k = len(order)
        if k == m:
            if code < best:
                best = list(code)
            return
        for v in range(m):
            if v in order:
                continue
            new_code = list(code)
            new_rename = dict(rename)
            for i in range(k):
                c = col.colour(order[i], v)
                if c not in new_rename:
                    new_rename[c] = len(new_rename) + 1
                new_code.append(new_rename[c])
            if new_code <= best[:len(new_code)]:
                dfs(order + [v], new_code, new_rename)

    dfs([], [], {})
    return EdgeColouring(m, col.n, tuple(best))


def are_isomorphic(a: EdgeColouring, b: EdgeColouring) -> bool:
    """Equality of canonical forms (vertex and colour permutations allowed)."""
    if a.m != b.m or a.n != b.n:
        return False
    return canonical_form(a).colours == canonical_form(b).colours
