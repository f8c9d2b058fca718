"""Linear spaces, parallelisms, affine planes and the point-deletion
construction, plus the translation to and from edge colourings.

Points are integers 0..point_count-1; lines are frozensets of points; a
parallelism is a partition of line indices into blocks whose lines are
pairwise disjoint.  Block i+1 becomes edge colour i+1 in the colouring
translation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations

from .colouring import EdgeColouring

MAX_WITNESSES = 16


@dataclass(frozen=True)
class LinearSpace:
    point_count: int
    lines: tuple  # tuple of frozensets of points

    def __post_init__(self):
        for line in self.lines:
            if not all(0 <= p < self.point_count for p in line):
                raise ValueError("line contains an unknown point")

    def line_through(self):
        """Map each point pair to the index of its (unique) line, or raise."""
        through = {}
        for idx, line in enumerate(self.lines):
            for p, q in combinations(sorted(line), 2):
                if (p, q) in through:
                    raise ValueError(f"points {p},{q} lie on two lines")
                through[(p, q)] = idx
        return through

    def to_json(self, parallelism=None) -> str:
        doc = {"points": self.point_count,
               "lines": [sorted(line) for line in self.lines]}
        if parallelism is not None:
            doc["blocks"] = [sorted(b) for b in parallelism.blocks]
        return json.dumps(doc, indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str):
        doc = json.loads(text)
        sp = cls(doc["points"], tuple(frozenset(l) for l in doc["lines"]))
        if "blocks" in doc:
            return sp, Parallelism(tuple(tuple(b) for b in doc["blocks"]))
        return sp


@dataclass(frozen=True)
class Parallelism:
    blocks: tuple  # tuple of tuples of line indices


@dataclass
class SpaceReport:
    valid: bool
    uncovered_pairs: list = field(default_factory=list)
    multi_covered_pairs: list = field(default_factory=list)
    double_meets: list = field(default_factory=list)
    short_lines: list = field(default_factory=list)


def validate_space(sp: LinearSpace) -> SpaceReport:
    """Check the three linear-space axioms, with witnesses."""
    report = SpaceReport(valid=True)
    cover = {}
    for idx, line in enumerate(sp.lines):
        if len(line) < 2:
            report.short_lines.append(idx)
        for p, q in combinations(sorted(line), 2):
            cover.setdefault((p, q), []).append(idx)
    for p, q in combinations(range(sp.point_count), 2):
        hits = cover.get((p, q), [])
        if not hits:
            report.uncovered_pairs.append((p, q))
        elif len(hits) > 1:
            report.multi_covered_pairs.append((p, q))
    for i, j in combinations(range(len(sp.lines)), 2):
        if len(sp.lines[i] & sp.lines[j]) > 1:
            report.double_meets.append((i, j))
    report.valid = not (report.uncovered_pairs or report.multi_covered_pairs
                        or report.double_meets or report.short_lines)
    return report


@dataclass
class ParallelismReport:
    valid: bool
    not_a_partition: bool = False
    crossing_pairs: list = field(default_factory=list)


def validate_parallelism(sp: LinearSpace, pw: Parallelism) -> ParallelismReport:
    report = ParallelismReport(valid=True)
    seen = [idx for block in pw.blocks for idx in block]
    if sorted(seen) != list(range(len(sp.lines))):
        report.not_a_partition = True
    for block in pw.blocks:
        for i, j in combinations(sorted(block), 2):
            if sp.lines[i] & sp.lines[j]:
                report.crossing_pairs.append((i, j))
    report.valid = not (report.not_a_partition or report.crossing_pairs)
    return report


@dataclass
class Ls4Report:
    valid: bool
    blocks_without_long_line: list = field(default_factory=list)


def check_ls4(sp: LinearSpace, pw: Parallelism) -> Ls4Report:
    """Each parallel class must contain a line with at least 3 points."""
    bad = [b for b, block in enumerate(pw.blocks)
           if not any(len(sp.lines[i]) >= 3 for i in block)]
    return Ls4Report(valid=not bad, blocks_without_long_line=bad)


@dataclass
class Ls5Report:
    valid: bool
    witnesses: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)


def check_ls5(sp: LinearSpace, pw: Parallelism) -> Ls5Report:
    """Each triple of distinct parallel classes needs three points in
    general position whose pairwise lines lie in those classes.

    Only distinct class triples are checked; the monochromatic requirement
    is LS4's job and the dichromatic combination cannot occur under a
    parallelism.
    """
    through = sp.line_through()
    block_of = {}
    for b, block in enumerate(pw.blocks):
        for idx in block:
            block_of[idx] = b
    realised = {}
    for p, q, r in combinations(range(sp.point_count), 3):
        bpq = block_of[through[(p, q)]]
        bqr = block_of[through[(q, r)]]
        bpr = block_of[through[(p, r)]]
        key = frozenset({bpq, bqr, bpr})
        if len(key) == 3 and key not in realised:
            realised[key] = (p, q, r)
    report = Ls5Report(valid=True)
    for combo in combinations(range(len(pw.blocks)), 3):
        key = frozenset(combo)
        if key in realised:
            report.witnesses[combo] = realised[key]
        else:
            if len(report.failures) < MAX_WITNESSES:
                report.failures.append(combo)
            report.valid = False
    return report


def near_pencil(n: int):
    """One long line through all points but the apex, plus the 2-point
    lines through the apex; trivial parallelism (one line per block)."""
    if n < 3:
        raise ValueError("near pencil needs at least 3 points")
    lines = [frozenset(range(1, n))]
    lines += [frozenset({0, i}) for i in range(1, n)]
    pw = Parallelism(tuple((i,) for i in range(len(lines))))
    return LinearSpace(n, tuple(lines)), pw


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def affine_plane(p: int):
    """The affine plane AG(2, p) over the prime field Z_p.

    Points are pairs (x, y) encoded as p*x + y.  Lines y = s*x + b come
    first, grouped by slope s, then the verticals x = c; the parallelism
    has one block per slope and one for the verticals.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    lines = []
    blocks = []
    for s in range(p):
        block = []
        for b in range(p):
            block.append(len(lines))
            lines.append(frozenset(p * x + (s * x + b) % p for x in range(p)))
        blocks.append(tuple(block))
    block = []
    for c in range(p):
        block.append(len(lines))
        lines.append(frozenset(p * c + y for y in range(p)))
    blocks.append(tuple(block))
    return LinearSpace(p * p, tuple(lines)), Parallelism(tuple(blocks))


def affine_plane_order4():
    """The affine plane AG(2, 4) over the four-element field.

    The point-deletion construction cannot reach a 6-block parallelism from
    a prime-order plane (deleting from the order-3 plane leaves only
    2-point lines in the new pencil), so the order-4 plane is provided
    explicitly.  GF(4) addition is bitwise xor on {0,1,2,3}; the
    multiplication table is hard-coded.
    """
    mul = ((0, 0, 0, 0),
           (0, 1, 2, 3),
           (0, 2, 3, 1),
           (0, 3, 1, 2))
    lines = []
    blocks = []
    for s in range(4):
        block = []
        for b in range(4):
            block.append(len(lines))
            lines.append(frozenset(4 * x + (mul[s][x] ^ b) for x in range(4)))
        blocks.append(tuple(block))
    block = []
    for c in range(4):
        block.append(len(lines))
        lines.append(frozenset(4 * c + y for y in range(4)))
    blocks.append(tuple(block))
    return LinearSpace(16, tuple(lines)), Parallelism(tuple(blocks))


def drop_points(plane, dropped):
    """Delete a point set from an affine plane and regroup the parallelism.

    Lines through exactly one deleted point form a new pencil direction for
    that point; all other lines keep their old direction.  For a plane of
    order q and k = |dropped| <= q - 2 the result has q + k + 1 blocks and
    satisfies all five axioms.
    """
    sp, pw = plane
    dropped = list(dropped)
    d_set = list(dict.fromkeys(dropped))
    if len(d_set) != len(dropped):
        raise ValueError("dropped points contain duplicates")
    sizes = {len(line) for line in sp.lines}
    if len(sizes) != 1:
        raise ValueError("not an affine plane: line sizes differ")
    q = sizes.pop()
    if q * q != sp.point_count or q < 3:
        raise ValueError("not an affine plane of order >= 3")
    k = len(d_set)
    if k > q - 2:
        raise ValueError(f"can delete at most {q - 2} points")
    for point in d_set:
        if not 0 <= point < sp.point_count:
            raise ValueError(f"point {point} not in the plane")

    keep = [p for p in range(sp.point_count) if p not in d_set]
    new_index = {p: i for i, p in enumerate(keep)}
    d_frozen = frozenset(d_set)

    new_lines = []
    line_map = {}  # old line index -> new line index
    for idx, line in enumerate(sp.lines):
        trimmed = frozenset(new_index[p] for p in line - d_frozen)
        line_map[idx] = len(new_lines)
        new_lines.append(trimmed)

    old_blocks = []
    for block in pw.blocks:
        kept = tuple(line_map[i] for i in block
                     if len(sp.lines[i] & d_frozen) != 1)
        old_blocks.append(kept)
    new_blocks = []
    for point in d_set:
        pencil = tuple(line_map[i] for i, line in enumerate(sp.lines)
                       if len(line & d_frozen) == 1 and point in line)
        new_blocks.append(pencil)
    out_sp = LinearSpace(len(keep), tuple(new_lines))
    out_pw = Parallelism(tuple(old_blocks) + tuple(new_blocks))
    return out_sp, out_pw


def colouring_from_parallelism(sp: LinearSpace, pw: Parallelism) -> EdgeColouring:
    """Colour each point pair by the block of its line (1-based)."""
    if not validate_space(sp).valid:
        raise ValueError("invalid linear space")
    if not validate_parallelism(sp, pw).valid:
        raise ValueError("invalid parallelism")
    through = sp.line_through()
    block_of = {}
    for b, block in enumerate(pw.blocks):
        for idx in block:
            block_of[idx] = b

    def colour_of(i, j):
        return block_of[through[(i, j)]] + 1

    return EdgeColouring.from_function(sp.point_count, len(pw.blocks),
                                       colour_of)


def linear_space_from_colouring(col: EdgeColouring):
    """Recover a linear space from a colouring with no dichromatic triangle.

    Each colour class is then a disjoint union of cliques; the cliques are
    the lines and the classes the parallel blocks.
    """
    from .algebra import Signature
    from .colouring import Level, verify

    sig = Signature(frozenset({1, 3}), col.n)
    if verify(col, sig, Level.FEEBLE).forbidden_total:
        raise ValueError("colouring has a dichromatic triangle")
    if len(col.used_colours()) != col.n:
        raise ValueError("colouring does not use every colour")
    lines = []
    blocks = []
    for c in range(1, col.n + 1):
        adj = {v: set() for v in range(col.m)}
        for i, j, colc in col.edges():
            if colc == c:
                adj[i].add(j)
                adj[j].add(i)
        seen = set()
        block = []
        for v in range(col.m):
            if v in seen or not adj[v]:
                continue
            comp = {v}
            frontier = [v]
            while frontier:
                w = frontier.pop()
                for u in adj[w]:
                    if u not in comp:
                        comp.add(u)
                        frontier.append(u)
            seen |= comp
            block.append(len(lines))
            lines.append(frozenset(comp))
        blocks.append(tuple(block))
    return LinearSpace(col.m, tuple(lines)), Parallelism(tuple(blocks))


def same_space(a, b) -> bool:
    """Structural equality on the identity point map: same line sets and
    the same partition of lines into blocks (block order ignored)."""
    sp_a, pw_a = a
    sp_b, pw_b = b
    if sp_a.point_count != sp_b.point_count:
        return False
    if set(sp_a.lines) != set(sp_b.lines):
        return False
    blocks_a = {frozenset(sp_a.lines[i] for i in block) for block in pw_a.blocks}
    blocks_b = {frozenset(sp_b.lines[i] for i in block) for block in pw_b.blocks}
    return blocks_a == blocks_b
