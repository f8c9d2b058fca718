"""Atom structures of chromatic algebras and set composition over them.

Atoms are indexed 0..n with index 0 reserved for the identity atom; proper
colour i has index i.  Sets of atoms are plain integer bitmasks, so
composition and the associativity scan stay cheap.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product

MAX_WITNESSES = 16

IDENTITY = 0


@dataclass(frozen=True)
class Signature:
    """A chromatic algebra selector: consistent triangle types S and the
    number n of proper colours."""

    s_set: frozenset
    n: int

    def __post_init__(self):
        object.__setattr__(self, "s_set", frozenset(self.s_set))
        if not self.s_set <= {1, 2, 3}:
            raise ValueError("triangle types must lie in {1,2,3}")
        if self.n < 1:
            raise ValueError("need at least one proper colour")

    @property
    def forbidden(self) -> frozenset:
        return frozenset({1, 2, 3}) - self.s_set

    @property
    def atom_count(self) -> int:
        return self.n + 1

    def __str__(self):
        s = ",".join(str(x) for x in sorted(self.s_set)) or "∅"
        return f"E_{self.n + 1}^{{{s}}}"


@dataclass(frozen=True)
class AtomStructure:
    """Atoms with converse, identity set and consistent-triple set.

    Immutable; ``triples`` membership is O(1), which is what composition
    and the closure checks lean on.
    """

    atom_count: int
    converse: tuple
    identity: frozenset
    triples: frozenset

    def __post_init__(self):
        if len(self.converse) != self.atom_count:
            raise ValueError("converse must cover every atom")
        for a in range(self.atom_count):
            if self.converse[self.converse[a]] != a:
                raise ValueError(f"converse is not self-inverse at atom {a}")
        for t in self.triples:
            if len(t) != 3 or not all(0 <= a < self.atom_count for a in t):
                raise ValueError(f"triple {t} out of range")

    def conv(self, a: int) -> int:
        return self.converse[a]

    def to_json(self) -> str:
        return json.dumps({
            "atom_count": self.atom_count,
            "identity": sorted(self.identity),
            "converse": list(self.converse),
            "triples": sorted([a, b, c] for a, b, c in self.triples),
        }, indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "AtomStructure":
        doc = json.loads(text)
        return cls(doc["atom_count"], tuple(doc["converse"]),
                   frozenset(doc["identity"]),
                   frozenset(tuple(t) for t in doc["triples"]))


def peircean_transforms(t, structure: AtomStructure) -> set:
    """The six triangle traverses of a triple, duplicates collapsed."""
    a, b, c = t
    for x in t:
        if not 0 <= x < structure.atom_count:
            raise ValueError(f"atom {x} not in structure")
    v = structure.conv
    return {(a, b, c), (v(a), c, b), (c, v(b), a),
            (b, v(c), v(a)), (v(c), a, v(b)), (v(b), v(a), v(c))}


def chromatic_atoms(sig: Signature) -> AtomStructure:
    """Atom structure of the chromatic algebra for a signature.

    The identity atom composes as a unit; a proper triple is consistent
    exactly when its number of distinct colours lies in S.  Identity triples
    are stored together with their Peircean transforms.
    """
    atoms = range(sig.atom_count)
    triples = set()
    for b in atoms:
        triples.update({(IDENTITY, b, b), (b, IDENTITY, b), (b, b, IDENTITY)})
    for a, b, c in product(range(1, sig.atom_count), repeat=3):
        if len({a, b, c}) in sig.s_set:
            triples.add((a, b, c))
    return AtomStructure(sig.atom_count,
                         tuple(atoms),
                         frozenset({IDENTITY}),
                         frozenset(triples))


@dataclass
class AtomStructureReport:
    valid: bool
    identity_violations: list = field(default_factory=list)
    closure_violations: list = field(default_factory=list)
    identity_total: int = 0
    closure_total: int = 0


def check_na_atom_structure(structure: AtomStructure) -> AtomStructureReport:
    """Check the two atom-structure conditions, with witnesses on failure.

    Identity law: b = c iff some identity atom e has (e,b,c) consistent.
    Closure: the consistent triples are closed under Peircean transforms.
    """
    report = AtomStructureReport(valid=True)

    def note(bucket, total_attr, witness):
        setattr(report, total_attr, getattr(report, total_attr) + 1)
        if len(bucket) < MAX_WITNESSES:
            bucket.append(witness)

    atoms = range(structure.atom_count)
    for b in atoms:
        for c in atoms:
            holds = any((e, b, c) in structure.triples
                        for e in structure.identity)
            if holds != (b == c):
                note(report.identity_violations, "identity_total", (b, c))
    for t in structure.triples:
        missing = peircean_transforms(t, structure) - structure.triples
        if missing:
            note(report.closure_violations, "closure_total", t)
    report.valid = report.identity_total == 0 and report.closure_total == 0
    return report


def atom_mask(*atoms: int) -> int:
    mask = 0
    for a in atoms:
        mask |= 1 << a
    return mask


def atoms_in_mask(mask: int):
    a = 0
    while mask:
        if mask & 1:
            yield a
        mask >>= 1
        a += 1


def compose(structure: AtomStructure, a_mask: int, b_mask: int) -> int:
    """Complex-algebra composition of two atom sets (bitmasks)."""
    out = 0
    for s, r, u in structure.triples:
        if a_mask >> s & 1 and b_mask >> r & 1:
            out |= 1 << u
    return out


def converse_mask(structure: AtomStructure, mask: int) -> int:
    out = 0
    for a in atoms_in_mask(mask):
        out |= 1 << structure.conv(a)
    return out


def is_associative(structure: AtomStructure):
    """Whether set composition is associative; returns (flag, witness).

    Checking singleton atom triples suffices because composition
    distributes over union.  The witness is an atom triple (a, b, c) with
    ({a};{b});{c} != {a};({b};{c}), or None.
    """
    if not check_na_atom_structure(structure).valid:
        raise ValueError("not a nonassociative-algebra atom structure")
    atoms = range(structure.atom_count)
    pair = {}
    for a in atoms:
        for b in atoms:
            pair[(a, b)] = compose(structure, 1 << a, 1 << b)
    for a, b, c in product(atoms, repeat=3):
        left = compose(structure, pair[(a, b)], 1 << c)
        right = compose(structure, 1 << a, pair[(b, c)])
        if left != right:
            return False, (a, b, c)
    return True, None
