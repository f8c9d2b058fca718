"""Explicit representations per signature, where a closed construction exists.

``construct`` dispatches on the signature and requested level and returns
either a verified colouring, a ``NotConstructible`` verdict, or
``DelegatedToSearch`` when only exhaustive search can settle the request.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .algebra import Signature
from .colouring import EdgeColouring, Level, edge_list, verify
from .geometry import (affine_plane, affine_plane_order4,
                       colouring_from_parallelism, drop_points, is_prime,
                       near_pencil)
from .quasigroup import lambda2, standard_qn


@dataclass(frozen=True)
class NotConstructible:
    reason: str
    # True when the reason is a nonexistence result rather than a gap in
    # what this library builds
    nonexistent: bool = False


@dataclass(frozen=True)
class DelegatedToSearch:
    reason: str


@dataclass(frozen=True)
class ConstructionRequest:
    sig: Signature
    level: Level


def wrap_colour(n: int, x: int) -> int:
    """Fold an integer (possibly negative) into the colour range 1..n."""
    return (x - 1) % n + 1


def single_colour(m: int) -> EdgeColouring:
    return EdgeColouring(m, 1, (1,) * (m * (m - 1) // 2))


def pentagon() -> EdgeColouring:
    """C_5 edges in colour 1, diagonals in colour 2."""
    def colour_of(i, j):
        return 1 if (j - i) % 5 in (1, 4) else 2
    return EdgeColouring.from_function(5, 2, colour_of)


def chain_colouring(n: int) -> EdgeColouring:
    """K_{n+1} with colour(v_i, v_j) = j for i < j: every triangle is
    dichromatic and every colour occurs."""
    if n < 2:
        raise ValueError("chain colouring needs at least 2 colours")
    return EdgeColouring.from_function(n + 1, n, lambda i, j: max(i, j))


def walecki(n: int) -> EdgeColouring:
    """Zigzag Hamiltonian-path decomposition of K_{2n}, one colour per
    rotation; no monochromatic triangle, all other triangles realised."""
    if n < 1:
        raise ValueError("need at least one colour")

    def colour_of(u, v):
        i = u + 1
        s = (v - u) % (2 * n)
        return wrap_colour(n, (s + 2) // 2 + i - 1)

    return EdgeColouring.from_function(2 * n, n, colour_of)


def walecki_witness(n: int, i: int, j: int, k: int):
    """A vertex triple of walecki(n) whose triangle carries colours i, j, k.

    Requires 1 <= i < j <= n and 1 <= k <= n.  Returns 0-based vertices
    (x, y, z) with colour(x,y) = i, colour(x,z) = j and colour(y,z) = k.
    """
    if not (1 <= i < j <= n and 1 <= k <= n):
        raise ValueError("need 1 <= i < j <= n and k in 1..n")
    two_n = 2 * n
    ell = (i + j - k - 1) % two_n + 1
    if k != i:
        s, t = 2 * k - 2 * j + 1, 2 * k - 2 * i
    else:
        s, t = 2 * k - 2 * j, 2 * k - 2 * i + 1

    def vertex(x):
        return (x - 1) % two_n  # 1-based circle label to internal index

    return vertex(ell), vertex(ell + s), vertex(ell + t)


def _even_trichromatic_feeble(n: int) -> EdgeColouring:
    """Feeble colouring for S = {3} with an even colour count: take the
    qualitative representation one colour down and recolour the first edge
    with the new colour."""
    base = lambda2(standard_qn(n - 1))
    cols = list(base.colours)
    cols[0] = n
    return EdgeColouring(base.m, n, tuple(cols))


def _disjoint_triangle_filler(sig: Signature) -> EdgeColouring:
    """One triangle per required colour multiset, disjointly, with colour 1
    on every cross edge.  Sound whenever 1 and 2 are consistent types."""
    from .colouring import required_multisets
    multisets = required_multisets(sig)
    m = 3 * len(multisets)
    cols = {}
    for idx, (a, b, c) in enumerate(multisets):
        base = 3 * idx
        cols[(base, base + 1)] = a
        cols[(base + 1, base + 2)] = b
        cols[(base, base + 2)] = c
    colours = tuple(cols.get((i, j), 1) for i, j in edge_list(m))
    return EdgeColouring(m, sig.n, colours)


def _lyndon_qualitative(n: int) -> EdgeColouring:
    """Qualitative Lyndon representation: delete points from the affine
    plane over the least admissible prime.

    Five colours are the one case the deletion construction cannot reach:
    the only admissible prime is 3, and deleting a point from the order-3
    plane leaves a pencil of 2-point lines with no monochromatic triangle.
    The order-4 plane covers that gap directly.
    """
    if n == 5:
        return colouring_from_parallelism(*affine_plane_order4())
    primes = [p for p in range((n + 2) // 2, n) if is_prime(p)]
    if not primes:
        raise RuntimeError(
            f"no prime p with p + 1 <= {n} <= 2p - 1; unreachable for n >= 4")
    p = primes[0]
    k = n - p - 1
    geometry = drop_points(affine_plane(p), range(k))
    return colouring_from_parallelism(*geometry)


def construct(sig: Signature, level: Level):
    """Build a representation at the requested level, if the library knows
    a closed construction for the signature."""
    result = _dispatch(sig, level)
    if isinstance(result, EdgeColouring):
        report = verify(result, sig, level)
        if not report.passed:
            raise AssertionError(
                f"construction defect for {sig} at {level.value}: "
                f"{report.summary()}")
    return result


def _dispatch(sig: Signature, level: Level):
    s, n = sig.s_set, sig.n
    if n == 1:
        # one proper colour: a single triangle type matters
        return single_colour(3) if 1 in s else single_colour(2)

    if s == frozenset():
        return NotConstructible(
            "all triangle types forbidden: only the one-colour K_2 exists",
            nonexistent=True)
    if s == frozenset({1}):
        return NotConstructible(
            "only monochromatic triangles allowed: a second colour would "
            "force a forbidden triangle", nonexistent=True)

    if s == frozenset({3}):
        if n % 2 == 0:
            if level is Level.FEEBLE and n >= 4:
                return _even_trichromatic_feeble(n)
            return NotConstructible(
                "trichromatic-only colourings exist qualitatively only for "
                "odd colour counts", nonexistent=True)
        if level is Level.STRONG:
            if n == 3:
                return lambda2(standard_qn(3))
            return NotConstructible(
                "the trichromatic algebras are nonassociative beyond three "
                "colours", nonexistent=True)
        return lambda2(standard_qn(n))

    if s == frozenset({2}):
        if level is Level.FEEBLE:
            return chain_colouring(n)
        if n == 2:
            return pentagon()
        return NotConstructible(
            "no qualitative dichromatic-only representation exists beyond "
            "two colours", nonexistent=True)

    if s == frozenset({2, 3}):
        if level is Level.STRONG:
            if n <= 4:
                return DelegatedToSearch(
                    "strong Ramsey representations are settled by search at "
                    "small colour counts only")
            return NotConstructible(
                "strong Ramsey representations need finite-field machinery "
                "not included here")
        return walecki(n)

    if s == frozenset({1, 3}):
        if level is Level.STRONG:
            if n >= 4 and is_prime(n - 1):
                return colouring_from_parallelism(*affine_plane(n - 1))
            if n == 5:
                return colouring_from_parallelism(*affine_plane_order4())
            if n == 3:
                return DelegatedToSearch(
                    "no strong construction below four colours; search "
                    "settles the small case")
            return NotConstructible(
                "strong Lyndon representations correspond to affine planes "
                f"of order {n - 1}; none is built here")
        if level is Level.QUALITATIVE:
            if n >= 4:
                return _lyndon_qualitative(n)
            return DelegatedToSearch(
                "three-colour Lyndon qualitative existence is settled by "
                "exhaustive search")
        if n >= 3:
            return colouring_from_parallelism(*near_pencil(n))
        return DelegatedToSearch("no two-colour Lyndon construction known")

    if s == frozenset({1, 2}):
        if level is Level.FEEBLE:
            return chain_colouring(n)
        return DelegatedToSearch(
            "non-feeble representations for this signature are found by "
            "search only")

    if s == frozenset({1, 2, 3}):
        if level is Level.STRONG:
            return NotConstructible(
                "finite strong representations exist in the literature but "
                "no construction is included here")
        return _disjoint_triangle_filler(sig)

    raise AssertionError(f"unhandled signature {sig}")
