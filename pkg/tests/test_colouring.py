"""Edge colourings, verification levels, canonical forms."""

import json
from itertools import combinations, permutations

import pytest

from chromarep.algebra import Signature
from chromarep.colouring import (DOT_PALETTE, EdgeColouring, Level,
                                 are_isomorphic, canonical_form,
                                 chromatic_degree, classify_triangle,
                                 edge_index, edge_list, required_multisets,
                                 saturate, verify)
from chromarep.constructions import chain_colouring, pentagon, walecki
from chromarep.quasigroup import lambda1, lambda2, standard_qn


def sig(s, n):
    return Signature(frozenset(s), n)


K4_MATCHINGS = EdgeColouring.from_function(
    4, 3, lambda i, j: {frozenset(p): c for c, ps in enumerate(
        ([(0, 1), (2, 3)], [(0, 2), (1, 3)], [(0, 3), (1, 2)]), start=1)
        for p in ps}[frozenset((i, j))])


def test_edge_enumeration_order():
    assert edge_list(4) == [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]
    for idx, (i, j) in enumerate(edge_list(7)):
        assert edge_index(i, j) == idx
        assert edge_index(j, i) == idx
    with pytest.raises(ValueError):
        edge_index(2, 2)


def test_edge_colouring_validation():
    with pytest.raises(ValueError):
        EdgeColouring(3, 2, (1, 2))          # wrong length
    with pytest.raises(ValueError):
        EdgeColouring(3, 2, (1, 2, 3))       # colour out of range
    col = EdgeColouring(3, 2, (1, 2, 2))
    assert col.colour(0, 1) == 1 and col.colour(2, 1) == 2
    assert col.used_colours() == {1, 2}


def test_classify_triangle():
    col = EdgeColouring(3, 3, (1, 1, 1))
    assert classify_triangle(col, 0, 1, 2) == 1
    col = EdgeColouring(3, 3, (1, 1, 2))
    assert classify_triangle(col, 2, 0, 1) == 2
    col = EdgeColouring(3, 3, (1, 2, 3))
    assert classify_triangle(col, 0, 1, 2) == 3
    with pytest.raises(ValueError):
        classify_triangle(col, 0, 1, 1)


def test_required_multisets():
    assert required_multisets(sig((3,), 3)) == [(1, 2, 3)]
    assert required_multisets(sig((1,), 2)) == [(1, 1, 1), (2, 2, 2)]
    assert required_multisets(sig((2,), 2)) == [(1, 1, 2), (1, 2, 2)]
    # counts: mono n, di n(n-1), tri C(n,3)
    n = 5
    full = required_multisets(sig((1, 2, 3), n))
    assert len(full) == n + n * (n - 1) + n * (n - 1) * (n - 2) // 6


def test_verify_k4_matchings_strong():
    report = verify(K4_MATCHINGS, sig((3,), 3), Level.STRONG)
    assert report.passed, report.summary()


def test_verify_pentagon_strong():
    report = verify(pentagon(), sig((2,), 2), Level.STRONG)
    assert report.passed
    assert report.summary() == "strong: pass"


def test_verify_chain_misses_multiset():
    # the 3-vertex chain has only the (1,2,2) triangle
    report = verify(chain_colouring(2), sig((2,), 2), Level.QUALITATIVE)
    assert not report.passed
    assert report.missing_required == [(1, 1, 2)]
    assert verify(chain_colouring(2), sig((2,), 2), Level.FEEBLE).passed


def test_verify_forbidden_witnesses():
    mono = EdgeColouring(3, 1, (1, 1, 1))
    report = verify(mono, sig((2, 3), 1), Level.FEEBLE)
    assert not report.passed
    assert report.forbidden_total == 1
    assert report.forbidden_witnesses == [((0, 1, 2), (1, 1, 1))]


def test_verify_not_surjective():
    col = EdgeColouring(3, 2, (1, 1, 1))
    report = verify(col, sig((1, 2), 2), Level.FEEBLE)
    assert not report.passed and not report.surjective


def test_verify_colour_count_mismatch():
    with pytest.raises(ValueError):
        verify(pentagon(), sig((2,), 3), Level.FEEBLE)


def test_verify_strong_failure_records():
    # walecki(3) is qualitative but not strong for ({2,3}, 3)
    col = walecki(3)
    assert verify(col, sig((2, 3), 3), Level.QUALITATIVE).passed
    report = verify(col, sig((2, 3), 3), Level.STRONG)
    assert not report.passed and report.strong_total > 0
    # each failure names a consistent triple lacking a witness at that edge
    for (x, y), (a, b, c) in report.strong_failures:
        assert c == 0 or col.colour(x, y) == c
        if c != 0:
            assert not any(col.colour(x, z) == a and col.colour(z, y) == b
                           for z in range(col.m) if z not in (x, y))


def oracle_verify(col, s_set, level):
    """Independent re-implementation of the three levels, sets-of-triples
    style, used to cross-check `verify` on small instances."""
    forbidden = {1, 2, 3} - set(s_set)
    triangles = {}
    for x, y, z in combinations(range(col.m), 3):
        cols = (col.colour(x, y), col.colour(y, z), col.colour(x, z))
        triangles[(x, y, z)] = cols
    if any(len(set(c)) in forbidden for c in triangles.values()):
        return False
    if len(set(col.colours)) != col.n:
        return False
    if level == "feeble":
        return True
    realized = {tuple(sorted(c)) for c in triangles.values()}
    needed = {tuple(sorted(t)) for t in
              set().union(*[{(a, b, c)
                             for a in range(1, col.n + 1)
                             for b in range(1, col.n + 1)
                             for c in range(1, col.n + 1)
                             if len({a, b, c}) in s_set}] or [set()])}
    if not needed <= realized:
        return False
    if level == "qualitative":
        return True
    for x in range(col.m):
        for y in range(col.m):
            if x == y:
                continue
            c = col.colour(x, y)
            for a in range(1, col.n + 1):
                for b in range(1, col.n + 1):
                    if len({a, b, c}) not in s_set:
                        continue
                    if not any(z not in (x, y)
                               and col.colour(x, z) == a
                               and col.colour(z, y) == b
                               for z in range(col.m)):
                        return False
    for v in range(col.m):
        if chromatic_degree(col, v) != col.n:
            return False
    return True


def test_verify_matches_oracle_on_sweep():
    # dense sweep of tiny colourings against the independent oracle
    cases = 0
    for m, n in [(3, 2), (4, 2), (4, 3)]:
        e = m * (m - 1) // 2
        for code in range(n ** e):
            cols = []
            x = code
            for _ in range(e):
                cols.append(x % n + 1)
                x //= n
            col = EdgeColouring(m, n, tuple(cols))
            for s_set in [(2,), (3,), (1, 3), (2, 3)]:
                for level in Level:
                    got = verify(col, sig(s_set, n), level).passed
                    want = oracle_verify(col, set(s_set), level.value)
                    assert got == want, (m, n, cols, s_set, level)
                    cases += 1
    assert cases > 1000


def test_chromatic_degree():
    col = lambda1(standard_qn(5))
    # vertex i misses exactly the colour i+1 (its own square)
    assert chromatic_degree(col, 2) == 4
    assert 3 not in {col.colour(2, w) for w in range(5) if w != 2}
    assert chromatic_degree(EdgeColouring(3, 1, (1, 1, 1)), 0) == 1
    assert all(chromatic_degree(pentagon(), v) == 2 for v in range(5))
    with pytest.raises(ValueError):
        chromatic_degree(pentagon(), 5)


def test_saturate_chain_vertex():
    s = sig((2,), 2)
    chain = chain_colouring(2)
    out = saturate(chain, 2, s)
    # vertex 2 was missing colour 1; one new vertex is added carrying it
    assert out.m == 4
    assert out.colour(2, 3) == 1
    assert out.colour(3, 0) == chain.colour(2, 0)
    assert out.colour(3, 1) == chain.colour(2, 1)
    assert verify(out, s, Level.FEEBLE).passed
    assert chromatic_degree(out, 2) == 2


def test_saturate_noop_when_saturated():
    s = sig((2,), 2)
    assert saturate(pentagon(), 0, s) is pentagon() or \
        saturate(pentagon(), 0, s) == pentagon()


def test_saturate_rejects_other_signatures():
    with pytest.raises(ValueError):
        saturate(pentagon(), 0, sig((2, 3), 2))


def test_canonical_form_single_colour():
    a = EdgeColouring(3, 1, (1, 1, 1))
    assert canonical_form(a) == a


def test_canonical_form_colour_swap():
    swapped = EdgeColouring.from_function(
        5, 2, lambda i, j: 3 - pentagon().colour(i, j))
    assert canonical_form(swapped) == canonical_form(pentagon())


def test_canonical_form_idempotent_and_isomorphic():
    col = walecki(3)
    canon = canonical_form(col)
    assert canonical_form(canon) == canon
    assert are_isomorphic(col, canon)


def test_canonical_form_vertex_relabelling_invariant():
    col = lambda2(standard_qn(5))
    for perm in [(5, 0, 3, 1, 4, 2), (1, 2, 3, 4, 5, 0)]:
        relab = EdgeColouring.from_function(
            col.m, col.n, lambda i, j: col.colour(perm[i], perm[j]))
        assert canonical_form(relab) == canonical_form(col)


def test_canonical_form_exhaustive_small():
    # brute-force check: the canonical code really is the ordering minimum
    col = EdgeColouring(4, 2, (1, 2, 2, 1, 2, 1))
    codes = []
    for perm in permutations(range(4)):
        rename, code = {}, []
        for i, j in edge_list(4):
            c = col.colour(perm[i], perm[j])
            rename.setdefault(c, len(rename) + 1)
            code.append(rename[c])
        codes.append(tuple(code))
    assert canonical_form(col).colours == min(codes)


def test_lambda1_isomorphism_invariance():
    # lambda1 over an isomorphic copy of Q5 has the same canonical form
    q = standard_qn(5)
    perm = (2, 0, 4, 1, 3)
    inv = {perm[i]: i for i in range(5)}
    from chromarep.quasigroup import Quasigroup
    iso = Quasigroup(5, tuple(
        tuple(perm[q.mul(inv[i], inv[j])] for j in range(5))
        for i in range(5)))
    assert canonical_form(lambda1(iso)) == canonical_form(lambda1(q))


def test_are_isomorphic_basics():
    col = walecki(2)
    assert are_isomorphic(col, col)
    assert not are_isomorphic(col, walecki(3))     # different m
    assert not are_isomorphic(pentagon(), EdgeColouring(5, 2, (1,) * 10))


def test_json_round_trip():
    col = walecki(3)
    s = sig((2, 3), 3)
    text = col.to_json(s)
    doc = json.loads(text)
    assert doc["vertices"] == 6 and doc["colours"] == 3
    assert doc["signature"] == {"s": [2, 3], "n": 3}
    again = EdgeColouring.from_json(text)
    assert again == col
    assert again.to_json(s) == text  # bit-exact round trip


def test_json_rejects_partial_edge_list():
    with pytest.raises(ValueError):
        EdgeColouring.from_json(json.dumps(
            {"vertices": 3, "colours": 1, "edges": [[0, 1, 1]]}))


def test_dot_export():
    dot = pentagon().to_dot()
    assert dot.startswith("graph colouring {")
    assert '0 -- 1 [color=red, label="1"]' in dot
    assert dot.count("--") == 10
    # palette cycles beyond 12 colours
    big = EdgeColouring.from_function(14, 13, lambda i, j: max(i, j))
    assert f"color={DOT_PALETTE[0]}, label=\"13\"" in big.to_dot()
    assert len(DOT_PALETTE) == 12
