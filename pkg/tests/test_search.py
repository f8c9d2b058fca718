"""Exhaustive search, enumeration and the summary-table cross-check."""

import pytest

from chromarep.algebra import Signature
from chromarep.colouring import EdgeColouring, Level, canonical_form, verify
from chromarep.constructions import pentagon
from chromarep.search import (certify_summary_row, default_m_range,
                              enumerate_representations, search)


def sig(s, n):
    return Signature(frozenset(s), n)


def test_default_m_range():
    assert default_m_range(sig((3,), 3)) == (2, 12)
    assert default_m_range(sig((2,), 5)) == (2, 18)


def test_search_found_results_verify():
    for s, n in [((3,), 5), ((2,), 2), ((2, 3), 3), ((1, 2), 3)]:
        outcome = search(sig(s, n), Level.QUALITATIVE)
        assert outcome.status == "found"
        assert verify(outcome.colouring, sig(s, n), Level.QUALITATIVE).passed


def test_search_trichromatic_found_small():
    outcome = search(sig((3,), 5), Level.QUALITATIVE)
    assert outcome.status == "found"
    assert outcome.colouring.m in (5, 6)


def test_search_trichromatic_even_nonexistence():
    outcome = search(sig((3,), 4), Level.QUALITATIVE)
    assert outcome.status == "exhausted"
    assert outcome.m_max == 15
    assert outcome.complete_certificate


def test_search_dichromatic_nonexistence():
    outcome = search(sig((2,), 3), Level.QUALITATIVE)
    assert outcome.status == "exhausted"
    assert outcome.m_max == 12
    assert outcome.complete_certificate


def test_search_strong_finds_pentagon():
    outcome = search(sig((2,), 2), Level.STRONG)
    assert outcome.status == "found"
    assert canonical_form(outcome.colouring) == canonical_form(pentagon())


def test_search_no_certificate_outside_qualitative():
    outcome = search(sig((1, 2), 3), Level.STRONG, m_range=(2, 6))
    assert outcome.status in ("found", "exhausted")
    if outcome.status == "exhausted":
        assert not outcome.complete_certificate
    outcome = search(sig((1,), 2), Level.FEEBLE)
    assert outcome.status == "exhausted"
    assert not outcome.complete_certificate


def test_search_range_limited_no_certificate():
    outcome = search(sig((2,), 3), Level.QUALITATIVE, m_range=(2, 6))
    assert outcome.status == "exhausted"
    assert not outcome.complete_certificate


def test_search_budget_abort():
    outcome = search(sig((2,), 3), Level.QUALITATIVE, node_budget=50)
    assert outcome.status == "aborted"
    assert outcome.colouring is None
    assert outcome.per_m[-1].status == "aborted"


def test_search_trichromatic_prunes_large_m():
    # all edges at a vertex must be distinct, so m > n+1 dies immediately
    outcome = search(sig((3,), 4), Level.QUALITATIVE)
    by_m = {rec.m: rec.nodes for rec in outcome.per_m}
    assert by_m[15] < 200


def test_search_transcript_lines():
    import json
    outcome = search(sig((3,), 3), Level.QUALITATIVE)
    lines = list(outcome.transcript_lines())
    assert lines
    for line in lines:
        rec = json.loads(line)
        assert set(rec) == {"m", "status", "nodes", "seconds"}


def test_search_deterministic():
    a = search(sig((2, 3), 2), Level.QUALITATIVE)
    b = search(sig((2, 3), 2), Level.QUALITATIVE)
    assert a.colouring == b.colouring
    assert a.nodes == b.nodes


def test_symmetry_breaking_safety():
    # same existence answers and canonical sets with the optimization off
    for s, n in [((2,), 2), ((3,), 2), ((1, 2), 2), ((2, 3), 2)]:
        fast = search(sig(s, n), Level.QUALITATIVE)
        slow = search(sig(s, n), Level.QUALITATIVE,
                      break_colour_symmetry=False)
        assert fast.status == slow.status
        for m in (3, 4, 5):
            if m > 3 * (n + 1):
                continue
            a, _ = enumerate_representations(sig(s, n), Level.QUALITATIVE, m)
            import sys
            import chromarep.search  # noqa: F401  (module, not the function)
            srch = sys.modules["chromarep.search"]
            raw = []
            budget = srch._Budget(None)
            if not srch._trivially_empty(sig(s, n), Level.QUALITATIVE, m):
                srch._search_m(sig(s, n), Level.QUALITATIVE, m, budget,
                               collect=raw, break_colour_symmetry=False)
            b = {canonical_form(c).colours for c in raw}
            assert {c.colours for c in a} == b, (s, n, m)


def test_enumerate_k4_matchings_unique():
    results, partial = enumerate_representations(sig((3,), 3),
                                                 Level.QUALITATIVE, 4)
    assert not partial
    assert len(results) == 1
    assert verify(results[0], sig((3,), 3), Level.STRONG).passed


def test_enumerate_pentagon_present():
    results, partial = enumerate_representations(sig((2,), 2),
                                                 Level.QUALITATIVE, 5)
    assert not partial
    assert canonical_form(pentagon()) in results
    # sorted canonical output
    assert [r.colours for r in results] == sorted(r.colours for r in results)


def test_enumerate_rejects_out_of_range_m():
    with pytest.raises(ValueError):
        enumerate_representations(sig((3,), 3), Level.QUALITATIVE, 13)


def test_enumerate_partial_flag_on_budget():
    results, partial = enumerate_representations(sig((2,), 2),
                                                 Level.QUALITATIVE, 5,
                                                 node_budget=10)
    assert partial


def test_certify_summary_row_trichromatic():
    cells = certify_summary_row((3,), range(3, 7))
    quali = [cells[(n, Level.QUALITATIVE)].status for n in range(3, 7)]
    assert quali == ["Constructed", "CertifiedNonexistent",
                     "Constructed", "CertifiedNonexistent"]


def test_certify_summary_row_dichromatic():
    cells = certify_summary_row((2,), range(2, 5))
    assert cells[(2, Level.QUALITATIVE)].status == "Constructed"
    assert cells[(3, Level.QUALITATIVE)].status == "CertifiedNonexistent"
    assert cells[(4, Level.QUALITATIVE)].status == "CertifiedNonexistent"
    assert cells[(2, Level.STRONG)].status == "Constructed"


def test_certify_summary_row_lyndon_n3():
    cells = certify_summary_row((1, 3), [3])
    assert cells[(3, Level.QUALITATIVE)].status == "CertifiedNonexistent"
    assert cells[(3, Level.FEEBLE)].status == "Constructed"


def test_search_agrees_with_construct_verdicts():
    # qualitative answers settled in the literature, n <= 5
    from chromarep.constructions import NotConstructible, construct
    for s, n in [((3,), 3), ((3,), 4), ((3,), 5), ((2,), 2), ((2,), 3),
                 ((2, 3), 4), ((1,), 2), ((), 3)]:
        built = construct(sig(s, n), Level.QUALITATIVE)
        outcome = search(sig(s, n), Level.QUALITATIVE)
        if isinstance(built, NotConstructible) and built.nonexistent:
            assert outcome.status == "exhausted" and \
                outcome.complete_certificate
        elif isinstance(built, EdgeColouring):
            assert outcome.status == "found"
