from fractions import Fraction

import pytest
from hypothesis import given

from conftest import triples
from oracle import brute_labels, hv, value
from neutrosophy import (
    MINUS_ZERO,
    THREE_PLUS,
    Label,
    NeutroTriple,
    classify,
    display_name,
    hr,
    is_classical,
    is_faillibilist,
    is_fuzzy,
    is_intuitionistic,
    is_nihilist,
    is_paraconsistent,
    is_paradoxist,
    is_pseudo_paradoxist,
    is_tautological,
    n_inf,
    n_sup,
)
from neutrosophy.corpus import grid_points, grid_triples

P, ZP, M = hr(1, 1), hr(0, 1), hr(0, -1)


def tri(t, i, f):
    return NeutroTriple.of(t, i, f)


# -- sums ---------------------------------------------------------------------

def test_n_inf_examples():
    t = tri(1, "0.3", 1)
    assert hv(n_inf(t)) == value(1, 0) + value("0.3", 0) + value(1, 0)
    assert n_inf(t) == hr("2.3")
    assert n_inf(tri(0, 0, 0)) == hr(0)
    assert n_inf(tri(M, M, M)) == hr(0, -3)


def test_n_sup_examples():
    assert n_sup(tri(P, P, P)) == THREE_PLUS
    t = tri("0.2", "0.1", "0.3")
    assert hv(n_sup(t)) == value("0.6", 0)
    assert n_sup(t) == hr("0.6")
    assert n_sup(tri(P, 0, 0)) == hr(1, 1)


def test_n_sup_uses_interval_sups():
    t = tri([("0.1", "0.3"), "0.5"], 0, ("0.2", "0.4"))
    assert n_inf(t) == hr("0.3")
    assert n_sup(t) == hr("0.9")


# -- predicates ---------------------------------------------------------------

@pytest.mark.parametrize(
    "pred, t, expected",
    [
        (is_intuitionistic, tri("0.2", "0.1", "0.3"), True),
        (is_intuitionistic, tri("0.5", "0.5", 0), False),
        (is_intuitionistic, tri(1, 0, 0), False),
        (is_paraconsistent, tri(1, "0.3", 1), True),
        (is_paraconsistent, tri("0.5", "0.5", 0), False),
        (is_paraconsistent, tri(1, ZP, 0), True),
        (is_faillibilist, tri(1, "0.3", 1), True),
        (is_faillibilist, tri("0.2", 0, "0.3"), False),
        (is_faillibilist, tri("0.2", ZP, "0.3"), True),
        (is_paradoxist, tri(1, "0.3", 1), True),
        (is_paradoxist, tri(P, "0.3", 1), False),
        (is_paradoxist, tri(1, 0, "0.9"), False),
        (is_pseudo_paradoxist, tri(1, 0, ("0.2", "0.4")), True),
        (is_pseudo_paradoxist, tri("0.3", "0.1", 1), True),
        (is_pseudo_paradoxist, tri(1, 0, 0), False),
        (is_tautological, tri(P, 0, 0), True),
        (is_tautological, tri(P, M, M), True),
        (is_tautological, tri(1, 0, 0), False),
        (is_nihilist, tri(0, 0, P), True),
        (is_nihilist, tri(M, M, P), True),
        (is_nihilist, tri(0, 0, 1), False),
        (is_classical, tri(1, 0, 0), True),
        (is_classical, tri(0, 0, 1), True),
        (is_classical, tri("0.5", 0, "0.5"), False),
        (is_fuzzy, tri("0.3", 0, "0.7"), True),
        (is_fuzzy, tri("0.3", 0, "0.6"), False),
        (is_fuzzy, tri("0.3", "0.1", "0.6"), False),
    ],
)
def test_predicate_examples(pred, t, expected):
    assert pred(t) is expected


def test_pseudo_paradoxist_needs_standard_partial_degree():
    # 0+ falsity is infinitesimal, not partial; with 0- indeterminacy it
    # would leave n_sup at exactly 1
    t = tri(1, M, ZP)
    assert not is_pseudo_paradoxist(t)
    assert n_sup(t) == hr(1)
    assert not is_pseudo_paradoxist(tri(1, 0, ("0.2", 1)))


def test_pseudo_paradoxist_interval_partial():
    assert is_pseudo_paradoxist(tri(1, 0, [("0.2", "0.3"), "0.9"]))
    assert not is_pseudo_paradoxist(tri(1, 0, [("0.2", "0.3"), 1]))


def test_tautological_rejects_intervals_near_zero():
    assert not is_tautological(tri(P, (M, 0), 0))
    assert not is_tautological(tri(P, ZP, 0))


# -- classify -----------------------------------------------------------------

def names(labels):
    return {str(label) for label in labels}


def test_classify_examples():
    assert names(classify(tri(1, "0.3", 1))) == {"Neutrosophic", "Paradoxist", "Paraconsistent", "Faillibilist"}
    assert names(classify(tri("0.2", "0.1", "0.3"))) == {"Neutrosophic", "Intuitionistic", "Faillibilist"}
    # crisp membership is also a (degenerate) fuzzy membership
    assert names(classify(tri(1, 0, 0))) == {"Neutrosophic", "Classical", "Fuzzy"}


def test_mechanical_co_labels():
    assert Label.INTUITIONISTIC in classify(tri(P, M, M))
    assert Label.PARACONSISTENT in classify(tri(P, 0, 0))


def test_display_name():
    assert display_name(Label.PARADOXIST, "event") == "Paradoxist probability"
    assert display_name(Label.PSEUDO_PARADOXIST, "proposition") == "Pseudo-Paradoxist logic"
    assert display_name(Label.NIHILIST) == "Nihilist set"
    with pytest.raises(ValueError):
        display_name(Label.NIHILIST, "galaxy")


# -- properties ---------------------------------------------------------------

@given(triples)
def test_sum_bound(t):
    assert hr(0, -3) <= n_inf(t) <= n_sup(t) <= THREE_PLUS


@given(triples)
def test_exclusivity(t):
    assert not (is_intuitionistic(t) and is_paraconsistent(t))
    assert not (is_tautological(t) and is_nihilist(t))


@given(triples)
def test_implications(t):
    if is_paradoxist(t) or is_pseudo_paradoxist(t):
        assert is_paraconsistent(t)


@given(triples)
def test_classify_pure(t):
    same = NeutroTriple(t.T, t.I, t.F)
    assert classify(t) == classify(same)
    assert Label.NEUTROSOPHIC in classify(t)


@given(triples)
def test_classify_matches_brute_force_on_random(t):
    raws = [[(iv.lo, iv.hi) for iv in c] for c in t.components()]
    assert names(classify(t)) == brute_labels(*raws)


def test_grid_exhaustive_against_brute_force():
    pts = grid_points()
    assert len(pts) == 15
    n = 0
    for t in grid_triples():
        raws = [[(c.inf, c.sup)] for c in t.components()]
        assert names(classify(t)) == brute_labels(*raws), str(t)
        n += 1
    assert n == 15**3


def test_grid_contains_extreme_corners():
    pts = grid_points()
    assert pts[0] == MINUS_ZERO
    assert pts[-1] == hr(1, 1)
    assert Fraction(1, 4) in {p.std for p in pts}
