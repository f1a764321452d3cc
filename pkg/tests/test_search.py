import itertools

import pytest

from agtop import instances
from agtop.errors import CapExceededError
from agtop.search import SearchSpec, census_counts, corpus, enumerate_ag_groupoids
from agtop.table import AGTable, canonical_form, check_anti_rectangular, is_isomorphic, relabel

from conftest import all_tables, brute_left_invertive, labeled_corpus


def test_order_one():
    assert list(enumerate_ag_groupoids(SearchSpec(1))) == [instances.trivial()]


def test_order_two_matches_brute_force():
    want = [t for t in all_tables(2) if brute_left_invertive(t)]
    assert list(enumerate_ag_groupoids(SearchSpec(2))) == want
    assert len(want) == 6


def test_order_three_matches_brute_force():
    got = labeled_corpus(3)
    assert list(got) == [t for t in all_tables(3) if brute_left_invertive(t)]


def test_left_identity_filter_contains_z3():
    z3 = instances.cyclic_subtraction(3)
    stream = list(enumerate_ag_groupoids(SearchSpec(3, require_left_identity=True)))
    assert any(is_isomorphic(t, z3) for t in stream)
    assert relabel(z3, [1, 2, 0]) in stream


def test_emission_is_lexicographic_and_deterministic():
    first = list(enumerate_ag_groupoids(SearchSpec(3)))
    assert first == list(enumerate_ag_groupoids(SearchSpec(3)))
    flats = [t.flat() for t in first]
    assert flats == sorted(flats)


def test_known_counts():
    # labeled and isomorphism-class counts of AG-groupoids for orders 1..4
    assert [len(labeled_corpus(n)) for n in (1, 2, 3, 4)] == [1, 6, 105, 7336]
    iso = [len(list(enumerate_ag_groupoids(SearchSpec(n, up_to_isomorphism=True)))) for n in (1, 2, 3, 4)]
    assert iso == [1, 3, 20, 331]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_iso_classes_cover_and_are_distinct(n):
    reps = list(enumerate_ag_groupoids(SearchSpec(n, up_to_isomorphism=True)))
    if n <= 3:
        for a, b in itertools.combinations(reps, 2):
            assert not is_isomorphic(a, b)
    else:
        assert len({canonical_form(t) for t in reps}) == len(reps)
    assert {canonical_form(t) for t in labeled_corpus(n)} == set(reps)


def test_filters_are_sound():
    spec = SearchSpec(3, require_left_identity=True, require_zero=False, require_anti_rectangular=False)
    for t in enumerate_ag_groupoids(spec):
        assert brute_left_invertive(t)
        assert any(all(t.table[e][a] == a for a in range(3)) for e in range(3))
    for t in enumerate_ag_groupoids(SearchSpec(4, require_zero=True, up_to_isomorphism=True)):
        assert any(all(t.table[z][a] == z == t.table[a][z] for a in range(4)) for z in range(4))
    ar = list(enumerate_ag_groupoids(SearchSpec(4, require_anti_rectangular=True)))
    assert ar == [t for t in labeled_corpus(4) if check_anti_rectangular(t).holds]
    assert len(ar) == 6


def test_limit():
    assert len(list(enumerate_ag_groupoids(SearchSpec(3, limit=7)))) == 7
    with pytest.raises(ValueError):
        SearchSpec(3, limit=0)


def test_order_cap(monkeypatch):
    with pytest.raises(CapExceededError):
        SearchSpec(6)
    with pytest.raises(CapExceededError):
        SearchSpec(0)
    monkeypatch.setenv("AGTOP_MAX_N", "3")
    with pytest.raises(CapExceededError):
        SearchSpec(4)


def test_corpus_spans_orders():
    got = list(corpus(3, up_to_isomorphism=True))
    assert [t.order for t in got] == [1] + [2] * 3 + [3] * 20
    assert list(corpus(3, min_order=3, up_to_isomorphism=False)) == list(labeled_corpus(3))


def test_census_counts():
    c = census_counts(SearchSpec(2))
    assert c["total"] == 6
    tabs = labeled_corpus(2)
    assert c["withZero"] == sum(
        any(all(t.table[z][a] == z == t.table[a][z] for a in range(2)) for z in range(2)) for t in tabs)
    assert c["associative"] + c["nonAssociative"] == c["total"]
    c4 = census_counts(SearchSpec(4, up_to_isomorphism=True))
    assert c4["total"] == 331 and c4["withZero"] == 115
    assert c4["withLeftIdentity"] == 25 and c4["antiRectangular"] == 2


def test_non_associative_instances_exist():
    z3 = instances.cyclic_subtraction(3)
    assert census_counts(SearchSpec(3))["nonAssociative"] > 0
    assert AGTable(z3.table) in labeled_corpus(3)
