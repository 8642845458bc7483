import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypertile.lattice import CubeSet, Region, r3_region, region_r3, set_relate

labels_st = st.tuples(
    st.integers(-6, 8), st.integers(-6, 8), st.integers(-6, 8), st.integers(-6, 8)
)
label_sets = st.frozensets(labels_st, max_size=60)


def brute_count_box(n):
    # independent count: loop the rectangle bounds directly
    count = 0
    for a in range(1, n + 2):
        for b in range(1, n + 2):
            for c in range(1, n + 1):
                for d in range(1, n + 1):
                    count += 1
    return count


def test_region_r3_n1_exact():
    assert set(region_r3(1)) == {(1, 1, 1, 1), (1, 2, 1, 1), (2, 1, 1, 1), (2, 2, 1, 1)}


def test_region_r3_counts():
    assert len(region_r3(4)) == 400
    assert len(region_r3(12)) == 24336 == brute_count_box(12)
    for n in range(1, 9):
        assert len(region_r3(n)) == n * n * (n + 1) * (n + 1) == brute_count_box(n)


def test_region_r3_rejects_bad_n():
    with pytest.raises(ValueError):
        region_r3(0)
    with pytest.raises(ValueError):
        region_r3(-3)


def test_region_nesting_widens_on_stated_axes():
    for n in range(1, 6):
        small, big = region_r3(n), region_r3(n + 1)
        assert small.issubset(big)
        added = big - small
        for a, b, c, d in added:
            assert a == n + 2 or b == n + 2 or c == n + 1 or d == n + 1


def test_region_type():
    reg = r3_region(3)
    assert len(reg) == 144
    assert (4, 4, 3, 3) in reg and (5, 1, 1, 1) not in reg
    with pytest.raises(ValueError):
        Region((2, 1, 1, 1), (1, 1, 1, 1))


def test_iteration_is_sorted_and_deterministic():
    s = CubeSet([(2, 1, 1, 1), (1, 1, 1, 1), (1, 1, 1, 2)])
    assert list(s) == [(1, 1, 1, 1), (1, 1, 1, 2), (2, 1, 1, 1)]
    assert list(s) == list(CubeSet(reversed(s.labels)))


def test_dedup_and_membership():
    s = CubeSet([(1, 1, 1, 1), (1, 1, 1, 1)])
    assert len(s) == 1 and (1, 1, 1, 1) in s


def test_set_relate_examples():
    s = CubeSet([(1, 1, 1, 1)])
    t = CubeSet([(1, 1, 1, 2)])
    rel = set_relate(s, t)
    assert rel.disjoint and len(rel.union) == 2 and not rel.equal
    same = set_relate(s, s)
    assert same.equal and len(same.difference) == 0 and not same.disjoint


@given(label_sets, label_sets)
@settings(max_examples=60)
def test_set_relate_algebra(xs, ys):
    s, t = CubeSet(xs), CubeSet(ys)
    rel = set_relate(s, t)
    assert len(rel.union) == len(s) + len(t) - len(s & t)
    assert rel.disjoint == (len(s & t) == 0)
    assert rel.equal == (xs == ys)
    assert rel.difference == CubeSet(xs - ys)


def test_json_round_trip():
    s = CubeSet([(3, 1, 4, 1), (1, 1, 0, 1), (-2, 5, 1, 1)])
    enc = s.to_json()
    assert enc["labels"] == sorted(enc["labels"])
    assert CubeSet.from_json(json.loads(json.dumps(enc))) == s


def test_as_array_matches_labels():
    s = CubeSet([(1, 2, 3, 4), (0, 0, -1, 2)])
    rows = {tuple(r) for r in s.as_array().tolist()}
    assert rows == set(s.labels)
