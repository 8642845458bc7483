from math import comb

import pytest

from hypertile.blocks import (
    BLOCK_KINDS,
    block,
    canonical_translation,
    delta_slab,
    gamma_slab,
    indicator_axis,
    named_set,
    named_set_ids,
    partition_sets,
    rect_triangle_union,
    s33_from_inequalities,
    s33_prime_from_inequalities,
    subcomponents,
)
from hypertile.isometry import named_map
from hypertile.lattice import AXES


def brute_block(kind, n):
    # oracle: filter all labels in a generous bounding box by the block's
    # membership predicate, written independently of the generators
    out = set()
    for a in range(-1, n + 3):
        for b in range(-1, n + 3):
            for c in range(-1, n + 3):
                for d in range(-1, n + 3):
                    if kind == "A":
                        ok = 1 <= c <= n and max(a, b, d) <= c and min(a, b, d) >= 1
                    elif kind == "B":
                        i = b - 1
                        ok = 1 <= i <= n and all(1 <= v <= i for v in (a, c, d))
                    elif kind == "C":
                        i = a - 1
                        ok = (
                            1 <= i <= n
                            and 2 <= b <= i + 1
                            and 1 <= c <= i
                            and 1 <= d <= i
                        )
                    else:
                        ok = 1 <= d <= n and 1 <= a <= d and 1 <= b <= d and 0 <= c <= d - 1
                    if ok:
                        out.add((a, b, c, d))
    return out


@pytest.mark.parametrize("kind", BLOCK_KINDS)
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_block_matches_predicate_oracle(kind, n):
    assert set(block(kind, n).labels) == brute_block(kind, n)


@pytest.mark.parametrize("kind", BLOCK_KINDS)
def test_block_cardinality(kind):
    for n in range(1, 8):
        assert len(block(kind, n)) == sum(i**3 for i in range(1, n + 1))
        assert len(block(kind, n)) == (n * (n + 1) // 2) ** 2


def test_block_examples():
    assert len(block("A", 4)) == 100
    assert block("D", 1).labels == ((1, 1, 0, 1),)
    assert set(block("B", 2).labels) == {
        (1, 2, 1, 1),
        (1, 3, 1, 1),
        (2, 3, 1, 1),
        (1, 3, 2, 1),
        (2, 3, 2, 1),
        (1, 3, 1, 2),
        (2, 3, 1, 2),
        (1, 3, 2, 2),
        (2, 3, 2, 2),
    }


def test_block_rejects_bad_input():
    with pytest.raises(ValueError):
        block("A", 0)
    with pytest.raises(ValueError):
        block("E", 2)


def test_canonical_translations():
    assert canonical_translation("A") == named_map("identity")
    assert canonical_translation("B") == named_map("tau_y-1")
    assert canonical_translation("C") == named_map("tau_x-1_y-1")
    assert canonical_translation("D") == named_map("tau_z+1")


@pytest.mark.parametrize("kind", BLOCK_KINDS)
@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_canonical_location_fills_unit_box(kind, n):
    img = block(kind, n).map(canonical_translation(kind))
    assert all(1 <= coord <= n for v in img for coord in v)
    # the canonical translation is the unique such translation
    shifted = img.map(named_map("tau_y+1"))
    assert any(coord > n for v in shifted for coord in v)


@pytest.mark.parametrize("kind,axis", [("A", "z"), ("B", "y"), ("C", "x"), ("D", "w")])
def test_indicator_axis(kind, axis):
    assert indicator_axis(kind) == axis
    ax = AXES.index(axis)
    for n in (1, 2, 3):
        img = block(kind, n).map(canonical_translation(kind))
        assert all(v[ax] == max(v) for v in img)


def test_indicator_axis_c_example():
    img = block("C", 3).map(canonical_translation("C"))
    assert len(img) == 36
    assert all(v[0] == max(v) for v in img)


def test_subcomponents_counts_and_examples():
    sc = subcomponents(4)
    assert len(sc.overhang_d) == len(sc.vacancy_neighbor_c) == 30
    assert len(sc.vacancy_super_c) == 30
    assert subcomponents(1).overhang_d.labels == ((1, 1, 0, 1),)
    assert set(subcomponents(2).vacancy_super_c.labels) == {
        (2, 1, 1, 1),
        (3, 1, 1, 1),
        (3, 1, 2, 1),
        (3, 1, 1, 2),
        (3, 1, 2, 2),
    }


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_subcomponents_cross_check_predicates(n):
    sc = subcomponents(n)
    assert sc.overhang_d == block("D", n).filter(lambda v: v[2] == 0)
    assert sc.vacancy_neighbor_c == block("C", n).filter(lambda v: v[1] == 2)
    # every vacancy is adjacent (one step down in y) to a neighbor cube
    assert sc.vacancy_super_c == sc.vacancy_neighbor_c.map(named_map("tau_y-1"))
    expected = sum(i * i for i in range(1, n + 1))
    assert len(sc.overhang_d) == len(sc.vacancy_neighbor_c) == expected


@pytest.mark.parametrize("n", [1, 2, 3, 4, 6])
def test_partition_sets(n):
    ps = partition_sets(n)
    assert (ps.b_cge_d | ps.b_clt_d) == block("B", n)
    assert ps.b_cge_d.isdisjoint(ps.b_clt_d)
    assert ps.a_alt_b == block("A", n).filter(lambda v: v[0] < v[1])
    assert ps.b_cge_d.isdisjoint(ps.a_alt_b)
    assert len(ps.s33) == comb(n + 1, 2) ** 2
    assert ps.s33 == s33_from_inequalities(n)
    assert ps.s33_prime == s33_prime_from_inequalities(n)
    assert ps.c_cge_d == block("C", n).filter(lambda v: v[2] >= v[3])
    assert ps.c_clt_d == block("C", n).filter(lambda v: v[2] < v[3])
    assert ps.a_2le_b_le_a == block("A", n).filter(lambda v: 2 <= v[1] <= v[0])
    assert (ps.s33 | ps.s33_prime) == rect_triangle_union(n)


def test_partition_split_sizes_by_enumeration():
    # brute split of B on the z/w comparison, per size
    for n, want_keep, want_move in [(1, 1, 0), (2, 7, 2), (3, 25, 11), (4, 65, 35)]:
        ps = partition_sets(n)
        keep = sum(1 for v in block("B", n) if v[2] >= v[3])
        move = sum(1 for v in block("B", n) if v[2] < v[3])
        assert (len(ps.b_cge_d), len(ps.b_clt_d)) == (keep, move) == (
            want_keep,
            want_move,
        )


def test_s33_cardinalities_up_to_ten():
    for n in range(1, 11):
        assert len(partition_sets(n).s33) == comb(n + 1, 2) ** 2


def test_slabs_match_block_predicates():
    for n in (1, 2, 4):
        sc = subcomponents(n)
        assert gamma_slab(n) == (block("C", n) | sc.vacancy_super_c)
        assert delta_slab(n) == (block("D", n) - sc.overhang_d)


def test_named_set_resolution():
    for set_id in named_set_ids():
        cubes = named_set(set_id, 3)
        assert len(cubes) > 0
        assert named_set(set_id, 3) == cubes  # regenerates identically
    with pytest.raises(ValueError):
        named_set("S34", 3)
    with pytest.raises(ValueError):
        named_set("A", 0)
