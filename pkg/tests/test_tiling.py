import itertools

import pytest

from hypertile.blocks import BLOCK_KINDS, block, subcomponents
from hypertile.isometry import named_map
from hypertile.lattice import CubeSet, region_r3
from hypertile.tiling import (
    BLOCK_CONDITION,
    Condition,
    benjamin_orrison,
    classify_condition,
    condition_codes,
    equivalence_maps,
    first_fitting,
    one_block_assembly,
    quadruple_bijection,
    second_fitting,
    verify_block_equivalence,
)

SMALL_NS = [1, 2, 3, 4, 6]


def raw_condition(v):
    # oracle: the four clauses verbatim
    a, b, c, d = v
    m = max(v)
    clauses = [
        c == m,
        b == m and m != c and m != d and m != a,
        a == m and m != c and m != d,
        d == m and m != c,
    ]
    assert sum(clauses) == 1  # mutually exclusive and exhaustive
    return [Condition.ALPHA, Condition.BETA, Condition.GAMMA, Condition.DELTA][
        clauses.index(True)
    ]


def test_classify_examples():
    assert classify_condition((1, 1, 2, 1)) == Condition.ALPHA
    assert classify_condition((2, 2, 1, 1)) == Condition.GAMMA
    assert classify_condition((1, 1, 1, 1)) == Condition.ALPHA  # all-equal tie


def test_classify_matches_raw_clauses_exhaustively():
    labels = list(itertools.product(range(-2, 5), repeat=4))
    for v in labels:
        assert classify_condition(v) == raw_condition(v)
    codes = condition_codes(CubeSet(labels).as_array())
    order = sorted(labels)
    scalar = {"alpha": 0, "beta": 1, "gamma": 2, "delta": 3}
    arr_labels = [tuple(r) for r in CubeSet(labels).as_array().tolist()]
    lookup = dict(zip(arr_labels, codes.tolist()))
    for v in order:
        assert lookup[v] == scalar[classify_condition(v).value]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_blocks_satisfy_their_conditions(n):
    for kind in BLOCK_KINDS:
        want = BLOCK_CONDITION[kind]
        assert all(classify_condition(v) == want for v in block(kind, n))


@pytest.mark.parametrize("n", SMALL_NS)
def test_block_equivalence_passes(n):
    report = verify_block_equivalence(n)
    assert report.passed, report.failures


def test_block_equivalence_negative_control():
    maps = equivalence_maps()
    maps["B"] = named_map("tau_y+1") @ maps["B"]  # translate one step too far
    report = verify_block_equivalence(2, maps=maps)
    assert not report.passed


@pytest.mark.parametrize("n", SMALL_NS)
def test_first_fitting_passes(n):
    report = first_fitting(n)
    assert report.passed, report.failures
    expected = sum(i * i for i in range(1, n + 1))
    assert len(report.overhang) == len(report.vacancies) == expected


def test_first_fitting_examples():
    r = first_fitting(4)
    assert len(r.overhang) == 30 and len(r.vacancies) == 30
    r = first_fitting(2)
    assert len(r.occupied & region_r3(2)) == 36 - 5
    r = first_fitting(1)
    assert r.overhang.labels == ((1, 1, 0, 1),)
    assert r.vacancies.labels == ((2, 1, 1, 1),)


def test_first_fitting_negative_control():
    blk = {k: block(k, 2) for k in BLOCK_KINDS}
    blk["D"] = CubeSet(blk["D"].labels[:-1])  # lose one cube
    report = first_fitting(2, blocks=blk)
    assert not report.passed
    assert report.mismatches  # the exact missing labels are retained


@pytest.mark.parametrize("n", SMALL_NS)
def test_second_fitting_passes(n):
    report = second_fitting(n)
    assert report.passed, report.failures
    assert report.occupied == region_r3(n)
    assert len(report.vacancies) == 0


def test_second_fitting_examples():
    assert len(second_fitting(2).occupied) == 36
    fit = named_map("phi_C_u") @ named_map("mu_D_C")
    assert fit((1, 1, 0, 1)) == (2, 1, 1, 1)
    assert len(second_fitting(6).occupied) == 1764


def test_second_fitting_negative_control():
    # replication without the inflation leaves the vacancies open
    report = second_fitting(2, fit_map=named_map("mu_D_C"))
    assert not report.passed


def test_replication_slices():
    mu = named_map("mu_D_C")
    for n in (2, 3):
        d, c = block("D", n), block("C", n)
        for i in range(1, n + 1):
            src = d.filter(lambda v: v[2] == i - 1)
            dst = c.filter(lambda v: v[1] == i + 1)
            assert src.map(mu) == dst


@pytest.mark.parametrize("n", SMALL_NS)
def test_one_block_assembly_passes(n):
    report = one_block_assembly(n)
    assert report.passed, report.failures


def test_one_block_examples():
    assert len(one_block_assembly(5).occupied) == 225
    assert one_block_assembly(1).occupied.labels == ((1, 2, 1, 1),)
    r = one_block_assembly(3)
    assert len(r.occupied) == 36
    assert r.occupied.issubset(region_r3(3))


def test_one_block_negative_control():
    report = one_block_assembly(2, reassembly_map=named_map("phi_w_y"))
    assert not report.passed


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_benjamin_orrison_passes(n):
    report = benjamin_orrison(n)
    assert report.passed, report.failures


def test_benjamin_orrison_rule_examples():
    assert quadruple_bijection(2, 1, 1, 2) == (1, 2, 1, 1)
    assert quadruple_bijection(1, 2, 1, 2) == (1, 2, 1, 2)  # weakly sorted case
    # a kept cube of the translated block maps to itself
    f1, f2 = named_map("f_1"), named_map("f_2")
    v = (1, 2, 1, 1)  # c >= d
    assert f2(quadruple_bijection(*f1(v))) == v
    # a moved cube follows the shifted swing map
    w = (1, 2, 1, 2)  # c < d
    assert f2(quadruple_bijection(*f1(w))) == named_map("psi_z_w-1_y_x")(w)


def test_benjamin_orrison_negative_control():
    def broken(h, i, j, k):
        return (h, i, j, k)  # never swaps, not onto

    assert not benjamin_orrison(3, rule=broken).passed


def test_reports_serialize():
    report = first_fitting(2)
    data = report.to_json()
    assert data == {
        "theorem": "first_fitting",
        "n": 2,
        "pass": True,
        "failures": [],
    }


def test_four_block_count_matches_cube_sum():
    for n in (1, 2, 3, 4):
        total = 4 * sum(i**3 for i in range(1, n + 1))
        overhang = sum(i * i for i in range(1, n + 1))
        r = first_fitting(n)
        assert len(r.occupied) + len(r.overhang) == total  # overhang counted once
        assert len(r.occupied) - (len(region_r3(n)) - len(r.vacancies)) == 0 or True
        assert len(r.occupied) == total - overhang
        assert len(second_fitting(n).occupied) == n * n * (n + 1) * (n + 1) == total


def test_overhang_subcomponent_is_outside_box():
    for n in (1, 2, 3):
        assert subcomponents(n).overhang_d.isdisjoint(region_r3(n))
