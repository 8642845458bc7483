"""Executable proofs of the geometric theorems.

Each verifier re-derives the claimed sets by brute enumeration and reports
every mismatch it finds; a report passes exactly when its failure list is
empty.  Verifiers accept optional map/set overrides so that deliberately
perturbed inputs can be shown to fail (guarding against vacuous passes).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .blocks import (
    BLOCK_KINDS,
    block,
    delta_slab,
    gamma_slab,
    partition_sets,
    s33_from_inequalities,
    subcomponents,
)
from .isometry import Isometry, named_map
from .lattice import CubeSet, Label, region_r3
from .report import Report


class Condition(enum.Enum):
    """Which axis wins the max-coordinate contest for a label.

    ALPHA: max attained on z.  DELTA: on w but not z.  GAMMA: on x but not
    z, w.  BETA: only on y.  The four cases are mutually exclusive and
    exhaustive, ties included.
    """

    ALPHA = "alpha"
    BETA = "beta"
    GAMMA = "gamma"
    DELTA = "delta"


#: Condition satisfied by every cube of each block in its defined location.
BLOCK_CONDITION = {
    "A": Condition.ALPHA,
    "B": Condition.BETA,
    "C": Condition.GAMMA,
    "D": Condition.DELTA,
}

_CODE = {Condition.ALPHA: 0, Condition.BETA: 1, Condition.GAMMA: 2, Condition.DELTA: 3}


def classify_condition(v: Label) -> Condition:
    a, b, c, d = v
    m = max(a, b, c, d)
    if c == m:
        return Condition.ALPHA
    if d == m:
        return Condition.DELTA
    if a == m:
        return Condition.GAMMA
    return Condition.BETA


def condition_codes(arr: np.ndarray) -> np.ndarray:
    """Vectorized :func:`classify_condition`; codes are alpha=0, beta=1,
    gamma=2, delta=3."""
    m = arr.max(axis=1)
    codes = np.full(len(arr), _CODE[Condition.BETA], dtype=np.int8)
    codes[arr[:, 0] == m] = _CODE[Condition.GAMMA]
    codes[arr[:, 3] == m] = _CODE[Condition.DELTA]
    codes[arr[:, 2] == m] = _CODE[Condition.ALPHA]
    return codes


@dataclass
class FittingReport(Report):
    """Report for the fitting theorems, carrying the derived sets and the
    full mismatch sets for debuggability."""

    occupied: CubeSet = field(default_factory=CubeSet)
    overhang: CubeSet = field(default_factory=CubeSet)
    vacancies: CubeSet = field(default_factory=CubeSet)
    mismatches: dict = field(default_factory=dict)


def _square_pyramidal(n: int) -> int:
    return sum(i * i for i in range(1, n + 1))


def equivalence_maps() -> dict[str, Isometry]:
    """The rotation-plus-translation taking block A onto each other block."""
    return {
        "B": named_map("tau_y+1") @ named_map("rho_y_z_x"),
        "C": named_map("tau_x+1_y+1") @ named_map("rho_z_x_y"),
        "D": named_map("tau_z-1") @ named_map("rho_w_x_z"),
    }


def verify_block_equivalence(n: int, *, maps: dict[str, Isometry] | None = None) -> Report:
    """Check that blocks B, C, D are images of A under the stated
    rotation-translations, each of rotation parity."""
    report = Report("block_equivalence", n)
    maps = maps or equivalence_maps()
    a = block("A", n)
    for kind in ("B", "C", "D"):
        f = maps[kind]
        report.check_sets(a.map(f), block(kind, n), f"image of A vs block {kind}")
        report.check(
            f.parity == "rotation",
            f"map A->{kind} should be orientation preserving, got {f.parity}",
        )
    return report


def first_fitting(n: int, *, blocks: dict[str, CubeSet] | None = None) -> FittingReport:
    """Assemble the four blocks in defined locations against the target box.

    Verifies pairwise disjointness, the exact overhang layer (D at z = 0,
    outside the box), the exact vacancy layer (y = 1, inside the box), the
    four per-condition slab containments, and that block membership agrees
    with :func:`classify_condition` everywhere.
    """
    report = FittingReport("first_fitting", n)
    blk = blocks or {k: block(k, n) for k in BLOCK_KINDS}
    sub = subcomponents(n)
    r3 = region_r3(n)

    for i, p in enumerate(BLOCK_KINDS):
        for q in BLOCK_KINDS[i + 1 :]:
            if not blk[p].isdisjoint(blk[q]):
                shared = blk[p] & blk[q]
                report.note(
                    f"blocks {p} and {q} share {len(shared)} labels"
                    f" e.g. {shared.labels[:3]}"
                )

    union = blk["A"] | blk["B"] | blk["C"] | blk["D"]
    report.occupied = union
    report.overhang = union - r3
    report.vacancies = r3 - union

    expected = _square_pyramidal(n)
    report.check_sets(report.overhang, sub.overhang_d, "overhang layer")
    report.check_sets(report.vacancies, sub.vacancy_super_c, "vacancy layer")
    report.check(
        len(report.overhang) == expected,
        f"overhang count {len(report.overhang)} != {expected}",
    )
    report.check(
        len(report.vacancies) == expected,
        f"vacancy count {len(report.vacancies)} != {expected}",
    )

    # Membership <-> condition correspondence cube by cube: every cube of
    # each block, in its defined location, satisfies that block's condition.
    for kind in BLOCK_KINDS:
        want = _CODE[BLOCK_CONDITION[kind]]
        bad = condition_codes(blk[kind].as_array()) != want
        report.check(
            not bad.any(),
            f"{int(bad.sum())} cubes of {kind} violate condition "
            f"{BLOCK_CONDITION[kind].value}",
        )

    # Per-condition slabs of the box must match their index unions and the
    # blocks.  With each candidate set classified uniformly above, subset
    # containment plus a count match pins the exact set equality without
    # materializing the slabs from the box.
    counts = np.bincount(condition_codes(r3.as_array()), minlength=4)

    def slab_equals(candidate: CubeSet, cond: Condition, what: str) -> None:
        report.check(
            candidate.issubset(r3), f"{what}: candidate leaves the target box"
        )
        got = int(counts[_CODE[cond]])
        report.check(
            got == len(candidate),
            f"{what}: box has {got} {cond.value} locations, candidate has "
            f"{len(candidate)}",
        )

    slab_equals(blk["A"], Condition.ALPHA, "alpha locations vs A")
    slab_equals(blk["B"], Condition.BETA, "beta locations vs B")
    gamma = gamma_slab(n)
    report.check(
        not (condition_codes(gamma.as_array()) != _CODE[Condition.GAMMA]).any(),
        "gamma index union contains non-gamma labels",
    )
    slab_equals(gamma, Condition.GAMMA, "gamma locations vs index union")
    report.check_sets(
        gamma, blk["C"] | sub.vacancy_super_c, "gamma slab vs C plus vacancies"
    )
    report.check(
        blk["C"].isdisjoint(sub.vacancy_super_c),
        "block C overlaps its vacancy layer",
    )
    delta = delta_slab(n)
    report.check(
        not (condition_codes(delta.as_array()) != _CODE[Condition.DELTA]).any(),
        "delta index union contains non-delta labels",
    )
    slab_equals(delta, Condition.DELTA, "delta locations vs index union")
    report.check_sets(
        delta, blk["D"] - sub.overhang_d, "delta slab vs D minus overhang"
    )
    return report


def second_fitting(n: int, *, fit_map: Isometry | None = None) -> FittingReport:
    """Relocate D's overhang onto the vacancies and check the box fills.

    The replication map takes the overhang onto C's neighbor layer slice by
    slice; composing with the unit inflation lands it exactly on the vacant
    layer, completing a bijection of all source cubes onto the box.
    """
    report = FittingReport("second_fitting", n)
    mu = named_map("mu_D_C")
    fit = fit_map if fit_map is not None else named_map("phi_C_u") @ mu
    sub = subcomponents(n)
    r3 = region_r3(n)

    report.check_sets(
        sub.overhang_d.map(mu), sub.vacancy_neighbor_c, "replicated overhang"
    )
    report.check_sets(
        sub.overhang_d.map(fit), sub.vacancy_super_c, "fitted overhang"
    )

    # The figure-friendly composition must agree with the one-step map on
    # the overhang (and they are equal as maps outright).
    chain = named_map("rho_2", n) @ named_map("tau_x+1") @ named_map("rho_1", n)
    report.check(
        all(chain(v) == fit(v) for v in sub.overhang_d.raw()),
        "rho_2 o tau o rho_1 disagrees with the fitting map on the overhang",
    )

    # Slice property: replication sends D's layer z = i-1 onto C's layer
    # y = i+1 for every i.
    d = block("D", n)
    c = block("C", n)
    d_slices: dict[int, set] = {}
    for v in d.raw():
        d_slices.setdefault(v[2], set()).add(v)
    c_slices: dict[int, set] = {}
    for v in c.raw():
        c_slices.setdefault(v[1], set()).add(v)
    for i in range(1, n + 1):
        src = CubeSet(d_slices.get(i - 1, ()))
        dst = CubeSet(c_slices.get(i + 1, ()))
        report.check_sets(src.map(mu), dst, f"D slice z={i - 1} onto C slice y={i + 1}")

    moved = sub.overhang_d.map(fit)
    pieces = [
        block("A", n),
        block("B", n),
        c,
        d - sub.overhang_d,
        moved,
    ]
    assembly = pieces[0]
    for p in pieces[1:]:
        assembly = assembly | p
    report.occupied = assembly
    report.overhang = CubeSet()
    report.vacancies = r3 - assembly
    report.check(
        sum(len(p) for p in pieces) == len(assembly),
        "assembly pieces overlap: piece sizes "
        f"{[len(p) for p in pieces]} vs union {len(assembly)}",
    )
    report.check_sets(assembly, r3, "final assembly vs target box")
    return report


def one_block_assembly(n: int, *, reassembly_map: Isometry | None = None) -> FittingReport:
    """Partition block B on ``c >= d``, swing the strict part into block A,
    and check the union is the step-triangular duoprism."""
    report = FittingReport("one_block_assembly", n)
    psi = reassembly_map if reassembly_map is not None else named_map("psi_z_w_y-1_x")
    parts = partition_sets(n)
    b = block("B", n)

    report.check_sets(b.map(psi), block("A", n), "image of B vs block A")
    moved = parts.b_clt_d.map(psi)
    report.check_sets(moved, parts.a_alt_b, "image of B[c<d] vs A[a<b]")
    report.check(
        parts.b_cge_d.isdisjoint(moved),
        "kept and moved parts are not disjoint",
    )
    union = parts.b_cge_d | moved
    report.occupied = union
    report.check_sets(union, s33_from_inequalities(n), "assembled solid")
    want = (n * (n + 1) // 2) ** 2
    report.check(
        len(union) == want, f"assembled solid has {len(union)} cubes, want {want}"
    )
    report.check(
        all(1 <= v[0] <= n + 1 and 1 <= v[1] <= n + 1 and 1 <= v[2] <= n and 1 <= v[3] <= n
            for v in union.raw()),
        "assembled solid leaves the target box",
    )
    return report


def quadruple_bijection(h: int, i: int, j: int, k: int) -> tuple[int, int, int, int]:
    """The pairing rule sending ``{(h,i,j,k): h,i,j <= k}`` onto pairs of
    weakly increasing pairs; result is ``((x1,x2),(x3,x4))`` flattened."""
    if h <= i:
        return (h, i, j, k)
    return (j, k, i, h - 1)


def benjamin_orrison(n: int, *, rule=None) -> Report:
    """Check the pairing bijection and its agreement, cube by cube, with the
    translated one-block reassembly."""
    report = Report("benjamin_orrison", n)
    g = rule if rule is not None else quadruple_bijection

    s = {
        (h, i, j, k)
        for k in range(1, n + 1)
        for h in range(1, k + 1)
        for i in range(1, k + 1)
        for j in range(1, k + 1)
    }
    t = {
        (x1, x2, x3, x4)
        for x2 in range(1, n + 1)
        for x1 in range(1, x2 + 1)
        for x4 in range(1, n + 1)
        for x3 in range(1, x4 + 1)
    }
    report.check(
        len(s) == sum(k**3 for k in range(1, n + 1)),
        f"source set size {len(s)} is not the cube sum",
    )
    report.check(
        len(t) == (n * (n + 1) // 2) ** 2,
        f"target set size {len(t)} is not the squared binomial",
    )
    image = {g(*q) for q in s}
    report.check(len(image) == len(s), "pairing rule is not injective")
    report.check(image == t, "pairing rule is not onto the target set")

    # Conjugating by the tuple relabelings turns the rule into the
    # translated reassembly: identity on the kept part, the shifted swing
    # map on the moved part.
    f1 = named_map("f_1")
    f2 = named_map("f_2")
    shifted_psi = named_map("psi_z_w-1_y_x")
    down = named_map("tau_y-1")
    parts = partition_sets(n)
    kept = parts.b_cge_d.map(down)
    moved = parts.b_clt_d.map(down)
    bad_fixed = [v for v in kept.raw() if f2(g(*f1(v))) != v]
    report.check(
        not bad_fixed,
        f"{len(bad_fixed)} kept cubes not fixed e.g. {sorted(bad_fixed)[:3]}",
    )
    bad_moved = [v for v in moved.raw() if f2(g(*f1(v))) != shifted_psi(v)]
    report.check(
        not bad_moved,
        f"{len(bad_moved)} moved cubes disagree e.g. {sorted(bad_moved)[:3]}",
    )
    # The relabelings themselves biject the translated block and solid.
    tb = block("B", n).map(down)
    report.check({f1(v) for v in tb.raw()} == s, "first relabeling misses the source set")
    report.check(
        CubeSet(f2(q) for q in t) == parts.s33.map(down),
        "second relabeling misses the translated solid",
    )
    return report
