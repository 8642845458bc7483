"""Generators for the named cube sets: the four step-pyramid blocks, their
overhang/vacancy subcomponents, and the partition pieces of the one-block
reassembly.

Each block is a union of ``1^3 + 2^3 + ... + n^3`` unit cubes arranged as an
oblique cubic step pyramid.  All sets regenerate deterministically from
``(id, n)``; nothing is mutated after construction.  Sets are built from
their defining index unions; the predicate characterizations used to
cross-check them live with the verifiers and tests.

``n = 1`` is supported everywhere even though it degenerates to single-cube
blocks; it is a valuable edge case for tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .isometry import Isometry, identity, named_map, translation
from .lattice import CubeSet

BLOCK_KINDS = ("A", "B", "C", "D")

#: Axis on which every cube of a block, in canonical location, attains its
#: maximum label coordinate.
INDICATOR_AXIS = {"A": "z", "B": "y", "C": "x", "D": "w"}


def _check_n(n: int) -> None:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")


@lru_cache(maxsize=8)
def block(kind: str, n: int) -> CubeSet:
    """The block in its defined location.

    A stacks layers ``z = i`` with ``x, y, w in [1, i]``; B stacks
    ``y = i+1``; C stacks ``x = i+1`` with ``y`` shifted up to ``[2, i+1]``;
    D stacks ``w = i`` with ``z`` dropped down to ``[0, i-1]``.
    """
    _check_n(n)
    cubes: set = set()
    for i in range(1, n + 1):
        r = range(1, i + 1)
        if kind == "A":
            cubes.update(product(r, r, (i,), r))
        elif kind == "B":
            cubes.update(product(r, (i + 1,), r, r))
        elif kind == "C":
            cubes.update(product((i + 1,), range(2, i + 2), r, r))
        elif kind == "D":
            cubes.update(product(r, r, range(0, i), (i,)))
        else:
            raise ValueError(f"unknown block kind {kind!r}")
    return CubeSet(frozenset(cubes))


def canonical_translation(kind: str) -> Isometry:
    """Translation taking the block's defined location into ``[1, n]^4``."""
    if kind == "A":
        return identity()
    if kind == "B":
        return translation(dy=-1)
    if kind == "C":
        return translation(dx=-1, dy=-1)
    if kind == "D":
        return translation(dz=1)
    raise ValueError(f"unknown block kind {kind!r}")


def indicator_axis(kind: str) -> str:
    if kind not in INDICATOR_AXIS:
        raise ValueError(f"unknown block kind {kind!r}")
    return INDICATOR_AXIS[kind]


@dataclass(frozen=True)
class Subcomponents:
    """The three size-``1^2 + ... + n^2`` layers moved or filled by the
    second fitting."""

    overhang_d: CubeSet
    vacancy_neighbor_c: CubeSet
    vacancy_super_c: CubeSet


@lru_cache(maxsize=4)
def subcomponents(n: int) -> Subcomponents:
    """Overhang layer of D at ``z = 0``, the neighbor layer of C at ``y = 2``,
    and the vacant locations at ``y = 1`` adjacent to that neighbor layer."""
    _check_n(n)
    overhang = set()
    neighbor = set()
    super_ = set()
    for i in range(1, n + 1):
        r = range(1, i + 1)
        overhang.update(product(r, r, (0,), (i,)))
        neighbor.update(product((i + 1,), (2,), r, r))
        super_.update(product((i + 1,), (1,), r, r))
    return Subcomponents(
        overhang_d=CubeSet(frozenset(overhang)),
        vacancy_neighbor_c=CubeSet(frozenset(neighbor)),
        vacancy_super_c=CubeSet(frozenset(super_)),
    )


@dataclass(frozen=True)
class PartitionSets:
    """All pieces of the one-block reassembly and its column-swapped twin.

    ``b_cge_d``/``b_clt_d`` split block B on ``c >= d`` versus ``c < d``;
    ``a_alt_b`` is the image of ``b_clt_d`` inside block A; their union
    ``s33`` is the step-triangular duoprism of ``C(n+1, 2)^2`` cubes.  The
    primed family is the image of all of that under ``psi_y_x+1``.
    """

    b_cge_d: CubeSet
    b_clt_d: CubeSet
    a_alt_b: CubeSet
    s33: CubeSet
    c_cge_d: CubeSet
    c_clt_d: CubeSet
    a_2le_b_le_a: CubeSet
    s33_prime: CubeSet


@lru_cache(maxsize=2)
def partition_sets(n: int) -> PartitionSets:
    _check_n(n)
    psi = named_map("psi_z_w_y-1_x")
    swap = named_map("psi_y_x+1")
    b = block("B", n)
    b_cge = b.filter(lambda v: v[2] >= v[3])
    b_clt = b.filter(lambda v: v[2] < v[3])
    a_alt = b_clt.map(psi)
    s33 = b_cge | a_alt
    c_cge = b_cge.map(swap)
    c_clt = b_clt.map(swap)
    a_2ba = a_alt.map(swap)
    s33p = c_cge | a_2ba
    return PartitionSets(b_cge, b_clt, a_alt, s33, c_cge, c_clt, a_2ba, s33p)


def s33_from_inequalities(n: int) -> CubeSet:
    """The reassembled solid built directly from its label constraints:
    ``1 <= a < b <= n+1`` and ``1 <= d <= c <= n``."""
    _check_n(n)
    cubes = set()
    for b in range(2, n + 2):
        for c in range(1, n + 1):
            cubes.update(product(range(1, b), (b,), (c,), range(1, c + 1)))
    return CubeSet(frozenset(cubes))


def s33_prime_from_inequalities(n: int) -> CubeSet:
    """Label constraints ``2 <= b <= a <= n+1`` and ``1 <= d <= c <= n``."""
    _check_n(n)
    cubes = set()
    for a in range(2, n + 2):
        for c in range(1, n + 1):
            cubes.update(product((a,), range(2, a + 1), (c,), range(1, c + 1)))
    return CubeSet(frozenset(cubes))


def rect_triangle_union(n: int) -> CubeSet:
    """Label constraints ``1 <= a <= n+1``, ``2 <= b <= n+1``,
    ``1 <= d <= c <= n``: the union of the two reassembled solids."""
    _check_n(n)
    cubes = set()
    for c in range(1, n + 1):
        cubes.update(
            product(range(1, n + 2), range(2, n + 2), (c,), range(1, c + 1))
        )
    return CubeSet(frozenset(cubes))


_NAMED_SET_IDS = (
    "A",
    "B",
    "C",
    "D",
    "overhang_D",
    "vacancy_neighbor_C",
    "vacancy_super_C",
    "B_cge_d",
    "B_clt_d",
    "A_alt_b",
    "S33",
    "C_cge_d",
    "C_clt_d",
    "A_2le_b_le_a",
    "S33_prime",
)


def named_set_ids() -> tuple[str, ...]:
    return _NAMED_SET_IDS


def named_set(set_id: str, n: int) -> CubeSet:
    """Resolve any named cube set by identifier; regenerates from ``(id, n)``."""
    _check_n(n)
    if set_id in BLOCK_KINDS:
        return block(set_id, n)
    sub = {
        "overhang_D": lambda: subcomponents(n).overhang_d,
        "vacancy_neighbor_C": lambda: subcomponents(n).vacancy_neighbor_c,
        "vacancy_super_C": lambda: subcomponents(n).vacancy_super_c,
        "B_cge_d": lambda: partition_sets(n).b_cge_d,
        "B_clt_d": lambda: partition_sets(n).b_clt_d,
        "A_alt_b": lambda: partition_sets(n).a_alt_b,
        "S33": lambda: partition_sets(n).s33,
        "C_cge_d": lambda: partition_sets(n).c_cge_d,
        "C_clt_d": lambda: partition_sets(n).c_clt_d,
        "A_2le_b_le_a": lambda: partition_sets(n).a_2le_b_le_a,
        "S33_prime": lambda: partition_sets(n).s33_prime,
    }
    if set_id not in sub:
        raise ValueError(
            f"unknown set id {set_id!r}; known ids: {', '.join(_NAMED_SET_IDS)}"
        )
    return sub[set_id]()


def gamma_slab(n: int) -> CubeSet:
    """Locations of the target box claimed by block C plus the ``y = 1``
    vacancies: union over i of ``x = i+1``, ``y in [1, i+1]``,
    ``z, w in [1, i]``."""
    _check_n(n)
    cubes = set()
    for i in range(1, n + 1):
        r = range(1, i + 1)
        cubes.update(product((i + 1,), range(1, i + 2), r, r))
    return CubeSet(frozenset(cubes))


def delta_slab(n: int) -> CubeSet:
    """Locations of the target box claimed by block D (overhang excluded):
    union over ``i in [2, n]`` of ``w = i``, ``x, y in [1, i]``,
    ``z in [1, i-1]``."""
    _check_n(n)
    cubes = set()
    for i in range(2, n + 1):
        r = range(1, i + 1)
        cubes.update(product(r, r, range(1, i), (i,)))
    return CubeSet(frozenset(cubes))
