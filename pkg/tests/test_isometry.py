import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypertile.isometry import (
    CATALOG_IDS,
    Isometry,
    axis_map,
    identity,
    named_map,
    parse_map,
    translation,
)

isometries_st = st.builds(
    Isometry,
    st.permutations(range(4)).map(tuple),
    st.tuples(*[st.sampled_from((-1, 1))] * 4),
    st.tuples(*[st.integers(-5, 6)] * 4),
)
labels_st = st.tuples(*[st.integers(-7, 9)] * 4)


def label_via_endpoints(f, v):
    # oracle: map both interval endpoints as points, reread the right endpoint
    lo = f.apply_point(tuple(c - 1 for c in v))
    hi = f.apply_point(v)
    return tuple(max(a, b) for a, b in zip(lo, hi))


def every_catalog_map():
    for map_id in CATALOG_IDS:
        if map_id in ("rho_1", "rho_2"):
            for n in (1, 2, 5):
                yield map_id, named_map(map_id, n)
        else:
            yield map_id, named_map(map_id)


# -- published formulas ------------------------------------------------------


def test_replication_map_formula():
    mu = named_map("mu_D_C")
    assert mu.format_map() == "(x,y,z,w) -> (w+1, z+2, y, x)"
    assert mu.apply_label((1, 1, 0, 1)) == (2, 2, 1, 1)


def test_identity_fixes_labels():
    assert named_map("identity").apply_label((3, 1, 4, 1)) == (3, 1, 4, 1)


def test_rho1_label_action_flips_y():
    # y-interval [0,1] lands on [4,5] for n = 4, so the label becomes 5
    assert named_map("rho_1", 4).apply_label((1, 1, 0, 1)) == (1, 5, 0, 1)


def test_compose_published_examples():
    lhs = named_map("rho_z_x_y") @ named_map("rho_w_x_z").inverse()
    assert lhs == axis_map("w", "z", "y", "x") == named_map("mu_D_C_prime")
    chain = named_map("rho_2", 4) @ named_map("tau_x+1") @ named_map("rho_1", 4)
    assert chain == parse_map("(x,y,z,w) -> (w+1, z+1, y, x)")
    assert chain == named_map("phi_C_u") @ named_map("mu_D_C")
    f = named_map("psi_y_x+1")
    assert f @ identity() == f == identity() @ f


def test_invert_examples():
    assert named_map("tau_z-1").inverse() == named_map("tau_z+1")
    assert identity().inverse() == identity()
    phi = named_map("phi_w_y")
    assert phi.inverse() == phi
    assert phi @ phi == identity()


def test_parity_examples():
    assert named_map("rho_y_z_x").parity == "rotation"
    assert named_map("phi_w_y").parity == "reflection"
    assert named_map("mu_D_C_prime").parity == "rotation"
    assert named_map("psi_z_w_y-1_x").parity == "reflection"
    assert named_map("rho_1", 3).parity == "rotation"
    assert named_map("rho_2", 3).parity == "rotation"


def test_swing_map_decomposition():
    built = named_map("phi_w_y") @ named_map("rho_z_x_y") @ named_map("tau_y-1")
    assert built == named_map("psi_z_w_y-1_x")
    assert named_map("psi_y_x+1") == named_map("tau_y+1") @ named_map("phi_y_x")
    t = named_map("tau_y-1")
    assert named_map("psi_z_w-1_y_x") == t @ named_map("psi_z_w_y-1_x") @ t.inverse()


def test_tuple_relabelings():
    assert named_map("f_1").apply_label((1, 2, 3, 4)) == (4, 3, 1, 2)
    assert named_map("f_2").apply_label((1, 2, 3, 4)) == (3, 4, 2, 1)


def test_named_map_errors():
    with pytest.raises(ValueError):
        named_map("nope")
    with pytest.raises(ValueError):
        named_map("rho_1")  # missing n


# -- group laws and consistency ----------------------------------------------


@given(isometries_st, isometries_st, isometries_st, labels_st)
@settings(max_examples=150)
def test_group_laws(f, g, h, v):
    assert (f @ g) @ h == f @ (g @ h)
    assert (f @ g).apply_label(v) == f.apply_label(g.apply_label(v))
    assert (f @ f.inverse()) == identity() == (f.inverse() @ f)
    assert f @ identity() == f == identity() @ f
    assert f.inverse().apply_label(f.apply_label(v)) == v


@given(isometries_st, isometries_st)
@settings(max_examples=150)
def test_parity_multiplicative(f, g):
    assert (f @ g).parity_sign == f.parity_sign * g.parity_sign


@given(isometries_st, labels_st)
@settings(max_examples=200)
def test_label_action_matches_point_action(f, v):
    assert f.apply_label(v) == label_via_endpoints(f, v)


def test_catalog_label_point_consistency():
    import random

    rng = random.Random(7)
    for map_id, f in every_catalog_map():
        for _ in range(120):
            v = tuple(rng.randint(-8, 9) for _ in range(4))
            assert f.apply_label(v) == label_via_endpoints(f, v), map_id


def test_bijective_on_labels():
    f = named_map("rho_1", 3)
    labels = [(a, b, 1, 1) for a in range(-2, 4) for b in range(-2, 4)]
    assert len({f.apply_label(v) for v in labels}) == len(labels)


# -- textual round trip --------------------------------------------------------


def test_format_examples():
    assert translation(dy=-1).format_map() == "(x,y,z,w) -> (x, y-1, z, w)"
    assert named_map("rho_1", 7).format_map() == "(x,y,z,w) -> (w, 8-y, z, x)"


@given(isometries_st)
@settings(max_examples=200)
def test_parse_format_round_trip(f):
    text = f.format_map()
    assert parse_map(text) == f
    assert parse_map(text).format_map() == text


def test_parse_accepts_loose_spacing():
    assert parse_map("(x,y,z,w)->(w + 1, z+2, y, x)") == named_map("mu_D_C")
    assert parse_map("(x,y,z,w) -> (-x, y, z, w)") == Isometry(
        (0, 1, 2, 3), (-1, 1, 1, 1), (0, 0, 0, 0)
    )


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_map("(x,y,z) -> (x,y,z)")
    with pytest.raises(ValueError):
        parse_map("(x,y,z,w) -> (x, y, z, w+w)")
