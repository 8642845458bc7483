"""Axis-aligned integer isometries of R^4 and the named map catalog.

Every map used here is a signed permutation of the coordinate axes followed
by an integer translation, so a single normal form ``(perm, signs, shift)``
covers all of them:

    point action:  out_i = signs[i] * p[perm[i]] + shift[i]

The action on location labels is always *derived* from the point action on
interval endpoints, never authored separately; for ``signs[i] == -1`` the
right endpoint of the image interval is ``shift[i] - v + 1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .lattice import AXES, Label


@dataclass(frozen=True)
class Isometry:
    """A signed axis permutation plus integer translation of R^4.

    ``perm[i]`` is the source axis feeding output axis ``i``; ``signs[i]``
    is +1 or -1; ``shift[i]`` is an integer.  Such maps are exactly the
    isometries that carry axis-aligned unit cubes with integer corners to
    cubes of the same kind.
    """

    perm: tuple[int, int, int, int]
    signs: tuple[int, int, int, int]
    shift: tuple[int, int, int, int]

    def __post_init__(self):
        if sorted(self.perm) != [0, 1, 2, 3]:
            raise ValueError(f"perm must be a permutation of 0..3, got {self.perm}")
        if any(s not in (-1, 1) for s in self.signs):
            raise ValueError(f"signs must be +-1, got {self.signs}")

    def apply_point(self, p: Iterable[float]) -> tuple:
        q = tuple(p)
        return tuple(
            self.signs[i] * q[self.perm[i]] + self.shift[i] for i in range(4)
        )

    def apply_label(self, v: Label) -> Label:
        out = []
        for i in range(4):
            u = v[self.perm[i]]
            if self.signs[i] == 1:
                out.append(u + self.shift[i])
            else:
                out.append(self.shift[i] - u + 1)
        return tuple(out)  # type: ignore[return-value]

    def __call__(self, v: Label) -> Label:
        return self.apply_label(v)

    def compose(self, other: "Isometry") -> "Isometry":
        """``self`` after ``other``: the map ``p -> self(other(p))``."""
        perm = tuple(other.perm[self.perm[i]] for i in range(4))
        signs = tuple(self.signs[i] * other.signs[self.perm[i]] for i in range(4))
        shift = tuple(
            self.signs[i] * other.shift[self.perm[i]] + self.shift[i]
            for i in range(4)
        )
        return Isometry(perm, signs, shift)

    def __matmul__(self, other: "Isometry") -> "Isometry":
        return self.compose(other)

    def inverse(self) -> "Isometry":
        perm = [0] * 4
        signs = [1] * 4
        shift = [0] * 4
        for i in range(4):
            j = self.perm[i]
            perm[j] = i
            signs[j] = self.signs[i]
            shift[j] = -self.signs[i] * self.shift[i]
        return Isometry(tuple(perm), tuple(signs), tuple(shift))

    @property
    def parity_sign(self) -> int:
        """+1 for orientation-preserving maps, -1 otherwise."""
        sign = 1
        seen = [False] * 4
        for start in range(4):
            if seen[start]:
                continue
            length = 0
            j = start
            while not seen[j]:
                seen[j] = True
                j = self.perm[j]
                length += 1
            sign *= -1 if length % 2 == 0 else 1
        for s in self.signs:
            sign *= s
        return sign

    @property
    def parity(self) -> str:
        return "rotation" if self.parity_sign == 1 else "reflection"

    def format_map(self) -> str:
        parts = []
        for i in range(4):
            var = AXES[self.perm[i]]
            t = self.shift[i]
            if self.signs[i] == 1:
                if t == 0:
                    parts.append(var)
                else:
                    parts.append(f"{var}{t:+d}")
            else:
                if t == 0:
                    parts.append(f"-{var}")
                else:
                    parts.append(f"{t}-{var}")
        return "(x,y,z,w) -> (" + ", ".join(parts) + ")"

    def __str__(self) -> str:
        return self.format_map()


def identity() -> Isometry:
    return Isometry((0, 1, 2, 3), (1, 1, 1, 1), (0, 0, 0, 0))


def translation(dx: int = 0, dy: int = 0, dz: int = 0, dw: int = 0) -> Isometry:
    return Isometry((0, 1, 2, 3), (1, 1, 1, 1), (dx, dy, dz, dw))


def axis_map(*targets: str) -> Isometry:
    """Pure axis permutation: output axes take the named source axes in order.

    ``axis_map("y", "z", "x", "w")`` is ``(x,y,z,w) -> (y,z,x,w)``.
    """
    perm = tuple(AXES.index(t) for t in targets)
    return Isometry(perm, (1, 1, 1, 1), (0, 0, 0, 0))


_COMPONENT = re.compile(
    r"^(?:"
    r"(?P<var1>[xyzw])(?P<t1>[+-]\d+)?"  # x, x+2, x-1
    r"|-(?P<var2>[xyzw])(?P<t2>[+-]\d+)?"  # -x, -x+3
    r"|(?P<t3>-?\d+)(?P<op>[+-])(?P<var3>[xyzw])"  # 5-y, 3+x
    r")$"
)


def parse_map(text: str) -> Isometry:
    """Parse the textual form ``"(x,y,z,w) -> (w+1, z+2, y, x)"``."""
    m = re.match(r"^\s*\(\s*x\s*,\s*y\s*,\s*z\s*,\s*w\s*\)\s*->\s*\((.*)\)\s*$", text)
    if not m:
        raise ValueError(f"not a map expression: {text!r}")
    parts = [p.strip() for p in m.group(1).split(",")]
    if len(parts) != 4:
        raise ValueError(f"expected 4 output components, got {len(parts)}: {text!r}")
    perm, signs, shift = [], [], []
    for part in parts:
        cm = _COMPONENT.match(part.replace(" ", ""))
        if not cm:
            raise ValueError(f"cannot parse map component {part!r}")
        if cm.group("var1"):
            var, sign, t = cm.group("var1"), 1, int(cm.group("t1") or 0)
        elif cm.group("var2"):
            var, sign, t = cm.group("var2"), -1, int(cm.group("t2") or 0)
        else:
            var = cm.group("var3")
            sign = 1 if cm.group("op") == "+" else -1
            t = int(cm.group("t3"))
        perm.append(AXES.index(var))
        signs.append(sign)
        shift.append(t)
    return Isometry(tuple(perm), tuple(signs), tuple(shift))


def _checked(built: Isometry, stated: Isometry, name: str) -> Isometry:
    # Composed catalog entries are rebuilt from their defining chains and
    # compared against the published one-step forms.  A mismatch means the
    # catalog itself is corrupt, so fail loudly.
    if built != stated:
        raise RuntimeError(
            f"catalog self-check failed for {name}: {built} != {stated}"
        )
    return built


def _mu_d_c() -> Isometry:
    chain = (
        _CATALOG["tau_x+1_y+1"]()
        @ _CATALOG["rho_z_x_y"]()
        @ _CATALOG["rho_w_x_z"]().inverse()
        @ _CATALOG["tau_z-1"]().inverse()
    )
    stated = parse_map("(x,y,z,w) -> (w+1, z+2, y, x)")
    return _checked(chain, stated, "mu_D_C")


def _mu_d_c_prime() -> Isometry:
    chain = _CATALOG["rho_z_x_y"]() @ _CATALOG["rho_w_x_z"]().inverse()
    return _checked(chain, axis_map("w", "z", "y", "x"), "mu_D_C_prime")


def _psi_block_swap() -> Isometry:
    # (x,y,z,w) -> (z, w, y-1, x), equal to phi_w_y o rho_z_x_y o tau_y-1.
    chain = _CATALOG["phi_w_y"]() @ _CATALOG["rho_z_x_y"]() @ _CATALOG["tau_y-1"]()
    return _checked(chain, parse_map("(x,y,z,w) -> (z, w, y-1, x)"), "psi_z_w_y-1_x")


def _psi_column_swap() -> Isometry:
    # (x,y,z,w) -> (y, x+1, z, w), equal to tau_y+1 o phi_y_x.
    chain = _CATALOG["tau_y+1"]() @ _CATALOG["phi_y_x"]()
    return _checked(chain, parse_map("(x,y,z,w) -> (y, x+1, z, w)"), "psi_y_x+1")


def _psi_block_swap_translated() -> Isometry:
    # Conjugate of psi_z_w_y-1_x by the y-1 translation.
    t = _CATALOG["tau_y-1"]()
    chain = t @ _CATALOG["psi_z_w_y-1_x"]() @ t.inverse()
    return _checked(chain, parse_map("(x,y,z,w) -> (z, w-1, y, x)"), "psi_z_w-1_y_x")


def _rho_1(n: int) -> Isometry:
    # (x,y,z,w) -> (w, n+1-y, z, x)
    return Isometry((3, 1, 2, 0), (1, -1, 1, 1), (0, n + 1, 0, 0))


def _rho_2(n: int) -> Isometry:
    # (x,y,z,w) -> (x, z+1, n+1-y, w)
    return Isometry((0, 2, 1, 3), (1, 1, -1, 1), (0, 1, n + 1, 0))


_CATALOG = {
    "identity": identity,
    "rho_y_z_x": lambda: axis_map("y", "z", "x", "w"),
    "rho_z_x_y": lambda: axis_map("z", "x", "y", "w"),
    "rho_w_x_z": lambda: axis_map("w", "y", "x", "z"),
    "tau_y+1": lambda: translation(dy=1),
    "tau_y-1": lambda: translation(dy=-1),
    "tau_z+1": lambda: translation(dz=1),
    "tau_z-1": lambda: translation(dz=-1),
    "tau_x+1": lambda: translation(dx=1),
    "tau_x+1_y+1": lambda: translation(dx=1, dy=1),
    "tau_x-1_y-1": lambda: translation(dx=-1, dy=-1),
    "phi_w_y": lambda: axis_map("x", "w", "z", "y"),
    "phi_y_x": lambda: axis_map("y", "x", "z", "w"),
    "phi_C_u": lambda: translation(dy=-1),
    "mu_D_C": _mu_d_c,
    "mu_D_C_prime": _mu_d_c_prime,
    "psi_z_w_y-1_x": _psi_block_swap,
    "psi_y_x+1": _psi_column_swap,
    "psi_z_w-1_y_x": _psi_block_swap_translated,
    "f_1": lambda: axis_map("w", "z", "x", "y"),
    "f_2": lambda: axis_map("z", "w", "y", "x"),
}

_NEEDS_N = {"rho_1": _rho_1, "rho_2": _rho_2}

CATALOG_IDS = tuple(sorted(_CATALOG)) + tuple(sorted(_NEEDS_N))


def named_map(map_id: str, n: int | None = None) -> Isometry:
    """Look up a catalog map by identifier; ``rho_1``/``rho_2`` require ``n``."""
    if map_id in _NEEDS_N:
        if n is None:
            raise ValueError(f"map {map_id!r} requires the size parameter n")
        return _NEEDS_N[map_id](n)
    if map_id not in _CATALOG:
        raise ValueError(
            f"unknown map {map_id!r}; known ids: {', '.join(CATALOG_IDS)}"
        )
    return _CATALOG[map_id]()
