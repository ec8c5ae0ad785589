"""The five-element level-1 perfect crystal B of type C_2^(1)."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

from .cartan import (
    INDICES,
    SIMPLE_ROOTS,
    AffineWeight,
    check_index,
    level,
)


class BElem(enum.Enum):
    """Vertices of B, named by the two entries of the box (overbar = minus)."""

    B12 = "1,2"
    B1b2 = "1,-2"
    B2b2 = "2,-2"
    B2b1 = "2,-1"
    Bb2b1 = "-2,-1"

    def __repr__(self):
        return f"BElem({self.value!r})"

    def __lt__(self, other):
        if not isinstance(other, BElem):
            return NotImplemented
        return ORDER[self] < ORDER[other]

    @classmethod
    def parse(cls, text: str) -> BElem:
        try:
            return cls(text.strip())
        except ValueError:
            raise ValueError(f"unknown element of B: {text!r}") from None


ORDER = {b: n for n, b in enumerate(BElem)}

# (color, source) -> target, read off the crystal graph figure
F_TABLE = {
    (2, BElem.B12): BElem.B1b2,
    (2, BElem.B2b1): BElem.Bb2b1,
    (1, BElem.B1b2): BElem.B2b2,
    (1, BElem.B2b2): BElem.B2b1,
    (0, BElem.B2b1): BElem.B12,
    (0, BElem.Bb2b1): BElem.B1b2,
}
E_TABLE = {(i, dst): src for (i, src), dst in F_TABLE.items()}


def f_b(i: int, b: BElem) -> BElem | None:
    check_index(i)
    return F_TABLE.get((i, b))


def e_b(i: int, b: BElem) -> BElem | None:
    check_index(i)
    return E_TABLE.get((i, b))


@lru_cache(maxsize=None)
def eps_phi_b(i: int, b: BElem) -> tuple[int, int]:
    """String lengths: (max k with e_i^k b != 0, max k with f_i^k b != 0)."""
    eps, x = 0, e_b(i, b)
    while x is not None:
        eps, x = eps + 1, e_b(i, x)
    phi, x = 0, f_b(i, b)
    while x is not None:
        phi, x = phi + 1, f_b(i, x)
    return eps, phi


def eps_vector(b: BElem) -> AffineWeight:
    return AffineWeight(*(eps_phi_b(i, b)[0] for i in INDICES), 0)


def phi_vector(b: BElem) -> AffineWeight:
    return AffineWeight(*(eps_phi_b(i, b)[1] for i in INDICES), 0)


def wt_b(b: BElem) -> AffineWeight:
    return phi_vector(b) - eps_vector(b)


class PerfectCrystalModel:
    """Model adapter for B (classical weights)."""

    name = "b"
    affine = False

    def wt(self, b):
        return wt_b(b)

    def eps(self, i, b):
        return eps_phi_b(i, b)[0]

    def phi(self, i, b):
        return eps_phi_b(i, b)[1]

    def e(self, i, b):
        return e_b(i, b)

    def f(self, i, b):
        return f_b(i, b)

    def key(self, b):
        return b.value


B_MODEL = PerfectCrystalModel()


# ---------------------------------------------------------------------------
# perfectness


@dataclass
class PerfectnessReport:
    level: int
    connected: bool
    lambda0: AffineWeight | None
    min_level_ok: bool
    b_min: list[BElem]
    eps_images: dict[BElem, AffineWeight]
    phi_images: dict[BElem, AffineWeight]
    bijective: bool
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def _tensor_connected() -> bool:
    from .crystal import TensorModel

    model = TensorModel(B_MODEL, B_MODEL)
    elems = list(product(BElem, BElem))
    seen = {elems[0]}
    stack = [elems[0]]
    while stack:
        t = stack.pop()
        for i in INDICES:
            for y in (model.f(i, t), model.e(i, t)):
                if y is not None and y not in seen:
                    seen.add(y)
                    stack.append(y)
    return len(seen) == len(elems)


def _in_lower_cone(diff: AffineWeight) -> bool:
    """Is ``diff`` in sum_{i != 0} Z_{<=0} alpha_i (classically)?"""
    # classical alpha_1 = (-1, 2, -1), alpha_2 = (0, -2, 2): l0 = -m1 pins m1,
    # then l2 = -m1 + 2*m2 pins m2
    m1 = -diff.l0
    if (diff.l2 + m1) % 2:
        return False
    m2 = (diff.l2 + m1) // 2
    recon = (m1 * SIMPLE_ROOTS[1] + m2 * SIMPLE_ROOTS[2]).cl()
    return recon == diff.cl() and m1 <= 0 and m2 <= 0


def check_perfect(level_l: int = 1) -> PerfectnessReport:
    """Check the four perfectness conditions for B at ``level_l``."""
    failures = []
    connected = _tensor_connected()
    if not connected:
        failures.append("(i) B (x) B is not connected")

    weights = {b: wt_b(b) for b in BElem}
    lambda0 = None
    for cand in sorted(set(weights.values())):
        if all(_in_lower_cone(w - cand) for w in weights.values()) and \
                sum(w == cand for w in weights.values()) == 1:
            lambda0 = cand
            break
    if lambda0 is None:
        failures.append("(ii) no extremal weight lambda_0 with multiplicity one")

    levels = {b: level(eps_vector(b)) for b in BElem}
    min_level_ok = all(v >= level_l for v in levels.values())
    if not min_level_ok:
        failures.append(f"(iii) some <eps(b), c> below {level_l}")

    b_min = [b for b in BElem if levels[b] == level_l]
    eps_images = {b: eps_vector(b) for b in b_min}
    phi_images = {b: phi_vector(b) for b in b_min}
    targets = _dominant_of_level(level_l)
    bijective = (
        sorted(eps_images.values()) == targets and sorted(phi_images.values()) == targets
    )
    if not bijective:
        failures.append("(iv) eps or phi restricted to B^min is not a bijection")
    return PerfectnessReport(level_l, connected, lambda0, min_level_ok, b_min,
                             eps_images, phi_images, bijective, failures)


def _dominant_of_level(l: int) -> list[AffineWeight]:
    out = []
    for a in range(l + 1):
        for b in range(l + 1 - a):
            out.append(AffineWeight(a, b, l - a - b, 0))
    return sorted(out)

