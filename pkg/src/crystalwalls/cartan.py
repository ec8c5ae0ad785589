"""Cartan datum of affine type C_2^(1).

Weights live in the basis (Lambda_0, Lambda_1, Lambda_2, delta) and coroots
in the basis (h_0, h_1, h_2, d).  Everything is exact integer arithmetic.
"""

from __future__ import annotations

import json
from typing import NamedTuple

INDICES = (0, 1, 2)

# a[i][j]
CARTAN_MATRIX = (
    (2, -1, 0),
    (-2, 2, -2),
    (0, -1, 2),
)

# delta = sum_i DELTA_MARKS[i] * alpha_i
DELTA_MARKS = (1, 2, 1)


def check_index(i: int) -> int:
    if i not in INDICES:
        raise ValueError(f"index must be one of 0, 1, 2, got {i!r}")
    return i


class AffineWeight(NamedTuple):
    """Integer combination l0*Lambda_0 + l1*Lambda_1 + l2*Lambda_2 + d*delta."""

    l0: int = 0
    l1: int = 0
    l2: int = 0
    delta: int = 0

    def __add__(self, other):
        if not isinstance(other, AffineWeight):
            return NotImplemented
        return AffineWeight(*(a + b for a, b in zip(self, other)))

    def __sub__(self, other):
        if not isinstance(other, AffineWeight):
            return NotImplemented
        return AffineWeight(*(a - b for a, b in zip(self, other)))

    def __neg__(self):
        return AffineWeight(*(-a for a in self))

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return AffineWeight(*(k * a for a in self))

    __rmul__ = __mul__

    @property
    def lambdas(self) -> tuple[int, int, int]:
        return (self.l0, self.l1, self.l2)

    def cl(self) -> AffineWeight:
        """Classical projection: drop the delta coefficient."""
        return AffineWeight(self.l0, self.l1, self.l2, 0)

    def to_json(self) -> str:
        return json.dumps(list(self))

    @classmethod
    def from_json(cls, text: str) -> AffineWeight:
        values = json.loads(text)
        if len(values) != 4 or not all(isinstance(v, int) for v in values):
            raise ValueError(f"expected four integers, got {text!r}")
        return cls(*values)

    def pretty(self) -> str:
        terms = []
        for name, coeff in zip(("Λ0", "Λ1", "Λ2", "δ"), self):
            if coeff == 0:
                continue
            sign = "-" if coeff < 0 else "+"
            mag = abs(coeff)
            terms.append(f"{sign}{'' if mag == 1 else mag}{name}")
        if not terms:
            return "0"
        text = "".join(terms)
        return text[1:] if text.startswith("+") else text


class Coroot(NamedTuple):
    """Integer combination h0*h_0 + h1*h_1 + h2*h_2 + d*d."""

    h0: int = 0
    h1: int = 0
    h2: int = 0
    d: int = 0


def fundamental_weight(i: int) -> AffineWeight:
    check_index(i)
    coeffs = [0, 0, 0, 0]
    coeffs[i] = 1
    return AffineWeight(*coeffs)


def simple_coroot(i: int) -> Coroot:
    check_index(i)
    coeffs = [0, 0, 0, 0]
    coeffs[i] = 1
    return Coroot(*coeffs)


DELTA = AffineWeight(0, 0, 0, 1)
CENTRAL = Coroot(1, 1, 1, 0)
SCALING = Coroot(0, 0, 0, 1)


def pair(w: AffineWeight, h: Coroot) -> int:
    # Lambda_i(h_j) = delta_ij, Lambda_i(d) = 0, delta(h_j) = 0, delta(d) = 1
    return w.l0 * h.h0 + w.l1 * h.h1 + w.l2 * h.h2 + w.delta * h.d


def simple_root(i: int) -> AffineWeight:
    """alpha_i, with alpha_i(h_j) = a_ji and alpha_i(d) = [i == 0]."""
    check_index(i)
    column = [CARTAN_MATRIX[j][i] for j in INDICES]
    return AffineWeight(*column, 1 if i == 0 else 0)


SIMPLE_ROOTS = tuple(simple_root(i) for i in INDICES)
FUNDAMENTAL_WEIGHTS = tuple(fundamental_weight(i) for i in INDICES)


def level(w: AffineWeight) -> int:
    return pair(w, CENTRAL)


def from_root_coordinates(base: AffineWeight, m: tuple[int, int, int]) -> AffineWeight:
    """Return base - m0*alpha_0 - m1*alpha_1 - m2*alpha_2."""
    out = base
    for i, mi in zip(INDICES, m):
        out = out - mi * SIMPLE_ROOTS[i]
    return out
