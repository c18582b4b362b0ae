"""Exact arithmetic in the affine sl2 weight lattice.

A weight is stored by its pairings with the two simple coroots and with
the scaling element d, as exact rationals.  LS-path turning times are
rationals like 2/7, so everything downstream depends on this exactness.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .weyl import WeylElement

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class Weight:
    """Coroot-pairing coordinates (<w, a0v>, <w, a1v>, <w, d>)."""

    c0: Fraction
    c1: Fraction
    dd: Fraction

    def __post_init__(self):
        object.__setattr__(self, "c0", Fraction(self.c0))
        object.__setattr__(self, "c1", Fraction(self.c1))
        object.__setattr__(self, "dd", Fraction(self.dd))

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(self.c0 + other.c0, self.c1 + other.c1, self.dd + other.dd)

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(self.c0 - other.c0, self.c1 - other.c1, self.dd - other.dd)

    def __neg__(self) -> "Weight":
        return Weight(-self.c0, -self.c1, -self.dd)

    def __mul__(self, scalar: Scalar) -> "Weight":
        s = Fraction(scalar)
        return Weight(self.c0 * s, self.c1 * s, self.dd * s)

    __rmul__ = __mul__

    def to_json(self) -> dict:
        return {"c0": str(self.c0), "c1": str(self.c1), "d": str(self.dd)}

    @classmethod
    def from_json(cls, data: dict) -> "Weight":
        return cls(Fraction(data["c0"]), Fraction(data["c1"]), Fraction(data["d"]))

    def display(self) -> str:
        """Render as 'aΛ0 + bΛ1 - n0α0 - n1α1' with integer coefficients
        when possible (the representation is unique for a, b >= 0), else
        fall back to raw coordinates."""
        level = self.c0 + self.c1
        n0 = -self.dd
        if level.denominator == 1 and level >= 0 and n0.denominator == 1:
            for a in range(int(level), -1, -1):
                b = int(level) - a
                half = self.c0 - a
                if half % 2 != 0:
                    continue
                n1 = n0 + half / 2
                if n1.denominator != 1 or self.c1 - b != 2 * n0 - 2 * n1:
                    continue
                terms = []
                if a:
                    terms.append(("+", "Λ0" if a == 1 else "%dΛ0" % a))
                if b:
                    terms.append(("+", "Λ1" if b == 1 else "%dΛ1" % b))
                for coeff, root in ((int(n0), "α0"), (int(n1), "α1")):
                    if coeff:
                        terms.append(("-" if coeff > 0 else "+",
                                      "%d%s" % (abs(coeff), root)))
                if not terms:
                    return "0"
                sign, body = terms[0]
                text = body if sign == "+" else "-" + body
                for sign, body in terms[1:]:
                    text += " %s %s" % (sign, body)
                return text
        return "(%s, %s, %s)" % (self.c0, self.c1, self.dd)

    def __str__(self):
        return self.display()


ZERO = Weight(0, 0, 0)
LAMBDA0 = Weight(1, 0, 0)
LAMBDA1 = Weight(0, 1, 0)
ALPHA0 = Weight(2, -2, 1)
ALPHA1 = Weight(-2, 2, 0)
DELTA = ALPHA0 + ALPHA1


def fundamental(i: int) -> Weight:
    if i == 0:
        return LAMBDA0
    if i == 1:
        return LAMBDA1
    raise ValueError("fundamental weight index must be 0 or 1")


def simple_root(i: int) -> Weight:
    if i == 0:
        return ALPHA0
    if i == 1:
        return ALPHA1
    raise ValueError("simple root index must be 0 or 1")


def pair_coroot(w: Weight, i: int) -> Fraction:
    if i == 0:
        return w.c0
    if i == 1:
        return w.c1
    raise ValueError("coroot index must be 0 or 1")


def reflect(i: int, w: Weight) -> Weight:
    """Simple reflection: w - <w, a_i^vee> a_i."""
    return w - pair_coroot(w, i) * simple_root(i)


def act(w: WeylElement, lam: Weight) -> Weight:
    """Apply the reduced word of w to lam, rightmost letter first."""
    for g in reversed(w.word()):
        lam = reflect(g, lam)
    return lam


def is_dominant(w: Weight) -> bool:
    """Both coroot pairings nonnegative; the d-coordinate is free."""
    return w.c0 >= 0 and w.c1 >= 0
