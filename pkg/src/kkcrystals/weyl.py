"""The Weyl group of affine sl2: the infinite dihedral group on s0, s1.

Every non-identity element has a unique reduced word, namely the
alternating word in s0, s1 determined by its length and leftmost letter.
This makes the group law, Bruhat order, minimal coset representatives and
double-coset minima all computable in closed form.  The closed forms are
validated against brute-force oracles (subword characterisation,
Bruhat-ideal enumeration) in the test suite before anything relies on
them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class WeylElement:
    """An element of the infinite dihedral group.

    ``length`` is the Coxeter length; ``first`` is the leftmost generator
    of the reduced word (None exactly for the identity).
    """

    length: int
    first: Optional[int] = None

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("length must be nonnegative")
        if (self.length == 0) != (self.first is None):
            raise ValueError("identity iff no leftmost generator")
        if self.first not in (None, 0, 1):
            raise ValueError("generator index must be 0 or 1")

    @property
    def last(self) -> Optional[int]:
        """Rightmost generator of the reduced word (None for the identity)."""
        if self.first is None:
            return None
        return self.first if self.length % 2 == 1 else 1 - self.first

    def word(self) -> tuple[int, ...]:
        """The unique reduced word, leftmost letter first."""
        if self.first is None:
            return ()
        return tuple((self.first + k) % 2 for k in range(self.length))

    def inverse(self) -> "WeylElement":
        # the reduced word of the inverse is the reversed word
        if self.first is None:
            return self
        return WeylElement(self.length, self.last)

    def to_string(self) -> str:
        if self.length == 0:
            return "e"
        return " ".join("s%d" % g for g in self.word())

    @classmethod
    def from_string(cls, text: str) -> "WeylElement":
        text = text.strip()
        if text == "e":
            return IDENTITY
        letters = []
        for token in text.split():
            if token not in ("s0", "s1"):
                raise ValueError("bad generator token %r" % token)
            letters.append(int(token[1]))
        for a, b in zip(letters, letters[1:]):
            if a == b:
                raise ValueError("word %r is not reduced" % text)
        return cls(len(letters), letters[0])

    def __str__(self):
        return self.to_string()


IDENTITY = WeylElement(0, None)


def generator(i: int) -> WeylElement:
    return WeylElement(1, i)


def left_multiply(i: int, w: WeylElement) -> WeylElement:
    """s_i * w; the length changes by exactly one."""
    if i not in (0, 1):
        raise ValueError("generator index must be 0 or 1")
    if w.length == 0:
        return WeylElement(1, i)
    if i == w.first:
        if w.length == 1:
            return IDENTITY
        return WeylElement(w.length - 1, 1 - w.first)
    return WeylElement(w.length + 1, i)


def right_multiply(w: WeylElement, i: int) -> WeylElement:
    """w * s_i; the length changes by exactly one."""
    if i not in (0, 1):
        raise ValueError("generator index must be 0 or 1")
    if w.length == 0:
        return WeylElement(1, i)
    if i == w.last:
        if w.length == 1:
            return IDENTITY
        return WeylElement(w.length - 1, w.first)
    return WeylElement(w.length + 1, w.first)


def bruhat_leq(u: WeylElement, w: WeylElement) -> bool:
    """Bruhat order; in the infinite dihedral group u <= w iff
    length(u) < length(w) or u == w."""
    return u.length < w.length or u == w


def wedge(w: WeylElement, i: int) -> WeylElement:
    """The Bruhat-smaller of w and s_i * w."""
    sw = left_multiply(i, w)
    return sw if sw.length < w.length else w


def bruhat_ideal(x: WeylElement) -> list[WeylElement]:
    """All elements u <= x, enumerated explicitly (for oracle checks)."""
    out = [IDENTITY]
    for length in range(1, x.length):
        out.append(WeylElement(length, 0))
        out.append(WeylElement(length, 1))
    if x.length >= 1:
        out.append(x)
    return out


def bruhat_ideal_min(x: WeylElement, y: WeylElement) -> WeylElement:
    """min { u * y : u <= x }, computed by iterated wedges over the
    reduced word of x, rightmost letter first."""
    z = y
    for g in reversed(x.word()):
        z = wedge(z, g)
    return z


@dataclass(frozen=True)
class CosetRep:
    """Minimal representative w_n^+ or w_n^- of a coset modulo a
    fundamental-weight stabilizer.

    Plus representatives end in s0 on the right, minus representatives in
    s1; index 0 is the identity for both signs.
    """

    sign: str
    index: int

    def __post_init__(self):
        if self.sign not in ("+", "-"):
            raise ValueError("sign must be '+' or '-'")
        if self.index < 0:
            raise ValueError("index must be nonnegative")

    def element(self) -> WeylElement:
        return coset_element(self.sign, self.index)

    def to_string(self) -> str:
        return "w%s%d" % (self.sign, self.index)

    @classmethod
    def from_string(cls, text: str) -> "CosetRep":
        text = text.strip()
        if not text.startswith("w") or len(text) < 3 or text[1] not in "+-":
            raise ValueError("bad coset representative %r" % text)
        return cls(text[1], int(text[2:]))

    def __str__(self):
        return self.to_string()


def coset_element(sign: str, n: int) -> WeylElement:
    """The alternating word of length n ending in s0 ('+') or s1 ('-')."""
    if sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    if n < 0:
        raise ValueError("index must be nonnegative")
    if n == 0:
        return IDENTITY
    first = (n + 1) % 2 if sign == "+" else n % 2
    return WeylElement(n, first)


def raising_letter(k: int, sign: str) -> int:
    """The generator whose left action sends w_k^sign up to w_{k+1}^sign."""
    return k % 2 if sign == "+" else (k + 1) % 2


def coset_action(i: int, k: int, sign: str) -> int:
    """Index of s_i . w_k^sign in the coset order; w_0 is fixed by the
    stabilizer letter."""
    if i == raising_letter(k, sign):
        return k + 1
    return max(k - 1, 0)


def stabilizer_letter(fundamental: int) -> int:
    """Generator of the stabilizer of the fundamental weight: s1 fixes
    the 0th fundamental weight, s0 the 1st."""
    if fundamental not in (0, 1):
        raise ValueError("fundamental weight index must be 0 or 1")
    return 1 - fundamental


def double_coset_min(left_fundamental: int, z: WeylElement,
                     right_fundamental: int) -> WeylElement:
    """Bruhat minimum of the double coset W_left * z * W_right, where the
    parabolics are the two-element stabilizers of fundamental weights."""
    a = stabilizer_letter(left_fundamental)
    b = stabilizer_letter(right_fundamental)
    candidates = {z, left_multiply(a, z), right_multiply(z, b),
                  right_multiply(left_multiply(a, z), b)}
    best = min(c.length for c in candidates)
    minima = [c for c in candidates if c.length == best]
    assert len(minima) == 1, "double coset minimum must be unique"
    return minima[0]


def double_coset_min_index(lambda_type: int, n: int, m: int) -> int:
    """Closed form for the index l with
    min W_lambda I(tau^{-1}) w_m^+ W_0 = w_l^+, where tau = w_n^+ for
    lambda_type 0 and tau = w_n^- for lambda_type 1."""
    if lambda_type not in (0, 1):
        raise ValueError("lambda_type must be 0 or 1")
    if n < 0 or m < 0:
        raise ValueError("indices must be nonnegative")
    same_parity = (m - n) % 2 == 0
    if lambda_type == 0:
        return max(0, m - n - 1) if same_parity else max(0, m - n)
    return max(0, m - n) if same_parity else max(0, m - n - 1)
