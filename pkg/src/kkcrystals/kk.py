"""Kostant-Kumar submodule crystals and their decomposition tables.

A submodule crystal is named by (lambda_type, p): lambda_type picks which
level-one module the left tensor factor comes from, and w_p^+ (p zero or
odd for lambda_type 0, zero or even for lambda_type 1, so that w_p^+ is
the minimal representative of its double coset) is the extremal-weight
parameter.  Membership of a pair is a rectangle inequality in the
bounding rectangles of the two partitions, equivalently a Bruhat bound on
the associated double-coset element; both routes are implemented and the
tests compare them.

Multiplicities of the irreducible summands come from truncations of the
distinct-odd-parts / distinct-even-parts product generating functions,
with the highest-weight-element count inside the crystal as the
independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import ChargedPartition, enumerate_regular
from .tensor import (CrystalGraph, TensorElement, associated_weyl_element,
                     crystal_graph, is_highest_weight)
from .weights import Weight, fundamental, simple_root
from .weyl import bruhat_leq, coset_element


@dataclass(frozen=True)
class KKSpec:
    """Names one submodule crystal; mu is always the 0th fundamental
    weight, so only the left type and the length parameter vary."""

    lambda_type: int
    p: int

    def __post_init__(self):
        if self.lambda_type not in (0, 1):
            raise ValueError("lambda_type must be 0 or 1")
        if self.p < 0:
            raise ValueError("p must be nonnegative")
        if self.lambda_type == 0 and self.p != 0 and self.p % 2 == 0:
            raise ValueError("for lambda_type 0, p must be 0 or odd")
        if self.lambda_type == 1 and self.p % 2 == 1:
            raise ValueError("for lambda_type 1, p must be 0 or even")


@dataclass(frozen=True)
class MultiplicityTable:
    """Outer multiplicities a_n (and b_n when the second weight family is
    present) indexed by the null-root degree n = 0 .. cutoff."""

    a: tuple[int, ...]
    b: tuple[int, ...] | None
    cutoff: int

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        if self.b is not None:
            object.__setattr__(self, "b", tuple(self.b))
        if len(self.a) != self.cutoff + 1:
            raise ValueError("need one a-entry per degree 0..cutoff")
        if self.b is not None and len(self.b) != self.cutoff + 1:
            raise ValueError("need one b-entry per degree 0..cutoff")
        if any(x < 0 for x in self.a) or (self.b and any(x < 0 for x in self.b)):
            raise ValueError("multiplicities are nonnegative")

    def rows(self) -> list[tuple]:
        if self.b is None:
            return [(n, self.a[n]) for n in range(self.cutoff + 1)]
        return [(n, self.a[n], self.b[n]) for n in range(self.cutoff + 1)]

    def to_tsv(self) -> str:
        header = "n\ta_n" + ("" if self.b is None else "\tb_n")
        lines = [header] + ["\t".join(str(x) for x in row) for row in self.rows()]
        return "\n".join(lines) + "\n"

    def to_json_obj(self) -> dict:
        out = {"cutoff": self.cutoff, "a": list(self.a)}
        if self.b is not None:
            out["b"] = list(self.b)
        return out

    def summands(self, lambda_type: int) -> list[str]:
        """Nonzero irreducible summands as display strings."""
        base = "2Λ0" if lambda_type == 0 else "Λ0 + Λ1"
        out = []
        for n in range(self.cutoff + 1):
            if self.a[n]:
                head = base if n == 0 else "%s - %dδ" % (base, n)
                out.append("V(%s) × %d" % (head, self.a[n]))
        if self.b is not None:
            for n in range(self.cutoff + 1):
                if self.b[n]:
                    head = "2Λ0 - α0" if n == 0 else "2Λ0 - α0 - %dδ" % n
                    out.append("V(%s) × %d" % (head, self.b[n]))
        return out


def in_kk_crystal(spec: KKSpec, t: TensorElement) -> bool:
    """Rectangle-inequality membership test."""
    if t.left.charge != spec.lambda_type:
        raise ValueError("left charge %d does not match lambda_type %d"
                         % (t.left.charge, spec.lambda_type))
    m = t.right.parts[0] if t.right.parts else 0
    n = len(t.left.parts)
    if spec.lambda_type == 0 and spec.p == 0:
        return m <= n
    return m - n <= spec.p + 1


def in_kk_crystal_by_weyl(spec: KKSpec, t: TensorElement) -> bool:
    """Membership via the Bruhat bound on the associated element."""
    if t.left.charge != spec.lambda_type:
        raise ValueError("left charge %d does not match lambda_type %d"
                         % (t.left.charge, spec.lambda_type))
    return bruhat_leq(associated_weyl_element(t), coset_element("+", spec.p))


def dominant_set(lambda_type: int, m: int, max_size: int) -> list[ChargedPartition]:
    """Charge-0 partitions into distinct odd parts (lambda_type 0) or
    distinct even parts (lambda_type 1), largest part at most m, at most
    max_size boxes."""
    if lambda_type not in (0, 1):
        raise ValueError("lambda_type must be 0 or 1")
    wanted = 1 if lambda_type == 0 else 0
    return [cp for cp in enumerate_regular(0, max_size)
            if (not cp.parts or cp.parts[0] <= m)
            and all(p % 2 == wanted for p in cp.parts)]


def weight_of_dominant(lambda_type: int, b: ChargedPartition) -> Weight:
    """Highest weight of the summand attached to a dominant partition."""
    k, rem = divmod(b.size, 2)
    delta = simple_root(0) + simple_root(1)
    if lambda_type == 0:
        top = 2 * fundamental(0) - k * delta
        return top - simple_root(0) if rem else top
    if rem:
        raise ValueError("distinct even parts always have even size")
    return fundamental(0) + fundamental(1) - k * delta


def _truncated_product(factors, max_degree: int) -> list[int]:
    coeffs = [0] * (max_degree + 1)
    coeffs[0] = 1
    for j in factors:
        for d in range(max_degree, j - 1, -1):
            coeffs[d] += coeffs[d - j]
    return coeffs


def _table_from_coeffs(lambda_type: int, coeffs, cutoff: int) -> MultiplicityTable:
    a = tuple(coeffs[2 * k] for k in range(cutoff + 1))
    if lambda_type == 0:
        b = tuple(coeffs[2 * k + 1] for k in range(cutoff + 1))
        return MultiplicityTable(a, b, cutoff)
    return MultiplicityTable(a, None, cutoff)


def decomposition(spec: KKSpec, cutoff: int) -> MultiplicityTable:
    """Generating-function route: expand the product of (1 + x^j) over
    odd (lambda_type 0) or even (lambda_type 1) j up to p."""
    if cutoff < 0:
        raise ValueError("cutoff must be nonnegative")
    max_degree = 2 * cutoff + 1
    parity = 1 if spec.lambda_type == 0 else 0
    factors = [j for j in range(1, spec.p + 1) if j % 2 == parity]
    return _table_from_coeffs(spec.lambda_type,
                              _truncated_product(factors, max_degree), cutoff)


def full_tensor_decomposition(lambda_type: int, cutoff: int) -> MultiplicityTable:
    """The untruncated products: multiplicities for the whole tensor
    product, which the p-truncations reach once p is large enough."""
    if lambda_type not in (0, 1):
        raise ValueError("lambda_type must be 0 or 1")
    if cutoff < 0:
        raise ValueError("cutoff must be nonnegative")
    max_degree = 2 * cutoff + 1
    parity = 1 if lambda_type == 0 else 0
    factors = [j for j in range(1, max_degree + 1) if j % 2 == parity]
    return _table_from_coeffs(lambda_type,
                              _truncated_product(factors, max_degree), cutoff)


def decomposition_via_crystal(spec: KKSpec, cutoff: int) -> MultiplicityTable:
    """Independent oracle: count highest-weight pairs inside the crystal,
    bucketed by the size of the right factor."""
    if cutoff < 0:
        raise ValueError("cutoff must be nonnegative")
    a = [0] * (cutoff + 1)
    b = [0] * (cutoff + 1) if spec.lambda_type == 0 else None
    left = ChargedPartition((), spec.lambda_type)
    for cp in enumerate_regular(0, 2 * cutoff + 1):
        t = TensorElement(left, cp)
        if not in_kk_crystal(spec, t) or not is_highest_weight(t):
            continue
        k, rem = divmod(cp.size, 2)
        if rem:
            assert b is not None, "odd sizes occur only for lambda_type 0"
            b[k] += 1
        else:
            a[k] += 1
    return MultiplicityTable(tuple(a), None if b is None else tuple(b), cutoff)


def kk_crystal_members(spec: KKSpec, max_boxes: int) -> list[TensorElement]:
    """Every member with at most max_boxes boxes in total, in canonical
    order."""
    out = []
    for b1 in enumerate_regular(spec.lambda_type, max_boxes):
        for b2 in enumerate_regular(0, max_boxes - b1.size):
            t = TensorElement(b1, b2)
            if in_kk_crystal(spec, t):
                out.append(t)
    out.sort(key=lambda t: (t.total_boxes, t.left.parts, t.right.parts))
    return out


def kk_nesting_check(lambda_type: int, p_small: int, p_large: int,
                     max_boxes: int) -> bool:
    """True iff the smaller crystal sits inside the larger at the given
    scale."""
    if p_small > p_large:
        raise ValueError("p_small must not exceed p_large")
    small = KKSpec(lambda_type, p_small)
    large = KKSpec(lambda_type, p_large)
    return all(in_kk_crystal(large, t)
               for t in kk_crystal_members(small, max_boxes))


def kk_crystal_graph(spec: KKSpec, max_boxes: int) -> CrystalGraph:
    members = kk_crystal_members(spec, max_boxes)
    graph = crystal_graph(members, max_boxes)
    assert len(graph.vertices) == len(members), \
        "lowering operators escaped the crystal"
    return graph
