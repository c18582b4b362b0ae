"""Tensor products of the level-one crystals on pairs of charged
partitions, the concatenated-path oracle, and the double-coset Weyl
element attached to a pair.

The tensor rule is: f_i acts on the left factor iff phi_i(left) is
strictly larger than epsilon_i(right), and e_i acts on the left factor
iff phi_i(left) >= epsilon_i(right); otherwise they act on the right
factor, and a kill on the chosen factor kills the pair.  The rule is not
an axiom here: concat_path_op applies the path root operator to the
concatenation of the two LS paths and re-splits, and the test suite
checks the two agree on every pair at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import weights
from .partitions import ChargedPartition, e_op, epsilon, f_op, phi, weight_of
from .paths import LSPath, direction_weight
from .weights import Weight, pair_coroot
from .weyl import (WeylElement, bruhat_ideal_min, coset_element,
                   double_coset_min, double_coset_min_index)


@dataclass(frozen=True)
class TensorElement:
    """An ordered pair of regular charged partitions; the left charge
    selects the level-one crystal of the left factor, the right factor
    always has charge 0."""

    left: ChargedPartition
    right: ChargedPartition

    def __post_init__(self):
        if self.right.charge != 0:
            raise ValueError("right factor must have charge 0")
        if not (self.left.is_regular and self.right.is_regular):
            raise ValueError("both factors must be regular")

    @property
    def total_boxes(self) -> int:
        return self.left.size + self.right.size

    def weight(self) -> Weight:
        return weight_of(self.left) + weight_of(self.right)

    def display(self) -> str:
        return "%s ⊗ %s" % (self.left.display(), self.right.display())

    def __str__(self):
        return self.display()


def tensor_f(i: int, t: TensorElement) -> TensorElement | None:
    if phi(t.left, i) > epsilon(t.right, i):
        new = f_op(t.left, i)
        return None if new is None else TensorElement(new, t.right)
    new = f_op(t.right, i)
    return None if new is None else TensorElement(t.left, new)


def tensor_e(i: int, t: TensorElement) -> TensorElement | None:
    if phi(t.left, i) >= epsilon(t.right, i):
        new = e_op(t.left, i)
        return None if new is None else TensorElement(new, t.right)
    new = e_op(t.right, i)
    return None if new is None else TensorElement(t.left, new)


def is_highest_weight(t: TensorElement) -> bool:
    return tensor_e(0, t) is None and tensor_e(1, t) is None


def associated_weyl_element(t: TensorElement) -> WeylElement:
    """The minimal double-coset element attached to the pair, in closed
    form from the bounding rectangles: governs submodule membership."""
    n = len(t.left.parts)
    m = t.right.parts[0] if t.right.parts else 0
    return coset_element("+", double_coset_min_index(t.left.charge, n, m))


def associated_weyl_element_by_minima(t: TensorElement) -> WeylElement:
    """Same element computed the long way: iterated wedges over the
    inverse of the final direction of the left path, applied to the
    initial direction of the right path, then the double-coset minimum."""
    n = len(t.left.parts)
    m = t.right.parts[0] if t.right.parts else 0
    tau = coset_element("+" if t.left.charge == 0 else "-", n)
    z = bruhat_ideal_min(tau.inverse(), coset_element("+", m))
    return double_coset_min(t.left.charge, z, 0)


# --- concatenated-path oracle ------------------------------------------

def _cut_at(pieces, tcut: Fraction):
    out = []
    t = Fraction(0)
    for v, d in pieces:
        if t < tcut < t + d:
            out.append((v, tcut - t))
            out.append((v, t + d - tcut))
        else:
            out.append((v, d))
        t += d
    return out


def _apply_root_operator(pieces, i: int, op: str):
    """Generic path root operator on a (velocity, duration) list: reflect
    the window between the extreme attainment of the minimum of the
    pairing profile and its first return to minimum + 1.  Valid for
    integral paths (all local minima of the profile at integers), which
    covers LS paths and their concatenations."""
    times = [Fraction(0)]
    H = [Fraction(0)]
    for v, d in pieces:
        times.append(times[-1] + d)
        H.append(H[-1] + pair_coroot(v, i) * d)
    Q = min(H)
    assert Q.denominator == 1, "pairing minimum must be an integer"
    if op == "f":
        if H[-1] - Q < 1:
            return None
        k = max(j for j in range(len(H)) if H[j] == Q)
        lo = times[k]
        hi = None
        for j in range(k + 1, len(H)):
            if H[j] >= Q + 1:
                hi = times[j - 1] + ((Q + 1 - H[j - 1])
                                     * (times[j] - times[j - 1]) / (H[j] - H[j - 1]))
                break
    elif op == "e":
        if Q >= 0:
            return None
        k = min(j for j in range(len(H)) if H[j] == Q)
        hi = times[k]
        lo = None
        for j in range(k - 1, -1, -1):
            if H[j] >= Q + 1:
                lo = times[j] + ((Q + 1 - H[j])
                                 * (times[j + 1] - times[j]) / (H[j + 1] - H[j]))
                break
    else:
        raise ValueError("op must be 'f' or 'e'")
    assert lo is not None and hi is not None
    pieces = _cut_at(_cut_at(pieces, lo), hi)
    out = []
    t = Fraction(0)
    for v, d in pieces:
        inside = lo <= t and t + d <= hi
        out.append((weights.reflect(i, v), d) if inside else (v, d))
        t += d
    return out


_INDEX_CACHE: dict[int, dict[Weight, int]] = {0: {}, 1: {}}


def _direction_index(shape: int, v: Weight, limit: int = 4096) -> int:
    cache = _INDEX_CACHE[shape]
    if v in cache:
        return cache[v]
    k = len(cache)
    while k <= limit:
        w = direction_weight(shape, k)
        cache[w] = k
        if w == v:
            return k
        k += 1
    raise ValueError("%r is not a direction weight for shape %d" % (v, shape))


def _lspath_from_pieces(shape: int, pieces) -> LSPath:
    merged: list[tuple[Weight, Fraction]] = []
    for v, d in pieces:
        if merged and merged[-1][0] == v:
            merged[-1] = (v, merged[-1][1] + d)
        else:
            merged.append((v, d))
    if sum(d for _, d in merged) != 1:
        raise ValueError("piece durations must total 1")
    indices = [_direction_index(shape, v) for v, _ in merged]
    times = [Fraction(0)]
    for _, d in merged:
        times.append(times[-1] + d)
    return LSPath.from_chain(shape, indices, times)


def concat_path_op(i: int, left_path: LSPath, right_path: LSPath,
                   op: str) -> tuple[LSPath, LSPath] | None:
    """Apply a root operator to the concatenation of two LS paths and
    split the result back into a pair of LS paths of the same shapes.
    The operator is reparametrisation-invariant, so the concatenation is
    taken piecewise with the junction at accumulated duration 1."""
    pieces = left_path.pieces() + right_path.pieces()
    result = _apply_root_operator(pieces, i, op)
    if result is None:
        return None
    result = _cut_at(result, Fraction(1))
    first, second = [], []
    t = Fraction(0)
    for v, d in result:
        (first if t < 1 else second).append((v, d))
        t += d
    try:
        return (_lspath_from_pieces(left_path.shape, first),
                _lspath_from_pieces(right_path.shape, second))
    except ValueError as exc:
        raise AssertionError(
            "root operator left the set of path concatenations: %s" % exc)


# --- crystal graphs -----------------------------------------------------

def _canonical_key(t: TensorElement):
    return (t.total_boxes, t.left.parts, t.left.charge, t.right.parts)


@dataclass
class CrystalGraph:
    vertices: list[TensorElement]
    edges: list[tuple[int, int, int]]  # (source, label, target)

    def to_dot(self, name: str = "crystal") -> str:
        lines = ["digraph %s {" % name]
        for k, v in enumerate(self.vertices):
            lines.append('  v%d [label="%s\\n%s"];'
                         % (k, v.display(), v.weight().display()))
        for a, i, b in self.edges:
            lines.append('  v%d -> v%d [label="%d"];' % (a, b, i))
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json_obj(self) -> dict:
        return {
            "vertices": [{"id": k,
                          "left": v.left.to_json(),
                          "right": v.right.to_json(),
                          "weight": v.weight().to_json()}
                         for k, v in enumerate(self.vertices)],
            "edges": [{"from": a, "i": i, "to": b} for a, i, b in self.edges],
        }


def crystal_graph(seeds, max_boxes: int) -> CrystalGraph:
    """Closure of the seeds under the lowering operators, truncated at the
    box bound; every edge is validated against the raising operator."""
    verts = {s for s in seeds if s.total_boxes <= max_boxes}
    frontier = list(verts)
    while frontier:
        fresh = []
        for v in frontier:
            for i in (0, 1):
                w = tensor_f(i, v)
                if w is not None and w.total_boxes <= max_boxes and w not in verts:
                    verts.add(w)
                    fresh.append(w)
        frontier = fresh
    vertices = sorted(verts, key=_canonical_key)
    index = {v: k for k, v in enumerate(vertices)}
    edges = []
    for v in vertices:
        for i in (0, 1):
            w = tensor_f(i, v)
            if w is not None and w in index:
                assert tensor_e(i, w) == v, "edge fails the raising check"
                edges.append((index[v], i, index[w]))
    return CrystalGraph(vertices, edges)
