"""Exhaustive desk-scale verification suites.

Every theorem the library leans on is re-checked here against an
independent brute-force oracle: Bruhat order against the subword
characterisation, signature reduction against deletion of all reducible
substrings, the partition/path bijection against operator commutation,
the tensor rule against concatenated-path operators, and the submodule
membership and multiplicity formulas against direct enumeration.  The
command-line `verify` subcommand and the test suite both drive these.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .iso import partition_to_path, path_to_partition
from .kk import (KKSpec, decomposition, decomposition_via_crystal,
                 full_tensor_decomposition, in_kk_crystal,
                 in_kk_crystal_by_weyl, kk_crystal_members)
from .partitions import (ChargedPartition, Signature, closed_form_signature,
                         e_op, enumerate_regular, epsilon, f_op, phi,
                         reduce_signature, signature, weight_of)
from .paths import LSPath, e_path, f_path, is_lambda_dominant, path_epsilon
from .tensor import (TensorElement, associated_weyl_element,
                     associated_weyl_element_by_minima, concat_path_op,
                     is_highest_weight, tensor_e, tensor_f)
from .weights import simple_root
from .weyl import (WeylElement, bruhat_ideal, bruhat_ideal_min, bruhat_leq,
                   coset_element, double_coset_min, double_coset_min_index,
                   left_multiply)

FAILURE_CAP = 5


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def count(self):
        self.cases += 1

    def fail(self, message: str):
        if len(self.failures) < FAILURE_CAP:
            self.failures.append(message)


# --- brute-force oracles -------------------------------------------------

def subword_leq(u: WeylElement, w: WeylElement) -> bool:
    """Bruhat order via the subword characterisation (each element has a
    unique reduced word here)."""
    uw, ww = u.word(), w.word()
    k = 0
    for g in ww:
        if k < len(uw) and uw[k] == g:
            k += 1
    return k == len(uw)


def _is_reducible(signs: str) -> bool:
    balance = 0
    for s in signs:
        balance += 1 if s == "-" else -1
        if balance < 0:
            return False
    return balance == 0


def formal_reduction(sig: Signature) -> Signature:
    """Delete the union of all reducible substrings, found by exhaustive
    search over substrings."""
    signs = sig.signs
    drop: set[int] = set()
    for a in range(len(signs)):
        for b in range(a + 1, len(signs) + 1):
            if _is_reducible(signs[a:b]):
                drop.update(range(a, b))
    return Signature(tuple(e for k, e in enumerate(sig.entries) if k not in drop))


def all_elements(len_max: int) -> list[WeylElement]:
    out = [WeylElement(0, None)]
    for length in range(1, len_max + 1):
        out.append(WeylElement(length, 0))
        out.append(WeylElement(length, 1))
    return out


# --- suites ---------------------------------------------------------------

def check_bruhat_subword(len_max: int = 8) -> CheckResult:
    res = CheckResult("bruhat closed form vs subword oracle")
    elems = all_elements(len_max)
    for u in elems:
        for w in elems:
            res.count()
            if bruhat_leq(u, w) != subword_leq(u, w):
                res.fail("disagree on (%s, %s)" % (u, w))
    return res


def check_left_multiply_involution(len_max: int = 8) -> CheckResult:
    res = CheckResult("left multiplication is an involution per generator")
    for w in all_elements(len_max):
        for g in (0, 1):
            res.count()
            if left_multiply(g, left_multiply(g, w)) != w:
                res.fail("s%d twice moved %s" % (g, w))
    return res


def check_ideal_min(len_max: int = 6) -> CheckResult:
    res = CheckResult("iterated wedges compute the Bruhat-ideal minimum")
    elems = all_elements(len_max)
    for x in elems:
        ideal = bruhat_ideal(x)
        for y in elems:
            res.count()
            z = bruhat_ideal_min(x, y)
            orbit = [left_multiply_word(u, y) for u in ideal]
            if z not in orbit or any(not bruhat_leq(z, v) for v in orbit):
                res.fail("min I(%s)%s gave %s" % (x, y, z))
    return res


def left_multiply_word(u: WeylElement, y: WeylElement) -> WeylElement:
    for g in reversed(u.word()):
        y = left_multiply(g, y)
    return y


def check_double_coset_index(index_max: int = 12) -> CheckResult:
    res = CheckResult("double-coset minimum closed form vs wedge route")
    for lambda_type in (0, 1):
        sign = "+" if lambda_type == 0 else "-"
        for n in range(index_max + 1):
            tau = coset_element(sign, n)
            for m in range(index_max + 1):
                res.count()
                z = bruhat_ideal_min(tau.inverse(), coset_element("+", m))
                w = double_coset_min(lambda_type, z, 0)
                expected = coset_element(
                    "+", double_coset_min_index(lambda_type, n, m))
                if w != expected:
                    res.fail("type %d, n=%d, m=%d: %s != %s"
                             % (lambda_type, n, m, w, expected))
    return res


def check_signature_closed_form(max_boxes: int = 12) -> CheckResult:
    res = CheckResult("closed-form signatures vs column scan")
    for charge in (0, 1):
        for cp in enumerate_regular(charge, max_boxes):
            if not cp.parts:
                continue
            for i in (0, 1):
                res.count()
                if closed_form_signature(cp, i) != signature(cp, i).signs:
                    res.fail("%s, i=%d" % (cp, i))
    return res


def check_reduction_oracle(max_boxes: int = 12) -> CheckResult:
    res = CheckResult("stack cancellation vs reducible-substring deletion")
    for charge in (0, 1):
        for cp in enumerate_regular(charge, max_boxes):
            for i in (0, 1):
                res.count()
                sig = signature(cp, i)
                reduced = reduce_signature(sig)
                if reduced != formal_reduction(sig):
                    res.fail("%s, i=%d" % (cp, i))
                signs = reduced.signs
                if signs != "+" * signs.count("+") + "-" * signs.count("-"):
                    res.fail("reduced signature %r is not plus-then-minus" % signs)
    return res


def check_operator_inverses(max_boxes: int = 12) -> CheckResult:
    res = CheckResult("raising and lowering operators are partial inverses")
    for charge in (0, 1):
        for cp in enumerate_regular(charge, max_boxes):
            for i in (0, 1):
                res.count()
                down = f_op(cp, i)
                if down is not None and e_op(down, i) != cp:
                    res.fail("e f != id at %s, i=%d" % (cp, i))
                if down is not None and not down.is_regular:
                    res.fail("f broke regularity at %s, i=%d" % (cp, i))
                up = e_op(cp, i)
                if up is not None and f_op(up, i) != cp:
                    res.fail("f e != id at %s, i=%d" % (cp, i))
                if up is not None and not up.is_regular:
                    res.fail("e broke regularity at %s, i=%d" % (cp, i))
                if up is not None and weight_of(up) != weight_of(cp) + simple_root(i):
                    res.fail("weight step wrong at %s, i=%d" % (cp, i))
    return res


def check_string_lengths(max_boxes: int = 10) -> CheckResult:
    res = CheckResult("epsilon and phi count the operator string lengths")
    for charge in (0, 1):
        for cp in enumerate_regular(charge, max_boxes):
            for i in (0, 1):
                res.count()
                k, walker = 0, cp
                while True:
                    walker = e_op(walker, i)
                    if walker is None:
                        break
                    k += 1
                if k != epsilon(cp, i):
                    res.fail("epsilon mismatch at %s, i=%d" % (cp, i))
                k, walker = 0, cp
                while True:
                    walker = f_op(walker, i)
                    if walker is None:
                        break
                    k += 1
                if k != phi(cp, i):
                    res.fail("phi mismatch at %s, i=%d" % (cp, i))
    return res


def check_iso_commutation(max_boxes: int = 12) -> CheckResult:
    res = CheckResult("partition/path bijection commutes with the operators")
    for charge in (0, 1):
        for cp in enumerate_regular(charge, max_boxes):
            path = partition_to_path(cp)
            res.count()
            if path_to_partition(path) != cp:
                res.fail("round trip failed at %s" % cp)
            if path.evaluate(1) != weight_of(cp):
                res.fail("weights differ at %s" % cp)
            m, n = cp.bounding_rect
            if path.initial_direction().index != m or path.final_direction().index != n:
                res.fail("directions miss the bounding rectangle at %s" % cp)
            for i in (0, 1):
                down_cp = f_op(cp, i)
                down_path = f_path(path, i)
                if (down_cp is None) != (down_path is None):
                    res.fail("f kill mismatch at %s, i=%d" % (cp, i))
                elif down_cp is not None and partition_to_path(down_cp) != down_path:
                    res.fail("f images differ at %s, i=%d" % (cp, i))
                if down_path is not None and e_path(down_path, i) != path:
                    res.fail("e f != id on paths at %s, i=%d" % (cp, i))
                up_cp = e_op(cp, i)
                up_path = e_path(path, i)
                if (up_cp is None) != (up_path is None):
                    res.fail("e kill mismatch at %s, i=%d" % (cp, i))
                elif up_cp is not None and partition_to_path(up_cp) != up_path:
                    res.fail("e images differ at %s, i=%d" % (cp, i))
                if up_path is not None and f_path(up_path, i) != path:
                    res.fail("f e != id on paths at %s, i=%d" % (cp, i))
    return res


def check_path_bijectivity(m_max: int = 12) -> CheckResult:
    res = CheckResult("every canonical path comes from exactly one partition")
    for shape in (0, 1):
        for n in range(m_max + 1):
            for steps in _box_partitions(n, m_max - n):
                res.count()
                path = LSPath(shape, n, steps)
                if partition_to_path(path_to_partition(path)) != path:
                    res.fail("round trip failed at %s" % path)
    return res


def _box_partitions(max_part: int, max_len: int):
    """Weakly decreasing tuples with at most max_len entries in
    1..max_part (possibly empty)."""
    def rec(bound, remaining):
        yield ()
        if remaining == 0:
            return
        for first in range(bound, 0, -1):
            for rest in rec(first, remaining - 1):
                yield (first,) + rest
    yield from rec(max_part, max_len)


def check_dominance(max_boxes: int = 12) -> CheckResult:
    res = CheckResult("path dominance matches the raising-operator test")
    for cp in enumerate_regular(0, max_boxes):
        path = partition_to_path(cp)
        for j in (0, 1):
            res.count()
            by_path = is_lambda_dominant(path, j)
            by_ops = all(epsilon(cp, i) <= (1 if i == j else 0) for i in (0, 1))
            wanted = 1 if j == 0 else 0
            by_parts = all(p % 2 == wanted for p in cp.parts)
            if by_path != by_ops or by_path != by_parts:
                res.fail("%s, fundamental %d" % (cp, j))
    return res


def check_path_integrality(max_boxes: int = 12) -> CheckResult:
    res = CheckResult("pairing profiles have integer local minima")
    for charge in (0, 1):
        for cp in enumerate_regular(charge, max_boxes):
            path = partition_to_path(cp)
            for i in (0, 1):
                res.count()
                values = [v for _, v in _profile(path, i)]
                for k in range(1, len(values) - 1):
                    if values[k] < values[k - 1] and values[k] <= values[k + 1]:
                        if values[k].denominator != 1:
                            res.fail("%s, i=%d" % (cp, i))
    return res


def _profile(path, i):
    from .paths import h_function
    return h_function(path, i).points


def check_tensor_convention(side_boxes: int = 6) -> CheckResult:
    res = CheckResult("tensor rule vs concatenated-path operators")
    rights = enumerate_regular(0, side_boxes)
    for charge in (0, 1):
        lefts = enumerate_regular(charge, side_boxes)
        for b1 in lefts:
            p1 = partition_to_path(b1)
            for b2 in rights:
                p2 = partition_to_path(b2)
                t = TensorElement(b1, b2)
                for i in (0, 1):
                    for op, rule in (("f", tensor_f), ("e", tensor_e)):
                        res.count()
                        via_rule = rule(i, t)
                        via_paths = concat_path_op(i, p1, p2, op)
                        if (via_rule is None) != (via_paths is None):
                            res.fail("%s kill mismatch at %s, i=%d" % (op, t, i))
                        elif via_rule is not None:
                            expected = (partition_to_path(via_rule.left),
                                        partition_to_path(via_rule.right))
                            if via_paths != expected:
                                res.fail("%s images differ at %s, i=%d" % (op, t, i))
    return res


def check_tensor_structure(max_boxes: int = 10) -> CheckResult:
    res = CheckResult("tensor weights, highest-weight law, monotone descent")
    for charge in (0, 1):
        wanted = 1 if charge == 0 else 0
        for b1 in enumerate_regular(charge, max_boxes):
            for b2 in enumerate_regular(0, max_boxes - b1.size):
                t = TensorElement(b1, b2)
                res.count()
                classified = (not b1.parts
                              and all(p % 2 == wanted for p in b2.parts))
                if is_highest_weight(t) != classified:
                    res.fail("highest-weight law fails at %s" % t)
                for i in (0, 1):
                    down = tensor_f(i, t)
                    if down is not None:
                        if down.weight() != t.weight() - simple_root(i):
                            res.fail("f weight step wrong at %s, i=%d" % (t, i))
                        if tensor_e(i, down) != t:
                            res.fail("e f != id at %s, i=%d" % (t, i))
                    up = tensor_e(i, t)
                    if up is not None and not bruhat_leq(
                            associated_weyl_element(up),
                            associated_weyl_element(t)):
                        res.fail("raising increased the associated element at %s"
                                 % (t,))
                if associated_weyl_element(t) != associated_weyl_element_by_minima(t):
                    res.fail("associated element routes differ at %s" % t)
    return res


def _valid_p_values(lambda_type: int, p_max: int) -> list[int]:
    if lambda_type == 0:
        return [0] + [p for p in range(1, p_max + 1, 2)]
    return [p for p in range(0, p_max + 1, 2)]


def check_kk_invariance(p_max: int = 5, max_boxes: int = 10) -> CheckResult:
    res = CheckResult("submodule crystals are stable under the operators")
    for lambda_type in (0, 1):
        for p in _valid_p_values(lambda_type, p_max):
            spec = KKSpec(lambda_type, p)
            for t in kk_crystal_members(spec, max_boxes):
                for i in (0, 1):
                    res.count()
                    for image in (tensor_f(i, t), tensor_e(i, t)):
                        if image is not None and not in_kk_crystal(spec, image):
                            res.fail("escaped K(%d, %d) at %s, i=%d"
                                     % (lambda_type, p, t, i))
    return res


def check_kk_membership_routes(p_max: int = 5, max_boxes: int = 10) -> CheckResult:
    res = CheckResult("rectangle membership vs Bruhat-bound membership")
    for lambda_type in (0, 1):
        for p in _valid_p_values(lambda_type, p_max):
            spec = KKSpec(lambda_type, p)
            for b1 in enumerate_regular(lambda_type, max_boxes):
                for b2 in enumerate_regular(0, max_boxes - b1.size):
                    t = TensorElement(b1, b2)
                    res.count()
                    if in_kk_crystal(spec, t) != in_kk_crystal_by_weyl(spec, t):
                        res.fail("routes disagree for K(%d, %d) at %s"
                                 % (lambda_type, p, t))
    return res


def check_kk_decomposition(p_max: int = 9, cutoff: int = 6) -> CheckResult:
    res = CheckResult("generating-function tables vs highest-weight counts")
    for lambda_type in (0, 1):
        for p in _valid_p_values(lambda_type, p_max):
            spec = KKSpec(lambda_type, p)
            res.count()
            if decomposition(spec, cutoff) != decomposition_via_crystal(spec, cutoff):
                res.fail("tables differ for K(%d, %d)" % (lambda_type, p))
    return res


def check_kk_stabilization(cutoff: int = 6) -> CheckResult:
    res = CheckResult("large-p tables match the full tensor product")
    for lambda_type in (0, 1):
        res.count()
        p = 2 * cutoff + 1 if lambda_type == 0 else 2 * cutoff + 2
        if decomposition(KKSpec(lambda_type, p), cutoff) \
                != full_tensor_decomposition(lambda_type, cutoff):
            res.fail("stabilization fails for lambda_type %d" % lambda_type)
    return res


def check_kk_monotone(p_max: int = 9, cutoff: int = 6) -> CheckResult:
    res = CheckResult("tables grow entrywise with p")
    for lambda_type in (0, 1):
        ps = _valid_p_values(lambda_type, p_max)
        for small, large in zip(ps, ps[1:]):
            res.count()
            ts = decomposition(KKSpec(lambda_type, small), cutoff)
            tl = decomposition(KKSpec(lambda_type, large), cutoff)
            if any(x > y for x, y in zip(ts.a, tl.a)):
                res.fail("a-entries drop from p=%d to p=%d" % (small, large))
            if ts.b is not None and any(x > y for x, y in zip(ts.b, tl.b)):
                res.fail("b-entries drop from p=%d to p=%d" % (small, large))
    return res


def suite_bruhat(len_max: int = 8, index_max: int = 12, **_) -> list[CheckResult]:
    return [check_bruhat_subword(len_max),
            check_left_multiply_involution(len_max),
            check_ideal_min(min(len_max, 6)),
            check_double_coset_index(index_max)]


def suite_signatures(max_boxes: int = 12, **_) -> list[CheckResult]:
    return [check_signature_closed_form(max_boxes),
            check_reduction_oracle(max_boxes),
            check_operator_inverses(max_boxes),
            check_string_lengths(min(max_boxes, 10))]


def suite_iso(max_boxes: int = 12, **_) -> list[CheckResult]:
    return [check_iso_commutation(max_boxes),
            check_path_bijectivity(max_boxes),
            check_dominance(max_boxes),
            check_path_integrality(max_boxes)]


def suite_tensor(side_boxes: int = 6, max_boxes: int = 10, **_) -> list[CheckResult]:
    return [check_tensor_convention(side_boxes),
            check_tensor_structure(max_boxes)]


def suite_kk(p_max: int = 5, max_boxes: int = 10, cutoff: int = 6, **_) \
        -> list[CheckResult]:
    return [check_kk_invariance(p_max, max_boxes),
            check_kk_membership_routes(p_max, max_boxes),
            check_kk_decomposition(max(p_max, 2), cutoff),
            check_kk_stabilization(cutoff),
            check_kk_monotone(max(p_max, 2), cutoff)]


SUITES = {
    "bruhat": suite_bruhat,
    "signatures": suite_signatures,
    "iso": suite_iso,
    "tensor": suite_tensor,
    "kk": suite_kk,
}


def run_suites(names, **sizes) -> list[CheckResult]:
    results = []
    for name in names:
        results.extend(SUITES[name](**sizes))
    return results
