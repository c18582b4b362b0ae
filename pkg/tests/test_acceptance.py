"""Acceptance suite: each test runs one headline guarantee at full desk
scale with exact (zero-tolerance) comparisons and prints a pass line."""

from itertools import combinations

from kkcrystals.iso import partition_to_path
from kkcrystals.kk import (KKSpec, decomposition, decomposition_via_crystal,
                           full_tensor_decomposition, in_kk_crystal,
                           in_kk_crystal_by_weyl, kk_crystal_members)
from kkcrystals.partitions import (ChargedPartition, closed_form_signature,
                                   e_op, enumerate_regular, f_op,
                                   reduce_signature, signature, weight_of)
from kkcrystals.paths import e_path, f_path
from kkcrystals.tensor import TensorElement, concat_path_op, tensor_e, tensor_f
from kkcrystals.verify import (check_bruhat_subword, check_double_coset_index,
                               check_iso_commutation,
                               check_signature_closed_form,
                               check_tensor_convention)
from kkcrystals.weights import ALPHA0, ALPHA1, LAMBDA0


def _report(number, text):
    print("ACCEPTANCE %d PASS: %s" % (number, text))


def test_criterion_1_crystal_isomorphism():
    result = check_iso_commutation(max_boxes=18)
    assert result.ok, result.failures
    _report(1, "bijection commutes with e and f on %d checks (<= 18 boxes)"
            % result.cases)


def test_criterion_2_running_example_fidelity():
    b = ChargedPartition((8, 6, 3, 1), 0)
    assert weight_of(b) == LAMBDA0 - 9 * ALPHA0 - 9 * ALPHA1
    sig0 = signature(b, 0)
    assert sig0.signs == "++--+" and sig0.columns == (1, 2, 3, 6, 9)
    sig1 = signature(b, 1)
    assert sig1.signs == "-++-" and sig1.columns == (1, 4, 7, 8)
    assert reduce_signature(sig0).signs == "++-"
    assert reduce_signature(sig1).signs == "+-"
    assert e_op(b, 0) == ChargedPartition((8, 6, 2, 1), 0)   # third column
    assert e_op(b, 1) == ChargedPartition((7, 6, 3, 1), 0)   # eighth column
    assert f_op(b, 0) == ChargedPartition((8, 6, 3, 2), 0)   # second column
    # the surviving plus of the reduced 1-signature is in column seven
    assert f_op(b, 1) == ChargedPartition((8, 7, 3, 1), 0)
    _report(2, "(8,6,3,1 | c=0) signatures, weight and operator actions")


def test_criterion_3_closed_form_signatures():
    result = check_signature_closed_form(max_boxes=18)
    assert result.ok, result.failures
    _report(3, "closed-form signatures match scanning on %d checks"
            % result.cases)


def test_criterion_4_double_coset_minima():
    result = check_double_coset_index(index_max=12)
    assert result.ok, result.failures
    _report(4, "closed-form double-coset minima match the wedge route "
               "on %d index pairs" % result.cases)


def test_criterion_5_kk_decomposition():
    checked = 0
    for lambda_type, ps in ((0, (0, 1, 3, 5, 7)), (1, (0, 2, 4, 6))):
        for p in ps:
            spec = KKSpec(lambda_type, p)
            assert decomposition(spec, 8) == decomposition_via_crystal(spec, 8), spec
            checked += 1
    _report(5, "generating functions equal crystal counts for %d crystals "
               "at cutoff 8" % checked)


def _distinct_part_counts(max_total, parity):
    values = [j for j in range(1, max_total + 1) if j % 2 == parity]
    counts = [0] * (max_total + 1)
    for size in range(len(values) + 1):
        for combo in combinations(values, size):
            total = sum(combo)
            if total <= max_total:
                counts[total] += 1
    return counts


def test_criterion_6_tensor_stabilization():
    coeffs_odd = _distinct_part_counts(17, 1)
    table = full_tensor_decomposition(0, 8)
    assert table.a == tuple(coeffs_odd[2 * k] for k in range(9))
    assert table.b == tuple(coeffs_odd[2 * k + 1] for k in range(9))
    assert decomposition(KKSpec(0, 17), 8) == table

    coeffs_even = _distinct_part_counts(17, 0)
    table = full_tensor_decomposition(1, 8)
    assert table.a == tuple(coeffs_even[2 * k] for k in range(9))
    assert decomposition(KKSpec(1, 16), 8) == table
    _report(6, "full tensor multiplicities match subset counts up to x^17 "
               "and the large-p truncations")


def test_criterion_7_kk_crystal_invariance():
    checked = 0
    for lambda_type, ps in ((0, (0, 1, 3, 5, 7)), (1, (0, 2, 4, 6))):
        for p in ps:
            spec = KKSpec(lambda_type, p)
            for t in kk_crystal_members(spec, 14):
                for i in (0, 1):
                    for image in (tensor_f(i, t), tensor_e(i, t)):
                        checked += 1
                        assert image is None or in_kk_crystal(spec, image), \
                            (spec, t, i)
            for b1 in enumerate_regular(lambda_type, 14):
                for b2 in enumerate_regular(0, 14 - b1.size):
                    t = TensorElement(b1, b2)
                    assert in_kk_crystal(spec, t) == \
                        in_kk_crystal_by_weyl(spec, t), (spec, t)
    _report(7, "operators stay inside each crystal (%d images) and both "
               "membership routes agree (<= 14 boxes)" % checked)


def test_criterion_8_tensor_convention_oracle():
    result = check_tensor_convention(side_boxes=8)
    assert result.ok, result.failures
    _report(8, "tensor rule equals concatenated-path operators on %d checks "
               "(<= 8 boxes per side)" % result.cases)


def test_criterion_9_bruhat_closed_form():
    result = check_bruhat_subword(len_max=8)
    assert result.ok, result.failures
    _report(9, "length comparison equals the subword oracle on %d pairs"
            % result.cases)
