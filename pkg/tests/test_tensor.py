import pytest

from kkcrystals.iso import partition_to_path
from kkcrystals.partitions import ChargedPartition, enumerate_regular
from kkcrystals.paths import LSPath
from kkcrystals.tensor import (TensorElement, associated_weyl_element,
                               associated_weyl_element_by_minima,
                               concat_path_op, crystal_graph,
                               is_highest_weight, tensor_e, tensor_f)
from kkcrystals.weights import simple_root
from kkcrystals.weyl import IDENTITY, bruhat_leq, coset_element


def cp(parts, charge=0):
    return ChargedPartition(tuple(parts), charge)


def pair(left, right, charge=0):
    return TensorElement(cp(left, charge), cp(right))


VACUUM = pair((), ())


def test_validation():
    with pytest.raises(ValueError):
        TensorElement(cp(()), cp((), 1))
    with pytest.raises(ValueError):
        TensorElement(cp((2, 2)), cp(()))


def test_tensor_rule_examples():
    assert tensor_f(0, VACUUM) == pair((1,), ())
    assert tensor_f(1, VACUUM) is None
    assert tensor_e(0, VACUUM) is None and tensor_e(1, VACUUM) is None
    assert tensor_e(0, pair((), (1,))) is None
    assert tensor_f(0, pair((1,), ())) == pair((1,), (1,))


def test_tensor_tie_breaking():
    # phi(left) == epsilon(right): e acts on the left, f on the right
    t = pair((2,), (2,))
    assert tensor_e(1, t) == pair((1,), (2,))
    assert tensor_f(1, t) == pair((2,), (2, 1))


def test_concat_examples():
    straight = LSPath(0, 0, ())
    assert concat_path_op(0, straight, straight, "f") == \
        (LSPath(0, 1, ()), straight)
    assert concat_path_op(1, straight, straight, "f") is None
    assert concat_path_op(0, straight, straight, "e") is None
    assert concat_path_op(1, LSPath(1, 0, ()), straight, "e") is None


def test_tensor_rule_matches_concatenated_paths():
    rights = enumerate_regular(0, 5)
    for charge in (0, 1):
        for b1 in enumerate_regular(charge, 5):
            p1 = partition_to_path(b1)
            for b2 in rights:
                p2 = partition_to_path(b2)
                t = TensorElement(b1, b2)
                for i in (0, 1):
                    for op, rule in (("f", tensor_f), ("e", tensor_e)):
                        via_rule = rule(i, t)
                        via_path = concat_path_op(i, p1, p2, op)
                        if via_rule is None:
                            assert via_path is None, (t, i, op)
                        else:
                            assert via_path == (
                                partition_to_path(via_rule.left),
                                partition_to_path(via_rule.right)), (t, i, op)


def test_weight_additivity():
    for t in (VACUUM, pair((3, 1), (2,)), pair((2,), (4, 1), charge=1)):
        for i in (0, 1):
            down = tensor_f(i, t)
            if down is not None:
                assert down.weight() == t.weight() - simple_root(i)
            up = tensor_e(i, t)
            if up is not None:
                assert up.weight() == t.weight() + simple_root(i)


def test_highest_weight_examples():
    assert is_highest_weight(VACUUM)
    assert is_highest_weight(pair((), (3,)))
    assert not is_highest_weight(pair((), (2,)))
    assert is_highest_weight(pair((), (2,), charge=1))
    assert not is_highest_weight(pair((1,), ()))


def test_highest_weight_classification():
    for charge in (0, 1):
        wanted = 1 if charge == 0 else 0
        for b2 in enumerate_regular(0, 16):
            t = TensorElement(cp((), charge), b2)
            expected = all(p % 2 == wanted for p in b2.parts)
            assert is_highest_weight(t) == expected, t


def test_associated_weyl_element_examples():
    assert associated_weyl_element(VACUUM) == IDENTITY
    assert associated_weyl_element(pair((1,), (4,))) == coset_element("+", 3)
    assert associated_weyl_element(pair((), (2,), charge=1)) == \
        coset_element("+", 2)


def test_associated_weyl_element_routes_agree():
    for charge in (0, 1):
        for b1 in enumerate_regular(charge, 6):
            for b2 in enumerate_regular(0, 6):
                t = TensorElement(b1, b2)
                assert associated_weyl_element(t) == \
                    associated_weyl_element_by_minima(t)


def test_raising_never_increases_the_associated_element():
    for charge in (0, 1):
        for b1 in enumerate_regular(charge, 5):
            for b2 in enumerate_regular(0, 5):
                t = TensorElement(b1, b2)
                for i in (0, 1):
                    up = tensor_e(i, t)
                    if up is not None:
                        assert bruhat_leq(associated_weyl_element(up),
                                          associated_weyl_element(t))


def test_crystal_graph_from_the_vacuum():
    graph = crystal_graph([VACUUM], 1)
    assert [v.display() for v in graph.vertices] == \
        ["(∅ | c=0) ⊗ (∅ | c=0)", "(1 | c=0) ⊗ (∅ | c=0)"]
    assert graph.edges == [(0, 0, 1)]
    assert crystal_graph([], 5).vertices == []


def test_crystal_graph_outputs():
    graph = crystal_graph([VACUUM], 2)
    dot = graph.to_dot()
    assert dot.startswith("digraph") and dot.rstrip().endswith("}")
    assert dot.count("->") == len(graph.edges)
    obj = graph.to_json_obj()
    assert len(obj["vertices"]) == len(graph.vertices)
    assert all(set(e) == {"from", "i", "to"} for e in obj["edges"])
