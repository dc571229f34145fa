"""Sparse operators: application, composition, lifts, equality witnesses.

Composition and lifted application are cross-checked against independent
dense and nested-loop oracles from helpers.py.
"""

import random

import pytest

from cgybe import LaurentQP, TensorOp, endo_eq, g_op, lift12, lift23, linear_combo
from cgybe import permutation_op, q

from helpers import (
    dense_compose,
    dl_triple_sum_apply,
    naive_lift12_lift23_apply,
    random_laurent,
    random_op,
)


def test_apply_flip():
    P = permutation_op(2)
    assert P.apply(1, 2) == {(2, 1): LaurentQP.one()}


def test_apply_g_diagonal_is_zero():
    g = g_op(4)
    for i in range(1, 5):
        assert g.apply(i, i) == {}


def test_apply_g_spread():
    g = g_op(3)
    assert g.apply(1, 3) == {(1, 3): LaurentQP.one(), (2, 2): LaurentQP.one()}


def test_apply_index_out_of_range():
    P = permutation_op(2)
    with pytest.raises(ValueError):
        P.apply(0, 1)
    with pytest.raises(ValueError):
        P.apply(1, 3)


def test_compose_flip_squares_to_identity():
    P = permutation_op(3)
    assert P @ P == TensorOp.identity(3)


def test_compose_g_idempotent():
    g = g_op(3)
    assert g @ g == g


def test_compose_g_after_flip():
    g = g_op(3)
    P = permutation_op(3)
    assert g @ P == g.scale(-1)


def test_compose_rank_mismatch():
    with pytest.raises(ValueError):
        permutation_op(2).compose(permutation_op(3))


def test_linear_combo_matches_display():
    P = permutation_op(2)
    g = g_op(2)
    c = linear_combo(q, P, q - q**-1, g)
    assert c.apply(1, 2) == {(2, 1): q, (1, 2): q - q**-1}


def test_linear_combo_degenerate():
    f = random_op(random.Random(5), 3)
    g = random_op(random.Random(6), 3)
    assert linear_combo(1, f, 0, g) == f
    assert linear_combo(1, g, -1, g).is_zero()


def test_lift12_flip():
    L = lift12(permutation_op(3))
    assert L.apply(1, 2, 3) == {(2, 1, 3): LaurentQP.one()}


def test_lift23_flip():
    L = lift23(permutation_op(3))
    assert L.apply(1, 2, 3) == {(1, 3, 2): LaurentQP.one()}


def test_lift_identity_is_identity():
    I2 = TensorOp.identity(3)
    assert lift12(I2) == TensorOp.identity(3, 3)
    assert lift23(I2) == TensorOp.identity(3, 3)


def test_lift12_g_spread():
    L = lift12(g_op(3))
    assert L.apply(1, 3, 2) == {(1, 3, 2): LaurentQP.one(), (2, 2, 2): LaurentQP.one()}


def test_lift23_g_spread():
    L = lift23(g_op(3))
    assert L.apply(2, 1, 3) == {(2, 1, 3): LaurentQP.one(), (2, 2, 2): LaurentQP.one()}


def test_compose3_flip_lifts():
    # f @ g applies g first, so P12 @ P23 sends [1,2,3] -> [1,3,2] -> [3,1,2];
    # the opposite order gives [2,3,1].
    P12 = lift12(permutation_op(3))
    P23 = lift23(permutation_op(3))
    assert P12 @ P12 == TensorOp.identity(3, 3)
    assert (P12 @ P23).apply(1, 2, 3) == {(3, 1, 2): LaurentQP.one()}
    assert (P23 @ P12).apply(1, 2, 3) == {(2, 3, 1): LaurentQP.one()}


def test_triple_sum_expansion_matches_composition():
    # g12 g23 P12 + g12 P23 g12 + P12 g23 g12, entry by entry against the
    # naive double-sum expansion over intermediate indices.
    n = 3
    g = g_op(n)
    P = permutation_op(n)
    g12, g23 = lift12(g), lift23(g)
    p12, p23 = lift12(P), lift23(P)
    dl = g12 @ g23 @ p12 + g12 @ p23 @ g12 + p12 @ g23 @ g12
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                expected = {
                    out: LaurentQP.const(val)
                    for out, val in dl_triple_sum_apply(n, i, j, k).items()
                }
                assert dl.apply(i, j, k) == expected, (i, j, k)


def test_endo_eq_reports_first_difference():
    P = permutation_op(2)
    equal, witness = endo_eq(P, TensorOp.identity(2))
    assert not equal
    inp, out, diff = witness
    assert inp == (1, 2)
    assert out == (1, 2)
    assert diff == LaurentQP.const(-1)


def test_endo_eq_g_idempotent():
    assert endo_eq(g_op(4) @ g_op(4), g_op(4)) == (True, None)


def test_endo_eq_pg_relation():
    n = 3
    g, P = g_op(n), permutation_op(n)
    combo = g + P - TensorOp.identity(n)
    assert endo_eq(P @ g, combo) == (True, None)


def test_compose_matches_dense_oracle():
    rng = random.Random(20240811)
    for n in (2, 3):
        for arity in (2, 3):
            if n == 3 and arity == 3:
                density = 0.1
            else:
                density = 0.4
            f = random_op(rng, n, arity, density)
            g = random_op(rng, n, arity, density)
            assert f @ g == dense_compose(f, g), (n, arity)


def test_lifts_are_algebra_homomorphisms():
    rng = random.Random(7)
    for _ in range(5):
        f = random_op(rng, 3)
        g = random_op(rng, 3)
        for lift in (lift12, lift23):
            assert lift(f @ g) == lift(f) @ lift(g)
            assert lift(f + g) == lift(f) + lift(g)


def test_lift12_lift23_against_nested_loop_oracle():
    rng = random.Random(99)
    f = random_op(rng, 3)
    h = random_op(rng, 3)
    composed = lift12(f) @ lift23(h)
    for i in range(1, 4):
        for j in range(1, 4):
            for k in range(1, 4):
                assert composed.apply(i, j, k) == naive_lift12_lift23_apply(
                    f, h, i, j, k
                ), (i, j, k)


def test_apply_distributes_over_sum():
    rng = random.Random(3)
    f = random_op(rng, 3)
    g = random_op(rng, 3)
    total = f + g
    for i in range(1, 4):
        for j in range(1, 4):
            lhs = total.apply(i, j)
            fa, ga = f.apply(i, j), g.apply(i, j)
            rhs = {}
            for out in set(fa) | set(ga):
                coeff = fa.get(out, LaurentQP.zero()) + ga.get(out, LaurentQP.zero())
                if not coeff.is_zero():
                    rhs[out] = coeff
            assert lhs == rhs


def test_scale_by_laurent_and_int():
    g = g_op(3)
    assert 2 * g == g + g
    assert (q * g).apply(1, 2) == {(1, 2): q}


def test_json_round_trip_and_sorting():
    op = linear_combo(q, permutation_op(2), q - q**-1, g_op(2))
    obj = op.to_json_obj()
    assert obj["n"] == 2 and obj["arity"] == 2
    keys = [(tuple(e["in"]), tuple(e["out"])) for e in obj["entries"]]
    assert keys == sorted(keys)
    assert TensorOp.from_json_obj(obj) == op


def test_entry_validation():
    with pytest.raises(ValueError):
        TensorOp(2, 2, {((1, 3), (1, 1)): 1})
    with pytest.raises(ValueError):
        TensorOp(2, 2, {((1, 1, 1), (1, 1, 1)): 1})
    with pytest.raises(ValueError):
        TensorOp(0, 2)


def test_zero_coefficients_dropped():
    op = TensorOp(2, 2, {((1, 1), (1, 1)): LaurentQP.zero(), ((2, 2), (2, 2)): 0})
    assert op.is_zero()
    rng = random.Random(1)
    x = random_laurent(rng)
    cancel = TensorOp(2, 2, {((1, 2), (2, 1)): x}) - TensorOp(
        2, 2, {((1, 2), (2, 1)): x}
    )
    assert cancel.is_zero()
