"""Constructors: eta/step/delta values, P, g, the R-matrices, the inverse.

The structurally built matrices are cross-validated entry by entry against
independent case-by-case constructions in helpers.py.
"""

from fractions import Fraction

import pytest

from cgybe import (
    LaurentQP,
    TensorOp,
    cg_inverse,
    cg_op,
    cg_twisted_op,
    eta,
    g_op,
    hecke_parameters,
    kron_delta,
    permutation_op,
    step_u,
    q,
)

from helpers import cg_case_display, cg_twisted_case_display, naive_eta


def test_eta_values():
    assert eta(1, 3, 2) == 1
    assert eta(3, 1, 2) == -1
    assert eta(2, 2, 2) == 0
    assert eta(1, 2, 1) == 1
    assert eta(1, 2, 2) == 0


def test_eta_matches_range_membership_oracle():
    for i in range(-4, 5):
        for j in range(-4, 5):
            for k in range(-4, 5):
                assert eta(i, j, k) == naive_eta(i, j, k)


def test_step_values():
    assert step_u(0) == 1
    assert step_u(5) == 1
    assert step_u(-1) == 0


def test_step_determined_by_eta_decomposition():
    # eta(i,j,k) = u(k-i) - u(k-j) forces u(x) = 1 exactly for x >= 0:
    # any other unit step breaks the decomposition somewhere in the window.
    for i in range(-4, 5):
        for j in range(-4, 5):
            for k in range(-4, 5):
                assert eta(i, j, k) == step_u(k - i) - step_u(k - j)


def test_step_reflection_identity():
    for x in range(-6, 7):
        assert step_u(x) + step_u(-x) == 1 + kron_delta(x)


def test_step_addition_identity():
    for x in range(-5, 6):
        for y in range(-5, 6):
            assert step_u(x + y) * (step_u(x) + step_u(y)) == step_u(x) * step_u(
                y
            ) + step_u(x + y)


def test_delta_values():
    assert kron_delta(0) == 1
    assert kron_delta(3) == 0
    assert kron_delta(-3) == 0


def test_permutation_small():
    assert permutation_op(1) == TensorOp.identity(1)
    P = permutation_op(2)
    assert P.apply(1, 2) == {(2, 1): LaurentQP.one()}
    assert P @ P == TensorOp.identity(2)


def test_g_small_cases():
    g2 = g_op(2)
    assert g2.apply(1, 2) == {(1, 2): LaurentQP.one()}
    g3 = g_op(3)
    assert g3.apply(3, 1) == {
        (1, 3): LaurentQP.const(-1),
        (2, 2): LaurentQP.const(-1),
    }
    assert g_op(1).is_zero()


def test_g_conserves_weight():
    for n in (2, 3, 4, 5):
        for (out, inp), coeff in g_op(n).entries.items():
            assert sum(out) == sum(inp)
            assert not coeff.is_zero()


def test_cg_matches_case_display():
    alpha, beta = hecke_parameters()
    for n in (1, 2, 3, 4):
        structural = cg_op(n, alpha, beta)
        display = cg_case_display(n)
        assert structural == display, n


def test_cg_display_examples():
    alpha, beta = hecke_parameters()
    c = cg_op(2, alpha, beta)
    assert c.apply(1, 2) == {(2, 1): q, (1, 2): q - q**-1}
    assert c.apply(2, 1) == {(1, 2): q**-1}
    for n in (1, 2, 3):
        cn = cg_op(n, alpha, beta)
        for i in range(1, n + 1):
            assert cn.apply(i, i) == {(i, i): q}


def test_twisted_matches_case_display():
    for n in (1, 2, 3, 4):
        assert cg_twisted_op(n) == cg_twisted_case_display(n), n


def test_twisted_display_examples():
    c = cg_twisted_op(2)
    assert c.apply(1, 2) == {
        (2, 1): LaurentQP.monomial(1, 1, -1),
        (1, 2): q - q**-1,
    }
    assert c.apply(2, 1) == {(1, 2): LaurentQP.monomial(1, -1, 1)}


def test_twisted_collapses_to_untwisted_at_p_one():
    alpha, beta = hecke_parameters()
    for n in (1, 2, 3, 4):
        collapsed = cg_twisted_op(n).map_coeffs(lambda c: c.subs_p(1))
        assert collapsed == cg_op(n, alpha, beta), n


def test_evaluation_at_one_gives_flip():
    # beta evaluates to 0 and every p-power to 1, for both matrix families.
    alpha, beta = hecke_parameters()
    for n in (2, 3):
        assert cg_op(n, alpha, beta).eval_at(1, 1) == permutation_op(n)
        assert cg_twisted_op(n).eval_at(1, 1) == permutation_op(n)


def test_inverse_hecke_point():
    alpha, beta = hecke_parameters()
    # alpha*(alpha-beta) = q * q^-1 = 1, so the inverse is R - beta*I.
    assert alpha * (alpha - beta) == LaurentQP.one()
    rmat = cg_op(3, alpha, beta)
    inv = cg_inverse(rmat, alpha, beta)
    assert inv == rmat - TensorOp.identity(3).scale(beta)
    assert rmat @ inv == TensorOp.identity(3)
    assert inv @ rmat == TensorOp.identity(3)


def test_inverse_of_flip():
    P = cg_op(3, LaurentQP.one(), LaurentQP.zero())
    assert P == permutation_op(3)
    inv = cg_inverse(P, LaurentQP.one(), LaurentQP.zero())
    assert inv == P


def test_inverse_rejects_equal_parameters():
    rmat = cg_op(2, LaurentQP.one(), LaurentQP.one())
    with pytest.raises(ValueError, match="not invertible"):
        cg_inverse(rmat, LaurentQP.one(), LaurentQP.one())


def test_inverse_rejects_non_unit_scalar():
    alpha = q + q**-1  # alpha*(alpha-beta) has two terms for beta = q
    rmat = cg_op(2, alpha, q)
    with pytest.raises(ValueError, match="not a unit"):
        cg_inverse(rmat, alpha, q)


def test_inverse_for_other_unit_scalars():
    # alpha = 2q, beta chosen so alpha*(alpha-beta) stays a single term.
    alpha = LaurentQP.monomial(2, 1, 0)
    beta = alpha - LaurentQP.monomial(Fraction(1, 2), -1, 0)
    rmat = cg_op(3, alpha, beta)
    inv = cg_inverse(rmat, alpha, beta)
    assert rmat @ inv == TensorOp.identity(3)


def test_constructor_rank_validation():
    with pytest.raises(ValueError):
        cg_op(0, *hecke_parameters())
    with pytest.raises(ValueError):
        cg_twisted_op(0)
