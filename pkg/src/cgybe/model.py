"""The concrete operators of the Cremmer-Gervais construction.

Everything here is generated by three integer-valued helper functions and
two basic operators:

* ``eta(i, j, k)`` is the signed indicator of the half-open interval
  between i and j: +1 when i <= k < j, -1 when j <= k < i, 0 otherwise.
  It equals ``step_u(k - i) - step_u(k - j)``.
* ``permutation_op(n)`` is the flip P: e_i⊗e_j -> e_j⊗e_i.
* ``g_op(n)`` acts by g(e_i⊗e_j) = sum_k eta(i,j,k) e_k ⊗ e_{i+j-k}.

The one-parameter R-matrix is alpha*P + beta*g; with alpha = q and
beta = q - q^-1 it is the Cremmer-Gervais solution of the Yang-Baxter
equation at p = 1.  ``cg_twisted_op`` builds the two-parameter family

    c(e_i⊗e_j) = q p^{i-j} e_j⊗e_i
                 + sum_k (q - q^-1) p^{i-k} eta(i,j,k) e_k ⊗ e_{i+j-k}

with both q and p symbolic.  Substituting p = 1 recovers cg_op(n, q,
q - q^-1) exactly.

All constructors are pure and return immutable operators.
"""

from __future__ import annotations

from .laurent import LaurentQP, as_laurent, q
from .tensor import TensorOp, linear_combo

__all__ = [
    "eta",
    "step_u",
    "kron_delta",
    "permutation_op",
    "g_op",
    "cg_op",
    "cg_twisted_op",
    "cg_inverse",
    "hecke_parameters",
]


def eta(i: int, j: int, k: int) -> int:
    """Signed interval indicator on all of Z^3: +1 if i<=k<j, -1 if j<=k<i, else 0."""
    if i <= k < j:
        return 1
    if j <= k < i:
        return -1
    return 0


def step_u(x: int) -> int:
    """Unit step: 1 for x >= 0, 0 for x < 0."""
    return 1 if x >= 0 else 0


def kron_delta(x: int) -> int:
    """Kronecker delta at zero."""
    return 1 if x == 0 else 0


def permutation_op(n: int) -> TensorOp:
    """The flip P(e_i⊗e_j) = e_j⊗e_i."""
    entries = {
        ((j, i), (i, j)): LaurentQP.one()
        for i in range(1, n + 1)
        for j in range(1, n + 1)
    }
    return TensorOp(n, 2, entries)


def g_op(n: int) -> TensorOp:
    """The operator g(e_i⊗e_j) = sum_k eta(i,j,k) e_k ⊗ e_{i+j-k}.

    Output pairs conserve the index sum i+j, so only k strictly between
    min(i,j) (inclusive) and max(i,j) (exclusive) contributes, and the
    second output index i+j-k automatically stays in 1..n.
    """
    entries: dict = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for k in range(min(i, j), max(i, j)):
                entries[((k, i + j - k), (i, j))] = LaurentQP.const(eta(i, j, k))
    return TensorOp(n, 2, entries)


def cg_op(n: int, alpha: LaurentQP, beta: LaurentQP) -> TensorOp:
    """The one-parameter family alpha*P + beta*g on an n-space."""
    if n < 1:
        raise ValueError(f"rank must be positive, got {n}")
    return linear_combo(alpha, permutation_op(n), beta, g_op(n))


def hecke_parameters() -> tuple[LaurentQP, LaurentQP]:
    """(alpha, beta) = (q, q - q^-1), the choice that makes cg_op Hecke."""
    return q, q - q**-1


def cg_twisted_op(n: int) -> TensorOp:
    """The two-parameter Cremmer-Gervais matrix with symbolic q and p.

    c(e_i⊗e_j) = q p^{i-j} e_j⊗e_i
                 + sum_k (q - q^-1) p^{i-k} eta(i,j,k) e_k⊗e_{i+j-k}

    For i > j the k = j term merges with the flip term, turning its
    coefficient into q^-1 p^{i-j}.
    """
    if n < 1:
        raise ValueError(f"rank must be positive, got {n}")
    qdiff = q - q**-1
    acc: dict = {}

    def add(out, inp, coeff):
        key = (out, inp)
        acc[key] = acc[key] + coeff if key in acc else coeff

    for i in range(1, n + 1):
        for j in range(1, n + 1):
            add((j, i), (i, j), q * LaurentQP.monomial(1, 0, i - j))
            for k in range(min(i, j), max(i, j)):
                coeff = qdiff * LaurentQP.monomial(eta(i, j, k), 0, i - k)
                add((k, i + j - k), (i, j), coeff)
    return TensorOp(n, 2, acc)


def cg_inverse(rmat: TensorOp, alpha: LaurentQP, beta: LaurentQP) -> TensorOp:
    """Closed-form inverse of R = alpha*P + beta*g.

    R satisfies R^2 = beta*R + alpha*(alpha-beta)*I, so whenever the scalar
    alpha*(alpha-beta) is a unit of the Laurent ring the inverse is
    (R - beta*I) / (alpha*(alpha-beta)).  The caller must pass the same
    (alpha, beta) the operator was built with.
    """
    alpha, beta = as_laurent(alpha), as_laurent(beta)
    if alpha == beta:
        raise ValueError("not invertible: alpha = beta")
    scalar = alpha * (alpha - beta)
    if not scalar.is_unit():
        raise ValueError(
            f"alpha*(alpha-beta) = {scalar} is not a unit of the Laurent ring; "
            "the closed-form inverse leaves the coefficient ring"
        )
    identity = TensorOp.identity(rmat.n, rmat.arity)
    return (rmat - identity.scale(beta)).scale(scalar.unit_inverse())
