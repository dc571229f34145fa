"""Exact symbolic verification of the operator-level equations.

Every check forms the difference of the two sides as a sparse operator
and tests it for emptiness after canonicalization.  There is no
tolerance, because there is nothing to tolerate: coefficients are exact
Laurent polynomials and a check passes iff the difference has no entries.
On failure the report carries the lexicographically smallest offending
(input, output) pair together with the nonzero difference coefficient,
so failures are deterministic across runs.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass

from .laurent import LaurentQP, as_laurent
from .model import cg_op, g_op, permutation_op
from .tensor import TensorOp, endo_eq, lift12, lift23

__all__ = [
    "CheckReport",
    "check_ybe",
    "check_compatibility",
    "check_mixed_conditions",
    "check_hecke",
    "check_gp_relations",
    "check_quadratic",
    "reports_to_json",
]

Witness = tuple[tuple[int, ...], tuple[int, ...], LaurentQP]


@dataclass
class CheckReport:
    """Outcome of one operator-level check; passed is True iff witness is None."""

    name: str
    passed: bool
    witness: Witness | None
    elapsed: float

    def to_json_obj(self) -> dict:
        witness = None
        if self.witness is not None:
            inp, out, diff = self.witness
            witness = {"input": list(inp), "output": list(out), "diff": diff.to_json_obj()}
        return {
            "name": self.name,
            "passed": self.passed,
            "witness": witness,
            "elapsed_ms": round(self.elapsed * 1000, 3),
        }


def _report(name: str, sides: list[tuple[TensorOp, TensorOp]], started: float) -> CheckReport:
    """Compare each (lhs, rhs) pair; first failure wins."""
    for lhs, rhs in sides:
        equal, witness = endo_eq(lhs, rhs)
        if not equal:
            return CheckReport(name, False, witness, time.perf_counter() - started)
    return CheckReport(name, True, None, time.perf_counter() - started)


def check_ybe(c: TensorOp, name: str = "ybe") -> CheckReport:
    """c12 c23 c12 = c23 c12 c23 on V⊗V⊗V (rightmost factor acts first)."""
    started = time.perf_counter()
    c12, c23 = lift12(c), lift23(c)
    lhs = c12 @ c23 @ c12
    rhs = c23 @ c12 @ c23
    return _report(name, [(lhs, rhs)], started)


def check_compatibility(g: TensorOp, name: str = "compat") -> CheckReport:
    """The cubic condition making every alpha*P + beta*g a Yang-Baxter solution:

    g12 g23 P12 + g12 P23 g12 + P12 g23 g12
        = g23 g12 P23 + g23 P12 g23 + P23 g12 g23
    """
    started = time.perf_counter()
    perm = permutation_op(g.n)
    g12, g23 = lift12(g), lift23(g)
    p12, p23 = lift12(perm), lift23(perm)
    lhs = g12 @ g23 @ p12 + g12 @ p23 @ g12 + p12 @ g23 @ g12
    rhs = g23 @ g12 @ p23 + g23 @ p12 @ g23 + p23 @ g12 @ g23
    return _report(name, [(lhs, rhs)], started)


def check_mixed_conditions(f: TensorOp, g: TensorOp, name: str = "mixed") -> CheckReport:
    """Both mixed cubic conditions for the pair (f, g).

    Together with f and g each solving the Yang-Baxter equation, these make
    every linear combination alpha*f + beta*g a solution as well:

      f12 g23 g12 + g12 f23 g12 + g12 g23 f12
          = f23 g12 g23 + g23 f12 g23 + g23 g12 f23
    and the same with the roles of f and g exchanged.
    """
    started = time.perf_counter()
    f._check_match(g)
    f12, f23 = lift12(f), lift23(f)
    g12, g23 = lift12(g), lift23(g)

    def one_sided(a12, a23, b12, b23):
        lhs = a12 @ b23 @ b12 + b12 @ a23 @ b12 + b12 @ b23 @ a12
        rhs = a23 @ b12 @ b23 + b23 @ a12 @ b23 + b23 @ b12 @ a23
        return lhs, rhs

    return _report(
        name,
        [one_sided(f12, f23, g12, g23), one_sided(g12, g23, f12, f23)],
        started,
    )


def check_hecke(rmat: TensorOp, qscalar: LaurentQP, name: str = "hecke") -> CheckReport:
    """(R - s*I)(R + s^-1*I) = 0 for the given unit scalar s."""
    qscalar = as_laurent(qscalar)
    if not qscalar.is_unit():
        raise ValueError(f"Hecke scalar must be a unit of the Laurent ring: {qscalar}")
    started = time.perf_counter()
    identity = TensorOp.identity(rmat.n, rmat.arity)
    lhs = (rmat - identity.scale(qscalar)) @ (rmat + identity.scale(qscalar.unit_inverse()))
    return _report(name, [(lhs, TensorOp.zero(rmat.n, rmat.arity))], started)


def check_gp_relations(n: int, name: str = "gp") -> CheckReport:
    """The three relations tying g to the flip: g^2 = g, gP = -g, Pg = g + P - I."""
    started = time.perf_counter()
    g = g_op(n)
    perm = permutation_op(n)
    identity = TensorOp.identity(n)
    sides = [
        (g @ g, g),
        (g @ perm, -g),
        (perm @ g, g + perm - identity),
    ]
    return _report(name, sides, started)


def check_quadratic(
    n: int, alpha: LaurentQP, beta: LaurentQP, name: str = "quadratic"
) -> CheckReport:
    """R^2 = beta*R + alpha*(alpha-beta)*I for R = alpha*P + beta*g."""
    started = time.perf_counter()
    rmat = cg_op(n, alpha, beta)
    identity = TensorOp.identity(n)
    lhs = rmat @ rmat
    rhs = rmat.scale(beta) + identity.scale(alpha * (alpha - beta))
    return _report(name, [(lhs, rhs)], started)


def reports_to_json(reports: list[CheckReport]) -> str:
    """Serialize a batch of reports as one JSON array."""
    return json.dumps([report.to_json_obj() for report in reports], indent=2)
