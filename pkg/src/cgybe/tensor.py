"""Sparse linear operators on 2- and 3-fold tensor powers of an n-space.

Basis vectors of V⊗V and V⊗V⊗V are labelled by tuples of 1-based indices
(i, j) or (i, j, k) with each index in 1..n.  An operator stores only its
nonzero matrix entries in a dict keyed by (output tuple, input tuple),
with :class:`~cgybe.laurent.LaurentQP` coefficients.  Sparsity matters:
the operators built downstream have O(n^3) nonzero entries out of n^4,
and their 3-fold lifts would be hopeless dense with symbolic entries.

Operators are immutable values.  Composition, sums and scalar multiples
return new operators; ``f @ g`` is the operator product f∘g (g applied
first).
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from types import MappingProxyType
from typing import Mapping

from .laurent import LaurentQP, rational_to_str

__all__ = ["TensorOp", "lift12", "lift23", "linear_combo", "endo_eq"]

Key = tuple[tuple[int, ...], tuple[int, ...]]


class TensorOp:
    """Sparse endomorphism of the arity-fold tensor power of an n-space."""

    __slots__ = ("n", "arity", "_entries")

    def __init__(
        self,
        n: int,
        arity: int,
        entries: Mapping[Key, LaurentQP | Fraction | int] | None = None,
    ):
        if n < 1:
            raise ValueError(f"rank must be positive, got {n}")
        if arity not in (2, 3):
            raise ValueError(f"arity must be 2 or 3, got {arity}")
        normalized: dict[Key, LaurentQP] = {}
        if entries:
            for (out, inp), coeff in entries.items():
                if not isinstance(coeff, LaurentQP):
                    coeff = LaurentQP.const(coeff)
                if coeff.is_zero():
                    continue
                out = tuple(out)
                inp = tuple(inp)
                if len(out) != arity or len(inp) != arity:
                    raise ValueError(f"entry {out}<-{inp} does not have arity {arity}")
                for idx in (*out, *inp):
                    if not 1 <= idx <= n:
                        raise ValueError(f"index {idx} out of range 1..{n}")
                normalized[(out, inp)] = coeff
        self.n = n
        self.arity = arity
        self._entries = normalized

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls, n: int, arity: int = 2) -> "TensorOp":
        return cls(n, arity)

    @classmethod
    def identity(cls, n: int, arity: int = 2) -> "TensorOp":
        entries = {
            (tpl, tpl): LaurentQP.one()
            for tpl in itertools.product(range(1, n + 1), repeat=arity)
        }
        return cls(n, arity, entries)

    # ------------------------------------------------------------------
    # structure

    @property
    def entries(self) -> Mapping[Key, LaurentQP]:
        return MappingProxyType(self._entries)

    def is_zero(self) -> bool:
        return not self._entries

    def sorted_entries(self) -> list[tuple[Key, LaurentQP]]:
        """Entries sorted by (input tuple, output tuple)."""
        return sorted(self._entries.items(), key=lambda kv: (kv[0][1], kv[0][0]))

    def apply(self, *indices: int) -> dict[tuple[int, ...], LaurentQP]:
        """Image of the basis vector e_{i1}⊗...⊗e_{ik} as output tuple -> coefficient."""
        if len(indices) != self.arity:
            raise ValueError(f"expected {self.arity} indices, got {len(indices)}")
        for idx in indices:
            if not 1 <= idx <= self.n:
                raise ValueError(f"index {idx} out of range 1..{self.n}")
        inp = tuple(indices)
        return {
            out: coeff for (out, key_in), coeff in self._entries.items() if key_in == inp
        }

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorOp):
            return NotImplemented
        return (
            self.n == other.n
            and self.arity == other.arity
            and self._entries == other._entries
        )

    __hash__ = None  # mutable-looking container semantics; equality only

    def __repr__(self) -> str:
        return f"<TensorOp n={self.n} arity={self.arity} entries={len(self._entries)}>"

    # ------------------------------------------------------------------
    # algebra

    def _check_match(self, other: "TensorOp") -> None:
        if self.n != other.n or self.arity != other.arity:
            raise ValueError(
                f"operator mismatch: n={self.n},arity={self.arity} "
                f"vs n={other.n},arity={other.arity}"
            )

    def __add__(self, other: "TensorOp") -> "TensorOp":
        if not isinstance(other, TensorOp):
            return NotImplemented
        self._check_match(other)
        acc: dict[Key, LaurentQP] = dict(self._entries)
        for key, coeff in other._entries.items():
            acc[key] = acc[key] + coeff if key in acc else coeff
        return TensorOp(self.n, self.arity, acc)

    def __sub__(self, other: "TensorOp") -> "TensorOp":
        if not isinstance(other, TensorOp):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "TensorOp":
        return self.scale(-1)

    def scale(self, scalar) -> "TensorOp":
        if not isinstance(scalar, LaurentQP):
            scalar = LaurentQP.const(scalar)
        return TensorOp(
            self.n,
            self.arity,
            {key: scalar * coeff for key, coeff in self._entries.items()},
        )

    def __rmul__(self, scalar) -> "TensorOp":
        if isinstance(scalar, (LaurentQP, Fraction, int)):
            return self.scale(scalar)
        return NotImplemented

    def compose(self, other: "TensorOp") -> "TensorOp":
        """self ∘ other: apply ``other`` first, then ``self``."""
        self._check_match(other)
        by_input: dict[tuple[int, ...], list[tuple[tuple[int, ...], LaurentQP]]] = {}
        for (out, inp), coeff in self._entries.items():
            by_input.setdefault(inp, []).append((out, coeff))
        # Accumulate into one map, canonicalize once at construction; transient
        # zero sums never churn the entry dict.
        acc: dict[Key, LaurentQP] = {}
        for (mid, inp), c_other in other._entries.items():
            for out, c_self in by_input.get(mid, ()):
                key = (out, inp)
                prod = c_self * c_other
                acc[key] = acc[key] + prod if key in acc else prod
        return TensorOp(self.n, self.arity, acc)

    def __matmul__(self, other: "TensorOp") -> "TensorOp":
        if not isinstance(other, TensorOp):
            return NotImplemented
        return self.compose(other)

    def map_coeffs(self, fn) -> "TensorOp":
        """Apply fn to every coefficient, dropping entries that become zero."""
        return TensorOp(
            self.n,
            self.arity,
            {key: fn(coeff) for key, coeff in self._entries.items()},
        )

    def eval_at(self, qval: Fraction | int, pval: Fraction | int) -> "TensorOp":
        """Numeric specialization: every coefficient evaluated at (qval, pval)."""
        return self.map_coeffs(lambda c: LaurentQP.const(c.eval(qval, pval)))

    # ------------------------------------------------------------------
    # export

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "arity": self.arity,
            "entries": [
                {"out": list(out), "in": list(inp), "coeff": coeff.to_json_obj()}
                for (out, inp), coeff in self.sorted_entries()
            ],
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "TensorOp":
        entries = {
            (tuple(e["out"]), tuple(e["in"])): LaurentQP.from_json_obj(e["coeff"])
            for e in obj["entries"]
        }
        return cls(obj["n"], obj["arity"], entries)

    def basis_tuples(self) -> list[tuple[int, ...]]:
        """All basis labels in row-major order: (1,..,1), (1,..,2), ..."""
        return list(itertools.product(range(1, self.n + 1), repeat=self.arity))

    def to_numeric_rows(self) -> list[list[Fraction]]:
        """Dense rational matrix of a numerically evaluated operator.

        Row r is the flattened input tuple (row-major, 1-based), column c the
        flattened output tuple.  Raises if any coefficient still contains q or p.
        """
        basis = self.basis_tuples()
        rows = []
        for inp in basis:
            image = self.apply(*inp)
            rows.append(
                [image.get(out, LaurentQP.zero()).constant_value() for out in basis]
            )
        return rows

    def to_numeric_csv(self) -> str:
        """CSV rendering of :meth:`to_numeric_rows` with num/den cells."""
        lines = [
            ",".join(rational_to_str(cell) for cell in row)
            for row in self.to_numeric_rows()
        ]
        return "\n".join(lines) + "\n"

    def to_latex(self) -> str:
        """Dense pmatrix; rows flatten input tuples, columns output tuples."""
        basis = self.basis_tuples()
        lines = []
        for inp in basis:
            image = self.apply(*inp)
            cells = [image.get(out, LaurentQP.zero()).to_latex() for out in basis]
            lines.append(" & ".join(cells))
        body = " \\\\\n".join(lines)
        return "\\begin{pmatrix}\n" + body + "\n\\end{pmatrix}\n"


def lift12(f: TensorOp) -> TensorOp:
    """f⊗Id: act as f on tensor factors (1,2), identity on factor 3."""
    if f.arity != 2:
        raise ValueError("lift12 expects an arity-2 operator")
    entries = {}
    for (out, inp), coeff in f.entries.items():
        for m in range(1, f.n + 1):
            entries[((*out, m), (*inp, m))] = coeff
    return TensorOp(f.n, 3, entries)


def lift23(f: TensorOp) -> TensorOp:
    """Id⊗f: act as f on tensor factors (2,3), identity on factor 1."""
    if f.arity != 2:
        raise ValueError("lift23 expects an arity-2 operator")
    entries = {}
    for (out, inp), coeff in f.entries.items():
        for m in range(1, f.n + 1):
            entries[((m, *out), (m, *inp))] = coeff
    return TensorOp(f.n, 3, entries)


def linear_combo(a, f: TensorOp, b, g: TensorOp) -> TensorOp:
    """a*f + b*g with LaurentQP (or rational) scalars a, b."""
    f._check_match(g)
    return f.scale(a) + g.scale(b)


def endo_eq(f: TensorOp, g: TensorOp):
    """Exact equality test with a deterministic counterexample.

    Returns (True, None) when f == g, else (False, (input, output, diff))
    where (input, output) is the lexicographically smallest differing entry
    and diff the nonzero coefficient of f - g there.
    """
    f._check_match(g)
    diff = f - g
    if diff.is_zero():
        return True, None
    (out, inp), coeff = min(diff.entries.items(), key=lambda kv: (kv[0][1], kv[0][0]))
    return False, (inp, out, coeff)
