"""Exhaustive integer-window checks of the scalar identities behind the
operator-level proofs.

Each identity quantifies over all integers; the oracle checks it on every
tuple of a finite hyper-rectangle window, wide enough to exercise every
sign case of the differences involved.  All arithmetic is plain machine
integers (eta, the unit step and the delta are integer-valued), so a
check is exact and a single counterexample refutes the implementation.

Sums over an unbounded index are truncated to the support interval
[min, max) of the relevant eta factor; every summation helper takes a
``pad`` argument that widens the range on both sides so the truncation
itself can be tested: padding must never change any sum.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator

from .model import eta, kron_delta, step_u

__all__ = [
    "IntWindow",
    "OracleReport",
    "zeta",
    "ybe_coeff_rhs",
    "eta_interval_sum",
    "eta_convolution",
    "g_idem_sum",
    "check_compat_coeffs",
    "check_step_identity",
    "check_eta_identities",
    "check_eta_convolution",
    "check_zeta_closed_form",
    "check_ybe_coeffs",
    "check_zeta_symmetry",
    "check_g_idempotent_identity",
    "run_oracles",
    "oracle_names",
    "DEFAULT_LO",
    "DEFAULT_HI",
]

DEFAULT_LO = -3
DEFAULT_HI = 4


@dataclass(frozen=True)
class IntWindow:
    """All integer tuples in [lo, hi]^arity, enumerated lexicographically."""

    lo: int
    hi: int
    arity: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty window: lo={self.lo} > hi={self.hi}")
        if self.arity < 1:
            raise ValueError(f"arity must be positive, got {self.arity}")

    def tuples(self) -> Iterator[tuple[int, ...]]:
        return itertools.product(range(self.lo, self.hi + 1), repeat=self.arity)

    def to_json_obj(self) -> dict:
        return {"lo": self.lo, "hi": self.hi, "arity": self.arity}


@dataclass
class OracleReport:
    """Outcome of one window check; passed is True iff counterexample is None."""

    name: str
    window: IntWindow
    passed: bool
    counterexample: tuple[int, ...] | None

    def to_json_obj(self) -> dict:
        return {
            "name": self.name,
            "window": self.window.to_json_obj(),
            "passed": self.passed,
            "counterexample": list(self.counterexample) if self.counterexample else None,
        }


def _scan(name: str, window: IntWindow, holds: Callable[..., bool]) -> OracleReport:
    for tpl in window.tuples():
        if not holds(*tpl):
            return OracleReport(name, window, False, tpl)
    return OracleReport(name, window, True, None)


def _support(x: int, y: int, pad: int) -> range:
    """Summation range covering the support of eta(x, y, .), padded both sides."""
    return range(min(x, y) - pad, max(x, y) + pad)


# ----------------------------------------------------------------------
# summation helpers (exposed so truncation soundness is testable)


def zeta(i: int, j: int, k: int, c: int, h: int, pad: int = 0) -> int:
    """sum_a eta(j,k,a) * eta(i,a,c) * eta(i+a-c, j+k-a, h)."""
    return sum(
        eta(j, k, a) * eta(i, a, c) * eta(i + a - c, j + k - a, h)
        for a in _support(j, k, pad)
    )


def ybe_coeff_rhs(i: int, j: int, k: int, c: int, h: int, pad: int = 0) -> int:
    """sum_s eta(i,j,s) * eta(i+j-s, k, h+c-s) * eta(s, h+c-s, c)."""
    return sum(
        eta(i, j, s) * eta(i + j - s, k, h + c - s) * eta(s, h + c - s, c)
        for s in _support(i, j, pad)
    )


def eta_interval_sum(b: int, c: int, pad: int = 0) -> int:
    """sum_a eta(b, c, a); equals c - b."""
    return sum(eta(b, c, a) for a in _support(b, c, pad))


def eta_convolution(t: int, s: int, b: int, d: int, h: int, pad: int = 0) -> int:
    """sum_a eta(t, s, a) * eta(b+a, d-a, h)."""
    return sum(eta(t, s, a) * eta(b + a, d - a, h) for a in _support(t, s, pad))


def g_idem_sum(i: int, j: int, l: int, pad: int = 0) -> int:
    """sum_k eta(i,j,k) * eta(k, i+j-k, l); equals eta(i,j,l)."""
    return sum(eta(i, j, k) * eta(k, i + j - k, l) for k in _support(i, j, pad))


# ----------------------------------------------------------------------
# the checks


def check_compat_coeffs(lo: int = DEFAULT_LO, hi: int = DEFAULT_HI) -> OracleReport:
    """Coefficient form of the compatibility condition, over (i,j,k,a,b):

    eta(i,k,a+b-j)eta(j,a+b-j,a) + eta(i,j,b+a-k)eta(b+a-k,k,a)
        + eta(i,j,b)eta(i+j-b,k,a)
      = eta(i,k,a)eta(i+k-a,j,b) + eta(j,k,a)eta(i,j+k-a,b)
        + eta(j,k,j+k-b)eta(i,j+k-b,a)
    """

    def holds(i, j, k, a, b):
        lhs = (
            eta(i, k, a + b - j) * eta(j, a + b - j, a)
            + eta(i, j, b + a - k) * eta(b + a - k, k, a)
            + eta(i, j, b) * eta(i + j - b, k, a)
        )
        rhs = (
            eta(i, k, a) * eta(i + k - a, j, b)
            + eta(j, k, a) * eta(i, j + k - a, b)
            + eta(j, k, j + k - b) * eta(i, j + k - b, a)
        )
        return lhs == rhs

    return _scan("compat_coeffs", IntWindow(lo, hi, 5), holds)


def check_step_identity(lo: int = DEFAULT_LO, hi: int = DEFAULT_HI) -> OracleReport:
    """The five-variable unit-step identity, over (a,b,i,j,k):

    u(a+b-i-j)(u(a-j)+u(b-i)-u(b-j)-u(j-b)) + u(k-b)u(a+b-i-k)
      = u(a-i)(u(k-b)-u(j-b)-u(b-j)+u(b+a-i-k)) + u(b-i)u(a-j)
    """
    u = step_u

    def holds(a, b, i, j, k):
        lhs = u(a + b - i - j) * (u(a - j) + u(b - i) - u(b - j) - u(j - b)) + u(
            k - b
        ) * u(a + b - i - k)
        rhs = u(a - i) * (u(k - b) - u(j - b) - u(b - j) + u(b + a - i - k)) + u(
            b - i
        ) * u(a - j)
        return lhs == rhs

    return _scan("step_identity", IntWindow(lo, hi, 5), holds)


def _eta_identity_table(pad: int) -> list[tuple[str, int, Callable[..., bool]]]:
    return [
        (
            "eta_translation",
            4,
            lambda a, b, c, d: eta(a + d, b + d, c + d) == eta(a, b, c),
        ),
        ("eta_antisymmetry", 3, lambda a, b, c: eta(a, b, c) == -eta(b, a, c)),
        (
            "eta_reflection",
            3,
            lambda a, b, c: eta(a, b, c) == eta(-b, -a, -c - 1)
            and eta(a, b, c) == eta(a, b, a + b - c - 1),
        ),
        ("eta_delta_adjacent", 2, lambda a, c: eta(a, a + 1, c) == kron_delta(a - c)),
        ("eta_interval_sum", 2, lambda b, c: eta_interval_sum(b, c, pad) == c - b),
        (
            "eta_cocycle",
            4,
            lambda a, b, c, d: eta(a, b, d) + eta(b, c, d) == eta(a, c, d),
        ),
        ("eta_annihilation", 3, lambda a, b, c: eta(a, b + 1, c) * eta(c, a, b) == 0),
        (
            "eta_exchange",
            4,
            lambda a, b, c, d: eta(a, b, c) * eta(c, b, d)
            == eta(a, b, d) * eta(a, d + 1, c),
        ),
        (
            "eta_splitting",
            5,
            lambda a, b, c, d, e: eta(a, b, c) * eta(d, c, e)
            == eta(a, b, c) * eta(d, a, e) + eta(a, b, e) * eta(e + 1, b, c),
        ),
    ]


def check_eta_identities(
    lo: int = DEFAULT_LO, hi: int = DEFAULT_HI, pad: int = 0, only: str | None = None
) -> list[OracleReport]:
    """The nine elementary eta identities, one report each.

    In order: translation invariance, antisymmetry, reflection, the
    adjacent-interval delta, the interval sum, the cocycle rule,
    annihilation, exchange, and splitting.
    """
    reports = []
    for name, arity, holds in _eta_identity_table(pad):
        if only is not None and name != only:
            continue
        reports.append(_scan(name, IntWindow(lo, hi, arity), holds))
    return reports


def check_eta_convolution(
    lo: int = DEFAULT_LO, hi: int = DEFAULT_HI, pad: int = 0
) -> OracleReport:
    """Closed form of the sliding-product sum, over (t,s,b,d,h):

    sum_a eta(t,s,a)eta(b+a,d-a,h) = (s-t)eta(b+t,d-t,h)
        + (d-h-s)eta(d-s,d-t,h) + (h-b-s+1)eta(b+t,b+s,h)
    """

    def holds(t, s, b, d, h):
        lhs = eta_convolution(t, s, b, d, h, pad)
        rhs = (
            (s - t) * eta(b + t, d - t, h)
            + (d - h - s) * eta(d - s, d - t, h)
            + (h - b - s + 1) * eta(b + t, b + s, h)
        )
        return lhs == rhs

    return _scan("eta_convolution", IntWindow(lo, hi, 5), holds)


def check_zeta_closed_form(
    lo: int = DEFAULT_LO, hi: int = DEFAULT_HI, pad: int = 0
) -> OracleReport:
    """Closed form of zeta in six eta terms, over (i,j,k,c,h):

    zeta(i,j,k,c,h) = eta(j,k,c)((k-c-1)eta(i-c+k,j+k-c,h)
                        + (j-h)eta(j,j+k-c,h) + (h-i)eta(i,i+k-c,h))
                    + eta(i,j,c)((c-i+1)eta(i+j-c,i+k-c,h)
                        + (h-j)eta(i+j-c,j,h) + (k-h)eta(i+k-c,k,h))
    """

    def holds(i, j, k, c, h):
        lhs = zeta(i, j, k, c, h, pad)
        rhs = eta(j, k, c) * (
            (k - c - 1) * eta(i - c + k, j + k - c, h)
            + (j - h) * eta(j, j + k - c, h)
            + (h - i) * eta(i, i + k - c, h)
        ) + eta(i, j, c) * (
            (c - i + 1) * eta(i + j - c, i + k - c, h)
            + (h - j) * eta(i + j - c, j, h)
            + (k - h) * eta(i + k - c, k, h)
        )
        return lhs == rhs

    return _scan("zeta_closed_form", IntWindow(lo, hi, 5), holds)


def check_ybe_coeffs(
    lo: int = DEFAULT_LO, hi: int = DEFAULT_HI, pad: int = 0
) -> OracleReport:
    """Coefficient form of the Yang-Baxter equation for g, over (i,j,k,c,h):

    sum_a eta(j,k,a)eta(i,a,c)eta(i+a-c,j+k-a,h)
      = sum_s eta(i,j,s)eta(i+j-s,k,h+c-s)eta(s,h+c-s,c)
    """

    def holds(i, j, k, c, h):
        return zeta(i, j, k, c, h, pad) == ybe_coeff_rhs(i, j, k, c, h, pad)

    return _scan("ybe_coeffs", IntWindow(lo, hi, 5), holds)


def check_zeta_symmetry(
    lo: int = DEFAULT_LO, hi: int = DEFAULT_HI, pad: int = 0
) -> OracleReport:
    """The right side of the Yang-Baxter coefficient identity is itself a zeta:

    sum_s eta(i,j,s)eta(i+j-s,k,h+c-s)eta(s,h+c-s,c)
      = zeta(i+j-k, i, j, h+c-k, i+j-h)
    """

    def holds(i, j, k, c, h):
        return ybe_coeff_rhs(i, j, k, c, h, pad) == zeta(
            i + j - k, i, j, h + c - k, i + j - h, pad
        )

    return _scan("zeta_symmetry", IntWindow(lo, hi, 5), holds)


def check_g_idempotent_identity(
    lo: int = DEFAULT_LO, hi: int = DEFAULT_HI, pad: int = 0
) -> OracleReport:
    """The scalar identities behind g^2 = g and its companions, over (i,j,l):

    sum_k eta(i,j,k)eta(k,i+j-k,l) = eta(i,j,l)
    eta(j,i,l) = -eta(i,j,l)
    eta(i,j,i+j-l) = eta(i,j,l) + delta(l-j) - delta(l-i)
    """

    def holds(i, j, l):
        return (
            g_idem_sum(i, j, l, pad) == eta(i, j, l)
            and eta(j, i, l) == -eta(i, j, l)
            and eta(i, j, i + j - l) == eta(i, j, l) + kron_delta(l - j) - kron_delta(l - i)
        )

    return _scan("g_idempotent", IntWindow(lo, hi, 3), holds)


# ----------------------------------------------------------------------
# registry

_ETA_IDENTITY_NAMES = [name for name, _, _ in _eta_identity_table(0)]

# Short aliases keep the command line terse; ids1..ids9 select the nine
# eta identities in their listed order.
_ALIASES = {
    "cond1": "compat_coeffs",
    "cond2": "ybe_coeffs",
    "uid": "step_identity",
    "prexi": "eta_convolution",
    "xi": "zeta_closed_form",
    "zeta_sym": "zeta_symmetry",
    "g_idem": "g_idempotent",
}
_ALIASES.update({f"ids{k}": name for k, name in enumerate(_ETA_IDENTITY_NAMES, start=1)})


def oracle_names() -> list[str]:
    """Canonical check names, sorted."""
    names = [
        "compat_coeffs",
        "step_identity",
        "eta_convolution",
        "zeta_closed_form",
        "ybe_coeffs",
        "zeta_symmetry",
        "g_idempotent",
    ] + _ETA_IDENTITY_NAMES
    return sorted(names)


def run_oracles(
    lo: int = DEFAULT_LO,
    hi: int = DEFAULT_HI,
    only: list[str] | None = None,
    pad: int = 0,
) -> list[OracleReport]:
    """Run all (or the selected) identity checks; reports sorted by name."""
    selected = None
    if only is not None:
        selected = set()
        for raw in only:
            name = _ALIASES.get(raw, raw)
            if name not in oracle_names():
                raise ValueError(f"unknown identity check: {raw}")
            selected.add(name)

    reports: list[OracleReport] = []

    def want(name: str) -> bool:
        return selected is None or name in selected

    if want("compat_coeffs"):
        reports.append(check_compat_coeffs(lo, hi))
    if want("step_identity"):
        reports.append(check_step_identity(lo, hi))
    if want("eta_convolution"):
        reports.append(check_eta_convolution(lo, hi, pad))
    if want("zeta_closed_form"):
        reports.append(check_zeta_closed_form(lo, hi, pad))
    if want("ybe_coeffs"):
        reports.append(check_ybe_coeffs(lo, hi, pad))
    if want("zeta_symmetry"):
        reports.append(check_zeta_symmetry(lo, hi, pad))
    if want("g_idempotent"):
        reports.append(check_g_idempotent_identity(lo, hi, pad))
    for name, arity, holds in _eta_identity_table(pad):
        if want(name):
            reports.append(_scan(name, IntWindow(lo, hi, arity), holds))
    reports.sort(key=lambda r: r.name)
    return reports
