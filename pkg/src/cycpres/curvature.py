"""Exact curvature arithmetic: rational multiples of pi, Laurent forms in a
single symbolic vertex degree k (powers -1, 0, 1 only), the region curvature
formula, positive-triangle classification, and the machine-checked
inequality ledger.

pi is never evaluated numerically; every quantity is a Laurent polynomial
a*k + b + c/k of Fractions carrying an explicit pi-degree (0 or 1), and all
comparisons reduce to exact rational sign analysis.  Symbolic inequalities
over a range k >= K0 are decided by multiplying through by k and analysing
the resulting quadratic exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Sequence, Union

from .resources import data_path


@dataclass(frozen=True)
class KQuantity:
    """(a*k + b + c/k) * pi^pi_deg with exact rational a, b, c."""

    k1: Fraction = Fraction(0)
    k0: Fraction = Fraction(0)
    km1: Fraction = Fraction(0)
    pi_deg: int = 1

    def is_constant(self) -> bool:
        return self.k1 == 0 and self.km1 == 0

    def __add__(self, other: "KQuantity") -> "KQuantity":
        if self.pi_deg != other.pi_deg:
            raise ValueError("adding quantities of different pi-degree")
        return KQuantity(
            self.k1 + other.k1, self.k0 + other.k0, self.km1 + other.km1, self.pi_deg
        )

    def __sub__(self, other: "KQuantity") -> "KQuantity":
        return self + KQuantity(-other.k1, -other.k0, -other.km1, other.pi_deg)

    def __mul__(self, other: "KQuantity") -> "KQuantity":
        pi_deg = self.pi_deg + other.pi_deg
        if pi_deg > 1:
            raise ValueError("product would have pi-degree > 1")
        coeffs: dict[int, Fraction] = {}
        for p1, c1 in ((1, self.k1), (0, self.k0), (-1, self.km1)):
            if c1 == 0:
                continue
            for p2, c2 in ((1, other.k1), (0, other.k0), (-1, other.km1)):
                if c2 == 0:
                    continue
                coeffs[p1 + p2] = coeffs.get(p1 + p2, Fraction(0)) + c1 * c2
        for power, coeff in coeffs.items():
            if power not in (-1, 0, 1) and coeff != 0:
                raise ValueError("product leaves the k^{-1},k^0,k^1 span")
        return KQuantity(
            coeffs.get(1, Fraction(0)),
            coeffs.get(0, Fraction(0)),
            coeffs.get(-1, Fraction(0)),
            pi_deg,
        )

    def scale(self, r: Fraction) -> "KQuantity":
        return KQuantity(self.k1 * r, self.k0 * r, self.km1 * r, self.pi_deg)

    def at(self, k: int) -> Fraction:
        if k == 0:
            raise ZeroDivisionError("k = 0")
        return self.k1 * k + self.k0 + self.km1 / k

    def __str__(self) -> str:
        parts = []
        if self.k1:
            parts.append(f"({self.k1})k")
        if self.k0 or not parts and not self.km1:
            parts.append(f"({self.k0})")
        if self.km1:
            parts.append(f"({self.km1})/k")
        body = " + ".join(parts) if parts else "0"
        return f"[{body}]" + (" pi" if self.pi_deg == 1 else "")


def pi_times(value) -> KQuantity:
    return KQuantity(k0=Fraction(value), pi_deg=1)


def rational(value) -> KQuantity:
    return KQuantity(k0=Fraction(value), pi_deg=0)


def k_power(n: int) -> KQuantity:
    if n == 1:
        return KQuantity(k1=Fraction(1), pi_deg=0)
    if n == 0:
        return KQuantity(k0=Fraction(1), pi_deg=0)
    if n == -1:
        return KQuantity(km1=Fraction(1), pi_deg=0)
    raise ValueError("only k^-1, k^0, k^1 are representable")


Degree = Union[int, str]


def curvature(degrees: Sequence[Degree]) -> KQuantity:
    """c(d_1, ..., d_j) = (2 - j)pi + 2pi * sum(1/d_i); entries may be the
    symbol "k"."""
    if not degrees:
        raise ValueError("need at least one vertex degree")
    total = pi_times(2 - len(degrees))
    for d in degrees:
        if d == "k":
            total = total + KQuantity(km1=Fraction(2), pi_deg=1)
        else:
            if not isinstance(d, int) or d < 2:
                raise ValueError(f"vertex degree must be an integer >= 2 or 'k', got {d!r}")
            total = total + pi_times(Fraction(2, d))
    return total


def positive_triangles(max_degree: int) -> list[tuple[int, int, int]]:
    """All multisets {d1 <= d2 <= d3} of even degrees in [4, max_degree]
    whose triangle has positive curvature."""
    if max_degree < 4 or max_degree % 2:
        raise ValueError("max_degree must be even and >= 4")
    out = []
    for d1 in range(4, max_degree + 1, 2):
        for d2 in range(d1, max_degree + 1, 2):
            for d3 in range(d2, max_degree + 1, 2):
                if curvature((d1, d2, d3)).k0 > 0:
                    out.append((d1, d2, d3))
    return out


# -- assertion ledger ----------------------------------------------------------


class LedgerError(ValueError):
    pass


def eval_expr(node) -> KQuantity:
    """Evaluate a prefix-AST expression node.

    Node kinds: {"c": [degrees]}, {"pi_rat": [p, q]}, {"rat": [p, q]},
    {"var_k_pow": n}, {"add": [...]}, {"sub": [a, b]},
    {"mul_rat": [[p, q], x]}, {"mul": [a, b]}.
    """
    if not isinstance(node, dict) or len(node) != 1:
        raise LedgerError(f"bad expression node {node!r}")
    op, args = next(iter(node.items()))
    if op == "c":
        return curvature(args)
    if op == "pi_rat":
        return pi_times(Fraction(args[0], args[1]))
    if op == "rat":
        return rational(Fraction(args[0], args[1]))
    if op == "var_k_pow":
        return k_power(args)
    if op == "add":
        out = eval_expr(args[0])
        for sub in args[1:]:
            out = out + eval_expr(sub)
        return out
    if op == "sub":
        return eval_expr(args[0]) - eval_expr(args[1])
    if op == "mul_rat":
        (p, q), sub = args
        return eval_expr(sub).scale(Fraction(p, q))
    if op == "mul":
        return eval_expr(args[0]) * eval_expr(args[1])
    raise LedgerError(f"unknown expression op {op!r}")


def _relation_holds(diff: Fraction, rel: str) -> bool:
    if rel == "<":
        return diff < 0
    if rel == "<=":
        return diff <= 0
    if rel == "=":
        return diff == 0
    raise LedgerError(f"unknown relation {rel!r}")


def _holds_for_all_k(diff: KQuantity, rel: str, k_min: int) -> bool:
    """Decide a*k + b + c/k REL 0 for every integer k >= k_min >= 1 exactly,
    via the quadratic g(k) = a*k^2 + b*k + c (k > 0 preserves signs)."""
    a, b, c = diff.k1, diff.k0, diff.km1
    if rel == "=":
        return a == 0 and b == 0 and c == 0

    def g(k: Fraction) -> Fraction:
        return a * k * k + b * k + c

    if a > 0:
        return False  # g -> +infinity
    if a == 0:
        if b > 0:
            return False
        if b < 0:
            return _relation_holds(g(Fraction(k_min)) / k_min, rel)
        return _relation_holds(Fraction(c), rel)  # constant c/k sign = sign c
    # a < 0: g is concave; max over [k_min, inf) at vertex or k_min
    vertex = Fraction(-b, 2 * a)
    candidates = {Fraction(k_min)}
    if vertex > k_min:
        lo = int(vertex)
        for kk in (lo, lo + 1):
            if kk >= k_min:
                candidates.add(Fraction(kk))
    return all(_relation_holds(g(kk) / kk, rel) for kk in candidates)


@dataclass
class AssertionResult:
    assertion_id: str
    ok: bool
    detail: str
    quote: str = ""


@dataclass
class LedgerReport:
    results: list[AssertionResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def failures(self) -> list[AssertionResult]:
        return [r for r in self.results if not r.ok]


def check_assertion(doc: dict) -> AssertionResult:
    aid = doc.get("id", "?")
    lhs = eval_expr(doc["expr_lhs"])
    rhs = eval_expr(doc["expr_rhs"])
    rel = doc["rel"]
    if lhs.pi_deg != rhs.pi_deg:
        raise LedgerError(f"{aid}: pi-degree mismatch")
    diff = lhs - rhs
    k_range = doc.get("k_range")
    if diff.is_constant() and k_range is None:
        ok = _relation_holds(diff.k0, rel)
        detail = f"{lhs} {rel} {rhs}"
    elif k_range is None:
        raise LedgerError(f"{aid}: symbolic assertion needs k_range")
    elif len(k_range) == 2 and k_range[0] == k_range[1]:
        value = diff.at(k_range[0])
        ok = _relation_holds(value, rel)
        detail = f"at k={k_range[0]}: {lhs} {rel} {rhs}"
    else:
        k_min = k_range[0]
        ok = _holds_for_all_k(diff, rel, k_min)
        detail = f"for all k>={k_min}: {lhs} {rel} {rhs}"
    return AssertionResult(assertion_id=aid, ok=ok, detail=detail, quote=doc.get("quote", ""))


def run_ledger(path: Union[str, Path, None] = None) -> LedgerReport:
    """Evaluate every assertion in the ledger file exactly."""
    if path is None:
        path = data_path("ledger", "inequalities.json")
    docs = json.loads(Path(path).read_text())
    report = LedgerReport()
    for doc in docs:
        report.results.append(check_assertion(doc))
    return report
