"""Congruence conditions (A)-(D), gcd decomposition, and the complete
hyperbolicity dispatch for G_n(x_0 x_k x_l) with positive length-three
relators.

The dispatch (after reducing by d = gcd(n, k, l)):

* repeated-generator triples (k' = l', k' = 0, or l' = 0, i.e. the relator
  uses only two distinct generators; each such triple is a relator rotation
  of a k = l one) are cyclic of order 2^n' - (-1)^n';
* (B,C,D) = (F,F,T): the group is the half-shift family member with
  m = n'/2 -- finite for n' in {2, 4}, non-elementary hyperbolic for
  n' in {6, 12, 18}, not hyperbolic otherwise;
* (B,C,D) = (F,F,F): the presentation satisfies T(6); not hyperbolic for
  n' in {7, 8} and for the listed n' = 21 and n' = 24 congruence
  exceptions, otherwise non-elementary hyperbolic;
* otherwise A decides: (A,B) = (T,T) gives Z * Z; (A,B,C) = (T,F,T) gives
  Z * Z * Z_((2^(n'/3) - (-1)^(n'/3))/3); (A,B,C) = (F,F,T) a finite
  metacyclic group of order 2^n' - (-1)^n'; (A,B,C) = (F,T,F) gives Z_3.

(B,C,D) is tested before A because the first two cases are A-agnostic:
(21,1,5) has A = T yet belongs to the T(6) case.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Optional

from .abelian import AbelianInvariants, abelian_invariants


@dataclass(frozen=True)
class ConditionVector:
    A: bool
    B: bool
    C: bool
    D: bool

    def as_tuple(self) -> tuple[bool, bool, bool, bool]:
        return (self.A, self.B, self.C, self.D)

    def __str__(self) -> str:
        return "".join("T" if v else "F" for v in self.as_tuple())


def conditions(n: int, k: int, l: int) -> ConditionVector:
    """The four congriuence conditions on (n, k, l), k and l mod n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    k %= n
    l %= n
    a = n % 3 == 0 and (k + l) % 3 == 0
    b = any(v % n == 0 for v in (k + l, 2 * l - k, 2 * k - l))
    c = any(v % n == 0 for v in (3 * l, 3 * k, 3 * (l - k)))
    d = any(v % n == 0 for v in (2 * (k + l), 2 * (2 * l - k), 2 * (2 * k - l)))
    return ConditionVector(a, b, c, d)


def reduce_triple(n: int, k: int, l: int) -> tuple[int, int, int, int]:
    """(d, n/d, k/d, l/d) with d = gcd(n, k, l)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    k %= n
    l %= n
    d = gcd(gcd(n, k), l)
    return d, n // d, k // d, l // d


def is_repeated_generator(n: int, k: int, l: int) -> bool:
    """True when the relator x_0 x_k x_l involves at most two distinct
    generators (k = l, k = 0 or l = 0 mod n); every such triple is a
    relator rotation of a k = l triple, and the group is cyclic."""
    k %= n
    l %= n
    return k == l or k == 0 or l == 0


def cyclic_order(n: int) -> int:
    return 2**n - (-1) ** n


HYPERBOLIC = "non-elementary"
ELEMENTARY = "elementary"
NOT_HYPERBOLIC = "not-hyperbolic"

# Halved-shift family verdicts: hyperbolic exactly for m = n/2 in
# {1, 2, 3, 6, 9}, with the finite/free-product isomorphism types
_GAMMA_ISO = {
    2: ("Z_3", ELEMENTARY),
    4: ("Z_15", ELEMENTARY),
    6: ("Z * Z", HYPERBOLIC),
    12: ("Z_5 * Z * Z", HYPERBOLIC),
    18: ("Z_19 * Z * Z", HYPERBOLIC),
}


@dataclass(frozen=True)
class ClassificationRecord:
    n: int
    k: int
    l: int
    d: int
    reduced: tuple[int, int, int]
    degenerate: bool
    conditions: ConditionVector
    case: str
    iso_description: Optional[str]
    hyperbolicity: str
    t6: bool
    free_product_copies: int

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "l": self.l,
            "gcd": self.d,
            "reduced": list(self.reduced),
            "degenerate": self.degenerate,
            "conditions": str(self.conditions),
            "case": self.case,
            "iso": self.iso_description,
            "hyperbolicity": self.hyperbolicity,
            "t6": self.t6,
            "free_product_copies": self.free_product_copies,
        }


def _exception_21(n: int, k: int, l: int) -> bool:
    return (l - 5 * k) % n == 0 or (k - 5 * l) % n == 0


def _exception_24(n: int, k: int, l: int) -> bool:
    return (l - 5 * k) % n == 0 or (k + 4 * l) % n == 0 or (l + 4 * k) % n == 0


def _classify_reduced(n: int, k: int, l: int) -> tuple[str, Optional[str], str, bool]:
    """Dispatch for a gcd-1, non-repeated-generator triple.
    Returns (case, iso, hyperbolicity, t6)."""
    cond = conditions(n, k, l)
    bcd = (cond.B, cond.C, cond.D)
    if bcd == (False, False, True):
        iso, verdict = _GAMMA_ISO.get(n, (f"Gamma_{n}", NOT_HYPERBOLIC))
        return "a", iso, verdict, False
    if bcd == (False, False, False):
        if n in (7, 8):
            return "b", None, NOT_HYPERBOLIC, True
        if n == 21 and _exception_21(n, k, l):
            return "b-exception", None, NOT_HYPERBOLIC, True
        if n == 24 and _exception_24(n, k, l):
            return "b-exception", None, NOT_HYPERBOLIC, True
        return "b", None, HYPERBOLIC, True
    if cond.A and cond.B:
        return "c-i", "Z * Z", HYPERBOLIC, False
    if cond.A and not cond.B and cond.C:
        third = (2 ** (n // 3) - (-1) ** (n // 3)) // 3
        return "c-ii", f"Z * Z * Z_{third}", HYPERBOLIC, False
    if not cond.A and not cond.B and cond.C:
        return "d-i", f"metacyclic of order {cyclic_order(n)}", ELEMENTARY, False
    if not cond.A and cond.B and not cond.C:
        return "d-ii", "Z_3", ELEMENTARY, False
    raise AssertionError(f"no dispatch case for ({n}, {k}, {l}) [{cond}]")


def classify(n: int, k: int, l: int) -> ClassificationRecord:
    """Full verdict for the group defined by (n, k, l)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    k %= n
    l %= n
    d, n1, k1, l1 = reduce_triple(n, k, l)
    cond = conditions(n1, k1, l1)
    if is_repeated_generator(n1, k1, l1):
        case = "degenerate-cyclic"
        iso = f"Z_{cyclic_order(n1)}"
        verdict = ELEMENTARY
        t6 = False
    else:
        case, iso, verdict, t6 = _classify_reduced(n1, k1, l1)
    if d > 1:
        if verdict in (ELEMENTARY, HYPERBOLIC):
            verdict = HYPERBOLIC  # free product of d > 1 hyperbolic factors
        factor = iso if iso else f"G_{n1}({k1},{l1})"
        iso = f"free product of {d} copies of {factor}"
    return ClassificationRecord(
        n=n,
        k=k,
        l=l,
        d=d,
        reduced=(n1, k1, l1),
        degenerate=case == "degenerate-cyclic",
        conditions=cond,
        case=case,
        iso_description=iso,
        hyperbolicity=verdict,
        t6=t6,
        free_product_copies=d,
    )


# -- exhaustive scans ----------------------------------------------------------


@dataclass
class ScanReport:
    n_max: int
    triples: int = 0
    dispatch_failures: list[tuple[int, int, int]] = field(default_factory=list)
    abc_failures: list[tuple[int, int, int]] = field(default_factory=list)
    case_a_odd: list[tuple[int, int, int]] = field(default_factory=list)
    relabel_mismatches: list[tuple[int, int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (
            self.dispatch_failures
            or self.abc_failures
            or self.case_a_odd
            or self.relabel_mismatches
        )


def scan(n_max: int, relabel_max: Optional[int] = 40) -> ScanReport:
    """Exhaustive dispatch checks over all (n, k, l) with n <= n_max.

    Verifies: exactly one case fires for every reduced non-degenerate
    triple; A = F implies not (B and C) there; the half-shift case only
    fires for even n'; and the verdict is invariant under the relabeling
    (k, l) -> (n - l, n - k) (generator reversal composed with the swap).
    """
    report = ScanReport(n_max=n_max)
    for n in range(1, n_max + 1):
        for k in range(n):
            for l in range(n):
                report.triples += 1
                try:
                    rec = classify(n, k, l)
                except AssertionError:
                    report.dispatch_failures.append((n, k, l))
                    continue
                n1, k1, l1 = rec.reduced
                if not rec.degenerate:
                    cond = rec.conditions
                    if not cond.A and cond.B and cond.C:
                        report.abc_failures.append((n, k, l))
                    if rec.case == "a" and n1 % 2:
                        report.case_a_odd.append((n, k, l))
                if relabel_max and n <= relabel_max:
                    mirror = classify(n, (n - l) % n, (n - k) % n)
                    if mirror.case != rec.case:
                        report.relabel_mismatches.append((n, k, l))
    return report


# -- the abelianization comparison (even n, 20 <= n <= 24) -----------------------


@dataclass
class CorollaryCReport:
    n: int
    gamma_invariants: AbelianInvariants
    checked: int = 0
    coincidences: list[tuple[int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.coincidences


def corollary_c_report(n: int) -> CorollaryCReport:
    """For every coprime (k, l) with (B,C,D) = (F,F,F), compare the abelian
    invariants of G_n(x_0 x_k x_l) with those of G_n(x_0 x_1 x_(n/2-1));
    the conjecture asserts they always differ."""
    if n % 2:
        raise ValueError("n must be even")
    if not 20 <= n <= 24:
        raise ValueError("the desk-scale comparison covers 20 <= n <= 24")
    gamma = abelian_invariants(n, 1, n // 2 - 1)
    report = CorollaryCReport(n=n, gamma_invariants=gamma)
    cache: dict[tuple[int, int], AbelianInvariants] = {}
    for k in range(n):
        for l in range(n):
            if gcd(gcd(n, k), l) != 1:
                continue
            cond = conditions(n, k, l)
            if (cond.B, cond.C, cond.D) != (False, False, False):
                continue
            # invariants are preserved by relator rotation and reversal
            orbit = [
                (k, l),
                ((l - k) % n, (-k) % n),
                ((-l) % n, (k - l) % n),
                ((-k) % n, (-l) % n),
                ((k - l) % n, k),
                (l, (l - k) % n),
            ]
            key = min(orbit)
            if key not in cache:
                cache[key] = abelian_invariants(n, key[0], key[1])
            inv = cache[key]
            report.checked += 1
            if inv == gamma:
                report.coincidences.append((k, l))
    return report
