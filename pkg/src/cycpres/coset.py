"""Todd-Coxeter coset enumeration over the trivial subgroup: an independent
finiteness/order oracle for the finite-group claims.

Two definition strategies are implemented: HLT (scan relators coset by
coset, defining cosets to fill gaps, with a lookahead compaction pass when
the table grows) and Felsch (define the first empty table slot, then close
all relator deductions).  Both must report the same order.  Coset
coincidences are processed with a union-find table with path compression.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class FinitePresentation:
    """Relators are tuples of (generator index, sign) pairs, freely and
    cyclically reduced."""

    ngens: int
    relators: tuple[tuple[tuple[int, int], ...], ...]

    def __post_init__(self) -> None:
        for rel in self.relators:
            for i in range(len(rel)):
                g, s = rel[i]
                if not (0 <= g < self.ngens and s in (1, -1)):
                    raise ValueError(f"bad relator letter {rel[i]!r}")
                g2, s2 = rel[(i + 1) % len(rel)]
                if g == g2 and s == -s2:
                    raise ValueError("relator is not (cyclically) reduced")


@dataclass(frozen=True)
class EnumerationResult:
    order: Optional[int]  # None when the cap was exceeded
    cap: int
    cosets_defined: int
    collapses: int

    @property
    def closed(self) -> bool:
        return self.order is not None

    def describe(self) -> str:
        if self.closed:
            return f"Order({self.order})"
        return f"CapExceeded({self.cap})"


def cyclic_presentation(n: int, k: int, l: int) -> FinitePresentation:
    """G_n(x_0 x_k x_l): n generators, relators x_i x_(i+k) x_(i+l)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    relators = []
    for i in range(n):
        word = [(i % n, 1), ((i + k) % n, 1), ((i + l) % n, 1)]
        relators.append(tuple(word))
    return FinitePresentation(ngens=n, relators=tuple(relators))


class _Table:
    """Dense coset table over columns (g, g^-1) with union-find collapses."""

    def __init__(self, ngens: int, cap: int):
        self.ngens = ngens
        self.ncols = 2 * ngens
        self.cap = cap
        self.rows: list[list[Optional[int]]] = [self._blank()]
        self.parent: list[int] = [0]
        self.live = 1
        self.defined = 1
        self.collapses = 0
        self.queue: list[tuple[int, int]] = []

    def _blank(self) -> list[Optional[int]]:
        return [None] * self.ncols

    @staticmethod
    def col(gen: int, sign: int) -> int:
        return 2 * gen + (0 if sign > 0 else 1)

    def find(self, c: int) -> int:
        root = c
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[c] != root:
            self.parent[c], c = root, self.parent[c]
        return root

    def new_coset(self) -> Optional[int]:
        if self.live >= self.cap:
            return None
        c = len(self.rows)
        self.rows.append(self._blank())
        self.parent.append(c)
        self.live += 1
        self.defined += 1
        return c

    def set_entry(self, a: int, column: int, b: int) -> None:
        """Record a * column = b, queueing a coincidence on conflict."""
        a, b = self.find(a), self.find(b)
        inverse = column ^ 1
        cur = self.rows[a][column]
        if cur is not None and self.find(cur) != b:
            self.queue.append((self.find(cur), b))
        self.rows[a][column] = b
        cur2 = self.rows[b][inverse]
        if cur2 is not None and self.find(cur2) != a:
            self.queue.append((self.find(cur2), a))
        self.rows[b][inverse] = a

    def get_entry(self, a: int, column: int) -> Optional[int]:
        entry = self.rows[self.find(a)][column]
        return None if entry is None else self.find(entry)

    def process_coincidences(self) -> None:
        while self.queue:
            a, b = self.queue.pop()
            a, b = self.find(a), self.find(b)
            if a == b:
                continue
            if b < a:
                a, b = b, a
            self.parent[b] = a
            self.live -= 1
            self.collapses += 1
            row_b = self.rows[b]
            for column in range(self.ncols):
                target = row_b[column]
                if target is not None:
                    self.set_entry(a, column, self.find(target))

    def live_cosets(self) -> list[int]:
        return [c for c in range(len(self.rows)) if self.find(c) == c]


def _scan_and_fill(table: _Table, coset: int, relator, define: bool) -> bool:
    """Scan ``relator`` from ``coset``: forward as far as the table allows,
    backward from the other end, then close the remaining gap (coincidence,
    deduction, or -- when ``define`` -- a new coset).  Returns False only
    when a needed coset could not be defined within the cap."""
    cols = [table.col(g, s) for (g, s) in relator]
    n = len(cols)
    while True:
        start = table.find(coset)
        front = start
        i = 0
        while i < n:
            nxt = table.get_entry(front, cols[i])
            if nxt is None:
                break
            front, i = nxt, i + 1
        if i == n:
            if front != start:
                table.queue.append((front, start))
                table.process_coincidences()
            return True
        back = start
        j = n
        while j > i:
            prev = table.get_entry(back, cols[j - 1] ^ 1)
            if prev is None:
                break
            back, j = prev, j - 1
        if j == i:
            if front != back:
                table.queue.append((front, back))
                table.process_coincidences()
            return True
        if j == i + 1:
            table.set_entry(front, cols[i], back)
            table.process_coincidences()
            return True
        if not define:
            return True
        fresh = table.new_coset()
        if fresh is None:
            return False
        table.set_entry(front, cols[i], fresh)
        table.process_coincidences()
        # loop: rescan from the (possibly collapsed) coset


def _lookahead(table: _Table, p: FinitePresentation) -> int:
    """Compaction pass: scan every relator from every live coset without
    defining, harvesting deductions and coincidences.  Returns the number
    of cosets reclaimed."""
    before = table.live
    changed = True
    while changed:
        changed = False
        live_before = table.live
        for coset in table.live_cosets():
            if table.find(coset) != coset:
                continue
            for relator in p.relators:
                _scan_and_fill(table, coset, relator, define=False)
        if table.live < live_before:
            changed = True
    return before - table.live


def _hlt(p: FinitePresentation, cap: int) -> EnumerationResult:
    table = _Table(p.ngens, cap)

    def define_failed() -> bool:
        return _lookahead(table, p) == 0

    coset = 0
    while coset < len(table.rows):
        if table.find(coset) != coset:
            coset += 1
            continue
        for relator in p.relators:
            while not _scan_and_fill(table, coset, relator, define=True):
                if define_failed():
                    return EnumerationResult(None, cap, table.defined, table.collapses)
                if table.find(coset) != coset:
                    break
            if table.find(coset) != coset:
                break  # this coset collapsed away
        if table.find(coset) == coset:
            # the subgroup is trivial: every generator image must be defined
            for column in range(table.ncols):
                while table.get_entry(coset, column) is None:
                    fresh = table.new_coset()
                    if fresh is not None:
                        table.set_entry(coset, column, fresh)
                        table.process_coincidences()
                        break
                    if define_failed():
                        return EnumerationResult(None, cap, table.defined, table.collapses)
                    if table.find(coset) != coset:
                        break
                if table.find(coset) != coset:
                    break
        coset += 1
    order = len(table.live_cosets())
    return EnumerationResult(order, cap, table.defined, table.collapses)


def _felsch(p: FinitePresentation, cap: int) -> EnumerationResult:
    table = _Table(p.ngens, cap)
    # all cyclic rotations of the relators and their inverses, for deduction
    scans = []
    for rel in p.relators:
        inv = tuple((g, -s) for (g, s) in reversed(rel))
        for w in (rel, inv):
            for r in range(len(w)):
                scans.append(w[r:] + w[:r])
    while True:
        # close every possible deduction without defining
        changed = True
        while changed:
            changed = False
            for coset in table.live_cosets():
                for relator in scans:
                    before = (table.live, table.defined, table.collapses)
                    _scan_and_fill(table, coset, relator, define=False)
                    if (table.live, table.defined, table.collapses) != before:
                        changed = True
        # find the first empty slot
        slot = None
        for coset in table.live_cosets():
            for column in range(table.ncols):
                if table.get_entry(coset, column) is None:
                    slot = (coset, column)
                    break
            if slot:
                break
        if slot is None:
            break
        fresh = table.new_coset()
        if fresh is None:
            return EnumerationResult(None, cap, table.defined, table.collapses)
        table.set_entry(slot[0], slot[1], fresh)
        table.process_coincidences()
    order = len(table.live_cosets())
    return EnumerationResult(order, cap, table.defined, table.collapses)


def todd_coxeter(p: FinitePresentation, cap: int = 10_000, strategy: str = "hlt") -> EnumerationResult:
    """Enumerate cosets of the trivial subgroup; Order(N) on closure."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    if strategy == "hlt":
        return _hlt(p, cap)
    if strategy == "felsch":
        return _felsch(p, cap)
    raise ValueError(f"unknown strategy {strategy!r}")
