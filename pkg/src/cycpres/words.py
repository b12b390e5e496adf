"""Words over the alphabet {x^±1, t-powers, corner letters}, with free
reduction modulo the torsion relation t^(2m) = 1 and canonical cyclic forms.

Three letter kinds coexist:

* ``Gen``    -- a group generator (``x`` in the two-generator presentations,
  ``z`` in the Tietze-transformed one) with a sign;
* ``TPower`` -- a power of ``t`` whose exponent is a linear form a*m + b,
  so that words can be stored once and instantiated at any concrete m;
* ``Corner`` -- a corner letter from {lam, mu, a..h}.  ``mu`` is a first
  class letter but is the semantic inverse of ``lam`` (both read t^0);
  inversion therefore maps lam <-> mu and never produces lam^-1 or mu^-1.

A :class:`Word` optionally carries a concrete torsion modulus 2m.  With a
modulus set every t-exponent is normalised to the representative in
(-m, m], which makes t^m visibly self-inverse.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Union


@dataclass(frozen=True)
class TExp:
    """Integer linear form coeff_m * m + const: the exponent of a t-power."""

    coeff_m: int = 0
    const: int = 0

    def __add__(self, other: "TExp") -> "TExp":
        return TExp(self.coeff_m + other.coeff_m, self.const + other.const)

    def __sub__(self, other: "TExp") -> "TExp":
        return TExp(self.coeff_m - other.coeff_m, self.const - other.const)

    def __neg__(self) -> "TExp":
        return TExp(-self.coeff_m, -self.const)

    def __mul__(self, k: int) -> "TExp":
        return TExp(self.coeff_m * k, self.const * k)

    __rmul__ = __mul__

    def evaluate(self, m: int) -> int:
        if m < 1:
            raise ValueError("m must be a positive integer")
        return self.coeff_m * m + self.const

    def is_zero(self) -> bool:
        return self.coeff_m == 0 and self.const == 0

    def mod2m_normalised(self) -> "TExp":
        """Representative with coeff_m in {0, 1}, valid modulo t^(2m) for all m."""
        return TExp(self.coeff_m % 2, self.const)

    def __str__(self) -> str:
        c, b = self.coeff_m, self.const
        if c == 0:
            return str(b)
        head = "m" if c == 1 else ("-m" if c == -1 else f"{c}m")
        if b == 0:
            return head
        return f"{head}{b:+d}"


T_ZERO = TExp(0, 0)


@dataclass(frozen=True)
class Gen:
    name: str
    sign: int = 1


@dataclass(frozen=True)
class TPower:
    exp: TExp


@dataclass(frozen=True)
class Corner:
    name: str
    sign: int = 1


Letter = Union[Gen, TPower, Corner]

# Corner dictionary: lam = t^0, a = t^(m-3), b = t^m, c = t^-3, d = t^(m+3),
# e = t^-3, f = t^(m-3), g = t^m, h = t^m; mu denotes lam^-1.
CORNER_EXPONENT: dict[str, TExp] = {
    "lam": TExp(0, 0),
    "mu": TExp(0, 0),
    "a": TExp(1, -3),
    "b": TExp(1, 0),
    "c": TExp(0, -3),
    "d": TExp(1, 3),
    "e": TExp(0, -3),
    "f": TExp(1, -3),
    "g": TExp(1, 0),
    "h": TExp(1, 0),
}

# Documented, arbitrary letter order for lexicographic minimisation.
CORNER_ORDER: dict[str, int] = {
    n: i for i, n in enumerate(["lam", "mu", "a", "b", "c", "d", "e", "f", "g", "h"])
}

INTERIOR_CORNERS = frozenset({"lam", "mu", "a", "b"})


def invert_letter(letter: Letter) -> Letter:
    if isinstance(letter, Gen):
        return Gen(letter.name, -letter.sign)
    if isinstance(letter, TPower):
        return TPower(-letter.exp)
    if letter.name == "lam":
        return Corner("mu", letter.sign)
    if letter.name == "mu":
        return Corner("lam", letter.sign)
    return Corner(letter.name, -letter.sign)


def letter_key(letter: Letter) -> tuple:
    """Total order on letters: corners first (spec order, positive before
    negative), then generators, then t-powers."""
    if isinstance(letter, Corner):
        return (0, CORNER_ORDER[letter.name], 0 if letter.sign > 0 else 1)
    if isinstance(letter, Gen):
        return (1, letter.name, 0 if letter.sign > 0 else 1)
    return (2, letter.exp.coeff_m, letter.exp.const)


def letter_str(letter: Letter) -> str:
    if isinstance(letter, Gen):
        return letter.name if letter.sign > 0 else f"{letter.name}^-1"
    if isinstance(letter, TPower):
        return f"t^{letter.exp}"
    return letter.name if letter.sign > 0 else f"{letter.name}^-1"


@dataclass(frozen=True)
class Word:
    """Immutable word; ``modulus`` is the concrete torsion order 2m or None."""

    letters: tuple[Letter, ...]
    modulus: Optional[int] = None

    def __post_init__(self) -> None:
        if self.modulus is not None and self.modulus < 1:
            raise ValueError("modulus must be a positive integer")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __str__(self) -> str:
        return " ".join(letter_str(l) for l in self.letters) if self.letters else "1"

    def with_modulus(self, modulus: Optional[int]) -> "Word":
        return Word(self.letters, modulus)


def word(letters: Iterable[Letter], modulus: Optional[int] = None) -> Word:
    return Word(tuple(letters), modulus)


def x(sign: int = 1, name: str = "x") -> Gen:
    return Gen(name, sign)


def t(exp: Union[int, TExp, tuple[int, int]]) -> TPower:
    if isinstance(exp, int):
        return TPower(TExp(0, exp))
    if isinstance(exp, tuple):
        return TPower(TExp(*exp))
    return TPower(exp)


def tm(coeff_m: int = 1, const: int = 0) -> TPower:
    return TPower(TExp(coeff_m, const))


_CORNER_TOKEN = re.compile(r"^(lam|mu|[a-h])(-|\^-1)?$")


def parse_corners(text: str) -> Word:
    """Parse a corner word such as ``"a mu a d-"`` (suffix ``-`` inverts)."""
    letters: list[Letter] = []
    for tok in text.split():
        match = _CORNER_TOKEN.match(tok)
        if not match:
            raise ValueError(f"bad corner token {tok!r}")
        name, inv = match.group(1), match.group(2)
        letters.append(Corner(name, -1 if inv else 1))
    return Word(tuple(letters))


def _normalise_exp(exp: TExp, modulus: Optional[int]) -> TExp:
    if modulus is None:
        return exp
    if exp.coeff_m:
        # symbolic exponent in a concrete-torsion word: only meaningful when
        # the modulus is the canonical 2m
        if modulus % 2:
            raise ValueError("symbolic t-exponent with non-2m modulus")
        value = exp.evaluate(modulus // 2)
    else:
        value = exp.const
    half = (modulus + 1) // 2
    rep = ((value + half - 1) % modulus) - (half - 1)  # in (-N/2, N/2]
    return TExp(0, rep)


def _exp_is_zero(exp: TExp, modulus: Optional[int], symbolic_torsion: bool) -> bool:
    if modulus is not None:
        return _normalise_exp(exp, modulus).const == 0
    if symbolic_torsion:
        return exp.coeff_m % 2 == 0 and exp.const == 0
    return exp.is_zero()


def free_reduce(w: Word, symbolic_torsion: bool = False) -> Word:
    """Unique freely reduced form of ``w``.

    Adjacent t-powers merge, x x^-1 pairs cancel, and corner letters cancel
    against their semantic inverses (in particular lam mu cancels).  With a
    modulus set, every surviving t-exponent is normalised into (-m, m]; with
    ``symbolic_torsion`` (and no modulus), t^(2m) = 1 is applied symbolically
    by reducing the m-coefficient mod 2.
    """
    stack: list[Letter] = []
    for letter in w.letters:
        if isinstance(letter, TPower):
            exp = letter.exp
            if stack and isinstance(stack[-1], TPower):
                exp = stack.pop().exp + exp
            if symbolic_torsion and w.modulus is None:
                exp = exp.mod2m_normalised()
            else:
                exp = _normalise_exp(exp, w.modulus)
            if not _exp_is_zero(exp, w.modulus, symbolic_torsion):
                stack.append(TPower(exp))
            continue
        if stack and stack[-1] == invert_letter(letter):
            stack.pop()
            # a cancellation may expose two t-powers that now touch
            if (
                stack
                and isinstance(stack[-1], TPower)
                and len(stack) >= 2
                and isinstance(stack[-2], TPower)
            ):
                hi = stack.pop().exp
                lo = stack.pop().exp
                merged = lo + hi
                if symbolic_torsion and w.modulus is None:
                    merged = merged.mod2m_normalised()
                else:
                    merged = _normalise_exp(merged, w.modulus)
                if not _exp_is_zero(merged, w.modulus, symbolic_torsion):
                    stack.append(TPower(merged))
            continue
        stack.append(letter)
    # cancellations can cascade; iterate until stable
    reduced = Word(tuple(stack), w.modulus)
    if len(reduced) < len(w):
        return free_reduce(reduced, symbolic_torsion)
    return reduced


def invert_word(w: Word) -> Word:
    return Word(tuple(invert_letter(l) for l in reversed(w.letters)), w.modulus)


def concat(*parts: Word) -> Word:
    modulus = None
    for p in parts:
        if p.modulus is not None:
            if modulus is not None and modulus != p.modulus:
                raise ValueError("mixed moduli")
            modulus = p.modulus
    letters: list[Letter] = []
    for p in parts:
        letters.extend(p.letters)
    return free_reduce(Word(tuple(letters), modulus))


def word_pow(w: Word, n: int) -> Word:
    if n == 0:
        return Word((), w.modulus)
    base = w if n > 0 else invert_word(w)
    out = base
    for _ in range(abs(n) - 1):
        out = concat(out, base)
    return out


def exponent_sum(w: Word) -> TExp:
    """Signed sum of t-exponents; corner letters contribute their dictionary
    value (mu counts as (0, 0)), generators contribute nothing."""
    total = T_ZERO
    for letter in w.letters:
        if isinstance(letter, TPower):
            total = total + letter.exp
        elif isinstance(letter, Corner):
            total = total + letter.sign * CORNER_EXPONENT[letter.name]
    return total


def _rotations(letters: tuple[Letter, ...]) -> Iterator[tuple[Letter, ...]]:
    for i in range(max(1, len(letters))):
        yield letters[i:] + letters[:i]


def cyclic_reduce(w: Word) -> Word:
    """Freely reduce and then cancel/merge across the wrap-around point."""
    cur = free_reduce(w)
    while len(cur) >= 2:
        first, last = cur.letters[0], cur.letters[-1]
        if last == invert_letter(first):
            cur = free_reduce(Word(cur.letters[1:-1], cur.modulus))
            continue
        if isinstance(first, TPower) and isinstance(last, TPower):
            # rotate the leading t-power to the end and merge
            cur = free_reduce(Word(cur.letters[1:] + (first,), cur.modulus))
            continue
        break
    return cur


@dataclass(frozen=True)
class CyclicWord:
    """Canonical representative of a word up to rotation and inversion."""

    rep: Word

    def __str__(self) -> str:
        return str(self.rep)

    def __len__(self) -> int:
        return len(self.rep)


def canonical_cyclic(w: Word) -> CyclicWord:
    """Lexicographically minimal representative over all rotations of the
    cyclically reduced word and of its inverse (letter order documented in
    CORNER_ORDER, positive before negative)."""
    reduced = cyclic_reduce(w)
    if not reduced.letters:
        return CyclicWord(reduced)
    candidates = list(_rotations(reduced.letters))
    candidates.extend(_rotations(invert_word(reduced).letters))
    best = min(candidates, key=lambda ls: tuple(letter_key(l) for l in ls))
    return CyclicWord(Word(best, reduced.modulus))


def canonical_cyclic_bruteforce(w: Word) -> CyclicWord:
    """Independent oracle: explicitly materialise the 2*|w| candidates."""
    reduced = cyclic_reduce(w)
    n = len(reduced)
    if n == 0:
        return CyclicWord(reduced)
    cands: list[tuple[Letter, ...]] = []
    inv = invert_word(reduced).letters
    for i in range(n):
        cands.append(reduced.letters[i:] + reduced.letters[:i])
        cands.append(inv[i:] + inv[:i])
    assert len(cands) == 2 * n
    best = min(cands, key=lambda ls: tuple(letter_key(l) for l in ls))
    return CyclicWord(Word(best, reduced.modulus))


def equal_up_to_rotation(w1: Word, w2: Word) -> bool:
    """Exact cyclic-word equality: some rotation of the cyclically reduced
    first word equals the cyclically reduced second word (no inversion)."""
    a, b = cyclic_reduce(w1), cyclic_reduce(w2)
    if len(a) != len(b):
        return False
    if not a.letters:
        return True
    return any(rot == b.letters for rot in _rotations(a.letters))
