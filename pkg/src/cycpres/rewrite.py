"""The relative presentation E(2m) = <x, t | t^(2m), x^2 t^(m-3) x t^m>,
a replayable relator-move engine, and the boundary words for powers of the
commuting elements A = x t^-3 and B = t^m x t^(m+3) x t^(m-3).

Identities are verified by replaying shipped move scripts (JSON data files),
never by search: each script step inserts a conjugate of a relator and
free-reduces, so a successful replay is a proof that lhs = rhs in E(2m).
A bounded single-insertion discovery helper is included for authoring
scripts; it is not part of the verification contract.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence, Union

from .resources import data_path
from .words import (
    Corner,
    Gen,
    TExp,
    TPower,
    Word,
    concat,
    cyclic_reduce,
    equal_up_to_rotation,
    free_reduce,
    invert_word,
    word_pow,
)

# m values excluded by the main lemma's hypotheses; the engine itself works
# for any m >= 1
EXCLUDED_M = frozenset({1, 2, 3, 4, 6, 9, 12})


class ScriptError(ValueError):
    """A structurally malformed script step (reported with its index)."""


@dataclass(frozen=True)
class RelativePresentation:
    """E(2m) over H = <t | t^N>; N defaults to 2m (tamper it for negative
    controls)."""

    m: int
    torsion_exponent: Optional[int] = None

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError("m must be >= 1")

    @property
    def torsion(self) -> int:
        return self.torsion_exponent if self.torsion_exponent is not None else 2 * self.m

    @property
    def m_excluded(self) -> bool:
        return self.m in EXCLUDED_M

    def relators(self) -> dict[str, Word]:
        """Relators as freely reduced symbolic words (torsion one concrete)."""
        return {
            "torsion": Word((TPower(TExp(0, self.torsion)),)),
            "main": Word(
                (Gen("x"), Gen("x"), TPower(TExp(1, -3)), Gen("x"), TPower(TExp(1, 0)))
            ),
        }

    def instantiate(self, w: Word) -> Word:
        """Evaluate symbolic t-exponents at this m and attach the torsion
        modulus, then reduce."""
        letters = []
        for letter in w.letters:
            if isinstance(letter, TPower):
                letters.append(TPower(TExp(0, letter.exp.evaluate(self.m))))
            else:
                letters.append(letter)
        return free_reduce(Word(tuple(letters), self.torsion))


# -- moves ------------------------------------------------------------------


@dataclass(frozen=True)
class InsertRelatorConjugate:
    position: int
    relator: str  # "main" or "torsion"
    conjugator: Word = Word(())
    inverted: bool = False


@dataclass(frozen=True)
class FreeReduce:
    pass


@dataclass(frozen=True)
class CyclicPermute:
    offset: int


Move = Union[InsertRelatorConjugate, FreeReduce, CyclicPermute]


@dataclass(frozen=True)
class MoveScript:
    script_id: str
    lhs: Word
    rhs: Word
    steps: tuple[Move, ...]
    quote: str = ""


@dataclass
class ScriptResult:
    ok: bool
    trace: list[str] = field(default_factory=list)
    final: Optional[Word] = None


def apply_move(p: RelativePresentation, w: Word, move: Move, index: int) -> Word:
    if isinstance(move, FreeReduce):
        return free_reduce(w)
    if isinstance(move, CyclicPermute):
        k = move.offset % max(1, len(w))
        return Word(w.letters[k:] + w.letters[:k], w.modulus)
    if isinstance(move, InsertRelatorConjugate):
        if not 0 <= move.position <= len(w):
            raise ScriptError(f"step {index}: insert position {move.position} out of range")
        relators = p.relators()
        if move.relator not in relators:
            raise ScriptError(f"step {index}: unknown relator {move.relator!r}")
        r = p.instantiate(relators[move.relator])
        if move.inverted:
            r = invert_word(r)
        c = p.instantiate(move.conjugator)
        chunk = concat(c, r, invert_word(c))
        letters = w.letters[: move.position] + chunk.letters + w.letters[move.position :]
        return Word(letters, w.modulus)
    raise ScriptError(f"step {index}: unknown move {move!r}")


def verify_script(
    p: RelativePresentation, lhs: Word, rhs: Word, script: Sequence[Move]
) -> ScriptResult:
    """Replay ``script`` starting from ``lhs``; succeed iff the result is
    freely equal to ``rhs``.  The trace records every intermediate word."""
    current = p.instantiate(lhs)
    target = p.instantiate(rhs)
    result = ScriptResult(ok=False, trace=[f"start: {current}"])
    for i, move in enumerate(script):
        current = apply_move(p, current, move, i)
        result.trace.append(f"after step {i} ({type(move).__name__}): {free_reduce(current)}")
    final = free_reduce(current)
    result.final = final
    result.ok = final.letters == target.letters
    result.trace.append(f"target: {target}")
    return result


# -- shipped scripts ---------------------------------------------------------


def _letters_from_json(items: list) -> Word:
    letters = []
    for it in items:
        kind = it[0]
        if kind == "x" or kind == "z":
            letters.append(Gen(kind, int(it[1])))
        elif kind == "t":
            letters.append(TPower(TExp(int(it[1][0]), int(it[1][1]))))
        elif kind == "corner":
            letters.append(Corner(it[1], int(it[2])))
        else:
            raise ValueError(f"bad letter spec {it!r}")
    return Word(tuple(letters))


def _letters_to_json(w: Word) -> list:
    out: list = []
    for letter in w.letters:
        if isinstance(letter, Gen):
            out.append([letter.name, letter.sign])
        elif isinstance(letter, TPower):
            out.append(["t", [letter.exp.coeff_m, letter.exp.const]])
        else:
            out.append(["corner", letter.name, letter.sign])
    return out


def _move_from_json(obj: dict) -> Move:
    op = obj.get("op")
    if op == "insert":
        return InsertRelatorConjugate(
            position=int(obj["position"]),
            relator=obj["relator"],
            conjugator=_letters_from_json(obj.get("conjugator", [])),
            inverted=bool(obj.get("inverted", False)),
        )
    if op == "reduce":
        return FreeReduce()
    if op == "cyclic_permute":
        return CyclicPermute(int(obj["offset"]))
    raise ValueError(f"bad move {obj!r}")


def load_script(path_or_id: Union[str, Path]) -> MoveScript:
    path = Path(path_or_id)
    if not path.suffix:
        path = data_path("scripts", f"{path_or_id}.json")
    doc = json.loads(Path(path).read_text())
    return MoveScript(
        script_id=doc["id"],
        lhs=_letters_from_json(doc["lhs"]),
        rhs=_letters_from_json(doc["rhs"]),
        steps=tuple(_move_from_json(s) for s in doc["steps"]),
        quote=doc.get("quote", ""),
    )


CONSEQUENCE_IDS = ("eq2", "eq3", "eq4", "eq5")


def verify_consequences(m: int, presentation: Optional[RelativePresentation] = None) -> dict:
    """Replay the shipped scripts for the four consequence identities of the
    relators (t^m x^-2 t^m = t^-3 x and friends) at a concrete m."""
    p = presentation if presentation is not None else RelativePresentation(m)
    report = {}
    for sid in CONSEQUENCE_IDS:
        script = load_script(sid)
        res = verify_script(p, script.lhs, script.rhs, script.steps)
        report[sid] = res
    return report


def verify_commutation_chain(m: int) -> ScriptResult:
    """Replay the shipped BA -> AB script (the four-rewrite chain)."""
    p = RelativePresentation(m)
    script = load_script("lemma21")
    res = verify_script(p, script.lhs, script.rhs, script.steps)
    if res.ok:
        ba = concat(element_B(m), element_A(m))
        ab = concat(element_A(m), element_B(m))
        res.ok = p.instantiate(script.lhs).letters == ba.letters and (
            p.instantiate(script.rhs).letters == ab.letters
        )
    return res


# -- the elements A and B ----------------------------------------------------


def element_A(m: int) -> Word:
    """A = x t^-3, reduced mod t^(2m)."""
    p = RelativePresentation(m)
    return p.instantiate(Word((Gen("x"), TPower(TExp(0, -3)))))


def element_B(m: int) -> Word:
    """B = t^m x t^(m+3) x t^(m-3), reduced mod t^(2m)."""
    p = RelativePresentation(m)
    return p.instantiate(
        Word(
            (
                TPower(TExp(1, 0)),
                Gen("x"),
                TPower(TExp(1, 3)),
                Gen("x"),
                TPower(TExp(1, -3)),
            )
        )
    )


def ab_power(alpha: int, beta: int, m: int) -> Word:
    return concat(word_pow(element_A(m), alpha), word_pow(element_B(m), beta))


# -- boundary words ----------------------------------------------------------


def _xc(*corners: str) -> tuple:
    """Helper: x followed by corner letters; 'name-' means inverse."""
    out: list = [Gen("x")]
    for c in corners:
        if c.endswith("-"):
            out.append(Corner(c[:-1], -1))
        else:
            out.append(Corner(c, 1))
    return tuple(out)


def boundary_word(alpha: int, beta: int) -> Word:
    """The corner-annotated boundary word for A^alpha B^beta.

    Cases (beta >= 0 assumed, as in the source derivation):
      alpha>0, beta>0 : (xc)^(alpha-1) xf (xdxe)^(beta-1) xdxf
      alpha<0, beta>0 : x^-1 (c^-1 x^-1)^(|alpha|-1) g (xdxe)^(beta-1) xdxh
      alpha>0, beta=0 : (xc)^alpha
      alpha=0, beta>0 : (xdxe)^beta
    """
    if beta < 0:
        raise ValueError("beta must be >= 0; invert the word to use beta > 0")
    if alpha == 0 and beta == 0:
        raise ValueError("(alpha, beta) = (0, 0) has no boundary word")
    if alpha < 0 and beta == 0:
        raise ValueError("alpha < 0 with beta = 0: invert to use alpha > 0")
    letters: list = []
    if beta == 0:
        letters.extend(_xc("c") * alpha)
        return Word(tuple(letters))
    xdxe = _xc("d") + _xc("e")
    if alpha == 0:
        letters.extend(xdxe * beta)
        return Word(tuple(letters))
    if alpha > 0:
        letters.extend(_xc("c") * (alpha - 1))
        letters.extend(_xc("f"))
        letters.extend(xdxe * (beta - 1))
        letters.extend(_xc("d") + _xc("f"))
        return Word(tuple(letters))
    # alpha < 0, beta > 0
    letters.append(Gen("x", -1))
    letters.extend((Corner("c", -1), Gen("x", -1)) * (-alpha - 1))
    letters.append(Corner("g", 1))
    letters.extend(xdxe * (beta - 1))
    letters.extend(_xc("d"))
    letters.append(Gen("x"))
    letters.append(Corner("h", 1))
    return Word(tuple(letters))


def substitute_corners(w: Word, m: int) -> Word:
    """Replace each corner letter by its t-power and reduce mod t^(2m)."""
    p = RelativePresentation(m)
    letters = []
    from .words import CORNER_EXPONENT

    for letter in w.letters:
        if isinstance(letter, Corner):
            letters.append(TPower(letter.sign * CORNER_EXPONENT[letter.name]))
        else:
            letters.append(letter)
    return p.instantiate(Word(tuple(letters)))


def boundary_word_matches(alpha: int, beta: int, m: int) -> bool:
    """Exact check that the substituted boundary word is a cyclic permutation
    of A^alpha B^beta."""
    expanded = substitute_corners(boundary_word(alpha, beta), m)
    return equal_up_to_rotation(expanded, ab_power(alpha, beta, m))


# -- Tietze check for E_24 ---------------------------------------------------


def tietze_e24_check(sub_const: int = -9) -> bool:
    """Substituting z = x t^(sub_const) into z t^9 z t^18 z t^21 (mod t^24)
    must return the E_24 relator x^2 t^9 x t^12; true only for sub_const
    equivalent to -9."""
    z_word = Word(
        (
            Gen("z"),
            TPower(TExp(0, 9)),
            Gen("z"),
            TPower(TExp(0, 18)),
            Gen("z"),
            TPower(TExp(0, 21)),
        )
    )
    substitution = (Gen("x"), TPower(TExp(0, sub_const)))
    letters: list = []
    for letter in z_word.letters:
        if isinstance(letter, Gen) and letter.name == "z":
            letters.extend(substitution)
        else:
            letters.append(letter)
    p = RelativePresentation(12)
    reduced = p.instantiate(Word(tuple(letters)))
    target = p.instantiate(p.relators()["main"])
    return reduced.letters == target.letters


# -- authoring helper (not part of the verification contract) ----------------


def discover_insertion(
    p: RelativePresentation, current: Word, target: Word, max_conjugator: int = 4
) -> Optional[InsertRelatorConjugate]:
    """Search for a single InsertRelatorConjugate turning ``current`` into a
    word freely equal to ``target``.

    For each position the inserted chunk is forced: it must freely equal
    prefix^-1 * target * suffix^-1; we then test whether that chunk is a
    conjugate of a relator with a short conjugator.
    """
    cur = p.instantiate(current)
    tgt = p.instantiate(target)
    for relator_name in ("main", "torsion"):
        r = p.instantiate(p.relators()[relator_name])
        for inverted in (False, True):
            rr = invert_word(r) if inverted else r
            rotations = [
                free_reduce(Word(rr.letters[i:] + rr.letters[:i], rr.modulus))
                for i in range(max(1, len(rr)))
            ]
            for pos in range(len(cur) + 1):
                prefix = Word(cur.letters[:pos], cur.modulus)
                suffix = Word(cur.letters[pos:], cur.modulus)
                chunk = concat(invert_word(prefix), tgt, invert_word(suffix))
                for rot_index, rot in enumerate(rotations):
                    if len(chunk) < len(rot):
                        continue
                    # peel conjugator: chunk = c . rot . c^-1
                    spare = len(chunk) - len(rot)
                    if spare % 2:
                        continue
                    c_len = spare // 2
                    if c_len > max_conjugator:
                        continue
                    c = Word(chunk.letters[:c_len], cur.modulus)
                    rebuilt = concat(c, rot, invert_word(c))
                    if rebuilt.letters != chunk.letters:
                        continue
                    # rot = s^-1 r s with s the peeled-off prefix of r
                    rot_conj = Word(rr.letters[:rot_index], rr.modulus)
                    conjugator = concat(c, invert_word(rot_conj))
                    if len(conjugator) > max_conjugator + len(rr):
                        continue
                    step = InsertRelatorConjugate(
                        position=pos,
                        relator=relator_name,
                        conjugator=conjugator,
                        inverted=inverted,
                    )
                    check = apply_move(p, cur, step, 0)
                    if free_reduce(check).letters == tgt.letters:
                        return step
    return None
