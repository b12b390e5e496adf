import random

import pytest

from cycpres.rewrite import (
    CONSEQUENCE_IDS,
    InsertRelatorConjugate,
    RelativePresentation,
    ScriptError,
    ab_power,
    apply_move,
    boundary_word,
    boundary_word_matches,
    discover_insertion,
    element_A,
    element_B,
    load_script,
    substitute_corners,
    tietze_e24_check,
    verify_commutation_chain,
    verify_consequences,
    verify_script,
)
from cycpres.words import (
    Corner,
    Gen,
    TExp,
    TPower,
    Word,
    concat,
    equal_up_to_rotation,
    free_reduce,
    invert_word,
    word,
    x,
    t,
)

CHAIN_MS = (5, 7, 8, 10, 11)


class TestElements:
    def test_element_a(self):
        assert element_A(5) == free_reduce(word([x(), t(-3)], modulus=10))

    def test_element_b_at_5(self):
        # t^5 x t^8 x t^2 (exponents reduced into (-5, 5])
        expected = free_reduce(word([t(5), x(), t(8), x(), t(2)], modulus=10))
        assert element_B(5) == expected

    def test_a_times_a_inverse(self):
        a = element_A(7)
        assert concat(a, invert_word(a)).letters == ()


class TestConsequenceScripts:
    @pytest.mark.parametrize("m", list(range(1, 51)))
    def test_all_m_up_to_50(self, m):
        report = verify_consequences(m)
        assert set(report) == set(CONSEQUENCE_IDS)
        assert all(res.ok for res in report.values()), {
            k: res.ok for k, res in report.items()
        }

    def test_tampered_torsion_relator_fails(self):
        bad = RelativePresentation(5, torsion_exponent=11)  # t^(2m+1)
        report = verify_consequences(5, presentation=bad)
        assert not report["eq2"].ok

    def test_empty_script_identity(self):
        p = RelativePresentation(5)
        w = word([x(), t(3)])
        assert verify_script(p, w, w, []).ok

    def test_malformed_position_rejected_with_index(self):
        p = RelativePresentation(5)
        script = [InsertRelatorConjugate(position=99, relator="main")]
        with pytest.raises(ScriptError, match="step 0"):
            verify_script(p, word([x()]), word([x()]), script)

    def test_unknown_relator_rejected(self):
        p = RelativePresentation(5)
        script = [InsertRelatorConjugate(position=0, relator="nope")]
        with pytest.raises(ScriptError, match="step 0"):
            verify_script(p, word([x()]), word([x()]), script)


class TestCommutationChain:
    @pytest.mark.parametrize("m", CHAIN_MS)
    def test_ba_equals_ab(self, m):
        res = verify_commutation_chain(m)
        assert res.ok, res.trace

    def test_trace_records_intermediates(self):
        res = verify_commutation_chain(5)
        # 8 steps plus the start and target lines
        assert len(res.trace) == 10

    def test_symbolic_replay(self):
        """Replay the chain with symbolic exponents: t^(2m) = 1 applied by
        parity only, no concrete m anywhere."""
        p = RelativePresentation(5)  # only used for relator shapes
        script = load_script("lemma21")
        current = free_reduce(script.lhs, symbolic_torsion=True)
        relators = p.relators()
        for step in script.steps:
            if isinstance(step, InsertRelatorConjugate):
                r = relators[step.relator]
                if step.relator == "torsion":
                    r = Word((TPower(TExp(2, 0)),))
                if step.inverted:
                    r = invert_word(r)
                chunk = Word(
                    step.conjugator.letters + r.letters + invert_word(step.conjugator).letters
                )
                current = Word(
                    current.letters[: step.position]
                    + chunk.letters
                    + current.letters[step.position :]
                )
            current = free_reduce(current, symbolic_torsion=True)
        target = free_reduce(script.rhs, symbolic_torsion=True)
        assert current.letters == target.letters


class TestBoundaryWords:
    def test_case_shapes(self):
        assert boundary_word(1, 0).letters == (Gen("x"), Corner("c", 1))
        assert boundary_word(0, 1).letters == (
            Gen("x"),
            Corner("d", 1),
            Gen("x"),
            Corner("e", 1),
        )
        assert boundary_word(1, 1).letters == (
            Gen("x"),
            Corner("f", 1),
            Gen("x"),
            Corner("d", 1),
            Gen("x"),
            Corner("f", 1),
        )

    def test_one_one_equals_ab_at_5(self):
        expanded = substitute_corners(boundary_word(1, 1), 5)
        assert equal_up_to_rotation(expanded, ab_power(1, 1, 5))

    def test_envelope(self):
        for m in CHAIN_MS:
            for alpha in range(-3, 4):
                for beta in range(1, 4):
                    assert boundary_word_matches(alpha, beta, m), (alpha, beta, m)
            for alpha in range(1, 4):
                assert boundary_word_matches(alpha, 0, m), (alpha, m)

    def test_rejections(self):
        with pytest.raises(ValueError):
            boundary_word(0, 0)
        with pytest.raises(ValueError):
            boundary_word(1, -1)
        with pytest.raises(ValueError):
            boundary_word(-1, 0)


class TestTietze:
    def test_standard_substitution(self):
        assert tietze_e24_check()

    def test_negative_control(self):
        assert not tietze_e24_check(-8)


class TestMovesPreserveElements:
    def test_insertions_are_relator_conjugates(self):
        """Random insert moves produce words whose extra content is a
        conjugate of a relator, so the represented element is unchanged;
        check by inverting the insertion."""
        rng = random.Random(4)
        p = RelativePresentation(7)
        for _ in range(100):
            letters = []
            for _ in range(rng.randint(0, 6)):
                if rng.random() < 0.5:
                    letters.append(x(rng.choice((1, -1))))
                else:
                    letters.append(t(rng.randint(-6, 6)))
            w = p.instantiate(word(letters))
            conj = p.instantiate(
                word([x(rng.choice((1, -1))), t(rng.randint(-3, 3))])
            )
            move = InsertRelatorConjugate(
                position=rng.randint(0, len(w)),
                relator=rng.choice(["main", "torsion"]),
                conjugator=conj,
                inverted=rng.choice([True, False]),
            )
            w2 = free_reduce(apply_move(p, w, move, 0))
            # undo: insert the inverse conjugate at the same cyclic position
            # and check the pair cancels to the original word
            r = p.instantiate(p.relators()[move.relator])
            if move.inverted:
                r = invert_word(r)
            chunk = concat(conj, r, invert_word(conj))
            rebuilt = free_reduce(
                Word(
                    w.letters[: move.position]
                    + chunk.letters
                    + invert_word(chunk).letters
                    + w.letters[move.position :],
                    w.modulus,
                )
            )
            assert rebuilt.letters == w.letters

    def test_reduction_commutes_with_insertion_order(self):
        p = RelativePresentation(6)
        w = p.instantiate(word([x(), t(2), x(-1)]))
        move = InsertRelatorConjugate(position=1, relator="main", conjugator=word([x(-1)]))
        once = free_reduce(apply_move(p, w, move, 0))
        again = free_reduce(apply_move(p, free_reduce(w), move, 0))
        assert once == again


class TestDiscovery:
    def test_rediscovers_consequence_steps(self):
        p = RelativePresentation(7)
        for sid in CONSEQUENCE_IDS:
            script = load_script(sid)
            lhs = p.instantiate(script.lhs)
            rhs = p.instantiate(script.rhs)
            step = discover_insertion(p, lhs, rhs)
            assert step is not None
            assert free_reduce(apply_move(p, lhs, step, 0)).letters == rhs.letters
