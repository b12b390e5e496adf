from hypothesis import given, settings
from hypothesis import strategies as st

from cycpres.stargraph import (
    ALL_M,
    EXCLUDED_M,
    GRAPH_VARIANTS,
    INTERIOR,
    M_5_15,
    PART_IV_FAMILIES,
    LabelQuery,
    MSolution,
    enumerate_labels,
    enumerate_labels_bruteforce,
    lemma32_report,
    load_graph,
    part_queries,
    solve_m,
    solve_m_raw,
)
from cycpres.words import TExp, canonical_cyclic, parse_corners


class TestSolveM:
    def test_even_coefficient_all(self):
        assert solve_m(TExp(2, 0)) == MSolution(all_m=True)
        assert solve_m(TExp(-4, 0)).all_m

    def test_exclusion_examples(self):
        assert solve_m(TExp(1, -6)).is_empty()
        assert solve_m_raw(TExp(1, -6)) == frozenset({2, 6})
        assert solve_m(TExp(1, 15)) == M_5_15
        assert solve_m_raw(TExp(1, 15)) == frozenset({1, 3, 5, 15})
        assert solve_m_raw(TExp(1, 15)) - {1} == frozenset({3, 5, 15})

    def test_odd_coefficient_zero_const(self):
        assert solve_m(TExp(1, 0)).is_empty()
        assert solve_m_raw(TExp(3, 0)) == frozenset()

    def test_even_coefficient_finite(self):
        # 2m | 12: m in {1, 2, 3, 6}, all excluded
        assert solve_m_raw(TExp(0, 12)) == frozenset({1, 2, 3, 6})
        assert solve_m(TExp(0, 12)).is_empty()
        assert solve_m(TExp(2, 30)).values == frozenset({5, 15})

    @given(
        st.integers(min_value=-6, max_value=6),
        st.integers(min_value=-40, max_value=40),
    )
    @settings(max_examples=200, deadline=None)
    def test_inversion_invariance_and_correctness(self, coeff, const):
        e = TExp(coeff, const)
        assert solve_m(e) == solve_m(-e)
        raw = solve_m_raw(e)
        check_to = 100
        if raw == "all":
            members = set(range(1, check_to + 1))
        else:
            members = set(raw)
        for m in range(1, check_to + 1):
            expected = (coeff * m + const) % (2 * m) == 0
            assert (m in members) == expected, (coeff, const, m)


class TestGraphData:
    def test_figure_variants_present(self):
        v = load_graph("fig_a_v")
        vi = load_graph("fig_a_vi")
        assert v.letters() == {"a", "b", "c", "d", "e", "f", "lam", "mu"}
        assert vi.letters() == {"a", "b", "c", "d", "e", "g", "h", "lam", "mu"}
        assert load_graph("fig_a_v_beta0").letters() == {"a", "b", "c", "lam", "mu"}
        assert load_graph("fig_a_vi_alpha0").letters() == {"a", "b", "d", "e", "lam", "mu"}

    def test_lam_mu_direction_restricted(self):
        for name in GRAPH_VARIANTS:
            for edge in load_graph(name).edges:
                if edge.label in ("lam", "mu"):
                    assert edge.directed
                else:
                    assert not edge.directed

    def test_loops_only_in_vi(self):
        vi = load_graph("fig_a_vi")
        loops = {e.label for e in vi.edges if e.src == e.dst}
        assert loops == {"g", "h"}


class TestEnumeration:
    def test_interior_degree_8(self):
        q = LabelQuery("fig_a_v", 8, INTERIOR)
        found = enumerate_labels(q)
        expected = {
            canonical_cyclic(parse_corners(s)): ALL_M
            for s in ("b mu b mu", "a b- lam a- b mu", "a b- lam a- lam b-")
        }
        assert found == expected

    def test_no_inverted_lam_mu_in_labels(self):
        for part in ("i", "ii", "iii"):
            for q in part_queries(part):
                for cw in enumerate_labels(q):
                    for letter in cw.rep.letters:
                        if letter.name in ("lam", "mu"):
                            assert letter.sign == 1

    def test_two_node_labels_have_even_length(self):
        for part, loopless in (("i", True), ("ii", True)):
            for q in part_queries(part):
                for cw in enumerate_labels(q):
                    assert len(cw) % 2 == 0

    def test_part_iii_loops_allow_odd_length(self):
        found = {}
        for q in part_queries("iii"):
            found.update(enumerate_labels(q))
        lengths = sorted(len(cw) for cw in found)
        assert lengths == [2, 3, 3, 3, 3]

    def test_pattern_query(self):
        boundary = frozenset({"c", "d", "e"})
        q = LabelQuery(
            "fig_a_v", 8, INTERIOR | boundary, boundary, 1,
            pattern=parse_corners("a mu a mu"),
        )
        found = {cw for cw in enumerate_labels(q) if len(cw) == 8}
        expected = {
            canonical_cyclic(parse_corners("a mu a mu " + completion))
            for completion, _ in PART_IV_FAMILIES["a mu a mu"]
        }
        assert found == expected


class TestLemma32Report:
    def test_all_parts_pass(self):
        reports = lemma32_report()
        assert set(reports) == {
            "i", "ii", "iii",
            "iv:a mu a mu", "iv:a- b a- b", "iv:b a- b a-", "iv:mu a mu a",
        }
        for part, rep in reports.items():
            assert rep.ok, (part, rep.missing, rep.extra, rep.flag_mismatches)

    def test_part_counts(self):
        reports = lemma32_report()
        assert len(reports["i"].found) == 3
        assert len(reports["ii"].found) == 14
        assert len(reports["iii"].found) == 5
        # the a mu a mu family lists five completions of which two spell the
        # same cyclic word, so four distinct labels; same for mu a mu a
        assert len(reports["iv:a mu a mu"].found) == 4
        assert len(reports["iv:a- b a- b"].found) == 5
        assert len(reports["iv:b a- b a-"].found) == 5
        assert len(reports["iv:mu a mu a"].found) == 4

    def test_flagged_labels(self):
        reports = lemma32_report()
        flagged = {
            part: sorted(str(cw) for cw, sol in rep.found.items() if sol == M_5_15)
            for part, rep in reports.items()
            if part.startswith("iv")
        }
        assert {len(v) for v in flagged.values()} == {1, 2}
        assert len(flagged["iv:a mu a mu"]) == 1
        assert len(flagged["iv:a- b a- b"]) == 2
        assert len(flagged["iv:b a- b a-"]) == 2
        assert len(flagged["iv:mu a mu a"]) == 1


class TestOracle:
    def test_oracle_agrees_on_lemma_queries(self):
        for part in ("i", "ii", "iii"):
            for q in part_queries(part):
                assert enumerate_labels(q) == enumerate_labels_bruteforce(q)

    def test_oracle_agrees_on_subgraph_variants(self):
        for variant in ("fig_a_v_beta0", "fig_a_vi_alpha0"):
            q = LabelQuery(variant, 6, INTERIOR)
            assert enumerate_labels(q) == enumerate_labels_bruteforce(q)
