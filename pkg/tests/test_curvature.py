import json
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cycpres.curvature import (
    KQuantity,
    LedgerError,
    check_assertion,
    curvature,
    eval_expr,
    k_power,
    pi_times,
    positive_triangles,
    run_ledger,
)
from cycpres.resources import data_path


class TestCurvature:
    def test_values(self):
        assert curvature((4, 4, 8)) == pi_times(Fraction(1, 4))
        assert curvature((4, 6, 10)) == pi_times(Fraction(1, 30))
        assert curvature((4, 6, 6)) == pi_times(Fraction(1, 6))
        assert curvature((4, 6, 8)) == pi_times(Fraction(1, 12))

    def test_symbolic_triangle(self):
        c = curvature((4, 4, "k"))
        assert c == KQuantity(km1=Fraction(2), pi_deg=1)

    def test_symbolic_matches_evaluation(self):
        sym = curvature((4, 4, "k"))
        for k in range(4, 201, 2):
            assert sym.at(k) == curvature((4, 4, k)).k0

    def test_rejects_degree_below_two(self):
        with pytest.raises(ValueError):
            curvature((1, 4, 4))

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            curvature(())

    @given(st.lists(st.integers(2, 30), min_size=1, max_size=5))
    @settings(max_examples=100, deadline=None)
    def test_permutation_invariant(self, degrees):
        base = curvature(tuple(degrees))
        for perm in list(permutations(degrees))[:6]:
            assert curvature(perm) == base


class TestPositiveTriangles:
    def test_up_to_12(self):
        expected = [
            (4, 4, 4), (4, 4, 6), (4, 4, 8), (4, 4, 10), (4, 4, 12),
            (4, 6, 6), (4, 6, 8), (4, 6, 10),
        ]
        assert sorted(positive_triangles(12)) == expected

    def test_flat_cases_excluded(self):
        tri = positive_triangles(12)
        assert (4, 6, 12) not in tri
        assert (6, 6, 6) not in tri

    def test_up_to_200_is_the_family(self):
        expected = {(4, 4, k) for k in range(4, 201, 2)}
        expected |= {(4, 6, 6), (4, 6, 8), (4, 6, 10)}
        assert set(positive_triangles(200)) == expected

    def test_rejects_odd_bound(self):
        with pytest.raises(ValueError):
            positive_triangles(13)


class TestKQuantity:
    def test_product_of_linear_and_inverse_forms(self):
        # (k - 3) * (2pi/k - pi/6) stays within powers -1, 0, 1
        linear = KQuantity(k1=Fraction(1), k0=Fraction(-3), pi_deg=0)
        form = KQuantity(k0=Fraction(-1, 6), km1=Fraction(2), pi_deg=1)
        prod = linear * form
        assert prod == KQuantity(
            k1=Fraction(-1, 6), k0=Fraction(5, 2), km1=Fraction(-6), pi_deg=1
        )

    def test_product_outside_span_rejected(self):
        linear = KQuantity(k1=Fraction(1), pi_deg=0)
        with pytest.raises(ValueError):
            linear * linear

    def test_pi_degree_rejected_above_one(self):
        with pytest.raises(ValueError):
            pi_times(1) * pi_times(1)

    def test_mixed_pi_degree_addition_rejected(self):
        with pytest.raises(ValueError):
            pi_times(1) + k_power(0)


class TestLedger:
    def test_shipped_ledger_passes(self):
        report = run_ledger()
        assert len(report.results) >= 35
        assert report.ok, [r.assertion_id for r in report.failures()]

    def test_named_acceptance_assertions_present(self):
        report = run_ledger()
        ids = {r.assertion_id for r in report.results}
        for required in (
            "claim1-d-xi",       # c(6,6,10) + pi/12 + pi/30 < 0
            "claim1-c-vi",       # c(6,8,8) + 2 pi/12 = 0
            "claim2-29-60",      # 29 pi/60 < pi/2
            "tau-star-identity", # (19 - k) pi/6
            "tau-adj-15-paper",  # (15 - k1) pi/6 <= 11 pi/6
            "tau-adj-16",        # (16 - k1) pi/6
            "cstar-5pi",         # 7 pi/3 + 5 pi/2 < 5 pi
            "cstar-3pi-bound",   # pi/2 + 5 pi/2 <= 3 pi
        ):
            assert required in ids

    def test_tampered_assertion_fails(self, tmp_path):
        docs = json.loads(data_path("ledger", "inequalities.json").read_text())
        docs[0]["expr_rhs"] = {"pi_rat": [999, 1]}
        bad = tmp_path / "tampered.json"
        bad.write_text(json.dumps(docs))
        report = run_ledger(bad)
        assert not report.ok
        assert len(report.failures()) == 1

    def test_symbolic_point_evaluation(self):
        doc = {
            "id": "point",
            "expr_lhs": {"c": [4, 4, "k"]},
            "rel": "=",
            "expr_rhs": {"pi_rat": [1, 4]},
            "k_range": [8, 8],
        }
        assert check_assertion(doc).ok

    def test_symbolic_range_analysis(self):
        # 2pi/k - pi/4 <= 0 exactly for k >= 8
        doc = {
            "id": "range",
            "expr_lhs": {"c": ["k", 4, 4]},
            "rel": "<=",
            "expr_rhs": {"pi_rat": [1, 4]},
            "k_range": [8],
        }
        assert check_assertion(doc).ok
        doc["k_range"] = [7]
        assert not check_assertion(doc).ok

    def test_symbolic_without_range_rejected(self):
        doc = {
            "id": "bad",
            "expr_lhs": {"c": [4, 4, "k"]},
            "rel": "<",
            "expr_rhs": {"pi_rat": [1, 1]},
        }
        with pytest.raises(LedgerError):
            check_assertion(doc)

    def test_unknown_node_rejected(self):
        with pytest.raises(LedgerError):
            eval_expr({"what": []})
