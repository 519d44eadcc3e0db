import json

import pytest

from threecolor import (
    BitBudgetExceededError,
    build_T,
    choose_k,
    count_colorings_bruteforce,
    emit_report,
    eq3_check,
    gadget_pair_counts,
    lemma3_bound,
    report_to_json,
    report_to_text,
    theorem_chain_check,
    total_colorings,
)
from threecolor.bounds import CHECK_NAMES, int_to_decimal


class TestLemma3Bound:
    def test_values(self):
        assert lemma3_bound(1, 1) == 128  # 2^(2^2 + 3)
        assert lemma3_bound(1, 2) == 2 ** 17
        assert lemma3_bound(2, 2) == 2 ** 25

    def test_monotone_in_both_arguments(self):
        for k in range(1, 5):
            for ell in range(1, 5):
                assert lemma3_bound(k, ell) < lemma3_bound(k + 1, ell)
                assert lemma3_bound(k, ell) < lemma3_bound(k, ell + 1)

    def test_domain_and_budget(self):
        with pytest.raises(ValueError):
            lemma3_bound(1, 0)
        with pytest.raises(BitBudgetExceededError):
            lemma3_bound(3, 10, bit_budget=1000)


class TestEq3Check:
    def test_worked_level(self):
        r = eq3_check(1)
        assert r.k == 1
        assert r.c_total == 1056
        assert r.bound_exponent == 16
        assert r.total_bound_ok  # 1056 < 65536
        assert r.inner_total == 84
        assert r.inner_bound_ok  # 84 <= 3 * 2^6 = 192
        assert r.ok

    def test_inner_count_verified_by_oracle_at_small_levels(self):
        from threecolor import inner_subgraph

        for ell in (1, 2):
            sub, _ = inner_subgraph(build_T(1, ell, check=False))
            assert eq3_check(ell).inner_total == \
                count_colorings_bruteforce(sub, force=True)

    @pytest.mark.parametrize("ell", range(1, 7))
    def test_strict_inequality_holds(self, ell):
        assert eq3_check(ell).ok

    def test_ell0_rejected(self):
        with pytest.raises(ValueError):
            eq3_check(0)

    def test_budget_guard_precedes_dp(self):
        with pytest.raises(BitBudgetExceededError):
            eq3_check(8, bit_budget=10000)


class TestTheoremChain:
    def test_worked_level(self):
        row = theorem_chain_check(1)
        assert (row.ell, row.k, row.n) == (1, 1, 13)
        assert row.c_bits == 11  # 1056
        assert row.checks["n_ge_9half_ell"]  # 9 <= 26
        assert row.checks["c_le_2pow6_3ell"]  # 1056 <= 2^18
        assert row.ok

    def test_check_names_stable(self):
        assert set(theorem_chain_check(2).checks) == set(CHECK_NAMES)

    @pytest.mark.parametrize("ell", range(1, 9))
    def test_chain_passes(self, ell):
        row = theorem_chain_check(ell)
        assert row.k == choose_k(ell)
        assert row.ok, row.checks

    def test_ell0_rejected(self):
        with pytest.raises(ValueError):
            theorem_chain_check(0)

    def test_c_bits_matches_dp(self):
        row = theorem_chain_check(3)
        c = total_colorings(gadget_pair_counts(row.k, 3))
        assert row.c_bits == c.bit_length()

    def test_decimal_on_demand(self):
        row = theorem_chain_check(1, include_decimal=True)
        assert row.c_decimal == "1056"
        assert theorem_chain_check(1).c_decimal is None


class TestEmitReport:
    def test_single_row(self):
        report = emit_report(range(1, 2))
        assert len(report.rows) == 1
        assert report.rows[0].n == 13 and report.ok

    def test_six_rows_pass(self):
        report = emit_report(range(1, 7))
        assert len(report.rows) == 6
        assert report.ok

    def test_empty_range(self):
        report = emit_report(range(1, 1))
        assert report.rows == () and report.ok
        assert "empty report" in report_to_text(report)

    def test_budget_error_isolated_per_row(self):
        # eq3 exponents: 12844 bits at ell=7, 34436 at ell=8
        report = emit_report(range(7, 10), bit_budget=30000)
        assert [row.error is None for row in report.rows] == [True, False, False]
        assert report.rows[0].ok and not report.ok
        assert "ERROR" in report_to_text(report)

    def test_json_schema(self):
        doc = json.loads(report_to_json(emit_report(range(1, 3))))
        assert doc["version"] == 1
        assert [row["ell"] for row in doc["rows"]] == [1, 2]
        for row in doc["rows"]:
            assert set(row) == {"ell", "k", "n", "c_bits", "checks"}
            assert set(row["checks"]) == set(CHECK_NAMES)
            assert all(isinstance(v, bool) for v in row["checks"].values())

    def test_json_decimal_roundtrip(self):
        doc = json.loads(report_to_json(emit_report(range(1, 2), include_decimal=True)))
        assert doc["rows"][0]["c_decimal"] == "1056"

    def test_text_table_lists_all_checks(self):
        text = report_to_text(emit_report(range(1, 2)))
        for name in CHECK_NAMES:
            assert name in text
        assert "all checks pass" in text


class TestIntToDecimal:
    def test_small(self):
        assert int_to_decimal(1056) == "1056"

    def test_huge_value_converts(self):
        # exceeds the default int-to-str cap of newer interpreters
        big = 1 << 40000
        text = int_to_decimal(big)
        assert len(text) == 12042  # floor(40000*log10(2)) + 1
        assert int(text) == big
