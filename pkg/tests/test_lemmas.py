from __future__ import annotations

import pytest

from palfact.extremal import k_formula
from palfact.factorization import measure
from palfact.lemmas import (
    LemmaReport,
    M_CONSTANTS,
    ksum_property,
    verify_case_lemma,
    verify_lemma1,
    verify_lemma7,
    verify_lemma8,
    verify_lemma9,
)
from palfact.words import family


class TestLemma1:
    def test_passes_with_standard_depth(self):
        report = verify_lemma1(8)
        assert report.passed
        assert report.cases == 6 + 9 * 6  # witnesses + bound checks

    def test_explicit_witness_for_longest_suffix(self):
        blocks = ("a", "aba", "bb", "baab")
        assert "".join(blocks) == family("W", 0).text + "bbaab"
        assert all(b == b[::-1] for b in blocks)
        assert measure("".join(blocks)) <= len(blocks)

    def test_first_step_bound(self):
        assert measure(family("W", 1)) <= 2 + M_CONSTANTS[0]
        assert measure(family("W", 1)) == 4

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            verify_lemma1(-1)

    def test_family_bounds_never_exceed_the_closed_form(self):
        # the family words witness the closed form from below: their exact
        # measures stay <= k_formula, with equality everywhere except the
        # residue the capped family V covers, and the exceptional length 11
        for n in range(0, 9):
            for suffix in ("", "b", "bb", "bba", "bbaa", "bbaab"):
                word = family("W", n).text + suffix
                m = measure(word)
                formula = k_formula(len(word))
                assert m <= formula
                if suffix != "bba" and len(word) != 11:
                    assert m == formula


class TestCaseLemmas:
    def test_lemma2(self):
        report = verify_case_lemma(2)
        assert report.passed
        assert report.cases == 3 * 64

    def test_lemma3(self):
        report = verify_case_lemma(3)
        assert report.passed
        assert report.cases == 3 * sum(1 << lu for lu in range(12, 18))

    def test_lemma4(self):
        report = verify_case_lemma(4)
        assert report.passed
        assert report.cases == 1 << 17

    def test_unknown_id_rejected(self):
        with pytest.raises(ValueError):
            verify_case_lemma(5)


class TestLemma7:
    def test_standard_depth(self):
        report = verify_lemma7(10)
        assert report.passed

    def test_case_count_includes_reduction_target(self):
        report = verify_lemma7(2)
        # n = 1..2 plus the length-5 and length-6 windows of (bbaaba)^2
        assert report.cases == 2 + 8 + 7

    def test_rejects_small(self):
        with pytest.raises(ValueError):
            verify_lemma7(1)


class TestLemma8:
    def test_standard_depth(self):
        report = verify_lemma8(6)
        assert report.passed

    def test_base_values(self):
        assert measure(family("U", 8)) == 3
        assert measure(family("U", 9)) == 4
        assert measure(family("U", 10)) == 4

    def test_first_period(self):
        assert measure(family("U", 11)) == 4
        assert [measure(family("U", n)) for n in range(11, 17)] == [4, 5, 5, 5, 6, 6]

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            verify_lemma8(0)


class TestLemma9:
    def test_standard_depth(self):
        assert verify_lemma9(5).passed

    def test_base_values(self):
        assert measure(family("V", 0)) == 6
        assert len(family("V", 0)) == 14
        assert measure(family("V", 1)) == 8


class TestKsum:
    def test_standard_run(self):
        report = ksum_property(10_000, seed=42)
        assert report.passed
        assert report.cases == 10_000

    def test_reproducible(self):
        assert ksum_property(500, seed=7) == ksum_property(500, seed=7)

    def test_equality_when_tuples_coincide(self):
        # l = p and x = a forces equality of the weighted sums
        a = [3, 0, 5, 2]
        lhs = sum((k + 1) * v for k, v in enumerate(a))
        assert lhs == sum((k + 1) * v for k, v in enumerate(a))

    def test_forced_equality_case(self):
        x = (1, 3)
        a = (1, 3)
        assert sum((k + 1) * v for k, v in enumerate(x)) == 7
        assert sum((k + 1) * v for k, v in enumerate(a)) == 7

    def test_rejects_zero_trials(self):
        with pytest.raises(ValueError):
            ksum_property(0, seed=1)


class TestReportShape:
    def test_fail_reports_carry_counterexamples(self):
        report = LemmaReport("demo", {}, 1, ({"word": "ab"},))
        assert not report.passed
        assert report.verdict == "fail"
        assert report.counterexamples

    def test_pass_reports_do_not(self):
        report = LemmaReport("demo", {}, 1)
        assert report.passed
        assert report.verdict == "pass"

    def test_reports_reproducible(self):
        assert verify_lemma8(3) == verify_lemma8(3)
        assert verify_case_lemma(2) == verify_case_lemma(2)
