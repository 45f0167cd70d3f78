"""不変形式の族と拡張可能性の判定のテスト。"""

from __future__ import annotations

import logging

import pytest

from surfext import extend
from surfext.errors import NotUnique
from surfext.extend import (
    arf_profile,
    arf_shortcut,
    decide,
    invariant_forms,
    shortcut_budget,
    unique_form,
)
from surfext.homology import standard_space
from surfext.quadform import QuadraticForm, arf, enumerate_all, from_curve_values, pullback
from surfext.twist import HomologyAction, action_of, parse_word, random_symplectic

F33_WORD = "T(c1) T(c2) T(c3) T(c4) T(c5) T(c6) T(c7)"
F37_WORD = "T(d1) T(c3) T(c4) T(c5) T(c2) T(c3) T(c4) T(c5) T(c6)"
CHAIN3 = [f"c{i}" for i in range(1, 7)]


def _chain_form(values):
    return from_curve_values(standard_space(3), dict(zip(CHAIN3, values)))


def _brute_force_invariant(action):
    return {q for q in enumerate_all(action.space) if pullback(q, action.matrix) == q}


class TestInvariantForms:
    def test_chain_rotation_family(self):
        family = invariant_forms(action_of(parse_word(3, F33_WORD)))
        assert family.d == 1
        assert set(family) == {_chain_form([0] * 6), _chain_form([1] * 6)}
        assert all(arf(q) == 0 for q in family)

    def test_genus_three_period_eight_family(self):
        family = invariant_forms(action_of(parse_word(3, F37_WORD)))
        assert family.d == 1
        assert set(family) == {_chain_form([0, 1, 1, 1, 1, 1]), _chain_form([1, 0, 0, 0, 0, 1])}
        assert all(arf(q) == 1 for q in family)

    def test_identity_family(self):
        family = invariant_forms(HomologyAction.identity(standard_space(2)))
        assert family.d == 4
        assert len(family) == 16
        assert set(family) == set(enumerate_all(standard_space(2)))

    def test_members_are_distinct_and_invariant(self, random_action):
        for genus in (1, 2, 3):
            action = random_action(standard_space(genus))
            family = invariant_forms(action)
            members = list(family)
            assert len(members) == len(set(members)) == 2 ** family.d
            for q in members:
                assert q in family
                assert pullback(q, action.matrix) == q

    def test_matches_brute_force(self, random_action):
        for i in range(200):
            action = random_action(standard_space(1 + i % 3))
            family = invariant_forms(action)
            brute = _brute_force_invariant(action)
            assert set(family) == brute
            report = decide(action)
            assert report.extendable == any(arf(q) == 0 for q in brute)
            assert report.arf_zero_count == sum(1 for q in brute if arf(q) == 0)
            assert report.arf_one_count == sum(1 for q in brute if arf(q) == 1)

    def test_contains_rejects_other_space(self):
        family = invariant_forms(HomologyAction.identity(standard_space(2)))
        assert QuadraticForm.from_dict(standard_space(1), {"a1": 0, "b1": 0}) not in family
        assert "a1=0" not in family


class TestShortcut:
    def test_budget(self):
        assert [shortcut_budget(d) for d in range(5)] == [1, 2, 4, 7, 11]

    def test_agrees_with_enumeration(self, random_action):
        for i in range(200):
            action = random_action(standard_space(1 + i % 4))
            family = invariant_forms(action)
            values = {arf(q) for q in family}
            assert arf_shortcut(family) == (0 in values)
            assert arf_profile(family) == (0 in values, 1 in values)

    def test_number_of_arf_evaluations(self, monkeypatch, random_action):
        calls = []

        def counting_arf(q):
            calls.append(q)
            return arf(q)

        monkeypatch.setattr(extend, "arf", counting_arf)
        for genus in (2, 3, 4):
            for _ in range(20):
                family = invariant_forms(random_action(standard_space(genus)))
                calls.clear()
                arf_shortcut(family)
                assert 1 <= len(calls) <= shortcut_budget(family.d)

    def test_identity_has_both_values(self):
        family = invariant_forms(HomologyAction.identity(standard_space(3)))
        assert arf_profile(family) == (True, True)


class TestUniqueForm:
    def test_torus_period_six(self):
        action = HomologyAction.from_text(standard_space(1), "01;11")
        q = unique_form(action)
        assert q.to_dict() == {"a1": 1, "b1": 1}
        assert arf(q) == 1
        report = decide(action)
        assert report.d == 0
        assert report.unique_form == q
        assert not report.extendable

    def test_identity_is_not_unique(self):
        with pytest.raises(NotUnique):
            unique_form(HomologyAction.identity(standard_space(2)))

    def test_unique_form_is_the_only_invariant_form(self, rng):
        found = 0
        for _ in range(3000):
            space = standard_space(int(rng.integers(1, 4)))
            action = random_symplectic(space, rng, 3 * space.genus + 3)
            if invariant_forms(action).d != 0:
                continue
            found += 1
            q = unique_form(action)
            assert _brute_force_invariant(action) == {q}
            assert decide(action).extendable == (arf(q) == 0)
            if found >= 50:
                break
        assert found >= 50


class TestDecide:
    def test_chain_rotation_is_extendable(self):
        report = decide(action_of(parse_word(3, F33_WORD)))
        assert report.extendable
        assert (report.arf_zero_count, report.arf_one_count) == (2, 0)
        assert report.witness == _chain_form([0] * 6)

    def test_genus_three_period_eight_is_not_extendable(self):
        report = decide(action_of(parse_word(3, F37_WORD)))
        assert not report.extendable
        assert report.witness is None
        assert (report.arf_zero_count, report.arf_one_count) == (0, 2)

    def test_identity(self):
        report = decide(HomologyAction.identity(standard_space(2)))
        assert report.extendable
        assert report.invariant_count == 16
        assert (report.arf_zero_count, report.arf_one_count) == (10, 6)
        assert report.witness.to_dict() == {"a1": 0, "b1": 0, "a2": 0, "b2": 0}
        assert report.unique_form is None

    def test_witness_is_lexicographically_smallest(self, random_action):
        for i in range(50):
            action = random_action(standard_space(1 + i % 3))
            report = decide(action)
            zeros = [q for q in invariant_forms(action) if arf(q) == 0]
            if zeros:
                assert report.witness == min(zeros, key=lambda q: q.sort_key())

    def test_conjugation_invariance(self, random_action):
        for i in range(50):
            space = standard_space(1 + i % 3)
            f = random_action(space)
            h = random_action(space)
            conjugate = h @ f @ (h ** -1)
            a, b = decide(f), decide(conjugate)
            assert (a.extendable, a.d, a.arf_zero_count) == (b.extendable, b.d, b.arf_zero_count)

    def test_cap_falls_back_to_shortcut(self, caplog):
        action = HomologyAction.identity(standard_space(3))
        with caplog.at_level(logging.WARNING, logger="surfext.extend"):
            report = decide(action, cap=2)
        assert report.d == 6
        assert not report.enumerated
        assert report.arf_zero_count is None and report.arf_one_count is None
        assert report.extendable
        assert arf(report.witness) == 0
        assert any("d=6" in r.getMessage() for r in caplog.records)

    def test_cap_from_environment(self, monkeypatch):
        monkeypatch.setenv("SURFEXT_ENUM_CAP", "1")
        report = decide(HomologyAction.identity(standard_space(2)))
        assert not report.enumerated

    def test_to_dict(self):
        report = decide(HomologyAction.from_text(standard_space(1), "01;11"))
        data = report.to_dict()
        assert data["extendable"] is False
        assert data["d"] == 0
        assert data["witness"] is None
        assert data["unique_form"] == {"a1": 1, "b1": 1}
        assert data["enumerated"] is True
