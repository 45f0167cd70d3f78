"""組み込み写像カタログと種数 4 の作用の表のテスト。"""

from __future__ import annotations

import pytest

from surfext.catalog.base_maps import find_entry, list_catalog_entries
from surfext.catalog.genus4 import ACTION_TABLE, Q1, Q2, Q3, Q4, Q5, TABLE_ORDER, compute_row, table_mismatches
from surfext.construct import builtin, list_builtins
from surfext.errors import UnknownBuiltin
from surfext.extend import decide, invariant_forms
from surfext.homology import standard_space
from surfext.quadform import arf, from_curve_values, pullback
from surfext.twist import action_of

WORD_MAPS = ["f3_3", "f3_7", "f3", "f3_prime"] + TABLE_ORDER
ALL_FIXED = ["f2_octagon", "w1_torus", "id_torus"] + WORD_MAPS

NAMED_FORMS = {"q1": Q1, "q2": Q2, "q3": Q3, "q4": Q4, "q5": Q5}
PRESERVED_BY = {
    "f4_1": "q1",
    "f4_2": "q1",
    "f4_3": "q2",
    "f4_4": "q2",
    "f4_5": "q1",
    "f4_6": "q1",
    "f4_7": "q1",
    "f4_8": "q3",
    "f4_9": "q2",
    "f4_10": "q4",
    "f4_11": "q2",
    "f4_12": "q5",
}


class TestGenusFourTable:
    def test_no_mismatches(self):
        assert table_mismatches() == []

    @pytest.mark.parametrize("name", TABLE_ORDER)
    def test_row(self, name):
        space = standard_space(4)
        computed = compute_row(name)
        assert len(computed) == 8
        for expected, actual in zip(ACTION_TABLE[name], computed):
            assert space.class_of(expected) == space.class_of(actual)

    def test_specific_cells(self):
        assert compute_row("f4_1")[7] == "c1+c2+c3+c4+c5+c6+c7+c8"
        assert compute_row("f4_9")[0] == "c2+c4"

    def test_detects_a_wrong_row(self):
        rows = {name: compute_row(name) for name in TABLE_ORDER}
        rows["f4_3"] = ("c1",) + rows["f4_3"][1:]
        mismatches = table_mismatches(rows)
        assert mismatches == [("f4_3", "c1", "c2", "c1")]

    @pytest.mark.parametrize("name", TABLE_ORDER)
    def test_every_map_is_extendable(self, name):
        assert decide(builtin(name).action).extendable

    @pytest.mark.parametrize("name, form", sorted(PRESERVED_BY.items()))
    def test_named_preserved_form(self, name, form):
        space = standard_space(4)
        built = builtin(name)
        forms = {key: from_curve_values(space, values) for key, values in NAMED_FORMS.items()}
        preserving = {key for key, q in forms.items() if pullback(q, built.action.matrix) == q}
        assert form in preserving
        assert built.preserved_form == forms[form]
        assert arf(built.preserved_form) == 0

    def test_f4_9_does_not_preserve_q1(self):
        space = standard_space(4)
        q1 = from_curve_values(space, Q1)
        assert pullback(q1, builtin("f4_9").action.matrix) != q1

    def test_f4_7_has_a_single_invariant_form(self):
        report = decide(builtin("f4_7").action)
        assert report.d == 0
        assert report.witness == from_curve_values(standard_space(4), Q1)
        assert report.unique_form == report.witness


class TestCatalog:
    @pytest.mark.parametrize("name", ALL_FIXED)
    def test_order_annihilates_action(self, name):
        built = builtin(name)
        assert (built.action ** built.order).is_identity()

    @pytest.mark.parametrize("name", WORD_MAPS)
    def test_preserved_form(self, name):
        built = builtin(name)
        q = built.preserved_form
        assert q is not None
        assert pullback(q, built.action.matrix) == q
        assert q in invariant_forms(built.action)
        expected = 1 if name in ("f3_7", "f3") else 0
        assert arf(q) == expected

    @pytest.mark.parametrize("name", WORD_MAPS)
    def test_word_source(self, name):
        built = builtin(name)
        assert built.source == "twist-word"
        assert built.word is not None
        assert built.action == action_of(built.word)

    def test_octagon_rotation(self):
        built = builtin("f2_octagon")
        assert built.source == "explicit-matrix"
        space = built.action.space
        assert built.action(space.curve("e4")) == space.curve("e1")
        report = decide(built.action)
        assert report.d == 1
        assert (report.arf_zero_count, report.arf_one_count) == (0, 2)

    def test_torus_maps(self):
        assert not decide(builtin("w1_torus").action).extendable
        assert builtin("id_torus").action.is_identity()

    def test_list_builtins(self):
        names = [name for name, _genus, _notes in list_builtins()]
        assert len(names) == len(set(names))
        for name in ALL_FIXED + ["hg(g)"]:
            assert name in names
        assert len(list_catalog_entries()) == len(names)

    def test_unknown_builtin(self):
        with pytest.raises(UnknownBuiltin) as info:
            builtin("f5_1")
        assert "f3_7" in str(info.value)

    def test_hg_entry_matches_arguments(self):
        entry = find_entry(" hg( 6 ) ")
        assert entry.NAME == "hg(g)"
        assert builtin("hg( 6 )").name == "hg(6)"
