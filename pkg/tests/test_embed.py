"""埋め込みの語の構成のテスト。"""

from __future__ import annotations

import numpy as np
import pytest

from surfext.embed import (
    embedding_for,
    extendable_with,
    induced_form,
    synthesize,
    verify_recipe,
)
from surfext.errors import NotBounding
from surfext.gf2 import Gf2Vec
from surfext.homology import standard_space
from surfext.quadform import QuadraticForm, arf, enumerate_all, pullback, zero_form
from surfext.twist import HomologyAction, action_of, parse_word


def _form(genus, values):
    return QuadraticForm(standard_space(genus), Gf2Vec.of(values))


class TestSynthesize:
    def test_zero_form_needs_no_twist(self):
        recipe = synthesize(zero_form(standard_space(3)))
        assert str(recipe.word) == ""
        assert recipe.partition["00"] == (1, 2, 3)
        assert verify_recipe(recipe)

    def test_genus_one(self):
        recipe = synthesize(_form(1, [0, 1]))
        assert str(recipe.word) == "T(a1)"
        assert verify_recipe(recipe)

    def test_mixed_partition(self):
        # (a1,b1)=(1,1), (a2,b2)=(1,1), (a3,b3)=(0,1)
        q = _form(3, [1, 1, 1, 1, 0, 1])
        recipe = synthesize(q)
        assert recipe.partition == {"00": (), "01": (3,), "10": (), "11": (1, 2)}
        assert recipe.pairs == ((1, 2),)
        assert str(recipe.word) == "T(a3) T[a1+a2] T[b1+b2]"
        assert induced_form(recipe) == q

    def test_genus_three_worked_example(self):
        q = _form(3, [1, 1, 1, 1, 1, 0])
        recipe = synthesize(q)
        assert recipe.partition["10"] == (3,)
        assert recipe.pairs == ((1, 2),)
        assert str(recipe.word) == "T(b3) T[a1+a2] T[b1+b2]"
        assert verify_recipe(recipe)

    @pytest.mark.parametrize("genus", [1, 2, 3])
    def test_every_bounding_form(self, genus):
        for q in enumerate_all(standard_space(genus)):
            if arf(q) == 1:
                with pytest.raises(NotBounding):
                    synthesize(q)
                continue
            recipe = synthesize(q)
            assert verify_recipe(recipe)
            assert len(recipe.pairs) * 2 == len(recipe.partition["11"])

    def test_random_forms(self, rng):
        checked = 0
        while checked < 100:
            genus = int(rng.integers(1, 7))
            q = QuadraticForm(standard_space(genus), Gf2Vec(rng.integers(0, 2, size=2 * genus, dtype=np.uint8)))
            if arf(q) == 1:
                continue
            assert induced_form(synthesize(q)) == q
            checked += 1

    def test_disjoint_twist_pair(self):
        # T[a_i+a_j] T[b_i+b_j] は q(a_i)=q(b_i)=q(a_j)=q(b_j)=1 の形式を誘導する
        space = standard_space(2)
        word = parse_word(2, "T[a1+a2] T[b1+b2]")
        q = pullback(zero_form(space), action_of(word).matrix)
        assert q.to_dict() == {"a1": 1, "b1": 1, "a2": 1, "b2": 1}

    def test_disjoint_twist_pair_action(self):
        space = standard_space(3)
        action = action_of(parse_word(3, "T[a1+a2] T[b1+b2]"))
        assert action(space.curve("a1")) == space.class_of("a1+b1+b2")
        assert action(space.curve("b1")) == space.class_of("b1+a1+a2")
        assert action(space.curve("a3")) == space.curve("a3")
        assert action(space.curve("b3")) == space.curve("b3")

    def test_to_dict(self):
        recipe = synthesize(_form(2, [1, 0, 0, 0]))
        assert recipe.to_dict() == {
            "q": {"a1": 1, "b1": 0, "a2": 0, "b2": 0},
            "partition": {"00": [2], "01": [], "10": [1], "11": []},
            "pairs": [],
            "word_text": "T(b1)",
        }


class TestEmbeddingFor:
    def test_extendable_action(self):
        action = action_of(parse_word(3, "T(c1) T(c2) T(c3) T(c4) T(c5) T(c6) T(c7)"))
        report, recipe = embedding_for(action)
        assert report.extendable
        assert recipe is not None
        assert recipe.q == report.witness
        assert verify_recipe(recipe)
        assert extendable_with(recipe, action)

    def test_non_extendable_action(self):
        action = HomologyAction.from_text(standard_space(1), "01;11")
        report, recipe = embedding_for(action)
        assert not report.extendable
        assert recipe is None

    def test_random_extendable_actions(self, random_action):
        for i in range(50):
            action = random_action(standard_space(1 + i % 3))
            report, recipe = embedding_for(action)
            assert (recipe is not None) == report.extendable
            if recipe is not None:
                assert extendable_with(recipe, action)

    def test_embedding_matters(self):
        # 恒等写像以外では、埋め込みを変えると拡張可能性が変わることがある
        action = action_of(parse_word(1, "T(a1)"))
        assert extendable_with(synthesize(_form(1, [1, 0])), action)
        assert not extendable_with(synthesize(_form(1, [0, 0])), action)
