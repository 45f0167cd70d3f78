"""二次形式・Arf 不変量・引き戻しのテスト。"""

from __future__ import annotations

import itertools

import numpy as np
import pytest

from surfext.errors import ContractViolation, EnumerationTooLarge, NotSymplectic
from surfext.gf2 import Gf2Mat, Gf2Vec
from surfext.homology import standard_space
from surfext.quadform import (
    QuadraticForm,
    arf,
    arf_in_basis,
    count_by_arf,
    enumerate_all,
    evaluate,
    expected_arf_counts,
    from_curve_values,
    pullback,
    values_on,
    zero_form,
)
from surfext.twist import action_of, parse_word, random_symplectic


def _random_form(space, rng):
    return QuadraticForm(space, Gf2Vec(rng.integers(0, 2, size=space.dim, dtype=np.uint8)))


def _all_vectors(dim):
    return [Gf2Vec.of(bits) for bits in itertools.product((0, 1), repeat=dim)]


class TestArf:
    def test_genus_one_examples(self):
        space = standard_space(1)
        assert arf(QuadraticForm.from_dict(space, {"a1": 0, "b1": 0})) == 0
        assert arf(QuadraticForm.from_dict(space, {"a1": 1, "b1": 0})) == 0
        assert arf(QuadraticForm.from_dict(space, {"a1": 1, "b1": 1})) == 1

    def test_zero_form(self):
        assert arf(zero_form(standard_space(5))) == 0

    @pytest.mark.parametrize("genus, expected", [(1, (3, 1)), (2, (10, 6)), (3, (36, 28)), (4, (136, 120))])
    def test_counts(self, genus, expected):
        assert count_by_arf(standard_space(genus)) == expected
        assert expected_arf_counts(genus) == expected

    def test_enumeration_is_complete_and_ordered(self):
        forms = list(enumerate_all(standard_space(2)))
        assert len(forms) == 16
        assert len(set(forms)) == 16
        assert [q.sort_key() for q in forms] == sorted(q.sort_key() for q in forms)

    def test_enumeration_guard(self):
        with pytest.raises(EnumerationTooLarge):
            next(enumerate_all(standard_space(13)))

    def test_basis_independence(self, rng):
        for _ in range(500):
            space = standard_space(int(rng.integers(1, 6)))
            q = _random_form(space, rng)
            S = random_symplectic(space, rng, int(rng.integers(0, 3 * space.genus + 3)))
            assert arf_in_basis(q, S.matrix.columns()) == arf(q)

    def test_arf_in_basis_rejects_non_symplectic(self):
        space = standard_space(1)
        q = zero_form(space)
        with pytest.raises(NotSymplectic):
            arf_in_basis(q, [space.curve("a1"), space.curve("a1")])


class TestEvaluate:
    @pytest.mark.parametrize("genus", [1, 2])
    def test_polarization(self, genus):
        space = standard_space(genus)
        vectors = _all_vectors(space.dim)
        for q in enumerate_all(space):
            for x in vectors:
                for y in vectors:
                    assert q(x + y) == q(x) ^ q(y) ^ space.pair(x, y)

    def test_basis_values(self):
        space = standard_space(2)
        q = QuadraticForm.from_dict(space, {"a1": 1, "b1": 0, "a2": 0, "b2": 1})
        assert evaluate(q, space.curve("a1")) == 1
        assert evaluate(q, space.curve("b1")) == 0
        # q(a1+b1) = 1 + 0 + 1
        assert evaluate(q, space.class_of("a1+b1")) == 0
        assert q(Gf2Vec.zeros(4)) == 0

    def test_adding_a_functional(self, rng):
        space = standard_space(3)
        for _ in range(20):
            q = _random_form(space, rng)
            xi = Gf2Vec(rng.integers(0, 2, size=space.dim, dtype=np.uint8))
            shifted = q + xi
            for x in _all_vectors(space.dim):
                assert shifted(x) == q(x) ^ xi.dot(x)
            assert shifted.difference(q) == xi


class TestPullback:
    def test_identity(self, rng):
        space = standard_space(3)
        q = _random_form(space, rng)
        assert pullback(q, Gf2Mat.identity(space.dim)) == q

    def test_contravariance(self, rng):
        for _ in range(50):
            space = standard_space(int(rng.integers(1, 5)))
            q = _random_form(space, rng)
            A = random_symplectic(space, rng, 4).matrix
            B = random_symplectic(space, rng, 4).matrix
            assert pullback(pullback(q, A), B) == pullback(q, A @ B)

    def test_pointwise(self, rng):
        space = standard_space(2)
        q = _random_form(space, rng)
        M = random_symplectic(space, rng, 5).matrix
        pulled = pullback(q, M)
        for x in _all_vectors(space.dim):
            assert pulled(x) == q(M @ x)

    def test_preserves_arf(self, rng):
        for _ in range(200):
            space = standard_space(int(rng.integers(1, 6)))
            q = _random_form(space, rng)
            M = random_symplectic(space, rng, int(rng.integers(1, 10))).matrix
            assert arf(pullback(q, M)) == arf(q)

    def test_rejects_non_symplectic(self):
        space = standard_space(1)
        with pytest.raises(NotSymplectic):
            pullback(zero_form(space), Gf2Mat.zeros(2, 2))

    def test_chain_rotation_fixes_all_ones_form(self):
        space = standard_space(3)
        q = from_curve_values(space, {f"c{i}": 1 for i in range(1, 7)})
        action = action_of(parse_word(3, "T(c1) T(c2) T(c3) T(c4) T(c5) T(c6) T(c7)"))
        assert pullback(q, action.matrix) == q
        assert arf(q) == 0


class TestSerialization:
    def test_to_dict_order(self):
        space = standard_space(2)
        q = QuadraticForm.from_dict(space, {"b2": 1, "a1": 1, "a2": 0, "b1": 0})
        assert list(q.to_dict()) == ["a1", "b1", "a2", "b2"]
        assert q.to_dict() == {"a1": 1, "b1": 0, "a2": 0, "b2": 1}

    def test_from_dict_missing_label(self):
        with pytest.raises(ContractViolation):
            QuadraticForm.from_dict(standard_space(2), {"a1": 1, "b1": 0, "a2": 0})

    def test_from_dict_extra_label(self):
        with pytest.raises(ContractViolation):
            QuadraticForm.from_dict(standard_space(1), {"a1": 1, "b1": 0, "a2": 0})

    @pytest.mark.parametrize("value", [2, -1, 0.5, "1"])
    def test_from_dict_bad_value(self, value):
        with pytest.raises(ContractViolation):
            QuadraticForm.from_dict(standard_space(1), {"a1": value, "b1": 0})


class TestCurveValues:
    def test_chain_values_determine_form(self):
        space = standard_space(2)
        q = from_curve_values(space, {"c1": 1, "c2": 0, "c3": 1, "c4": 1})
        assert values_on(q, ["c1", "c2", "c3", "c4"]) == {"c1": 1, "c2": 0, "c3": 1, "c4": 1}

    def test_underdetermined(self):
        with pytest.raises(ContractViolation):
            from_curve_values(standard_space(2), {"c1": 1})

    def test_inconsistent(self):
        # c2 と a1 は同じ類
        with pytest.raises(ContractViolation):
            from_curve_values(standard_space(1), {"a1": 1, "b1": 0, "c2": 0})

    def test_round_trip_through_chain_values(self, rng):
        space = standard_space(4)
        names = [f"c{i}" for i in range(1, 9)]
        for _ in range(20):
            q = _random_form(space, rng)
            assert from_curve_values(space, values_on(q, names)) == q
