"""
H_1(F_g; Z_2) 上の二次形式（= 曲面のスピン構造）を扱うモジュール。

二次形式は標準基底での値だけを保持し、任意の類での値は
q(Σx_i) = Σq(x_i) + Σ_{i<j} x_i·x_j の公式で計算する。
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, Iterator, Mapping, Sequence, Tuple

import numpy as np

from .errors import ContractViolation, DimensionMismatch, EnumerationTooLarge, NotSymplectic
from .gf2 import Gf2Mat, Gf2Vec, solve_affine
from .homology import HomologySpace, is_symplectic_basis

logger = logging.getLogger(__name__)

# 全列挙を許す H_1 の次元の上限（2g <= 24）
ENUMERATION_DIM_LIMIT = 24


@dataclass(frozen=True, eq=False)
class QuadraticForm:
    """
    mod 2 二次形式。

    Parameters
    ----------
    space:
        定義域となる HomologySpace。
    values:
        標準基底 (a_1, b_1, ..., a_g, b_g) での値。
    """

    space: HomologySpace
    values: Gf2Vec

    def __post_init__(self) -> None:
        if self.values.dim != self.space.dim:
            raise DimensionMismatch(
                f"基底値の個数 {self.values.dim} が空間の次元 {self.space.dim} と異なります。"
            )

    def __call__(self, x: Gf2Vec) -> int:
        return evaluate(self, x)

    def __add__(self, functional: Gf2Vec) -> "QuadraticForm":
        """
        線形汎関数 ξ（基底での値の座標ベクトル）を足した形式 q + ξ を返す。
        """
        return QuadraticForm(self.space, self.values + functional)

    def difference(self, other: "QuadraticForm") -> Gf2Vec:
        """
        self - other は線形汎関数になる。その基底での値を返す。
        """
        return self.values + other.values

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QuadraticForm):
            return NotImplemented
        return self.space.dim == other.space.dim and self.values == other.values

    def __hash__(self) -> int:
        return hash(self.values)

    def __repr__(self) -> str:
        body = " ".join(f"{k}={v}" for k, v in self.to_dict().items())
        return f"QuadraticForm({body})"

    def sort_key(self) -> Tuple[int, ...]:
        return self.values.to_tuple()

    # ------------------------------------------------------------------ #
    #  シリアライズ
    # ------------------------------------------------------------------ #
    def to_dict(self) -> Dict[str, int]:
        """
        {"a1": 1, "b1": 0, ...} の形の辞書を返す。
        """
        return dict(zip(self.space.basis_labels(), self.values))

    @classmethod
    def from_dict(cls, space: HomologySpace, mapping: Mapping[str, int]) -> "QuadraticForm":
        """
        基底ラベル -> 値 の辞書から形式を作る。すべてのラベルが必要。
        """
        labels = space.basis_labels()
        missing = [label for label in labels if label not in mapping]
        if missing:
            raise ContractViolation(f"基底ラベル {missing} の値が指定されていません。")
        extra = sorted(set(mapping) - set(labels))
        if extra:
            raise ContractViolation(f"基底ラベルではないキーがあります: {extra}")
        return cls(space, Gf2Vec.of(_as_bit(mapping[label], label) for label in labels))


def _as_bit(value: object, label: str) -> int:
    if value in (0, 1) and not isinstance(value, float):
        return int(value)  # type: ignore[arg-type]
    raise ContractViolation(f"{label} の値 {value!r} は 0 か 1 である必要があります。")


# ---------------------------------------------------------------------- #
#  評価と Arf 不変量
# ---------------------------------------------------------------------- #
def evaluate(q: QuadraticForm, x: Gf2Vec) -> int:
    """
    q(x) を Σ q(基底_i) + Σ_{i<j} 基底_i·基底_j（x の台の上で）として返す。
    """
    if x.dim != q.space.dim:
        raise DimensionMismatch(f"ベクトルの次元 {x.dim} が形式の空間の次元 {q.space.dim} と異なります。")
    return x.dot(q.values) ^ q.space.cross_term(x)


def arf(q: QuadraticForm) -> int:
    """
    Arf(q) = Σ q(a_i) q(b_i)。標準基底はシンプレクティックなので基底値から直接求まる。
    """
    a_values = q.values.bits[0::2]
    b_values = q.values.bits[1::2]
    return int(np.bitwise_xor.reduce(a_values & b_values, initial=0))


def arf_in_basis(q: QuadraticForm, basis: Sequence[Gf2Vec]) -> int:
    """
    任意のシンプレクティック基底 (x_1, y_1, ..., x_g, y_g) で Arf 不変量を計算する。
    """
    if not is_symplectic_basis(q.space, basis):
        raise NotSymplectic("与えられた基底はシンプレクティック基底ではありません。")
    total = 0
    for i in range(0, len(basis), 2):
        total ^= evaluate(q, basis[i]) & evaluate(q, basis[i + 1])
    return total


# ---------------------------------------------------------------------- #
#  列挙
# ---------------------------------------------------------------------- #
def enumerate_all(space: HomologySpace) -> Iterator[QuadraticForm]:
    """
    空間上の 2^{2g} 個の二次形式を、基底値の辞書式順でちょうど一度ずつ返す。
    """
    if space.dim > ENUMERATION_DIM_LIMIT:
        raise EnumerationTooLarge(
            f"2g={space.dim} は全列挙の上限 {ENUMERATION_DIM_LIMIT} を超えています。"
        )
    logger.debug("二次形式を全列挙します: genus=%d, 個数=%d", space.genus, 2 ** space.dim)
    for values in itertools.product((0, 1), repeat=space.dim):
        yield QuadraticForm(space, Gf2Vec.of(values))


def count_by_arf(space: HomologySpace) -> Tuple[int, int]:
    """
    (Arf 0 の個数, Arf 1 の個数) を全列挙で数える。
    """
    zero = one = 0
    for q in enumerate_all(space):
        if arf(q):
            one += 1
        else:
            zero += 1
    return zero, one


def expected_arf_counts(genus: int) -> Tuple[int, int]:
    """
    (2^{g-1}(2^g+1), 2^{g-1}(2^g-1)) を返す。
    """
    half = 2 ** (genus - 1)
    return half * (2 ** genus + 1), half * (2 ** genus - 1)


# ---------------------------------------------------------------------- #
#  引き戻し
# ---------------------------------------------------------------------- #
def pullback(q: QuadraticForm, action: Gf2Mat) -> QuadraticForm:
    """
    f^*q(x) = q(f_*(x)) を返す。action は交叉形式を保つ必要がある。
    """
    if not q.space.preserves(action):
        raise NotSymplectic("引き戻しに使う行列が交叉形式を保っていません。")
    return QuadraticForm(q.space, Gf2Vec.of(evaluate(q, column) for column in action.columns()))


def zero_form(space: HomologySpace) -> QuadraticForm:
    return QuadraticForm(space, Gf2Vec.zeros(space.dim))


def from_curve_values(space: HomologySpace, values: Mapping[str, int]) -> QuadraticForm:
    """
    名前付き曲線上の値 {"c1": 1, ...} から二次形式を復元する。

    各曲線 c について q(c) = c·values + (交差項) という一次方程式を立てて解く。
    指定された曲線が形式を一意に決めない場合や、値が矛盾する場合は ContractViolation。
    """
    names = list(values)
    rows = []
    rhs = []
    for name in names:
        cls = space.curve(name)
        rows.append(cls)
        rhs.append(_as_bit(values[name], name) ^ space.cross_term(cls))

    solutions = solve_affine(Gf2Mat.from_rows(rows, cols=space.dim), Gf2Vec.of(rhs))
    if solutions.particular is None:
        raise ContractViolation(f"曲線上の値 {dict(values)} を満たす二次形式は存在しません。")
    if solutions.kernel_basis:
        raise ContractViolation(
            f"曲線 {names} の値だけでは二次形式が決まりません（自由度 {len(solutions.kernel_basis)}）。"
        )
    return QuadraticForm(space, solutions.particular)


def values_on(q: QuadraticForm, names: Sequence[str]) -> Dict[str, int]:
    """
    名前付き曲線上での値を辞書で返す。
    """
    return {name: evaluate(q, q.space.curve(name)) for name in names}
