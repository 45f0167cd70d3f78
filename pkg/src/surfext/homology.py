"""
H_1(F_g; Z_2) とその mod 2 交叉形式をモデル化するモジュール。

内部の標準基底は常にシンプレクティック基底 (a_1, b_1, ..., a_g, b_g) とし、
チェイン曲線 c_i や八角形の辺 e_i などの名前付き曲線は、その基底での
座標ベクトルとして curve_table に保持する。
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from types import MappingProxyType
from typing import Dict, List, Mapping, Optional, Sequence

import numpy as np

from .errors import ContractViolation, DimensionMismatch, GenusOutOfRange, UnknownCurve
from .gf2 import Gf2Mat, Gf2Vec, inverse, solve_affine

MAX_GENUS = 32


@dataclass(frozen=True)
class CurveClass:
    """
    名前付き曲線とそのホモロジー類。異なる名前が同じ類を持つことはある（d_1 と d'_1 など）。
    """

    name: str
    cls: Gf2Vec


def _symplectic_matrix(genus: int) -> np.ndarray:
    J = np.zeros((2 * genus, 2 * genus), dtype=np.uint8)
    for i in range(genus):
        J[2 * i, 2 * i + 1] = 1
        J[2 * i + 1, 2 * i] = 1
    return J


def _check_genus(genus: int) -> None:
    if not isinstance(genus, int) or not 1 <= genus <= MAX_GENUS:
        raise GenusOutOfRange(f"種数 {genus!r} はサポート範囲 [1, {MAX_GENUS}] の外です。")


class HomologySpace:
    """
    mod 2 交叉形式つきの 2g 次元空間。

    生成後は変更しない。曲線を追加したい場合は with_curves で新しい空間を作る。
    """

    def __init__(self, genus: int, curve_table: Mapping[str, Gf2Vec], name: str = "standard") -> None:
        """
        Parameters
        ----------
        genus:
            種数 g（1 <= g <= 32）。
        curve_table:
            曲線名 -> 標準基底での座標ベクトル。
        name:
            表示用の空間名（"standard" / "octagon" など）。
        """
        _check_genus(genus)
        self._genus = genus
        self._name = name

        J = _symplectic_matrix(genus)
        self._intersection = Gf2Mat(J)
        # i < j の交叉だけを残した上三角部分。二次形式の交差項の計算に使う
        self._upper = np.triu(J, 1).astype(np.int64)

        for curve_name, cls in curve_table.items():
            if cls.dim != 2 * genus:
                raise DimensionMismatch(f"曲線 {curve_name} の次元 {cls.dim} が 2g={2 * genus} と異なります。")
        self._curves: Dict[str, Gf2Vec] = dict(curve_table)

    # ------------------------------------------------------------------ #
    #  基本情報
    # ------------------------------------------------------------------ #
    @property
    def genus(self) -> int:
        return self._genus

    @property
    def dim(self) -> int:
        return 2 * self._genus

    @property
    def name(self) -> str:
        return self._name

    @property
    def intersection(self) -> Gf2Mat:
        return self._intersection

    @property
    def curve_table(self) -> Mapping[str, Gf2Vec]:
        return MappingProxyType(self._curves)

    def basis_labels(self) -> List[str]:
        """
        標準基底のラベル ['a1', 'b1', ..., 'ag', 'bg'] を返す。
        """
        labels: List[str] = []
        for i in range(1, self._genus + 1):
            labels.extend((f"a{i}", f"b{i}"))
        return labels

    def basis(self) -> List[Gf2Vec]:
        return [Gf2Vec.unit(self.dim, i) for i in range(self.dim)]

    def __repr__(self) -> str:
        return f"HomologySpace(genus={self._genus}, name={self._name!r})"

    # ------------------------------------------------------------------ #
    #  交叉形式
    # ------------------------------------------------------------------ #
    def _check_member(self, x: Gf2Vec) -> None:
        if x.dim != self.dim:
            raise DimensionMismatch(f"ベクトルの次元 {x.dim} が空間の次元 {self.dim} と異なります。")

    def pair(self, x: Gf2Vec, y: Gf2Vec) -> int:
        """
        mod 2 交叉数 x·y を返す。
        """
        self._check_member(x)
        self._check_member(y)
        return self._intersection.bilinear(x, y)

    def cross_term(self, x: Gf2Vec) -> int:
        """
        x の台を基底元の和と見たときの Σ_{i<j} e_i·e_j を返す。
        """
        self._check_member(x)
        s = x.bits.astype(np.int64)
        return int(s @ self._upper @ s) & 1

    def preserves(self, M: Gf2Mat) -> bool:
        """
        M が交叉形式を保つ（M^T J M = J）かどうか。
        """
        if M.rows != self.dim or M.cols != self.dim:
            return False
        return M.T @ self._intersection @ M == self._intersection

    # ------------------------------------------------------------------ #
    #  名前付き曲線
    # ------------------------------------------------------------------ #
    def curve(self, name: str, offset: Optional[int] = None) -> Gf2Vec:
        try:
            return self._curves[name]
        except KeyError:
            raise UnknownCurve(name, offset) from None

    def class_of(self, text: str) -> Gf2Vec:
        """
        'a1+b2' のような曲線名の和をホモロジー類に変換する。'0' は零元。
        """
        total = Gf2Vec.zeros(self.dim)
        for term in re.split(r"\s*\+\s*", text.strip()):
            if term == "0":
                continue
            total = total + self.curve(term)
        return total

    def express(self, x: Gf2Vec, names: Sequence[str]) -> List[str]:
        """
        x を names の曲線類を基底として書いたとき、係数 1 の曲線名を返す。

        names の類が x を一意に表せない場合は ContractViolation。
        """
        self._check_member(x)
        C = Gf2Mat.from_columns([self.curve(n) for n in names], rows=self.dim)
        solutions = solve_affine(C, x)
        if solutions.particular is None or solutions.kernel_basis:
            raise ContractViolation(f"{list(names)} では {x!r} を一意に表せません。")
        return [names[i] for i in solutions.particular.support()]

    def format_class(self, x: Gf2Vec, names: Sequence[str]) -> str:
        terms = self.express(x, names)
        return "+".join(terms) if terms else "0"

    def with_curves(self, extra: Mapping[str, Gf2Vec], name: Optional[str] = None) -> "HomologySpace":
        table = dict(self._curves)
        table.update(extra)
        return HomologySpace(self._genus, table, name=name or self._name)


def is_symplectic_basis(space: HomologySpace, basis: Sequence[Gf2Vec]) -> bool:
    """
    (x_1, y_1, ..., x_g, y_g) の並びがシンプレクティック基底かどうか。
    """
    if len(basis) != space.dim:
        return False
    M = Gf2Mat.from_columns(list(basis))
    return space.preserves(M)


# ---------------------------------------------------------------------- #
#  標準空間
# ---------------------------------------------------------------------- #
def chain_labels(genus: int) -> List[str]:
    """
    H_1 の基底となるチェイン曲線 c_1, ..., c_{2g} のラベル。
    """
    return [f"c{i}" for i in range(1, 2 * genus + 1)]


def _standard_curves(genus: int) -> Dict[str, Gf2Vec]:
    dim = 2 * genus
    a = [Gf2Vec.unit(dim, 2 * i) for i in range(genus)]
    b = [Gf2Vec.unit(dim, 2 * i + 1) for i in range(genus)]

    table: Dict[str, Gf2Vec] = {}
    for i in range(genus):
        table[f"a{i + 1}"] = a[i]
        table[f"b{i + 1}"] = b[i]

    # a_i = c_{2i}, b_i = c_1 + c_3 + ... + c_{2i-1} を逆に解く
    zero = Gf2Vec.zeros(dim)
    for i in range(1, genus + 1):
        previous_b = b[i - 2] if i >= 2 else zero
        table[f"c{2 * i - 1}"] = previous_b + b[i - 1]
        table[f"c{2 * i}"] = a[i - 1]
    # c_1, c_3, ..., c_{2g+1} が部分曲面を張るので c_{2g+1} = c_1 + c_3 + ... + c_{2g-1} = b_g
    table[f"c{2 * genus + 1}"] = b[genus - 1]

    c = table
    if genus == 3:
        table["d1"] = c["c1"] + c["c3"]
    if genus == 4:
        d1 = c["c1"] + c["c3"]
        d2 = d1 + c["c5"]
        table["d1"] = d1
        table["d'1"] = d1
        table["d2"] = d2
        table["d'2"] = d2
        table["e"] = c["c1"] + c["c2"] + c["c3"] + c["c4"] + c["c6"]
    return table


@lru_cache(maxsize=None)
def standard_space(genus: int) -> HomologySpace:
    """
    標準シンプレクティック基底と曲線辞書を備えた種数 genus の空間を返す。

    curve_table には a_i, b_i, チェイン曲線 c_1..c_{2g+1} と、
    種数 3 では d1、種数 4 では d1, d'1, d2, d'2, e が入る。
    """
    _check_genus(genus)
    return HomologySpace(genus, _standard_curves(genus))


def pair(space: HomologySpace, x: Gf2Vec, y: Gf2Vec) -> int:
    return space.pair(x, y)


@lru_cache(maxsize=None)
def octagon_space() -> HomologySpace:
    """
    対辺を貼り合わせた正八角形としての種数 2 の空間。

    辺の類 e_1..e_4 は相異なる 2 つが常に 1 で交わるものとし、
    a_1=e_1, b_1=e_2, a_2=e_3+e_1+e_2, b_2=e_4+e_1+e_2 で標準基底に結びつける。
    """
    base = standard_space(2)
    a1, b1, a2, b2 = (base.curve(n) for n in ("a1", "b1", "a2", "b2"))
    edges = {
        "e1": a1,
        "e2": b1,
        "e3": a2 + a1 + b1,
        "e4": b2 + a1 + b1,
    }
    return base.with_curves(edges, name="octagon")


def change_of_basis(space: HomologySpace, names: Sequence[str]) -> Gf2Mat:
    """
    names の曲線類を列に並べた行列を返す。基底でなければ NotInvertible。
    """
    C = Gf2Mat.from_columns([space.curve(n) for n in names], rows=space.dim)
    inverse(C)
    return C

