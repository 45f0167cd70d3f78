"""
種数 4 の有限位数写像類 f_{4,1}, ..., f_{4,12} と、その H_1 への作用の表。

F_4 の有限位数写像類はすべてこの 12 個のいずれかのべきに共役である。
ACTION_TABLE は各写像によるチェイン曲線 c_1..c_8 の像（チェイン座標）を保持し、
table4 コマンドの --check で再計算結果と照合する。
"""

from __future__ import annotations

from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from ..homology import chain_labels, standard_space
from ..twist import action_of, parse_word
from .base_maps import WordEntry

_F41 = "T(c1) T(c2) T(c3) T(c4) T(c5) T(c6) T(c7) T(c8)"
_F43 = _F41 + " T(c9)"
_F45 = "T(d2) T(c2) T(c3) T(c4) T(c5) T(c6) T(c7) T(c8)"

_ALL_ONE = {f"c{i}": 1 for i in range(1, 9)}
_ALL_ZERO = {f"c{i}": 0 for i in range(1, 9)}

# 各写像が保つ Arf 0 の形式（チェイン曲線上の値）
Q1 = _ALL_ONE
Q2 = _ALL_ZERO
Q3 = {**_ALL_ONE, "c6": 0, "c7": 0}
Q4 = {**_ALL_ONE, "c4": 0, "c5": 0, "c6": 0}
Q5 = {**_ALL_ONE, "c1": 0, "c5": 0}


class F41(WordEntry):
    NAME = "f4_1"
    GENUS = 4
    WORD = _F41
    ORDER = 18
    PRESERVED_FORM = Q1


class F42(WordEntry):
    NAME = "f4_2"
    GENUS = 4
    WORD = _F41 + " T(c8)"
    ORDER = 16
    PRESERVED_FORM = Q1


class F43(WordEntry):
    NAME = "f4_3"
    GENUS = 4
    WORD = _F43
    ORDER = 10
    PRESERVED_FORM = Q2


class F44(WordEntry):
    NAME = "f4_4"
    GENUS = 4
    WORD = f"({_F43})^5 T(c9) T(c8) T(c7) T(c6) T(c5) T(c4) T(c3) T(c2) T(c1)"
    NOTES = "f_{4,3} の 5 乗を繰り返しグループで展開する。"
    ORDER = 10
    PRESERVED_FORM = Q2


class F45(WordEntry):
    NAME = "f4_5"
    GENUS = 4
    WORD = _F45
    ORDER = 15
    PRESERVED_FORM = Q1


class F46(WordEntry):
    NAME = "f4_6"
    GENUS = 4
    WORD = _F45 + " T(c5) T(c6)"
    ORDER = 12
    PRESERVED_FORM = Q1


class F47(WordEntry):
    NAME = "f4_7"
    GENUS = 4
    WORD = "T(d2) T(c4) T(c5) T(c6) T(c7) T(c2) T(c3) T(c4) T(c5) T(c6) T(c7) T(c8)"
    NOTES = "f_* - id が正則で、不変形式は q_1 ただ 1 つ。"
    ORDER = 10
    PRESERVED_FORM = Q1


class F48(WordEntry):
    NAME = "f4_8"
    GENUS = 4
    WORD = "T(e) T(d2) T(c6) T(c8) T(c7) T(c6) T(c5) T(c4) T(c3)"
    ORDER = 12
    PRESERVED_FORM = Q3


class F49(WordEntry):
    NAME = "f4_9"
    GENUS = 4
    WORD = "T'(d2) T'(c6) T'(c7) T'(c8) T'(c9) T(d1) T(c4) T(c3) T(c2) T(c1)"
    ORDER = 6
    # c1 -> c2+c4 なので q_1 は保たれない
    PRESERVED_FORM = Q2


class F410(WordEntry):
    NAME = "f4_10"
    GENUS = 4
    WORD = "T(c9) T(c8) T'(d2) T'(c6) T'(c5) T'(c4) T'(d'1) T(c2) T(c1)"
    ORDER = 6
    PRESERVED_FORM = Q4


class F411(WordEntry):
    NAME = "f4_11"
    GENUS = 4
    WORD = "T'(c9) (T(c7) T(d'2) T(c6) T(c5) T(c4) T(c3) T(c2))^2"
    ORDER = 6
    PRESERVED_FORM = Q2


class F412(WordEntry):
    NAME = "f4_12"
    GENUS = 4
    WORD = (
        "T'(c7) T'(d2) T'(c6) T'(c7) T'(d'2) T'(c6) T'(c7) T'(c8) "
        "T(c3) T(d1) T(c4) T(c3) T(d'1) T(c4) T(c3) T(c2)"
    )
    ORDER = 5
    PRESERVED_FORM = Q5


# ---------------------------------------------------------------------- #
#  作用の表
# ---------------------------------------------------------------------- #
_S7 = "c1+c2+c3+c4+c5+c6+c7"
_S8 = _S7 + "+c8"

ACTION_TABLE: Dict[str, Tuple[str, ...]] = {
    "f4_1": ("c2", "c3", "c4", "c5", "c6", "c7", "c8", _S8),
    "f4_2": ("c2", "c3", "c4", "c5", "c6", "c7", _S7, _S8),
    "f4_3": ("c2", "c3", "c4", "c5", "c6", "c7", "c8", "c1+c3+c5+c7"),
    "f4_4": ("c5", "c6", "c7", "c8", "c1+c3+c5+c7", "c2+c4+c6+c8", "c1", "c2"),
    "f4_5": ("c1+c2", "c3", "c4", "c5", "c1+c3+c5+c6", "c7", "c8", "c1+c2+c4+c6+c7+c8"),
    "f4_6": (
        "c1+c2", "c3", "c4", "c1+c3+c6", "c7",
        "c1+c3+c5+c6+c7", "c1+c3+c5+c6+c7+c8", "c1+c2+c4+c6+c7+c8",
    ),
    "f4_7": (
        "c1+c2", "c3+c4", "c5", "c1+c3+c5+c6", "c7",
        "c1+c3+c4+c6+c7", "c1+c3+c4+c6+c7+c8", "c1+c2+c4+c6+c7+c8",
    ),
    "f4_8": (
        "c2+c3+c4+c6", "c3+c7+c8", "c2+c3+c7+c8", "c3",
        "c1+c2+c3+c6", "c2+c4", "c2+c4+c5", "c1+c3+c5+c6+c7",
    ),
    "f4_9": ("c2+c4", "c1", "c2", "c3", "c4+c6", "c7", "c8", "c1+c3+c5+c7"),
    "f4_10": ("c1+c2", "c1", "c1+c2+c4+c6", "c1+c3", "c4", "c5", "c6+c8", "c1+c3+c5+c7+c8"),
    "f4_11": ("c2+c4+c7", "c6", "c1+c2+c4+c6+c7", "c2", "c3", "c4", "c5+c6+c7", "c6+c8"),
    "f4_12": (
        "c1+c2+c3+c4", "c2+c3+c4", "c1+c2+c4", "c1+c3+c4",
        "c3+c7", "c1+c3+c5+c6", "c1+c3+c5+c6+c7+c8", "c6+c7+c8",
    ),
}

_WORDS: Dict[str, str] = {
    cls.NAME: cls.WORD for cls in (F41, F42, F43, F44, F45, F46, F47, F48, F49, F410, F411, F412)
}
TABLE_ORDER: List[str] = list(_WORDS)


def compute_row(name: str) -> Tuple[str, ...]:
    """
    語から作用を計算し直し、c_1..c_8 の像をチェイン座標の文字列で返す。
    """
    word = parse_word(4, _WORDS[name])
    space = standard_space(4)
    chain = chain_labels(4)
    action = action_of(word)
    return tuple(space.format_class(action(space.curve(c)), chain) for c in chain)


def table_mismatches(rows: Optional[Mapping[str, Sequence[str]]] = None) -> List[Tuple[str, str, str, str]]:
    """
    再計算した表と ACTION_TABLE の食い違いを (写像名, 列, 期待値, 計算値) の列で返す。

    rows を省略すると compute_row で再計算する。
    """
    space = standard_space(4)
    chain = chain_labels(4)
    mismatches: List[Tuple[str, str, str, str]] = []
    for name in TABLE_ORDER:
        row = compute_row(name) if rows is None else rows[name]
        for column, expected, actual in zip(chain, ACTION_TABLE[name], row):
            if space.class_of(expected) != space.class_of(actual):
                mismatches.append((name, column, expected, actual))
    return mismatches
