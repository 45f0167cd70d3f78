"""
Dehn ツイスト語の構文解析と、その mod 2 ホモロジーへの作用を計算するモジュール。

文法（空白区切り・ASCII）::

    word  := item*
    item  := twist | group
    group := "(" word ")" "^" integer
    twist := ("T" | "T'") "(" name ")"
           | ("T" | "T'") "[" name ("+" name)* "]"

語は右から左へ合成する（右端のツイストが最初に作用する）。
mod 2 では T と T' は同じ横断写像（transvection）になる。
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from typing import Iterator, List, Mapping, Optional, Tuple, Union

import numpy as np

from .errors import DimensionMismatch, NotSymplectic, WordSyntaxError
from .gf2 import Gf2Mat, Gf2Vec, from_text, inverse
from .homology import CurveClass, HomologySpace, standard_space

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------- #
#  語のデータ型
# ---------------------------------------------------------------------- #
@dataclass(frozen=True)
class TwistLetter:
    """
    1 つのツイスト。explicit が True のものは T[a1+a2] のように類を直接指定したもの。
    """

    curve: CurveClass
    inverse: bool = False
    explicit: bool = False

    def __str__(self) -> str:
        head = "T'" if self.inverse else "T"
        if self.explicit:
            return f"{head}[{self.curve.name}]"
        return f"{head}({self.curve.name})"


@dataclass(frozen=True)
class TwistGroup:
    """
    (word)^power の繰り返し。
    """

    items: Tuple["WordItem", ...]
    power: int

    def __str__(self) -> str:
        return f"({_render(self.items)})^{self.power}"


WordItem = Union[TwistLetter, TwistGroup]


def _render(items: Tuple[WordItem, ...]) -> str:
    return " ".join(str(item) for item in items)


def _iter_letters(items: Tuple[WordItem, ...]) -> Iterator[TwistLetter]:
    for item in items:
        if isinstance(item, TwistLetter):
            yield item
        else:
            for _ in range(item.power):
                yield from _iter_letters(item.items)


@dataclass(frozen=True)
class TwistWord:
    """
    構文解析済みのツイスト語。

    Parameters
    ----------
    genus:
        曲線名を解決した標準空間の種数。
    items:
        左から順に並んだツイストと繰り返しグループ。
    text:
        入力された元の文字列。
    """

    genus: int
    items: Tuple[WordItem, ...]
    text: str = ""

    @property
    def space(self) -> HomologySpace:
        return standard_space(self.genus)

    def letters(self) -> Iterator[TwistLetter]:
        """
        繰り返しを展開したツイスト列を左から順に返す。
        """
        return _iter_letters(self.items)

    def __len__(self) -> int:
        return sum(1 for _ in self.letters())

    def __str__(self) -> str:
        return _render(self.items)

    def __add__(self, other: "TwistWord") -> "TwistWord":
        if self.genus != other.genus:
            raise DimensionMismatch(f"種数の異なる語は連結できません: {self.genus} と {other.genus}")
        items = self.items + other.items
        return TwistWord(self.genus, items, _render(items))


# ---------------------------------------------------------------------- #
#  構文解析
# ---------------------------------------------------------------------- #
_NAME = re.compile(r"[A-Za-z]+'?[0-9]*")
_INTEGER = re.compile(r"[0-9]+")

# グループ ( ... )^n の入れ子の上限
MAX_GROUP_DEPTH = 32


class _WordParser:
    """
    再帰下降パーサ。エラー位置は入力文字列の UTF-8 バイト位置で報告する。
    """

    def __init__(self, space: HomologySpace, text: str) -> None:
        self._space = space
        self._text = text
        self._pos = 0
        self._depth = 0

    # ----- 位置と字句 ----- #
    def _offset(self, pos: Optional[int] = None) -> int:
        pos = self._pos if pos is None else pos
        return len(self._text[:pos].encode("utf-8"))

    def _fail(self, message: str, pos: Optional[int] = None) -> WordSyntaxError:
        return WordSyntaxError(message, self._offset(pos))

    def _skip_spaces(self) -> None:
        while self._pos < len(self._text) and self._text[self._pos].isspace():
            self._pos += 1

    def _peek(self) -> str:
        self._skip_spaces()
        return self._text[self._pos] if self._pos < len(self._text) else ""

    def _expect(self, token: str) -> None:
        if self._peek() != token:
            found = self._peek() or "入力の終わり"
            raise self._fail(f"{token!r} が必要ですが {found!r} がありました。")
        self._pos += 1

    # ----- 文法規則 ----- #
    def parse(self) -> Tuple[WordItem, ...]:
        items = self._word(closing=None)
        if self._peek():
            raise self._fail(f"予期しない文字 {self._peek()!r} があります。")
        return items

    def _word(self, closing: Optional[str]) -> Tuple[WordItem, ...]:
        items: List[WordItem] = []
        while True:
            ch = self._peek()
            if ch == "" or ch == closing:
                break
            if ch == "(":
                items.append(self._group())
            elif ch == "T":
                items.append(self._twist())
            else:
                raise self._fail(f"ツイスト 'T' か '(' が必要ですが {ch!r} がありました。")
        return tuple(items)

    def _group(self) -> TwistGroup:
        start = self._pos
        if self._depth >= MAX_GROUP_DEPTH:
            raise self._fail(f"グループの入れ子が深すぎます（上限 {MAX_GROUP_DEPTH}）。", start)
        self._expect("(")
        self._depth += 1
        items = self._word(closing=")")
        self._depth -= 1
        if not items:
            raise self._fail("空のグループ () は書けません。", start)
        self._expect(")")
        self._expect("^")
        self._skip_spaces()
        match = _INTEGER.match(self._text, self._pos)
        if match is None:
            raise self._fail("'^' の後には非負整数が必要です。")
        self._pos = match.end()
        return TwistGroup(items, int(match.group()))

    def _twist(self) -> TwistLetter:
        self._expect("T")
        inverse = False
        if self._pos < len(self._text) and self._text[self._pos] == "'":
            inverse = True
            self._pos += 1

        opener = self._peek()
        if opener == "(":
            self._pos += 1
            name, pos = self._name()
            self._expect(")")
            return TwistLetter(CurveClass(name, self._space.curve(name, self._offset(pos))), inverse)
        if opener == "[":
            self._pos += 1
            names = [self._name()]
            while self._peek() == "+":
                self._pos += 1
                names.append(self._name())
            self._expect("]")
            cls = Gf2Vec.zeros(self._space.dim)
            for name, pos in names:
                cls = cls + self._space.curve(name, self._offset(pos))
            label = "+".join(name for name, _ in names)
            return TwistLetter(CurveClass(label, cls), inverse, explicit=True)
        raise self._fail("'T' の後には '(' か '[' が必要です。")

    def _name(self) -> Tuple[str, int]:
        self._skip_spaces()
        match = _NAME.match(self._text, self._pos)
        if match is None:
            raise self._fail("曲線名が必要です。")
        self._pos = match.end()
        return match.group(), match.start()


def parse_word(genus: int, text: str) -> TwistWord:
    """
    ツイスト語を構文解析する。

    Parameters
    ----------
    genus:
        曲線名を解決する標準空間の種数。
    text:
        "T(c1) T'(d2) T[a1+a2] (T(c1) T(c2))^3" のような文字列。

    Returns
    -------
    TwistWord
        解析結果。空文字列は恒等写像を表す空の語になる。

    Raises
    ------
    WordSyntaxError
        文法に合わない場合（offset はバイト位置）。
    UnknownCurve
        曲線辞書にない名前が使われた場合。
    """
    space = standard_space(genus)
    items = _WordParser(space, text).parse()
    return TwistWord(genus, items, text)


# ---------------------------------------------------------------------- #
#  ホモロジーへの作用
# ---------------------------------------------------------------------- #
def transvection(space: HomologySpace, c: Gf2Vec) -> Gf2Mat:
    """
    x -> x + (c·x) c を表す行列 I + c (Jc)^T を返す。
    """
    if c.dim != space.dim:
        raise DimensionMismatch(f"曲線の次元 {c.dim} が空間の次元 {space.dim} と異なります。")
    jc = (space.intersection @ c).bits
    return Gf2Mat(np.eye(space.dim, dtype=np.uint8) ^ np.outer(c.bits, jc))


@dataclass(frozen=True)
class HomologyAction:
    """
    交叉形式を保つ f_*。生成時にシンプレクティック条件を検査する。
    """

    space: HomologySpace
    matrix: Gf2Mat

    def __post_init__(self) -> None:
        if self.matrix.rows != self.space.dim or self.matrix.cols != self.space.dim:
            raise DimensionMismatch(
                f"{self.matrix.rows}x{self.matrix.cols} 行列は種数 {self.space.genus} の作用になりません。"
            )
        if not self.space.preserves(self.matrix):
            raise NotSymplectic("行列が交叉形式を保っていません。")

    @property
    def genus(self) -> int:
        return self.space.genus

    def __call__(self, x: Gf2Vec) -> Gf2Vec:
        return self.matrix @ x

    def __matmul__(self, other: "HomologyAction") -> "HomologyAction":
        """
        合成 self ∘ other（other が先に作用する）。
        """
        return HomologyAction(self.space, self.matrix @ other.matrix)

    def __pow__(self, exponent: int) -> "HomologyAction":
        return HomologyAction(self.space, self.matrix ** exponent)

    def is_identity(self) -> bool:
        return self.matrix == Gf2Mat.identity(self.space.dim)

    def order(self, limit: int = 10_000) -> int:
        """
        M^n = I となる最小の n >= 1。limit までに見つからなければ ValueError。
        """
        identity = Gf2Mat.identity(self.space.dim)
        power = self.matrix
        for n in range(1, limit + 1):
            if power == identity:
                return n
            power = power @ self.matrix
        raise ValueError(f"位数が {limit} 以下に見つかりません。")

    @classmethod
    def identity(cls, space: HomologySpace) -> "HomologyAction":
        return cls(space, Gf2Mat.identity(space.dim))

    @classmethod
    def from_text(cls, space: HomologySpace, text: str) -> "HomologyAction":
        """
        '01;11' 形式（標準基底順の行）から作用を作る。
        """
        return cls(space, from_text(text))

    @classmethod
    def from_curve_images(cls, space: HomologySpace, images: Mapping[str, str]) -> "HomologyAction":
        """
        名前付き曲線の基底とその像から作用を作る。

        Parameters
        ----------
        images:
            {"e1": "e2", "e2": "e3+e1", ...}。キーの曲線類が H_1 の基底をなすこと。
        """
        names = list(images)
        source = Gf2Mat.from_columns([space.curve(n) for n in names], rows=space.dim)
        target = Gf2Mat.from_columns([space.class_of(images[n]) for n in names], rows=space.dim)
        return cls(space, target @ inverse(source))


def _item_matrix(space: HomologySpace, item: WordItem) -> Gf2Mat:
    if isinstance(item, TwistLetter):
        return transvection(space, item.curve.cls)
    return _items_matrix(space, item.items) ** item.power


def _items_matrix(space: HomologySpace, items: Tuple[WordItem, ...]) -> Gf2Mat:
    result = Gf2Mat.identity(space.dim)
    for item in items:
        result = result @ _item_matrix(space, item)
    return result


def action_of(word: TwistWord) -> HomologyAction:
    """
    語の作用 M(L_1) M(L_2) ... M(L_n) を返す。右端の L_n が最初に作用する。

    繰り返しグループは中身を一度だけ計算してからべき乗する。
    """
    space = word.space
    matrix = _items_matrix(space, word.items)
    logger.debug("語 %r の作用を計算しました（genus=%d）", str(word), word.genus)
    return HomologyAction(space, matrix)


def random_word(genus: int, rng: np.random.Generator, length: int) -> TwistWord:
    """
    ランダムな T[...] の語を返す。random_symplectic の語としての表現。
    """
    space = standard_space(genus)
    labels = space.basis_labels()
    letters: List[WordItem] = []
    for _ in range(length):
        bits = rng.integers(0, 2, size=space.dim, dtype=np.uint8)
        while not bits.any():
            bits = rng.integers(0, 2, size=space.dim, dtype=np.uint8)
        cls = Gf2Vec(bits)
        name = "+".join(labels[i] for i in cls.support())
        letters.append(TwistLetter(CurveClass(name, cls), explicit=True))
    items = tuple(letters)
    return TwistWord(genus, items, _render(items))


def random_symplectic(space: HomologySpace, rng: np.random.Generator, length: int) -> HomologyAction:
    """
    ランダムな非零類に沿った横断写像 length 個の積を返す。

    横断写像は Sp(2g, Z_2) を生成するので、length を十分大きくとれば群全体を探索できる。
    """
    word = random_word(space.genus, rng, length)
    return HomologyAction(space, action_of(word).matrix)
