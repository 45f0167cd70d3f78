"""
二元体 GF(2) 上の厳密な線形代数を提供するモジュール。

- Gf2Vec / Gf2Mat: numpy の uint8 配列を読み取り専用で保持する不変な値
- kernel / solve_affine / inverse / annihilator_basis / rank:
  行をビットパックした掃き出し法（XOR による行演算）で計算する

ピボットは常に最小インデックスを選ぶため、核の基底などは実行ごとに再現する。
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .errors import DimensionMismatch, MatrixFormatError, NotInvertible


def _frozen(array: np.ndarray) -> np.ndarray:
    array = np.ascontiguousarray(array, dtype=np.uint8) & 1
    array.setflags(write=False)
    return array


# ---------------------------------------------------------------------- #
#  ベクトル
# ---------------------------------------------------------------------- #
@dataclass(frozen=True, eq=False)
class Gf2Vec:
    """
    GF(2) 上の列ベクトル。

    Parameters
    ----------
    bits:
        0/1 の 1 次元配列。生成時に読み取り専用のコピーへ正規化される。
    """

    bits: np.ndarray

    def __post_init__(self) -> None:
        bits = np.asarray(self.bits)
        if bits.ndim != 1:
            raise DimensionMismatch(f"ベクトルは 1 次元配列である必要があります（ndim={bits.ndim}）。")
        object.__setattr__(self, "bits", _frozen(bits))

    @classmethod
    def of(cls, values: Iterable[int]) -> "Gf2Vec":
        return cls(np.fromiter((int(v) & 1 for v in values), dtype=np.uint8))

    @classmethod
    def zeros(cls, dim: int) -> "Gf2Vec":
        return cls(np.zeros(dim, dtype=np.uint8))

    @classmethod
    def unit(cls, dim: int, index: int) -> "Gf2Vec":
        if not 0 <= index < dim:
            raise IndexError(f"座標 {index} は範囲 [0, {dim}) の外です。")
        bits = np.zeros(dim, dtype=np.uint8)
        bits[index] = 1
        return cls(bits)

    @property
    def dim(self) -> int:
        return int(self.bits.shape[0])

    def __len__(self) -> int:
        return self.dim

    def __getitem__(self, index: int) -> int:
        # numpy の負インデックスによる折り返しは許さない
        if not isinstance(index, (int, np.integer)) or not 0 <= index < self.dim:
            raise IndexError(f"座標 {index} は範囲 [0, {self.dim}) の外です。")
        return int(self.bits[index])

    def __iter__(self) -> Iterator[int]:
        return (int(b) for b in self.bits)

    def __add__(self, other: "Gf2Vec") -> "Gf2Vec":
        _check_same_dim(self, other)
        return Gf2Vec(self.bits ^ other.bits)

    __sub__ = __add__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Gf2Vec):
            return NotImplemented
        return self.dim == other.dim and bool(np.array_equal(self.bits, other.bits))

    def __hash__(self) -> int:
        return hash((self.dim, self.bits.tobytes()))

    def __repr__(self) -> str:
        return f"Gf2Vec({''.join(str(b) for b in self)})"

    def dot(self, other: "Gf2Vec") -> int:
        """
        標準内積（座標ごとの積の和）を GF(2) で返す。
        """
        _check_same_dim(self, other)
        return int(np.bitwise_xor.reduce(self.bits & other.bits, initial=0))

    def is_zero(self) -> bool:
        return not bool(self.bits.any())

    def support(self) -> List[int]:
        """
        値が 1 の座標のインデックスを昇順で返す。
        """
        return [int(i) for i in np.flatnonzero(self.bits)]

    def to_tuple(self) -> Tuple[int, ...]:
        return tuple(int(b) for b in self.bits)


def _check_same_dim(x: Gf2Vec, y: Gf2Vec) -> None:
    if x.dim != y.dim:
        raise DimensionMismatch(f"次元が一致しません: {x.dim} と {y.dim}")


# ---------------------------------------------------------------------- #
#  行列
# ---------------------------------------------------------------------- #
@dataclass(frozen=True, eq=False)
class Gf2Mat:
    """
    GF(2) 上の行列。列ベクトルに左から作用し、第 j 列が基底 j の像となる。
    """

    entries: np.ndarray

    def __post_init__(self) -> None:
        entries = np.asarray(self.entries)
        if entries.ndim != 2:
            raise DimensionMismatch(f"行列は 2 次元配列である必要があります（ndim={entries.ndim}）。")
        object.__setattr__(self, "entries", _frozen(entries))

    # ------------------------------------------------------------------ #
    #  生成
    # ------------------------------------------------------------------ #
    @classmethod
    def identity(cls, n: int) -> "Gf2Mat":
        return cls(np.eye(n, dtype=np.uint8))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Gf2Mat":
        return cls(np.zeros((rows, cols), dtype=np.uint8))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]] | Sequence[Gf2Vec], cols: Optional[int] = None) -> "Gf2Mat":
        """
        行の並びから行列を作る。rows が空のときは cols で列数を与える。
        """
        if len(rows) == 0:
            return cls.zeros(0, cols or 0)
        data = [r.bits if isinstance(r, Gf2Vec) else np.asarray(r, dtype=np.uint8) for r in rows]
        widths = {len(r) for r in data}
        if len(widths) != 1:
            raise DimensionMismatch(f"行の長さが揃っていません: {sorted(widths)}")
        return cls(np.vstack(data))

    @classmethod
    def from_columns(cls, columns: Sequence[Gf2Vec], rows: Optional[int] = None) -> "Gf2Mat":
        if len(columns) == 0:
            return cls.zeros(rows or 0, 0)
        return cls.from_rows(columns).transpose()

    @classmethod
    def block_diagonal(cls, blocks: Sequence["Gf2Mat"]) -> "Gf2Mat":
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        out = np.zeros((rows, cols), dtype=np.uint8)
        r = c = 0
        for block in blocks:
            out[r:r + block.rows, c:c + block.cols] = block.entries
            r += block.rows
            c += block.cols
        return cls(out)

    # ------------------------------------------------------------------ #
    #  参照
    # ------------------------------------------------------------------ #
    @property
    def rows(self) -> int:
        return int(self.entries.shape[0])

    @property
    def cols(self) -> int:
        return int(self.entries.shape[1])

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def row(self, i: int) -> Gf2Vec:
        if not 0 <= i < self.rows:
            raise IndexError(f"行 {i} は範囲 [0, {self.rows}) の外です。")
        return Gf2Vec(self.entries[i])

    def column(self, j: int) -> Gf2Vec:
        if not 0 <= j < self.cols:
            raise IndexError(f"列 {j} は範囲 [0, {self.cols}) の外です。")
        return Gf2Vec(self.entries[:, j])

    def columns(self) -> List[Gf2Vec]:
        return [self.column(j) for j in range(self.cols)]

    def __getitem__(self, index: Tuple[int, int]) -> int:
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"成分 ({i}, {j}) は {self.rows}x{self.cols} 行列の範囲外です。")
        return int(self.entries[i, j])

    # ------------------------------------------------------------------ #
    #  演算
    # ------------------------------------------------------------------ #
    def transpose(self) -> "Gf2Mat":
        return Gf2Mat(self.entries.T)

    @property
    def T(self) -> "Gf2Mat":
        return self.transpose()

    def __add__(self, other: "Gf2Mat") -> "Gf2Mat":
        if self.entries.shape != other.entries.shape:
            raise DimensionMismatch(
                f"形状が一致しません: {self.entries.shape} と {other.entries.shape}"
            )
        return Gf2Mat(self.entries ^ other.entries)

    __sub__ = __add__

    def __matmul__(self, other: "Gf2Mat | Gf2Vec") -> "Gf2Mat | Gf2Vec":
        if isinstance(other, Gf2Vec):
            if self.cols != other.dim:
                raise DimensionMismatch(f"{self.rows}x{self.cols} 行列と {other.dim} 次元ベクトルは掛けられません。")
            product = self.entries.astype(np.int64) @ other.bits.astype(np.int64)
            return Gf2Vec(product & 1)
        if isinstance(other, Gf2Mat):
            if self.cols != other.rows:
                raise DimensionMismatch(
                    f"{self.rows}x{self.cols} と {other.rows}x{other.cols} は掛けられません。"
                )
            product = self.entries.astype(np.int64) @ other.entries.astype(np.int64)
            return Gf2Mat(product & 1)
        return NotImplemented

    def __pow__(self, exponent: int) -> "Gf2Mat":
        if not self.is_square:
            raise DimensionMismatch("べき乗は正方行列にのみ定義されます。")
        if exponent < 0:
            return inverse(self) ** (-exponent)
        result = Gf2Mat.identity(self.rows)
        base = self
        while exponent:
            if exponent & 1:
                result = result @ base
            base = base @ base
            exponent >>= 1
        return result

    def bilinear(self, x: Gf2Vec, y: Gf2Vec) -> int:
        """
        x^T · self · y を GF(2) で返す。
        """
        if x.dim != self.rows or y.dim != self.cols:
            raise DimensionMismatch(
                f"双線形形式 {self.rows}x{self.cols} に {x.dim}, {y.dim} 次元のベクトルは渡せません。"
            )
        value = x.bits.astype(np.int64) @ self.entries.astype(np.int64) @ y.bits.astype(np.int64)
        return int(value) & 1

    def is_zero(self) -> bool:
        return not bool(self.entries.any())

    def rank(self) -> int:
        return rank(self)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Gf2Mat):
            return NotImplemented
        return self.entries.shape == other.entries.shape and bool(
            np.array_equal(self.entries, other.entries)
        )

    def __hash__(self) -> int:
        return hash((self.entries.shape, self.entries.tobytes()))

    def __repr__(self) -> str:
        return f"Gf2Mat({to_text(self)!r})"


# ---------------------------------------------------------------------- #
#  ビットパック掃き出し
# ---------------------------------------------------------------------- #
def _column_bits(packed: np.ndarray, col: int) -> np.ndarray:
    byte, shift = divmod(col, 8)
    return (packed[:, byte] >> (7 - shift)) & 1


def _row_reduce(entries: np.ndarray, pivot_limit: Optional[int] = None) -> Tuple[np.ndarray, List[int]]:
    """
    行を np.packbits で詰め、XOR の行演算で既約行階段形を求める。

    Parameters
    ----------
    entries:
        0/1 の 2 次元配列。変更されない。
    pivot_limit:
        ピボットを探す列数。拡大係数行列の右側を除外するときに使う。

    Returns
    -------
    (reduced, pivots)
        reduced は既約行階段形（uint8）、pivots はピボット列のリスト。
    """
    m, n = entries.shape
    if m == 0 or n == 0:
        return np.array(entries, dtype=np.uint8, copy=True), []

    limit = n if pivot_limit is None else pivot_limit
    packed = np.packbits(entries.astype(np.uint8), axis=1)

    pivots: List[int] = []
    row = 0
    for col in range(limit):
        if row == m:
            break
        hits = np.flatnonzero(_column_bits(packed[row:], col))
        if hits.size == 0:
            continue
        pivot = row + int(hits[0])
        if pivot != row:
            packed[[row, pivot]] = packed[[pivot, row]]

        mask = _column_bits(packed, col).astype(bool)
        mask[row] = False
        packed[mask] ^= packed[row]

        pivots.append(col)
        row += 1

    reduced = np.unpackbits(packed, axis=1, count=n)
    return reduced, pivots


def rank(A: Gf2Mat) -> int:
    _, pivots = _row_reduce(A.entries)
    return len(pivots)


def _kernel_from_reduced(reduced: np.ndarray, pivots: List[int], cols: int) -> List[Gf2Vec]:
    pivot_set = set(pivots)
    basis: List[Gf2Vec] = []
    for free in range(cols):
        if free in pivot_set:
            continue
        bits = np.zeros(cols, dtype=np.uint8)
        bits[free] = 1
        for r, p in enumerate(pivots):
            bits[p] = reduced[r, free]
        basis.append(Gf2Vec(bits))
    return basis


def kernel(A: Gf2Mat) -> List[Gf2Vec]:
    """
    {v : Av = 0} の基底を返す。単射なら空リスト。

    自由変数を 1 つずつ 1 にした標準的な基底なので、一次独立性は自明に保たれる。
    """
    reduced, pivots = _row_reduce(A.entries)
    return _kernel_from_reduced(reduced, pivots, A.cols)


# ---------------------------------------------------------------------- #
#  連立一次方程式
# ---------------------------------------------------------------------- #
@dataclass(frozen=True)
class AffineSolutionSet:
    """
    Ax = b の解集合。particular が None のとき解なし（空集合）を表す。
    """

    particular: Optional[Gf2Vec]
    kernel_basis: Tuple[Gf2Vec, ...]

    @property
    def is_empty(self) -> bool:
        return self.particular is None

    @property
    def size(self) -> int:
        return 0 if self.is_empty else 2 ** len(self.kernel_basis)

    def __iter__(self) -> Iterator[Gf2Vec]:
        """
        解を 2^k 個すべて列挙する。
        """
        if self.particular is None:
            return
        for combo in span_elements(self.kernel_basis, self.particular.dim):
            yield self.particular + combo


def solve_affine(A: Gf2Mat, b: Gf2Vec) -> AffineSolutionSet:
    """
    Ax = b を解く。

    Parameters
    ----------
    A:
        係数行列。
    b:
        右辺。A.rows == b.dim であること。

    Returns
    -------
    AffineSolutionSet
        矛盾する場合は particular=None、kernel_basis=() の空集合。
    """
    if A.rows != b.dim:
        raise DimensionMismatch(f"係数行列の行数 {A.rows} と右辺の次元 {b.dim} が一致しません。")

    augmented = np.hstack([A.entries, b.bits.reshape(-1, 1)])
    reduced, pivots = _row_reduce(augmented)

    # 右辺列にピボットが立てば 0 = 1 が現れている
    if A.cols in pivots:
        return AffineSolutionSet(particular=None, kernel_basis=())

    particular = np.zeros(A.cols, dtype=np.uint8)
    for r, p in enumerate(pivots):
        particular[p] = reduced[r, A.cols]

    basis = _kernel_from_reduced(reduced[:, : A.cols], pivots, A.cols)
    return AffineSolutionSet(particular=Gf2Vec(particular), kernel_basis=tuple(basis))


def inverse(A: Gf2Mat) -> Gf2Mat:
    """
    正方行列 A の逆行列を返す。特異なら NotInvertible。
    """
    if not A.is_square:
        raise NotInvertible(f"{A.rows}x{A.cols} 行列は正方ではありません。")
    n = A.rows
    augmented = np.hstack([A.entries, np.eye(n, dtype=np.uint8)])
    reduced, pivots = _row_reduce(augmented, pivot_limit=n)
    if len(pivots) < n:
        raise NotInvertible(f"行列は GF(2) 上で特異です（階数 {len(pivots)} < {n}）。")
    return Gf2Mat(reduced[:, n:])


def annihilator_basis(S: Sequence[Gf2Vec], ambient_dim: int) -> List[Gf2Vec]:
    """
    {w : w·s = 0 (全 s in S)} の基底を返す。大きさは ambient_dim - rank(S)。
    """
    for s in S:
        if s.dim != ambient_dim:
            raise DimensionMismatch(f"ベクトルの次元 {s.dim} が ambient_dim={ambient_dim} と異なります。")
    return kernel(Gf2Mat.from_rows(list(S), cols=ambient_dim))


def span_elements(basis: Sequence[Gf2Vec], dim: int) -> Iterator[Gf2Vec]:
    """
    basis の張る部分空間の元を、係数の二進数表示の順に列挙する。
    """
    if not basis:
        yield Gf2Vec.zeros(dim)
        return
    stacked = np.vstack([v.bits for v in basis])
    for index in range(2 ** len(basis)):
        mask = np.array([(index >> k) & 1 for k in range(len(basis))], dtype=bool)
        if not mask.any():
            yield Gf2Vec.zeros(dim)
            continue
        yield Gf2Vec(np.bitwise_xor.reduce(stacked[mask], axis=0))


# ---------------------------------------------------------------------- #
#  文字列表現
# ---------------------------------------------------------------------- #
def to_text(A: Gf2Mat) -> str:
    """
    '01;11' のようなセミコロン区切りの行表現を返す。
    """
    return ";".join("".join(str(int(b)) for b in row) for row in A.entries)


def from_text(text: str) -> Gf2Mat:
    """
    to_text の逆。'01;11' を行列に戻す。行の長さが揃わない・0/1 以外の文字は MatrixFormatError。
    """
    rows = [r.strip() for r in text.strip().split(";")]
    if not rows or any(r == "" for r in rows):
        raise MatrixFormatError(f"行列文字列 {text!r} に空の行があります。")
    for r in rows:
        bad = set(r) - {"0", "1"}
        if bad:
            raise MatrixFormatError(f"行 {r!r} に 0/1 以外の文字 {sorted(bad)} が含まれています。")
    widths = {len(r) for r in rows}
    if len(widths) != 1:
        raise MatrixFormatError(f"行の長さが揃っていません: {sorted(widths)}")
    return Gf2Mat(np.array([[int(ch) for ch in r] for r in rows], dtype=np.uint8))
