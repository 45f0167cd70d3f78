"""
surfext 全体で利用する例外クラスを定義するモジュール。

すべての例外は SurfExtError を基底とし、CLI 側ではこの基底クラスを
捕捉して終了コードへ変換する。
"""

from __future__ import annotations


class SurfExtError(Exception):
    """
    surfext が送出するすべての例外の基底クラス。
    """


# ---------------------------------------------------------------------- #
#  事前条件・次元
# ---------------------------------------------------------------------- #
class ContractViolation(SurfExtError, ValueError):
    """
    関数の事前条件が満たされていないことを表す。
    """


class DimensionMismatch(ContractViolation):
    """
    ベクトル・行列の次元が一致しない。
    """


class GenusOutOfRange(ContractViolation):
    """
    種数がサポート範囲 [1, 32] の外にある。
    """


# ---------------------------------------------------------------------- #
#  代数的な失敗
# ---------------------------------------------------------------------- #
class NotInvertible(SurfExtError, ArithmeticError):
    """
    GF(2) 上で正則でない行列の逆行列を求めようとした。
    """


class NotSymplectic(SurfExtError):
    """
    交叉形式を保たない行列が作用として渡された。
    """


class NotUnique(SurfExtError):
    """
    f_* - id が正則でなく、不変二次形式が一意に定まらない。
    """


class NotBounding(SurfExtError):
    """
    Arf 不変量が 1 の二次形式から埋め込みを構成しようとした。
    """


class EnumerationTooLarge(SurfExtError):
    """
    全列挙の上限を超えた。
    """


# ---------------------------------------------------------------------- #
#  入力の解釈
# ---------------------------------------------------------------------- #
class UnknownCurve(SurfExtError, KeyError):
    """
    曲線辞書に存在しない曲線名が指定された。
    """

    def __init__(self, name: str, offset: int | None = None) -> None:
        self.name = name
        self.offset = offset
        where = f"（位置 {offset}）" if offset is not None else ""
        super().__init__(f"未知の曲線名です: {name!r}{where}")

    def __str__(self) -> str:
        # KeyError は引数を repr で表示するため、メッセージをそのまま返す
        return str(self.args[0])


class WordSyntaxError(SurfExtError):
    """
    Dehn ツイスト語の構文エラー。offset は入力文字列中のバイト位置。
    """

    def __init__(self, message: str, offset: int) -> None:
        self.offset = offset
        super().__init__(f"{message}（位置 {offset}）")


class UnknownBuiltin(SurfExtError, KeyError):
    """
    カタログに存在しない組み込み写像名が指定された。
    """

    def __str__(self) -> str:
        return str(self.args[0])


class MatrixFormatError(SurfExtError):
    """
    '01;11' 形式の行列文字列を解釈できない。
    """


class InternalError(SurfExtError, RuntimeError):
    """
    理論上起こり得ない不整合（実装上のバグ）を表す。
    """
