"""
不変二次形式の族を求め、S^4 への拡張可能性を判定するモジュール。

f が拡張可能であることは「Arf(q) = 0 かつ f^*q = q を満たす q が存在する」ことと同値。
不変形式の全体は q_0 + span{ξ_1, ..., ξ_d} というアフィン族になり、
d = dim ker(f_* - id) である。
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Any, Dict, Iterator, Optional, Tuple

from . import config
from .errors import InternalError, NotInvertible, NotUnique
from .gf2 import Gf2Mat, Gf2Vec, annihilator_basis, inverse, solve_affine, span_elements
from .quadform import QuadraticForm, arf, pullback
from .twist import HomologyAction

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------- #
#  不変形式の族
# ---------------------------------------------------------------------- #
@dataclass(frozen=True)
class InvariantFormFamily:
    """
    不変形式の族 {base + Σ t_i ξ_i}。

    Parameters
    ----------
    base:
        不変形式 q_0。
    functionals:
        Im(f_* - id) 上で消える線形汎関数 ξ_i の座標ベクトル。一次独立。
    action:
        族を求めた作用。
    """

    base: QuadraticForm
    functionals: Tuple[Gf2Vec, ...]
    action: HomologyAction

    @property
    def d(self) -> int:
        return len(self.functionals)

    def __len__(self) -> int:
        return 2 ** self.d

    def members(self) -> Iterator[QuadraticForm]:
        for combo in span_elements(self.functionals, self.base.space.dim):
            yield self.base + combo

    def __iter__(self) -> Iterator[QuadraticForm]:
        return self.members()

    def __contains__(self, q: object) -> bool:
        if not isinstance(q, QuadraticForm) or q.space.dim != self.base.space.dim:
            return False
        return pullback(q, self.action.matrix) == q


def invariant_forms(action: HomologyAction) -> InvariantFormFamily:
    """
    f^*q = q を満たす二次形式の族を求める。

    未知数を基底値 v_i = q(e_i) とすると、q(f_* e_i) = q(e_i) は
    Σ_j M[j, i] v_j + (M の第 i 列の交差項) = v_i という一次方程式になる。
    これを (M^T + I) v = b として解く。

    Raises
    ------
    InternalError
        連立方程式が矛盾した場合。シンプレクティックな作用では起こらない。
    """
    space = action.space
    M = action.matrix
    identity = Gf2Mat.identity(space.dim)

    rhs = Gf2Vec.of(space.cross_term(column) for column in M.columns())
    solutions = solve_affine(M.T + identity, rhs)
    if solutions.particular is None:
        raise InternalError("不変形式の連立方程式が矛盾しました。作用のシンプレクティック性を確認してください。")

    functionals = annihilator_basis((M + identity).columns(), space.dim)
    family = InvariantFormFamily(QuadraticForm(space, solutions.particular), tuple(functionals), action)
    logger.debug("不変形式の族: genus=%d, d=%d", space.genus, family.d)
    return family


# ---------------------------------------------------------------------- #
#  Arf 値のショートカット
# ---------------------------------------------------------------------- #
def _shortcut_candidates(family: InvariantFormFamily) -> Iterator[QuadraticForm]:
    """
    q_0, q_0 + ξ_i, q_0 + ξ_i + ξ_j を順に返す。合計 (d^2 + d + 2) / 2 個。
    """
    q0 = family.base
    yield q0
    for xi in family.functionals:
        yield q0 + xi
    for xi, xj in combinations(family.functionals, 2):
        yield q0 + (xi + xj)


def shortcut_budget(d: int) -> int:
    return (d * d + d + 2) // 2


def arf_shortcut(family: InvariantFormFamily) -> bool:
    """
    族に Arf 0 の形式があるかを、高々 (d^2 + d + 2) / 2 回の Arf 計算で判定する。

    Arf(q_0 + Σ t_i ξ_i) は t の 2 次多項式なので、
    t の重みが 2 以下の点で 0 が現れなければ恒等的に 1 である。
    """
    return any(arf(q) == 0 for q in _shortcut_candidates(family))


def _shortcut_witness(family: InvariantFormFamily) -> Optional[QuadraticForm]:
    for q in _shortcut_candidates(family):
        if arf(q) == 0:
            return q
    return None


def arf_profile(family: InvariantFormFamily) -> Tuple[bool, bool]:
    """
    (Arf 0 の形式があるか, Arf 1 の形式があるか) を返す。

    標本点での値がすべて Arf(q_0) と一致するときに限り Arf は族上で定数になる。
    """
    values = [arf(q) for q in _shortcut_candidates(family)]
    if all(v == values[0] for v in values):
        return values[0] == 0, values[0] == 1
    return True, True


# ---------------------------------------------------------------------- #
#  一意な不変形式
# ---------------------------------------------------------------------- #
def unique_form(action: HomologyAction) -> QuadraticForm:
    """
    f_* - id が正則なときの唯一の不変形式 q(x) = x·(f_* - id)^{-1}(x) を返す。

    Raises
    ------
    NotUnique
        f_* - id が特異な場合。
    """
    space = action.space
    try:
        A_inv = inverse(action.matrix + Gf2Mat.identity(space.dim))
    except NotInvertible:
        raise NotUnique("f_* - id が正則でないため、不変形式は一意に定まりません。") from None

    values = Gf2Vec.of(space.pair(e, A_inv @ e) for e in space.basis())
    return QuadraticForm(space, values)


# ---------------------------------------------------------------------- #
#  判定
# ---------------------------------------------------------------------- #
@dataclass(frozen=True)
class ExtendabilityReport:
    """
    判定結果と証拠。

    enumerated が False のとき（d が上限を超えたとき）、arf_zero_count / arf_one_count は None。
    """

    extendable: bool
    d: int
    invariant_count: int
    witness: Optional[QuadraticForm]
    arf_zero_count: Optional[int]
    arf_one_count: Optional[int]
    unique_form: Optional[QuadraticForm] = None
    enumerated: bool = True

    def to_dict(self) -> Dict[str, Any]:
        return {
            "extendable": self.extendable,
            "d": self.d,
            "invariant_count": self.invariant_count,
            "arf_zero_count": self.arf_zero_count,
            "arf_one_count": self.arf_one_count,
            "witness": None if self.witness is None else self.witness.to_dict(),
            "unique_form": None if self.unique_form is None else self.unique_form.to_dict(),
            "enumerated": self.enumerated,
        }


def decide(action: HomologyAction, cap: Optional[int] = None) -> ExtendabilityReport:
    """
    作用が S^4 に拡張可能かを判定する。

    Parameters
    ----------
    action:
        判定する f_*。
    cap:
        族を全列挙する d の上限。None なら config.get_enumeration_cap()。

    Returns
    -------
    ExtendabilityReport
        d <= cap なら Arf の内訳と辞書式最小の Arf 0 形式を含む。
        d > cap なら Arf ショートカットの判定だけを含む。
    """
    if cap is None:
        cap = config.get_enumeration_cap()

    family = invariant_forms(action)
    d = family.d
    unique = unique_form(action) if d == 0 else None

    if d > cap:
        logger.warning("d=%d が列挙上限 %d を超えたため Arf ショートカットだけで判定します。", d, cap)
        witness = _shortcut_witness(family)
        return ExtendabilityReport(
            extendable=witness is not None,
            d=d,
            invariant_count=len(family),
            witness=witness,
            arf_zero_count=None,
            arf_one_count=None,
            unique_form=unique,
            enumerated=False,
        )

    zero_count = one_count = 0
    witness = None
    for q in family.members():
        if arf(q):
            one_count += 1
            continue
        zero_count += 1
        if witness is None or q.sort_key() < witness.sort_key():
            witness = q

    logger.debug("判定: d=%d, Arf0=%d, Arf1=%d", d, zero_count, one_count)
    return ExtendabilityReport(
        extendable=zero_count > 0,
        d=d,
        invariant_count=len(family),
        witness=witness,
        arf_zero_count=zero_count,
        arf_one_count=one_count,
        unique_form=unique,
    )
