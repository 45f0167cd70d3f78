"""
連結和・周期的連結和・組み込み写像カタログ・穴あき曲面の判定・Nielsen 不変量を扱うモジュール。

ホモロジー上では連結和も周期的連結和も直和（ブロック対角）として表す。
"""

from __future__ import annotations

import enum
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, List, Sequence, Tuple

from .errors import ContractViolation
from .extend import arf_profile, invariant_forms
from .gf2 import Gf2Mat
from .homology import standard_space
from .twist import HomologyAction

if TYPE_CHECKING:
    from .catalog.base_maps import BuiltinMap

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------- #
#  連結和
# ---------------------------------------------------------------------- #
def block_sum(actions: Sequence[HomologyAction]) -> HomologyAction:
    """
    作用の直和を返す。ブロックは標準基底 (a_1, b_1, ...) の順に並ぶ。

    Parameters
    ----------
    actions:
        連結和をとる作用の列。空であってはならない。
    """
    if not actions:
        raise ContractViolation("block_sum には 1 つ以上の作用が必要です。")
    genus = sum(a.genus for a in actions)
    matrix = Gf2Mat.block_diagonal([a.matrix for a in actions])
    return HomologyAction(standard_space(genus), matrix)


def stabilize(action: HomologyAction) -> HomologyAction:
    """
    トーラス上の恒等写像との連結和。結果は常に拡張可能になる。
    """
    return block_sum([action, HomologyAction.identity(standard_space(1))])


def part_profile(action: HomologyAction) -> Tuple[bool, bool]:
    """
    (Arf 0 の不変形式を持つか, Arf 1 の不変形式を持つか)。sum_verdict の入力になる。
    """
    return arf_profile(invariant_forms(action))


def sum_verdict(parts: Sequence[Tuple[bool, bool]]) -> bool:
    """
    連結和の各成分の Arf 分布から連結和の拡張可能性を判定する。

    いずれかの成分が両方の Arf 値をとれば拡張可能。
    そうでなければ、Arf 1 のみの成分の個数が偶数のときに限り拡張可能。
    """
    unbounding_only = 0
    for index, (has_zero, has_one) in enumerate(parts):
        if not (has_zero or has_one):
            raise ContractViolation(f"成分 {index} は不変形式を 1 つも持たないことになっています。")
        if has_zero and has_one:
            return True
        if has_one:
            unbounding_only += 1
    return unbounding_only % 2 == 0


# ---------------------------------------------------------------------- #
#  穴あき曲面
# ---------------------------------------------------------------------- #
@dataclass(frozen=True)
class OrbitProfile:
    """
    境界成分の f 軌道の長さ。
    """

    orbit_lengths: Tuple[int, ...]

    def __post_init__(self) -> None:
        lengths = tuple(int(n) for n in self.orbit_lengths)
        if any(n < 1 for n in lengths):
            raise ContractViolation(f"軌道の長さは 1 以上である必要があります: {lengths}")
        object.__setattr__(self, "orbit_lengths", lengths)

    @property
    def k(self) -> int:
        """
        境界成分の総数。
        """
        return sum(self.orbit_lengths)

    @classmethod
    def from_permutation(cls, permutation: Sequence[int]) -> "OrbitProfile":
        """
        境界成分 i を permutation[i] へ移す置換から軌道の長さを求める。
        """
        k = len(permutation)
        if sorted(permutation) != list(range(k)):
            raise ContractViolation(f"{list(permutation)} は 0..{k - 1} の置換ではありません。")

        seen = [False] * k
        lengths: List[int] = []
        for start in range(k):
            if seen[start]:
                continue
            length = 0
            i = start
            while not seen[i]:
                seen[i] = True
                i = permutation[i]
                length += 1
            lengths.append(length)
        return cls(tuple(lengths))


class PuncturedVerdict(enum.Enum):
    EXTENDABLE = "extendable"
    UNKNOWN = "unknown"


def punctured_verdict(profile: OrbitProfile) -> PuncturedVerdict:
    """
    奇数長の軌道があれば拡張可能。なければ判定できない（逆は知られていない）。
    """
    if any(n % 2 == 1 for n in profile.orbit_lengths):
        return PuncturedVerdict.EXTENDABLE
    return PuncturedVerdict.UNKNOWN


# ---------------------------------------------------------------------- #
#  Nielsen 不変量
# ---------------------------------------------------------------------- #
@dataclass(frozen=True)
class NielsenData:
    """
    周期写像の共役類を決める不変量。

    Parameters
    ----------
    period:
        周期 n。
    punctures:
        商軌道体の穴の数 s。
    valencies:
        各穴での回転データ（mod n の剰余）の多重集合。個数は s。
    """

    period: int
    punctures: int
    valencies: Tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.period < 1:
            raise ContractViolation(f"周期 {self.period} は 1 以上である必要があります。")
        valencies = tuple(self.valencies)
        if len(valencies) != self.punctures:
            raise ContractViolation(
                f"多重集合の大きさ {len(valencies)} が穴の数 {self.punctures} と一致しません。"
            )
        bad = [v for v in valencies if not 0 <= v < self.period]
        if bad:
            raise ContractViolation(f"{bad} は [0, {self.period}) の外です。")
        object.__setattr__(self, "valencies", valencies)

    def __str__(self) -> str:
        body = ",".join(str(v) for v in sorted(self.valencies))
        return f"(n={self.period}, s={self.punctures}, {{{body}}})"


def nielsen_equal(x: NielsenData, y: NielsenData) -> bool:
    """
    周期・穴の数・多重集合がすべて一致するか。一致することと周期写像の共役は同値。
    """
    return (
        x.period == y.period
        and x.punctures == y.punctures
        and Counter(x.valencies) == Counter(y.valencies)
    )


# ---------------------------------------------------------------------- #
#  組み込み写像
# ---------------------------------------------------------------------- #
def builtin(name: str) -> "BuiltinMap":
    """
    カタログから組み込み写像を取り出す。

    Raises
    ------
    UnknownBuiltin
        名前がカタログにない場合。
    ContractViolation
        hg(1), hg(4) のように構成が存在しない引数の場合。
    """
    from .catalog.base_maps import find_entry  # 循環 import 回避のためローカル import

    name = name.strip()
    entry = find_entry(name)
    logger.debug("組み込み写像 %s を構成します（%s）", name, type(entry).__name__)
    return entry.build(name)


def list_builtins() -> List[Tuple[str, int, str]]:
    """
    (名前, 種数, 説明) の一覧。hg は "hg(g)" と種数 0 で表す。
    """
    from .catalog.base_maps import iter_catalog_entries  # 循環 import 回避のためローカル import

    return [(entry.NAME, entry.GENUS, entry.NOTES) for entry in iter_catalog_entries()]
