"""
周期写像の例と、それらの周期的連結和 h_g。

- f2_octagon: 正八角形の π/4 回転。辺の類の 4-サイクル e1 -> e2 -> e3 -> e4 -> e1
- f3 / f3_prime: 周期 8 の写像。共役な代表 f3_7 / f3_3 の語を使う
- w1_torus: トーラス上の Wiman 写像（周期 6）の mod 2 作用
- id_torus: トーラス上の恒等写像
- hg(g): g != 1, 4 について拡張不可能な周期 8 の写像
"""

from __future__ import annotations

import re
from typing import List

from ..construct import block_sum
from ..errors import ContractViolation
from ..homology import octagon_space, standard_space
from ..twist import HomologyAction
from .base_maps import BuiltinMap, CatalogEntry, MatrixEntry
from .genus3 import F33, F37

_HG = re.compile(r"hg\(\s*(\d+)\s*\)")


class F2Octagon(MatrixEntry):
    NAME = "f2_octagon"
    GENUS = 2
    NOTES = "八角形の π/4 回転。不変形式は 2 つで、どちらも Arf 1。"
    ORDER = 8

    def action(self) -> HomologyAction:
        images = {"e1": "e2", "e2": "e3", "e3": "e4", "e4": "e1"}
        return HomologyAction.from_curve_images(octagon_space(), images)


class W1Torus(MatrixEntry):
    NAME = "w1_torus"
    GENUS = 1
    NOTES = "Wiman 写像 w_1（a1 -> b1, b1 -> a1+b1）。拡張不可能。"
    ORDER = 6

    def action(self) -> HomologyAction:
        return HomologyAction.from_text(standard_space(1), "01;11")


class IdTorus(MatrixEntry):
    NAME = "id_torus"
    GENUS = 1
    NOTES = "トーラス上の恒等写像。これとの連結和は常に拡張可能になる。"
    ORDER = 1

    def action(self) -> HomologyAction:
        return HomologyAction.identity(standard_space(1))


class F3(F37):
    NAME = "f3"
    NOTES = "f_3。共役な f3_7 の語で表す。Arf 1 の不変形式だけを持つ。"


class F3Prime(F33):
    NAME = "f3_prime"
    NOTES = "f'_3。共役な f3_3 の語で表す。Arf 0 の不変形式だけを持つ。"


def hg_parts(genus: int) -> List[str]:
    """
    h_g を構成する周期的連結和の成分名を返す。

    Raises
    ------
    ContractViolation
        g = 1, 4 や g < 1 の場合。
    """
    if genus == 4:
        raise ContractViolation("hg(4) は存在しません。F_4 上の周期写像はすべて S^4 に拡張可能です。")
    if genus < 2:
        raise ContractViolation(f"hg({genus}) は存在しません。g >= 2 かつ g != 4 を指定してください。")

    if genus == 5:
        return ["f2_octagon", "f3_prime"]
    residue = genus % 4
    if residue == 0:
        return ["f3", "f3"] + ["f2_octagon"] * ((genus - 6) // 2)
    if residue == 1:
        return ["f3", "f3", "f3"] + ["f2_octagon"] * ((genus - 9) // 2)
    if residue == 2:
        return ["f2_octagon"] * (genus // 2)
    return ["f3"] + ["f2_octagon"] * ((genus - 3) // 2)


class Hg(CatalogEntry):
    NAME = "hg(g)"
    NOTES = "f2_octagon, f3, f3_prime の周期的連結和。g >= 2, g != 4 で拡張不可能。"
    ORDER = 8

    def matches(self, name: str) -> bool:
        return _HG.fullmatch(name) is not None

    def build(self, name: str) -> BuiltinMap:
        match = _HG.fullmatch(name)
        if match is None:
            raise ContractViolation(f"{name!r} は hg(g) の形ではありません。")
        genus = int(match.group(1))
        parts = hg_parts(genus)

        factories = {"f2_octagon": F2Octagon, "f3": F3, "f3_prime": F3Prime}
        built = {key: factories[key]().build(key).action for key in set(parts)}
        action = block_sum([built[p] for p in parts])
        return BuiltinMap(
            name=f"hg({genus})",
            genus=genus,
            source="block-sum",
            action=action,
            notes=" # ".join(parts),
            order=self.ORDER,
        )
