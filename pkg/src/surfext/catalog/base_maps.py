"""
組み込み写像カタログの基底クラスと、エントリの自動発見ロジックを定義するモジュール。

- BuiltinMap: 構成済みの組み込み写像
- CatalogEntry / WordEntry / MatrixEntry: カタログエントリの基底クラス
- iter_catalog_entries(): surfext.catalog パッケージ内からサブクラスを自動列挙
- find_entry(name): 名前に一致するエントリを返す
"""

from __future__ import annotations

import importlib
import inspect
import logging
import pkgutil
from dataclasses import dataclass
from typing import ClassVar, Iterable, List, Mapping, Optional

from ..construct import NielsenData
from ..errors import UnknownBuiltin
from ..homology import standard_space
from ..quadform import QuadraticForm, from_curve_values
from ..twist import HomologyAction, TwistWord, action_of, parse_word

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BuiltinMap:
    """
    構成済みの組み込み写像。

    source は "twist-word" / "explicit-matrix" / "block-sum" のいずれか。
    twist-word の場合は action == action_of(word) が成り立つ。
    """

    name: str
    genus: int
    source: str
    action: HomologyAction
    notes: str = ""
    word: Optional[TwistWord] = None
    order: Optional[int] = None
    nielsen: Optional[NielsenData] = None
    preserved_form: Optional[QuadraticForm] = None


class CatalogEntry:
    """
    カタログエントリの共通ベースクラス。

    新しい組み込み写像は、このパッケージ内のモジュールにサブクラスを定義するだけで登録される。
    """

    NAME: ClassVar[str] = ""
    GENUS: ClassVar[int] = 0
    NOTES: ClassVar[str] = ""
    # 写像類としての位数。ホモロジー上の作用の位数はこれを割り切る
    ORDER: ClassVar[Optional[int]] = None
    NIELSEN: ClassVar[Optional[NielsenData]] = None
    # チェイン曲線などの名前付き曲線上での値で与えた不変形式
    PRESERVED_FORM: ClassVar[Optional[Mapping[str, int]]] = None

    def matches(self, name: str) -> bool:
        return name == self.NAME

    def build(self, name: str) -> BuiltinMap:
        raise NotImplementedError

    def _preserved_form(self) -> Optional[QuadraticForm]:
        if self.PRESERVED_FORM is None:
            return None
        return from_curve_values(standard_space(self.GENUS), self.PRESERVED_FORM)


class WordEntry(CatalogEntry):
    """
    ツイスト語で与えられるエントリ。
    """

    WORD: ClassVar[str] = ""

    def build(self, name: str) -> BuiltinMap:
        word = parse_word(self.GENUS, self.WORD)
        return BuiltinMap(
            name=self.NAME,
            genus=self.GENUS,
            source="twist-word",
            action=action_of(word),
            notes=self.NOTES,
            word=word,
            order=self.ORDER,
            nielsen=self.NIELSEN,
            preserved_form=self._preserved_form(),
        )


class MatrixEntry(CatalogEntry):
    """
    作用を行列で直接与えるエントリ。サブクラスは action() を実装する。
    """

    def action(self) -> HomologyAction:
        raise NotImplementedError

    def build(self, name: str) -> BuiltinMap:
        return BuiltinMap(
            name=self.NAME,
            genus=self.GENUS,
            source="explicit-matrix",
            action=self.action(),
            notes=self.NOTES,
            order=self.ORDER,
            nielsen=self.NIELSEN,
            preserved_form=self._preserved_form(),
        )


# ---------------------------------------------------------------------- #
#  エントリ自動発見
# ---------------------------------------------------------------------- #
_BASES = (CatalogEntry, WordEntry, MatrixEntry)


def iter_catalog_entries() -> Iterable[CatalogEntry]:
    """
    surfext.catalog パッケージ内から CatalogEntry のサブクラスを列挙し、インスタンスを返す。

    別モジュールから import されただけのクラスは、定義元のモジュールでのみ数える。
    """
    # このモジュールは surfext.catalog.base_maps
    package_name = __name__.rsplit(".", 1)[0]
    package = importlib.import_module(package_name)

    for module_info in pkgutil.iter_modules(package.__path__):
        # 先頭が '_' のモジュールはスキップ
        if module_info.name.startswith("_"):
            continue

        module_fullname = f"{package_name}.{module_info.name}"
        module = importlib.import_module(module_fullname)

        for _name, obj in inspect.getmembers(module, inspect.isclass):
            if not issubclass(obj, CatalogEntry) or obj in _BASES:
                continue
            if obj.__module__ != module_fullname:
                continue
            logger.debug("カタログエントリを発見: %s (%s)", obj.NAME, module_fullname)
            yield obj()


def list_catalog_entries() -> List[CatalogEntry]:
    return list(iter_catalog_entries())


def find_entry(name: str) -> CatalogEntry:
    """
    名前に一致するエントリを返す。見つからなければ UnknownBuiltin。
    """
    name = name.strip()
    for entry in iter_catalog_entries():
        if entry.matches(name):
            return entry
    known = ", ".join(sorted(e.NAME for e in iter_catalog_entries()))
    raise UnknownBuiltin(f"未知の組み込み写像です: {name!r}（候補: {known}）")
