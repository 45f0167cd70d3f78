"""
Arf 0 の二次形式 q に対して、標準埋め込み e_0 を h で捩った埋め込み e_0∘h の
誘導形式が q になるようなツイスト語 h を構成するモジュール。

e_0 の誘導形式 q_{e0} は標準基底上で 0 になる形式とし、h^*q_{e0} = q を満たす h を
Q_{r,s} = {i | q(a_i)=r, q(b_i)=s} の分割から組み立てる。
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from .errors import NotBounding
from .extend import ExtendabilityReport, decide
from .quadform import QuadraticForm, arf, pullback, zero_form
from .twist import HomologyAction, TwistWord, action_of, parse_word

logger = logging.getLogger(__name__)

PARTITION_KEYS = ("00", "01", "10", "11")


@dataclass(frozen=True)
class EmbeddingRecipe:
    """
    埋め込みの構成手順。

    Parameters
    ----------
    q:
        目標の形式（Arf 0）。
    partition:
        "00" / "01" / "10" / "11" をキーとする Q_{r,s}（1 始まりの添字）。
    pairs:
        Q_{1,1} を i_1 < j_1 < i_2 < j_2 < ... の順に組にしたもの。
    word:
        h を表すツイスト語。
    """

    q: QuadraticForm
    partition: Dict[str, Tuple[int, ...]]
    pairs: Tuple[Tuple[int, int], ...]
    word: TwistWord

    def to_dict(self) -> Dict[str, Any]:
        return {
            "q": self.q.to_dict(),
            "partition": {key: list(self.partition[key]) for key in PARTITION_KEYS},
            "pairs": [list(p) for p in self.pairs],
            "word_text": str(self.word),
        }


def _partition(q: QuadraticForm) -> Dict[str, Tuple[int, ...]]:
    buckets: Dict[str, List[int]] = {key: [] for key in PARTITION_KEYS}
    values = q.values
    for i in range(1, q.space.genus + 1):
        key = f"{values[2 * i - 2]}{values[2 * i - 1]}"
        buckets[key].append(i)
    return {key: tuple(indices) for key, indices in buckets.items()}


def synthesize(q: QuadraticForm) -> EmbeddingRecipe:
    """
    h^*q_{e0} = q となる語 h を構成する。

    h = Π_{i∈Q01} T(a_i) · Π_{j∈Q10} T(b_j) · Π_k T[a_{i_k}+a_{j_k}] T[b_{i_k}+b_{j_k}]。
    各因子は互いに交わらない添字の上で作用するので、積の順序は結果に影響しない。

    Raises
    ------
    NotBounding
        Arf(q) = 1 の場合。
    """
    if arf(q) == 1:
        raise NotBounding("Arf 不変量が 1 の形式は S^4 への埋め込みから誘導されません。")

    partition = _partition(q)
    q11 = partition["11"]
    pairs = tuple((q11[k], q11[k + 1]) for k in range(0, len(q11), 2))

    letters = [f"T(a{i})" for i in partition["01"]]
    letters += [f"T(b{j})" for j in partition["10"]]
    for i, j in pairs:
        letters.append(f"T[a{i}+a{j}]")
        letters.append(f"T[b{i}+b{j}]")
    word = parse_word(q.space.genus, " ".join(letters))

    logger.debug("埋め込みの語を構成しました: %s", word)
    return EmbeddingRecipe(q=q, partition=partition, pairs=pairs, word=word)


def induced_form(recipe: EmbeddingRecipe) -> QuadraticForm:
    """
    埋め込み e_0∘h の誘導形式 h^*q_{e0}。
    """
    space = recipe.q.space
    return pullback(zero_form(space), action_of(recipe.word).matrix)


def verify_recipe(recipe: EmbeddingRecipe) -> bool:
    return induced_form(recipe) == recipe.q


def extendable_with(recipe: EmbeddingRecipe, action: HomologyAction) -> bool:
    """
    埋め込み e_0∘h に関して f が拡張可能か（f^*q_e = q_e）。
    """
    q_e = induced_form(recipe)
    return pullback(q_e, action.matrix) == q_e


def embedding_for(
    action: HomologyAction, cap: Optional[int] = None
) -> Tuple[ExtendabilityReport, Optional[EmbeddingRecipe]]:
    """
    作用を判定し、拡張可能なら証拠の形式から埋め込みの語を構成する。
    """
    report = decide(action, cap=cap)
    if report.witness is None:
        return report, None
    return report, synthesize(report.witness)
