"""
embed サブコマンド: Arf 0 の形式から埋め込みの語 h を構成する。

形式は --form（JSON オブジェクトか "a1=1,b1=0,..."、チェイン曲線名も可）で直接与えるか、
作用を与えてその証拠の形式を使う。
"""

from __future__ import annotations

import argparse
import json
import logging
import re
from typing import Dict

from ..command_api import (
    CommandRegistrar,
    ExitCodes,
    add_action_input,
    add_json_flag,
    emit_json,
    has_action_input,
    resolve_action,
)
from ..embed import embedding_for, synthesize, verify_recipe
from ..errors import ContractViolation, NotBounding
from ..homology import standard_space
from ..quadform import QuadraticForm, from_curve_values

logger = logging.getLogger(__name__)

_BASIS_LABEL = re.compile(r"[ab]\d+")


def _parse_values(text: str) -> Dict[str, int]:
    text = text.strip()
    if text.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ContractViolation(f"--form の JSON を解釈できません: {exc}") from None
        if not isinstance(data, dict):
            raise ContractViolation("--form の JSON はオブジェクトである必要があります。")
        return {str(k): v for k, v in data.items()}

    values: Dict[str, int] = {}
    for item in re.split(r"[,\s]+", text):
        if not item:
            continue
        key, sep, raw = item.partition("=")
        if not sep or not raw.strip().isdigit():
            raise ContractViolation(f"--form の項目 {item!r} は name=0 か name=1 の形で書いてください。")
        values[key.strip()] = int(raw)
    return values


def parse_form(genus: int, text: str) -> QuadraticForm:
    """
    --form の文字列を二次形式にする。a_i, b_i 以外の曲線名があれば曲線上の値として解く。
    """
    space = standard_space(genus)
    values = _parse_values(text)
    if all(_BASIS_LABEL.fullmatch(k) for k in values):
        return QuadraticForm.from_dict(space, values)
    return from_curve_values(space, values)


def _configure(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--form", help='形式の値。例: "a1=1,b1=0" や \'{"c1": 1, ...}\'')
    add_action_input(parser, required=False)
    add_json_flag(parser)


def _run(args: argparse.Namespace) -> int:
    if (args.form is None) == (not has_action_input(args)):
        raise ContractViolation("--form か作用の入力（--word / --builtin / --matrix / --random）のどちらか一方を指定してください。")

    if args.form is not None:
        if args.genus is None:
            raise ContractViolation("--form には --genus の指定が必要です。")
        q = parse_form(args.genus, args.form)
        try:
            recipe = synthesize(q)
        except NotBounding as exc:
            logger.error("%s", exc)
            return ExitCodes.NEGATIVE_VERDICT
    else:
        action, label = resolve_action(args)
        _, recipe = embedding_for(action)
        if recipe is None:
            logger.error("%s は拡張可能ではないため、Arf 0 の不変形式がありません。", label)
            return ExitCodes.NEGATIVE_VERDICT

    verified = verify_recipe(recipe)
    if args.json:
        emit_json({**recipe.to_dict(), "verified": verified})
    else:
        print(f"word: {recipe.word}")
        for key, indices in recipe.partition.items():
            print(f"Q{key}: {list(indices)}")
        print(f"pairs: {[list(p) for p in recipe.pairs]}")
        print(f"verified: {'yes' if verified else 'no'}")
    return ExitCodes.SUCCESS if verified else ExitCodes.INTERNAL_ERROR


def register_commands(registrar: CommandRegistrar) -> None:
    registrar.add_command("embed", _run, help="Arf 0 の形式を誘導する埋め込みの語を構成する", configure=_configure)
