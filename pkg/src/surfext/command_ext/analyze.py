"""
analyze サブコマンド: 作用の拡張可能性を判定して報告する。
"""

from __future__ import annotations

import argparse

from ..command_api import (
    CommandRegistrar,
    ExitCodes,
    add_action_input,
    add_json_flag,
    emit_json,
    format_form,
    resolve_action,
)
from ..extend import decide


def _configure(parser: argparse.ArgumentParser) -> None:
    add_action_input(parser)
    add_json_flag(parser)
    parser.add_argument("--cap", type=int, default=None, help="族を全列挙する d の上限（既定 SURFEXT_ENUM_CAP）")


def _run(args: argparse.Namespace) -> int:
    action, label = resolve_action(args)
    report = decide(action, cap=args.cap)

    if args.json:
        emit_json({"input": label, "genus": action.genus, **report.to_dict()})
    else:
        print(f"input: {label}")
        print(f"genus: {action.genus}")
        print(f"extendable: {'yes' if report.extendable else 'no'}")
        print(f"d: {report.d} (invariant forms: {report.invariant_count})")
        if report.enumerated:
            print(f"arf 0 / arf 1: {report.arf_zero_count} / {report.arf_one_count}")
        else:
            print("arf 0 / arf 1: not enumerated")
        if report.witness is not None:
            print(f"witness: {format_form(report.witness.to_dict())}")
        if report.unique_form is not None:
            print(f"unique form: {format_form(report.unique_form.to_dict())}")

    return ExitCodes.SUCCESS if report.extendable else ExitCodes.NEGATIVE_VERDICT


def register_commands(registrar: CommandRegistrar) -> None:
    registrar.add_command("analyze", _run, help="S^4 への拡張可能性を判定する", configure=_configure)
