"""
count-forms サブコマンド: 二次形式を全列挙して Arf 値ごとに数える。
"""

from __future__ import annotations

import argparse

from ..command_api import CommandRegistrar, ExitCodes, add_json_flag, emit_json
from ..errors import ContractViolation
from ..homology import standard_space
from ..quadform import count_by_arf, expected_arf_counts

MAX_COUNT_GENUS = 4


def _configure(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--genus", type=int, help=f"種数（1..{MAX_COUNT_GENUS}）。省略時はすべて")
    add_json_flag(parser)


def _run(args: argparse.Namespace) -> int:
    if args.genus is None:
        genera = list(range(1, MAX_COUNT_GENUS + 1))
    elif 1 <= args.genus <= MAX_COUNT_GENUS:
        genera = [args.genus]
    else:
        raise ContractViolation(f"count-forms の種数は 1..{MAX_COUNT_GENUS} です（{args.genus} が指定されました）。")

    rows = []
    for genus in genera:
        zero, one = count_by_arf(standard_space(genus))
        expected_zero, expected_one = expected_arf_counts(genus)
        rows.append(
            {
                "genus": genus,
                "total": zero + one,
                "arf_zero": zero,
                "arf_one": one,
                "expected_arf_zero": expected_zero,
                "expected_arf_one": expected_one,
            }
        )

    if args.json:
        emit_json(rows)
    else:
        for r in rows:
            print(f"g={r['genus']}: total={r['total']} arf0={r['arf_zero']} arf1={r['arf_one']}")

    ok = all(r["arf_zero"] == r["expected_arf_zero"] and r["arf_one"] == r["expected_arf_one"] for r in rows)
    return ExitCodes.SUCCESS if ok else ExitCodes.INTERNAL_ERROR


def register_commands(registrar: CommandRegistrar) -> None:
    registrar.add_command("count-forms", _run, help="二次形式を Arf 値ごとに数える", configure=_configure)
