"""
table4 サブコマンド: f_{4,1}..f_{4,12} の H_1 への作用をツイスト語から再計算して表示する。
"""

from __future__ import annotations

import argparse
import logging

from ..catalog.genus4 import TABLE_ORDER, compute_row, table_mismatches
from ..command_api import CommandRegistrar, ExitCodes, add_json_flag, emit_json
from ..homology import chain_labels

logger = logging.getLogger(__name__)


def _configure(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--check", action="store_true", help="組み込みの表と照合し、食い違いがあれば失敗する")
    add_json_flag(parser)


def _run(args: argparse.Namespace) -> int:
    columns = chain_labels(4)
    rows = {name: compute_row(name) for name in TABLE_ORDER}

    mismatches = table_mismatches(rows) if args.check else []
    for name, column, expected, actual in mismatches:
        logger.error("%s の %s 列が一致しません: 期待値 %s, 計算値 %s", name, column, expected, actual)

    if args.json:
        payload = {
            "columns": columns,
            "rows": {name: dict(zip(columns, row)) for name, row in rows.items()},
        }
        if args.check:
            payload["check"] = {
                "ok": not mismatches,
                "mismatches": [
                    {"map": n, "column": c, "expected": e, "actual": a} for n, c, e, a in mismatches
                ],
            }
        emit_json(payload)
    else:
        for name, row in rows.items():
            cells = "  ".join(f"{c}->{image}" for c, image in zip(columns, row))
            print(f"{name:<6} {cells}")
        if args.check:
            total = len(TABLE_ORDER) * len(columns)
            print(f"check: {total - len(mismatches)}/{total} entries match")

    if mismatches:
        return ExitCodes.INTERNAL_ERROR
    return ExitCodes.SUCCESS


def register_commands(registrar: CommandRegistrar) -> None:
    registrar.add_command("table4", _run, help="f_{4,i} の作用の表を再計算する", configure=_configure)
