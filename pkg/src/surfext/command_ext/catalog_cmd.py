"""
list-builtins サブコマンド: 組み込み写像の一覧を表示する。
"""

from __future__ import annotations

import argparse

from ..catalog.base_maps import iter_catalog_entries
from ..command_api import CommandRegistrar, ExitCodes, add_json_flag, emit_json


def _run(args: argparse.Namespace) -> int:
    entries = [
        {
            "name": entry.NAME,
            "genus": entry.GENUS or None,
            "order": entry.ORDER,
            "nielsen": None if entry.NIELSEN is None else str(entry.NIELSEN),
            "notes": entry.NOTES,
        }
        for entry in iter_catalog_entries()
    ]
    entries.sort(key=lambda e: e["name"])

    if args.json:
        emit_json(entries)
        return ExitCodes.SUCCESS

    for e in entries:
        genus = "g" if e["genus"] is None else str(e["genus"])
        print(f"{e['name']:<12} genus={genus:<3} {e['notes']}")
    return ExitCodes.SUCCESS


def register_commands(registrar: CommandRegistrar) -> None:
    registrar.add_command("list-builtins", _run, help="組み込み写像の一覧", configure=add_json_flag)
