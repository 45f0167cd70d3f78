"""
surfext のコマンドラインインターフェース。

サブコマンドは surfext.command_ext の拡張モジュールから読み込む。
結果は標準出力へ、ログと診断は標準エラー出力へ書く。
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import List, Optional

from . import config
from .command_api import ExitCodes, load_command_extensions
from .errors import InternalError, SurfExtError

logger = logging.getLogger("surfext")


def create_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="surfext",
        description="曲面の自己同型が S^4 に拡張可能かを mod 2 ホモロジーから判定する",
    )
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True
    load_command_extensions(subparsers)
    return parser


def _setup_logging(args: argparse.Namespace) -> None:
    """
    -q / -v / SURFEXT_LOG_LEVEL からログレベルを決める。
    """
    verbose = getattr(args, "verbose", 0)
    if getattr(args, "quiet", False):
        level = logging.ERROR
    elif verbose >= 2:
        level = logging.DEBUG
    elif verbose == 1:
        level = logging.INFO
    else:
        level = getattr(logging, config.get_log_level())

    logging.basicConfig(level=level, format="%(levelname)s: %(message)s", stream=sys.stderr, force=True)


def main(argv: Optional[List[str]] = None) -> int:
    parser = create_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        code = e.code
        return code if isinstance(code, int) else (ExitCodes.SUCCESS if code is None else ExitCodes.USAGE_ERROR)

    _setup_logging(args)

    try:
        return args.handler(args)
    except InternalError as e:
        logger.error("内部エラー: %s", e)
        return ExitCodes.INTERNAL_ERROR
    except SurfExtError as e:
        logger.error("%s", e)
        return ExitCodes.USAGE_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
