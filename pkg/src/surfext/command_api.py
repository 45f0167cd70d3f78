"""
サブコマンド拡張用の API とローダを定義するモジュール。

- CommandRegistrar: argparse のサブパーサへコマンドを追加するための薄いラッパ
- load_command_extensions(subparsers): surfext.command_ext パッケージ配下の
  register_commands(registrar) を探して順に呼び出す
- add_action_input / resolve_action: 作用の入力（--word / --builtin / --matrix / --random）の共通処理
- emit_json: 出力の JSON 整形
"""

from __future__ import annotations

import argparse
import importlib
import json
import logging
import pkgutil
from typing import Any, Callable, List, Optional, Tuple

import numpy as np

from . import config
from .construct import builtin
from .errors import ContractViolation
from .gf2 import from_text
from .homology import standard_space
from .twist import HomologyAction, action_of, parse_word, random_word

logger = logging.getLogger(__name__)

Handler = Callable[[argparse.Namespace], int]


class ExitCodes:
    """
    surfext の終了コード。

    - 0: 成功（拡張可能・照合成功を含む）
    - 1: 内部エラー（起こり得ない不整合、表の照合失敗）
    - 2: 入力・使い方の誤り
    - 3: 否定的な判定（拡張不可能・Arf 1 の形式）
    """

    SUCCESS = 0
    INTERNAL_ERROR = 1
    USAGE_ERROR = 2
    NEGATIVE_VERDICT = 3


class CommandRegistrar:
    """
    サブコマンド登録用のシンプルなラッパクラス。

    拡張モジュール側では、このクラスを通じてサブコマンドを追加する。
    """

    def __init__(self, subparsers: "argparse._SubParsersAction[argparse.ArgumentParser]") -> None:
        self._subparsers = subparsers
        self._names: List[str] = []

    @property
    def names(self) -> List[str]:
        """
        登録済みのサブコマンド名を返す。
        """
        return list(self._names)

    def add_command(
        self,
        name: str,
        handler: Handler,
        help: str,
        configure: Optional[Callable[[argparse.ArgumentParser], None]] = None,
    ) -> argparse.ArgumentParser:
        """
        サブコマンドを追加する。

        Parameters
        ----------
        name:
            'analyze' のようなサブコマンド名。
        handler:
            解析済み引数を受け取り終了コードを返す関数。
        help:
            ヘルプに表示する説明。
        configure:
            サブパーサに引数を追加するコールバック。不要なら None。

        Returns
        -------
        argparse.ArgumentParser
            追加されたサブパーサ。
        """
        parser = self._subparsers.add_parser(name, help=help, description=help)
        _add_common_args(parser)
        if configure is not None:
            configure(parser)
        parser.set_defaults(handler=handler, command=name)
        self._names.append(name)
        return parser


def _add_common_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("-v", "--verbose", action="count", default=0, help="詳細ログ（-v, -vv）")
    parser.add_argument("-q", "--quiet", action="store_true", help="エラーのみ表示")


def load_command_extensions(subparsers: "argparse._SubParsersAction[argparse.ArgumentParser]") -> CommandRegistrar:
    """
    surfext.command_ext パッケージ配下の拡張モジュールを読み込み、
    各モジュールの register_commands(registrar) を実行する。
    """
    package_name = f"{__package__}.command_ext"
    registrar = CommandRegistrar(subparsers)
    try:
        package = importlib.import_module(package_name)
    except ImportError:
        # 拡張パッケージが存在しない場合は何もしない
        return registrar

    for module_info in pkgutil.iter_modules(package.__path__):
        if module_info.name.startswith("_"):
            continue

        module_fullname = f"{package_name}.{module_info.name}"
        module = importlib.import_module(module_fullname)
        register = getattr(module, "register_commands", None)
        if callable(register):
            register(registrar)
            logger.debug("コマンド拡張を読み込みました: %s", module_fullname)
    return registrar


# ---------------------------------------------------------------------- #
#  共通の入力と出力
# ---------------------------------------------------------------------- #
def add_json_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json", action="store_true", help="JSON で出力する")


def add_action_input(parser: argparse.ArgumentParser, required: bool = True) -> None:
    """
    作用を指定する引数を追加する。--word / --builtin / --matrix / --random は排他。
    """
    parser.add_argument("--genus", type=int, help="種数 g（--word / --random では必須）")
    group = parser.add_mutually_exclusive_group(required=required)
    group.add_argument("--word", help='ツイスト語。例: "T(c1) T(c2) T\'(d2)"')
    group.add_argument("--builtin", help="組み込み写像の名前。例: f3_7, f4_12, hg(6)")
    group.add_argument("--matrix", help='標準基底順の行をセミコロンで区切った行列。例: "01;11"')
    group.add_argument("--random", type=int, metavar="LENGTH", help="LENGTH 個のランダムな横断写像の積")
    parser.add_argument(
        "--seed",
        type=int,
        default=None,
        help="--random の乱数シード（既定は SURFEXT_SEED または固定値）",
    )


def has_action_input(args: argparse.Namespace) -> bool:
    return any(getattr(args, key, None) is not None for key in ("word", "builtin", "matrix", "random"))


def _require_genus(args: argparse.Namespace, flag: str) -> int:
    if args.genus is None:
        raise ContractViolation(f"{flag} には --genus の指定が必要です。")
    return args.genus


def resolve_action(args: argparse.Namespace) -> Tuple[HomologyAction, str]:
    """
    引数から作用と、その出所を表すラベルを返す。
    """
    if args.builtin is not None:
        built = builtin(args.builtin)
        if args.genus is not None and args.genus != built.genus:
            raise ContractViolation(f"{built.name} の種数は {built.genus} ですが --genus {args.genus} が指定されました。")
        return built.action, f"builtin {built.name}"

    if args.word is not None:
        genus = _require_genus(args, "--word")
        word = parse_word(genus, args.word)
        return action_of(word), f"word {word}"

    if args.matrix is not None:
        matrix = from_text(args.matrix)
        genus = args.genus if args.genus is not None else matrix.rows // 2
        if matrix.rows != 2 * genus or matrix.rows == 0:
            raise ContractViolation(f"{matrix.rows}x{matrix.cols} 行列は種数 {genus} の作用になりません。")
        return HomologyAction(standard_space(genus), matrix), f"matrix {args.matrix}"

    if args.random is not None:
        genus = _require_genus(args, "--random")
        if args.random < 0:
            raise ContractViolation(f"--random の長さ {args.random} は 0 以上である必要があります。")
        seed = args.seed if args.seed is not None else config.get_default_seed()
        word = random_word(genus, np.random.default_rng(seed), args.random)
        logger.info("ランダムな語（seed=%d）: %s", seed, word)
        return action_of(word), f"random seed={seed} word {word}"

    raise ContractViolation("作用の入力（--word / --builtin / --matrix / --random）がありません。")


def emit_json(payload: Any) -> None:
    print(json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False))


def format_form(values: dict) -> str:
    return " ".join(f"{k}={v}" for k, v in values.items())
