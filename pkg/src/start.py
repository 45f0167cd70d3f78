"""
アプリケーションのエントリポイント。

src/start.py を直接実行すると surfext の CLI が起動する。
相対パスのみを使用し、外部環境に依存しない構成とする。
"""

import os
import sys


def _append_local_packages() -> None:
    """
    カレントディレクトリ（src）の surfext パッケージを import 可能にする。
    """
    current_dir = os.path.dirname(os.path.abspath(__file__))

    if current_dir not in sys.path:
        sys.path.insert(0, current_dir)


def main() -> None:
    """
    sys.argv を surfext.cli.main に渡し、その終了コードで終了する。
    """
    _append_local_packages()

    from surfext.cli import main as cli_main  # type: ignore

    sys.exit(cli_main(sys.argv[1:]))


if __name__ == "__main__":
    main()
