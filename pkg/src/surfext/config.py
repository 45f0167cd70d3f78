"""
環境変数から設定値を読み出すモジュール。

- SURFEXT_ENUM_CAP : 不変形式族を全列挙する次元 d の上限（既定 20）
- SURFEXT_SEED     : 乱数を使う処理の既定シード
- SURFEXT_LOG_LEVEL: ログレベル（既定 WARNING）

値が不正な場合は警告を出して既定値を使う。
"""

from __future__ import annotations

import logging
import os

logger = logging.getLogger(__name__)

DEFAULT_ENUMERATION_CAP = 20
DEFAULT_SEED = 20250417
DEFAULT_LOG_LEVEL = "WARNING"

_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def _read_int(key: str, default: int, minimum: int = 0) -> int:
    """
    環境変数 key を整数として読む。未設定・不正値なら default を返す。
    """
    raw = os.environ.get(key)
    if raw is None or raw.strip() == "":
        return default

    try:
        value = int(raw)
    except ValueError:
        logger.warning("%s=%r は整数ではないため既定値 %d を使います。", key, raw, default)
        return default

    if value < minimum:
        logger.warning("%s=%d は %d 未満のため既定値 %d を使います。", key, value, minimum, default)
        return default
    return value


def get_enumeration_cap() -> int:
    """
    不変形式族 2^d 個を全列挙してよい d の上限を返す。

    これを超える場合、extend.decide は Arf ショートカットだけで判定する。
    """
    return _read_int("SURFEXT_ENUM_CAP", DEFAULT_ENUMERATION_CAP)


def get_default_seed() -> int:
    """
    乱数生成の既定シードを返す。
    """
    return _read_int("SURFEXT_SEED", DEFAULT_SEED)


def get_log_level() -> str:
    """
    ログレベル名を返す。
    """
    raw = os.environ.get("SURFEXT_LOG_LEVEL", DEFAULT_LOG_LEVEL).strip().upper()
    if raw not in _LOG_LEVELS:
        return DEFAULT_LOG_LEVEL
    return raw
