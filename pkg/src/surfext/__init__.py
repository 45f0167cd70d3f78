"""
mod 2 ホモロジーを使って曲面の自己同型が S^4 に拡張可能かを判定するパッケージ。
"""
