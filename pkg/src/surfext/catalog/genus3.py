"""
種数 3 の周期 8 の写像類 f_{3,3}, f_{3,7}。
"""

from __future__ import annotations

from ..construct import NielsenData
from .base_maps import WordEntry


class F33(WordEntry):
    NAME = "f3_3"
    GENUS = 3
    WORD = "T(c1) T(c2) T(c3) T(c4) T(c5) T(c6) T(c7)"
    NOTES = "c_i -> c_{i+1} (i=1..6)。不変形式は 2 つで、どちらも Arf 0。"
    ORDER = 8
    NIELSEN = NielsenData(period=8, punctures=3, valencies=(1, 1, 6))
    PRESERVED_FORM = {"c1": 1, "c2": 1, "c3": 1, "c4": 1, "c5": 1, "c6": 1}


class F37(WordEntry):
    NAME = "f3_7"
    GENUS = 3
    WORD = "T(d1) T(c3) T(c4) T(c5) T(c2) T(c3) T(c4) T(c5) T(c6)"
    NOTES = "f(c_2) = c_1+c_3+c_4。不変形式は 2 つで、どちらも Arf 1。"
    ORDER = 8
    NIELSEN = NielsenData(period=8, punctures=3, valencies=(1, 2, 5))
    PRESERVED_FORM = {"c1": 0, "c2": 1, "c3": 1, "c4": 1, "c5": 1, "c6": 1}
