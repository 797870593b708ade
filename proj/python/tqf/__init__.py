"""Exact zero counts of two-term trace forms over finite fields.

The heavy lifting lives in the compiled extension `_tqf`: exhaustive zero
counting of Q(x) = Tr(x^{q^b+1} - x^{q^a+1}) on F_{q^n}, closed-form sign
predictions at any degree, level-set counts, period detection and
L-polynomial reconstruction for the curves y^q - y = x^{q^b+1} - x^{q^a+1}.
All results are exact integers.
"""

from _tqf import count, level_sets, lpoly, period, predict, verify

__all__ = ["count", "level_sets", "lpoly", "period", "predict", "verify"]
