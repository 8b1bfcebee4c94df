"""Closed-form counts against the brute-force graded dimensions."""

import logging
from dataclasses import dataclass
from typing import List, Optional

from ..counting.basic import basic_count
from ..counting.witt import witt_count
from ..errors import TermCapExceededError
from .free import graded_dimension

logger = logging.getLogger(__name__)

SKIPPED = "skipped"


@dataclass
class CompareRow:
    w: int
    formula: int
    oracle: Optional[int]
    witt: Optional[int]

    @property
    def skipped(self) -> bool:
        return self.oracle is None

    @property
    def agree(self) -> Optional[bool]:
        return None if self.skipped else self.formula == self.oracle

    def to_dict(self) -> dict:
        return {
            "w": self.w,
            "formula": self.formula,
            "oracle": SKIPPED if self.skipped else self.oracle,
            "witt": self.witt,
            "agree": SKIPPED if self.skipped else self.agree,
        }


def compare_report(d: int, n: int, w_max: int, term_cap: Optional[int] = None) -> List[CompareRow]:
    """
    Rows for w = 1..w_max. Disagreement is reported, never raised; a weight
    whose oracle run exceeds the term cap is marked skipped.
    """
    rows = []
    for w in range(1, w_max + 1):
        formula = basic_count(d, n, w)
        witt = witt_count(d, w) if n == 2 else None
        try:
            oracle = graded_dimension(d, n, w, term_cap).dimension
        except TermCapExceededError as e:
            logger.warning("weight %d skipped: %s", w, e)
            oracle = None
        row = CompareRow(w=w, formula=formula, oracle=oracle, witt=witt)
        if row.agree is False:
            logger.warning("d=%d n=%d w=%d: formula %d, oracle %d", d, n, w, formula, oracle)
        rows.append(row)
    return rows
