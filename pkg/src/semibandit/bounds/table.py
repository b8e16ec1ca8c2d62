"""Tabulate every bound that applies to a parameter set."""

from dataclasses import dataclass
from typing import List

from ..exceptions import InvalidInstanceError
from ..models import ProblemParams
from .lower import lower_bound_gap, lower_bound_gap_free
from .upper import (
    thm_gap_free,
    thm_k43_general,
    thm_k43_uniform,
    thm_k_general,
    thm_k_uniform,
)

UPPER = "upper"
LOWER = "lower"
ASYMPTOTIC = "asymptotic"


@dataclass(frozen=True)
class BoundRow:
    """
    One line of a bound table.

    Attributes:
        label: Name of the result the value comes from
        value: Evaluated bound
        kind: "upper", "lower", or "asymptotic" (coefficient of ln n)
    """

    label: str
    value: float
    kind: str

    def format(self, precision: int = 2) -> str:
        text = f"{self.label}: {self.value:.{precision}f}"
        if self.kind == ASYMPTOTIC:
            text += " (asymptotic, coefficient of ln n)"
        return text


def bound_table(p: ProblemParams) -> List[BoundRow]:
    """
    Evaluate all bounds applicable to ``p``.

    Uniform-gap bounds need ``delta``, per-item bounds need ``per_item_gaps``,
    the gap-free bound needs n >= 2, and the lower bounds need a valid K-path
    instance (L divisible by K; 0 < delta/K < 0.5 for the gap-dependent one).
    """
    rows: List[BoundRow] = []
    if p.delta is not None:
        rows.append(BoundRow("Theorem 2", thm_k43_uniform(p), UPPER))
    if p.per_item_gaps:
        rows.append(BoundRow("Theorem 3", thm_k43_general(p), UPPER))
    if p.delta is not None:
        rows.append(BoundRow("Theorem 4", thm_k_uniform(p), UPPER))
    if p.per_item_gaps:
        rows.append(BoundRow("Theorem 5", thm_k_general(p), UPPER))
    if p.n >= 2:
        rows.append(BoundRow("Theorem 6", thm_gap_free(p), UPPER))
    if p.L % p.K == 0:
        if p.delta is not None:
            try:
                rows.append(BoundRow("Proposition 1", lower_bound_gap(p), ASYMPTOTIC))
            except InvalidInstanceError:
                pass
        rows.append(BoundRow("Proposition 2", lower_bound_gap_free(p), LOWER))
    return rows
