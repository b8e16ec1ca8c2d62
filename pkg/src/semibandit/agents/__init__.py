"""Agents package: the CombUCB1 learner."""

from .comb_ucb1 import (
    RADIUS_SCALE,
    InitResult,
    compute_ucbs,
    confidence_radius,
    init,
    init_trace,
    make_record,
    step,
    update,
)

__all__ = [
    "RADIUS_SCALE",
    "InitResult",
    "compute_ucbs",
    "confidence_radius",
    "init",
    "init_trace",
    "make_record",
    "step",
    "update",
]
