"""Monte Carlo check of the confidence intervals behind the UCBs."""

import math
from dataclasses import dataclass

import numpy as np

from ..agents import confidence_radius
from ..bounds import confidence_failure_probability

# Additive slack on top of the sampling allowance.
COVERAGE_SLACK = 1e-6


@dataclass(frozen=True)
class CoverageResult:
    """
    Estimated failure rate of one confidence interval.

    Attributes:
        t: Step index of the radius
        s: Number of averaged observations
        num_samples: Monte Carlo sample size
        empirical: Fraction of samples with |mean - estimate| >= radius
        threshold: 2 t^-3 plus a 3-sigma sampling allowance and slack
    """

    t: int
    s: int
    num_samples: int
    empirical: float
    threshold: float

    @property
    def passed(self) -> bool:
        return self.empirical <= self.threshold


def coverage_threshold(t: float, num_samples: int) -> float:
    """2 t^-3 + 3 sqrt(2 t^-3 / N) + 1e-6."""
    p = confidence_failure_probability(t)
    return p + 3.0 * math.sqrt(p / num_samples) + COVERAGE_SLACK


def confidence_coverage(t: int, s: int, num_samples: int, rng: np.random.Generator,
                        mean: float = 0.5) -> CoverageResult:
    """
    Estimate P(|mean - w_hat_s| >= c_{t,s}) for Bernoulli(mean) weights.

    Each sample of w_hat_s is a Binomial(s, mean) count divided by s.
    """
    radius = confidence_radius(t, s)
    estimates = rng.binomial(s, mean, size=num_samples) / s
    failures = np.abs(mean - estimates) >= radius
    return CoverageResult(
        t=t,
        s=s,
        num_samples=num_samples,
        empirical=float(np.mean(failures)),
        threshold=coverage_threshold(t, num_samples),
    )
