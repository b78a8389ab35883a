"""Rasch-model core: response probability, item information, ability estimation."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# Probabilities are clamped to this range inside likelihood products so that
# extreme response patterns cannot underflow the log-likelihood.
PROB_CLAMP = 1e-12


@dataclass(frozen=True)
class Ability:
    """Ability estimate in logits with its standard error."""

    theta: float
    se: float


@dataclass(frozen=True)
class Prior:
    """Normal prior over ability, in logits."""

    mean: float = 0.0
    sd: float = 3.0

    def __post_init__(self):
        if not (math.isfinite(self.mean) and math.isfinite(self.sd)):
            raise ValueError("prior mean and sd must be finite")
        if self.sd <= 0:
            raise ValueError(f"prior sd must be > 0, got {self.sd}")


@dataclass(frozen=True)
class ScoredResponse:
    """One dichotomous outcome at a known item difficulty (1 = knows the word)."""

    difficulty: float
    correct: bool

    def __post_init__(self):
        if not math.isfinite(self.difficulty):
            raise ValueError("difficulty must be finite")


@dataclass(frozen=True)
class QuadratureGrid:
    """Equally spaced quadrature grid over ability, integrated with Simpson weights.

    Simpson's rule on the same nodes keeps coarse- and dense-grid posterior
    summaries in agreement to well below 1e-6, which a plain Riemann sum does
    not achieve near the grid boundary.
    """

    lo: float = -10.0
    hi: float = 10.0
    points: int = 121

    def __post_init__(self):
        if not self.hi > self.lo:
            raise ValueError("grid upper bound must exceed lower bound")
        if self.points < 3 or self.points % 2 == 0:
            raise ValueError("grid needs an odd number of points >= 3 (Simpson rule)")

    def nodes(self) -> np.ndarray:
        return np.linspace(self.lo, self.hi, self.points)

    def weights(self) -> np.ndarray:
        w = np.ones(self.points)
        w[1:-1:2] = 4.0
        w[2:-1:2] = 2.0
        return w


DEFAULT_PRIOR = Prior()
DEFAULT_GRID = QuadratureGrid()


def _check_finite(**values: float) -> None:
    for name, value in values.items():
        if not math.isfinite(value):
            raise ValueError(f"{name} must be finite, got {value!r}")


def rasch_prob(theta: float, b: float) -> float:
    """Probability that a person at ability theta knows an item of difficulty b.

    P = 1 / (1 + exp(-(theta - b))), the dichotomous Rasch model.
    """
    _check_finite(theta=theta, b=b)
    z = theta - b
    if z >= 0:
        return 1.0 / (1.0 + math.exp(-z))
    e = math.exp(z)
    return e / (1.0 + e)


def item_information(theta: float, b: float) -> float:
    """Fisher information P(1-P) of one item at the given ability.

    Computed from the smaller of P and 1-P so the value is bit-identical under
    reflection of (theta - b); selection tie-breaks rely on that symmetry.
    """
    _check_finite(theta=theta, b=b)
    z = -abs(theta - b)
    e = math.exp(z)
    q = e / (1.0 + e)
    return q * (1.0 - q)


def _log_posterior(
    responses: list[ScoredResponse], prior: Prior, nodes: np.ndarray
) -> np.ndarray:
    logw = -0.5 * ((nodes - prior.mean) / prior.sd) ** 2
    if responses:
        b = np.array([r.difficulty for r in responses])
        x = np.array([1.0 if r.correct else 0.0 for r in responses])
        p = 1.0 / (1.0 + np.exp(-(nodes[:, None] - b[None, :])))
        p = np.clip(p, PROB_CLAMP, 1.0 - PROB_CLAMP)
        logw += np.log(p) @ x + np.log1p(-p) @ (1.0 - x)
    return logw


def estimate_ability(
    responses: list[ScoredResponse],
    prior: Prior = DEFAULT_PRIOR,
    grid: QuadratureGrid = DEFAULT_GRID,
) -> Ability:
    """EAP ability estimate: posterior mean and sd under Rasch likelihood x normal prior.

    Quadrature runs on the fixed grid; an empty response list returns the prior
    itself. Responses are canonically ordered first, so the result is bit-exact
    under permutation of the input.
    """
    if not responses:
        return Ability(theta=prior.mean, se=prior.sd)
    ordered = sorted(responses, key=lambda r: (r.difficulty, r.correct))
    nodes = grid.nodes()
    logw = _log_posterior(ordered, prior, nodes)
    w = np.exp(logw - logw.max()) * grid.weights()
    w /= w.sum()
    mean = float(w @ nodes)
    var = float(w @ (nodes - mean) ** 2)
    return Ability(theta=mean, se=math.sqrt(var))


def mle_ability(responses: list[ScoredResponse]) -> Ability | None:
    """Maximum-likelihood ability via Newton iteration on the log-likelihood.

    Returns None for all-correct or all-incorrect patterns, where the
    likelihood has no finite maximum. SE is 1/sqrt(sum P(1-P)) at the optimum.
    """
    if not responses:
        raise ValueError("mle_ability requires at least one response")
    n_correct = sum(r.correct for r in responses)
    if n_correct == 0 or n_correct == len(responses):
        return None
    b = np.array([r.difficulty for r in responses])
    x = np.array([1.0 if r.correct else 0.0 for r in responses])
    # Logit of the raw score around the mean difficulty is a good start.
    theta = float(np.mean(b)) + math.log(n_correct / (len(responses) - n_correct))
    for _ in range(200):
        p = 1.0 / (1.0 + np.exp(-(theta - b)))
        info = float(np.sum(p * (1.0 - p)))
        step = float(np.sum(x - p)) / info
        step = max(-2.0, min(2.0, step))
        theta += step
        if abs(step) < 1e-12:
            break
    p = 1.0 / (1.0 + np.exp(-(theta - b)))
    info = float(np.sum(p * (1.0 - p)))
    return Ability(theta=theta, se=1.0 / math.sqrt(info))
