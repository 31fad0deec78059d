"""Seeded random parameter sets shared by the property tests."""

from typing import List

import numpy as np

from entrydeterrence.model.params import ModelParams

FIGURE_PARAMS = ModelParams(alpha=10.0, beta=2.0, theta=2.0, phi=0.5, c=2.0)


def draw_params(rng: np.random.Generator) -> ModelParams:
    """One valid draw with theta > phi, away from the assumption boundaries."""
    alpha = rng.uniform(2.0, 20.0)
    c = rng.uniform(0.0, 0.2 * alpha)
    beta = rng.uniform(0.5, 4.0)
    theta = rng.uniform(0.05, 1.8) * beta
    phi = rng.uniform(0.0, 0.95) * theta
    return ModelParams(alpha=alpha, beta=beta, theta=theta, phi=phi, c=c)


def draw_many(count: int, seed: int = 20240601) -> List[ModelParams]:
    rng = np.random.default_rng(seed)
    return [draw_params(rng) for _ in range(count)]
