"""Seeded generators of finite metric spaces.

All randomness goes through ``numpy.random.default_rng(seed)`` (PCG64), so a
seed pins the output exactly. Every value drawn is an integer and every space
produced has exact rational distances.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Optional

import numpy as np

from .errors import NotGeneric
from .metric import FiniteMetricSpace, delta, diameter, is_generic, perturb, validate_metric
from .nu import DEFAULT_GRID


def make_rng(seed: Optional[int]) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_metric_space(rng: np.random.Generator, n: int, max_weight: int = 10) -> FiniteMetricSpace:
    """Shortest-path metric of the complete graph with integer weights in
    ``1..max_weight``. Small weights give plenty of ties."""
    if n < 1:
        raise ValueError("n must be positive")
    d = [[0] * n for _ in range(n)]
    weights = [int(w) for w in rng.integers(1, max_weight + 1, size=n * (n - 1) // 2)]
    t = 0
    for i in range(n):
        for j in range(i + 1, n):
            d[i][j] = d[j][i] = weights[t]
            t += 1
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return validate_metric(None, d)


def random_unit_diameter_space(rng: np.random.Generator, n: int, max_weight: int = 10) -> FiniteMetricSpace:
    """A random space rescaled to diameter exactly 1 (``n >= 2``)."""
    if n < 2:
        raise ValueError("diameter 1 needs at least two points")
    X = random_metric_space(rng, n, max_weight)
    return X.scaled(1 / diameter(X))


def random_offsets(rng: np.random.Generator, n: int, bound: Fraction, grid: int = DEFAULT_GRID) -> list[list[Fraction]]:
    """Symmetric zero-diagonal matrix with entries ``k * bound / grid``,
    ``k`` uniform on ``-(grid-1) .. grid-1``; all strictly below ``bound``."""
    ks = [int(v) for v in rng.integers(-(grid - 1), grid, size=n * (n - 1) // 2)]
    off = [[Fraction(0)] * n for _ in range(n)]
    t = 0
    for i in range(n):
        for j in range(i + 1, n):
            off[i][j] = off[j][i] = Fraction(ks[t]) * bound / grid
            t += 1
    return off


def sample_generic(n: int, seed: Optional[int] = None, *, rng: Optional[np.random.Generator] = None,
                   grid: int = DEFAULT_GRID) -> FiniteMetricSpace:
    """Random generic ``n``-point space.

    Base: the ``N = n(n-1)/2`` distances ``(N + 1 + t) * 7`` for ``t = 1..N``,
    handed to the point pairs in a random order; this base has ``delta = 7``.
    Then every distance is jittered by less than ``delta / 3``. Draw order:
    one permutation of ``N``, then ``N`` grid integers for the jitter.
    """
    if n < 2:
        raise ValueError("generic spaces need at least two points")
    rng = rng if rng is not None else make_rng(seed)
    N = n * (n - 1) // 2
    perm = [int(v) for v in rng.permutation(N)]
    values = [(N + 1 + t) * 7 for t in range(1, N + 1)]
    base = [[0] * n for _ in range(n)]
    t = 0
    for i in range(n):
        for j in range(i + 1, n):
            base[i][j] = base[j][i] = values[perm[t]]
            t += 1
    X = validate_metric(None, base)
    bound = delta(X).value / 3
    Y = perturb(X, random_offsets(rng, n, bound, grid), bound)
    if not is_generic(Y):
        raise NotGeneric("sampled space is not generic")
    return Y


def random_generic_space(rng: np.random.Generator, n: int, max_weight: int = 10) -> FiniteMetricSpace:
    """Generic space shaped like :func:`random_metric_space`.

    With ``N`` pairs, distance ``d`` becomes ``4N d + 2N + j`` where the ``j``
    are a random permutation of ``0..N-1``: distances become distinct and
    every triangle gains slack at least ``2N - (N - 1) > 0``. Covers shapes
    :func:`sample_generic` cannot reach, whose distances all lie within a
    factor of two of each other.
    """
    if n < 2:
        raise ValueError("generic spaces need at least two points")
    X = random_metric_space(rng, n, max_weight)
    N = n * (n - 1) // 2
    ties = [int(v) for v in rng.permutation(N)]
    rows = [[0] * n for _ in range(n)]
    for t, (i, j) in enumerate(X.pairs()):
        rows[i][j] = rows[j][i] = 4 * N * X.dist[i][j] + 2 * N + ties[t]
    Y = validate_metric(None, rows)
    if not is_generic(Y):
        raise NotGeneric("tie-breaking failed to produce a generic space")
    return Y
