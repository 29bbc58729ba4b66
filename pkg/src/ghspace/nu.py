"""Sorted half-distance vectors and the local isometry around generic spaces.

``nu(X)`` lists the ``N = n(n-1)/2`` distances of an ``n``-point space in
ascending order, halved, as a point of ``R^N`` with the max-norm. Near a
generic space ``X`` (within ``delta(X)/6``) this map is an isometry onto the
corresponding max-norm ball, and :func:`nu_inverse` rebuilds the space from a
vector in that ball.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Sequence, Union

import numpy as np

from .errors import AnchorNotGeneric, LengthMismatch, NotGeneric, NotStructurallyIsomorphic, OutsideBall, SinglePoint
from .metric import FiniteMetricSpace, delta, structural_isomorphism
from .rational import format_rational, to_rational
from .solver import DEFAULT_SOLVER_CAP, gh_distance_exact

DEFAULT_GRID = 64
GENERATOR_NAME = "PCG64"


@dataclass(frozen=True)
class NuVector:
    coords: tuple[Fraction, ...]
    pair_order: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, t):
        return self.coords[t]

    def to_json(self) -> dict:
        return {
            "coords": [format_rational(c) for c in self.coords],
            "pair_order": [list(p) for p in self.pair_order],
        }


Vector = Union[NuVector, Sequence]


def nu(X: FiniteMetricSpace) -> NuVector:
    """Half-distances in ascending order; equal distances keep pair order."""
    if X.n < 2:
        raise SinglePoint("nu needs at least two points")
    order = sorted(X.pairs(), key=lambda p: (X.dist[p[0]][p[1]], p))
    return NuVector(tuple(X.dist[i][j] / 2 for i, j in order), tuple(order))


def _coords(v: Vector) -> tuple[Fraction, ...]:
    if isinstance(v, NuVector):
        return v.coords
    return tuple(to_rational(c) for c in v)


def linf_distance(u: Vector, v: Vector) -> Fraction:
    a, b = _coords(u), _coords(v)
    if len(a) != len(b):
        raise LengthMismatch(f"vectors of length {len(a)} and {len(b)}")
    return max((abs(x - y) for x, y in zip(a, b)), default=Fraction(0))


@dataclass(frozen=True)
class LinfBall:
    """Open max-norm ball."""

    center: tuple[Fraction, ...]
    radius: Fraction

    def __post_init__(self):
        object.__setattr__(self, "center", _coords(self.center))
        object.__setattr__(self, "radius", to_rational(self.radius))
        if self.radius <= 0:
            raise ValueError("radius must be positive")

    def __contains__(self, z) -> bool:
        return linf_distance(self.center, z) < self.radius


class IncompressibilityCheck(NamedTuple):
    gh: Fraction
    linf: Fraction
    ok: bool


def incompressibility_check(X: FiniteMetricSpace, Y: FiniteMetricSpace, **solver) -> IncompressibilityCheck:
    """Compare the GH distance of structurally isomorphic spaces with the
    max-norm distance of their ``nu`` vectors; ``ok`` means ``gh <= linf``."""
    if structural_isomorphism(X, Y) is None:
        raise NotStructurallyIsomorphic("the spaces have different distance orders")
    gh = gh_distance_exact(X, Y, **solver).distance
    lin = linf_distance(nu(X), nu(Y))
    return IncompressibilityCheck(gh, lin, gh <= lin)


def isometry_radius(X: FiniteMetricSpace) -> Fraction:
    """``delta(X) / 6``: the radius on which ``nu`` is an isometry."""
    return delta(X).value / 6


def nu_inverse(z: Vector, anchor: FiniteMetricSpace) -> FiniteMetricSpace:
    """The space whose ``nu`` vector is ``z``, for ``z`` near ``nu(anchor)``.

    Coordinate ``t`` of ``z`` becomes half the distance of the anchor pair that
    produced coordinate ``t`` of ``nu(anchor)``. The result keeps the anchor's
    labels.
    """
    if anchor.n < 2 or delta(anchor).value <= 0:
        raise AnchorNotGeneric("nu_inverse needs a generic anchor")
    center = nu(anchor)
    coords = _coords(z)
    radius = isometry_radius(anchor)
    gap = linf_distance(center, coords)
    if gap >= radius:
        raise OutsideBall(f"deviation {gap} is not below delta/6 = {radius}")

    n = anchor.n
    rows = [[Fraction(0)] * n for _ in range(n)]
    for (i, j), c in zip(center.pair_order, coords):
        rows[i][j] = rows[j][i] = 2 * c
    Y = FiniteMetricSpace(anchor.labels, tuple(tuple(r) for r in rows))
    if nu(Y).coords != coords:
        raise AssertionError("rebuilt space does not reproduce the requested vector")
    return Y


@dataclass(frozen=True)
class IsometrySample:
    z: tuple[Fraction, ...]
    gh: Fraction
    linf: Fraction
    n_points: int
    nu_matches: bool

    @property
    def passed(self) -> bool:
        return self.gh == self.linf and self.nu_matches

    def to_json(self) -> dict:
        return {
            "z": [format_rational(c) for c in self.z],
            "gh": format_rational(self.gh),
            "linf": format_rational(self.linf),
            "n_points": self.n_points,
            "pass": self.passed,
        }


@dataclass(frozen=True)
class IsometryReport:
    seed: int
    grid: int
    radius: Fraction
    samples: tuple[IsometrySample, ...] = field(default_factory=tuple)
    generator: str = GENERATOR_NAME

    @property
    def all_passed(self) -> bool:
        return all(s.passed for s in self.samples)

    @property
    def counterexamples(self) -> list[IsometrySample]:
        return [s for s in self.samples if not s.passed]

    def to_json(self) -> dict:
        return {
            "generator": self.generator,
            "seed": self.seed,
            "grid": self.grid,
            "radius": format_rational(self.radius),
            "all_passed": self.all_passed,
            "samples": [s.to_json() for s in self.samples],
        }


def isometry_sample(X: FiniteMetricSpace, z: Vector, **solver) -> IsometrySample:
    """Rebuild ``Y`` from ``z`` and compare ``d_GH(X, Y)`` with the max-norm gap."""
    coords = _coords(z)
    Y = nu_inverse(coords, X)
    gh = gh_distance_exact(X, Y, **solver).distance
    return IsometrySample(coords, gh, linf_distance(nu(X), coords), Y.n, nu(Y).coords == coords)


def ball_offsets(rng: np.random.Generator, size: int, grid: int = DEFAULT_GRID) -> list[int]:
    """``size`` integers uniform on ``-(grid-1) .. grid-1`` (one draw call)."""
    return [int(v) for v in rng.integers(-(grid - 1), grid, size=size)]


def local_isometry_check(
    X: FiniteMetricSpace,
    sample_count: int = 20,
    seed: int = 0,
    *,
    grid: int = DEFAULT_GRID,
    cap: int = DEFAULT_SOLVER_CAP,
    workers: int = 1,
) -> IsometryReport:
    """Sample the ``delta(X)/6`` ball around ``nu(X)`` and certify each point.

    Stream layout: ``numpy.random.default_rng(seed)`` (PCG64); sample ``s``
    consumes one ``integers(-(grid-1), grid, size=N)`` call, and coordinate
    ``t`` of the sample is ``nu(X)[t] + offset[t] * radius / grid``. Every
    sample must satisfy ``d_GH(X, Y) == |nu(X) - z|_inf`` exactly, keep ``n``
    points and reproduce ``z`` as its own ``nu`` vector.
    """
    if X.n < 2 or delta(X).value <= 0:
        raise NotGeneric("local isometry only holds around generic spaces")
    if sample_count < 1:
        raise ValueError("sample_count must be positive")
    center = nu(X)
    radius = isometry_radius(X)
    step = radius / grid
    rng = np.random.default_rng(seed)
    samples = []
    for _ in range(sample_count):
        offsets = ball_offsets(rng, len(center), grid)
        z = tuple(c + k * step for c, k in zip(center.coords, offsets))
        samples.append(isometry_sample(X, z, cap=cap, workers=workers))
    return IsometryReport(seed=seed, grid=grid, radius=radius, samples=tuple(samples))
