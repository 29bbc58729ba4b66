"""The two-point embedding that cannot be extended to three points.

Send ``A`` to the one-point space and ``B`` to the two-point space with
distance 1; their GH distance is ``1/2 = |AB|``. A point ``C`` with
``|AC| = 1/2`` and ``|BC| = 2/3`` would need an image ``X`` of diameter 1
(distance to the one-point space is half the diameter), but then
``d_GH(Delta_2, X) <= max(1, 1)/2 = 1/2 < 2/3``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .metric import FiniteMetricSpace, diameter, simplex, single_point
from .rational import format_rational
from .sampling import make_rng, random_unit_diameter_space
from .solver import DEFAULT_SOLVER_CAP, gh_distance_exact

TARGET_AC = Fraction(1, 2)
TARGET_BC = Fraction(2, 3)


@dataclass(frozen=True)
class CandidateCheck:
    space: FiniteMetricSpace
    to_point: Fraction
    to_segment: Fraction

    @property
    def ok(self) -> bool:
        return self.to_point == TARGET_AC and self.to_segment <= Fraction(1, 2) < TARGET_BC

    def to_json(self) -> dict:
        return {
            "n": self.space.n,
            "d_A": format_rational(self.to_point),
            "d_B": format_rational(self.to_segment),
            "ok": self.ok,
        }


@dataclass(frozen=True)
class DemoReport:
    d_ab: Fraction
    candidates: tuple[CandidateCheck, ...]
    seed: int

    @property
    def passed(self) -> bool:
        return self.d_ab == Fraction(1, 2) and all(c.ok for c in self.candidates)

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "generator": "PCG64",
            "d_AB": format_rational(self.d_ab),
            "passed": self.passed,
            "candidates": [c.to_json() for c in self.candidates],
        }


def diameter_one_candidates(samples: int, seed: int, max_points: int = 5) -> list[FiniteMetricSpace]:
    """``Delta_2`` itself followed by random spaces rescaled to diameter 1.

    Per sample: one draw for the size (``2..max_points``), then the draws of
    :func:`~ghspace.sampling.random_unit_diameter_space`.
    """
    rng = make_rng(seed)
    out = [simplex(2)]
    while len(out) < samples:
        n = int(rng.integers(2, max_points + 1))
        out.append(random_unit_diameter_space(rng, n))
    return out[:samples]


def run_demo(samples: int = 100, seed: int = 0, *, cap: int = DEFAULT_SOLVER_CAP, workers: int = 1) -> DemoReport:
    point, segment = single_point(), simplex(2)
    d_ab = gh_distance_exact(point, segment, cap=cap, workers=workers).distance
    checks = []
    for X in diameter_one_candidates(samples, seed):
        if diameter(X) != 1:
            raise AssertionError("candidate does not have diameter 1")
        to_point = gh_distance_exact(point, X, cap=cap, workers=workers).distance
        to_segment = gh_distance_exact(segment, X, cap=cap, workers=workers).distance
        checks.append(CandidateCheck(X, to_point, to_segment))
    return DemoReport(d_ab, tuple(checks), seed)
