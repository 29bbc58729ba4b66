"""Isometric embedding of an ``n``-point metric space into ``k``-point spaces.

Pipeline: pad the space to ``m = k(k-1)/2`` points, send each point to its
row of distances (an isometric map into ``R^m`` with the max-norm), translate
the rows so they sit around ``nu(S)`` for a generic ``k``-point anchor ``S``
whose isometry radius exceeds the diameter, and pull every shifted row back
with :func:`~ghspace.nu.nu_inverse`. GH distances between the pulled-back
spaces then equal the original distances.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import DegeneratePadding
from .metric import FiniteMetricSpace, delta, diameter, is_generic
from .nu import linf_distance, nu, nu_inverse
from .rational import format_rational, to_rational
from .solver import DEFAULT_SOLVER_CAP, gh_distance_exact


def least_k(n: int) -> int:
    """Smallest ``k >= 2`` with ``n <= k(k-1)/2``."""
    if n < 1:
        raise ValueError("n must be positive")
    k = 2
    while k * (k - 1) // 2 < n:
        k += 1
    return k


def pad_to(X: FiniteMetricSpace, m: int) -> FiniteMetricSpace:
    """Extend ``X`` to ``m`` points; every new distance is ``diam X``."""
    n = X.n
    if m < n:
        raise ValueError(f"cannot pad {n} points down to {m}")
    if m == n:
        return X
    d = diameter(X)
    if d == 0:
        raise DegeneratePadding("padding a one-point space would create zero distances")
    labels = list(X.labels)
    t = 0
    while len(labels) < m:
        name = f"pad{t}"
        t += 1
        if name not in labels:
            labels.append(name)
    rows = [[X.dist[i][j] if i < n and j < n else (Fraction(0) if i == j else d) for j in range(m)] for i in range(m)]
    return FiniteMetricSpace(tuple(labels), tuple(tuple(r) for r in rows))


@dataclass(frozen=True)
class KuratowskiImage:
    vectors: tuple[tuple[Fraction, ...], ...]
    labels: tuple[str, ...]

    def certify(self, X: FiniteMetricSpace) -> bool:
        return all(
            linf_distance(self.vectors[i], self.vectors[j]) == X.dist[i][j]
            for i in range(X.n)
            for j in range(X.n)
        )


def kuratowski(X: FiniteMetricSpace) -> KuratowskiImage:
    """Point ``i`` goes to ``(|x_0 x_i|, ..., |x_{n-1} x_i|)``."""
    image = KuratowskiImage(tuple(tuple(X.dist[j][i] for j in range(X.n)) for i in range(X.n)), X.labels)
    if not image.certify(X):
        raise AssertionError("Kuratowski map failed to reproduce the distances")
    return image


@dataclass(frozen=True)
class AnchorSpace:
    space: FiniteMetricSpace
    delta_margin: Fraction

    def to_json(self) -> dict:
        from .io import space_to_json

        return {"space": space_to_json(self.space), "delta_margin": format_rational(self.delta_margin)}


def build_anchor(k: int, d) -> AnchorSpace:
    """A generic ``k``-point space with ``delta/6 > d``.

    With ``m = k(k-1)/2`` and step ``g = 7d`` (``7`` when ``d = 0``), pair
    number ``t = 1..m`` in lexicographic order gets distance ``(m + 1 + t) g``.
    The largest distance is below twice the smallest, triangle slacks are at
    least ``4g`` and distinct distances differ by at least ``g``, so
    ``delta = g > 6d``.
    """
    if k < 2:
        raise ValueError("anchor needs at least two points")
    d = to_rational(d)
    if d < 0:
        raise ValueError("d must be non-negative")
    g = 7 * d if d > 0 else Fraction(7)
    m = k * (k - 1) // 2
    rows = [[Fraction(0)] * k for _ in range(k)]
    t = 0
    for i in range(k):
        for j in range(i + 1, k):
            t += 1
            rows[i][j] = rows[j][i] = (m + 1 + t) * g
    S = FiniteMetricSpace(tuple(f"s{i}" for i in range(k)), tuple(tuple(r) for r in rows))
    margin = delta(S).value / 6
    if not margin > d:
        raise AssertionError(f"anchor margin {margin} does not exceed {d}")
    return AnchorSpace(S, margin)


@dataclass(frozen=True)
class EmbeddingResult:
    """``images[i]`` is the ``k``-point space representing source point ``i``.

    ``padded`` is the padded source (``None`` without padding) and
    ``all_images`` holds the images of every padded point; the first ``n`` of
    them are ``images``.
    """

    k: int
    images: tuple[FiniteMetricSpace, ...]
    anchor: AnchorSpace
    labels: tuple[str, ...]
    padded: Optional[FiniteMetricSpace] = None
    all_images: tuple[FiniteMetricSpace, ...] = ()

    def to_json(self) -> dict:
        from .io import space_to_json

        return {
            "k": self.k,
            "anchor": self.anchor.to_json(),
            "images": [space_to_json(Y) for Y in self.images],
            "map": {label: i for i, label in enumerate(self.labels)},
            "padded": None if self.padded is None else space_to_json(self.padded),
        }


def embed(X: FiniteMetricSpace) -> EmbeddingResult:
    n = X.n
    k = least_k(n)
    m = k * (k - 1) // 2
    padded = pad_to(X, m) if n < m else X
    d = diameter(padded)
    anchor = build_anchor(k, d)
    center = nu(anchor.space)
    rows = kuratowski(padded).vectors
    spaces = []
    for row in rows:
        z = tuple(c + v for c, v in zip(center.coords, row))
        if not linf_distance(center, z) < anchor.delta_margin:
            raise AssertionError("shifted Kuratowski vector left the isometry ball")
        spaces.append(nu_inverse(z, anchor.space))
    return EmbeddingResult(
        k=k,
        images=tuple(spaces[:n]),
        anchor=anchor,
        labels=X.labels,
        padded=padded if padded is not X else None,
        all_images=tuple(spaces),
    )


@dataclass(frozen=True)
class PairCheck:
    i: int
    j: int
    expected: Fraction
    computed: Fraction

    @property
    def ok(self) -> bool:
        return self.expected == self.computed

    def to_json(self) -> dict:
        return {
            "i": self.i,
            "j": self.j,
            "expected": format_rational(self.expected),
            "computed": format_rational(self.computed),
            "ok": self.ok,
        }


@dataclass(frozen=True)
class EmbeddingReport:
    k: int
    pairs: tuple[PairCheck, ...]
    image_sizes_ok: bool
    images_generic: bool
    images_distinct: bool

    @property
    def violations(self) -> list[PairCheck]:
        return [p for p in self.pairs if not p.ok]

    @property
    def passed(self) -> bool:
        return not self.violations and self.image_sizes_ok and self.images_generic and self.images_distinct

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "passed": self.passed,
            "image_sizes_ok": self.image_sizes_ok,
            "images_generic": self.images_generic,
            "images_distinct": self.images_distinct,
            "pairs": [p.to_json() for p in self.pairs],
        }


def verify_embedding(
    X: FiniteMetricSpace,
    result: EmbeddingResult,
    *,
    cap: int = DEFAULT_SOLVER_CAP,
    workers: int = 1,
) -> EmbeddingReport:
    """Certify an embedding with the exact solver, pair by pair."""
    images = result.images
    if len(images) != X.n:
        raise ValueError(f"{len(images)} images for a {X.n}-point space")
    checks = []
    for i in range(X.n):
        for j in range(i + 1, X.n):
            gh = gh_distance_exact(images[i], images[j], cap=cap, workers=workers).distance
            checks.append(PairCheck(i, j, X.dist[i][j], gh))
    sizes_ok = all(Y.n == result.k for Y in images)
    generic = all(Y.n >= 2 and is_generic(Y) for Y in images)
    distinct = len({nu(Y).coords for Y in images if Y.n >= 2}) == len(images)
    return EmbeddingReport(result.k, tuple(checks), sizes_ok, generic, distinct)
