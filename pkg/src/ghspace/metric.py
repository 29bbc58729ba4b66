"""Finite metric spaces with exact rational distances, genericity and
structural isomorphism."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, groupby
from typing import Optional, Sequence

from .errors import (
    AsymmetricMatrix,
    DuplicateLabel,
    MalformedMatrix,
    NonpositiveOffDiagonal,
    NonzeroDiagonal,
    NotGeneric,
    PerturbationTooLarge,
    SinglePoint,
    TriangleViolation,
)
from .rational import to_rational


@dataclass(frozen=True)
class FiniteMetricSpace:
    """``n`` labelled points with an exact distance matrix.

    Construction validates the metric axioms; use :func:`validate_metric`
    to build one from loosely typed input.
    """

    labels: tuple[str, ...]
    dist: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        n = len(self.dist)
        if n == 0:
            raise MalformedMatrix(message="empty matrix")
        if len(self.labels) != n:
            raise MalformedMatrix(message=f"{len(self.labels)} labels for {n} points")
        for i, row in enumerate(self.dist):
            if len(row) != n:
                raise MalformedMatrix(i, message="matrix is not square")
        seen = {}
        for i, label in enumerate(self.labels):
            if label in seen:
                raise DuplicateLabel(seen[label], i)
            seen[label] = i
        _check_axioms(self.dist)

    def __len__(self) -> int:
        return len(self.dist)

    @property
    def n(self) -> int:
        return len(self.dist)

    def d(self, i: int, j: int) -> Fraction:
        return self.dist[i][j]

    def pairs(self):
        """Unordered point pairs ``(i, j)`` with ``i < j`` in lexicographic order."""
        return combinations(range(self.n), 2)

    def distances(self) -> list[Fraction]:
        return [self.dist[i][j] for i, j in self.pairs()]

    def relabel(self, perm: Sequence[int]) -> "FiniteMetricSpace":
        """Reorder points so that new point ``t`` is old point ``perm[t]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError(f"not a permutation of range({self.n}): {perm!r}")
        return FiniteMetricSpace(
            tuple(self.labels[p] for p in perm),
            tuple(tuple(self.dist[p][q] for q in perm) for p in perm),
        )

    def scaled(self, factor) -> "FiniteMetricSpace":
        c = to_rational(factor)
        if c <= 0:
            raise ValueError("scale factor must be positive")
        return FiniteMetricSpace(self.labels, tuple(tuple(c * v for v in row) for row in self.dist))

    def subspace(self, indices: Sequence[int]) -> "FiniteMetricSpace":
        return FiniteMetricSpace(
            tuple(self.labels[p] for p in indices),
            tuple(tuple(self.dist[p][q] for q in indices) for p in indices),
        )

    def diameter(self) -> Fraction:
        return diameter(self)

    def __repr__(self) -> str:
        rows = "; ".join(" ".join(str(v) for v in row) for row in self.dist)
        return f"FiniteMetricSpace(n={self.n}, [{rows}])"


def _check_axioms(dist) -> None:
    n = len(dist)
    for i in range(n):
        for j in range(i + 1, n):
            if dist[i][j] != dist[j][i]:
                raise AsymmetricMatrix(i, j)
    for i in range(n):
        if dist[i][i] != 0:
            raise NonzeroDiagonal(i)
    for i in range(n):
        for j in range(n):
            if i != j and dist[i][j] <= 0:
                raise NonpositiveOffDiagonal(i, j)
    for i in range(n):
        for k in range(n):
            for j in range(n):
                if dist[i][k] > dist[i][j] + dist[j][k]:
                    raise TriangleViolation(i, k, j)


def validate_metric(labels: Optional[Sequence], matrix: Sequence[Sequence]) -> FiniteMetricSpace:
    """Build a :class:`FiniteMetricSpace` from a square matrix.

    Entries may be anything :func:`~ghspace.rational.to_rational` accepts.
    ``labels`` defaults to ``x0, x1, ...``. Axiom failures raise the matching
    :class:`~ghspace.errors.MetricError` subclass naming the first offending
    index tuple, checked in the order symmetry, diagonal, positivity,
    triangle inequality.
    """
    rows = [list(row) for row in matrix]
    n = len(rows)
    if n == 0:
        raise MalformedMatrix(message="empty matrix")
    for i, row in enumerate(rows):
        if len(row) != n:
            raise MalformedMatrix(i, message="matrix is not square")
    if labels is None:
        labels = [f"x{i}" for i in range(n)]
    dist = tuple(tuple(to_rational(v) for v in row) for row in rows)
    return FiniteMetricSpace(tuple(str(lab) for lab in labels), dist)


def single_point(label: str = "x0") -> FiniteMetricSpace:
    """The one-point space."""
    return FiniteMetricSpace((label,), ((Fraction(0),),))


def simplex(n: int, side=1) -> FiniteMetricSpace:
    """``n`` points at mutual distance ``side``."""
    s = to_rational(side)
    return validate_metric(None, [[0 if i == j else s for j in range(n)] for i in range(n)])


def diameter(X: FiniteMetricSpace) -> Fraction:
    """Largest distance; 0 for a one-point space."""
    return max((X.dist[i][j] for i, j in X.pairs()), default=Fraction(0))


@dataclass(frozen=True)
class DeltaValue:
    """Genericity margin and the index tuple attaining it.

    ``kind`` is ``"distance"`` (witness ``(i, j, p, p)``, or ``(0, 1)`` for a
    two-point space), ``"triangle"`` (witness ``(i, j, k)`` with slack
    ``|ij| + |jk| - |ik|``) or ``"gap"`` (witness ``(i, j, p, q)``).
    """

    value: Fraction
    kind: str
    witness: tuple[int, ...]

    def __bool__(self) -> bool:
        return self.value > 0


def delta(X: FiniteMetricSpace) -> DeltaValue:
    """Least triangle slack or distance gap over index sets of size >= 3.

    Ties keep the first candidate found when scanning triangles, then gaps
    between distinct pairs, then plain distances, each in lexicographic order.
    """
    n = X.n
    if n < 2:
        raise SinglePoint("delta is defined for spaces with at least two points")
    d = X.dist
    if n == 2:
        return DeltaValue(d[0][1], "distance", (0, 1))

    best: Optional[DeltaValue] = None
    for i in range(n):
        for j in range(n):
            if j == i:
                continue
            for k in range(n):
                if k == i or k == j:
                    continue
                slack = d[i][j] + d[j][k] - d[i][k]
                if best is None or slack < best.value:
                    best = DeltaValue(slack, "triangle", (i, j, k))

    pairs = list(X.pairs())
    for a, (i, j) in enumerate(pairs):
        for p, q in pairs[a + 1:]:
            gap = abs(d[i][j] - d[p][q])
            if gap < best.value:
                best = DeltaValue(gap, "gap", (i, j, p, q))
    for i, j in pairs:
        if d[i][j] < best.value:
            p = next(t for t in range(n) if t not in (i, j))
            best = DeltaValue(d[i][j], "distance", (i, j, p, p))
    return best


def is_generic(X: FiniteMetricSpace) -> bool:
    """All non-zero distances distinct and every triangle inequality strict."""
    return delta(X).value > 0


@dataclass(frozen=True)
class StructuralIsomorphism:
    """Point bijection ``i -> mapping[i]`` preserving the order of distances."""

    mapping: tuple[int, ...]

    def __call__(self, i: int) -> int:
        return self.mapping[i]

    def __len__(self) -> int:
        return len(self.mapping)

    def inverse(self) -> "StructuralIsomorphism":
        inv = [0] * len(self.mapping)
        for i, j in enumerate(self.mapping):
            inv[j] = i
        return StructuralIsomorphism(tuple(inv))

    @property
    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.mapping))


def _dense_ranks(X: FiniteMetricSpace) -> list[list[int]]:
    values = sorted(set(X.distances()))
    rank = {v: r for r, v in enumerate(values, start=1)}
    return [[0 if i == j else rank[X.dist[i][j]] for j in range(X.n)] for i in range(X.n)]


def _tie_pattern(X: FiniteMetricSpace) -> list[int]:
    return [len(list(g)) for _, g in groupby(sorted(X.distances()))]


def structural_isomorphism(X: FiniteMetricSpace, Y: FiniteMetricSpace) -> Optional[StructuralIsomorphism]:
    """Lexicographically least order-preserving bijection ``X -> Y``, or None.

    A bijection preserves the order of distances exactly when it carries the
    dense rank of every distance in ``X`` to the same dense rank in ``Y``, so
    the backtracking compares ranks as each pair gets both endpoints assigned.
    Spaces of different size are never isomorphic; that is reported as None.
    """
    n = X.n
    if Y.n != n:
        return None
    if _tie_pattern(X) != _tie_pattern(Y):
        return None
    rx, ry = _dense_ranks(X), _dense_ranks(Y)
    image: list[int] = []
    taken = [False] * n

    def extend(t: int) -> bool:
        if t == n:
            return True
        for y in range(n):
            if taken[y]:
                continue
            if all(ry[image[s]][y] == rx[s][t] for s in range(t)):
                image.append(y)
                taken[y] = True
                if extend(t + 1):
                    return True
                image.pop()
                taken[y] = False
        return False

    return StructuralIsomorphism(tuple(image)) if extend(0) else None


def is_order_preserving(X: FiniteMetricSpace, Y: FiniteMetricSpace, mapping: Sequence[int]) -> bool:
    """Check ``|xy| <= |zw|  iff  |f(x)f(y)| <= |f(z)f(w)|`` over all pairs."""
    if X.n != Y.n or sorted(mapping) != list(range(Y.n)):
        return False
    pairs = [(i, j) for i in range(X.n) for j in range(X.n)]
    for i, j in pairs:
        for p, q in pairs:
            left = X.dist[i][j] <= X.dist[p][q]
            right = Y.dist[mapping[i]][mapping[j]] <= Y.dist[mapping[p]][mapping[q]]
            if left != right:
                return False
    return True


def perturb(X: FiniteMetricSpace, offsets: Sequence[Sequence], bound, *, strict: bool = True) -> FiniteMetricSpace:
    """Add a symmetric offset matrix to the distances of ``X``.

    Every off-diagonal ``|offsets[i][j]|`` must be below ``bound``. With
    ``strict`` (the default) ``bound`` must also be at most ``delta(X)/3``; the
    result is then checked to be generic with the identity indexing as its
    structural isomorphism. Without ``strict`` the result is only validated,
    so a large bound may surface as a :class:`TriangleViolation`.
    """
    n = X.n
    b = to_rational(bound)
    if b <= 0:
        raise PerturbationTooLarge("bound must be positive")
    off = [[to_rational(v) for v in row] for row in offsets]
    if len(off) != n or any(len(row) != n for row in off):
        raise ValueError(f"offsets must be {n}x{n}")
    for i in range(n):
        if off[i][i] != 0:
            raise ValueError(f"offsets[{i}][{i}] must be 0")
        for j in range(i + 1, n):
            if off[i][j] != off[j][i]:
                raise ValueError(f"offsets not symmetric at ({i},{j})")
            if abs(off[i][j]) >= b:
                raise PerturbationTooLarge(f"|offsets[{i}][{j}]| = {abs(off[i][j])} >= {b}")

    guaranteed = False
    if n >= 2:
        margin = delta(X).value / 3
        if strict and b > margin:
            raise PerturbationTooLarge(f"bound {b} exceeds delta/3 = {margin}")
        guaranteed = b <= margin

    Y = FiniteMetricSpace(
        X.labels,
        tuple(tuple(X.dist[i][j] + off[i][j] for j in range(n)) for i in range(n)),
    )
    if guaranteed:
        if not is_generic(Y):
            raise NotGeneric("perturbation below delta/3 produced a non-generic space")
        iso = structural_isomorphism(X, Y)
        if iso is None or not iso.is_identity:
            raise AssertionError("perturbation below delta/3 broke the distance order")
    return Y
