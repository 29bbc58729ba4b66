"""Exact Gromov-Hausdorff distance between finite metric spaces.

For finite spaces the distance is half the least distortion of a
correspondence, and some irreducible correspondence attains it. The search
therefore only walks irreducible correspondences: left points are visited in
index order, each picks either a single right point that is not owned
exclusively by another left point, or a group of >= 2 right points nobody has
touched yet (which it then owns exclusively).

Two passes:

1. branch-and-bound for the optimal distortion value, with the right side
   being the smaller space and a look-ahead bound (every pending left point
   and every uncovered right point still needs a partner);
2. a depth-first walk in lexicographic order of the sorted pair list, pruned
   at the optimum, whose first leaf is the lexicographically least optimal
   irreducible correspondence.

All arithmetic is on integers: distances are scaled by the lcm of their
denominators, so comparisons are exact and cheap.
"""
from __future__ import annotations

import math
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .correspondence import Correspondence
from .errors import SizeCapExceeded
from .metric import FiniteMetricSpace, diameter
from .rational import format_rational

DEFAULT_SOLVER_CAP = 8

_INF = float("inf")


@dataclass(frozen=True)
class GHResult:
    distance: Fraction
    optimal: Correspondence
    distortion: Fraction
    nodes_explored: int

    def to_json(self, *, include_nodes: bool = True) -> dict:
        out = {
            "distance": format_rational(self.distance),
            "optimal_pairs": self.optimal.to_json(),
        }
        if include_nodes:
            out["nodes"] = self.nodes_explored
        return out


def gh_upper_bound_diam(X: FiniteMetricSpace, Y: FiniteMetricSpace) -> Fraction:
    """``max(diam X, diam Y) / 2``, an upper bound for the GH distance."""
    return max(diameter(X), diameter(Y)) / 2


def _scaled_ints(X: FiniteMetricSpace, Y: FiniteMetricSpace) -> tuple[int, list, list]:
    scale = 1
    for S in (X, Y):
        for v in S.distances():
            scale = scale * v.denominator // math.gcd(scale, v.denominator)
    dx = [[int(v * scale) for v in row] for row in X.dist]
    dy = [[int(v * scale) for v in row] for row in Y.dist]
    return scale, dx, dy


class _Search:
    """Irreducible-correspondence search between integer distance matrices."""

    def __init__(self, dx: list, dy: list):
        n, m = len(dx), len(dy)
        self.n, self.m = n, m
        self.full = (1 << m) - 1
        # pen[i][y][i2 * m + y2]: cost that pair (i, y) imposes on a later pair (i2, y2)
        self.pen = [
            [tuple(abs(dx[i2][i] - dy[y2][y]) for i2 in range(n) for y2 in range(m)) for y in range(m)]
            for i in range(n)
        ]
        self.bits = [tuple(y for y in range(m) if mask >> y & 1) for mask in range(1 << m)]
        self.block_cost = [
            max((dy[a][b] for a in bits for b in bits), default=0) for bits in self.bits
        ]
        masks = range(1, 1 << m)
        # a group that is a strict prefix of another sorts after it unless it is
        # the last left point's group, where nothing follows in the pair list
        self.lex_mid = sorted(masks, key=lambda s: self.bits[s] + (m,))
        self.lex_last = sorted(masks, key=lambda s: self.bits[s])
        self.nodes = 0

    def _allowed(self, mask: int, covered: int, exclusive: int) -> bool:
        if mask & (mask - 1) == 0:
            return not exclusive & mask
        return not covered & mask

    def _child(self, level: int, mask: int, cur: tuple, dis: int):
        bits = self.bits[mask]
        base = level * self.m
        new_dis = max(dis, self.block_cost[mask], max(cur[base + y] for y in bits))
        new_cur = cur
        for y in bits:
            new_cur = tuple(map(max, new_cur, self.pen[level][y]))
        return new_dis, new_cur

    def _bound(self, level: int, cur: tuple, dis, covered: int, exclusive: int):
        """Lower bound on any completion after ``level`` has been placed."""
        n, m = self.n, self.m
        nxt = level + 1
        if nxt == n:
            return dis if covered == self.full else _INF
        allowed = [y for y in range(m) if not exclusive >> y & 1]
        if not allowed:
            return _INF
        lb = dis
        for i2 in range(nxt, n):
            base = i2 * m
            lb = max(lb, min(cur[base + y] for y in allowed))
        for y in range(m):
            if not covered >> y & 1:
                lb = max(lb, min(cur[i2 * m + y] for i2 in range(nxt, n)))
        return lb

    def children(self, level: int, cur: tuple, dis: int, covered: int, exclusive: int, order):
        for mask in order:
            if not self._allowed(mask, covered, exclusive):
                continue
            new_dis, new_cur = self._child(level, mask, cur, dis)
            new_excl = exclusive | mask if mask & (mask - 1) else exclusive
            yield mask, new_dis, new_cur, covered | mask, new_excl

    def root(self) -> tuple:
        return (0,) * (self.n * self.m)


class _OptimumSearch:
    """Pass 1: least distortion value, with a shared monotone incumbent."""

    def __init__(self, search: _Search, incumbent: int):
        self.s = search
        self.best = incumbent
        self.lock = threading.Lock()

    def offer(self, value: int) -> None:
        with self.lock:
            if value < self.best:
                self.best = value

    def expand(self, level: int, cur, dis, covered, exclusive) -> int:
        s = self.s
        nodes = 1
        kids = []
        for mask, nd, nc, ncov, nex in s.children(level, cur, dis, covered, exclusive, s.lex_mid):
            if nd >= self.best:
                continue
            if level == s.n - 1:
                if ncov == s.full:
                    self.offer(nd)
                continue
            kids.append((nd, mask, nc, ncov, nex))
        kids.sort(key=lambda k: (k[0], s.bits[k[1]]))
        for nd, mask, nc, ncov, nex in kids:
            if nd >= self.best:
                continue
            if s._bound(level, nc, nd, ncov, nex) >= self.best:
                continue
            nodes += self.expand(level + 1, nc, nd, ncov, nex)
        return nodes

    def run(self, workers: int = 1) -> int:
        s = self.s
        roots = []
        for mask, nd, nc, ncov, nex in s.children(0, s.root(), 0, 0, 0, s.lex_mid):
            if s.n == 1:
                if ncov == s.full:
                    self.offer(nd)
                continue
            roots.append((nd, mask, nc, ncov, nex))
        roots.sort(key=lambda k: (k[0], s.bits[k[1]]))

        def task(root) -> int:
            nd, mask, nc, ncov, nex = root
            if nd >= self.best or s._bound(0, nc, nd, ncov, nex) >= self.best:
                return 0
            return self.expand(1, nc, nd, ncov, nex)

        if workers > 1 and len(roots) > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                counts = list(pool.map(task, roots))
        else:
            counts = [task(r) for r in roots]
        return 1 + sum(counts)


def _lex_first(s: _Search, target: int) -> tuple[Optional[list[int]], int]:
    """Pass 2: lexicographically first irreducible correspondence with distortion <= target."""
    chosen: list[int] = []
    nodes = 0

    def walk(level, cur, dis, covered, exclusive) -> bool:
        nonlocal nodes
        nodes += 1
        order = s.lex_last if level == s.n - 1 else s.lex_mid
        for mask, nd, nc, ncov, nex in s.children(level, cur, dis, covered, exclusive, order):
            if nd > target or s._bound(level, nc, nd, ncov, nex) > target:
                continue
            chosen.append(mask)
            if level == s.n - 1 or walk(level + 1, nc, nd, ncov, nex):
                return True
            chosen.pop()
        return False

    found = walk(0, s.root(), 0, 0, 0)
    return (chosen if found else None), nodes


def _initial_incumbent(dx: list, dy: list) -> int:
    """Distortion of an easy correspondence: the full relation, or a
    bijection matching points by eccentricity rank when sizes agree."""
    n, m = len(dx), len(dy)
    best = max(abs(dx[i][a] - dy[y][b]) for i in range(n) for a in range(n) for y in range(m) for b in range(m))
    if n == m:
        ox = sorted(range(n), key=lambda i: (max(dx[i]), sum(dx[i]), i))
        oy = sorted(range(m), key=lambda y: (max(dy[y]), sum(dy[y]), y))
        f = dict(zip(ox, oy))
        dis = max(abs(dx[i][a] - dy[f[i]][f[a]]) for i in range(n) for a in range(n))
        best = min(best, dis)
    return best


def gh_distance_exact(
    X: FiniteMetricSpace,
    Y: FiniteMetricSpace,
    *,
    cap: int = DEFAULT_SOLVER_CAP,
    workers: int = 1,
) -> GHResult:
    """Exact Gromov-Hausdorff distance with an optimal irreducible witness.

    The witness is the lexicographically least optimal irreducible
    correspondence (pairs indexed ``(i in X, j in Y)``), so it does not
    depend on ``workers``; only ``nodes_explored`` may.
    """
    if X.n > cap or Y.n > cap:
        raise SizeCapExceeded(f"{X.n}x{Y.n} exceeds the solver cap of {cap} points per side")
    scale, dx, dy = _scaled_ints(X, Y)

    # pass 1 runs with the smaller space on the right: fewer groups per level
    if Y.n <= X.n:
        opt = _OptimumSearch(_Search(dx, dy), _initial_incumbent(dx, dy))
    else:
        opt = _OptimumSearch(_Search(dy, dx), _initial_incumbent(dy, dx))
    nodes = opt.run(workers)
    target = opt.best

    search = _Search(dx, dy)
    masks, more = _lex_first(search, target)
    if masks is None:
        raise AssertionError("no irreducible correspondence reaches the optimum")
    witness = Correspondence.from_masks(Y.n, masks)
    return GHResult(
        distance=Fraction(target, 2 * scale),
        optimal=witness,
        distortion=Fraction(target, scale),
        nodes_explored=nodes + more,
    )
