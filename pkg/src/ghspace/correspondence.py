"""Relations and correspondences between finite index sets.

Points are referred to by index: a relation between an ``n``-point and an
``m``-point set is a nonempty set of pairs ``(i, j)`` with ``0 <= i < n`` and
``0 <= j < m``. Orderings are always the lexicographic order of the sorted
pair list, which is also the order the exact solver breaks ties by.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product
from typing import Iterable, Iterator

from .errors import IndexOutOfRange, NotACorrespondence, NotIrreducible, SizeCapExceeded
from .metric import FiniteMetricSpace

DEFAULT_ENUMERATION_CAP = 5

Pair = tuple[int, int]


@dataclass(frozen=True)
class Relation:
    left_size: int
    right_size: int
    pairs: frozenset[Pair]

    def __post_init__(self):
        pairs = frozenset((int(i), int(j)) for i, j in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        if self.left_size < 1 or self.right_size < 1:
            raise ValueError("both sides need at least one point")
        if not pairs:
            raise ValueError("relations must be nonempty")
        for i, j in pairs:
            if not (0 <= i < self.left_size and 0 <= j < self.right_size):
                raise IndexOutOfRange(f"pair {(i, j)} outside {self.left_size}x{self.right_size}")

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[Pair]:
        return iter(self.sorted_pairs())

    def __contains__(self, pair) -> bool:
        return tuple(pair) in self.pairs

    def sorted_pairs(self) -> tuple[Pair, ...]:
        return tuple(sorted(self.pairs))

    def image(self, i: int) -> frozenset[int]:
        return frozenset(j for a, j in self.pairs if a == i)

    def preimage(self, j: int) -> frozenset[int]:
        return frozenset(i for i, b in self.pairs if b == j)

    @property
    def masks(self) -> tuple[int, ...]:
        """Per-left-point bitmask of related right indices."""
        out = [0] * self.left_size
        for i, j in self.pairs:
            out[i] |= 1 << j
        return tuple(out)

    def is_correspondence(self) -> bool:
        return (
            len({i for i, _ in self.pairs}) == self.left_size
            and len({j for _, j in self.pairs}) == self.right_size
        )

    def transpose(self) -> "Relation":
        return Relation(self.right_size, self.left_size, frozenset((j, i) for i, j in self.pairs))

    def to_json(self) -> list[list[int]]:
        return [[i, j] for i, j in self.sorted_pairs()]


class Correspondence(Relation):
    """A relation whose projections onto both sides are surjective."""

    def __post_init__(self):
        super().__post_init__()
        if not self.is_correspondence():
            raise NotACorrespondence(f"projections not surjective: {sorted(self.pairs)}")

    @classmethod
    def from_masks(cls, right_size: int, masks: Iterable[int]) -> "Correspondence":
        masks = list(masks)
        pairs = frozenset((i, j) for i, mask in enumerate(masks) for j in range(right_size) if mask >> j & 1)
        return cls(len(masks), right_size, pairs)

    def transpose(self) -> "Correspondence":
        return Correspondence(self.right_size, self.left_size, frozenset((j, i) for i, j in self.pairs))


def identity_correspondence(n: int) -> Correspondence:
    return Correspondence(n, n, frozenset((i, i) for i in range(n)))


def full_correspondence(n: int, m: int) -> Correspondence:
    return Correspondence(n, m, frozenset(product(range(n), range(m))))


def distortion(R: Relation, X: FiniteMetricSpace, Y: FiniteMetricSpace) -> Fraction:
    """``max ||x x'| - |y y'||`` over all pairs of related pairs."""
    for i, j in R.pairs:
        if i >= X.n or j >= Y.n:
            raise IndexOutOfRange(f"pair {(i, j)} does not index into spaces of size {X.n}, {Y.n}")
    pairs = R.sorted_pairs()
    worst = Fraction(0)
    for a, (x, y) in enumerate(pairs):
        for x2, y2 in pairs[a + 1:]:
            gap = abs(X.dist[x][x2] - Y.dist[y][y2])
            if gap > worst:
                worst = gap
    return worst


def _check_sizes(n: int, m: int, cap: int) -> None:
    if n < 1 or m < 1:
        raise ValueError("both sides need at least one point")
    if n > cap or m > cap:
        raise SizeCapExceeded(f"{n}x{m} exceeds the enumeration cap of {cap} per side")


def enumerate_correspondences(n: int, m: int, *, cap: int = DEFAULT_ENUMERATION_CAP) -> Iterator[Correspondence]:
    """Every correspondence between ``n`` and ``m`` points, in lexicographic order."""
    _check_sizes(n, m, cap)
    cells = list(product(range(n), range(m)))
    full_right = (1 << m) - 1
    chosen: list[Pair] = []

    def walk(start: int, rows: int, cols: int) -> Iterator[Correspondence]:
        last_row = chosen[-1][0] if chosen else 0
        # later cells never revisit rows before ``last_row``
        if rows & ((1 << last_row) - 1) != (1 << last_row) - 1:
            return
        if rows == (1 << n) - 1 and cols == full_right:
            yield Correspondence(n, m, frozenset(chosen))
        for c in range(start, len(cells)):
            i, j = cells[c]
            chosen.append((i, j))
            yield from walk(c + 1, rows | 1 << i, cols | 1 << j)
            chosen.pop()

    return walk(0, 0, 0)


def is_irreducible(R: Relation) -> bool:
    """True when ``R`` is a correspondence and dropping any pair breaks it.

    A pair can be dropped exactly when both of its endpoints have other
    partners, so irreducible means every pair has an endpoint of degree one.
    """
    if not R.is_correspondence():
        return False
    left_deg = [0] * R.left_size
    right_deg = [0] * R.right_size
    for i, j in R.pairs:
        left_deg[i] += 1
        right_deg[j] += 1
    return all(left_deg[i] == 1 or right_deg[j] == 1 for i, j in R.pairs)


@dataclass(frozen=True)
class IrreducibleDecomposition:
    """Block structure of an irreducible correspondence.

    Left side: ``left_blocks`` (groups of >= 2 points sharing a single right
    point), ``left_matched`` (points matched one-to-one) and ``left_spread``
    (points related to a group of >= 2 right points). The right side mirrors
    this with ``right_centers``, ``right_matched`` and ``right_blocks``.
    ``bijection`` pairs every left part with its right part.
    """

    left_size: int
    right_size: int
    left_blocks: tuple[frozenset[int], ...]
    left_matched: tuple[int, ...]
    left_spread: tuple[int, ...]
    right_centers: tuple[int, ...]
    right_matched: tuple[int, ...]
    right_blocks: tuple[frozenset[int], ...]
    bijection: tuple[tuple[frozenset[int], frozenset[int]], ...]

    def pairs(self) -> frozenset[Pair]:
        return frozenset(p for lefts, rights in self.bijection for p in product(lefts, rights))

    def to_correspondence(self) -> Correspondence:
        return Correspondence(self.left_size, self.right_size, self.pairs())


def decompose_irreducible(R: Relation) -> IrreducibleDecomposition:
    if not is_irreducible(R):
        raise NotIrreducible(f"{sorted(R.pairs)} is not an irreducible correspondence")
    parts = []
    for i in range(R.left_size):
        img = R.image(i)
        if len(img) >= 2:
            parts.append((frozenset([i]), img))
    for j in range(R.right_size):
        pre = R.preimage(j)
        if len(pre) >= 2:
            parts.append((pre, frozenset([j])))
    for i, j in R.pairs:
        if len(R.image(i)) == 1 and len(R.preimage(j)) == 1:
            parts.append((frozenset([i]), frozenset([j])))
    parts.sort(key=lambda p: (min(p[0]), min(p[1])))

    blocks = [p for p in parts if len(p[0]) >= 2]
    matched = [p for p in parts if len(p[0]) == 1 and len(p[1]) == 1]
    spread = [p for p in parts if len(p[1]) >= 2]
    return IrreducibleDecomposition(
        left_size=R.left_size,
        right_size=R.right_size,
        left_blocks=tuple(lefts for lefts, _ in blocks),
        left_matched=tuple(min(lefts) for lefts, _ in matched),
        left_spread=tuple(min(lefts) for lefts, _ in spread),
        right_centers=tuple(min(rights) for _, rights in blocks),
        right_matched=tuple(min(rights) for _, rights in matched),
        right_blocks=tuple(rights for _, rights in spread),
        bijection=tuple(parts),
    )


def _set_partitions(items: list[int]) -> Iterator[list[list[int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        yield [[first]] + part
        for k in range(len(part)):
            yield part[:k] + [[first] + part[k]] + part[k + 1:]


def _irreducible_structural(n: int, m: int) -> Iterator[frozenset[Pair]]:
    xs, ys = list(range(n)), list(range(m))
    for size in range(0, n + 1):
        for grouped in combinations(xs, size):
            free_left = [x for x in xs if x not in grouped]
            for blocks in _set_partitions(list(grouped)):
                if any(len(b) < 2 for b in blocks):
                    continue
                for centers in permutations(ys, len(blocks)):
                    rest = [y for y in ys if y not in centers]
                    if len(rest) < len(free_left) or (rest and not free_left):
                        continue
                    base = [(x, c) for b, c in zip(blocks, centers) for x in b]
                    for owners in product(free_left, repeat=len(rest)):
                        if len(set(owners)) != len(free_left):
                            continue
                        yield frozenset(base + list(zip(owners, rest)))


def enumerate_irreducible(n: int, m: int, *, cap: int = DEFAULT_ENUMERATION_CAP) -> Iterator[Correspondence]:
    """Every irreducible correspondence, in lexicographic order.

    Built from the block structure rather than by filtering: choose which left
    points form groups sharing one right point, partition them into groups of
    size >= 2, give each group a distinct right point, then distribute the
    remaining right points onto the remaining left points surjectively.
    """
    _check_sizes(n, m, cap)
    found = sorted(_irreducible_structural(n, m), key=sorted)
    for pairs in found:
        yield Correspondence(n, m, pairs)
