"""Plane partitions, odd-column-strict arrays, tableaux, and the fold bijection.

A plane partition is stored as its height matrix: entry (i, j) is the number
of lattice points stacked over (i, j), weakly decreasing along rows and
columns.  A symmetric plane partition has a symmetric height matrix; its
horizontal slices are then self-conjugate Young diagrams.

``fold`` maps a symmetric plane partition to the column-strict array whose
column heights at level y are the principal hook lengths of the y-th slice.
Self-conjugate diagrams correspond exactly to strictly decreasing sequences
of odd principal hooks, and slice containment makes hooks weakly decrease
from one level to the next, so the image is precisely an odd-column-strict
array; the map preserves the number of lattice points.  ``unfold`` inverts
it.  These enumerators are the brute-force oracle side of every identity in
this package.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from .poly import LaurentPoly, Monomial

__all__ = [
    "ColumnStrictPP",
    "MalformedInputError",
    "NotSymmetricError",
    "Partition",
    "PlanePartition",
    "Tableau",
    "column_strict_odd_pps",
    "fold",
    "generating_function",
    "partitions_in_box",
    "ssyt",
    "symmetric_plane_partitions",
    "unfold",
]


class NotSymmetricError(ValueError):
    """fold() requires a symmetric plane partition."""


class MalformedInputError(ValueError):
    """Column heights must be strictly decreasing positive odd values."""


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing positive parts; () is the empty partition."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        for i, p in enumerate(parts):
            if p < 1 or (i > 0 and parts[i - 1] < p):
                raise ValueError(f"not weakly decreasing positive parts: {parts}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    # alias so partitions can feed generating_function directly
    @property
    def weight(self) -> int:
        return self.size

    def fits_in_box(self, m: int, n: int) -> bool:
        """At most n parts, each at most m."""
        return len(self.parts) <= n and (not self.parts or self.parts[0] <= m)

    def padded(self, n: int) -> tuple[int, ...]:
        if len(self.parts) > n:
            raise ValueError(f"{self} has more than {n} parts")
        return self.parts + (0,) * (n - len(self.parts))

    def conjugate(self) -> Partition:
        if not self.parts:
            return Partition()
        return Partition(
            tuple(sum(1 for p in self.parts if p > c) for c in range(self.parts[0]))
        )

    def principal_hooks(self) -> tuple[int, ...]:
        """Hook lengths of the diagonal cells: arm + leg + 1, strictly decreasing."""
        conj = self.conjugate().parts
        hooks = []
        for c in range(len(self.parts)):
            if self.parts[c] < c + 1:
                break
            hooks.append((self.parts[c] - c - 1) + (conj[c] - c - 1) + 1)
        return tuple(hooks)

    @classmethod
    def from_principal_hooks(cls, hooks: Iterable[int]) -> Partition:
        """The self-conjugate partition with the given diagonal hooks.

        Requires strictly decreasing positive odd values (the hooks of a
        self-conjugate diagram are exactly such sequences).
        """
        hooks = tuple(hooks)
        for i, d in enumerate(hooks):
            if d < 1 or d % 2 == 0 or (i > 0 and hooks[i - 1] <= d):
                raise MalformedInputError(
                    f"hooks must be strictly decreasing positive odd values: {hooks}"
                )
        if not hooks:
            return cls()
        arms = [(d - 1) // 2 for d in hooks]
        r = len(hooks)
        side = arms[0] + 1
        parts = [arms[c] + c + 1 for c in range(r)]
        for i in range(r + 1, side + 1):
            parts.append(sum(1 for c in range(r) if c + 1 + arms[c] >= i))
        return cls(tuple(p for p in parts if p))

    def to_json(self) -> list[int]:
        return list(self.parts)

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"


@dataclass(frozen=True)
class PlanePartition:
    """Height matrix of a plane partition, kept in the minimal square box.

    Equality is equality as sets of lattice points: trailing all-zero
    row/column pairs are stripped at construction, so the same solid built in
    different box sizes compares equal.
    """

    heights: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        rows = [tuple(int(v) for v in row) for row in self.heights]
        while rows and all(v == 0 for v in rows[-1]) and all(r[-1] == 0 for r in rows):
            rows = [r[:-1] for r in rows[:-1]]
        object.__setattr__(self, "heights", tuple(rows))

    @property
    def n(self) -> int:
        return len(self.heights)

    @property
    def weight(self) -> int:
        return sum(sum(row) for row in self.heights)

    @property
    def max_height(self) -> int:
        return max((row[0] for row in self.heights), default=0)

    def is_symmetric(self) -> bool:
        h = self.heights
        return all(h[i][j] == h[j][i] for i in range(self.n) for j in range(i + 1, self.n))

    def is_bounded(self, m: int) -> bool:
        return all(v <= m for row in self.heights for v in row)

    def validate(self) -> None:
        """Check the down-closed-set condition; raises ValueError."""
        h, n = self.heights, self.n
        for i in range(n):
            if len(h[i]) != n:
                raise ValueError("height matrix must be square")
            for j in range(n):
                if h[i][j] < 0:
                    raise ValueError("heights must be non-negative")
                if j + 1 < n and h[i][j] < h[i][j + 1]:
                    raise ValueError(f"row {i} not weakly decreasing")
                if i + 1 < n and h[i][j] < h[i + 1][j]:
                    raise ValueError(f"column {j} not weakly decreasing")

    def slice_partition(self, level: int) -> Partition:
        """Row lengths of the horizontal slice at height ``level`` (1-based)."""
        counts = []
        for row in self.heights:
            c = sum(1 for v in row if v >= level)
            if c:
                counts.append(c)
        return Partition(tuple(counts))

    def to_json(self) -> list[list[int]]:
        return [list(row) for row in self.heights]

    @classmethod
    def from_json(cls, data: Iterable[Iterable[int]]) -> PlanePartition:
        return cls(tuple(tuple(row) for row in data))

    def __repr__(self) -> str:
        return f"PlanePartition({self.to_json()})"


@dataclass(frozen=True)
class ColumnStrictPP:
    """Column-strict plane partition with odd column heights.

    ``levels[j-1]`` holds the column heights at y = j in x order: strictly
    decreasing positive odd values, weakly decreasing level to level.
    Trailing empty levels are stripped so equality is canonical.
    """

    levels: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        levels = [tuple(int(v) for v in lvl) for lvl in self.levels]
        while levels and not levels[-1]:
            levels.pop()
        object.__setattr__(self, "levels", tuple(levels))

    @property
    def weight(self) -> int:
        return sum(sum(lvl) for lvl in self.levels)

    @property
    def num_levels(self) -> int:
        return len(self.levels)

    def height(self, i: int, j: int) -> int:
        """Column height at x-position i, y-position j (both 1-based)."""
        if 1 <= j <= len(self.levels) and 1 <= i <= len(self.levels[j - 1]):
            return self.levels[j - 1][i - 1]
        return 0

    def positions(self) -> dict[tuple[int, int], int]:
        return {
            (i + 1, j + 1): h
            for j, lvl in enumerate(self.levels)
            for i, h in enumerate(lvl)
        }

    def validate(self, height_bound: int | None = None) -> None:
        """Check odd/strict/nesting invariants; raises MalformedInputError."""
        for j, lvl in enumerate(self.levels):
            for i, h in enumerate(lvl):
                if h < 1 or h % 2 == 0:
                    raise MalformedInputError(f"height {h} at level {j + 1} is not a positive odd value")
                if i > 0 and lvl[i - 1] <= h:
                    raise MalformedInputError(f"level {j + 1} is not strictly decreasing")
                if height_bound is not None and h > height_bound:
                    raise MalformedInputError(f"height {h} exceeds bound {height_bound}")
            if j > 0:
                prev = self.levels[j - 1]
                if len(lvl) > len(prev) or any(h > p for h, p in zip(lvl, prev)):
                    raise MalformedInputError(f"level {j + 1} does not nest inside level {j}")

    def to_json_dict(self) -> dict[str, int]:
        return {f"{i},{j}": h for (i, j), h in sorted(self.positions().items(), key=lambda kv: (kv[0][1], kv[0][0]))}

    @classmethod
    def from_json_dict(cls, data: dict[str, int]) -> ColumnStrictPP:
        cells = {}
        for key, h in data.items():
            i_text, j_text = key.split(",")
            cells[(int(i_text), int(j_text))] = int(h)
        if not cells:
            return cls()
        depth = max(j for _, j in cells)
        levels = []
        for j in range(1, depth + 1):
            width = max((i for i, jj in cells if jj == j), default=0)
            levels.append(tuple(cells.get((i, j), 0) for i in range(1, width + 1)))
        return cls(tuple(levels))

    def __repr__(self) -> str:
        return f"ColumnStrictPP({[list(lvl) for lvl in self.levels]})"


@dataclass(frozen=True)
class Tableau:
    """Semistandard filling: rows weakly increase, columns strictly increase."""

    shape: Partition
    rows: tuple[tuple[int, ...], ...]

    def validate(self, n: int) -> None:
        if len(self.rows) != len(self.shape.parts):
            raise ValueError("row count does not match shape")
        for r, row in enumerate(self.rows):
            if len(row) != self.shape.parts[r]:
                raise ValueError(f"row {r} has wrong length")
            for c, v in enumerate(row):
                if not 1 <= v <= n:
                    raise ValueError(f"entry {v} outside 1..{n}")
                if c > 0 and row[c - 1] > v:
                    raise ValueError(f"row {r} not weakly increasing")
                if r > 0 and self.rows[r - 1][c] >= v:
                    raise ValueError(f"column {c} not strictly increasing")

    def content_monomial(self) -> Monomial:
        counts: dict[str, int] = {}
        for row in self.rows:
            for v in row:
                name = f"x{v}"
                counts[name] = counts.get(name, 0) + 1
        return Monomial(counts)


# -- enumeration --------------------------------------------------------------


def partitions_in_box(m: int, n: int) -> list[Partition]:
    """All partitions with at most n parts, each at most m (binomial(m+n, n) of them)."""
    if m < 0 or n < 0:
        raise ValueError("box dimensions must be non-negative")
    out: list[Partition] = []
    acc: list[int] = []

    def rec(max_next: int, slots_left: int) -> None:
        out.append(Partition(tuple(acc)))
        if slots_left == 0:
            return
        for part in range(max_next, 0, -1):
            acc.append(part)
            rec(part, slots_left - 1)
            acc.pop()

    rec(m, n)
    return out


def symmetric_plane_partitions(n: int, m: int) -> Iterator[PlanePartition]:
    """All symmetric plane partitions in the n x n x m box, streamed.

    Backtracks over the upper triangle in row-major order (the mirror cell
    carries the lower triangle), pruning with the row/column monotonicity
    bounds, so nothing is materialized beyond the current matrix.
    """
    if n < 0 or m < 0:
        raise ValueError("box dimensions must be non-negative")
    cells = [(i, j) for i in range(n) for j in range(i, n)]
    h = [[0] * n for _ in range(n)]

    def rec(k: int) -> Iterator[PlanePartition]:
        if k == len(cells):
            yield PlanePartition(tuple(tuple(row) for row in h))
            return
        i, j = cells[k]
        if i == 0 and j == 0:
            bound = m
        elif i == 0:
            bound = h[0][j - 1]
        elif i == j:
            bound = h[i - 1][j]
        else:
            bound = min(h[i - 1][j], h[i][j - 1])
        for v in range(bound + 1):
            h[i][j] = v
            h[j][i] = v
            yield from rec(k + 1)
        h[i][j] = 0
        h[j][i] = 0

    yield from rec(0)


def _levels_under(prev: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Nonempty strictly decreasing odd tuples bounded componentwise by prev."""
    acc: list[int] = []

    def rec(pos: int, cap: int) -> Iterator[tuple[int, ...]]:
        if pos >= len(prev):
            return
        start = min(prev[pos], cap)
        if start % 2 == 0:
            start -= 1
        for v in range(start, 0, -2):
            acc.append(v)
            yield tuple(acc)
            yield from rec(pos + 1, v - 2)
            acc.pop()

    yield from rec(0, prev[0] if prev else 0)


def column_strict_odd_pps(n: int, m: int) -> Iterator[ColumnStrictPP]:
    """All odd-column-strict plane partitions with y <= m and heights <= 2n-1."""
    if n < 0 or m < 0:
        raise ValueError("bounds must be non-negative")
    root = tuple(range(2 * n - 1, 0, -2))
    stack: list[tuple[int, ...]] = []

    def rec(depth: int, prev: tuple[int, ...]) -> Iterator[ColumnStrictPP]:
        yield ColumnStrictPP(tuple(stack))
        if depth == m:
            return
        for lvl in _levels_under(prev):
            stack.append(lvl)
            yield from rec(depth + 1, lvl)
            stack.pop()

    yield from rec(0, root)


def ssyt(shape: Partition, n: int) -> Iterator[Tableau]:
    """All semistandard tableaux of the given shape with entries in 1..n."""
    parts = shape.parts
    if len(parts) > n:
        return
    if not parts:
        yield Tableau(shape, ())
        return
    rows = [[0] * p for p in parts]
    order = [(r, c) for r in range(len(parts)) for c in range(parts[r])]

    def rec(k: int) -> Iterator[Tableau]:
        if k == len(order):
            yield Tableau(shape, tuple(tuple(row) for row in rows))
            return
        r, c = order[k]
        lo = 1
        if c > 0:
            lo = max(lo, rows[r][c - 1])
        if r > 0:
            lo = max(lo, rows[r - 1][c] + 1)
        for v in range(lo, n + 1):
            rows[r][c] = v
            yield from rec(k + 1)

    yield from rec(0)


# -- the fold bijection --------------------------------------------------------


def fold(sp: PlanePartition) -> ColumnStrictPP:
    """Symmetric plane partition -> odd-column-strict array, weight-preserving.

    Level y of the image records the principal hook lengths of the y-th
    horizontal slice of ``sp`` (a self-conjugate diagram).
    """
    if not sp.is_symmetric():
        raise NotSymmetricError("fold requires a symmetric plane partition")
    levels = tuple(
        sp.slice_partition(level).principal_hooks()
        for level in range(1, sp.max_height + 1)
    )
    return ColumnStrictPP(levels)


def unfold(cs: ColumnStrictPP) -> PlanePartition:
    """Inverse of :func:`fold`: rebuild the symmetric plane partition.

    Level y's heights are read as principal hooks of a self-conjugate
    diagram; stacking the diagrams gives the height matrix.  Raises
    MalformedInputError if any level is not strictly decreasing positive odd
    values (or levels fail to nest).
    """
    cs.validate()
    if not cs.levels:
        return PlanePartition()
    diagrams = [Partition.from_principal_hooks(lvl) for lvl in cs.levels]
    side = diagrams[0].parts[0]  # self-conjugate, so widest = tallest
    heights = [
        [sum(1 for d in diagrams if i < len(d.parts) and d.parts[i] > j) for j in range(side)]
        for i in range(side)
    ]
    return PlanePartition(tuple(tuple(row) for row in heights))


def generating_function(objects: Iterable[object]) -> LaurentPoly:
    """Sum of q^weight over a finite stream of objects with a ``weight`` attribute."""
    counts: dict[int, int] = {}
    for obj in objects:
        w = obj.weight
        counts[w] = counts.get(w, 0) + 1
    return LaurentPoly({Monomial.variable("q", w): c for w, c in counts.items()})
