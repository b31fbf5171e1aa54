"""Brute-force verifiers for the closed-form bounds.

Two independent jobs:

* enumerate every fixed polyomino of a given area (translation-distinct,
  rotations and reflections counted separately) and minimize perimeter,
  cross-checked by a second counting method that never builds cell sets;
* sweep every balanced two-letter word up to a length cap and confirm
  that word length is at least 2*ceil(2*sqrt(|integral|)) for the curve
  it traces, recording the minimal length for each achieved value.

Both searches are capped so the full suite stays fast; the caps can be
raised from the CLI.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .bounds import ceil_two_sqrt

POLYOMINO_AREA_CAP = 10
WORD_LENGTH_CAP = 12

Cell = tuple[int, int]


class CapExceededError(ValueError):
    """Raised when an oracle sweep is asked to exceed its runtime cap."""


@dataclass(frozen=True)
class Polyomino:
    """A nonempty, translation-normalized set of unit grid cells."""

    cells: frozenset[Cell]

    def __post_init__(self) -> None:
        if not self.cells:
            raise ValueError("a polyomino has at least one cell")
        if min(x for x, _ in self.cells) != 0 or min(y for _, y in self.cells) != 0:
            raise ValueError("polyomino cells must be normalized to min x = min y = 0")

    @property
    def area(self) -> int:
        return len(self.cells)

    def perimeter(self) -> int:
        """Unit edges adjacent to exactly one cell: 4*area - 2*(adjacent pairs)."""
        adjacent = sum(
            ((x + 1, y) in self.cells) + ((x, y + 1) in self.cells)
            for x, y in self.cells
        )
        return 4 * len(self.cells) - 2 * adjacent

    def is_connected(self) -> bool:
        """Edge-connectivity check by flood fill."""
        todo = [next(iter(self.cells))]
        seen = set(todo)
        while todo:
            x, y = todo.pop()
            for nb in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
                if nb in self.cells and nb not in seen:
                    seen.add(nb)
                    todo.append(nb)
        return len(seen) == len(self.cells)


@dataclass(frozen=True)
class OracleReport:
    """One row of an oracle sweep: swept parameter, observed extremum,
    closed-form prediction."""

    parameter: int
    observed: int
    predicted: int

    @property
    def agree(self) -> bool:
        return self.observed == self.predicted


def format_reports(reports: list[OracleReport]) -> str:
    """Fixed-width table, one row per report."""
    lines = [f"{'parameter':>9}  {'observed':>8}  {'predicted':>9}  {'agree':>5}"]
    for r in reports:
        lines.append(f"{r.parameter:>9}  {r.observed:>8}  {r.predicted:>9}  {'yes' if r.agree else 'no':>5}")
    return "\n".join(lines) + "\n"


def _normalize(cells: frozenset[Cell]) -> frozenset[Cell]:
    dx = min(x for x, _ in cells)
    dy = min(y for _, y in cells)
    if dx == 0 and dy == 0:
        return cells
    return frozenset((x - dx, y - dy) for x, y in cells)


@lru_cache(maxsize=None)
def _fixed_shapes(area: int) -> frozenset[frozenset[Cell]]:
    """All normalized fixed polyominoes of the given area, by growth: every
    area-a polyomino is some area-(a-1) polyomino plus one adjacent cell."""
    if area == 1:
        return frozenset({frozenset({(0, 0)})})
    shapes = set()
    for smaller in _fixed_shapes(area - 1):
        for x, y in smaller:
            for nb in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
                if nb not in smaller:
                    shapes.add(_normalize(smaller | {nb}))
    return frozenset(shapes)


def enumerate_polyominoes(area: int, cap: int = POLYOMINO_AREA_CAP) -> list[Polyomino]:
    """All fixed polyominoes of the given area, sorted canonically."""
    if area < 1:
        raise ValueError(f"area must be at least 1, got {area}")
    if area > cap:
        raise CapExceededError(f"area {area} exceeds the cap {cap}")
    shapes = [Polyomino(cells) for cells in _fixed_shapes(area)]
    shapes.sort(key=lambda p: tuple(sorted(p.cells)))
    return shapes


def count_fixed_polyominoes(max_area: int) -> list[int]:
    """Counts of fixed polyominoes for areas 1..max_area, computed without
    building or normalizing cell sets.

    Candidate cells are restricted to the half plane y > 0 or (y = 0,
    x >= 0), pinning the translation class.  Each shape is counted exactly
    once: candidates are tried in order and stay forbidden for the
    remainder of the branch once their subtree is exhausted.
    """
    if max_area < 1:
        raise ValueError(f"max_area must be at least 1, got {max_area}")
    counts = [0] * (max_area + 1)

    def grow(untried: list[Cell], seen: set[Cell], size: int) -> None:
        while untried:
            cx, cy = untried.pop()
            counts[size + 1] += 1
            if size + 1 == max_area:
                continue
            added = []
            for nb in ((cx + 1, cy), (cx - 1, cy), (cx, cy + 1), (cx, cy - 1)):
                x, y = nb
                if (y > 0 or (y == 0 and x >= 0)) and nb not in seen:
                    seen.add(nb)
                    added.append(nb)
            grow(untried + added, seen, size + 1)
            for nb in added:
                seen.discard(nb)

    grow([(0, 0)], {(0, 0)}, 0)
    return counts[1:]


def verify_min_perimeter(max_area: int, cap: int = POLYOMINO_AREA_CAP) -> list[OracleReport]:
    """Compare the enumerated minimum perimeter against 2*ceil(2*sqrt(A))
    for every area 1..max_area."""
    if max_area < 1:
        raise ValueError(f"max_area must be at least 1, got {max_area}")
    if max_area > cap:
        raise CapExceededError(f"max_area {max_area} exceeds the cap {cap}")
    reports = []
    for area in range(1, max_area + 1):
        observed = min(p.perimeter() for p in enumerate_polyominoes(area, cap))
        reports.append(OracleReport(area, observed, 2 * ceil_two_sqrt(area)))
    return reports


def verify_word_length_bound(max_len: int, cap: int = WORD_LENGTH_CAP) -> list[OracleReport]:
    """Exhaust all balanced words over {x1^±1, x2^±1} of length <= max_len.

    A balanced word (both signed letter counts zero) traces a closed curve
    whose length is the word length.  For each achieved |integral| value A
    the report row holds the minimal word length found against the
    predicted minimum 2*ceil(2*sqrt(A)); observed < predicted anywhere
    would be a counterexample.

    Sweeping two letter indices loses no generality: the integral only
    depends on the word restricted to the two indices.  The search walks
    the 4-ary tree of words directly, pruning branches that cannot return
    to the origin within the length budget (those contain no balanced
    continuation, so nothing in scope is skipped).
    """
    if max_len < 1:
        raise ValueError(f"max_len must be at least 1, got {max_len}")
    if max_len > cap:
        raise CapExceededError(f"max_len {max_len} exceeds the cap {cap}")

    min_len: dict[int, int] = {0: 0}

    def walk(x: int, y: int, depth: int, acc: int) -> None:
        if x == 0 and y == 0 and depth:
            a = abs(acc)
            best = min_len.get(a)
            if best is None or depth < best:
                min_len[a] = depth
        budget = max_len - depth - 1
        if budget < 0:
            return
        ax, ay = abs(x), abs(y)
        if abs(x + 1) + ay <= budget:
            walk(x + 1, y, depth + 1, acc)
        if abs(x - 1) + ay <= budget:
            walk(x - 1, y, depth + 1, acc)
        if ax + abs(y + 1) <= budget:
            walk(x, y + 1, depth + 1, acc + x)
        if ax + abs(y - 1) <= budget:
            walk(x, y - 1, depth + 1, acc - x)

    walk(0, 0, 0, 0)
    return [
        OracleReport(a, min_len[a], 2 * ceil_two_sqrt(a))
        for a in sorted(min_len)
    ]
