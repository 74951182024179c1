"""
Tableau statistics for the Tokuyama coefficient of ``T`` in ``B(lambda + rho)``.

Two independent routes to the coefficient ``C(T; t)`` (with ``t = 1/q``):

* :func:`coefficient` reads segments and flush segments straight off the
  tableau and tests for gaps;
* :func:`coefficient_via_decorations` builds the triangular arrays ``a(T)``
  and ``b(T)``, circles and boxes their entries and checks strictness.

Indices follow the usual conventions: rows ``i`` and colors ``k`` are
1-based, triangular arrays are indexed by ``1 <= i <= j <= r`` and
flattened row by row.  A tableau here always has ``r`` rows over the
alphabet ``{1, ..., r+1}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .laurent import UniPoly
from .tableaux import Tableau, content, theta


class CoefficientMismatch(AssertionError):
    """The segment route and the decoration route disagree on a tableau."""


def _check_crystal_tableau(tableau: Tableau) -> int:
    r = tableau.rank
    if tableau.max_entry != r + 1:
        raise ValueError(f"expected a tableau over 1..{r + 1} for {r} rows, got alphabet 1..{tableau.max_entry}")
    parts = [len(row) for row in tableau.rows]
    if any(lower >= upper for upper, lower in zip(parts, parts[1:])):
        raise ValueError(f"shape {tuple(parts)} is not strictly decreasing, so it is not of the form lambda + rho")
    return r


def triangle_positions(r: int) -> Iterator[tuple[int, int]]:
    """Positions ``(i, j)``, ``1 <= i <= j <= r``, in flattened order."""
    for i in range(1, r + 1):
        for j in range(i, r + 1):
            yield i, j


@dataclass(frozen=True)
class StatVector:
    """Triangular array ``v[i, j]`` for ``1 <= i <= j <= r``."""

    rank: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        expected = self.rank * (self.rank + 1) // 2
        if len(self.entries) != expected:
            raise ValueError(f"rank {self.rank} needs {expected} entries, got {len(self.entries)}")

    def _offset(self, i: int, j: int) -> int:
        if not 1 <= i <= j <= self.rank:
            raise KeyError((i, j))
        return (i - 1) * self.rank - (i - 1) * (i - 2) // 2 + (j - i)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.entries[self._offset(*ij)]

    def get(self, i: int, j: int) -> int:
        """Like indexing, but zero outside the triangle."""
        if not 1 <= i <= j <= self.rank:
            return 0
        return self.entries[self._offset(i, j)]

    def blocks(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(self[i, j] for j in range(i, self.rank + 1)) for i in range(1, self.rank + 1))

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return "(" + ";".join(",".join(str(v) for v in block) for block in self.blocks()) + ")"


@dataclass(frozen=True)
class DecoratedStatVector:
    """The vector ``a(T)`` with its circle and box flags."""

    base: StatVector
    circled: tuple[bool, ...]
    boxed: tuple[bool, ...]

    def __post_init__(self) -> None:
        if not len(self.circled) == len(self.boxed) == len(self.base):
            raise ValueError("flags must cover every entry of the base vector")

    def is_circled(self, i: int, j: int) -> bool:
        return self.circled[self.base._offset(i, j)]

    def is_boxed(self, i: int, j: int) -> bool:
        return self.boxed[self.base._offset(i, j)]

    @property
    def box_count(self) -> int:
        return sum(self.boxed)

    @property
    def circle_count(self) -> int:
        return sum(self.circled)

    @property
    def non_count(self) -> int:
        """Entries that are neither circled nor boxed."""
        return sum(1 for c, b in zip(self.circled, self.boxed) if not c and not b)

    def boxed_positions(self) -> list[tuple[int, int]]:
        return [ij for ij, flag in zip(triangle_positions(self.base.rank), self.boxed) if flag]

    def circled_positions(self) -> list[tuple[int, int]]:
        return [ij for ij, flag in zip(triangle_positions(self.base.rank), self.circled) if flag]

    def doubly_decorated(self) -> list[tuple[int, int]]:
        return [
            ij
            for ij, c, b in zip(triangle_positions(self.base.rank), self.circled, self.boxed)
            if c and b
        ]

    @property
    def strict(self) -> bool:
        return not any(c and b for c, b in zip(self.circled, self.boxed))


@dataclass(frozen=True)
class Segment:
    """A maximal run of ``color`` boxes in ``row`` (``color > row``).

    ``start`` is the 1-based column of the leftmost box.
    """

    row: int
    color: int
    start: int
    length: int

    @property
    def end(self) -> int:
        return self.start + self.length - 1


def a_vector(tableau: Tableau) -> StatVector:
    """``a[i, j]`` = number of ``(j+1)``-colored boxes in rows ``1..i``."""
    r = _check_crystal_tableau(tableau)
    per_row = [[row.count(color) for color in range(r + 2)] for row in tableau.rows]
    entries = []
    for i, j in triangle_positions(r):
        entries.append(sum(per_row[p][j + 1] for p in range(i)))
    return StatVector(r, tuple(entries))


def b_vector(tableau: Tableau) -> StatVector:
    """``b[i, j]`` = number of boxes in row ``i`` with color at least ``j+1``."""
    r = _check_crystal_tableau(tableau)
    entries = []
    for i, j in triangle_positions(r):
        entries.append(sum(1 for v in tableau.rows[i - 1] if v >= j + 1))
    return StatVector(r, tuple(entries))


def decorations(tableau: Tableau) -> DecoratedStatVector:
    """Circle ``a[i, j]`` when it equals ``a[i-1, j]`` (with ``a[0, j] = 0``);
    box it when ``b[i, j] >= theta_i + b[i+1, j+1]`` (zero off the triangle).
    """
    r = _check_crystal_tableau(tableau)
    a = a_vector(tableau)
    b = b_vector(tableau)
    th = theta(len(row) for row in tableau.rows)
    circled = []
    boxed = []
    for i, j in triangle_positions(r):
        circled.append(a[i, j] == a.get(i - 1, j))
        boxed.append(b[i, j] >= th[i - 1] + b.get(i + 1, j + 1))
    return DecoratedStatVector(a, tuple(circled), tuple(boxed))


def is_strict(tableau: Tableau) -> bool:
    """No entry of ``a(T)`` is both circled and boxed."""
    return decorations(tableau).strict


def segments(tableau: Tableau) -> list[Segment]:
    """All ``k``-segments, ordered by row then color."""
    _check_crystal_tableau(tableau)
    found = []
    for i, row in enumerate(tableau.rows, start=1):
        runs: dict[int, list[int]] = {}
        for col, value in enumerate(row, start=1):
            if value <= i:
                continue
            if value in runs and runs[value][0] + runs[value][1] != col:
                # impossible in a weakly increasing row
                raise ValueError(f"color {value} forms two separate runs in row {i}")
            runs.setdefault(value, [col, 0])[1] += 1
        found.extend(Segment(i, color, start, length) for color, (start, length) in sorted(runs.items()))
    return found


def seg(tableau: Tableau) -> int:
    return len(segments(tableau))


def _segment_map(tableau: Tableau) -> dict[tuple[int, int], Segment]:
    return {(s.row, s.color): s for s in segments(tableau)}


def _is_flush(segment: Segment, by_position: dict[tuple[int, int], Segment], parts: tuple[int, ...]) -> bool:
    below = sorted(
        s.color for (row, color), s in by_position.items() if row == segment.row + 1 and color > segment.color
    )
    if below:
        return by_position[segment.row + 1, below[0]].start == segment.start
    # Nothing higher below: the segment together with everything to its
    # right must fill exactly the overhang of row i past row i+1.
    overhang = theta(parts)[segment.row - 1]
    return parts[segment.row - 1] - segment.start + 1 == overhang


def flush_segments(tableau: Tableau) -> list[Segment]:
    """Segments counted by the flush statistic.

    A ``k``-segment in row ``i`` is flush when its leftmost box sits above the
    leftmost box of the lowest-colored segment of color ``> k`` in row
    ``i+1``.  When row ``i+1`` has no such segment, it is flush when the boxes
    of color ``>= k`` in row ``i`` number exactly ``theta_i``, i.e. the
    segment starts in the first column past the end of row ``i+1``.
    """
    _check_crystal_tableau(tableau)
    parts = tuple(len(row) for row in tableau.rows)
    by_position = _segment_map(tableau)
    return [s for s in by_position.values() if _is_flush(s, by_position, parts)]


def flush_count(tableau: Tableau) -> int:
    return len(flush_segments(tableau))


def gaps(tableau: Tableau) -> list[tuple[int, int]]:
    """Pairs ``(i, k)`` with ``1 <= i < k <= r`` at which the tableau has a gap.

    A gap at ``(i, k)`` means: row ``i`` has no ``k``-segment; the next
    segment of row ``i`` above color ``k`` (say color ``l``) is flush; and
    row ``i+1`` has no segment of any color ``k+1..l``.
    """
    r = _check_crystal_tableau(tableau)
    parts = tuple(len(row) for row in tableau.rows)
    by_position = _segment_map(tableau)
    found = []
    for i in range(1, r):
        colors_here = sorted(color for row, color in by_position if row == i)
        colors_below = {color for row, color in by_position if row == i + 1}
        for k in range(i + 1, r + 1):
            if k in colors_here:
                continue
            higher = [c for c in colors_here if c > k]
            if not higher:
                continue
            ell = higher[0]
            if any(p in colors_below for p in range(k + 1, ell + 1)):
                continue
            if _is_flush(by_position[i, ell], by_position, parts):
                found.append((i, k))
    return found


def has_gaps(tableau: Tableau) -> bool:
    return bool(gaps(tableau))


def is_gapless(tableau: Tableau) -> bool:
    return not gaps(tableau)


def coefficient_via_decorations(tableau: Tableau) -> UniPoly:
    """``(-t)^box (1-t)^non`` for strict tableaux, zero otherwise."""
    dec = decorations(tableau)
    if not dec.strict:
        return UniPoly()
    return UniPoly.tokuyama(dec.box_count, dec.non_count)


def coefficient(tableau: Tableau, check: bool = False) -> UniPoly:
    """``(-t)^flush (1-t)^(seg - flush)`` for gapless tableaux, zero otherwise.

    With ``check=True`` the result is compared against
    :func:`coefficient_via_decorations` and :class:`CoefficientMismatch` is
    raised if they differ.
    """
    if has_gaps(tableau):
        result = UniPoly()
    else:
        n_seg = seg(tableau)
        n_flush = flush_count(tableau)
        result = UniPoly.tokuyama(n_flush, n_seg - n_flush)
    if check:
        other = coefficient_via_decorations(tableau)
        if other != result:
            raise CoefficientMismatch(f"{tableau.key()}: segments give {result}, decorations give {other}")
    return result


def statistic_record(tableau: Tableau) -> dict:
    """Every statistic of ``tableau`` as a JSON-ready dict."""
    dec = decorations(tableau)
    return {
        "rows": [list(row) for row in tableau.rows],
        "content": list(content(tableau)),
        "a": list(dec.base.entries),
        "b": list(b_vector(tableau).entries),
        "circled": list(dec.circled),
        "boxed": list(dec.boxed),
        "seg": seg(tableau),
        "flush": flush_count(tableau),
        "gapless": is_gapless(tableau),
        "coefficient": {"coeffs_in_t": list(coefficient(tableau).coeffs)},
    }
