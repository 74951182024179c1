"""
Shapes, dominant weights and semistandard tableaux.

A tableau is stored row-wise (English notation, top row first) as tuples of
colors.  Rows are 1-indexed in the public API wherever a row number appears,
and columns are 1-indexed as well, so that ``(row, col)`` pairs match the
way tableaux are drawn on paper.

Weights use GL coordinates: the content of a tableau over ``{1, ..., n}`` is
the vector ``(m_1, ..., m_n)`` of color multiplicities.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterator, Sequence

Row = tuple[int, ...]


class NotSemistandardError(ValueError):
    """Raised when a filling violates the semistandard conditions."""

    def __init__(self, message: str, cell: tuple[int, int] | None = None) -> None:
        super().__init__(message)
        self.cell = cell


@dataclass(frozen=True)
class Shape:
    """A partition with positive parts.

    By default the parts must be strictly decreasing, which is the case for
    every shape ``lambda + rho``.  Pass ``strict=False`` to accept any weakly
    decreasing partition (used for plain Schur polynomial enumeration).
    """

    parts: tuple[int, ...]
    strict: bool = field(default=True, compare=False)

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"shape parts must be positive, got {parts}")
        for upper, lower in zip(parts, parts[1:]):
            if lower > upper:
                raise ValueError(f"shape {parts} is not weakly decreasing")
            if self.strict and lower == upper:
                raise ValueError(f"shape {parts} is not strictly decreasing")

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, index: int) -> int:
        return self.parts[index]

    @property
    def size(self) -> int:
        return sum(self.parts)

    def column_heights(self) -> tuple[int, ...]:
        if not self.parts:
            return ()
        return tuple(sum(1 for p in self.parts if p > c) for c in range(self.parts[0]))

    def theta(self) -> tuple[int, ...]:
        return theta(self)


def _check_weight(coeffs: Sequence[int], r: int | None) -> tuple[int, ...]:
    coeffs = tuple(int(a) for a in coeffs)
    if r is not None and len(coeffs) != r:
        raise ValueError(f"expected {r} fundamental-weight coefficients, got {len(coeffs)}")
    if not coeffs:
        raise ValueError("rank must be at least 1")
    if any(a < 0 for a in coeffs):
        raise ValueError(f"dominant weight has a negative coefficient: {coeffs}")
    return coeffs


def partition_from_weight(coeffs: Sequence[int], r: int | None = None) -> tuple[int, ...]:
    """Partition of ``sum a_i omega_i``: ``a_i`` columns of height ``i``.

    The result has exactly ``r`` parts, some possibly zero.
    """
    coeffs = _check_weight(coeffs, r)
    return tuple(sum(coeffs[i:]) for i in range(len(coeffs)))


def shape_from_weight(coeffs: Sequence[int], r: int | None = None) -> Shape:
    """Return the strict shape of ``lambda + rho`` for ``lambda = sum a_i omega_i``.

    >>> shape_from_weight((0, 0, 2, 0)).parts
    (6, 5, 4, 1)
    """
    coeffs = _check_weight(coeffs, r)
    rank = len(coeffs)
    lam = partition_from_weight(coeffs)
    return Shape(tuple(lam[i] + rank - i for i in range(rank)))


def theta(shape: Shape | Sequence[int]) -> tuple[int, ...]:
    """Consecutive differences ``l_i - l_{i+1}`` with ``l_{r+1} = 0``."""
    parts = tuple(shape) + (0,)
    return tuple(parts[i] - parts[i + 1] for i in range(len(parts) - 1))


def _first_violation(rows: Sequence[Sequence[int]], max_entry: int | None) -> tuple[str, tuple[int, int]] | None:
    for i, row in enumerate(rows, start=1):
        if not row:
            return f"row {i} is empty", (i, 0)
        for j, value in enumerate(row, start=1):
            if not isinstance(value, int) or value < 1 or (max_entry is not None and value > max_entry):
                return f"entry {value!r} at ({i},{j}) is outside the alphabet 1..{max_entry}", (i, j)
            if j > 1 and value < row[j - 2]:
                return f"row {i} decreases at ({i},{j}): {row[j - 2]} > {value}", (i, j)
        if i > 1:
            above = rows[i - 2]
            if len(row) > len(above):
                return f"row {i} is longer than row {i - 1}", (i, len(above) + 1)
            for j, value in enumerate(row, start=1):
                if value <= above[j - 1]:
                    return (
                        f"column {j} does not strictly increase at ({i},{j}): {above[j - 1]} above {value}",
                        (i, j),
                    )
    return None


def is_semistandard(
    rows: Sequence[Sequence[int]],
    shape: Shape | Sequence[int] | None = None,
    max_entry: int | None = None,
) -> bool:
    """Check weak row increase, strict column increase and (optionally) the shape."""
    rows = [tuple(row) for row in rows]
    if shape is not None and tuple(len(row) for row in rows) != tuple(shape):
        return False
    return _first_violation(rows, max_entry) is None


@dataclass(frozen=True)
class Tableau:
    """An immutable semistandard tableau over ``{1, ..., max_entry}``.

    ``max_entry`` defaults to ``len(rows) + 1``, the alphabet of the crystal
    ``B(lambda + rho)`` whose shapes have exactly ``r`` rows.
    """

    rows: tuple[Row, ...]
    max_entry: int | None = None

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if self.max_entry is None:
            object.__setattr__(self, "max_entry", len(rows) + 1)
        if not rows:
            raise NotSemistandardError("a tableau needs at least one row")
        violation = _first_violation(rows, self.max_entry)
        if violation is not None:
            message, cell = violation
            raise NotSemistandardError(message, cell)

    @classmethod
    def _trusted(cls, rows: tuple[Row, ...], max_entry: int) -> "Tableau":
        # Skips validation; only for fillings produced by the enumerator.
        obj = object.__new__(cls)
        object.__setattr__(obj, "rows", rows)
        object.__setattr__(obj, "max_entry", max_entry)
        return obj

    @property
    def shape(self) -> Shape:
        return Shape(tuple(len(row) for row in self.rows), strict=False)

    @property
    def rank(self) -> int:
        """Number of rows, which is ``r`` for a tableau in ``B(lambda + rho)``."""
        return len(self.rows)

    def __getitem__(self, cell: tuple[int, int]) -> int:
        i, j = cell
        return self.rows[i - 1][j - 1]

    def content(self) -> tuple[int, ...]:
        return content(self)

    def key(self) -> str:
        """Canonical text form, e.g. ``"1,1,2/2,3"``; used as a graph node id."""
        return "/".join(",".join(str(v) for v in row) for row in self.rows)

    def to_dict(self) -> dict:
        return {"shape": [len(row) for row in self.rows], "rows": [list(row) for row in self.rows]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict, max_entry: int | None = None) -> "Tableau":
        rows = [tuple(row) for row in data["rows"]]
        if "shape" in data and list(data["shape"]) != [len(row) for row in rows]:
            raise NotSemistandardError(
                f"declared shape {list(data['shape'])} does not match row lengths {[len(r) for r in rows]}"
            )
        return cls(tuple(rows), max_entry)

    @classmethod
    def from_json(cls, text: str, max_entry: int | None = None) -> "Tableau":
        return cls.from_dict(json.loads(text), max_entry)

    @classmethod
    def from_string(cls, text: str, max_entry: int | None = None) -> "Tableau":
        """Parse ``"1 1 2 / 2 3"`` (rows separated by ``/``, entries by spaces or commas)."""
        rows = []
        for chunk in text.split("/"):
            entries = chunk.replace(",", " ").split()
            rows.append(tuple(int(v) for v in entries))
        return cls(tuple(rows), max_entry)

    def __str__(self) -> str:
        width = len(str(self.max_entry))
        return "\n".join(" ".join(str(v).rjust(width) for v in row) for row in self.rows)


def highest_weight_tableau(shape: Shape | Sequence[int], max_entry: int | None = None) -> Tableau:
    """The tableau whose ``i``-th row is filled with ``i``."""
    rows = tuple((i,) * part for i, part in enumerate(shape, start=1))
    return Tableau(rows, max_entry)


def content(tableau: Tableau) -> tuple[int, ...]:
    """Color multiplicities ``(m_1, ..., m_n)`` with ``n = tableau.max_entry``."""
    counts = [0] * tableau.max_entry
    for row in tableau.rows:
        for value in row:
            counts[value - 1] += 1
    return tuple(counts)


def enumerate_ssyt(
    shape: Shape | Sequence[int],
    max_entry: int,
    shard: tuple[int, int] | None = None,
) -> Iterator[Tableau]:
    """Yield every semistandard tableau of ``shape`` with entries in ``1..max_entry``.

    Tableaux come out in lexicographic order of their row-major fillings,
    smallest colors first.  With ``shard=(k, m)`` only the tableaux whose
    position in that order is congruent to ``k`` mod ``m`` are yielded; the
    ``m`` shards partition the full stream.
    """
    parts = tuple(shape)
    if max_entry < len(parts):
        raise ValueError(f"no semistandard filling of a {len(parts)}-row shape with entries <= {max_entry}")
    if shard is not None:
        index, count = shard
        if count < 1 or not 0 <= index < count:
            raise ValueError(f"invalid shard {shard}")
    if not parts:
        return

    heights = Shape(parts, strict=False).column_heights()
    cells = [(i, j) for i, part in enumerate(parts) for j in range(part)]
    grid = [[0] * part for part in parts]
    total = len(cells)
    position = 0

    def fill(k: int) -> Iterator[Tableau]:
        nonlocal position
        if k == total:
            if shard is None or position % shard[1] == shard[0]:
                yield Tableau._trusted(tuple(tuple(row) for row in grid), max_entry)
            position += 1
            return
        i, j = cells[k]
        low = 1
        if j > 0:
            low = grid[i][j - 1]
        if i > 0:
            low = max(low, grid[i - 1][j] + 1)
        # leave room for the strictly increasing cells below in this column
        high = max_entry - (heights[j] - i - 1)
        for value in range(low, high + 1):
            grid[i][j] = value
            yield from fill(k + 1)

    yield from fill(0)


def dimension(shape: Shape | Sequence[int], n: int) -> int:
    """Number of semistandard tableaux of ``shape`` with entries at most ``n``.

    Hook-content formula: product over cells of ``(n + content) / hook``.
    """
    parts = tuple(shape)
    heights = Shape(parts, strict=False).column_heights()
    numerator = 1
    denominator = 1
    for i, part in enumerate(parts):
        for j in range(part):
            numerator *= n + j - i
            denominator *= (part - j - 1) + (heights[j] - i - 1) + 1
    if numerator <= 0:
        return 0
    return numerator // denominator
