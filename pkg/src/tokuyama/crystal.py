"""
Kashiwara operators on tableaux and crystal graph export.

The operators act through the row reading word, read bottom row first and
each row left to right.  For ``f_i``/``e_i`` the letters ``i+1`` and ``i`` of
the word are bracketed like ``(`` and ``)``; what survives has the form
``i^a (i+1)^b``.  ``f_i`` turns the rightmost unbracketed ``i`` into
``i+1`` and ``e_i`` turns the leftmost unbracketed ``i+1`` into ``i``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .statistics import coefficient, flush_count, is_gapless, seg
from .tableaux import Shape, Tableau, content, dimension, enumerate_ssyt

DEFAULT_CAP = 10**6


class CapExceeded(RuntimeError):
    """The requested crystal is larger than the configured size cap."""

    def __init__(self, size: int, cap: int) -> None:
        super().__init__(f"crystal has {size} elements, cap is {cap}; raise the cap to at least {size}")
        self.size = size
        self.cap = cap


def _check_index(tableau: Tableau, i: int) -> None:
    if not 1 <= i < tableau.max_entry:
        raise ValueError(f"crystal index {i} out of range 1..{tableau.max_entry - 1}")


def _unbracketed(tableau: Tableau, i: int) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    """Cells holding unbracketed ``i`` and ``i+1`` letters, in reading order."""
    free_i: list[tuple[int, int]] = []
    open_upper: list[tuple[int, int]] = []
    for r in range(len(tableau.rows) - 1, -1, -1):
        for c, value in enumerate(tableau.rows[r]):
            if value == i + 1:
                open_upper.append((r, c))
            elif value == i:
                if open_upper:
                    open_upper.pop()
                else:
                    free_i.append((r, c))
    return free_i, open_upper


def _replace(tableau: Tableau, cell: tuple[int, int], value: int) -> Tableau:
    r, c = cell
    rows = [list(row) for row in tableau.rows]
    rows[r][c] = value
    return Tableau(tuple(tuple(row) for row in rows), tableau.max_entry)


def f(tableau: Tableau, i: int) -> Tableau | None:
    """Lowering operator; ``None`` when ``phi_i`` is zero."""
    _check_index(tableau, i)
    free_i, _ = _unbracketed(tableau, i)
    if not free_i:
        return None
    return _replace(tableau, free_i[-1], i + 1)


def e(tableau: Tableau, i: int) -> Tableau | None:
    """Raising operator; ``None`` when ``epsilon_i`` is zero."""
    _check_index(tableau, i)
    _, free_upper = _unbracketed(tableau, i)
    if not free_upper:
        return None
    return _replace(tableau, free_upper[0], i)


def epsilon_phi(tableau: Tableau, i: int) -> tuple[int, int]:
    """``(epsilon_i, phi_i)`` by repeated application of ``e_i`` and ``f_i``."""
    eps = 0
    current = e(tableau, i)
    while current is not None:
        eps += 1
        current = e(current, i)
    phi = 0
    current = f(tableau, i)
    while current is not None:
        phi += 1
        current = f(current, i)
    return eps, phi


def to_highest_weight(tableau: Tableau) -> tuple[Tableau, tuple[int, ...]]:
    """Apply raising operators until none applies; return the end point and path."""
    path = []
    current = tableau
    while True:
        for i in range(1, current.max_entry):
            raised = e(current, i)
            if raised is not None:
                current = raised
                path.append(i)
                break
        else:
            return current, tuple(path)


@dataclass(frozen=True)
class CrystalEdge:
    source: Tableau
    target: Tableau
    index: int


@dataclass
class CrystalGraph:
    """Snapshot of a crystal: nodes in enumeration order and ``f_i`` edges."""

    shape: tuple[int, ...]
    rank: int
    nodes: list[Tableau]
    edges: list[CrystalEdge]

    def annotations(self, tableau: Tableau) -> dict:
        data: dict = {"content": list(content(tableau))}
        if _carries_statistics(self.shape, self.rank):
            data.update(
                seg=seg(tableau),
                flush=flush_count(tableau),
                gapless=is_gapless(tableau),
                coefficient=list(coefficient(tableau).coeffs),
            )
        return data

    def to_dict(self) -> dict:
        return {
            "shape": list(self.shape),
            "rank": self.rank,
            "nodes": [
                {"id": node.key(), "rows": [list(row) for row in node.rows], **self.annotations(node)}
                for node in self.nodes
            ],
            "edges": [{"source": a.source.key(), "target": a.target.key(), "index": a.index} for a in self.edges],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_dot(self) -> str:
        lines = ["digraph crystal {", "\trankdir=TB;", "\tnode [shape=box, fontname=monospace];"]
        for node in self.nodes:
            info = self.annotations(node)
            label = "\\n".join(" ".join(str(v) for v in row) for row in node.rows)
            if "seg" in info:
                label += f"\\nseg={info['seg']} flush={info['flush']}"
                style = "" if info["gapless"] else ", style=dashed"
            else:
                style = ""
            lines.append(f'\t"{node.key()}" [label="{label}"{style}];')
        for edge in self.edges:
            lines.append(f'\t"{edge.source.key()}" -> "{edge.target.key()}" [label="{edge.index}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _carries_statistics(shape: Sequence[int], r: int) -> bool:
    parts = tuple(shape)
    return len(parts) == r and all(b < a for a, b in zip(parts, parts[1:]))


def crystal_graph(shape: Shape | Sequence[int], r: int, cap: int = DEFAULT_CAP) -> CrystalGraph:
    """All tableaux of ``shape`` over ``1..r+1`` with their ``f_i`` edges.

    Tableaux of a strict ``r``-row shape are annotated with their segment
    statistics.  Raises :class:`CapExceeded` before enumerating anything if
    the crystal has more than ``cap`` elements.
    """
    parts = tuple(shape)
    size = dimension(parts, r + 1)
    if size > cap:
        raise CapExceeded(size, cap)
    nodes = list(enumerate_ssyt(parts, r + 1))
    edges = []
    for node in nodes:
        for i in range(1, r + 1):
            target = f(node, i)
            if target is not None:
                edges.append(CrystalEdge(node, target, i))
    return CrystalGraph(parts, r, nodes, edges)


def export_graph(shape: Shape | Sequence[int], r: int, fmt: str = "dot", cap: int = DEFAULT_CAP) -> str:
    graph = crystal_graph(shape, r, cap=cap)
    if fmt == "dot":
        return graph.to_dot()
    if fmt == "json":
        return graph.to_json() + "\n"
    raise ValueError(f"unknown graph format {fmt!r}; expected 'dot' or 'json'")
