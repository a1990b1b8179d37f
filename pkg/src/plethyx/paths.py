"""Lattice paths on ``[n] x [n]`` and the non-intersecting path model for the
coefficient of a single column.

Two graphs are provided.

``printed``
    Vertical edges everywhere, diagonal edges ``(x,x) -> (x+1,x+1)`` for ``x > 1``
    and horizontal edges ``(x,y) -> (x+1,y)`` for ``y != 1``, ``x != y``.  It admits a
    horizontal step into a diagonal vertex followed by a diagonal step, so it
    overcounts; kept only to exhibit the discrepancy.

``split``
    Vertical edges everywhere and horizontal edges out of every row ``y != 1``.
    Each diagonal vertex ``(x,x)`` is split in two: a copy reached vertically
    (which may leave vertically or horizontally) and a copy reached horizontally
    (which may only leave vertically).  A path from ``(q,1)`` to ``(q+k,n)`` then
    corresponds to a weakly increasing sequence of step heights in ``[2, n]``
    with no adjacent pair equal to ``(q+i, q+i)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterator, Sequence

from . import linalg
from .shapes import Partition
from .tableaux import Tableau

Vertex = tuple[int, int, str]  # (x, y, copy) with copy in {"", "v", "h"}

VARIANTS = ("split", "printed")


@dataclass(frozen=True)
class PathGraph:
    n: int
    variant: str = "split"

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")
        if self.n < 1:
            raise ValueError("n must be positive")

    def _vertex(self, x: int, y: int, arrival: str) -> Vertex:
        if self.variant == "split" and x == y:
            return (x, y, arrival)
        return (x, y, "")

    def source(self, a: int) -> Vertex:
        return self._vertex(a, 1, "v")

    def is_sink(self, v: Vertex, b: int) -> bool:
        return v[0] == b and v[1] == self.n

    def successors(self, v: Vertex) -> list[Vertex]:
        x, y, copy = v
        n = self.n
        out = []
        if y < n:
            out.append(self._vertex(x, y + 1, "v"))
        if x < n:
            if self.variant == "printed":
                if x == y and x > 1:
                    out.append((x + 1, x + 1, ""))
                elif y != 1 and x != y:
                    out.append((x + 1, y, ""))
            elif y != 1 and copy != "h":
                out.append(self._vertex(x + 1, y, "h"))
        return out

    def vertices(self) -> list[Vertex]:
        out = []
        for x in range(1, self.n + 1):
            for y in range(1, self.n + 1):
                if self.variant == "split" and x == y:
                    out += [(x, y, "v"), (x, y, "h")]
                else:
                    out.append((x, y, ""))
        return out

    def edges(self) -> list[tuple[Vertex, Vertex]]:
        return [(v, w) for v in self.vertices() for w in self.successors(v)]

    def to_dot(self) -> str:
        def name(v: Vertex) -> str:
            return f'"{v[0]},{v[1]}{v[2]}"'

        lines = [f"digraph {self.variant}_{self.n} {{"]
        for v in self.vertices():
            lines.append(f'  {name(v)} [pos="{v[0]},{v[1]}!"];')
        for v, w in self.edges():
            lines.append(f"  {name(v)} -> {name(w)};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def count_paths(g: PathGraph, a: int, b: int) -> int:
    """Number of directed paths from ``(a, 1)`` to ``(b, n)``."""
    if not (1 <= a <= g.n and 1 <= b <= g.n) or b < a:
        return 0

    @lru_cache(maxsize=None)
    def count(v: Vertex) -> int:
        if v[0] > b:
            return 0
        total = 1 if g.is_sink(v, b) else 0
        return total + sum(count(w) for w in g.successors(v))

    return count(g.source(a))


def all_paths(g: PathGraph, a: int, b: int) -> Iterator[tuple[Vertex, ...]]:
    if not (1 <= a <= g.n and 1 <= b <= g.n) or b < a:
        return
    path = [g.source(a)]

    def rec() -> Iterator[tuple[Vertex, ...]]:
        v = path[-1]
        if g.is_sink(v, b):
            yield tuple(path)
            return
        for w in g.successors(v):
            if w[0] <= b:
                path.append(w)
                yield from rec()
                path.pop()

    yield from rec()


def step_heights(path: Sequence[Vertex]) -> list[int]:
    """Heights at which the non-vertical steps of ``path`` start."""
    return [v[1] for v, w in zip(path, path[1:]) if w[0] != v[0]]


def count_sequences(p: int, k: int, n: int) -> int:
    """Weakly increasing ``1 < c_1 <= ... <= c_k <= n`` with ``(c_i, c_{i+1}) != (p+i, p+i)``."""
    if k < 0:
        return 0
    return sum(
        1
        for c in combinations_with_replacement(range(2, n + 1), k)
        if all(not (c[i - 1] == c[i] == p + i) for i in range(1, k))
    )


def _check_p(lam: Partition, p: int, n: int) -> None:
    if not len(lam) <= p <= n - lam.part(1):
        raise ValueError(f"need l(lam) <= p <= n - lam_1, got p={p} for lam={lam}, n={n}")


def endpoints(lam: Partition, p: int) -> list[tuple[int, int]]:
    """``(source column, sink column)`` of the path for each row of ``lam``."""
    return [(p + 1 - r, p + 1 + lam[r - 1] - r) for r in range(1, len(lam) + 1)]


def path_matrix(lam: Sequence[int], p: int, n: int, variant: str = "split") -> list[list[int]]:
    lam = Partition(lam)
    _check_p(lam, p, n)
    g = PathGraph(n, variant)
    ell = len(lam)
    return [
        [count_paths(g, p + 1 - j, p + 1 + lam[i - 1] - i) for j in range(1, ell + 1)]
        for i in range(1, ell + 1)
    ]


def lgv_determinant(lam: Sequence[int], p: int, n: int, variant: str = "split") -> int:
    return linalg.det(path_matrix(lam, p, n, variant))


@dataclass(frozen=True)
class PathTuple:
    lam: Partition
    p: int
    paths: tuple[tuple[Vertex, ...], ...]

    def to_filling(self) -> Tableau:
        """Row ``r`` lists the start heights of the non-vertical steps of path ``r``."""
        return Tableau.from_rows([step_heights(path) for path in self.paths], self.lam)


def nonintersecting_tuples(lam: Sequence[int], p: int, n: int) -> Iterator[PathTuple]:
    """Vertex-disjoint path tuples in the split graph, row ``r`` joined to its own sink."""
    lam = Partition(lam)
    _check_p(lam, p, n)
    g = PathGraph(n, "split")
    candidates = [list(all_paths(g, a, b)) for a, b in endpoints(lam, p)]
    chosen: list[tuple[Vertex, ...]] = []
    used: set[Vertex] = set()

    def rec(r: int) -> Iterator[PathTuple]:
        if r == len(lam):
            yield PathTuple(lam, p, tuple(chosen))
            return
        for path in candidates[r]:
            if used.isdisjoint(path):
                chosen.append(path)
                used.update(path)
                yield from rec(r + 1)
                used.difference_update(path)
                chosen.pop()

    yield from rec(0)


def to_filling(t: PathTuple) -> Tableau:
    return t.to_filling()


def _steps(path: Sequence[Vertex]) -> list[tuple[Vertex, Vertex]]:
    return [(v, w) for v, w in zip(path, path[1:]) if w[0] != v[0]]


def crosses_by_heights(left: Sequence[Vertex], right: Sequence[Vertex]) -> bool:
    """Intersection test for adjacent paths from the step geometry alone.

    ``left`` starts one column to the left of ``right``.  They meet iff for some
    ``c`` the c-th step of ``left`` ends weakly below where the c-th step of
    ``right`` starts, except on the diagonal, where the two paths occupy
    different copies of the vertex.
    """
    ls, rs = _steps(left), _steps(right)
    for (_, end), (start, _) in zip(ls, rs):
        if end[1] < start[1] or (end[1] == start[1] and end[0] != end[1]):
            return True
    return False


def tuple_nonintersecting_by_heights(paths: Sequence[Sequence[Vertex]]) -> bool:
    return not any(crosses_by_heights(paths[r], paths[r - 1]) for r in range(1, len(paths)))
