"""Semistandard and standard Young tableaux on (skew) shapes.

Enumerators stream tableaux in reading-word lexicographic order (rows top to
bottom, each row left to right).  Counting functions use closed formulas where
they exist and memoized recursions otherwise; invalid shapes count zero.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial, prod
from typing import Iterator, Sequence, Union

from .shapes import Partition, SkewShape, add_column_strip, as_skew, remove_box

Alphabet = Union[int, tuple[int, int], range]


def _alphabet(alphabet: Alphabet) -> tuple[int, int]:
    if isinstance(alphabet, int):
        return 1, alphabet
    if isinstance(alphabet, range):
        return alphabet.start, alphabet.stop - 1
    lo, hi = alphabet
    return int(lo), int(hi)


@dataclass(frozen=True)
class Tableau:
    """A filling of ``shape``; ``rows[r-1]`` lists the entries of row ``r`` left to right."""

    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], shape=None) -> "Tableau":
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        if shape is None:
            shape = SkewShape.of([len(row) for row in rows])
        shape = as_skew(shape)
        while len(rows) > len(shape.outer) and not rows[-1]:
            rows = rows[:-1]
        rows = rows + ((),) * (len(shape.outer) - len(rows))
        for r, row in enumerate(rows, start=1):
            if len(row) != len(shape.row_range(r)):
                raise ValueError(f"row {r} has {len(row)} entries, shape {shape} needs {len(shape.row_range(r))}")
        return cls(shape, rows)

    def __getitem__(self, box: tuple[int, int]) -> int:
        r, c = box
        if (r, c) not in self.shape:
            raise KeyError(box)
        return self.rows[r - 1][c - 1 - self.shape.inner_part(r)]

    def get(self, box: tuple[int, int], default=None):
        return self[box] if box in self.shape else default

    def items(self) -> Iterator[tuple[tuple[int, int], int]]:
        for box in self.shape.boxes():
            yield box, self[box]

    def reading_word(self) -> tuple[int, ...]:
        return tuple(x for row in self.rows for x in row)

    def column(self, c: int) -> list[int]:
        return [self[(r, c)] for r in range(1, len(self.shape.outer) + 1) if (r, c) in self.shape]

    def weight(self, n: int) -> tuple[int, ...]:
        wt = [0] * n
        for x in self.reading_word():
            wt[x - 1] += 1
        return tuple(wt)

    def is_semistandard(self) -> bool:
        for (r, c), x in self.items():
            if x < 1:
                return False
            left = self.get((r, c - 1))
            if left is not None and left > x:
                return False
            up = self.get((r - 1, c))
            if up is not None and up >= x:
                return False
        return True

    def is_standard(self) -> bool:
        word = self.reading_word()
        if len(set(word)) != len(word) or not self.is_semistandard():
            return False
        return all(self.get((r, c - 1), 0) < x for (r, c), x in self.items())

    def to_json(self):
        rows = [list(row) for row in self.rows]
        if self.shape.is_straight:
            return rows
        return {"shape": self.shape.to_json(), "rows": rows}

    @classmethod
    def from_json(cls, data) -> "Tableau":
        if isinstance(data, dict):
            return cls.from_rows(data["rows"], SkewShape.from_json(data["shape"]))
        return cls.from_rows(data)

    def __str__(self) -> str:
        return "/".join(" ".join(map(str, row)) for row in self.rows)


def _column_below(shape: SkewShape) -> dict[tuple[int, int], int]:
    """For every box, how many boxes of the shape lie directly below it."""
    below = {}
    for r in range(len(shape.outer), 0, -1):
        for c in shape.row_range(r):
            below[(r, c)] = below.get((r + 1, c), -1) + 1
    return below


def enumerate_ssyt(shape, alphabet: Alphabet) -> Iterator[Tableau]:
    shape = as_skew(shape)
    if not shape.valid:
        return
    lo, hi = _alphabet(alphabet)
    boxes = list(shape.boxes())
    below = _column_below(shape)
    filling: dict[tuple[int, int], int] = {}

    def rec(i: int) -> Iterator[Tableau]:
        if i == len(boxes):
            yield _build(shape, filling)
            return
        r, c = boxes[i]
        low = lo
        if (r, c - 1) in filling:
            low = max(low, filling[(r, c - 1)])
        if (r - 1, c) in filling:
            low = max(low, filling[(r - 1, c)] + 1)
        for x in range(low, hi - below[(r, c)] + 1):
            filling[(r, c)] = x
            yield from rec(i + 1)
        filling.pop((r, c), None)

    yield from rec(0)


def enumerate_syt(shape, n: int) -> Iterator[Tableau]:
    """Standard fillings with distinct labels drawn from ``[n]`` (not necessarily all used)."""
    shape = as_skew(shape)
    if not shape.valid or shape.size > n:
        return
    boxes = list(shape.boxes())
    below = _column_below(shape)
    filling: dict[tuple[int, int], int] = {}
    used: set[int] = set()

    def rec(i: int) -> Iterator[Tableau]:
        if i == len(boxes):
            yield _build(shape, filling)
            return
        r, c = boxes[i]
        low = 1
        if (r, c - 1) in filling:
            low = max(low, filling[(r, c - 1)] + 1)
        if (r - 1, c) in filling:
            low = max(low, filling[(r - 1, c)] + 1)
        for x in range(low, n - below[(r, c)] + 1):
            if x in used:
                continue
            filling[(r, c)] = x
            used.add(x)
            yield from rec(i + 1)
            used.discard(x)
        filling.pop((r, c), None)

    yield from rec(0)


def _build(shape: SkewShape, filling: dict) -> Tableau:
    rows = tuple(tuple(filling[(r, c)] for c in shape.row_range(r)) for r in range(1, len(shape.outer) + 1))
    return Tableau(shape, rows)


# -- counting -----------------------------------------------------------------

def hook_lengths(lam: Sequence[int]) -> list[int]:
    lam = Partition(lam)
    cols = lam.conjugate()
    return [lam[r - 1] - c + cols[c - 1] - r + 1 for r, c in lam.boxes()]


def f_straight(lam: Sequence[int]) -> int:
    """Number of standard tableaux of shape ``lam`` (hook length formula)."""
    lam = Partition(lam)
    return factorial(lam.size) // prod(hook_lengths(lam))


@lru_cache(maxsize=None)
def _f_skew(outer: tuple[int, ...], inner: tuple[int, ...]) -> int:
    shape = SkewShape(outer, inner)
    if not shape.valid:
        return 0
    if shape.size == 0:
        return 1
    if not inner:
        return f_straight(outer)
    return sum(
        _f_skew(s.outer, s.inner)
        for j in range(1, len(outer) + 1)
        if (s := remove_box(shape, j, "row")) is not shape
    )


def f_skew(shape) -> int:
    """``f^{lambda/mu}``: standard fillings with labels exactly ``1..size``."""
    shape = as_skew(shape)
    if shape.broken:
        return 0
    return _f_skew(shape.outer, shape.inner)


def count_syt(shape, n: int | None = None) -> int:
    """``|SYT(shape, n)|``; ``n`` defaults to the number of boxes."""
    shape = as_skew(shape)
    if not shape.valid:
        return 0
    m = shape.size
    n = m if n is None else n
    if n < m:
        return 0
    return comb(n, m) * f_skew(shape)


def hook_content_count(lam: Sequence[int], n: int) -> int:
    """``|SSYT(lam, [n])|`` by the hook content formula."""
    lam = Partition(lam)
    if n < 0:
        return 1 if not lam else 0
    num = prod(n + c - r for r, c in lam.boxes())
    den = prod(hook_lengths(lam))
    q, rem = divmod(num, den)
    assert rem == 0, (lam, n)
    return q


@lru_cache(maxsize=None)
def _ssyt_strips(outer: tuple[int, ...], inner: tuple[int, ...], letters: int) -> int:
    if outer == inner:
        return 1
    if letters <= 0:
        return 0
    # peel off the horizontal strip holding the smallest letter
    total = 0
    rows = len(outer)
    inner_l = list(inner) + [0] * (rows - len(inner))

    def rec(i: int, acc: list[int]):
        nonlocal total
        if i == rows:
            nu = tuple(acc)
            while nu and nu[-1] == 0:
                nu = nu[:-1]
            total += _ssyt_strips(outer, nu, letters - 1)
            return
        cap = outer[i] if i == 0 else min(outer[i], inner_l[i - 1])
        for x in range(inner_l[i], cap + 1):
            acc.append(x)
            rec(i + 1, acc)
            acc.pop()

    rec(0, [])
    return total


def count_ssyt(shape, alphabet: Alphabet) -> int:
    shape = as_skew(shape)
    if not shape.valid:
        return 0
    lo, hi = _alphabet(alphabet)
    letters = hi - lo + 1
    if shape.size == 0:
        return 1
    if letters <= 0:
        return 0
    if shape.is_straight:
        return hook_content_count(shape.outer, letters)
    return _ssyt_strips(shape.outer, shape.inner, letters)


# -- parity tableaux ----------------------------------------------------------

def smallest_absent_from_first_column(t: Tableau, n: int) -> int:
    """Smallest label of ``[n]`` missing from column 1, or ``n + 1`` if none is missing."""
    first = set(t.column(1))
    return next((x for x in range(1, n + 1) if x not in first), n + 1)


def is_parity_tableau(t: Tableau, n: int) -> bool:
    return smallest_absent_from_first_column(t, n) % 2 == 1


def parity_tableaux(mu: Sequence[int], n: int) -> Iterator[Tableau]:
    for t in enumerate_syt(Partition(mu), n):
        if is_parity_tableau(t, n):
            yield t


# -- G-pairs ------------------------------------------------------------------

@dataclass(frozen=True)
class GPair:
    s: Tableau
    t: Tableau


def ordered_entries(s: Tableau) -> list[tuple[int, int, int]]:
    """Entries of ``s`` smallest first; ties go lower row last, then right column last."""
    return sorted((x, r, c) for (r, c), x in s.items())


def g_condition(s: Tableau, t: Tableau) -> bool:
    """If ``i`` sits in row ``r`` of ``t`` then the i-th smallest entry of ``s`` exceeds ``r``."""
    values = [x for x, _, _ in ordered_entries(s)]
    return all(values[i - 1] > r for (r, _), i in t.items())


def g_pairs(lam, mu, n: int) -> Iterator[GPair]:
    lam, mu = as_skew(lam), as_skew(mu)
    if lam.size != mu.size:
        raise ValueError(f"size mismatch: |{lam}| = {lam.size}, |{mu}| = {mu.size}")
    if not (lam.valid and mu.valid):
        return
    ts = [(t, [(i, r) for (r, _), i in t.items()]) for t in enumerate_syt(mu, mu.size)]
    for s in enumerate_ssyt(lam, n):
        values = [x for x, _, _ in ordered_entries(s)]
        for t, req in ts:
            if all(values[i - 1] > r for i, r in req):
                yield GPair(s, t)


def count_g_pairs(lam, mu, n: int) -> int:
    return sum(1 for _ in g_pairs(lam, mu, n))


def _standardize(values: Sequence[int]) -> dict[int, int]:
    return {v: i for i, v in enumerate(sorted(values), start=1)}


def rowcase_bijection(t: Tableau, n: int) -> GPair:
    """Send a standard tableau of shape ``mu + (1^{n-1})`` to a pair in ``G((k), mu, n)``.

    The gaps between consecutive first-column labels give the multiplicities of
    ``2..n`` in the one-row tableau; the rest of ``t``, standardized, is the
    second component.
    """
    shape = t.shape
    if n < 2 or not shape.is_straight or len(shape.outer) != n - 1 or not t.is_standard():
        raise ValueError(f"expected a standard tableau of shape mu + (1^{n - 1})")
    if sorted(t.reading_word()) != list(range(1, shape.size + 1)):
        raise ValueError("labels must be exactly 1..size")
    mu = Partition(x - 1 for x in shape.outer)
    k = mu.size
    a = t.column(1) + [n + k]
    row = []
    for i in range(2, n + 1):
        row += [i] * (a[i - 1] - a[i - 2] - 1)
    rest = [list(r[1:]) for r in t.rows]
    std = _standardize([x for r in rest for x in r])
    t_rows = [[std[x] for x in r] for r in rest[: len(mu)]]
    return GPair(Tableau.from_rows([row]), Tableau.from_rows(t_rows, mu))


def rowcase_inverse(pair: GPair, n: int) -> Tableau:
    mu = Partition(pair.t.shape.outer)
    k = mu.size
    if pair.s.shape.outer != (k,) and k:
        raise ValueError("first component must be a one-row tableau")
    if len(mu) >= n:
        raise ValueError("need l(mu) < n")
    counts = pair.s.weight(n) if k else (0,) * n
    a = [1]
    for i in range(2, n):
        a.append(a[-1] + 1 + counts[i - 1])
    rest = [x for x in range(1, n + k) if x not in set(a)]
    rows = []
    for r in range(1, n):
        tail = [rest[x - 1] for x in (pair.t.rows[r - 1] if r <= len(mu) else ())]
        rows.append([a[r - 1]] + tail)
    return Tableau.from_rows(rows)


def _check_rowcolumn_source(s: Tableau, p: int, n: int) -> tuple[int, ...]:
    if len(s.shape.outer) != 1 or not s.shape.is_straight or not s.is_semistandard():
        raise ValueError("expected a one-row semistandard tableau")
    row = s.rows[0]
    k = len(row)
    if not 1 <= p <= n - k + 1:
        raise ValueError(f"need 1 <= p <= n - k + 1, got p={p}")
    if row[0] <= 1 or row[-1] > n:
        raise ValueError("entries must lie in [2, n]")
    for i in range(1, k):
        if row[i - 1] == row[i] == p + i:
            raise ValueError(f"forbidden adjacent pair ({p + i}, {p + i}) at position {i}")
    return row


def _reflect(row: Sequence[int], p: int) -> tuple[int, ...]:
    low = [i for i in range(1, len(row) + 1) if row[i - 1] <= p + i - 1]
    if not low:
        return tuple(row)
    a = max(low)
    head = [p + a + 1 - row[a - i] for i in range(1, a + 1)]
    return tuple(head) + tuple(row[a:])


def rowcolumn_bijection(s: Tableau, p: int, n: int) -> GPair:
    """Map a one-row tableau avoiding ``(p+i, p+i)`` adjacencies into ``G((k), (1^k), n)``."""
    row = _check_rowcolumn_source(s, p, n)
    k = len(row)
    column = Tableau.from_rows([[i] for i in range(1, k + 1)])
    return GPair(Tableau.from_rows([_reflect(row, p)]), column)


def rowcolumn_inverse(pair: GPair, p: int, n: int) -> Tableau:
    row = pair.s.rows[0]
    k = len(row)
    if not g_condition(pair.s, pair.t) or pair.t.shape.outer != (1,) * k:
        raise ValueError("not an element of G((k), (1^k), n)")
    if not 1 <= p <= n - k + 1:
        raise ValueError(f"need 1 <= p <= n - k + 1, got p={p}")
    return Tableau.from_rows([_reflect(row, p)])


def rowcolumn_sources(k: int, p: int, n: int) -> Iterator[Tableau]:
    """One-row tableaux over ``[2, n]`` with no adjacent pair equal to ``(p+i, p+i)``."""
    for s in enumerate_ssyt((k,), (2, n)):
        row = s.rows[0] if k else ()
        if all(not (row[i - 1] == row[i] == p + i) for i in range(1, k)):
            yield s


def row_strip_shape(mu: Sequence[int], n: int) -> Partition:
    return add_column_strip(mu, n - 1)
