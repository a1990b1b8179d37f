"""Partitions, skew shapes and the shape surgeries used by the coefficient formulas.

Partitions are plain tuples of positive integers (a ``tuple`` subclass, so they
compare and hash like tuples).  Skew shapes may be *invalid*; invalid shapes are
ordinary values that every counting routine maps to zero.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence


class Partition(tuple):
    """A weakly decreasing tuple of positive integers, trailing zeros dropped."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(x) for x in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for i, x in enumerate(parts):
            if x < 0:
                raise ValueError(f"negative part in {parts}")
            if i and x > parts[i - 1]:
                raise ValueError(f"parts not weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"

    def __str__(self) -> str:
        return format_partition(self)

    def part(self, i: int) -> int:
        """1-indexed part, 0 beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def contains(self, other: Sequence[int]) -> bool:
        return len(other) <= len(self) and all(a <= b for a, b in zip(other, self))

    def boxes(self) -> Iterator[tuple[int, int]]:
        for r, length in enumerate(self, start=1):
            for c in range(1, length + 1):
                yield r, c


def is_partition(seq: Sequence[int]) -> bool:
    return all(x >= 0 for x in seq) and all(seq[i] >= seq[i + 1] for i in range(len(seq) - 1))


def parse_partition(text: str) -> Partition:
    """Parse ``"3,1"``; the empty string and ``"0"`` both give the empty partition."""
    text = text.strip()
    if text in ("", "0", "()"):
        return Partition()
    try:
        parts = [int(t) for t in text.strip("()[]").split(",") if t.strip()]
    except ValueError as exc:
        raise ValueError(f"bad partition syntax: {text!r}") from exc
    return Partition(parts)


def format_partition(p: Sequence[int]) -> str:
    return ",".join(str(x) for x in p)


def conjugate(p: Sequence[int]) -> Partition:
    if not p:
        return Partition()
    return Partition(sum(1 for x in p if x > c) for c in range(p[0]))


def partitions(k: int, max_len: Optional[int] = None, max_part: Optional[int] = None) -> Iterator[Partition]:
    """Partitions of ``k`` in reverse-lex order ((k) first)."""
    if k < 0:
        return
    max_len = k if max_len is None else max_len
    max_part = k if max_part is None else max_part

    def rec(rem: int, cap: int, slots: int, acc: list[int]) -> Iterator[Partition]:
        if rem == 0:
            yield Partition(acc)
            return
        if slots == 0:
            return
        for x in range(min(rem, cap), 0, -1):
            acc.append(x)
            yield from rec(rem - x, x, slots - 1, acc)
            acc.pop()

    yield from rec(k, max_part, max_len, [])


def subpartitions(p: Sequence[int]) -> Iterator[Partition]:
    """Every partition contained in ``p`` (including () and p itself)."""

    def rec(i: int, cap: int, acc: list[int]) -> Iterator[Partition]:
        if i == len(p):
            yield Partition(acc)
            return
        for x in range(min(cap, p[i]), -1, -1):
            acc.append(x)
            yield from rec(i + 1, x, acc)
            acc.pop()

    yield from rec(0, p[0] if p else 0, [])


def partition_sort_key(p: Sequence[int]) -> tuple:
    """Canonical order: by size, then reverse-lex ((2) before (1,1))."""
    return (sum(p), tuple(-x for x in p))


@dataclass(frozen=True)
class SkewShape:
    """``outer / inner``.  ``outer`` may be a non-partition after box removal.

    ``broken`` marks shapes whose box set is not expressible as outer/inner
    at all (a column removal that leaves a hole); such shapes are invalid.
    """

    outer: tuple[int, ...]
    inner: tuple[int, ...] = ()
    broken: bool = False

    def __post_init__(self):
        object.__setattr__(self, "outer", _strip(self.outer))
        object.__setattr__(self, "inner", _strip(self.inner))

    @classmethod
    def of(cls, outer: Sequence[int], inner: Sequence[int] = ()) -> "SkewShape":
        return cls(tuple(outer), tuple(inner))

    @property
    def valid(self) -> bool:
        if self.broken or not is_partition(self.outer) or not is_partition(self.inner):
            return False
        if len(self.inner) > len(self.outer):
            return False
        return all(a <= b for a, b in zip(self.inner, self.outer))

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def inner_part(self, r: int) -> int:
        return self.inner[r - 1] if r <= len(self.inner) else 0

    def outer_part(self, r: int) -> int:
        return self.outer[r - 1] if r <= len(self.outer) else 0

    def row_range(self, r: int) -> range:
        """Columns of row ``r`` (1-indexed) that belong to the skew shape."""
        return range(self.inner_part(r) + 1, self.outer_part(r) + 1)

    def boxes(self) -> Iterator[tuple[int, int]]:
        """Boxes in reading order: rows top to bottom, left to right."""
        for r in range(1, len(self.outer) + 1):
            for c in self.row_range(r):
                yield r, c

    def __contains__(self, box: tuple[int, int]) -> bool:
        r, c = box
        return r >= 1 and self.inner_part(r) < c <= self.outer_part(r)

    @property
    def is_straight(self) -> bool:
        return not self.inner

    def to_json(self) -> dict:
        return {"outer": list(self.outer), "inner": list(self.inner)}

    @classmethod
    def from_json(cls, data: dict) -> "SkewShape":
        return cls.of(data["outer"], data.get("inner", ()))

    def __str__(self) -> str:
        if not self.inner:
            return f"({format_partition(self.outer)})"
        return f"({format_partition(self.outer)})/({format_partition(self.inner)})"


def _strip(seq: Sequence[int]) -> tuple[int, ...]:
    seq = list(seq)
    while seq and seq[-1] == 0:
        seq.pop()
    return tuple(seq)


def as_skew(shape) -> SkewShape:
    return shape if isinstance(shape, SkewShape) else SkewShape.of(shape)


def remove_box(s: SkewShape, j: int, mode: str = "row") -> SkewShape:
    """Remove the rightmost box of row ``j`` (or lowest box of column ``j``).

    Returns ``s`` unchanged when there is no such box; the result may be invalid.
    """
    if mode == "row":
        if s.outer_part(j) <= s.inner_part(j):
            return s
        outer = list(s.outer)
        outer[j - 1] -= 1
        return SkewShape(tuple(outer), s.inner, s.broken)
    if mode != "column":
        raise ValueError(f"mode must be 'row' or 'column', not {mode!r}")
    rows = [r for r in range(1, len(s.outer) + 1) if (r, j) in s]
    if not rows:
        return s
    r = rows[-1]
    if s.outer_part(r) == j:
        outer = list(s.outer)
        outer[r - 1] -= 1
        return SkewShape(tuple(outer), s.inner, s.broken)
    # box sits in the middle of its row: the remainder has a hole
    return SkewShape(s.outer, s.inner, broken=True)


@dataclass(frozen=True)
class ShiftResult:
    shape: Optional[Partition]  # None when the column sequence is not a partition
    pivot: int
    sign: int
    columns: tuple[int, ...]

    @property
    def valid(self) -> bool:
        return self.shape is not None


def pivot_index(mu: Sequence[int], p: int) -> int:
    """Least ``i >= 1`` with ``p >= mu'_i - i``."""
    cols = conjugate(mu)
    i = 1
    while p < (cols[i - 1] if i <= len(cols) else 0) - i:
        i += 1
    return i


def mu_shift(mu: Sequence[int], p: int) -> ShiftResult:
    """The shape obtained from ``mu`` by inserting a column of length ``p + a - 1``
    at the pivot ``a`` (columns before the pivot lose one box)."""
    mu = Partition(mu)
    if p + mu.size < 0:
        raise ValueError(f"need p + |mu| >= 0, got p={p}, |mu|={mu.size}")
    cols = conjugate(mu)
    col = lambda i: cols[i - 1] if 1 <= i <= len(cols) else 0  # noqa: E731
    a = pivot_index(mu, p)
    width = max(len(cols) + 1, a)
    new_cols = []
    for i in range(1, width + 1):
        if i < a:
            new_cols.append(col(i) - 1)
        elif i == a:
            new_cols.append(p + a - 1)
        else:
            new_cols.append(col(i - 1))
    new_cols = _strip(new_cols)
    sign = -1 if a % 2 == 0 else 1
    shape = conjugate(new_cols) if is_partition(new_cols) else None
    return ShiftResult(shape, a, sign, new_cols)


def add_column_strip(mu: Sequence[int], h: int) -> Partition:
    """``mu + (1^h)``: add one box to each of the first ``h`` rows."""
    if h < 0:
        raise ValueError("h must be nonnegative")
    parts = list(mu) + [0] * max(0, h - len(mu))
    for i in range(h):
        parts[i] += 1
    return Partition(parts)
