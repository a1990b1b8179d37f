"""Exact integer/rational linear algebra on small sparse matrices.

No floating point anywhere.  Sparse vectors are ``dict[int, int]`` keyed by
coordinate index; matrices are lists of such vectors.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence

SparseVec = dict[int, int]


def det(matrix: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free determinant."""
    m = [list(map(int, row)) for row in matrix]
    n = len(m)
    if n == 0:
        return 1
    if any(len(row) != n for row in m):
        raise ValueError("determinant of a non-square matrix")
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                q, r = divmod(num, prev)
                assert r == 0
                m[i][j] = q
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _primitive(v: SparseVec) -> SparseVec:
    g = 0
    for x in v.values():
        g = gcd(g, x)
        if g == 1:
            return v
    if g > 1:
        return {i: x // g for i, x in v.items()}
    return v


def echelon(vectors: Iterable[Mapping[int, int]]) -> dict[int, SparseVec]:
    """Integer echelon basis of the span, keyed by leading (smallest) coordinate.

    Elimination is fraction-free: ``v <- a*v - b*w`` followed by removal of the
    content, so entries stay integral and small for 0/+-1 inputs.
    """
    pivots: dict[int, SparseVec] = {}
    for vec in vectors:
        v = {i: x for i, x in vec.items() if x}
        while v:
            lead = min(v)
            w = pivots.get(lead)
            if w is None:
                pivots[lead] = _primitive(v)
                break
            a, b = w[lead], v[lead]
            if a in (1, -1):
                f = b * a
                for i, x in w.items():
                    y = v.get(i, 0) - f * x
                    if y:
                        v[i] = y
                    else:
                        v.pop(i, None)
            else:
                g = gcd(a, b)
                a, b = a // g, b // g
                new = {i: a * x for i, x in v.items()}
                for i, x in w.items():
                    y = new.get(i, 0) - b * x
                    if y:
                        new[i] = y
                    else:
                        new.pop(i, None)
                v = _primitive(new)
    return pivots


def rank(vectors: Iterable[Mapping[int, int]]) -> int:
    return len(echelon(vectors))


def rref_rows(rows: Sequence[Mapping[int, int]]) -> list[tuple[int, dict[int, Fraction]]]:
    """Reduced row echelon form over Q; returns ``(pivot_column, row)`` pairs."""
    reduced: list[tuple[int, dict[int, Fraction]]] = []
    for row in rows:
        v = {j: Fraction(x) for j, x in row.items() if x}
        for piv, r in reduced:
            c = v.get(piv)
            if c:
                for j, x in r.items():
                    y = v.get(j, 0) - c * x
                    if y:
                        v[j] = y
                    else:
                        v.pop(j, None)
        if not v:
            continue
        piv = min(v)
        inv = 1 / v[piv]
        v = {j: x * inv for j, x in v.items()}
        for k, (p2, r) in enumerate(reduced):
            c = r.get(piv)
            if c:
                for j, x in v.items():
                    y = r.get(j, 0) - c * x
                    if y:
                        r[j] = y
                    else:
                        r.pop(j, None)
        reduced.append((piv, v))
    return reduced


def nullspace(rows: Sequence[Mapping[int, int]], ncols: int) -> dict[int, dict[int, Fraction]]:
    """Kernel basis in free-variable form: ``{free_col: vector}`` with
    ``vector[free_col] == 1`` and zero at every other free column."""
    reduced = rref_rows(rows)
    pivot_cols = {piv for piv, _ in reduced}
    basis = {}
    for f in range(ncols):
        if f in pivot_cols:
            continue
        v = {f: Fraction(1)}
        for piv, r in reduced:
            c = r.get(f)
            if c:
                v[piv] = -c
        basis[f] = v
    return basis


def transpose(columns: Sequence[Mapping[int, int]]) -> list[SparseVec]:
    rows: dict[int, SparseVec] = {}
    for j, col in enumerate(columns):
        for i, x in col.items():
            rows.setdefault(i, {})[j] = x
    if not rows:
        return []
    return [rows.get(i, {}) for i in range(max(rows) + 1)]


DEFAULT_PRIME = 2_147_483_647


def rank_mod_p(vectors: Iterable[Mapping[int, int]], p: int = DEFAULT_PRIME) -> int:
    """Rank over ``GF(p)``; a lower bound for the rank over ``Q``."""
    pivots: dict[int, dict[int, int]] = {}
    for vec in vectors:
        v = {i: x % p for i, x in vec.items() if x % p}
        while v:
            lead = min(v)
            w = pivots.get(lead)
            if w is None:
                inv = pow(v[lead], -1, p)
                pivots[lead] = {i: x * inv % p for i, x in v.items()}
                break
            f = v[lead]
            for i, x in w.items():
                y = (v.get(i, 0) - f * x) % p
                if y:
                    v[i] = y
                else:
                    v.pop(i, None)
    return len(pivots)
