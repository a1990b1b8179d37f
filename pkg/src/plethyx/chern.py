"""Schur expansions of ``sbar_lambda(x_1..x_n) = s_lambda(e_1 - x_1, ..., e_1 - x_n)``.

``sbar_direct`` (substitute the roots, then expand) is the reference every other
route is checked against.  The remaining routes are closed forms:

* ``sbar_alternating``: signed sum over subshapes with hook/content weights
* ``expand_column_case``: parity tableaux, for ``lambda = (1^k)``
* ``expand_row_case``: standard tableaux of ``mu + (1^{n-1})``, for ``lambda = (k)``
* ``coeff_single_row`` / ``coeff_two_rows``: coefficients of one- and two-row ``mu``
* ``coeff_column`` / ``coeff_column_jacobi_trudi``: coefficient of ``(1^{|lambda|})``
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, factorial, prod
from typing import Iterator, Sequence

from . import linalg
from .shapes import Partition, SkewShape, add_column_strip, partitions, subpartitions
from .sympoly import SchurExpansion, SparsePoly, expand_schur, schur
from .tableaux import (
    GPair,
    Tableau,
    count_g_pairs,
    count_ssyt,
    enumerate_ssyt,
    f_skew,
    f_straight,
    g_pairs,
    parity_tableaux,
)


def binom(m: int, j: int) -> int:
    if m < 0 or j < 0 or j > m:
        return 0
    return comb(m, j)


# -- direct substitution ------------------------------------------------------

def plethysm_roots(mu: Sequence[int], n: int) -> list[tuple[int, ...]]:
    """One linear form per SSYT of shape ``mu`` over ``[n]``, as a coefficient vector."""
    return [t.weight(n) for t in enumerate_ssyt(Partition(mu), n)]


def chern_plethysm_poly(lam: Sequence[int], roots: Sequence[Sequence[int]], n: int) -> SparsePoly:
    """``s_lam`` evaluated at the given linear forms in ``x_1..x_n``."""
    lam = Partition(lam)
    if len(lam) > len(roots):
        return SparsePoly(n)
    values = [SparsePoly.linear(r) if n else SparsePoly(0) for r in roots]
    return schur(lam, len(roots)).substitute(values)


def chern_plethysm(lam: Sequence[int], mu: Sequence[int], n: int) -> SchurExpansion:
    """General Chern plethysm ``s_lam(S^mu E)`` for a rank-``n`` bundle, Schur-expanded."""
    return expand_schur(chern_plethysm_poly(lam, plethysm_roots(mu, n), n))


def sbar_roots(n: int) -> list[tuple[int, ...]]:
    return [tuple(int(j != i) for j in range(n)) for i in range(n)]


def sbar_poly(lam: Sequence[int], n: int) -> SparsePoly:
    return chern_plethysm_poly(lam, sbar_roots(n), n)


@lru_cache(maxsize=None)
def _sbar_direct(lam: Partition, n: int) -> SchurExpansion:
    return expand_schur(sbar_poly(lam, n))


def sbar_direct(lam: Sequence[int], n: int) -> SchurExpansion:
    return _sbar_direct(Partition(lam), n)


# -- alternating formula ------------------------------------------------------

def content_weight(lam: Sequence[int], nu: Sequence[int], n: int) -> int:
    """``prod over boxes (r, c) of lam/nu of (n - r + c)``."""
    nu = Partition(nu)
    return prod(n - r + c for r, c in Partition(lam).boxes() if c > nu.part(r))


def nabla_coefficient(lam: Sequence[int], nu: Sequence[int], n: int) -> int:
    """Coefficient of ``s_nu`` in ``nabla^k / k! s_lam`` (``k = |lam/nu|``); exact."""
    lam, nu = Partition(lam), Partition(nu)
    k = lam.size - nu.size
    num = f_skew(SkewShape(lam, nu)) * content_weight(lam, nu, n)
    q, r = divmod(num, factorial(k))
    if r:
        raise ArithmeticError(f"inexact division by {k}! for lam={lam}, nu={nu}, n={n}: {num}")
    return q


def _intersect(lam: Partition, mu: Partition) -> Partition:
    return Partition(min(a, b) for a, b in zip(lam, mu))


def coeff_alternating(lam: Sequence[int], mu: Sequence[int], n: int, form: str = "skew") -> int:
    """``[s_mu] sbar_lam`` by the signed sum over ``nu`` inside ``lam`` and ``mu``.

    ``form="hook"`` evaluates the same sum through hook-length and hook-content
    quantities of straight shapes only.
    """
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size or len(lam) > n or len(mu) > n:
        return 0
    if form == "skew":
        return sum(
            (-1) ** nu.size * nabla_coefficient(lam, nu, n) * f_skew(SkewShape(mu, nu))
            for nu in subpartitions(_intersect(lam, mu))
        )
    if form == "hook":
        total = Fraction(0)
        fl, sl = f_straight(lam), count_ssyt(lam, n)
        for nu in subpartitions(_intersect(lam, mu)):
            total += (
                (-1) ** nu.size
                * comb(lam.size, nu.size)
                * f_skew(SkewShape(mu, nu))
                * Fraction(f_straight(nu) * f_skew(SkewShape(lam, nu)), fl)
                * Fraction(sl, count_ssyt(nu, n))
            )
        if total.denominator != 1:
            raise ArithmeticError(f"non-integral coefficient {total} for lam={lam}, mu={mu}")
        return int(total)
    raise ValueError(f"unknown form {form!r}")


def sbar_alternating(lam: Sequence[int], n: int, form: str = "skew") -> SchurExpansion:
    lam = Partition(lam)
    if len(lam) > n:
        return SchurExpansion(n)
    return SchurExpansion(n, {mu: coeff_alternating(lam, mu, n, form) for mu in partitions(lam.size, max_len=n)})


# -- single column and single row --------------------------------------------

def expand_column_case(k: int, n: int) -> SchurExpansion:
    """``sbar_{(1^k)}`` with coefficients counting parity tableaux."""
    if k < 0 or n < 1:
        raise ValueError(f"need k >= 0 and n >= 1, got k={k}, n={n}")
    return SchurExpansion(
        n, {mu: sum(1 for _ in parity_tableaux(mu, n)) for mu in partitions(k, max_len=n)}
    )


def row_case_coeff(mu: Sequence[int], n: int) -> int:
    """``[s_mu] sbar_{(|mu|)}``: ``f^{mu + (1^{n-1})}`` when ``l(mu) < n``, else 0."""
    mu = Partition(mu)
    if len(mu) >= n and mu:
        return 0
    if n < 1:
        return 0
    return f_straight(add_column_strip(mu, n - 1))


def expand_row_case(k: int, n: int) -> SchurExpansion:
    if k < 0 or n < 1:
        raise ValueError(f"need k >= 0 and n >= 1, got k={k}, n={n}")
    return SchurExpansion(n, {mu: row_case_coeff(mu, n) for mu in partitions(k, max_len=n - 1)})


def coeff_single_row(lam: Sequence[int], n: int) -> int:
    """``[s_{(|lam|)}] sbar_lam = |SSYT(lam, [2, n])|``."""
    if n < 2:
        raise ValueError("need n >= 2")
    return count_ssyt(Partition(lam), (2, n))


# -- two rows -----------------------------------------------------------------

def monomial_two_rows(lam: Sequence[int], a: int, b: int, n: int) -> int:
    """``[x_1^a x_2^b] sbar_lam`` via skew tableau counts over ``[3, n]``."""
    lam = Partition(lam)
    if a < 0 or b < 0 or a + b != lam.size:
        return 0
    total = 0
    for size in range(a + b + 1):
        for nu in partitions(size, max_len=2):
            count = count_ssyt(SkewShape(lam, nu), (3, n))
            if count:
                total += count * sum(binom(a + b - size, a - d) for d in range(nu.part(2), nu.part(1) + 1))
    return total


def _check_two_rows(lam: Partition, a: int, b: int) -> None:
    if a < b or b < 0:
        raise ValueError(f"need a >= b >= 0, got ({a}, {b})")
    if a + b != lam.size:
        raise ValueError(f"need a + b = |lam| = {lam.size}, got {a + b}")


def two_row_pairs(lam: Sequence[int], a: int, b: int, n: int) -> Iterator[tuple[int, GPair]]:
    """Pairs ``(p, (S, T))`` with ``(S, T)`` in ``G(lam/(p,p), (a,b)/(p,p), n)`` and every
    entry 2 of ``S`` in the first row."""
    lam = Partition(lam)
    _check_two_rows(lam, a, b)
    for p in range(b + 1):
        for pair in g_pairs(SkewShape(lam, (p, p)), SkewShape((a, b), (p, p)), n):
            if all(r == 1 for (r, _), x in pair.s.items() if x == 2):
                yield p, pair


def coeff_two_rows(lam: Sequence[int], a: int, b: int, n: int, method: str = "gpairs") -> int:
    """``[s_{(a,b)}] sbar_lam``.

    ``gpairs`` counts :func:`two_row_pairs`; ``gpairs-literal`` drops the
    first-row restriction on 2's (it overcounts once ``lam`` has three rows);
    ``monomial`` takes the difference of two monomial coefficients; ``skew`` is the
    intermediate sum over ``nu`` inside ``(a, b)``.
    """
    lam = Partition(lam)
    _check_two_rows(lam, a, b)
    if method == "gpairs":
        return sum(1 for _ in two_row_pairs(lam, a, b, n))
    if method == "gpairs-literal":
        return sum(
            count_g_pairs(SkewShape(lam, (p, p)), SkewShape((a, b), (p, p)), n) for p in range(b + 1)
        )
    if method == "monomial":
        return monomial_two_rows(lam, a, b, n) - monomial_two_rows(lam, a + 1, b - 1, n)
    if method == "skew":
        return sum(
            count_ssyt(SkewShape(lam, nu), (3, n)) * f_skew(SkewShape((a, b), nu))
            for nu in subpartitions((a, b))
        )
    raise ValueError(f"unknown method {method!r}")


# -- single column --------------------------------------------------------------

def column_p_range(lam: Sequence[int], n: int) -> range:
    lam = Partition(lam)
    return range(len(lam), n - lam.part(1) + 1)


def _column_ok(t: dict, r: int, c: int, x: int, p: int, variant: str) -> bool:
    left, up = t.get((r, c - 1)), t.get((r - 1, c))
    if variant == "corrected":
        if left is not None and (left > x or left == x == p - r + c):
            return False
        if up is not None and not (up < x or up == x == p - (r - 1) + c):
            return False
        return True
    # literal reading: both conditions compare vertically adjacent boxes
    if up is not None:
        if up > x or up == x == p - (r - 1) + c:
            return False
        if not (up < x or up == x == p - r + c):
            return False
    return True


def column_fillings(lam: Sequence[int], n: int, p: int, variant: str = "corrected") -> Iterator[Tableau]:
    """Fillings of ``lam`` by ``[2, n]`` counted by the single-column coefficient formula."""
    lam = Partition(lam)
    if variant not in ("corrected", "printed"):
        raise ValueError(f"unknown variant {variant!r}")
    if p not in column_p_range(lam, n):
        raise ValueError(f"need l(lam) <= p <= n - lam_1, got p={p} for lam={lam}, n={n}")
    boxes = list(lam.boxes())
    filling: dict[tuple[int, int], int] = {}

    def rec(i: int) -> Iterator[Tableau]:
        if i == len(boxes):
            yield Tableau.from_rows([[filling[(r, c)] for c in range(1, lam[r - 1] + 1)] for r in range(1, len(lam) + 1)])
            return
        r, c = boxes[i]
        for x in range(2, n + 1):
            if _column_ok(filling, r, c, x, p, variant):
                filling[(r, c)] = x
                yield from rec(i + 1)
                del filling[(r, c)]

    yield from rec(0)


def coeff_column(lam: Sequence[int], n: int, p: int | None = None, variant: str = "corrected") -> int:
    """``[s_{(1^{|lam|})}] sbar_lam`` as a count of fillings; ``p`` defaults to ``l(lam)``."""
    lam = Partition(lam)
    if p is None:
        p = len(lam)
    return sum(1 for _ in column_fillings(lam, n, p, variant))


def coeff_column_jacobi_trudi(lam: Sequence[int], n: int) -> int:
    """Determinant of the single-row column coefficients ``[s_{(1^m)}] sbar_{(m)}``.

    Coefficient extraction only commutes with the determinant while
    ``|lam| <= n``; beyond that ``s_{(1^{|lam|})}`` vanishes in ``n`` variables.
    """
    lam = Partition(lam)
    if lam.size > n:
        return 0

    def entry(m: int) -> int:
        if m < 0:
            return 0
        return row_case_coeff((1,) * m, n)

    ell = len(lam)
    return linalg.det([[entry(lam[i] - i + j) for j in range(ell)] for i in range(ell)])


# -- Boolean product polynomials -------------------------------------------------

def boolean_product(n: int, k: int) -> SparsePoly:
    """``prod over k-subsets I of [n] of sum_{i in I} x_i``."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    out = SparsePoly.constant(n)
    for subset in combinations(range(n), k):
        out = out * SparsePoly.linear([int(i in subset) for i in range(n)])
    return out
