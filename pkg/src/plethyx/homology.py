"""Chain complexes of injective words with multiplicities.

In degree ``i`` the basis is all pairs ``(w, S)`` with ``w`` an injective word of
length ``i`` over ``A`` and ``S`` a length-``i`` sequence from ``M`` which is
weakly increasing (``column`` kind) or strictly increasing (``row`` kind).  The
boundary deletes the ``l``-th letter of both with sign ``(-1)^(l-1)``.

``S_k`` (``k = |A|``) permutes the letters of ``w``; on the column complex the
action is twisted by the sign character.  The top homology of the column complex
on ``([k], [n-k+1])`` has Frobenius characteristic ``c_{n,k}``, the Schur
expansion of ``sbar_{(1^k)}``.  For the row complex on ``([k], [n+k-1])`` the
analogous statement needs lower homology to vanish, which is only conjectured
(for ``|M| >= 2|A| - 1``); :func:`check_vanishing` gathers evidence.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, permutations
from math import comb, factorial
from typing import NamedTuple, Sequence

from . import linalg
from .shapes import Partition, format_partition, partitions
from .sympoly import SchurExpansion, SparsePoly, complete, elementary, expand_schur, power_sum

KINDS = ("column", "row")
DEFAULT_GUARD = 5000
DIRECT_GUARD = 2000


class GuardExceeded(ValueError):
    pass


class LowerHomologyError(ArithmeticError):
    """Raised when a computation needs homology concentrated in top degree and it is not."""


def guard_limit() -> int:
    """Largest chain-group dimension we agree to build; ``PLETHYX_GUARD`` overrides."""
    raw = os.environ.get("PLETHYX_GUARD")
    if raw is None:
        return DEFAULT_GUARD
    value = int(raw)
    if value <= 0:
        raise ValueError("PLETHYX_GUARD must be positive")
    return value


class BasisElement(NamedTuple):
    word: tuple[int, ...]
    seq: tuple[int, ...]


@dataclass(frozen=True)
class CycleType:
    rho: Partition

    @property
    def k(self) -> int:
        return self.rho.size

    @property
    def z(self) -> int:
        return z_rho(self.rho)

    @property
    def sign(self) -> int:
        return (-1) ** (self.k - len(self.rho))

    def fixed_points(self) -> int:
        return sum(1 for r in self.rho if r == 1)

    def representative(self, letters: Sequence[int]) -> dict[int, int]:
        """A permutation of ``letters`` (sorted) of this cycle type, cycles on consecutive letters."""
        letters = sorted(letters)
        if len(letters) != self.k:
            raise ValueError(f"cycle type {self.rho} does not act on {len(letters)} letters")
        sigma, start = {}, 0
        for r in self.rho:
            cyc = letters[start:start + r]
            for j, x in enumerate(cyc):
                sigma[x] = cyc[(j + 1) % r]
            start += r
        return sigma


def z_rho(rho: Sequence[int]) -> int:
    """Size of the centralizer of a permutation of cycle type ``rho``."""
    out = 1
    for r in set(rho):
        m = sum(1 for x in rho if x == r)
        out *= r ** m * factorial(m)
    return out


def cycle_types(k: int) -> list[CycleType]:
    return [CycleType(rho) for rho in partitions(k)]


def _sequences(kind: str, M: Sequence[int], i: int):
    if kind == "column":
        return combinations_with_replacement(M, i)
    return combinations(M, i)


def _num_sequences(kind: str, m: int, i: int) -> int:
    return comb(m + i - 1, i) if kind == "column" else comb(m, i)


def chain_dims(kind: str, a: int, m: int) -> list[int]:
    """``dim C_i`` for ``i = 0..a`` without building anything."""
    if kind not in KINDS:
        raise ValueError(f"unknown complex kind {kind!r}")
    return [factorial(a) // factorial(a - i) * _num_sequences(kind, m, i) for i in range(a + 1)]


def check_guard(kind: str, a: int, m: int, limit: int | None = None) -> None:
    limit = guard_limit() if limit is None else limit
    big = max(chain_dims(kind, a, m))
    if big > limit:
        raise GuardExceeded(
            f"{kind} complex on |A|={a}, |M|={m} has a chain group of dimension {big} > guard {limit}"
        )


@dataclass
class ChainComplex:
    kind: str
    A: tuple[int, ...]
    M: tuple[int, ...]
    bases: list[list[BasisElement]] = field(repr=False)
    index: list[dict[BasisElement, int]] = field(repr=False)
    # boundaries[i][j] = sparse column of d_i applied to bases[i][j]; boundaries[0] is empty
    boundaries: list[list[dict[int, int]]] = field(repr=False)

    @property
    def k(self) -> int:
        return len(self.A)

    def dims(self) -> list[int]:
        return [len(b) for b in self.bases]

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * d for i, d in enumerate(self.dims()))


def _boundary(e: BasisElement, index: dict[BasisElement, int]) -> dict[int, int]:
    col: dict[int, int] = {}
    for l in range(len(e.word)):
        face = BasisElement(e.word[:l] + e.word[l + 1:], e.seq[:l] + e.seq[l + 1:])
        j = index[face]
        col[j] = col.get(j, 0) + (-1) ** l
        if not col[j]:
            del col[j]
    return col


def build_complex(kind: str, A: Sequence[int], M: Sequence[int], guard: int | None = None) -> ChainComplex:
    if kind not in KINDS:
        raise ValueError(f"unknown complex kind {kind!r}")
    A, M = tuple(sorted(set(A))), tuple(sorted(set(M)))
    if not A or not M:
        raise ValueError("A and M must be nonempty")
    check_guard(kind, len(A), len(M), guard)
    bases, index, boundaries = [], [], []
    for i in range(len(A) + 1):
        basis = [
            BasisElement(w, s)
            for w in permutations(A, i)
            for s in _sequences(kind, M, i)
        ]
        bases.append(basis)
        index.append({e: j for j, e in enumerate(basis)})
        boundaries.append([] if i == 0 else [_boundary(e, index[i - 1]) for e in basis])
    c = ChainComplex(kind, A, M, bases, index, boundaries)
    _assert_square_zero(c)
    return c


def _assert_square_zero(c: ChainComplex) -> None:
    for i in range(2, c.k + 1):
        lower = c.boundaries[i - 1]
        for j, col in enumerate(c.boundaries[i]):
            acc: dict[int, int] = {}
            for r, x in col.items():
                for s, y in lower[r].items():
                    acc[s] = acc.get(s, 0) + x * y
            if any(acc.values()):
                raise AssertionError(f"d_{i - 1} d_{i} != 0 on {c.bases[i][j]}")


def boundary_ranks(c: ChainComplex) -> list[int]:
    """``rank d_i`` for ``i = 0..k`` (``d_0 = 0``), exact.

    A rank mod a large prime never exceeds the rational rank.  If the mod-p ranks
    already make every lower homology group vanish, the rational ranks are forced
    to equal them (``rank d_i + rank d_{i+1} <= dim C_i`` always), so the exact
    elimination is only run when that certificate fails.
    """
    dims = c.dims()
    mod = [0] + [linalg.rank_mod_p(c.boundaries[i]) for i in range(1, c.k + 1)]
    if all(dims[i] - mod[i] - mod[i + 1] == 0 for i in range(c.k)):
        return mod
    return [0] + [linalg.rank(c.boundaries[i]) for i in range(1, c.k + 1)]


def homology_dims(c: ChainComplex) -> list[int]:
    dims = c.dims()
    ranks = boundary_ranks(c) + [0]
    return [dims[i] - ranks[i] - ranks[i + 1] for i in range(c.k + 1)]


def vanishing_below_top(homology: Sequence[int]) -> bool:
    return not any(homology[:-1])


def _as_cycle_type(rho) -> CycleType:
    return rho if isinstance(rho, CycleType) else CycleType(Partition(rho))


def character_hopf(c: ChainComplex, rho) -> int:
    """``(-1)^k sum_i (-1)^i tr(sigma | C_i)``: the top-homology character when lower homology vanishes."""
    ct = _as_cycle_type(rho)
    if ct.k != c.k:
        raise ValueError(f"cycle type {ct.rho} is not a partition of {c.k}")
    sgn = ct.sign if c.kind == "column" else 1
    f1, m = ct.fixed_points(), len(c.M)
    total = 0
    for i in range(min(f1, c.k) + 1):
        fixed = factorial(f1) // factorial(f1 - i) * _num_sequences(c.kind, m, i)
        total += (-1) ** i * fixed
    return (-1) ** c.k * sgn * total


def character_direct(c: ChainComplex, rho, guard: int = DIRECT_GUARD) -> int:
    """Trace of ``sigma`` on ``ker d_k = H_k`` from an explicit kernel basis."""
    ct = _as_cycle_type(rho)
    if ct.k != c.k:
        raise ValueError(f"cycle type {ct.rho} is not a partition of {c.k}")
    k = c.k
    top = c.bases[k]
    if len(top) > guard:
        raise GuardExceeded(f"top chain group has dimension {len(top)} > {guard}")
    kernel = linalg.nullspace(linalg.transpose(c.boundaries[k]), len(top)) if k else {0: {0: Fraction(1)}}
    sigma = ct.representative(c.A)
    inverse = {y: x for x, y in sigma.items()}
    sgn = ct.sign if c.kind == "column" else 1
    trace = Fraction(0)
    for f, v in kernel.items():
        e = top[f]
        pre = BasisElement(tuple(inverse[x] for x in e.word), e.seq)
        trace += sgn * v.get(c.index[k][pre], 0)
    assert trace.denominator == 1
    return int(trace)


def _power_product(rho: Sequence[int], nvars: int) -> SparsePoly:
    out = SparsePoly.constant(nvars)
    for r in rho:
        out = out * power_sum(r, nvars)
    return out


def frobenius_from_character(chi: dict[Partition, int], k: int) -> SchurExpansion:
    """``sum_rho chi(rho) p_rho / z_rho`` in ``k`` variables, Schur-expanded."""
    total = SparsePoly(k)
    for rho, value in chi.items():
        total.iadd(_power_product(rho, k), factorial(k) // z_rho(rho) * value)
    scaled = {e: divmod(c, factorial(k)) for e, c in total.terms.items()}
    if any(r for _, r in scaled.values()):
        raise ArithmeticError("class function is not a virtual character")
    return expand_schur(SparsePoly(k, {e: q for e, (q, _) in scaled.items()}))


def frobenius_ch(c: ChainComplex, homology: Sequence[int] | None = None) -> SchurExpansion:
    """Frobenius characteristic of ``H_k``; refuses unless lower homology vanishes."""
    homology = homology_dims(c) if homology is None else homology
    if not vanishing_below_top(homology):
        raise LowerHomologyError(f"lower homology {list(homology)} is nonzero")
    chi = {ct.rho: character_hopf(c, ct) for ct in cycle_types(c.k)}
    return frobenius_from_character(chi, c.k)


def _signed_binomial_sum(n: int, k: int, m: int, kind: str) -> SchurExpansion:
    p1 = power_sum(1, k)
    total = SparsePoly(k)
    for i in range(k + 1):
        base = elementary(k - i, k) if kind == "column" else complete(k - i, k)
        total.iadd(base * p1 ** i, (-1) ** (k - i) * _num_sequences(kind, m, i))
    return expand_schur(total)


def c_nk(n: int, k: int) -> SchurExpansion:
    """``sum_i (-1)^(k-i) C(n-k+i, i) e_(k-i) p_1^i`` in ``k`` variables."""
    if not n >= k >= 1:
        raise ValueError("need n >= k >= 1")
    return _signed_binomial_sum(n, k, n - k + 1, "column")


def r_nk(n: int, k: int) -> SchurExpansion:
    """``sum_i (-1)^(k-i) C(n+k-1, i) h_(k-i) p_1^i`` in ``k`` variables."""
    if n < 1 or k < 1:
        raise ValueError("need n, k >= 1")
    return _signed_binomial_sum(n, k, n + k - 1, "row")


def conjecture_hypothesis(a: int, m: int) -> bool:
    return m >= 2 * a - 1


def check_vanishing(kind: str, a: int, m: int, characters: bool = True, guard: int | None = None) -> dict:
    """Homology report for the complex on ``A = [a]``, ``M = [m]``."""
    c = build_complex(kind, range(1, a + 1), range(1, m + 1), guard)
    homology = homology_dims(c)
    vanishing = vanishing_below_top(homology)
    if kind == "column":
        hypothesis = None
        status = "vanishing" if vanishing else "nonvanishing"
    else:
        hypothesis = conjecture_hypothesis(a, m)
        if not hypothesis:
            status = "outside conjecture range"
        elif vanishing:
            status = "consistent with conjecture"
        else:
            status = "counterexample candidate"
    ch_top = frobenius_ch(c, homology).to_json() if characters and vanishing else None
    return {
        "kind": kind,
        "A": list(c.A),
        "M": list(c.M),
        "dims": c.dims(),
        "homology": homology,
        "vanishing_below_top": vanishing,
        "conjecture_hypothesis": hypothesis,
        "ch_top": ch_top,
        "status": status,
    }


def character_table_row(c: ChainComplex) -> list[tuple[str, int]]:
    return [(format_partition(ct.rho), character_hopf(c, ct)) for ct in cycle_types(c.k)]
