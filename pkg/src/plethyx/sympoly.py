"""Exact sparse polynomials in ``x_1..x_n`` and expansion in the Schur basis."""
from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .shapes import Partition, format_partition, parse_partition, partition_sort_key
from .tableaux import enumerate_ssyt

Exponent = tuple[int, ...]


class NotSymmetricError(ValueError):
    def __init__(self, expo: Exponent, swapped: Exponent, a: int, b: int):
        super().__init__(f"not symmetric: coeff of x^{expo} is {a} but x^{swapped} has {b}")
        self.witness = (expo, swapped)


class SparsePoly:
    """Polynomial as a map from exponent vectors to nonzero Python ints."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponent, int] | None = None):
        self.nvars = nvars
        self.terms: dict[Exponent, int] = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != nvars:
                raise ValueError(f"exponent {e} has wrong length for {nvars} variables")
            if c:
                self.terms[e] = self.terms.get(e, 0) + c
                if not self.terms[e]:
                    del self.terms[e]

    @classmethod
    def constant(cls, nvars: int, c: int = 1) -> "SparsePoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "SparsePoly":
        """``x_i`` with ``i`` 1-indexed."""
        e = [0] * nvars
        e[i - 1] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def linear(cls, coeffs: Sequence[int]) -> "SparsePoly":
        n = len(coeffs)
        return cls(n, {tuple(int(i == j) for j in range(n)): c for i, c in enumerate(coeffs)})

    def copy(self) -> "SparsePoly":
        p = SparsePoly(self.nvars)
        p.terms = dict(self.terms)
        return p

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = SparsePoly.constant(self.nvars, other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def _coerce(self, other) -> "SparsePoly":
        if isinstance(other, int):
            return SparsePoly.constant(self.nvars, other)
        if other.nvars != self.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
        return other

    def __add__(self, other) -> "SparsePoly":
        other = self._coerce(other)
        out = self.copy()
        out.iadd(other)
        return out

    __radd__ = __add__

    def iadd(self, other: "SparsePoly", scale: int = 1) -> None:
        """In-place ``self += scale * other``."""
        terms = self.terms
        for e, c in other.terms.items():
            v = terms.get(e, 0) + scale * c
            if v:
                terms[e] = v
            else:
                terms.pop(e, None)

    def __neg__(self) -> "SparsePoly":
        return self.scale(-1)

    def __sub__(self, other) -> "SparsePoly":
        other = self._coerce(other)
        out = self.copy()
        out.iadd(other, -1)
        return out

    def __rsub__(self, other) -> "SparsePoly":
        return (-self) + other

    def scale(self, k: int) -> "SparsePoly":
        p = SparsePoly(self.nvars)
        if k:
            p.terms = {e: c * k for e, c in self.terms.items()}
        return p

    def __mul__(self, other) -> "SparsePoly":
        if isinstance(other, int):
            return self.scale(other)
        other = self._coerce(other)
        out: dict[Exponent, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        p = SparsePoly(self.nvars)
        p.terms = {e: c for e, c in out.items() if c}
        return p

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "SparsePoly":
        if k < 0:
            raise ValueError("negative power")
        result = SparsePoly.constant(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def leading(self) -> tuple[Exponent, int]:
        """Lex-greatest term."""
        e = max(self.terms)
        return e, self.terms[e]

    def permute(self, perm: Sequence[int]) -> "SparsePoly":
        """Substitute ``x_i -> x_{perm[i]}`` (0-indexed permutation)."""
        out = {}
        for e, c in self.terms.items():
            f = [0] * self.nvars
            for i, a in enumerate(e):
                f[perm[i]] = a
            out[tuple(f)] = c
        return SparsePoly(self.nvars, out)

    def derivative(self, i: int) -> "SparsePoly":
        """``d/dx_i`` with ``i`` 1-indexed."""
        out: dict[Exponent, int] = {}
        for e, c in self.terms.items():
            a = e[i - 1]
            if a:
                f = e[: i - 1] + (a - 1,) + e[i:]
                out[f] = out.get(f, 0) + a * c
        return SparsePoly(self.nvars, out)

    def substitute(self, values: Sequence["SparsePoly"]) -> "SparsePoly":
        """Replace ``x_i`` by ``values[i-1]`` (all in a common ring)."""
        if len(values) != self.nvars:
            raise ValueError("need one value per variable")
        target = values[0].nvars if values else 0
        powers: dict[tuple[int, int], SparsePoly] = {}

        def power(i: int, a: int) -> SparsePoly:
            if (i, a) not in powers:
                powers[(i, a)] = SparsePoly.constant(target) if a == 0 else power(i, a - 1) * values[i]
            return powers[(i, a)]

        out = SparsePoly(target)
        for e, c in self.terms.items():
            term = SparsePoly.constant(target, c)
            for i, a in enumerate(e):
                if a:
                    term = term * power(i, a)
            out.iadd(term)
        return out

    def __repr__(self) -> str:
        return f"SparsePoly({self.nvars}, {self.terms!r})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(f"x{i + 1}" + (f"^{a}" if a > 1 else "") for i, a in enumerate(e) if a)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def coeff_monomial(p: SparsePoly, expo: Sequence[int]) -> int:
    expo = tuple(expo)
    if len(expo) != p.nvars:
        raise ValueError(f"exponent has length {len(expo)}, polynomial has {p.nvars} variables")
    return p.terms.get(expo, 0)


def divide_exact(num: SparsePoly, den: SparsePoly) -> SparsePoly:
    """Long division under lex order; raises if the remainder is nonzero."""
    if not den:
        raise ZeroDivisionError("division by the zero polynomial")
    lead_e, lead_c = den.leading()
    rem = num.copy()
    quot = SparsePoly(num.nvars)
    while rem:
        e, c = rem.leading()
        diff = tuple(a - b for a, b in zip(e, lead_e))
        if min(diff) < 0 or c % lead_c:
            raise ArithmeticError(f"inexact division: remainder term {c}*x^{e}")
        q = SparsePoly(num.nvars, {diff: c // lead_c})
        quot.iadd(q)
        rem.iadd(q * den, -1)
    return quot


def _perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
    return sign


def antisymmetrize(expo: Sequence[int]) -> SparsePoly:
    """``sum_w sign(w) x^{w(expo)}``."""
    n = len(expo)
    out: dict[Exponent, int] = {}
    for perm in itertools.permutations(range(n)):
        e = [0] * n
        for i, a in enumerate(expo):
            e[perm[i]] = a
        e = tuple(e)
        out[e] = out.get(e, 0) + _perm_sign(perm)
    return SparsePoly(n, out)


@lru_cache(maxsize=None)
def _schur_tableaux(lam: Partition, n: int) -> SparsePoly:
    p = SparsePoly(n)
    for t in enumerate_ssyt(lam, n):
        p.iadd(SparsePoly(n, {t.weight(n): 1}))
    return p


@lru_cache(maxsize=None)
def _schur_bialternant(lam: Partition, n: int) -> SparsePoly:
    delta = [n - 1 - i for i in range(n)]
    shifted = [(lam[i] if i < len(lam) else 0) + delta[i] for i in range(n)]
    return divide_exact(antisymmetrize(shifted), antisymmetrize(delta))


def schur(lam: Sequence[int], n: int, method: str = "tableaux") -> SparsePoly:
    lam = Partition(lam)
    if len(lam) > n:
        return SparsePoly(n)
    if method == "tableaux":
        return _schur_tableaux(lam, n).copy()
    if method == "bialternant":
        return _schur_bialternant(lam, n).copy()
    raise ValueError(f"unknown method {method!r}")


def elementary(k: int, n: int) -> SparsePoly:
    return schur((1,) * k, n)


def complete(k: int, n: int) -> SparsePoly:
    return schur((k,) if k else (), n)


def power_sum(r: int, n: int) -> SparsePoly:
    return SparsePoly(n, {tuple(r if j == i else 0 for j in range(n)): 1 for i in range(n)})


def nabla(p: SparsePoly, k: int = 1) -> SparsePoly:
    """Apply ``sum_i d/dx_i`` to ``p`` ``k`` times."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    for _ in range(k):
        out = SparsePoly(p.nvars)
        for i in range(1, p.nvars + 1):
            out.iadd(p.derivative(i))
        p = out
    return p


class SchurExpansion:
    """Finite integer combination of Schur polynomials in ``nvars`` variables."""

    __slots__ = ("nvars", "coeffs")

    def __init__(self, nvars: int, coeffs: Mapping[Sequence[int], int] | None = None):
        self.nvars = nvars
        self.coeffs: dict[Partition, int] = {}
        for mu, c in (coeffs or {}).items():
            mu = Partition(mu)
            if len(mu) > nvars:
                raise ValueError(f"{mu} has more than {nvars} parts")
            if c:
                self.coeffs[mu] = self.coeffs.get(mu, 0) + c
                if not self.coeffs[mu]:
                    del self.coeffs[mu]

    def __getitem__(self, mu: Sequence[int]) -> int:
        return self.coeffs.get(Partition(mu), 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SchurExpansion):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __len__(self) -> int:
        return len(self.coeffs)

    def items(self) -> list[tuple[Partition, int]]:
        return sorted(self.coeffs.items(), key=lambda kv: partition_sort_key(kv[0]))

    def to_poly(self) -> SparsePoly:
        out = SparsePoly(self.nvars)
        for mu, c in self.coeffs.items():
            out.iadd(schur(mu, self.nvars), c)
        return out

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self.coeffs.values())

    def to_json(self) -> list[dict]:
        return [{"mu": list(mu), "coeff": str(c)} for mu, c in self.items()]

    @classmethod
    def from_json(cls, nvars: int, data: Iterable[Mapping]) -> "SchurExpansion":
        return cls(nvars, {tuple(d["mu"]): int(d["coeff"]) for d in data})

    def to_tsv(self) -> str:
        return "".join(f"{format_partition(mu)}\t{c}\n" for mu, c in self.items())

    @classmethod
    def from_tsv(cls, nvars: int, text: str) -> "SchurExpansion":
        coeffs = {}
        for line in text.splitlines():
            if line.strip():
                mu, c = line.split("\t")
                coeffs[parse_partition(mu)] = int(c)
        return cls(nvars, coeffs)

    def __repr__(self) -> str:
        inner = ", ".join(f"{tuple(mu)}: {c}" for mu, c in self.items())
        return f"SchurExpansion({self.nvars}, {{{inner}}})"


def check_symmetric(p: SparsePoly) -> None:
    """Raise :class:`NotSymmetricError` with a witness pair unless ``p`` is symmetric."""
    n = p.nvars
    for e, c in p.terms.items():
        for i in range(n - 1):
            if e[i] != e[i + 1]:
                f = e[:i] + (e[i + 1], e[i]) + e[i + 2:]
                d = p.terms.get(f, 0)
                if d != c:
                    raise NotSymmetricError(e, f, c, d)


def expand_schur(p: SparsePoly) -> SchurExpansion:
    """Schur expansion of a symmetric polynomial by lex-leading-term peeling."""
    check_symmetric(p)
    n = p.nvars
    rem = p.copy()
    coeffs: dict[Partition, int] = {}
    while rem:
        e, c = rem.leading()
        mu = Partition(e)  # lex-max exponent of a symmetric polynomial is a partition
        coeffs[mu] = c
        rem.iadd(_schur_tableaux(mu, n), -c)
    return SchurExpansion(n, coeffs)

