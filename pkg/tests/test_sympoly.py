from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from plethyx.shapes import partitions
from plethyx.sympoly import (
    NotSymmetricError,
    SchurExpansion,
    SparsePoly,
    antisymmetrize,
    check_symmetric,
    coeff_monomial,
    complete,
    divide_exact,
    elementary,
    expand_schur,
    nabla,
    power_sum,
    schur,
)
from strategies import partitions_st


def polys(nvars=2, max_exp=3):
    expo = st.tuples(*[st.integers(min_value=0, max_value=max_exp)] * nvars)
    return st.dictionaries(expo, st.integers(min_value=-5, max_value=5), max_size=5).map(
        lambda d: SparsePoly(nvars, d)
    )


def test_construction_drops_zeros():
    p = SparsePoly(2, {(1, 0): 2, (0, 1): 0})
    assert p.terms == {(1, 0): 2}
    assert not SparsePoly(3)
    with pytest.raises(ValueError):
        SparsePoly(2, {(1,): 1})


def test_arithmetic_and_printing():
    x, y = SparsePoly.variable(2, 1), SparsePoly.variable(2, 2)
    p = (x + y) ** 2 - x * y * 2
    assert str(p) == "x1^2 + x2^2"
    assert str(x - y) == "x1 - x2"
    assert (x + 1).terms == {(1, 0): 1, (0, 0): 1}
    assert (1 - x).terms == {(0, 0): 1, (1, 0): -1}
    assert p.degree() == 2 and p.is_homogeneous()
    assert coeff_monomial(p, (2, 0)) == 1
    assert str(SparsePoly(2)) == "0"


@given(polys(), polys(), polys())
@settings(max_examples=50)
def test_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a - a == SparsePoly(2)


@given(polys(), polys())
@settings(max_examples=50)
def test_divide_exact_inverts_multiplication(a, b):
    if not b:
        return
    assert divide_exact(a * b, b) == a


def test_divide_exact_rejects_remainder():
    x, y = SparsePoly.variable(2, 1), SparsePoly.variable(2, 2)
    with pytest.raises(ArithmeticError):
        divide_exact(x * x + y, x)
    with pytest.raises(ZeroDivisionError):
        divide_exact(x, SparsePoly(2))


def test_antisymmetrize_vandermonde():
    x = [SparsePoly.variable(3, i) for i in (1, 2, 3)]
    vandermonde = (x[0] - x[1]) * (x[0] - x[2]) * (x[1] - x[2])
    assert antisymmetrize((2, 1, 0)) == vandermonde


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_schur_methods_agree(n):
    for k in range(5):
        for lam in partitions(k, max_len=n):
            assert schur(lam, n, "tableaux") == schur(lam, n, "bialternant"), lam


def test_schur_small_cases():
    x, y = SparsePoly.variable(2, 1), SparsePoly.variable(2, 2)
    assert schur((2,), 2) == x * x + x * y + y * y
    assert schur((1, 1), 2) == x * y
    assert schur((1, 1, 1), 2) == SparsePoly(2)
    assert elementary(0, 3) == SparsePoly.constant(3)
    assert complete(2, 1) == SparsePoly(1, {(2,): 1})
    with pytest.raises(ValueError):
        schur((1,), 2, "bogus")


@given(partitions_st(max_size=5, max_len=3))
@settings(max_examples=30, deadline=None)
def test_schur_is_symmetric(lam):
    s = schur(lam, 3)
    for perm in permutations(range(3)):
        assert s.permute(perm) == s


def test_check_symmetric_gives_witness():
    with pytest.raises(NotSymmetricError):
        check_symmetric(SparsePoly(2, {(1, 0): 1}))
    check_symmetric(power_sum(3, 3))


def test_expand_schur_frozen():
    # p_1^2 = s_2 + s_11 ; p_2 = s_2 - s_11
    assert expand_schur(power_sum(1, 2) ** 2) == SchurExpansion(2, {(2,): 1, (1, 1): 1})
    assert expand_schur(power_sum(2, 2)) == SchurExpansion(2, {(2,): 1, (1, 1): -1})
    # s_1^3 = s_3 + 2 s_21 + s_111
    assert expand_schur(power_sum(1, 3) ** 3).coeffs == {(3,): 1, (2, 1): 2, (1, 1, 1): 1}


@given(st.dictionaries(partitions_st(max_size=4, max_len=3), st.integers(min_value=-9, max_value=9), max_size=4))
@settings(max_examples=40, deadline=None)
def test_expand_schur_roundtrip(coeffs):
    e = SchurExpansion(3, coeffs)
    assert expand_schur(e.to_poly()) == e


def test_expansion_serialization_roundtrip():
    e = SchurExpansion(3, {(2,): 1, (1, 1): 2, (3,): -4})
    assert [tuple(mu) for mu, _ in e.items()] == [(2,), (1, 1), (3,)]
    assert e.to_json() == [{"mu": [2], "coeff": "1"}, {"mu": [1, 1], "coeff": "2"}, {"mu": [3], "coeff": "-4"}]
    assert SchurExpansion.from_json(3, e.to_json()) == e
    assert e.to_tsv() == "2\t1\n1,1\t2\n3\t-4\n"
    assert SchurExpansion.from_tsv(3, e.to_tsv()) == e
    assert e[(5,)] == 0
    assert not e.is_nonnegative()
    with pytest.raises(ValueError):
        SchurExpansion(1, {(1, 1): 1})


def test_nabla():
    assert str(nabla(schur((2,), 2))) == "3*x1 + 3*x2"
    # nabla s_lam = sum over removable boxes of (n + content) s_{lam - box}
    assert expand_schur(nabla(schur((2, 1), 3))).coeffs == {(2,): 2, (1, 1): 4}
    assert nabla(schur((1,), 3), 2) == SparsePoly(3)
    with pytest.raises(ValueError):
        nabla(schur((1,), 3), -1)
