import random

import pytest
from hypothesis import given, strategies as st

from gradedmod.errors import InputError, NonDivisibleError
from gradedmod.field import FieldSpec
from gradedmod.graded_poly import (
    INF,
    GradedSignature,
    HomogeneousTerm as H,
    signature_hilbert_dim,
    term_div,
    term_mul,
)

from conftest import GF2, GF5, QQ


def test_term_mul():
    assert term_mul(H(GF5(2), 3), H(GF5(3), 1)) == H(GF5(1), 4)
    assert term_mul(H(GF5(2), 3), H.zero(GF5)) == H.zero(GF5)
    assert term_mul(H(QQ.parse("1/2"), 2), H(QQ(4), 0)) == H(QQ(2), 2)


def test_term_div():
    assert term_div(H(GF2(1), 3), H(GF2(1), 1)) == H(GF2(1), 2)
    assert term_div(H(QQ(6), 4), H(QQ(3), 4)) == H(QQ(2), 0)
    with pytest.raises(NonDivisibleError):
        term_div(H(GF2(1), 1), H(GF2(1), 2))
    with pytest.raises(ZeroDivisionError):
        term_div(H(GF2(1), 1), H.zero(GF2))
    assert term_div(H.zero(GF2), H(GF2(1), 5)) == H.zero(GF2)


def test_zero_is_canonical():
    z = H(GF5.zero, 7)
    assert z.degree == 0 and z == H.zero(GF5)


def test_inhomogeneous_sum_rejected():
    with pytest.raises(InputError):
        H(GF5(1), 1) + H(GF5(1), 2)
    assert H(GF5(2), 1) + H(GF5(3), 1) == H.zero(GF5)


terms = st.builds(
    lambda c, d: H(FieldSpec.gf(7)(c), d),
    st.integers(min_value=1, max_value=6),
    st.integers(min_value=0, max_value=20),
)


@given(terms, terms)
def test_div_inverts_mul(a, b):
    assert (a * b) / b == a
    assert (a * b) / a == b


def test_hilbert_examples():
    assert signature_hilbert_dim(GradedSignature([(0, INF)]), 7) == 1
    sig = GradedSignature([(1, 2)])
    assert [sig.hilbert_dim(d) for d in range(4)] == [0, 1, 1, 0]
    # indicator sum: (0,2) covers d = 0,1 and (1,3) covers d = 1,2,3
    assert GradedSignature([(0, 2), (1, 3)]).hilbert_dim(1) == 2


summands = st.lists(
    st.tuples(st.integers(0, 6), st.one_of(st.integers(1, 6), st.just(INF))), max_size=8
)


@given(summands, summands, st.integers(0, 15))
def test_hilbert_additive(a, b, d):
    sa, sb = GradedSignature(a), GradedSignature(b)
    assert (sa + sb).hilbert_dim(d) == sa.hilbert_dim(d) + sb.hilbert_dim(d)


@given(summands, st.randoms())
def test_canonical_order_insensitive(a, rnd):
    shuffled = list(a)
    rnd.shuffle(shuffled)
    s = GradedSignature(a)
    assert GradedSignature(shuffled) == s
    assert GradedSignature(s.summands) == s


def test_canonical_order_puts_infinity_last():
    assert GradedSignature([(0, INF), (1, 1), (0, 3)]).summands == ((0, 3), (0, INF), (1, 1))


def test_multiset_semantics():
    assert GradedSignature([(0, 1), (0, 1)]) != GradedSignature([(0, 1)])


def test_zero_exponent_rejected():
    with pytest.raises(InputError):
        GradedSignature([(0, 0)])


def test_json_forms():
    assert H(GF5(3), 2).to_json() == ["3", 2]
    assert H.from_json(QQ, ["-1/2", 4]) == H(QQ.parse("-1/2"), 4)
    sig = GradedSignature([(0, INF), (2, 3)])
    assert sig.to_json() == [[0, "inf"], [2, 3]]
    assert GradedSignature.from_json(sig.to_json()) == sig
