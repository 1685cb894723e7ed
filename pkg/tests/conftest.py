import random

import pytest
from hypothesis import settings, strategies as st

from dmflip.field import GF2, GF3, GF4, Automorphism
from dmflip.matrix import GroundSet, LabeledMatrix
from dmflip.setsystem import OPS, FlipWord, SetSystem

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

KINDS = (GF2, GF3, GF4)
INV = Automorphism.inversion(GF4)


@pytest.fixture
def rng():
    return random.Random(12345)


def laplace_det(rows, kind):
    """Cofactor expansion along the first row; independent of the elimination code."""
    n = len(rows)
    if n == 0:
        return 1
    add, mul, neg = kind.add, kind.mul, kind.neg
    total = 0
    for j in range(n):
        if not rows[0][j]:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = mul[rows[0][j]][laplace_det(minor, kind)]
        total = add[total][term if j % 2 == 0 else neg[term]]
    return total


@st.composite
def square_matrices(draw, kinds=KINDS, max_n=5, min_n=0):
    kind = draw(st.sampled_from(kinds))
    n = draw(st.integers(min_n, max_n))
    data = [[draw(st.integers(0, kind.order - 1)) for _ in range(n)] for _ in range(n)]
    return LabeledMatrix(kind, GroundSet.of_size(n), GroundSet.of_size(n), data)


@st.composite
def alpha_symmetric_matrices(draw, alpha=INV, max_n=5, min_n=1):
    kind = alpha.kind
    n = draw(st.integers(min_n, max_n))
    t, neg = alpha.table, kind.neg
    diag = [x for x in kind.elements if t[neg[x]] == x]
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = draw(st.sampled_from(diag))
        for j in range(i + 1, n):
            a[i][j] = draw(st.integers(0, kind.order - 1))
            a[j][i] = t[neg[a[i][j]]]
    g = GroundSet.of_size(n)
    return LabeledMatrix(kind, g, g, a)


@st.composite
def set_systems(draw, max_n=4, min_n=1):
    n = draw(st.integers(min_n, max_n))
    f = draw(st.integers(0, (1 << (1 << n)) - 1))
    return SetSystem(GroundSet.of_size(n), f)


def words(labels, max_len=12):
    letter = st.tuples(st.sampled_from(OPS), st.sampled_from(list(labels)))
    return st.lists(letter, max_size=max_len).map(lambda ls: FlipWord(tuple(ls)))
