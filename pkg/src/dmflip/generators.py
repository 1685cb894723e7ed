"""Seeded random instances for property checks."""

from __future__ import annotations

import random
from typing import Optional

from . import linalg
from .field import Automorphism, FieldKind
from .matrix import GroundSet, LabeledMatrix, default_labels
from .setsystem import OPS, FlipWord, SetSystem


def _ground(n: int, labels=None) -> GroundSet:
    return GroundSet(tuple(labels) if labels is not None else default_labels(n))


def random_matrix(rng: random.Random, kind: FieldKind, rows: int, cols: Optional[int] = None, labels=None,
                  col_labels=None) -> LabeledMatrix:
    """Uniform matrix; square over ``labels`` when ``cols`` is omitted."""
    rg = _ground(rows, labels)
    cg = rg if cols is None else _ground(cols, col_labels)
    q = kind.order
    return LabeledMatrix(kind, rg, cg, [[rng.randrange(q) for _ in cg] for _ in rg])


def random_alpha_symmetric(rng: random.Random, alpha: Automorphism, n: int, labels=None) -> LabeledMatrix:
    """Uniform among matrices with ``alpha(-A^T) = A``."""
    kind = alpha.kind
    t, neg = alpha.table, kind.neg
    diag_choices = [x for x in kind.elements if t[neg[x]] == x]
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = rng.choice(diag_choices)
        for j in range(i + 1, n):
            x = rng.randrange(kind.order)
            a[i][j] = x
            a[j][i] = t[neg[x]]
    g = _ground(n, labels)
    return LabeledMatrix(kind, g, g, a)


def random_full_rank(rng: random.Random, kind: FieldKind, rank: int, n: int, labels=None) -> LabeledMatrix:
    """Rejection-sample a ``rank x n`` matrix of full row rank."""
    if rank > n:
        raise ValueError("rank cannot exceed the number of columns")
    while True:
        A = random_matrix(rng, kind, rank, n, labels=[f"r{i}" for i in range(rank)], col_labels=labels)
        if linalg.rank(A.data, kind, n) == rank:
            return A


def random_set_system(rng: random.Random, n: int, density: float = 0.5, labels=None) -> SetSystem:
    g = _ground(n, labels)
    f = 0
    for m in range(1 << n):
        if rng.random() < density:
            f |= 1 << m
    return SetSystem(g, f)


def random_word(rng: random.Random, labels, length: int, ops=OPS) -> FlipWord:
    labels = list(labels)
    return FlipWord(tuple((rng.choice(ops), rng.choice(labels)) for _ in range(length)))
