"""Delta-matroid recognition, matrix delta-matroids and vertex-flip safety."""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

import numpy as np

from .errors import InvariantViolation, PivotUndefinedError, StructuralError, UnsupportedRepresentationError
from .field import Automorphism, FieldKind
from .matrix import GroundSet, LabeledMatrix, LabelsLike, default_labels
from .setsystem import LOOPC, TWIST, FlipWord, SetSystem, _BIT_OPS, normalize_word

DEFAULT_BUDGET = 2_000_000

# bound on the (members x members x n) exchange tensor built per chunk
_CHUNK_CELLS = 1 << 22


@dataclass(frozen=True)
class DeltaMatroidWitness:
    verdict: bool
    # (X, Y, u) violating symmetric exchange, as label tuples and a label
    counterexample: Optional[Tuple[Tuple[str, ...], Tuple[str, ...], str]] = None

    def __bool__(self) -> bool:
        return self.verdict


def _indicator_array(f: int, n: int) -> np.ndarray:
    size = 1 << n
    raw = np.frombuffer(f.to_bytes((size + 7) // 8, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:size].astype(bool)


def _first_violation(f: int, n: int) -> Optional[Tuple[int, int, int]]:
    """First (X, Y, u) in (X, Y, u) lexicographic mask order breaking symmetric exchange."""
    F = _indicator_array(f, n)
    idx = np.flatnonzero(F)
    k = len(idx)
    if n == 0 or k < 2:
        return None
    bits = np.int64(1) << np.arange(n, dtype=np.int64)
    shifts = np.arange(n, dtype=np.int64)
    off_diag = ~np.eye(n, dtype=bool)
    chunk = max(1, _CHUNK_CELLS // (k * n))
    for start in range(0, k, chunk):
        xs = idx[start:start + chunk]
        single = F[xs[:, None] ^ bits[None, :]]
        double = F[xs[:, None, None] ^ bits[None, :, None] ^ bits[None, None, :]] & off_diag
        # partners[x, u] = set of v != u with X ^ {u, v} feasible
        partners = (double * bits[None, None, :]).sum(axis=-1)
        diff = xs[:, None] ^ idx[None, :]
        has_u = ((diff[:, :, None] >> shifts) & 1).astype(bool)
        viol = (~single)[:, None, :] & has_u & ((diff[:, :, None] & partners[:, None, :]) == 0)
        hit = np.argwhere(viol)
        if len(hit):
            x, y, u = hit[0]
            return int(xs[x]), int(idx[y]), int(u)
    return None


def is_delta_matroid_bits(f: int, n: int) -> bool:
    return f != 0 and _first_violation(f, n) is None


def is_delta_matroid(M: SetSystem) -> DeltaMatroidWitness:
    """Brute-force symmetric exchange check over every (X, Y, u)."""
    if not M.proper:
        return DeltaMatroidWitness(False)
    bad = _first_violation(M.indicator, M.n)
    if bad is None:
        return DeltaMatroidWitness(True)
    x, y, u = bad
    g = M.ground
    return DeltaMatroidWitness(False, (g.subset(x), g.subset(y), g.labels[u]))


def violates_exchange(M: SetSystem, X: LabelsLike, Y: LabelsLike, u: str) -> bool:
    """Re-check a single counterexample triple against the axiom."""
    g = M.ground
    x, y, ub = g.mask(X), g.mask(Y), g.mask(u)
    if not (M.has_mask(x) and M.has_mask(y) and ub & (x ^ y)):
        return False
    if M.has_mask(x ^ ub):
        return False
    d = x ^ y
    return not any(M.has_mask(x ^ ub ^ (1 << v)) for v in g.positions(d & ~ub))


def is_matroid_basis_system(M: SetSystem) -> bool:
    sizes = {bin(m).count("1") for m in M.masks()}
    return len(sizes) == 1 and is_delta_matroid(M).verdict


def matrix_delta_matroid(A: LabeledMatrix) -> SetSystem:
    """``M_A``: all X with ``A[X]`` nonsingular (always contains the empty set)."""
    minors = A.principal_minors()
    return SetSystem.from_masks(A.ground, [m for m, d in minors.items() if d])


def uniform_matroid(rank: int, n: int, labels=None) -> SetSystem:
    """Basis system of U_{rank,n}."""
    ground = GroundSet(tuple(labels) if labels is not None else default_labels(n))
    return SetSystem.from_masks(ground, [sum(1 << i for i in c) for c in itertools.combinations(range(n), rank)])


# -- representations and vertex-flip transport ------------------------------

@dataclass(frozen=True)
class Representation:
    """Pair ``(A, X)`` with ``A`` alpha-symmetric; represents ``M_A * X``."""

    matrix: LabeledMatrix
    alpha: Automorphism
    offset: LabelsLike = 0

    def __post_init__(self):
        if not self.matrix.is_alpha_symmetric(self.alpha):
            raise StructuralError(f"matrix is not {self.alpha.short_name}-symmetric")
        object.__setattr__(self, "offset", self.matrix.ground.mask(self.offset))

    @property
    def offset_labels(self) -> Tuple[str, ...]:
        return self.matrix.ground.subset(self.offset)

    def system(self) -> SetSystem:
        return matrix_delta_matroid(self.matrix).twist(self.offset)


def _supports_transport(rep: Representation) -> bool:
    kind, tag = rep.matrix.kind, rep.alpha.tag
    return (kind is FieldKind.GF4 and tag == "inversion") or (kind is FieldKind.GF2 and tag == "identity")


def vf_transport(rep: Representation, word: FlipWord) -> Representation:
    """Representation of ``(M_A * X) word`` built as ``A + Z1 * Z2 + Z3`` twisted by ``W``.

    Only GF(4) with inversion and GF(2) with the identity are accepted: those
    are the pairs where alpha-symmetric matrices are principally unimodular,
    so loop complementation of ``M_A`` is again a matrix delta-matroid.
    """
    if not _supports_transport(rep):
        raise UnsupportedRepresentationError(
            f"transport needs (GF4, inv) or (GF2, id), got ({rep.matrix.kind.value}, {rep.alpha.short_name})")
    A, ground = rep.matrix, rep.matrix.ground
    target = rep.system().apply_word(word)
    if not target.proper:
        raise InvariantViolation("flipped system is empty")
    w = min(target.masks())
    conj = FlipWord.bulk(TWIST, ground.subset(rep.offset)) + word + FlipWord.bulk(TWIST, ground.subset(w))
    nf = normalize_word(conj, ground)
    try:
        A2 = A.add_identity_on(nf.z1).ppt(nf.z2).add_identity_on(nf.z3)
    except PivotUndefinedError as exc:
        raise InvariantViolation(f"pivot on {nf.z2_labels} undefined after loop complementation") from exc
    return Representation(A2, rep.alpha, w)


# -- vertex-flip safety -------------------------------------------------------

@dataclass(frozen=True)
class VfSafety:
    status: str  # "safe", "unsafe" or "exhausted"
    witness: Optional[FlipWord] = None
    explored: int = 0

    @property
    def safe(self) -> bool:
        return self.status == "safe"


def is_vf_safe(M: SetSystem, budget: int = DEFAULT_BUDGET) -> VfSafety:
    """Breadth-first search of the orbit of M under ``*u`` and ``+u``.

    Returns ``safe`` when the whole orbit consists of delta-matroids,
    ``unsafe`` with the word reaching the first offender, or ``exhausted``
    once more than ``budget`` distinct systems have been discovered.
    """
    n, labels = M.n, M.ground.labels
    start = M.indicator
    parent: Dict[int, Optional[Tuple[int, str, int]]] = {start: None}
    queue = deque([start])

    def word_to(f: int) -> FlipWord:
        letters = []
        while parent[f] is not None:
            prev, op, u = parent[f]
            letters.append((op, labels[u]))
            f = prev
        return FlipWord(tuple(reversed(letters)))

    gens = [(op, u) for u in range(n) for op in (TWIST, LOOPC)]
    while queue:
        f = queue.popleft()
        if not is_delta_matroid_bits(f, n):
            return VfSafety("unsafe", word_to(f), len(parent))
        for op, u in gens:
            g = _BIT_OPS[op](f, u, n)
            if g not in parent:
                if len(parent) >= budget:
                    return VfSafety("exhausted", None, len(parent))
                parent[g] = (f, op, u)
                queue.append(g)
    return VfSafety("safe", None, len(parent))
