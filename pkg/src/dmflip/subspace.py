"""Subspaces of F^V, matroids of subspaces, and bicycle spaces."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from . import linalg
from .errors import BudgetExceeded, StructuralError
from .field import Automorphism, FieldKind, reciprocal_automorphism
from .matrix import GroundSet, LabeledMatrix
from .setsystem import LOOPC, SetSystem

ENUMERATION_LIMIT = 1 << 20


@dataclass(frozen=True, eq=False)
class Subspace:
    """Row space of ``basis``, kept in reduced row echelon form."""

    kind: FieldKind
    ambient: GroundSet
    basis: Tuple[Tuple[int, ...], ...]

    @classmethod
    def span(cls, kind: FieldKind, ambient: GroundSet, vectors: Sequence[Sequence[int]]) -> "Subspace":
        n = len(ambient)
        for v in vectors:
            if len(v) != n:
                raise StructuralError(f"vector of length {len(v)} in a space of dimension {n}")
        red, _ = linalg.rref(vectors, kind, n)
        return cls(kind, ambient, tuple(tuple(r) for r in red))

    @classmethod
    def zero(cls, kind: FieldKind, ambient: GroundSet) -> "Subspace":
        return cls(kind, ambient, ())

    @classmethod
    def full(cls, kind: FieldKind, ambient: GroundSet) -> "Subspace":
        n = len(ambient)
        return cls(kind, ambient, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def n(self) -> int:
        return len(self.ambient)

    def _check(self, other: "Subspace") -> None:
        if self.kind is not other.kind or self.ambient != other.ambient:
            raise StructuralError("subspaces live in different ambient spaces")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        if self.kind is not other.kind or not self.ambient.same_elements(other.ambient):
            return False
        if self.ambient != other.ambient:
            other = other.reorder(self.ambient)
        return self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.kind, self.ambient, self.basis))

    def reorder(self, ambient: GroundSet) -> "Subspace":
        perm = [self.ambient.index(lab) for lab in ambient]
        return Subspace.span(self.kind, ambient, [[v[i] for i in perm] for v in self.basis])

    def __contains__(self, v: Sequence[int]) -> bool:
        return linalg.rank(list(self.basis) + [list(v)], self.kind, self.n) == self.dim

    def as_matrix(self, row_prefix: str = "v") -> LabeledMatrix:
        rows = GroundSet(tuple(f"{row_prefix}{i + 1}" for i in range(self.dim)))
        return LabeledMatrix(self.kind, rows, self.ambient, self.basis)

    def vectors(self, limit: int = ENUMERATION_LIMIT):
        """Every vector of the subspace (``q**dim`` of them)."""
        q = self.kind.order
        if q ** self.dim > limit:
            raise BudgetExceeded(f"subspace has {q}**{self.dim} vectors, limit is {limit}")
        add, mul = self.kind.add, self.kind.mul
        for coeffs in itertools.product(range(q), repeat=self.dim):
            v = [0] * self.n
            for c, b in zip(coeffs, self.basis):
                if c:
                    mrow = mul[c]
                    v = [add[x][mrow[y]] for x, y in zip(v, b)]
            yield v

    def __repr__(self) -> str:
        body = "; ".join(" ".join(self.kind.token(x) for x in r) for r in self.basis)
        return f"Subspace({self.kind.value}, {self.ambient.labels}, [{body}])"


def kernel(A: LabeledMatrix) -> Subspace:
    """Null space ``{v : A v = 0}`` indexed by the columns of A."""
    return Subspace.span(A.kind, A.cols, linalg.nullspace(A.data, A.kind, len(A.cols)))


def orthogonal_complement(L: Subspace) -> Subspace:
    """Complement under the plain dot product (no conjugation)."""
    return Subspace.span(L.kind, L.ambient, linalg.nullspace(L.basis, L.kind, L.n))


def subspace_sum(L1: Subspace, L2: Subspace) -> Subspace:
    L1._check(L2)
    return Subspace.span(L1.kind, L1.ambient, list(L1.basis) + list(L2.basis))


def intersect(L1: Subspace, L2: Subspace) -> Subspace:
    L1._check(L2)
    return orthogonal_complement(subspace_sum(orthogonal_complement(L1), orthogonal_complement(L2)))


def apply_automorphism_subspace(alpha: Automorphism, L: Subspace) -> Subspace:
    if alpha.kind is not L.kind:
        raise StructuralError(f"automorphism of {alpha.kind.value} applied to {L.kind.value} subspace")
    t = alpha.table
    return Subspace.span(L.kind, L.ambient, [[t[x] for x in v] for v in L.basis])


# -- matroids -----------------------------------------------------------------

def _support(v: Sequence[int]) -> int:
    m = 0
    for i, x in enumerate(v):
        if x:
            m |= 1 << i
    return m


def bases_from_circuits(ground: GroundSet, circuits: Sequence[int]) -> SetSystem:
    """Maximal circuit-free subsets."""
    independent = [s for s in range(ground.full_mask + 1) if not any(c & s == c for c in circuits)]
    return SetSystem.from_masks(ground, independent).max_sets()


def matroid_from_subspace(L: Subspace, limit: int = ENUMERATION_LIMIT) -> Tuple[SetSystem, SetSystem]:
    """``(circuits, bases)`` of M(L): circuits are the minimal nonempty supports of vectors in L."""
    supports = {_support(v) for v in L.vectors(limit)}
    supports.discard(0)
    circuits = [s for s in supports if not any(t != s and t & s == t for t in supports)]
    return SetSystem.from_masks(L.ambient, circuits), bases_from_circuits(L.ambient, circuits)


def column_bases(B: LabeledMatrix) -> SetSystem:
    """Bases of the column matroid of B: column sets of size rank(B) that are independent."""
    r = linalg.rank(B.data, B.kind, len(B.cols))
    n = len(B.cols)
    out = []
    for combo in itertools.combinations(range(n), r):
        sub = [[row[j] for j in combo] for row in B.data]
        if len(B.rows) == r:
            ok = linalg.det(sub, B.kind) != 0
        else:
            ok = linalg.rank(sub, B.kind, r) == r
        if ok:
            out.append(sum(1 << j for j in combo))
    return SetSystem.from_masks(B.cols, out)


# -- standard representations ---------------------------------------------------

@dataclass(frozen=True)
class StandardRepresentation:
    """``X x V`` matrix whose X-columns form an identity block."""

    B: LabeledMatrix
    basis: int

    def __post_init__(self):
        B = self.B
        x = B.cols.mask(self.basis)
        object.__setattr__(self, "basis", x)
        if set(B.rows.labels) != set(B.cols.subset(x)):
            raise StructuralError("rows of a standard representation must be labelled by the basis")
        if B.submatrix(B.rows.labels, B.rows.labels) != LabeledMatrix.identity(B.kind, B.rows):
            raise StructuralError("basis columns do not form an identity block")

    @property
    def kind(self) -> FieldKind:
        return self.B.kind

    @property
    def ground(self) -> GroundSet:
        return self.B.cols

    @property
    def basis_labels(self) -> Tuple[str, ...]:
        return self.ground.subset(self.basis)

    @property
    def S(self) -> LabeledMatrix:
        return self.B.submatrix(self.B.rows.labels, self.ground.subset(self.ground.full_mask & ~self.basis))


def standardize(Braw: LabeledMatrix) -> StandardRepresentation:
    """Row-reduce a full-row-rank matrix; the basis is the first independent column set."""
    red, pivots = linalg.rref(Braw.data, Braw.kind, len(Braw.cols))
    if len(pivots) != len(Braw.rows):
        raise StructuralError(f"matrix has rank {len(pivots)} but {len(Braw.rows)} rows")
    rows = GroundSet(tuple(Braw.cols.labels[p] for p in pivots))
    B = LabeledMatrix(Braw.kind, rows, Braw.cols, red)
    return StandardRepresentation(B, sum(1 << p for p in pivots))


def build_r_matrix(std: StandardRepresentation, alpha: Automorphism) -> LabeledMatrix:
    """V x V matrix with S in the (X, V-X) block and alpha(-S^T) in the (V-X, X) block."""
    if alpha.kind is not std.kind:
        raise StructuralError("automorphism and representation over different fields")
    V = std.ground
    n = len(V)
    t, neg = alpha.table, std.kind.neg
    out = [[0] * n for _ in range(n)]
    rest = V.positions(V.full_mask & ~std.basis)
    for r, xlab in enumerate(std.B.rows.labels):
        i = V.index(xlab)
        row = std.B.data[r]
        for j in rest:
            out[i][j] = row[j]
            out[j][i] = t[neg[row[j]]]
    return LabeledMatrix(std.kind, V, V, out)


def twist_matroid_check(std: StandardRepresentation) -> bool:
    """Compare M_{R(B,id)} with the bases of B twisted by the basis X."""
    from .deltamatroid import matrix_delta_matroid

    lhs = matrix_delta_matroid(build_r_matrix(std, Automorphism.identity(std.kind)))
    rhs = column_bases(std.B).twist(std.basis)
    return lhs == rhs


# -- bicycles -------------------------------------------------------------------

def bicycle_space(L: Subspace) -> Subspace:
    """``L ∩ alpha(L^perp)`` with alpha the reciprocal map x -> 1/x."""
    alpha = reciprocal_automorphism(L.kind)
    return intersect(L, apply_automorphism_subspace(alpha, orthogonal_complement(L)))


def bicycle_dimension(L: Subspace) -> int:
    return bicycle_space(L).dim


def _require_char2_full_rank(Braw: LabeledMatrix) -> None:
    if Braw.kind is FieldKind.GF3:
        raise StructuralError("bicycle matroids are defined here for GF2 and GF4 only")
    if linalg.rank(Braw.data, Braw.kind, len(Braw.cols)) != len(Braw.rows):
        raise StructuralError("representation must have full row rank")


def bicycle_matroid(Braw: LabeledMatrix) -> SetSystem:
    """Bases of the matroid of the bicycle space of ``ker(Braw)``."""
    _require_char2_full_rank(Braw)
    return matroid_from_subspace(bicycle_space(kernel(Braw)))[1]


def loop_complement_max(Braw: LabeledMatrix) -> SetSystem:
    """``max(M + V)`` for M the basis system of the column matroid of Braw."""
    M = column_bases(Braw)
    return M.apply_bulk(LOOPC, M.ground.full_mask).max_sets()


@dataclass(frozen=True)
class BicycleReport:
    space: Subspace
    dimension: int
    bicycle_bases: SetSystem
    loop_complement_bases: SetSystem

    @property
    def equal(self) -> bool:
        return self.bicycle_bases == self.loop_complement_bases


def bicycle_report(Braw: LabeledMatrix) -> BicycleReport:
    _require_char2_full_rank(Braw)
    space = bicycle_space(kernel(Braw))
    return BicycleReport(space, space.dim, matroid_from_subspace(space)[1], loop_complement_max(Braw))


@dataclass(frozen=True)
class ParityReport:
    bases: int
    bicycle_dimension: int

    @property
    def odd(self) -> bool:
        return self.bases % 2 == 1

    @property
    def consistent(self) -> bool:
        return self.odd == (self.bicycle_dimension == 0)

    def __str__(self) -> str:
        parity = "odd" if self.odd else "even"
        verdict = "consistent" if self.consistent else "INCONSISTENT"
        return f"bases={self.bases} ({parity}), bd={self.bicycle_dimension}, {verdict}"


def bases_parity_check(Braw: LabeledMatrix) -> ParityReport:
    _require_char2_full_rank(Braw)
    return ParityReport(len(column_bases(Braw)), bicycle_dimension(kernel(Braw)))
