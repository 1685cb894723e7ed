"""Label-indexed matrices over GF(2), GF(3), GF(4).

Rows and columns are indexed by named ground-set elements; the label order
is only a storage and printing convention.  Subsets of a ground set are
passed around either as iterables of labels or as bitmasks over the
ground set's order.
"""

from __future__ import annotations

import string
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple, Union

from . import linalg
from .errors import PivotUndefinedError, StructuralError
from .field import Automorphism, FieldElement, FieldKind

LabelsLike = Union[int, str, Iterable[str]]


def default_labels(n: int) -> Tuple[str, ...]:
    if n <= 26:
        return tuple(string.ascii_lowercase[:n])
    return tuple(f"e{i}" for i in range(n))


@dataclass(frozen=True)
class GroundSet:
    """Ordered collection of distinct element labels."""

    labels: Tuple[str, ...]
    _index: Dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        index = {lab: i for i, lab in enumerate(labels)}
        if len(index) != len(labels):
            raise StructuralError(f"duplicate labels in {labels}")
        for lab in labels:
            if not lab or any(ch.isspace() or ch == "," for ch in lab) or lab == "-":
                raise StructuralError(f"invalid label {lab!r}")
        object.__setattr__(self, "_index", index)

    @classmethod
    def of_size(cls, n: int) -> "GroundSet":
        return cls(default_labels(n))

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    def __contains__(self, label: object) -> bool:
        return label in self._index

    @property
    def full_mask(self) -> int:
        return (1 << len(self.labels)) - 1

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise StructuralError(f"label {label!r} not in ground set {self.labels}") from None

    def mask(self, subset: LabelsLike) -> int:
        """Bitmask of ``subset``; a bare string is a single label, an int is taken as a mask."""
        if isinstance(subset, int):
            if subset < 0 or subset > self.full_mask:
                raise StructuralError(f"mask {subset} out of range for {len(self)} elements")
            return subset
        if isinstance(subset, str):
            return 1 << self.index(subset)
        m = 0
        for lab in subset:
            m |= 1 << self.index(lab)
        return m

    def subset(self, mask: int) -> Tuple[str, ...]:
        return tuple(lab for i, lab in enumerate(self.labels) if (mask >> i) & 1)

    def positions(self, mask: int) -> List[int]:
        return [i for i in range(len(self.labels)) if (mask >> i) & 1]

    def same_elements(self, other: "GroundSet") -> bool:
        return set(self.labels) == set(other.labels)


@dataclass(frozen=True, eq=False)
class LabeledMatrix:
    """A ``rows x cols`` matrix; entries are integer field encodings."""

    kind: FieldKind
    rows: GroundSet
    cols: GroundSet
    data: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        data = tuple(tuple(r) for r in self.data)
        object.__setattr__(self, "data", data)
        if len(data) != len(self.rows):
            raise StructuralError(f"expected {len(self.rows)} rows, got {len(data)}")
        q = self.kind.order
        for r in data:
            if len(r) != len(self.cols):
                raise StructuralError(f"expected {len(self.cols)} columns, got {len(r)}")
            for x in r:
                if not isinstance(x, int) or not 0 <= x < q:
                    raise StructuralError(f"{x!r} is not a {self.kind.value} encoding")

    # -- construction ---------------------------------------------------

    @classmethod
    def from_rows(cls, kind: FieldKind, rows: Sequence[Sequence], labels=None, col_labels=None) -> "LabeledMatrix":
        """Build from entries given as int encodings, tokens or FieldElements.

        ``labels`` names the rows; ``col_labels`` defaults to ``labels`` (square case).
        """
        def enc(x) -> int:
            if isinstance(x, FieldElement):
                if x.kind is not kind:
                    raise StructuralError(f"{x!r} is not in {kind.value}")
                return x.value
            if isinstance(x, str):
                return kind.parse_token(x)
            return int(x)

        data = [[enc(x) for x in r] for r in rows]
        if labels is None:
            labels = default_labels(len(data))
        row_gs = labels if isinstance(labels, GroundSet) else GroundSet(tuple(labels))
        if col_labels is None:
            col_gs = row_gs
        else:
            col_gs = col_labels if isinstance(col_labels, GroundSet) else GroundSet(tuple(col_labels))
        return cls(kind, row_gs, col_gs, data)

    @classmethod
    def zeros(cls, kind: FieldKind, rows: GroundSet, cols: GroundSet = None) -> "LabeledMatrix":
        cols = rows if cols is None else cols
        return cls(kind, rows, cols, [[0] * len(cols) for _ in rows])

    @classmethod
    def identity(cls, kind: FieldKind, ground: GroundSet) -> "LabeledMatrix":
        n = len(ground)
        return cls(kind, ground, ground, [[int(i == j) for j in range(n)] for i in range(n)])

    # -- basic access ---------------------------------------------------

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.rows), len(self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def ground(self) -> GroundSet:
        self._require_square()
        return self.rows

    def _require_square(self) -> None:
        if not self.is_square:
            raise StructuralError(f"matrix with rows {self.rows.labels} and cols {self.cols.labels} is not square")

    def entry(self, r: str, c: str) -> FieldElement:
        return FieldElement(self.kind, self.data[self.rows.index(r)][self.cols.index(c)])

    def __getitem__(self, key: Tuple[str, str]) -> FieldElement:
        return self.entry(*key)

    def rows_list(self) -> List[List[int]]:
        return [list(r) for r in self.data]

    def _with(self, data, rows=None, cols=None) -> "LabeledMatrix":
        return LabeledMatrix(self.kind, self.rows if rows is None else rows, self.cols if cols is None else cols, data)

    # -- equality -------------------------------------------------------

    def _entries_by_label(self):
        return {
            (r, c): x
            for r, row in zip(self.rows.labels, self.data)
            for c, x in zip(self.cols.labels, row)
        }

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LabeledMatrix):
            return NotImplemented
        if self.kind is not other.kind:
            return False
        if self.rows == other.rows and self.cols == other.cols:
            return self.data == other.data
        if not (self.rows.same_elements(other.rows) and self.cols.same_elements(other.cols)):
            return False
        return self._entries_by_label() == other._entries_by_label()

    def __hash__(self) -> int:
        return hash((self.kind, frozenset(self.rows.labels), frozenset(self.cols.labels),
                     frozenset(self._entries_by_label().items())))

    def reorder(self, rows: Sequence[str], cols: Sequence[str] = None) -> "LabeledMatrix":
        """Same matrix stored under a different label order."""
        cols = rows if cols is None and self.is_square else cols
        rg, cg = GroundSet(tuple(rows)), GroundSet(tuple(cols))
        if not (rg.same_elements(self.rows) and cg.same_elements(self.cols)):
            raise StructuralError("reorder must use the same labels")
        ri = [self.rows.index(r) for r in rg]
        ci = [self.cols.index(c) for c in cg]
        return LabeledMatrix(self.kind, rg, cg, [[self.data[i][j] for j in ci] for i in ri])

    def __repr__(self) -> str:
        body = "; ".join(" ".join(self.kind.token(x) for x in r) for r in self.data)
        return f"LabeledMatrix({self.kind.value}, rows={self.rows.labels}, cols={self.cols.labels}, [{body}])"

    # -- algebra --------------------------------------------------------

    def submatrix(self, row_subset: LabelsLike, col_subset: LabelsLike = None) -> "LabeledMatrix":
        """``A[X, Y]``; ``A[X]`` when ``col_subset`` is omitted."""
        rmask = self.rows.mask(row_subset)
        cmask = rmask if col_subset is None else self.cols.mask(col_subset)
        if col_subset is None:
            self._require_square()
        ri, ci = self.rows.positions(rmask), self.cols.positions(cmask)
        rows = GroundSet(self.rows.subset(rmask))
        cols = rows if col_subset is None else GroundSet(self.cols.subset(cmask))
        return LabeledMatrix(self.kind, rows, cols, [[self.data[i][j] for j in ci] for i in ri])

    def principal_rows(self, mask: int) -> List[List[int]]:
        idx = self.rows.positions(mask)
        return [[self.data[i][j] for j in idx] for i in idx]

    def det(self) -> FieldElement:
        self._require_square()
        return FieldElement(self.kind, linalg.det(self.data, self.kind))

    def principal_minor(self, subset: LabelsLike) -> int:
        self._require_square()
        return linalg.det(self.principal_rows(self.rows.mask(subset)), self.kind)

    def principal_minors(self) -> Dict[int, int]:
        """Map every subset mask to ``det(A[X])`` (integer encoding), in Gray-code order."""
        self._require_square()
        out = {}
        for i in range(1 << len(self.rows)):
            g = i ^ (i >> 1)
            out[g] = linalg.det(self.principal_rows(g), self.kind)
        return out

    def transpose(self) -> "LabeledMatrix":
        return LabeledMatrix(self.kind, self.cols, self.rows, list(zip(*self.data)) if self.data else [[] for _ in self.cols])

    def __neg__(self) -> "LabeledMatrix":
        neg = self.kind.neg
        return self._with([[neg[x] for x in r] for r in self.data])

    def __add__(self, other: "LabeledMatrix") -> "LabeledMatrix":
        other = self._aligned(other)
        add = self.kind.add
        return self._with([[add[x][y] for x, y in zip(r, s)] for r, s in zip(self.data, other.data)])

    def __sub__(self, other: "LabeledMatrix") -> "LabeledMatrix":
        return self + (-other)

    def __matmul__(self, other: "LabeledMatrix") -> "LabeledMatrix":
        if other.kind is not self.kind or not self.cols.same_elements(other.rows):
            raise StructuralError("incompatible matrix product")
        other = other.reorder(self.cols.labels, other.cols.labels)
        return LabeledMatrix(self.kind, self.rows, other.cols,
                             linalg.matmul(self.data, other.data, self.kind, inner=len(self.cols),
                                           cols=len(other.cols)))

    def _aligned(self, other: "LabeledMatrix") -> "LabeledMatrix":
        if other.kind is not self.kind:
            raise StructuralError(f"field mismatch: {self.kind.value} vs {other.kind.value}")
        if other.rows == self.rows and other.cols == self.cols:
            return other
        return other.reorder(self.rows.labels, self.cols.labels)

    def ppt(self, subset: LabelsLike) -> "LabeledMatrix":
        """Principal pivot transform ``A*X`` via the 2x2 block formula."""
        self._require_square()
        x = self.rows.mask(subset)
        n = len(self.rows)
        xi = self.rows.positions(x)
        yi = [i for i in range(n) if i not in set(xi)]
        a, kind = self.data, self.kind
        P = [[a[i][j] for j in xi] for i in xi]
        Q = [[a[i][j] for j in yi] for i in xi]
        R = [[a[i][j] for j in xi] for i in yi]
        S = [[a[i][j] for j in yi] for i in yi]
        Pinv = linalg.inverse(P, kind)
        if Pinv is None:
            raise PivotUndefinedError(self.rows.subset(x))
        neg, add = kind.neg, kind.add
        k = len(xi)
        PinvQ = linalg.matmul(Pinv, Q, kind, inner=k, cols=len(yi))
        RPinv = linalg.matmul(R, Pinv, kind, inner=k, cols=k)
        RPinvQ = linalg.matmul(RPinv, Q, kind, inner=k, cols=len(yi))
        out = [[0] * n for _ in range(n)]
        for s, i in enumerate(xi):
            for t, j in enumerate(xi):
                out[i][j] = Pinv[s][t]
            for t, j in enumerate(yi):
                out[i][j] = neg[PinvQ[s][t]]
        for s, i in enumerate(yi):
            for t, j in enumerate(xi):
                out[i][j] = RPinv[s][t]
            for t, j in enumerate(yi):
                out[i][j] = add[S[s][t]][neg[RPinvQ[s][t]]]
        return self._with(out)

    def schur_complement(self, subset: LabelsLike) -> "LabeledMatrix":
        x = self.rows.mask(subset)
        return self.ppt(x).submatrix(self.rows.full_mask & ~x)

    def add_identity_on(self, subset: LabelsLike) -> "LabeledMatrix":
        """``A + I_X``."""
        self._require_square()
        x = self.rows.mask(subset)
        add = self.kind.add
        out = self.rows_list()
        for i in self.rows.positions(x):
            out[i][i] = add[out[i][i]][1]
        return self._with(out)

    def apply_automorphism(self, alpha: Automorphism) -> "LabeledMatrix":
        if alpha.kind is not self.kind:
            raise StructuralError(f"automorphism of {alpha.kind.value} applied to {self.kind.value} matrix")
        t = alpha.table
        return self._with([[t[x] for x in r] for r in self.data])

    def is_alpha_symmetric(self, alpha: Automorphism) -> bool:
        """``alpha(-A^T) == A``; with the identity this is skew-symmetry."""
        if not self.is_square or alpha.kind is not self.kind:
            return False
        t, neg, a = alpha.table, self.kind.neg, self.data
        n = len(a)
        return all(t[neg[a[j][i]]] == a[i][j] for i in range(n) for j in range(i, n))

    def is_principally_unimodular(self) -> bool:
        ok = {0, 1, self.kind.neg[1]}
        return all(d in ok for d in self.principal_minors().values())


# Functional aliases -------------------------------------------------------

def submatrix(A: LabeledMatrix, X: LabelsLike, Y: LabelsLike = None) -> LabeledMatrix:
    return A.submatrix(X, Y)


def det(A: LabeledMatrix) -> FieldElement:
    return A.det()


def ppt(A: LabeledMatrix, X: LabelsLike) -> LabeledMatrix:
    return A.ppt(X)


def schur_complement(A: LabeledMatrix, X: LabelsLike) -> LabeledMatrix:
    return A.schur_complement(X)


def add_identity_on(A: LabeledMatrix, X: LabelsLike) -> LabeledMatrix:
    return A.add_identity_on(X)


def apply_automorphism_matrix(alpha: Automorphism, A: LabeledMatrix) -> LabeledMatrix:
    return A.apply_automorphism(alpha)


def is_alpha_symmetric(A: LabeledMatrix, alpha: Automorphism) -> bool:
    return A.is_alpha_symmetric(alpha)


def is_principally_unimodular(A: LabeledMatrix) -> bool:
    return A.is_principally_unimodular()
