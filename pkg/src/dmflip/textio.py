"""Line-oriented text formats for matrices, set systems, subspaces and flip words.

Square matrix::

    matrix GF4 2
    a b
    1 w
    w2 0

Rectangular matrix (row labels, then column labels)::

    rmatrix GF4 1 2
    r
    a b
    1 1

Set system (one member per line, ``-`` is the empty set)::

    setsystem 2
    a b
    -
    a,b
"""

from __future__ import annotations

from pathlib import Path
from typing import List, Sequence, Union

from .errors import ParseError, StructuralError
from .field import FieldKind
from .matrix import GroundSet, LabeledMatrix
from .setsystem import FlipWord, SetSystem
from .subspace import Subspace

PathLike = Union[str, Path]


def _lines(text: str) -> List[str]:
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    return lines


def _int(token: str, what: str) -> int:
    try:
        value = int(token)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {token!r}") from None
    if value < 0:
        raise ParseError(f"{what} must be nonnegative")
    return value


def _labels(line: str, count: int, what: str) -> GroundSet:
    labels = line.split()
    if len(labels) != count:
        raise ParseError(f"expected {count} {what} labels, got {len(labels)}")
    try:
        return GroundSet(tuple(labels))
    except StructuralError as exc:
        raise ParseError(str(exc)) from None


def format_subset(labels: Sequence[str]) -> str:
    return ",".join(labels) if labels else "-"


def parse_subset(text: str, ground: GroundSet) -> int:
    text = text.strip()
    if text == "-":
        return 0
    parts = text.split(",")
    if any(not p for p in parts):
        raise ParseError(f"malformed subset {text!r}")
    try:
        mask = 0
        for p in parts:
            bit = 1 << ground.index(p)
            if mask & bit:
                raise ParseError(f"repeated element {p!r} in {text!r}")
            mask |= bit
        return mask
    except StructuralError as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(str(exc)) from None


# -- matrices -------------------------------------------------------------------

def format_matrix(A: LabeledMatrix) -> str:
    tok = A.kind.token
    body = [" ".join(tok(x) for x in row) for row in A.data]
    if A.is_square:
        head = [f"matrix {A.kind.value} {len(A.rows)}", " ".join(A.rows.labels)]
    else:
        head = [f"rmatrix {A.kind.value} {len(A.rows)} {len(A.cols)}", " ".join(A.rows.labels),
                " ".join(A.cols.labels)]
    return "\n".join(head + body) + "\n"


def parse_matrix(text: str) -> LabeledMatrix:
    lines = _lines(text)
    if not lines:
        raise ParseError("empty matrix input")
    head = lines[0].split()
    if not head or head[0] not in ("matrix", "rmatrix"):
        raise ParseError(f"expected 'matrix' or 'rmatrix' header, got {lines[0]!r}")
    if head[0] == "matrix":
        if len(head) != 3:
            raise ParseError("header must be 'matrix <field> <n>'")
        kind = FieldKind.parse(head[1])
        n = _int(head[2], "matrix size")
        if len(lines) < 2 and n:
            raise ParseError("missing label line")
        rows = cols = _labels(lines[1] if n else "", n, "matrix")
        body = lines[2:]
    else:
        if len(head) != 4:
            raise ParseError("header must be 'rmatrix <field> <rows> <cols>'")
        kind = FieldKind.parse(head[1])
        r, c = _int(head[2], "row count"), _int(head[3], "column count")
        if len(lines) < 3 and (r or c):
            raise ParseError("missing label lines")
        rows = _labels(lines[1] if r or c else "", r, "row")
        cols = _labels(lines[2] if r or c else "", c, "column")
        body = lines[3:]
    if len(body) != len(rows):
        raise ParseError(f"expected {len(rows)} matrix rows, got {len(body)}")
    data = []
    for line in body:
        toks = line.split()
        if len(toks) != len(cols):
            raise ParseError(f"expected {len(cols)} entries in row {line!r}")
        data.append([kind.parse_token(t) for t in toks])
    return LabeledMatrix(kind, rows, cols, data)


def format_subspace(L: Subspace) -> str:
    return format_matrix(L.as_matrix())


def parse_subspace(text: str) -> Subspace:
    A = parse_matrix(text)
    return Subspace.span(A.kind, A.cols, A.data)


# -- set systems ----------------------------------------------------------------

def format_setsystem(M: SetSystem) -> str:
    lines = [f"setsystem {M.n}", " ".join(M.ground.labels)]
    lines += [format_subset(s) for s in M.members()]
    return "\n".join(lines) + "\n"


def parse_setsystem(text: str) -> SetSystem:
    lines = _lines(text)
    if not lines:
        raise ParseError("empty set-system input")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "setsystem":
        raise ParseError("header must be 'setsystem <n>'")
    n = _int(head[1], "ground set size")
    if len(lines) < 2 and n:
        raise ParseError("missing label line")
    ground = _labels(lines[1] if len(lines) > 1 else "", n, "ground")
    f = 0
    for line in lines[2:]:
        if not line.strip():
            raise ParseError("blank line inside family; use '-' for the empty set")
        bit = 1 << parse_subset(line, ground)
        if f & bit:
            raise ParseError(f"duplicate member {line.strip()!r}")
        f |= bit
    return SetSystem(ground, f)


# -- words ------------------------------------------------------------------------

def format_word(word: FlipWord) -> str:
    return str(word)


def parse_word(text: str) -> FlipWord:
    return FlipWord.parse(text)


# -- files ------------------------------------------------------------------------

def read_matrix(path: PathLike) -> LabeledMatrix:
    return parse_matrix(Path(path).read_text())


def read_setsystem(path: PathLike) -> SetSystem:
    return parse_setsystem(Path(path).read_text())


def write_text(path: PathLike, text: str) -> None:
    Path(path).write_text(text)
