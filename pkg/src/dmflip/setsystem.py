"""Set systems and the vertex-flip calculus.

A set system over a ground set of ``n`` labels is stored as its
characteristic integer: bit ``i`` is set iff the subset with bitmask ``i``
is a member.  Twist and loop complementation on one element are then a
handful of shifts and masks, which keeps orbit searches cheap.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

from .errors import ParseError, StructuralError
from .matrix import GroundSet, LabelsLike

TWIST, LOOPC, DUALP = "*", "+", "d"
OPS = (TWIST, LOOPC, DUALP)


@functools.lru_cache(maxsize=None)
def _low_mask(u: int, n: int) -> int:
    """Indicator of all subset masks (of an n-set) that do not contain element u."""
    b = 1 << u
    block = (1 << b) - 1
    out = 0
    for k in range(0, 1 << n, 2 * b):
        out |= block << k
    return out


def twist_bits(f: int, u: int, n: int) -> int:
    lo, b = _low_mask(u, n), 1 << u
    return ((f & lo) << b) | ((f >> b) & lo)


def loopc_bits(f: int, u: int, n: int) -> int:
    lo, b = _low_mask(u, n), 1 << u
    return f ^ ((f & lo) << b)


def dualp_bits(f: int, u: int, n: int) -> int:
    return loopc_bits(twist_bits(loopc_bits(f, u, n), u, n), u, n)


_BIT_OPS = {TWIST: twist_bits, LOOPC: loopc_bits, DUALP: dualp_bits}


def _popcount(x: int) -> int:
    return bin(x).count("1")


@dataclass(frozen=True, eq=False)
class SetSystem:
    """A ground set together with a duplicate-free family of its subsets."""

    ground: GroundSet
    indicator: int = 0

    def __post_init__(self):
        if self.indicator < 0 or self.indicator >> (1 << len(self.ground)):
            raise StructuralError("family contains sets outside the ground set")

    @classmethod
    def from_sets(cls, ground, sets: Iterable[LabelsLike]) -> "SetSystem":
        if not isinstance(ground, GroundSet):
            ground = GroundSet(tuple(ground))
        f = 0
        for s in sets:
            f |= 1 << ground.mask(s)
        return cls(ground, f)

    @classmethod
    def from_masks(cls, ground: GroundSet, masks: Iterable[int]) -> "SetSystem":
        f = 0
        for m in masks:
            f |= 1 << ground.mask(m)
        return cls(ground, f)

    @property
    def n(self) -> int:
        return len(self.ground)

    def masks(self) -> List[int]:
        f, out, i = self.indicator, [], 0
        while f:
            if f & 1:
                out.append(i)
            f >>= 1
            i += 1
        return out

    def members(self) -> List[Tuple[str, ...]]:
        return [self.ground.subset(m) for m in self.masks()]

    def as_frozensets(self) -> frozenset:
        return frozenset(frozenset(s) for s in self.members())

    def __len__(self) -> int:
        return _popcount(self.indicator)

    def __iter__(self) -> Iterator[Tuple[str, ...]]:
        return iter(self.members())

    def __contains__(self, subset: LabelsLike) -> bool:
        return bool((self.indicator >> self.ground.mask(subset)) & 1)

    def has_mask(self, mask: int) -> bool:
        return bool((self.indicator >> mask) & 1)

    @property
    def proper(self) -> bool:
        return self.indicator != 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SetSystem):
            return NotImplemented
        if self.ground == other.ground:
            return self.indicator == other.indicator
        return self.ground.same_elements(other.ground) and self.as_frozensets() == other.as_frozensets()

    def __hash__(self) -> int:
        return hash((frozenset(self.ground.labels), self.as_frozensets()))

    def __repr__(self) -> str:
        fam = ", ".join("{" + ",".join(s) + "}" for s in self.members())
        return f"SetSystem({self.ground.labels}, [{fam}])"

    def _bits_op(self, op: str, label) -> "SetSystem":
        u = self.ground.index(label) if isinstance(label, str) else label
        return SetSystem(self.ground, _BIT_OPS[op](self.indicator, u, self.n))

    # -- flips ----------------------------------------------------------

    def twist(self, subset: LabelsLike) -> "SetSystem":
        """``M * X``: every member ``Y`` becomes ``Y ^ X``."""
        x = self.ground.mask(subset)
        f = self.indicator
        for u in self.ground.positions(x):
            f = twist_bits(f, u, self.n)
        return SetSystem(self.ground, f)

    def loop_complement(self, label: str) -> "SetSystem":
        return self._bits_op(LOOPC, label)

    def dual_pivot(self, label: str) -> "SetSystem":
        return self._bits_op(DUALP, label)

    def apply_bulk(self, op: str, subset: LabelsLike) -> "SetSystem":
        if op not in _BIT_OPS:
            raise StructuralError(f"unknown flip {op!r}")
        f = self.indicator
        for u in self.ground.positions(self.ground.mask(subset)):
            f = _BIT_OPS[op](f, u, self.n)
        return SetSystem(self.ground, f)

    def apply_word(self, word: "FlipWord") -> "SetSystem":
        f = self.indicator
        for op, label in word:
            f = _BIT_OPS[op](f, self.ground.index(label), self.n)
        return SetSystem(self.ground, f)

    def apply_normal_form(self, nf: "FlipNormalForm") -> "SetSystem":
        return (self.apply_bulk(LOOPC, nf.z1_labels)
                .apply_bulk(TWIST, nf.z2_labels)
                .apply_bulk(LOOPC, nf.z3_labels))

    def max_sets(self) -> "SetSystem":
        """Members that are maximal under inclusion."""
        ms = self.masks()
        keep = [m for m in ms if not any(s != m and s & m == m for s in ms)]
        return SetSystem.from_masks(self.ground, keep)


# Functional aliases -------------------------------------------------------

def twist(M: SetSystem, X: LabelsLike) -> SetSystem:
    return M.twist(X)


def loop_complement(M: SetSystem, u: str) -> SetSystem:
    return M.loop_complement(u)


def dual_pivot(M: SetSystem, u: str) -> SetSystem:
    return M.dual_pivot(u)


def apply_bulk(M: SetSystem, op: str, X: LabelsLike) -> SetSystem:
    return M.apply_bulk(op, X)


def apply_word(M: SetSystem, word: "FlipWord") -> SetSystem:
    return M.apply_word(word)


def max_sets(M: SetSystem) -> SetSystem:
    return M.max_sets()


# Direct membership rules for flips on the whole ground set; used as oracles.

def twist_all_explicit(M: SetSystem) -> SetSystem:
    full = M.ground.full_mask
    return SetSystem.from_masks(M.ground, [x for x in range(full + 1) if M.has_mask(full & ~x)])


def loop_complement_all_explicit(M: SetSystem) -> SetSystem:
    ms = M.masks()
    keep = [x for x in range(M.ground.full_mask + 1) if sum(1 for z in ms if z & x == z) % 2]
    return SetSystem.from_masks(M.ground, keep)


def dual_pivot_all_explicit(M: SetSystem) -> SetSystem:
    ms = M.masks()
    keep = [x for x in range(M.ground.full_mask + 1) if sum(1 for z in ms if z & x == x) % 2]
    return SetSystem.from_masks(M.ground, keep)


# Flip words ---------------------------------------------------------------

@dataclass(frozen=True)
class FlipWord:
    """Sequence of single-element flips, applied left to right."""

    letters: Tuple[Tuple[str, str], ...] = ()

    def __post_init__(self):
        letters = tuple((op, lab) for op, lab in self.letters)
        for op, lab in letters:
            if op not in OPS:
                raise StructuralError(f"unknown flip {op!r}")
            if not lab:
                raise StructuralError("flip without an element")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def parse(cls, text: str) -> "FlipWord":
        """Whitespace-separated tokens ``*u``, ``+u`` and ``du`` (``∂u`` also accepted)."""
        letters = []
        for tok in text.split():
            op, lab = tok[0], tok[1:]
            if op == "∂":
                op = DUALP
            if op not in OPS or not lab:
                raise ParseError(f"bad flip token {tok!r}")
            letters.append((op, lab))
        return cls(tuple(letters))

    @classmethod
    def bulk(cls, op: str, labels: Iterable[str]) -> "FlipWord":
        return cls(tuple((op, lab) for lab in labels))

    def __iter__(self):
        return iter(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __add__(self, other: "FlipWord") -> "FlipWord":
        return FlipWord(self.letters + other.letters)

    def labels(self) -> List[str]:
        seen: Dict[str, None] = {}
        for _, lab in self.letters:
            seen.setdefault(lab)
        return list(seen)

    def __str__(self) -> str:
        return " ".join(op + lab for op, lab in self.letters)


# The group generated by *u and +u acts faithfully on the three nonempty
# families over {u}: 0 = {∅}, 1 = {{u}}, 2 = {∅,{u}}.  *u swaps 0,1 and
# +u swaps 0,2.  A vertex flip is tracked as the permutation it induces.
_GEN_PERM = {TWIST: (1, 0, 2), LOOPC: (2, 1, 0)}


def _then(p: Tuple[int, ...], op: str) -> Tuple[int, ...]:
    if op == DUALP:
        for g in (LOOPC, TWIST, LOOPC):
            p = _then(p, g)
        return p
    g = _GEN_PERM[op]
    return tuple(g[x] for x in p)


# canonical spellings +Z1 *Z2 +Z3 restricted to one element, with Z1 ⊆ Z2
_CANONICAL = {
    (0, 0, 0): (),
    (0, 0, 1): (LOOPC,),
    (0, 1, 0): (TWIST,),
    (0, 1, 1): (TWIST, LOOPC),
    (1, 1, 0): (LOOPC, TWIST),
    (1, 1, 1): (LOOPC, TWIST, LOOPC),
}


def _perm_of(ops: Sequence[str]) -> Tuple[int, ...]:
    p = (0, 1, 2)
    for op in ops:
        p = _then(p, op)
    return p


S3_TAGS: Tuple[Tuple[int, ...], ...] = tuple(_perm_of(spelling) for spelling in _CANONICAL.values())
# MULT[tag][op] = tag after applying generator op
MULT: Tuple[Dict[str, int], ...] = tuple(
    {op: S3_TAGS.index(_then(p, op)) for op in (TWIST, LOOPC)} for p in S3_TAGS
)
_DECODE: Tuple[Tuple[int, int, int], ...] = tuple(_CANONICAL)
assert len(set(S3_TAGS)) == 6


@dataclass(frozen=True)
class FlipNormalForm:
    """``+Z1 *Z2 +Z3`` with ``Z1 ⊆ Z2``."""

    ground: GroundSet
    z1: int
    z2: int
    z3: int

    def __post_init__(self):
        if self.z1 & ~self.z2:
            raise StructuralError("normal form requires Z1 ⊆ Z2")

    @property
    def z1_labels(self) -> Tuple[str, ...]:
        return self.ground.subset(self.z1)

    @property
    def z2_labels(self) -> Tuple[str, ...]:
        return self.ground.subset(self.z2)

    @property
    def z3_labels(self) -> Tuple[str, ...]:
        return self.ground.subset(self.z3)

    def as_word(self) -> FlipWord:
        return (FlipWord.bulk(LOOPC, self.z1_labels) + FlipWord.bulk(TWIST, self.z2_labels)
                + FlipWord.bulk(LOOPC, self.z3_labels))

    def __str__(self) -> str:
        def fmt(labels):
            return ",".join(labels) if labels else "-"
        return f"Z1={fmt(self.z1_labels)} Z2={fmt(self.z2_labels)} Z3={fmt(self.z3_labels)}"


def normalize_word(word: FlipWord, ground: GroundSet = None) -> FlipNormalForm:
    """Reduce a flip word to ``+Z1 *Z2 +Z3`` by tracking each element's S3 tag."""
    if ground is None:
        ground = GroundSet(tuple(word.labels()))
    tags = [0] * len(ground)
    for op, lab in word:
        u = ground.index(lab)
        if op == DUALP:
            for g in (LOOPC, TWIST, LOOPC):
                tags[u] = MULT[tags[u]][g]
        else:
            tags[u] = MULT[tags[u]][op]
    z = [0, 0, 0]
    for u, t in enumerate(tags):
        for k, bit in enumerate(_DECODE[t]):
            if bit:
                z[k] |= 1 << u
    return FlipNormalForm(ground, *z)


def all_set_systems(ground: GroundSet) -> Iterator[SetSystem]:
    """Every family of subsets of ``ground`` (2**2**n of them)."""
    for f in range(1 << (1 << len(ground))):
        yield SetSystem(ground, f)
